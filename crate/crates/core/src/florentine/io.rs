use super::{Construction, FlorentineRect};
use crate::error::{Error, Result};

/// Reads a rectangle from its JSON form or from a whitespace-separated grid.
///
/// Grid input skips blank lines and lines starting with `#`; the order is
/// the length of the first row and the construction is `handmade`.
pub fn parse_rect(input: &str) -> Result<FlorentineRect> {
    if input.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(input)?);
    }
    let mut rows = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let token = &tail[..len];
            let value = token.parse::<usize>().map_err(|_| Error::Parse {
                line: idx + 1,
                column: offset + start + 1,
                message: format!("expected a non-negative integer, found {token:?}"),
            })?;
            row.push(value);
            offset += start + len;
            rest = &tail[len..];
        }
        rows.push((idx + 1, row));
    }
    let Some((_, first)) = rows.first() else {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no rows".into(),
        });
    };
    let n = first.len();
    if let Some((line, row)) = rows.iter().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse {
            line: *line,
            column: 1,
            message: format!("row has {} entries, expected {n}", row.len()),
        });
    }
    FlorentineRect::new(
        n,
        rows.into_iter().map(|(_, r)| r).collect(),
        Construction::Handmade,
        n,
    )
}
