//! Reference data for the order-10 family and two of its codes.

#![allow(dead_code)]

pub const PERMS_10: [[usize; 10]; 10] = [
    [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
    [1, 3, 5, 7, 9, 0, 2, 4, 6, 8],
    [2, 5, 8, 0, 3, 6, 9, 1, 4, 7],
    [3, 7, 0, 4, 8, 1, 5, 9, 2, 6],
    [4, 9, 3, 8, 2, 7, 1, 6, 0, 5],
    [5, 0, 6, 1, 7, 2, 8, 3, 9, 4],
    [6, 2, 9, 5, 1, 8, 4, 0, 7, 3],
    [7, 4, 1, 9, 6, 3, 0, 8, 5, 2],
    [8, 6, 4, 2, 0, 9, 7, 5, 3, 1],
    [9, 8, 7, 6, 5, 4, 3, 2, 1, 0],
];

/// Rows `s = 0..10` of each set `m = 0..10`, as base-10 digit strings.
pub const CODE_2: [[&str; 10]; 10] = [
    [
        "0000000000",
        "2580369147",
        "4060628284",
        "6540987321",
        "8020246468",
        "0500505505",
        "2080864642",
        "4560123789",
        "6040482826",
        "8520741963",
    ],
    [
        "0123456789",
        "2603715826",
        "4183074963",
        "6663333000",
        "8143692147",
        "0623951284",
        "2103210321",
        "4683579468",
        "6163838505",
        "8643197642",
    ],
    [
        "0246802468",
        "2726161505",
        "4206420642",
        "6786789789",
        "8266048826",
        "0746307963",
        "2226666000",
        "4706925147",
        "6286284284",
        "8766543321",
    ],
    [
        "0369258147",
        "2849517284",
        "4329876321",
        "6809135468",
        "8389494505",
        "0869753642",
        "2349012789",
        "4829371826",
        "6309630963",
        "8889999000",
    ],
    [
        "0482604826",
        "2962963963",
        "4442222000",
        "6922581147",
        "8402840284",
        "0982109321",
        "2462468468",
        "4942727505",
        "6422086642",
        "8902345789",
    ],
    [
        "0505050505",
        "2085319642",
        "4565678789",
        "6045937826",
        "8525296963",
        "0005555000",
        "2585814147",
        "4065173284",
        "6545432321",
        "8025791468",
    ],
    [
        "0628406284",
        "2108765321",
        "4688024468",
        "6168383505",
        "8648642642",
        "0128901789",
        "2608260826",
        "4188529963",
        "6668888000",
        "8148147147",
    ],
    [
        "0741852963",
        "2221111000",
        "4701470147",
        "6281739284",
        "8761098321",
        "0241357468",
        "2721616505",
        "4201975642",
        "6781234789",
        "8261593826",
    ],
    [
        "0864208642",
        "2344567789",
        "4824826826",
        "6304185963",
        "8884444000",
        "0364703147",
        "2844062284",
        "4324321321",
        "6804680468",
        "8384949505",
    ],
    [
        "0987654321",
        "2467913468",
        "4947272505",
        "6427531642",
        "8907890789",
        "0487159826",
        "2967418963",
        "4447777000",
        "6927036147",
        "8407395284",
    ],
];

/// Rows `s = 0..10` of each set `m = 0..10`, as base-10 digit strings.
pub const CODE_3: [[&str; 10]; 10] = [
    [
        "0000000000",
        "3704815926",
        "6408620842",
        "9102435768",
        "2806240684",
        "5500055500",
        "8204860426",
        "1908675342",
        "4602480268",
        "7306295184",
    ],
    [
        "0123456789",
        "3827261605",
        "6521076521",
        "9225881447",
        "2929696363",
        "5623401289",
        "8327216105",
        "1021021021",
        "4725836947",
        "7429641863",
    ],
    [
        "0246802468",
        "3940617384",
        "6644422200",
        "9348237126",
        "2042042042",
        "5746857968",
        "8440662884",
        "1144477700",
        "4848282626",
        "7542097542",
    ],
    [
        "0369258147",
        "3063063063",
        "6767878989",
        "9461683805",
        "2165498721",
        "5869203647",
        "8563018563",
        "1267823489",
        "4961638305",
        "7665443221",
    ],
    [
        "0482604826",
        "3186419742",
        "6880224668",
        "9584039584",
        "2288844400",
        "5982659326",
        "8686464242",
        "1380279168",
        "4084084084",
        "7788899900",
    ],
    [
        "0505050505",
        "3209865421",
        "6903670347",
        "9607485263",
        "2301290189",
        "5005005005",
        "8709810921",
        "1403625847",
        "4107430763",
        "7801245689",
    ],
    [
        "0628406284",
        "3322211100",
        "6026026026",
        "9720831942",
        "2424646868",
        "5128451784",
        "8822266600",
        "1526071526",
        "4220886442",
        "7924691368",
    ],
    [
        "0741852963",
        "3445667889",
        "6149472705",
        "9843287621",
        "2547092547",
        "5241807463",
        "8945612389",
        "1649427205",
        "4343232121",
        "7047047047",
    ],
    [
        "0864208642",
        "3568013568",
        "6262828484",
        "9966633300",
        "2660448226",
        "5364253142",
        "8068068068",
        "1762873984",
        "4466688800",
        "7160493726",
    ],
    [
        "0987654321",
        "3681469247",
        "6385274163",
        "9089089089",
        "2783894905",
        "5487609821",
        "8181414747",
        "1885229663",
        "4589034589",
        "7283849405",
    ],
];

// Brute-force oracles. They share no code with the library.

use std::collections::HashSet;
use std::f64::consts::TAU;

use num_complex::Complex64;

/// Every ordered pair at every displacement `1..=k` occurs at most once
/// across the whole rectangle.
pub fn tuscan_oracle(rows: &[Vec<usize>], n: usize, k: usize) -> bool {
    for row in rows {
        let mut seen = vec![false; n];
        if row.len() != n
            || row
                .iter()
                .any(|&x| x >= n || std::mem::replace(&mut seen[x], true))
        {
            return false;
        }
    }
    for d in 1..=k.min(n.saturating_sub(1)) {
        let mut pairs = HashSet::new();
        for row in rows {
            for t in 0..n - d {
                if !pairs.insert((row[t], row[t + d])) {
                    return false;
                }
            }
        }
    }
    true
}

/// For distinct rows i and j and every shift, `pi_i(t) == pi_j(t + shift)`
/// holds for at most one `t`.
pub fn pair_uniqueness_oracle(perms: &[Vec<usize>]) -> bool {
    let n = perms.first().map_or(0, Vec::len);
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            if i == j {
                continue;
            }
            for shift in 0..n {
                let hits = (0..n - shift).filter(|&t| a[t] == b[t + shift]).count();
                if hits > 1 {
                    return false;
                }
            }
        }
    }
    true
}

/// Exponent of sequence `s` in set `m` generated by the permutation `pi`.
pub fn phase_oracle(pi: &[usize], m: usize, s: usize) -> Vec<u32> {
    let n = pi.len();
    (0..n).map(|t| ((s * pi[t] + m * t) % n) as u32).collect()
}

fn unit(e: u32, n: usize) -> Complex64 {
    Complex64::from_polar(1.0, TAU * e as f64 / n as f64)
}

/// Aperiodic correlation straight from the definition.
pub fn acf_oracle(c: &[u32], d: &[u32], tau: isize, n: usize) -> Complex64 {
    let len = c.len() as isize;
    let mut sum = Complex64::new(0.0, 0.0);
    for t in 0..len {
        let u = t + tau;
        if (0..len).contains(&u) {
            sum += unit(c[t as usize], n) * unit(d[u as usize], n).conj();
        }
    }
    sum
}

pub fn set_correlation_oracle(a: &[Vec<u32>], b: &[Vec<u32>], tau: isize, n: usize) -> Complex64 {
    a.iter().zip(b).map(|(c, d)| acf_oracle(c, d, tau, n)).sum()
}
