mod common;

use common::{CODE_2, CODE_3, PERMS_10};
use florentine_qcss::florentine::{best_florentine, Construction};
use florentine_qcss::seqgen::{build_ccc, build_qcss};

#[test]
fn order_ten_family_matches_reference() {
    let (rect, family) = best_florentine(10).unwrap();
    assert_eq!(rect.construction(), Construction::PrimeVatican);
    assert_eq!(rect.source_modulus(), 11);
    assert_eq!(family.f_value(), 10);
    for (k, expected) in PERMS_10.iter().enumerate() {
        assert_eq!(
            family.perm(k).unwrap(),
            expected.as_slice(),
            "permutation {k}"
        );
    }
}

fn assert_code(k: usize, table: &[[&str; 10]; 10]) {
    let (_, family) = best_florentine(10).unwrap();
    let code = build_ccc(&family, k).unwrap();
    assert_eq!(code.sets.len(), 10);
    for (m, set) in code.sets.iter().enumerate() {
        assert_eq!(set.m, m);
        let rendered: Vec<String> = set.render().lines().map(str::to_owned).collect();
        assert_eq!(rendered, table[m], "code {k}, set {m}");
    }
}

#[test]
fn code_two_digit_strings() {
    assert_code(2, &CODE_2);
}

#[test]
fn code_three_digit_strings() {
    assert_code(3, &CODE_3);
}

#[test]
fn merged_collection_is_code_major() {
    let (_, family) = best_florentine(10).unwrap();
    let q = build_qcss(&family);
    assert_eq!(q.params(), (100, 10, 10));
    let order: Vec<(usize, usize)> = q.sets.iter().map(|s| (s.k, s.m)).collect();
    let expected: Vec<(usize, usize)> =
        (0..10).flat_map(|k| (0..10).map(move |m| (k, m))).collect();
    assert_eq!(order, expected);
    let set = &q.sets[2 * 10 + 1];
    assert_eq!(set.render().lines().nth(1), Some(CODE_2[1][1]));
}
