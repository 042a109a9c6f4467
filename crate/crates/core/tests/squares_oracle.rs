mod common;

use pandigital::squares::{enumerate_strict_squares, ScanOptions};
use pandigital::Family;

fn roots(base: u32, family: Family, short_circuit: bool) -> Vec<u128> {
    let options = ScanOptions {
        budget: None,
        short_circuit,
    };
    enumerate_strict_squares::<u128>(base, family, options).unwrap().roots
}

#[test]
fn residue_filter_matches_unfiltered_scan() {
    for base in 3..=11 {
        for family in Family::ALL {
            let expected = common::unfiltered_square_roots(base, family);
            assert_eq!(roots(base, family, true), expected, "b={base} {family}");
            assert_eq!(roots(base, family, false), expected, "b={base} {family}");
        }
    }
}

#[test]
fn base_ten_counts() {
    assert_eq!(roots(10, Family::Pandigital, true).len(), 87);
    assert_eq!(roots(10, Family::Penholodigital, true).len(), 30);
}

#[test]
fn u64_and_u128_agree() {
    for family in Family::ALL {
        let narrow = enumerate_strict_squares::<u64>(12, family, ScanOptions::default()).unwrap();
        let wide = enumerate_strict_squares::<u128>(12, family, ScanOptions::default()).unwrap();
        let narrow: Vec<u128> = narrow.roots.into_iter().map(u128::from).collect();
        assert_eq!(narrow, wide.roots);
    }
}
