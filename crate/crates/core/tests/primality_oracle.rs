mod common;

use pandigital::primality::{bpsw, is_prime, is_prime_u64, miller_rabin_u64, verify_witness};
use pandigital::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn agrees_with_sieve_below_one_million() {
    let sieve = common::sieve(1_000_000);
    for (n, &p) in sieve.iter().enumerate() {
        assert_eq!(is_prime_u64(n as u64).passes(), p, "n={n}");
    }
}

#[test]
fn bpsw_agrees_with_sieve_below_one_hundred_thousand() {
    let sieve = common::sieve(100_000);
    for (n, &p) in sieve.iter().enumerate() {
        assert_eq!(bpsw(&(n as u128)).is_none(), p, "n={n}");
        assert_eq!(is_prime(&BigUint::from(n)).passes(), p, "n={n}");
    }
}

#[test]
fn miller_rabin_and_bpsw_agree_on_random_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for _ in 0..20_000 {
        let n: u64 = rng.gen::<u64>() | 1;
        let mr = miller_rabin_u64(n);
        let w = bpsw(&(n as u128));
        assert_eq!(mr, w.is_none(), "n={n}");
        if let Some(w) = w {
            assert!(verify_witness(&BigUint::from(n), &w), "n={n}");
        }
    }
}

#[test]
fn big_composites_carry_checkable_witnesses() {
    let p = BigUint::from(18_446_744_073_709_551_557u64);
    let q = BigUint::from(18_446_744_073_709_551_533u64);
    let n = &p * &q;
    let v = is_prime(&n);
    assert!(!v.passes());
    assert!(verify_witness(&n, v.witness.as_ref().unwrap()));
    assert!(is_prime(&p).passes());
}
