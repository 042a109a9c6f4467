mod common;

use pandigital::digits::{self, RenderMode};
use pandigital::{BigUint, DigitClass, DigitString, Family};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn round_trip_u64(n in any::<u64>(), base in 2u32..=64) {
        let ds = digits::to_digits(&n, base).unwrap();
        prop_assert_eq!(ds.digits().to_vec(), common::digits_of(n as u128, base));
        prop_assert_eq!(digits::from_digits::<u64>(&ds).unwrap(), n);
    }

    #[test]
    fn round_trip_big(words in proptest::collection::vec(any::<u32>(), 1..8), base in 2u32..=200) {
        let n = BigUint::new(words);
        let ds = digits::to_digits(&n, base).unwrap();
        prop_assert_eq!(ds.value::<BigUint>().unwrap(), n);
    }

    #[test]
    fn render_parse_round_trip(n in any::<u128>(), base in 2u32..=100) {
        let ds = digits::to_digits(&n, base).unwrap();
        let text = ds.render();
        prop_assert_eq!(digits::parse(&text, base).unwrap(), ds.clone());
        let dotted = digits::render(&ds, RenderMode::Dotted).unwrap();
        prop_assert_eq!(digits::parse(&dotted, base).unwrap(), ds);
    }

    #[test]
    fn strict_implies_loose(n in any::<u64>(), base in 3u32..=12) {
        let ds = digits::to_digits(&n, base).unwrap();
        let labels = ds.classify();
        for f in Family::ALL {
            if labels.contains(&DigitClass::strict(f)) {
                prop_assert!(labels.contains(&DigitClass::loose(f)));
            }
            prop_assert_eq!(
                labels.contains(&DigitClass::loose(f)),
                common::is_loose_member(n as u128, base, f)
            );
            prop_assert_eq!(
                labels.contains(&DigitClass::strict(f)),
                common::is_strict_member(n as u128, base, f)
            );
        }
    }
}

#[test]
fn digit_sum_congruence_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100_000 {
        let n: u128 = rng.gen();
        let base: u32 = rng.gen_range(3..=1000);
        let ds = digits::to_digits(&n, base).unwrap();
        let m = (base - 1) as u128;
        assert_eq!(ds.digit_sum() as u128 % m, n % m, "n={n} b={base}");
    }
}

#[test]
fn leading_zero_rejected() {
    assert!(DigitString::new(10, vec![0, 1]).is_err());
    assert!(DigitString::new(10, vec![0]).is_ok());
    assert!(DigitString::new(10, vec![10]).is_err());
}
