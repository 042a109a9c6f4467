mod common;

use pandigital::search::{candidate_stream, CandidateStream};
use pandigital::Family;

#[test]
fn stream_equals_filter() {
    for base in 3..=6u32 {
        for family in Family::ALL {
            let required = family.required_len(base).unwrap() as u32;
            for k in required..=6 {
                let got: Vec<u128> = candidate_stream::<u128>(base, family, k as usize).unwrap().collect();
                let want = common::loose_members_of_length(base, family, k);
                assert_eq!(got, want, "b={base} {family} k={k}");
            }
        }
    }
}

#[test]
fn pruning_drops_only_composites() {
    for base in 3..=8u32 {
        for family in Family::ALL {
            let required = family.required_len(base).unwrap();
            for k in required..=6 {
                let all: Vec<u128> = candidate_stream::<u128>(base, family, k).unwrap().collect();
                let kept: Vec<u128> = CandidateStream::<u128>::pruned(base, family, k).unwrap().collect();
                let want: Vec<u128> = all.iter().copied().filter(|&n| common::trial_division_is_prime(n)).collect();
                let got: Vec<u128> = kept.iter().copied().filter(|&n| common::trial_division_is_prime(n)).collect();
                assert_eq!(got, want, "b={base} {family} k={k}");
                assert!(kept.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}
