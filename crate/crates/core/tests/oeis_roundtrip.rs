use pandigital::oeis::{compare, parse_bfile, BfileSeq};
use pandigital::BigUint;
use proptest::prelude::*;

proptest! {
    #[test]
    fn serialize_parse_round_trip(start in -50i64..50, values in proptest::collection::vec(any::<u64>(), 1..40)) {
        let seq = BfileSeq {
            sequence_id: "A000000".into(),
            entries: values.iter().enumerate().map(|(i, &v)| (start + i as i64, BigUint::from(v))).collect(),
        };
        prop_assert_eq!(parse_bfile(&seq.serialize(), "A000000").unwrap(), seq);
    }

    #[test]
    fn compare_is_symmetric(a in proptest::collection::vec(0u8..3, 1..20), b in proptest::collection::vec(0u8..3, 1..20)) {
        let to_seq = |v: &[u8]| BfileSeq {
            sequence_id: "A".into(),
            entries: v.iter().enumerate().map(|(i, &x)| (i as i64, BigUint::from(x))).collect(),
        };
        let (sa, sb) = (to_seq(&a), to_seq(&b));
        let ab = compare(&sa.entries, &sb).unwrap();
        let ba = compare(&sb.entries, &sa).unwrap();
        prop_assert_eq!(ab.mismatched_indices(), ba.mismatched_indices());
        prop_assert_eq!(ab.matched, ba.matched);
    }
}
