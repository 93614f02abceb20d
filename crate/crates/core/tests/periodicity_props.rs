mod common;

use common::cyclo_in;
use proptest::prelude::*;
use riordan_core::exactnum::Cyclo;
use riordan_core::periodicity::{detect_eventual_period, gf_from_periodic, periodic_from_gf, EventualPeriod};
use riordan_core::series::fps_expand_rational;

fn spec() -> impl Strategy<Value = EventualPeriod<Cyclo>> {
    (
        prop::collection::vec(cyclo_in(6), 0..=6),
        prop::collection::vec(cyclo_in(6), 1..=8),
    )
        .prop_map(|(prefix, block)| EventualPeriod::new(prefix, block).unwrap())
}

/// `s_{i+n} = s_i` for all `k ≤ i < len - n`.
fn holds(seq: &[Cyclo], k: usize, n: usize) -> bool {
    (k..seq.len() - n).all(|i| seq[i] == seq[i + n])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generating_function_round_trip(ep in spec()) {
        let (numer, denom) = gf_from_periodic(&ep);
        prop_assert_eq!(denom.degree(), Some(ep.period));
        let back = periodic_from_gf(&numer, ep.period).unwrap();
        prop_assert_eq!(back, ep.minimized(0.0));
    }

    #[test]
    fn detection_round_trip(ep in spec()) {
        let (numer, denom) = gf_from_periodic(&ep);
        let len = ep.preperiod + 3 * ep.period + 8;
        let seq = fps_expand_rational(&numer, &denom, len).unwrap();
        prop_assert_eq!(seq.coeffs(), &ep.expand(len)[..]);
        let found = detect_eventual_period(seq.coeffs(), 0.0).unwrap();
        prop_assert_eq!(found, ep.minimized(0.0));
    }

    #[test]
    fn detected_pairs_are_minimal(ep in spec()) {
        let len = ep.preperiod + 3 * ep.period + 8;
        let seq = ep.expand(len);
        let found = detect_eventual_period(&seq, 0.0).unwrap();
        let (k, n) = (found.preperiod, found.period);
        prop_assert!(holds(&seq, k, n));
        for m in 1..n {
            prop_assert!(!holds(&seq, k, m));
        }
        if k > 0 {
            prop_assert!(!holds(&seq, k - 1, n));
        }
    }
}
