mod common;

use common::{cyclo, cyclo_in, small_rat};
use num_integer::Integer;
use proptest::prelude::*;
use riordan_core::exactnum::{Cyclo, Rat};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in cyclo(), y in cyclo(), z in cyclo()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn complex_image_is_multiplicative(x in cyclo(), y in cyclo()) {
        let lhs = (&x * &y).to_complex();
        let rhs = x.to_complex() * y.to_complex();
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        let sum = (&x + &y).to_complex();
        prop_assert!((sum - (x.to_complex() + y.to_complex())).norm() < 1e-9 * (1.0 + sum.norm()));
    }

    #[test]
    fn representatives_are_canonical(
        n in prop::sample::select(vec![3usize, 4, 5, 6, 8, 12]),
        raw in prop::collection::vec(small_rat(), 12),
        extra in prop::collection::vec(small_rat(), 4),
    ) {
        let raw = &raw[..n];
        // raw + (x^n - 1)·extra
        let mut shifted: Vec<Rat> = raw.to_vec();
        shifted.resize(n + extra.len(), Rat::from_integer(0.into()));
        for (i, e) in extra.iter().enumerate() {
            shifted[i] -= e;
            shifted[i + n] += e;
        }
        prop_assert_eq!(Cyclo::new(n, raw).unwrap(), Cyclo::new(n, &shifted).unwrap());
    }

    #[test]
    fn embedding_keeps_the_value(x in cyclo_in(6)) {
        let e = x.embed(12).unwrap();
        prop_assert_eq!(&e, &x);
        prop_assert!((e.to_complex() - x.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn conjugation_is_an_automorphism(x in cyclo(), y in cyclo()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert!((&x * &x.conj()).is_real());
    }
}

#[test]
fn root_of_unity_orders() {
    for n in 1..=64usize {
        for j in 1..=n {
            let z = Cyclo::zeta(n, j as i64).unwrap();
            assert_eq!(z.root_of_unity_order(), Some(n / n.gcd(&j)), "ζ_{n}^{j}");
        }
    }
    assert_eq!(Cyclo::from_int(2).root_of_unity_order(), None);
}
