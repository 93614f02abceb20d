mod common;

use common::{cyclo_in, q};
use proptest::prelude::*;
use riordan_core::exactnum::{ComplexF, Cyclo, Scalar};
use riordan_core::series::{coeff_of, fps_expand_rational, Fps, Poly};

fn poly(max_len: usize) -> impl Strategy<Value = Poly<Cyclo>> {
    prop::collection::vec(cyclo_in(3), 1..=max_len).prop_map(Poly::new)
}

fn unit_poly() -> impl Strategy<Value = Poly<Cyclo>> {
    poly(4).prop_filter("Q(0) ≠ 0", |p| !p.coeff(0).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_undoes_multiplication(p in poly(5), d in unit_poly()) {
        let n = 12;
        let a = fps_expand_rational(&p.mul(&d), &d, n).unwrap();
        let b = fps_expand_rational(&p, &Poly::one(), n).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn convolution_law(f in prop::collection::vec(cyclo_in(4), 8), g in prop::collection::vec(cyclo_in(4), 8)) {
        let (ff, gg) = (Fps::from_coeffs(f.clone()), Fps::from_coeffs(g.clone()));
        let prod = ff.mul(&gg);
        for n in 0..8 {
            let direct = (0..=n).fold(Cyclo::zero(), |acc, i| &acc + &(&f[i] * &g[n - i]));
            prop_assert_eq!(coeff_of(&prod, n).unwrap(), direct);
        }
        prop_assert!(coeff_of(&prod, 8).is_err());
    }

    #[test]
    fn float_mode_tracks_exact_mode(p in poly(4), d in unit_poly()) {
        let exact = fps_expand_rational(&p, &d, 30).unwrap();
        let pf = Poly::new(p.coeffs().iter().map(Scalar::to_complex).collect::<Vec<ComplexF>>());
        let df = Poly::new(d.coeffs().iter().map(Scalar::to_complex).collect::<Vec<ComplexF>>());
        let float = fps_expand_rational(&pf, &df, 30).unwrap();
        for (e, f) in exact.coeffs().iter().zip(float.coeffs()) {
            let ec = e.to_complex();
            prop_assert!((ec - f).norm() <= 1e-9 * (1.0 + ec.norm()));
        }
    }
}

/// The worked examples, 200 terms, both modes.
#[test]
fn examples_agree_across_modes() {
    let examples: Vec<(Poly<Cyclo>, Poly<Cyclo>)> = vec![
        (Poly::constant(q(1, 4)), Poly::new(vec![q(1, 1), q(1, 1)])),
        (Poly::new(vec![q(1, 9), q(2, 27)]), Poly::new(vec![q(1, 1), q(1, 1), q(1, 3)])),
        (Poly::one(), Poly::one_minus_power(3)),
        (Poly::new(vec![q(1, 2), q(-1, 2)]).pow(5), Poly::one_minus_power(2)),
    ];
    for (n, d) in examples {
        let exact = fps_expand_rational(&n, &d, 200).unwrap();
        let nf: Poly<ComplexF> = Poly::new(n.coeffs().iter().map(Scalar::to_complex).collect());
        let df: Poly<ComplexF> = Poly::new(d.coeffs().iter().map(Scalar::to_complex).collect());
        let float = fps_expand_rational(&nf, &df, 200).unwrap();
        for (e, f) in exact.coeffs().iter().zip(float.coeffs()) {
            assert!((e.to_complex() - f).norm() < 1e-9);
        }
    }
}
