mod common;

use common::{poly_spec, q, scaled_root};
use proptest::prelude::*;
use riordan_core::circulant::{circulant_of, matrix_period, pk_poly, CircMat};
use riordan_core::exactnum::Cyclo;
use riordan_core::riordan::PolySpec;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn powers_stay_circulant(p in poly_spec(3, 4), k in 0u64..7) {
        prop_assert!(circulant_of(&p).pow(k).is_circulant(0.0));
    }

    #[test]
    fn eigenvectors(p in poly_spec(4, 6)) {
        let v = circulant_of(&p);
        let n = v.dim();
        for (idx, lambda) in v.eigenvalues().iter().enumerate() {
            let l = idx + 1;
            let vec: Vec<Cyclo> = (0..n).map(|j| Cyclo::zeta(n, (l * j) as i64).unwrap()).collect();
            let lhs = v.apply(&vec);
            let rhs: Vec<Cyclo> = vec.iter().map(|x| x * lambda).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn determinant_is_product_of_eigenvalues(p in poly_spec(1, 4)) {
        let v = circulant_of(&p);
        let prod = v.eigenvalues().iter().fold(Cyclo::one(), |acc, l| &acc * l);
        prop_assert_eq!(v.det(), prod);
    }

    #[test]
    fn block_polynomials_at_one(p in poly_spec(3, 3)) {
        let s = p.coeff_sum();
        for k in 0..=20u64 {
            prop_assert_eq!(pk_poly(&p, k).eval(&Cyclo::one()), s.pow(k + 1));
        }
    }

    #[test]
    fn period_is_minimal(
        a in scaled_root(vec![4, 6, 12]).prop_filter("nonzero", |x| !x.is_zero()),
        shape in prop::sample::select(vec![vec![1i64, -1], vec![1, -2, -2], vec![1, 1], vec![2, -2, -2, -2]]),
    ) {
        // rescale so the spectrum has a chance to sit on the unit circle
        let coeffs: Vec<Cyclo> = shape.iter().map(|&c| &a * &q(c, 1)).collect();
        let p = PolySpec::new(coeffs).unwrap();
        let v = circulant_of(&p);
        if let Ok(info) = matrix_period(&v, 200, 0.0) {
            check_minimal(&v, info.preperiod, info.period);
        }
    }
}

fn check_minimal(v: &CircMat<Cyclo>, k: usize, mu: usize) {
    let powers: Vec<CircMat<Cyclo>> = (0..=k + mu).map(|i| v.pow(i as u64)).collect();
    assert_eq!(powers[k + mu], powers[k]);
    for kk in 0..=k {
        for m in 1..=mu {
            if (kk, m) == (k, mu) || kk + m > k + mu {
                continue;
            }
            assert_ne!(powers[kk + m], powers[kk], "(k, μ) = ({kk}, {m}) should fail");
        }
    }
}

/// Matrices known to cycle, checked exhaustively.
#[test]
fn known_periods_are_minimal() {
    let mut cases: Vec<(Vec<Cyclo>, usize, usize)> = vec![
        (vec![q(1, 2), q(-1, 2)], 1, 2),
        (vec![q(1, 3), q(-2, 3), q(-2, 3)], 0, 6),
        (vec![q(2, 4), q(-2, 4), q(-2, 4), q(-2, 4)], 0, 4),
    ];
    let xi = Cyclo::zeta(3, 1).unwrap();
    let a = (&q(3, 1) * &xi).inv().unwrap();
    cases.push((vec![a.clone(), &a * &(&xi * &xi), &a * &xi], 1, 1));
    for (c, k, mu) in cases {
        let v = circulant_of(&PolySpec::new(c).unwrap());
        let info = matrix_period(&v, 500, 0.0).unwrap();
        assert_eq!((info.preperiod, info.period), (k, mu));
        check_minimal(&v, k, mu);
    }
}
