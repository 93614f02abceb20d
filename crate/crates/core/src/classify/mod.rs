//! Deciders for which polynomials have eventually periodic column partial
//! sums: the linear case, the quadratic case and the degree-`d` family.
//!
//! The matrix period `μ` is measured, never supplied; the deciders then
//! check the root-of-unity conditions of each case. Closed-form predictors
//! are indexed from `k = 2`; `S_[1] = 0` always.

mod fmu;

pub use fmu::{f_mu, f_mu_integer_row, real_roots, real_roots_of, solve_a_quadc, FmuPoly, RealRoot};

use std::fmt;

use crate::circulant::{circulant_of, default_max_steps, matrix_period, PeriodInfo};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, DEFAULT_TOL};
use crate::riordan::PolySpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    Linear1,
    Linear2,
    Linear3,
    QuadA,
    QuadB1,
    QuadB2,
    QuadC,
    PropD,
    NonPeriodicV,
    PsumsNotPeriodic,
}

impl CaseTag {
    /// Whether the tag asserts eventually periodic partial sums.
    pub fn psums_periodic(self) -> bool {
        matches!(
            self,
            CaseTag::Linear2 | CaseTag::QuadA | CaseTag::QuadB1 | CaseTag::QuadB2 | CaseTag::QuadC | CaseTag::PropD
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Linear1 => "Linear1",
            CaseTag::Linear2 => "Linear2",
            CaseTag::Linear3 => "Linear3",
            CaseTag::QuadA => "QuadA",
            CaseTag::QuadB1 => "QuadB1",
            CaseTag::QuadB2 => "QuadB2",
            CaseTag::QuadC => "QuadC",
            CaseTag::PropD => "PropD",
            CaseTag::NonPeriodicV => "NonPeriodicV",
            CaseTag::PsumsNotPeriodic => "PsumsNotPeriodic",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Closed form for `S_[k]`, valid for `k ≥ 2`.
#[derive(Clone, Debug, PartialEq)]
pub enum Predictor<S> {
    /// `coeff · ratio^(k - shift)`
    Geometric { coeff: S, ratio: S, shift: u32 },
    /// `-(2/(3√3)) (-a√3)^k sin((k - 4)π/6)`
    Sine { a: S },
}

impl<S: Scalar> Predictor<S> {
    pub fn eval(&self, k: usize) -> S {
        if k < 2 {
            return S::zero();
        }
        match self {
            Predictor::Geometric { coeff, ratio, shift } => {
                coeff.times(&ratio.pow((k - *shift as usize) as u64))
            }
            Predictor::Sine { a } => {
                // -(2/3) (√3)^{k-1} (-a)^k sin((k-4)π/6), all inside Q(ζ_12)
                let sqrt3 = S::root_of_unity(12, 1).plus(&S::root_of_unity(12, -1));
                let m = k as i64 - 4;
                let two_i = S::root_of_unity(4, 1).times(&S::from_i64(2));
                let sin = S::root_of_unity(12, m)
                    .minus(&S::root_of_unity(12, -m))
                    .times(&two_i.recip().expect("nonzero"));
                S::from_rat(&crate::exactnum::rat(-2, 3))
                    .times(&sqrt3.pow(k as u64 - 1))
                    .times(&a.negated().pow(k as u64))
                    .times(&sin)
            }
        }
    }
}

/// Verdict of a decider.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification<S> {
    pub case_tag: CaseTag,
    /// Matrix period of `V`, when `V` is eventually periodic.
    pub mu: Option<usize>,
    pub matrix_preperiod: Option<usize>,
    pub predicted_period: Option<usize>,
    pub predictor: Option<Predictor<S>>,
    /// Named parameters, in a fixed order.
    pub parameters: Vec<(String, S)>,
    /// Set when the verdict rests on tolerance comparisons.
    pub float_verified: bool,
    pub note: Option<String>,
}

impl<S: Scalar> Classification<S> {
    fn new(case_tag: CaseTag, parameters: Vec<(String, S)>) -> Self {
        Classification {
            case_tag,
            mu: None,
            matrix_preperiod: None,
            predicted_period: None,
            predictor: None,
            parameters,
            float_verified: !S::EXACT,
            note: None,
        }
    }

    fn with_period(mut self, info: Option<PeriodInfo>) -> Self {
        if let Some(info) = info {
            self.mu = Some(info.period);
            self.matrix_preperiod = Some(info.preperiod);
        }
        self
    }

    pub fn psums_periodic(&self) -> bool {
        self.case_tag.psums_periodic()
    }

    pub fn parameter(&self, name: &str) -> Option<&S> {
        self.parameters.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

/// Closed-form `S_[k]`, if the classification carries one.
pub fn predict_psums<S: Scalar>(cls: &Classification<S>, k: usize) -> Option<S> {
    cls.predictor.as_ref().map(|p| p.eval(k))
}

fn named<S: Clone>(pairs: &[(&str, &S)]) -> Vec<(String, S)> {
    pairs.iter().map(|(n, v)| (n.to_string(), (*v).clone())).collect()
}

fn period_of<S: Scalar>(p: &PolySpec<S>, max_steps: usize, tol: f64) -> Option<PeriodInfo> {
    matrix_period(&circulant_of(p), max_steps, tol).ok()
}

/// Linear `a + bt`: eigenvalues `a + b` and `b - a`.
pub fn classify_linear<S: Scalar>(a: &S, b: &S) -> Result<Classification<S>> {
    classify_linear_tol(a, b, DEFAULT_TOL)
}

pub fn classify_linear_tol<S: Scalar>(a: &S, b: &S, tol: f64) -> Result<Classification<S>> {
    if a.is_zero_within(0.0) || b.is_zero_within(0.0) {
        return Err(Error::InvalidInput("linear case needs a·b ≠ 0".into()));
    }
    let params = named(&[("a", a), ("b", b)]);
    let p = PolySpec::new(vec![a.clone(), b.clone()])?;
    let Some(info) = period_of(&p, default_max_steps(2), tol) else {
        return Ok(Classification::new(CaseTag::NonPeriodicV, params));
    };
    let tag = if a.eq_within(b, tol) {
        CaseTag::Linear1
    } else if a.eq_within(&b.negated(), tol) {
        CaseTag::Linear2
    } else {
        CaseTag::Linear3
    };
    let mut cls = Classification::new(tag, params).with_period(Some(info));
    if tag == CaseTag::Linear2 {
        let ratio = a.times(&S::from_i64(-2));
        cls.predicted_period = ratio.unit_order(info.period.max(1), tol);
        cls.predictor = Some(Predictor::Geometric {
            coeff: a.times(a),
            ratio,
            shift: 2,
        });
    } else {
        cls.note = Some("partial sums are eventually periodic only when b = -a".into());
    }
    Ok(cls)
}

/// Quadratic `a + bt + ct²` with `λ₁ = a+b+c`, `λ₂ = aξ² + bξ + c`,
/// `λ₃ = aξ + bξ² + c`.
pub fn classify_quadratic<S: Scalar>(a: &S, b: &S, c: &S, mu_bound: usize) -> Result<Classification<S>> {
    classify_quadratic_tol(a, b, c, mu_bound, DEFAULT_TOL)
}

pub fn classify_quadratic_tol<S: Scalar>(
    a: &S,
    b: &S,
    c: &S,
    mu_bound: usize,
    tol: f64,
) -> Result<Classification<S>> {
    if a.is_zero_within(0.0) || c.is_zero_within(0.0) {
        return Err(Error::InvalidInput("quadratic case needs a·c ≠ 0".into()));
    }
    let p = PolySpec::new(vec![a.clone(), b.clone(), c.clone()])?;
    let eig = circulant_of(&p).eigenvalues();
    let (l1, l2, l3) = (&eig[2], &eig[0], &eig[1]);
    let (z1, z2, z3) = (l1.is_zero_within(tol), l2.is_zero_within(tol), l3.is_zero_within(tol));
    if z1 && z2 && z3 {
        return Err(Error::InternalInconsistency(
            "all three eigenvalues vanish although c ≠ 0".into(),
        ));
    }
    let mut params = named(&[("a", a), ("b", b), ("c", c)]);
    let Some(info) = period_of(&p, mu_bound + 1, tol) else {
        let mut cls = Classification::new(CaseTag::NonPeriodicV, params);
        cls.note = Some(format!("no matrix period found within {mu_bound} steps"));
        return Ok(cls);
    };
    let mu = info.period;
    let xi = S::root_of_unity(3, 1);
    let xi2 = S::root_of_unity(3, 2);
    let three_a = a.times(&S::from_i64(3));

    if !z1 {
        let minus_two_a = a.times(&S::from_i64(-2));
        let shape = b.eq_within(&minus_two_a, tol) && c.eq_within(&minus_two_a, tol);
        let unit = three_a.pow(mu as u64).eq_within(&S::one(), tol);
        let tag = if shape && unit && mu % 6 == 0 {
            CaseTag::QuadA
        } else {
            CaseTag::PsumsNotPeriodic
        };
        let mut cls = Classification::new(tag, params).with_period(Some(info));
        if tag == CaseTag::QuadA {
            cls.predicted_period = Some(mu);
        }
        return Ok(cls);
    }

    if z2 || z3 {
        let (tag, ratio, coeff) = if z2 {
            let r = three_a.times(&xi);
            let coeff = xi
                .minus(&S::one())
                .times(&S::from_i64(9).times(&xi).recip()?);
            (CaseTag::QuadB1, r, coeff)
        } else {
            let r = three_a.times(&xi2);
            let coeff = S::one().minus(&xi).times(&S::from_i64(9).recip()?);
            (CaseTag::QuadB2, r, coeff)
        };
        let ok = ratio.pow(mu as u64).eq_within(&S::one(), tol);
        let mut cls = Classification::new(if ok { tag } else { CaseTag::PsumsNotPeriodic }, params)
            .with_period(Some(info));
        if ok {
            cls.predicted_period = ratio.unit_order(mu, tol);
            cls.predictor = Some(Predictor::Geometric { coeff, ratio, shift: 0 });
        }
        return Ok(cls);
    }

    let r = b.times(&a.recip()?);
    params.push(("r".into(), r.clone()));
    let real = r.eq_within(&r.conj(), tol);
    let xm1 = xi.minus(&S::one());
    let e1 = xm1.times(a).times(&r.minus(&xi2)).pow(mu as u64);
    let e2 = xm1.times(a).times(&S::one().minus(&xi2.times(&r))).pow(mu as u64);
    let system = e1.eq_within(&S::one(), tol) && e2.eq_within(&S::one(), tol);
    if !(real && system) {
        return Ok(Classification::new(CaseTag::PsumsNotPeriodic, params).with_period(Some(info)));
    }
    let mut cls = Classification::new(CaseTag::QuadC, params).with_period(Some(info));
    cls.predicted_period = Some(mu);
    if r.is_zero_within(tol) {
        cls.predictor = Some(Predictor::Sine { a: a.clone() });
    }
    Ok(cls)
}

/// `a((d-1) - 2t - … - 2t^d)`
pub fn prop_d_poly<S: Scalar>(d: usize, a: &S) -> Result<PolySpec<S>> {
    let mut coeffs = vec![a.times(&S::from_i64(d as i64 - 1))];
    coeffs.extend((0..d).map(|_| a.times(&S::from_i64(-2))));
    PolySpec::new(coeffs)
}

/// The degree-`d` family with `k = ord((d+1)a)`; predicted partial-sum
/// period `lcm(k, d+1)` for odd `d`, `lcm(k, 2(d+1))` for even `d`.
pub fn prop_d_family<S: Scalar>(d: usize, a: &S) -> Result<Classification<S>> {
    prop_d_family_tol(d, a, DEFAULT_TOL)
}

pub fn prop_d_family_tol<S: Scalar>(d: usize, a: &S, tol: f64) -> Result<Classification<S>> {
    if d < 2 {
        return Err(Error::InvalidInput("degree-d family needs d ≥ 2".into()));
    }
    if a.is_zero_within(0.0) {
        return Err(Error::InvalidInput("a must be nonzero".into()));
    }
    let p = prop_d_poly(d, a)?;
    let params = named(&[("a", a), ("d", &S::from_i64(d as i64))]);
    let budget = default_max_steps(d + 1);
    let Some(k) = a.times(&S::from_i64(d as i64 + 1)).unit_order(budget, tol) else {
        return Ok(Classification::new(CaseTag::NonPeriodicV, params));
    };
    let base = if d % 2 == 1 { d + 1 } else { 2 * (d + 1) };
    let mut cls = Classification::new(CaseTag::PropD, params).with_period(period_of(&p, budget, tol));
    cls.predicted_period = Some(num_integer::lcm(k, base));
    Ok(cls)
}

/// Dispatch on degree: linear, quadratic, or the degree-`d` family.
pub fn classify<S: Scalar>(p: &PolySpec<S>, mu_bound: usize, tol: f64) -> Result<Classification<S>> {
    let c = p.coeffs();
    match p.degree() {
        0 => Err(Error::InvalidInput(
            "constant polynomials have identically zero partial sums; nothing to classify".into(),
        )),
        1 => classify_linear_tol(&c[0], &c[1], tol),
        2 => classify_quadratic_tol(&c[0], &c[1], &c[2], mu_bound, tol),
        d => {
            let a = c[0].times(&S::from_i64(d as i64 - 1).recip()?);
            let minus_two_a = a.times(&S::from_i64(-2));
            if c[1..].iter().all(|x| x.eq_within(&minus_two_a, tol)) {
                prop_d_family_tol(d, &a, tol)
            } else {
                Err(Error::InvalidInput(format!(
                    "degree {d} is classified only for the family a((d-1) - 2t - … - 2t^d)"
                )))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Cyclo};
    use crate::riordan::partial_sum_column;

    fn q(n: i64, d: i64) -> Cyclo {
        Cyclo::from_rat(&rat(n, d))
    }

    #[test]
    fn linear_cases() {
        let cls = classify_linear(&q(1, 2), &q(-1, 2)).unwrap();
        assert_eq!(cls.case_tag, CaseTag::Linear2);
        assert_eq!(cls.mu, Some(2));
        assert_eq!(predict_psums(&cls, 2), Some(q(1, 4)));
        assert_eq!(predict_psums(&cls, 3), Some(q(-1, 4)));

        let cls = classify_linear(&q(1, 2), &q(1, 2)).unwrap();
        assert_eq!((cls.case_tag, cls.mu), (CaseTag::Linear1, Some(1)));
        assert!(!cls.psums_periodic());

        let cls = classify_linear(&q(1, 1), &q(-1, 1)).unwrap();
        assert_eq!(cls.case_tag, CaseTag::NonPeriodicV);

        assert!(classify_linear(&q(1, 1), &q(0, 1)).is_err());
    }

    #[test]
    fn quadratic_cases() {
        let cls = classify_quadratic(&q(-1, 3), &q(2, 3), &q(2, 3), 100).unwrap();
        assert_eq!((cls.case_tag, cls.mu, cls.predicted_period), (CaseTag::QuadA, Some(6), Some(6)));

        let xi = Cyclo::zeta(3, 1).unwrap();
        let a = (&q(3, 1) * &xi).inv().unwrap();
        let cls = classify_quadratic(&a, &(&a * &(&xi * &xi)), &(&a * &xi), 100).unwrap();
        assert_eq!((cls.case_tag, cls.mu), (CaseTag::QuadB1, Some(1)));
        let p = PolySpec::new(vec![a.clone(), &a * &(&xi * &xi), &a * &xi]).unwrap();
        for k in 1..8 {
            assert_eq!(predict_psums(&cls, k).unwrap(), partial_sum_column(&p, k));
        }

        let cls = classify_quadratic(&q(2, 3), &q(-1, 3), &q(2, 3), 100).unwrap();
        assert_eq!(cls.case_tag, CaseTag::PsumsNotPeriodic);
    }

    #[test]
    fn quad_b2_predictor() {
        let xi = Cyclo::zeta(3, 1).unwrap();
        let a = &(&xi * &xi) * &q(1, 3);
        let (b, c) = (&a * &xi, &a * &(&xi * &xi));
        let cls = classify_quadratic(&a, &b, &c, 100).unwrap();
        assert_eq!(cls.case_tag, CaseTag::QuadB2);
        let expected = &(&xi * &xi) * &(&(&Cyclo::one() - &xi) * &q(1, 9));
        assert_eq!(predict_psums(&cls, 2).unwrap(), expected);
        let p = PolySpec::new(vec![a, b, c]).unwrap();
        assert_eq!(partial_sum_column(&p, 2), expected);
    }

    #[test]
    fn quad_c_sine_predictor() {
        // a√3 = 1, i.e. a = √3/3 inside Q(ζ_12)
        let sqrt3 = &Cyclo::zeta(12, 1).unwrap() + &Cyclo::zeta(12, -1).unwrap();
        let a = &sqrt3 * &q(1, 3);
        let cls = classify_quadratic(&a, &q(0, 1), &(-&a), 100).unwrap();
        assert_eq!(cls.case_tag, CaseTag::QuadC);
        assert!(predict_psums(&cls, 4).unwrap().is_zero());
        let p = PolySpec::new(vec![a.clone(), q(0, 1), -a]).unwrap();
        for k in 2..20 {
            assert_eq!(predict_psums(&cls, k).unwrap(), partial_sum_column(&p, k), "k = {k}");
        }
    }

    #[test]
    fn degree_d_family() {
        let cls = prop_d_family(3, &q(1, 4)).unwrap();
        assert_eq!(cls.predicted_period, Some(4));
        let a = &Cyclo::zeta(5, 3).unwrap() * &q(1, 4);
        assert_eq!(prop_d_family(3, &a).unwrap().predicted_period, Some(20));
        assert_eq!(prop_d_family(2, &q(1, 3)).unwrap().predicted_period, Some(6));
        assert_eq!(prop_d_family(3, &q(1, 1)).unwrap().case_tag, CaseTag::NonPeriodicV);
    }
}
