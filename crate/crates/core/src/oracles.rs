//! Closed-form identities used to cross-check series extraction.
//!
//! Each identity comes as a pair `(lhs, rhs)`: one side read off a power
//! series by expansion, the other from a closed form. The `*_report`
//! functions sweep a parameter range and record the first mismatch.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, rat, Cyclo, Rat, Scalar};
use crate::riordan::{partial_sum_column, PolySpec};
use crate::series::{fps_expand_rational, Fps, Poly};

/// Outcome of checking one identity over a parameter range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub range: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub pass: bool,
    /// Position in `lhs`/`rhs` of the first disagreement.
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    /// Builds the report from paired values, comparing within `tol`.
    pub fn from_pairs<S: Scalar>(identity: &str, range: &str, pairs: &[(S, S)], tol: f64) -> Self {
        let first_mismatch = pairs.iter().position(|(l, r)| !l.eq_within(r, tol));
        IdentityReport {
            identity: identity.to_string(),
            range: range.to_string(),
            lhs: pairs.iter().map(|(l, _)| l.to_string()).collect(),
            rhs: pairs.iter().map(|(_, r)| r.to_string()).collect(),
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }
}

/// Which of the two cube-root-of-unity identities to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lemma7Variant {
    /// `(1-t)^{k-2}(1-ξt)^{k-1}/(1-ξ²t)` against `3^{k-2}(ξ-1)ξ^{k+i-1}`.
    Eq3,
    /// `(1-t)^{k-2}(1-ξ²t)^{k-1}/(1-ξt)` against `3^{k-2}(1-ξ)ξ^{2k-i}`.
    Eq3B,
}

fn zeta(n: usize, k: i64) -> Cyclo {
    Cyclo::zeta(n, k).expect("small orders are always valid")
}

fn q(n: i64, d: i64) -> Cyclo {
    Cyclo::from_rat(&rat(n, d))
}

fn linear(c0: Cyclo, c1: Cyclo) -> Poly<Cyclo> {
    Poly::new(vec![c0, c1])
}

/// `[t^n] numer / denom`.
fn coefficient(numer: &Poly<Cyclo>, denom: &Poly<Cyclo>, n: usize) -> Cyclo {
    fps_expand_rational(numer, denom, n + 1)
        .expect("denominators here have constant term 1")
        .coeffs()[n]
        .clone()
}

/// Imaginary part as a field element: `(x - x̄) / (2i)`.
fn imag_part(x: &Cyclo) -> Cyclo {
    let two_i = &q(2, 1) * &zeta(4, 1);
    &(x - &x.conj()) * &two_i.inv().expect("2i is nonzero")
}

/// `[t^{2k-3}] (1-t²)^{k-2}(1+t)²/(1+t+t²)` against
/// `Im((2η/√3)(ξ-1)^{k-2})`, with `η = ζ_6`, `ξ = ζ_3` and `√3 = ζ_12 + ζ_12⁻¹`.
pub fn lemma6_pair(k: usize) -> (Cyclo, Cyclo) {
    assert!(k >= 2, "k must be at least 2");
    let numer = Poly::from_ints(&[1, 0, -1])
        .pow(k as u64 - 2)
        .mul(&Poly::from_ints(&[1, 2, 1]));
    let lhs = coefficient(&numer, &Poly::from_ints(&[1, 1, 1]), 2 * k - 3);

    let sqrt3 = &zeta(12, 1) + &zeta(12, -1);
    let eta = zeta(6, 1);
    let xi = zeta(3, 1);
    let scale = &(&q(2, 1) * &eta) * &sqrt3.inv().expect("√3 is nonzero");
    let rhs = imag_part(&(&scale * &(&xi - &Cyclo::one()).pow(k as u64 - 2)));
    (lhs, rhs)
}

/// `[t^{2k-i}]` of the variant's rational function against its closed form.
///
/// The identity is claimed for `0 ≤ i ≤ 3`; larger `i` (up to `2k`) is
/// accepted so that the failure beyond that range can be exhibited.
pub fn lemma7_pair(k: usize, i: usize, variant: Lemma7Variant) -> (Cyclo, Cyclo) {
    assert!(k >= 2 && i <= 2 * k, "need k ≥ 2 and i ≤ 2k");
    let (u, v) = match variant {
        Lemma7Variant::Eq3 => (zeta(3, 1), zeta(3, 2)),
        Lemma7Variant::Eq3B => (zeta(3, 2), zeta(3, 1)),
    };
    let numer = Poly::from_ints(&[1, -1])
        .pow(k as u64 - 2)
        .mul(&linear(Cyclo::one(), -u).pow(k as u64 - 1));
    let lhs = coefficient(&numer, &linear(Cyclo::one(), -v), 2 * k - i);

    let xi = zeta(3, 1);
    let three = q(3, 1).pow(k as u64 - 2);
    let rhs = match variant {
        Lemma7Variant::Eq3 => &(&three * &(&xi - &Cyclo::one())) * &xi.pow((k + i - 1) as u64),
        Lemma7Variant::Eq3B => &(&three * &(&Cyclo::one() - &xi)) * &xi.pow((2 * k - i) as u64),
    };
    (lhs, rhs)
}

/// `Σ_{n=0}^{k-2} C(k,n) ⌊(k-n)/2⌋ bⁿ a^{k-n}`, the closed form of `S_[k]`
/// for `p = a + bt`.
pub fn prop9_sum<S: Scalar>(a: &S, b: &S, k: usize) -> S {
    (0..=k.saturating_sub(2)).filter(|_| k >= 2).fold(S::zero(), |acc, n| {
        let weight = binomial(k as u64, n as u64) * num_bigint::BigInt::from((k - n) / 2);
        let term = S::from_rat(&Rat::from_integer(weight))
            .times(&b.pow(n as u64))
            .times(&a.pow((k - n) as u64));
        acc.plus(&term)
    })
}

/// `Σ_{n=0}^{k} (-1)ⁿ C(k,n) ⌊(k-n)/2⌋` against `(-2)^{k-2}`.
pub fn corollary_check(k: usize) -> (Rat, Rat) {
    assert!(k >= 2, "k must be at least 2");
    let lhs = (0..=k).fold(Rat::from_integer(0.into()), |acc, n| {
        let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
        let weight = binomial(k as u64, n as u64) * num_bigint::BigInt::from(sign * ((k - n) / 2) as i64);
        acc + Rat::from_integer(weight)
    });
    let rhs = Rat::from_integer((-2i64).pow(k as u32 - 2).into());
    (lhs, rhs)
}

/// Expansion of `a² / ((1 + (a-b)t)(1 - (a+b)t)²)`; term `j` is `S_[j+2]`
/// for `p = a + bt`.
pub fn gf_linear_expand<S: Scalar>(a: &S, b: &S, n_terms: usize) -> Result<Fps<S>> {
    if a.times(b).is_zero_within(0.0) {
        return Err(Error::InvalidInput("need a·b ≠ 0".into()));
    }
    let f1 = Poly::new(vec![S::one(), a.minus(b)]);
    let f2 = Poly::new(vec![S::one(), a.plus(b).negated()]);
    let denom = f1.mul(&f2).mul(&f2);
    fps_expand_rational(&Poly::constant(a.times(a)), &denom, n_terms)
}

/// Expansion of `a²(1 + 2at) / (1 + 3at + 3a²t²)`; term `j` is `S_[j+2]`
/// for `p = a(1 - t²)`.
pub fn gf_case_b0_expand<S: Scalar>(a: &S, n_terms: usize) -> Result<Fps<S>> {
    if a.is_zero_within(0.0) {
        return Err(Error::InvalidInput("need a ≠ 0".into()));
    }
    let a2 = a.times(a);
    let numer = Poly::new(vec![a2.clone(), a2.times(&a.times(&S::from_i64(2)))]);
    let denom = Poly::new(vec![S::one(), a.times(&S::from_i64(3)), a2.times(&S::from_i64(3))]);
    fps_expand_rational(&numer, &denom, n_terms)
}

pub fn lemma6_report(kmax: usize) -> IdentityReport {
    let pairs: Vec<_> = (2..=kmax).map(lemma6_pair).collect();
    IdentityReport::from_pairs("lemma6", &format!("2 <= k <= {kmax}"), &pairs, 0.0)
}

/// Sweeps `2 ≤ k ≤ kmax`, `0 ≤ i ≤ 3`, `k` outer.
pub fn lemma7_report(kmax: usize, variant: Lemma7Variant) -> IdentityReport {
    let pairs: Vec<_> = (2..=kmax)
        .flat_map(|k| (0..=3).map(move |i| lemma7_pair(k, i, variant)))
        .collect();
    let name = match variant {
        Lemma7Variant::Eq3 => "lemma7-eq3",
        Lemma7Variant::Eq3B => "lemma7-eq3b",
    };
    IdentityReport::from_pairs(name, &format!("2 <= k <= {kmax}, 0 <= i <= 3"), &pairs, 0.0)
}

/// Sample `(a, b)` pairs: rationals, both signs, and root-of-unity scalings.
pub fn prop9_samples() -> Vec<(Cyclo, Cyclo)> {
    vec![
        (q(1, 2), q(-1, 2)),
        (q(1, 1), q(-1, 1)),
        (q(1, 2), q(1, 2)),
        (q(2, 3), q(-1, 5)),
        (&q(-1, 2) * &zeta(14, 3), &q(1, 2) * &zeta(14, 3)),
        (zeta(3, 1), q(1, 1)),
        (&q(1, 3) * &zeta(12, 5), zeta(4, 1)),
    ]
}

/// `prop9_sum` against `partial_sum_column` over the sample pairs.
pub fn prop9_report(kmax: usize) -> IdentityReport {
    let mut pairs = Vec::new();
    for (a, b) in prop9_samples() {
        let p = PolySpec::new(vec![a.clone(), b.clone()]).expect("a ≠ 0");
        for k in 1..=kmax {
            pairs.push((prop9_sum(&a, &b, k), partial_sum_column(&p, k)));
        }
    }
    IdentityReport::from_pairs("prop9", &format!("1 <= k <= {kmax}, sampled (a, b)"), &pairs, 0.0)
}

pub fn corollary_report(kmax: usize) -> IdentityReport {
    let pairs: Vec<(Cyclo, Cyclo)> = (2..=kmax)
        .map(corollary_check)
        .map(|(l, r)| (Cyclo::from_rat(&l), Cyclo::from_rat(&r)))
        .collect();
    IdentityReport::from_pairs("corollary", &format!("2 <= k <= {kmax}"), &pairs, 0.0)
}

/// Both generating-function oracles against series extraction, `n_terms`
/// terms each: the linear one on the `prop9` samples with `b ≠ 0`, the
/// `a(1 - t²)` one on a few exact `a`.
pub fn gf_report(n_terms: usize) -> IdentityReport {
    let mut pairs = Vec::new();
    for (a, b) in prop9_samples() {
        let p = PolySpec::new(vec![a.clone(), b.clone()]).expect("a ≠ 0");
        let f = gf_linear_expand(&a, &b, n_terms).expect("a·b ≠ 0");
        for (j, v) in f.coeffs().iter().enumerate() {
            pairs.push((v.clone(), partial_sum_column(&p, j + 2)));
        }
    }
    for a in [q(1, 3), q(-2, 5), &q(1, 3) * &zeta(12, 1)] {
        let p = PolySpec::new(vec![a.clone(), Cyclo::zero(), -a.clone()]).expect("a ≠ 0");
        let f = gf_case_b0_expand(&a, n_terms).expect("a ≠ 0");
        for (j, v) in f.coeffs().iter().enumerate() {
            pairs.push((v.clone(), partial_sum_column(&p, j + 2)));
        }
    }
    IdentityReport::from_pairs("gf", &format!("{n_terms} terms per sample"), &pairs, 0.0)
}
