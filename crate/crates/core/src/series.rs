//! Dense polynomials and truncated power series over a [`Scalar`] domain.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Polynomial with coefficients lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_within(0.0)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    /// `c · t^k`
    pub fn monomial(c: S, k: usize) -> Self {
        let mut v = vec![S::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    /// Polynomial from small integer coefficients.
    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&x| S::from_i64(x)).collect())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).plus(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&S::one().negated()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![S::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Schoolbook convolution.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_within(0.0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Poly::new(out)
    }

    /// Power by repeated squaring; `p^0 = 1`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.times(x).plus(c))
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&S::from_i64(i as i64)))
                .collect(),
        )
    }

    /// `1 - t^n`
    pub fn one_minus_power(n: usize) -> Self {
        Poly::one().sub(&Poly::monomial(S::one(), n))
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero_within(0.0) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{i}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_mul<S: Scalar>(p: &Poly<S>, q: &Poly<S>) -> Poly<S> {
    p.mul(q)
}

pub fn poly_pow<S: Scalar>(p: &Poly<S>, k: u64) -> Poly<S> {
    p.pow(k)
}

pub fn poly_eval<S: Scalar>(p: &Poly<S>, x: &S) -> S {
    p.eval(x)
}

/// Power series known up to (excluding) `t^truncation`.
#[derive(Clone, Debug, PartialEq)]
pub struct Fps<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Fps<S> {
    /// Series from its first `coeffs.len()` coefficients.
    pub fn from_coeffs(coeffs: Vec<S>) -> Self {
        Fps { coeffs }
    }

    /// Truncation of a polynomial to `n` terms.
    pub fn from_poly(p: &Poly<S>, n: usize) -> Self {
        Fps {
            coeffs: (0..n).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// `[t^n]` of the series.
    pub fn coeff_of(&self, n: usize) -> Result<&S> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            index: n,
            truncation: self.coeffs.len(),
        })
    }

    /// Truncated product; the result has the smaller truncation.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = vec![S::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero_within(0.0) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        Fps { coeffs: out }
    }
}

/// First `n_terms` coefficients of `numer / denom`, by long division.
pub fn fps_expand_rational<S: Scalar>(
    numer: &Poly<S>,
    denom: &Poly<S>,
    n_terms: usize,
) -> Result<Fps<S>> {
    let d0 = denom.coeff(0);
    if d0.is_zero_within(0.0) {
        return Err(Error::NonUnitConstantTerm);
    }
    let inv0 = d0.recip()?;
    let dc = denom.coeffs();
    let mut out: Vec<S> = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let mut acc = numer.coeff(n);
        for (j, dj) in dc.iter().enumerate().skip(1).take(n) {
            if dj.is_zero_within(0.0) {
                continue;
            }
            acc = acc.minus(&dj.times(&out[n - j]));
        }
        out.push(acc.times(&inv0));
    }
    Ok(Fps { coeffs: out })
}

/// `[t^n] f`.
pub fn coeff_of<S: Scalar>(f: &Fps<S>, n: usize) -> Result<S> {
    f.coeff_of(n).cloned()
}
