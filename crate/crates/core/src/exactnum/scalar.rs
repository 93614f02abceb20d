//! The coefficient domain shared by exact and floating-point computations.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::cyclo::Cyclo;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Complex double used in float mode and for plotting.
pub type ComplexF = Complex64;

/// Absolute tolerance used by float-mode comparisons unless overridden.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A field element usable by the series, matrix and array code.
///
/// Two instantiations exist: [`Cyclo`] (exact, tolerances ignored) and
/// [`ComplexF`] (float, comparisons within an absolute tolerance).
pub trait Scalar: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn from_i64(v: i64) -> Self {
        Self::from_rat(&Rat::from_integer(v.into()))
    }
    /// Convert an exact value into this domain.
    fn from_cyclo(c: &Cyclo) -> Self;
    /// `ζ_n^k`.
    fn root_of_unity(n: usize, k: i64) -> Self;

    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn recip(&self) -> Result<Self>;
    fn conj(&self) -> Self;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn is_zero_within(&self, tol: f64) -> bool;
    fn eq_within(&self, other: &Self, tol: f64) -> bool;

    /// Multiplicative order as a root of unity. Exact mode ignores `bound`;
    /// float mode searches `1..=bound` for `|x^m - 1| ≤ tol`.
    fn unit_order(&self, bound: usize, tol: f64) -> Option<usize>;

    fn to_complex(&self) -> ComplexF;

    /// Order of the cyclotomic field the value lives in (1 for floats).
    fn field_order(&self) -> usize;

    /// Canonical hash key once embedded in `Q(ζ_order)`; `None` in float mode.
    fn exact_key(&self, order: usize) -> Option<Vec<BigInt>>;
}

impl Scalar for Cyclo {
    const EXACT: bool = true;

    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn from_rat(r: &Rat) -> Self {
        Cyclo::from_rat(r)
    }
    fn from_cyclo(c: &Cyclo) -> Self {
        c.clone()
    }
    fn root_of_unity(n: usize, k: i64) -> Self {
        Cyclo::zeta(n, k).expect("root of unity order within the configured maximum")
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Result<Self> {
        self.inv()
    }
    fn conj(&self) -> Self {
        Cyclo::conj(self)
    }
    fn pow(&self, e: u64) -> Self {
        Cyclo::pow(self, e)
    }
    fn is_zero_within(&self, _tol: f64) -> bool {
        self.is_zero()
    }
    fn eq_within(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
    fn unit_order(&self, _bound: usize, _tol: f64) -> Option<usize> {
        self.root_of_unity_order()
    }
    fn to_complex(&self) -> ComplexF {
        Cyclo::to_complex(self)
    }
    fn field_order(&self) -> usize {
        self.order()
    }
    fn exact_key(&self, order: usize) -> Option<Vec<BigInt>> {
        self.key_at(order).ok()
    }
}

impl Scalar for ComplexF {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_rat(r: &Rat) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_cyclo(c: &Cyclo) -> Self {
        c.to_complex()
    }
    fn root_of_unity(n: usize, k: i64) -> Self {
        let j = k.rem_euclid(n as i64) as f64;
        Complex64::from_polar(1.0, std::f64::consts::TAU * j / n as f64)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Result<Self> {
        if self.norm_sqr() == 0.0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv())
        }
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero_within(&self, tol: f64) -> bool {
        self.norm() <= tol
    }
    fn eq_within(&self, other: &Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
    fn unit_order(&self, bound: usize, tol: f64) -> Option<usize> {
        if (self.norm() - 1.0).abs() > tol.max(1e-12) * 1e3 {
            return None;
        }
        let mut acc = *self;
        for m in 1..=bound {
            if (acc - Complex64::new(1.0, 0.0)).norm() <= tol {
                return Some(m);
            }
            acc *= self;
        }
        None
    }
    fn to_complex(&self) -> ComplexF {
        *self
    }
    fn field_order(&self) -> usize {
        1
    }
    fn exact_key(&self, _order: usize) -> Option<Vec<BigInt>> {
        None
    }
}
