//! Exact elements of the cyclotomic field `Q(ζ_N)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{check_order, divisors, reduce};
use super::rat::Rat;
use crate::error::{Error, Result};

/// An element `Σ c_j ζ_N^j` of `Q(ζ_N)` in canonical form.
///
/// The value is stored as integer numerators over a single positive common
/// denominator, in the power basis `1, ζ, …, ζ^{φ(N)-1}`. The numerators and
/// the denominator share no common factor, so two elements of the same order
/// are equal exactly when their representations are.
#[derive(Clone)]
pub struct Cyclo {
    order: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    /// Canonical representative of `Σ raw_j ζ_order^j`.
    ///
    /// `raw` may be longer than `order`; powers wrap around since `ζ^order = 1`.
    pub fn new(order: usize, raw: &[Rat]) -> Result<Self> {
        check_order(order)?;
        let common = raw
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let num = raw
            .iter()
            .map(|r| r.numer() * (&common / r.denom()))
            .collect();
        Ok(Self::from_parts(order, num, common))
    }

    /// Build from integer numerators over a common positive denominator.
    pub(crate) fn from_parts(order: usize, raw: Vec<BigInt>, den: BigInt) -> Self {
        let num = reduce(order, raw);
        Self::normalized(order, num, den)
    }

    fn normalized(order: usize, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if num.iter().all(Zero::is_zero) {
            return Cyclo {
                order,
                num,
                den: BigInt::one(),
            };
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c /= &g;
            }
            den /= &g;
        }
        Cyclo { order, num, den }
    }

    pub fn zero() -> Self {
        Self::from_rat(&Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_rat(&Rat::one())
    }

    /// A rational number, embedded with order 1.
    pub fn from_rat(r: &Rat) -> Self {
        Cyclo {
            order: 1,
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rat(&Rat::from_integer(v.into()))
    }

    /// `ζ_n^k` for any integer `k`.
    pub fn zeta(n: usize, k: i64) -> Result<Self> {
        check_order(n)?;
        let j = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![BigInt::zero(); j + 1];
        raw[j] = BigInt::one();
        Ok(Self::from_parts(n, raw, BigInt::one()))
    }

    /// The `N` of `Q(ζ_N)` this element is represented in.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Rational coefficients in the power basis `1, ζ, …, ζ^{φ(N)-1}`.
    pub fn coeffs(&self) -> Vec<Rat> {
        self.num
            .iter()
            .map(|c| Rat::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.to_rat().is_some_and(|r| r.is_one())
    }

    /// `Some` when the element is a rational number.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            Some(Rat::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-represent in `Q(ζ_target)`; `order` must divide `target`.
    pub fn embed(&self, target: usize) -> Result<Self> {
        if target == self.order {
            return Ok(self.clone());
        }
        check_order(target)?;
        if target % self.order != 0 {
            return Err(Error::Embedding {
                from: self.order,
                to: target,
            });
        }
        let step = target / self.order;
        let mut raw = vec![BigInt::zero(); (self.num.len().max(1) - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(Self::from_parts(target, raw, self.den.clone()))
    }

    fn lift_pair(&self, other: &Self) -> Result<(Self, Self)> {
        if self.order == other.order {
            return Ok((self.clone(), other.clone()));
        }
        let target = self.order.lcm(&other.order);
        Ok((self.embed(target)?, other.embed(target)?))
    }

    fn lifted(&self, other: &Self) -> (Self, Self) {
        self.lift_pair(other)
            .expect("common field order exceeds the configured maximum")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.lift_pair(other)?;
        let l = a.den.lcm(&b.den);
        let fa = &l / &a.den;
        let fb = &l / &b.den;
        let num = a
            .num
            .iter()
            .zip(b.num.iter())
            .map(|(x, y)| x * &fa + y * &fb)
            .collect();
        Ok(Self::normalized(a.order, num, l))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.lift_pair(other)?;
        if a.is_zero() || b.is_zero() {
            return Ok(Cyclo {
                order: a.order,
                num: vec![BigInt::zero(); a.num.len()],
                den: BigInt::one(),
            });
        }
        let len = a.num.len() + b.num.len() - 1;
        let mut conv = vec![BigInt::zero(); len];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        Ok(Self::from_parts(a.order, conv, &a.den * &b.den))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rat() {
            return Ok(Self::from_rat(&(Rat::one() / r)).embed_unchecked(self.order));
        }
        // Solve (multiplication-by-num matrix) · y = e_0 over Q.
        let phi = self.num.len();
        let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut raw = vec![BigInt::zero(); j + phi];
            for (i, c) in self.num.iter().enumerate() {
                raw[i + j] = c.clone();
            }
            columns.push(reduce(self.order, raw));
        }
        // augmented matrix rows
        let mut m: Vec<Vec<Rat>> = (0..phi)
            .map(|r| {
                let mut row: Vec<Rat> = (0..phi)
                    .map(|c| Rat::from_integer(columns[c][r].clone()))
                    .collect();
                row.push(if r == 0 { Rat::one() } else { Rat::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let pivot = (col..phi)
                .find(|&r| !m[r][col].is_zero())
                .ok_or_else(|| Error::InternalInconsistency("singular multiplication matrix".into()))?;
            m.swap(col, pivot);
            let inv_p = Rat::one() / m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x * &inv_p;
            }
            for r in 0..phi {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=phi {
                        let delta = &f * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        let y: Vec<Rat> = m.into_iter().map(|row| row[phi].clone()).collect();
        let y = Cyclo::new(self.order, &y)?;
        y.try_mul(&Cyclo::from_parts(1, vec![self.den.clone()], BigInt::one()))
    }

    fn embed_unchecked(&self, target: usize) -> Self {
        self.embed(target).expect("embedding into a checked order")
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclo::one().embed_unchecked(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, allowing negative exponents.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Complex conjugate (`ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut raw = vec![BigInt::zero(); n];
        for (j, c) in self.num.iter().enumerate() {
            raw[(n - j) % n] += c;
        }
        Self::from_parts(n, raw, self.den.clone())
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Least `m ≥ 1` with `self^m = 1`, if the element is a root of unity.
    ///
    /// Only divisors of `lcm(2, N)` are tried; every root of unity in
    /// `Q(ζ_N)` has such an order.
    pub fn root_of_unity_order(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let z = self.to_complex();
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let bound = self.order.lcm(&2);
        divisors(bound)
            .into_iter()
            .find(|&m| self.pow(m as u64).is_one())
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        let den = big_to_f64(&self.den);
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = std::f64::consts::TAU * j as f64 / n;
                Complex64::from_polar(1.0, theta) * (ratio_to_f64(c, &self.den, den))
            })
            .sum()
    }

    /// Integer coefficients and denominator after embedding into `order`;
    /// usable as a hash key for values sharing that order.
    pub fn key_at(&self, order: usize) -> Result<Vec<BigInt>> {
        let e = self.embed(order)?;
        let mut key = e.num;
        key.push(e.den);
        Ok(key)
    }

    /// Textual literal in powers of `z = ζ_N` (highest power first).
    pub fn to_literal(&self) -> String {
        let terms: Vec<(usize, Rat)> = self
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (j, c)) in terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let zpart = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            if zpart.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&zpart);
            } else {
                out.push_str(&format!("{abs}*{zpart}"));
            }
        }
        out
    }
}

fn big_to_f64(b: &BigInt) -> f64 {
    b.to_f64().unwrap_or(f64::INFINITY)
}

fn ratio_to_f64(n: &BigInt, d: &BigInt, d_f: f64) -> f64 {
    let n_f = big_to_f64(n);
    if n_f.is_finite() && d_f.is_finite() {
        n_f / d_f
    } else {
        Rat::new(n.clone(), d.clone()).to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.num == other.num && self.den == other.den;
        }
        match self.lift_pair(other) {
            Ok((a, b)) => a.num == b.num && a.den == b.den,
            Err(_) => false,
        }
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.order, self.to_literal())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl From<Rat> for Cyclo {
    fn from(r: Rat) -> Self {
        Cyclo::from_rat(&r)
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        let (a, b) = self.lifted(rhs);
        a.try_add(&b).expect("same-order addition")
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        let (a, b) = self.lifted(rhs);
        a.try_mul(&b).expect("same-order multiplication")
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &'a Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}
