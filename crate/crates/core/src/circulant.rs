//! The circulant matrix `V_{p(t)}`, its powers, orbits, periods and
//! eigenvalues.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, DEFAULT_TOL};
use crate::riordan::PolySpec;
use crate::series::Poly;

/// Square circulant matrix; row `i` is row 0 shifted right `i` places.
#[derive(Clone, Debug, PartialEq)]
pub struct CircMat<S> {
    rows: Vec<Vec<S>>,
}

/// Minimal `(k, μ)` with `X^{k+μ} = X^k` for the witnessed sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeriodInfo {
    pub preperiod: usize,
    pub period: usize,
}

impl PeriodInfo {
    /// The order, defined only for purely periodic sequences.
    pub fn order(&self) -> Option<usize> {
        (self.preperiod == 0).then_some(self.period)
    }
}

impl<S: Scalar> CircMat<S> {
    /// Circulant with the given first row.
    pub fn from_first_row(first: Vec<S>) -> Self {
        let n = first.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| first[(j + n - i) % n].clone()).collect())
            .collect();
        CircMat { rows }
    }

    /// Matrix from explicit rows; no structure is assumed.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        CircMat { rows }
    }

    pub fn identity(n: usize) -> Self {
        let mut first = vec![S::zero(); n];
        first[0] = S::one();
        Self::from_first_row(first)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        self.rows[i][j].clone()
    }

    /// Whether every row is the right shift of the one above.
    pub fn is_circulant(&self, tol: f64) -> bool {
        let n = self.dim();
        (1..n).all(|i| (0..n).all(|j| self.rows[i][j].eq_within(&self.rows[i - 1][(j + n - 1) % n], tol)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, m| {
                            acc.plus(&self.rows[i][m].times(&other.rows[m][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        CircMat { rows }
    }

    /// `V^k` by repeated squaring.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim());
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

    pub fn apply(&self, x: &[S]) -> Vec<S> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(x).fold(S::zero(), |acc, (a, b)| acc.plus(&a.times(b))))
            .collect()
    }

    pub fn eq_within(&self, other: &Self, tol: f64) -> bool {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .all(|(a, b)| a.eq_within(b, tol))
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> S {
        let n = self.dim();
        let mut m = self.rows.clone();
        let mut det = S::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero_within(0.0)) else {
                return S::zero();
            };
            if piv != col {
                m.swap(piv, col);
                det = det.negated();
            }
            det = det.times(&m[col][col]);
            let inv = m[col][col].recip().expect("nonzero pivot");
            for r in col + 1..n {
                let f = m[r][col].times(&inv);
                if f.is_zero_within(0.0) {
                    continue;
                }
                for c in col..n {
                    let v = m[r][c].minus(&f.times(&m[col][c]));
                    m[r][c] = v;
                }
            }
        }
        det
    }

    /// `λ_l = Σ_j ν_j ξ^{lj}` for `l = 1, …, d+1`, with `ν` the first row and
    /// `ξ = ζ_{d+1}`. Element `l - 1` of the result is `λ_l`; its eigenvector
    /// is `(1, ξ^l, …, ξ^{ld})`.
    pub fn eigenvalues(&self) -> Vec<S> {
        let n = self.dim();
        (1..=n)
            .map(|l| {
                self.rows[0].iter().enumerate().fold(S::zero(), |acc, (j, v)| {
                    acc.plus(&v.times(&S::root_of_unity(n, (l * j) as i64)))
                })
            })
            .collect()
    }

    fn exact_key(&self, order: usize) -> Option<Vec<BigInt>> {
        let mut key = Vec::new();
        for v in self.rows.iter().flatten() {
            key.extend(v.exact_key(order)?);
        }
        Some(key)
    }

    fn field_order(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .fold(1, |acc, v| num_integer::lcm(acc, v.field_order()))
    }
}

/// `V_{p(t)}`: first row `(a_d, …, a_0)`.
pub fn circulant_of<S: Scalar>(p: &PolySpec<S>) -> CircMat<S> {
    CircMat::from_first_row(p.coeffs().iter().rev().cloned().collect())
}

pub fn mat_power<S: Scalar>(v: &CircMat<S>, k: u64) -> CircMat<S> {
    v.pow(k)
}

pub fn eigenvalues<S: Scalar>(v: &CircMat<S>) -> Vec<S> {
    v.eigenvalues()
}

/// `4 · lcm(2, …, d+1) · 64`.
pub fn default_max_steps(dim: usize) -> usize {
    let l = (2..=dim.max(2)).fold(1usize, num_integer::lcm);
    4 * l * 64
}

/// Powers can only cycle when every eigenvalue is zero or of unit modulus.
fn spectrum_admits_cycle<S: Scalar>(v: &CircMat<S>) -> bool {
    v.eigenvalues().iter().all(|l| {
        let r = l.to_complex().norm();
        r < 1e-9 || (r - 1.0).abs() < 1e-6
    })
}

/// Minimal `(k, μ)` with `V^{k+μ} = V^k`, scanning `I, V, V², …`.
pub fn matrix_period<S: Scalar>(v: &CircMat<S>, max_steps: usize, tol: f64) -> Result<PeriodInfo> {
    if !spectrum_admits_cycle(v) {
        return Err(Error::PeriodNotFound(max_steps));
    }
    let cur = CircMat::identity(v.dim());
    first_repeat(cur, |m| m.mul(v), max_steps, tol, |m| m.exact_key(v.field_order()), CircMat::eq_within)
        .map(|(_, info)| info)
}

/// Forward orbit of `x0` up to its first revisit.
pub fn orbit<S: Scalar>(
    v: &CircMat<S>,
    x0: &[S],
    max_steps: usize,
    tol: f64,
) -> Result<(Vec<Vec<S>>, PeriodInfo)> {
    if x0.len() != v.dim() {
        return Err(Error::InvalidInput(format!(
            "vector of length {} for a {}x{} matrix",
            x0.len(),
            v.dim(),
            v.dim()
        )));
    }
    let order = x0
        .iter()
        .fold(v.field_order(), |acc, x| num_integer::lcm(acc, x.field_order()));
    let key = move |x: &Vec<S>| -> Option<Vec<BigInt>> {
        let mut k = Vec::new();
        for c in x {
            k.extend(c.exact_key(order)?);
        }
        Some(k)
    };
    let eq = |a: &Vec<S>, b: &Vec<S>, tol: f64| a.iter().zip(b).all(|(x, y)| x.eq_within(y, tol));
    first_repeat(x0.to_vec(), |x| v.apply(x), max_steps, tol, key, eq)
}

/// Iterate `step` from `start` until a state recurs. Exact states are found
/// through a hash map of canonical keys, float states by a tolerance scan.
fn first_repeat<T, F, K, E>(
    start: T,
    step: F,
    max_steps: usize,
    tol: f64,
    key: K,
    eq: E,
) -> Result<(Vec<T>, PeriodInfo)>
where
    F: Fn(&T) -> T,
    K: Fn(&T) -> Option<Vec<BigInt>>,
    E: Fn(&T, &T, f64) -> bool,
{
    let mut seen: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut states: Vec<T> = Vec::new();
    let mut cur = start;
    for i in 0..=max_steps {
        let hit = match key(&cur) {
            Some(k) => match seen.get(&k) {
                Some(&j) => Some(j),
                None => {
                    seen.insert(k, i);
                    None
                }
            },
            None => states.iter().position(|s| eq(s, &cur, tol)),
        };
        if let Some(j) = hit {
            return Ok((
                states,
                PeriodInfo {
                    preperiod: j,
                    period: i - j,
                },
            ));
        }
        let next = step(&cur);
        states.push(cur);
        cur = next;
    }
    Err(Error::PeriodNotFound(max_steps))
}

/// `matrix_period` with the default budget and tolerance.
pub fn matrix_period_default<S: Scalar>(v: &CircMat<S>) -> Result<PeriodInfo> {
    matrix_period(v, default_max_steps(v.dim()), DEFAULT_TOL)
}

/// `p_k(t) = (1, t, …, t^d) · V^k · (a_0, …, a_d)^T`.
pub fn pk_poly<S: Scalar>(p: &PolySpec<S>, k: u64) -> Poly<S> {
    let vk = circulant_of(p).pow(k);
    Poly::new(vk.apply(p.coeffs()))
}
