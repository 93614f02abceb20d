//! The rational polynomials `f_μ` whose real roots `r` parameterize the
//! quadratic family `a(1 - t)(1 + (r+1)t)`, and their real roots.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{binomial, denominator_lcm, Cyclo, Rat, Scalar};

/// `f_μ(t)` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct FmuPoly {
    pub mu: usize,
    pub coeffs: Vec<Rat>,
}

impl FmuPoly {
    /// Actual degree (below `μ` when `6 | μ`).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        horner(&self.coeffs, x)
    }
}

impl fmt::Display for FmuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let body = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (i, mag.is_one()) {
                (0, _) => f.write_str(&body)?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{body}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{body}t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn horner(c: &[Rat], x: &Rat) -> Rat {
    c.iter().rev().fold(Rat::zero(), |acc, v| acc * x + v)
}

/// `f_μ(t) = Σ_i (-t)^i C(μ, i) q_i`, with `q_i` built from `ξ = ζ_3`:
/// for `6 ∤ μ`, `q_i = (c_i - (-1)^μ c_{μ-i}) / (2 - (-1)^μ c_μ)` where
/// `c_j = ξ^j + ξ̄^j`; for `6 | μ`, `q_i = (ξ^i - ξ̄^i) / √-3`.
pub fn f_mu(mu: usize) -> FmuPoly {
    assert!(mu >= 1, "f_mu needs mu >= 1");
    let xi = |j: usize| Cyclo::zeta(3, j as i64).expect("order 3");
    let c = |j: usize| &xi(j) + &xi(j).conj();
    let q: Vec<Cyclo> = if mu % 6 == 0 {
        let sqrt_m3 = &xi(1) - &xi(2);
        let inv = sqrt_m3.inv().expect("nonzero");
        (0..=mu).map(|i| &(&xi(i) - &xi(i).conj()) * &inv).collect()
    } else {
        let sign = Cyclo::from_int(if mu % 2 == 0 { 1 } else { -1 });
        let den = (&Cyclo::from_int(2) - &(&sign * &c(mu)))
            .inv()
            .expect("denominator is 4 or 3 when 6 does not divide mu");
        (0..=mu)
            .map(|i| &(&c(i) - &(&sign * &c(mu - i))) * &den)
            .collect()
    };
    let mut coeffs: Vec<Rat> = q
        .iter()
        .enumerate()
        .map(|(i, qi)| {
            let r = qi.to_rat().expect("q_i is rational");
            let b = Rat::from_integer(binomial(mu as u64, i as u64));
            if i % 2 == 0 {
                r * b
            } else {
                -(r * b)
            }
        })
        .collect();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    FmuPoly { mu, coeffs }
}

/// `μ + 1` integer coefficients: `f_μ` times the lcm of its denominators,
/// signed so the lowest nonzero coefficient is positive.
pub fn f_mu_integer_row(mu: usize) -> Vec<BigInt> {
    let f = f_mu(mu);
    let l = Rat::from_integer(denominator_lcm(&f.coeffs));
    let mut row: Vec<BigInt> = (0..=mu)
        .map(|i| {
            let v = f.coeffs.get(i).cloned().unwrap_or_else(Rat::zero) * &l;
            v.to_integer()
        })
        .collect();
    if row.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in row.iter_mut() {
            *v = -std::mem::take(v);
        }
    }
    row
}

/// A real root: exact when rational, else an isolating interval.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub exact: Option<Rat>,
    pub lo: Rat,
    pub hi: Rat,
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        match &self.exact {
            Some(r) => r.to_f64().unwrap_or(f64::NAN),
            None => ((&self.lo + &self.hi) / Rat::from_integer(2.into()))
                .to_f64()
                .unwrap_or(f64::NAN),
        }
    }
}

/// All distinct real roots of `f` in increasing order; irrational roots are
/// bracketed to width at most `precision`.
pub fn real_roots(f: &FmuPoly, precision: f64) -> Vec<RealRoot> {
    real_roots_of(&f.coeffs, precision)
}

/// Real roots of a nonzero rational polynomial (lowest degree first).
pub fn real_roots_of(coeffs: &[Rat], precision: f64) -> Vec<RealRoot> {
    let mut p: Vec<Rat> = trim(coeffs.to_vec());
    assert!(!p.is_empty(), "zero polynomial has no isolated roots");
    let mut exact: Vec<Rat> = Vec::new();
    if p[0].is_zero() {
        exact.push(Rat::zero());
        while p[0].is_zero() {
            p.remove(0);
        }
    }
    for r in rational_root_candidates(&p) {
        if horner(&p, &r).is_zero() {
            while p.len() > 1 && horner(&p, &r).is_zero() {
                p = deflate(&p, &r);
            }
            exact.push(r);
        }
    }
    let mut roots: Vec<RealRoot> = exact
        .into_iter()
        .map(|r| RealRoot {
            exact: Some(r.clone()),
            lo: r.clone(),
            hi: r,
        })
        .collect();
    if p.len() > 2 {
        let g = gcd(&p, &derivative(&p));
        let sf = if g.len() > 1 { divide(&p, &g) } else { p };
        let width = Rat::from_float(precision).unwrap_or_else(|| Rat::new(1.into(), BigInt::from(10).pow(9)));
        let b = root_bound(&sf);
        let mut intervals = Vec::new();
        isolate(&sf, -b.clone(), b, &mut intervals);
        for (lo, hi) in intervals {
            let (lo, hi) = refine(&sf, lo, hi, &width);
            roots.push(RealRoot { exact: None, lo, hi });
        }
    }
    roots.sort_by(|x, y| x.lo.cmp(&y.lo));
    roots
}

fn trim(mut p: Vec<Rat>) -> Vec<Rat> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[Rat]) -> Vec<Rat> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer(i.into()))
        .collect()
}

/// Quotient and remainder of polynomial long division.
fn divmod(p: &[Rat], d: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = trim(p.to_vec());
    let d = trim(d.to_vec());
    let lead = d.last().expect("nonzero divisor").clone();
    if r.len() < d.len() {
        return (vec![], r);
    }
    let mut q = vec![Rat::zero(); r.len() - d.len() + 1];
    while r.len() >= d.len() && !r.is_empty() {
        let shift = r.len() - d.len();
        let f = r.last().expect("nonempty") / &lead;
        for (i, c) in d.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        q[shift] = f;
        r.pop();
        r = trim(r);
    }
    (q, r)
}

fn divide(p: &[Rat], d: &[Rat]) -> Vec<Rat> {
    divmod(p, d).0
}

fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = divmod(&a, &b).1;
        a = b;
        b = r;
    }
    a
}

/// `p / (x - r)` for a root `r`.
fn deflate(p: &[Rat], r: &Rat) -> Vec<Rat> {
    divide(p, &[-r.clone(), Rat::one()])
}

fn integer_coeffs(p: &[Rat]) -> Vec<BigInt> {
    let l = denominator_lcm(p);
    p.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect()
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
            small.push(i.clone());
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `±u/v` with `u | a_0`, `v | a_n` over the integer-scaled polynomial.
fn rational_root_candidates(p: &[Rat]) -> Vec<Rat> {
    let z = integer_coeffs(p);
    let (a0, an) = (&z[0], z.last().expect("nonempty"));
    let mut out: Vec<Rat> = Vec::new();
    for u in positive_divisors(a0) {
        for v in positive_divisors(an) {
            if u.gcd(&v).is_one() {
                let r = Rat::new(u.clone(), v);
                out.push(-r.clone());
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// Cauchy bound: every root lies in `(-B, B)`.
fn root_bound(p: &[Rat]) -> Rat {
    let lead = p.last().expect("nonempty").abs();
    let m = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    m + Rat::one()
}

/// Sign variations of `(1+x)^n p((lo + hi x)/(1+x))`, an upper bound on the
/// number of roots in `(lo, hi)` with the same parity.
fn descartes(p: &[Rat], lo: &Rat, hi: &Rat) -> usize {
    let n = p.len() - 1;
    let mut q = vec![Rat::zero(); n + 1];
    let mul = |a: &[Rat], b: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let lin = [lo.clone(), hi.clone()];
    let one_x = [Rat::one(), Rat::one()];
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = vec![c.clone()];
        for _ in 0..i {
            term = mul(&term, &lin);
        }
        for _ in i..n {
            term = mul(&term, &one_x);
        }
        for (k, v) in term.into_iter().enumerate() {
            q[k] += v;
        }
    }
    let signs: Vec<bool> = q.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn isolate(p: &[Rat], lo: Rat, hi: Rat, out: &mut Vec<(Rat, Rat)>) {
    match descartes(p, &lo, &hi) {
        0 => {}
        1 => out.push((lo, hi)),
        _ => {
            let mid = (&lo + &hi) / Rat::from_integer(2.into());
            isolate(p, lo, mid.clone(), out);
            isolate(p, mid, hi, out);
        }
    }
}

fn refine(p: &[Rat], mut lo: Rat, mut hi: Rat, width: &Rat) -> (Rat, Rat) {
    let two = Rat::from_integer(2.into());
    let slo = horner(p, &lo).is_positive();
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        if horner(p, &mid).is_positive() == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// All `a` with `((ξ-1) a (r - ξ²))^μ = 1` and `((ξ-1) a (1 - ξ² r))^μ = 1`:
/// the candidates `ζ_μ^s / ((ξ-1)(r - ξ²))`, `s = 1..=μ`, that pass the
/// second equation.
pub fn solve_a_quadc<S: Scalar>(r: &S, mu: usize, tol: f64) -> Vec<S> {
    let xi = S::root_of_unity(3, 1);
    let xi2 = S::root_of_unity(3, 2);
    let xm1 = xi.minus(&S::one());
    let Ok(base) = xm1.times(&r.minus(&xi2)).recip() else {
        return Vec::new();
    };
    let second = xm1.times(&S::one().minus(&xi2.times(r)));
    (1..=mu)
        .map(|s| S::root_of_unity(mu, s as i64).times(&base))
        .filter(|a| second.times(a).pow(mu as u64).eq_within(&S::one(), tol))
        .collect()
}
