//! Cyclotomic polynomials, memoized per order.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Default cap on the order `N` of `Q(ζ_N)`.
pub const DEFAULT_MAX_ORDER: usize = 1024;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Largest root-of-unity order the field arithmetic will accept.
pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Override the cap on field orders (process-wide).
pub fn set_max_order(n: usize) {
    MAX_ORDER.store(n.max(1), Ordering::Relaxed);
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > max_order() {
        return Err(Error::InvalidOrder(n, max_order()));
    }
    Ok(())
}

type Memo = RwLock<HashMap<usize, Arc<[i64]>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Obtained by dividing `x^n - 1` by every `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_poly(n: usize) -> Arc<[i64]> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = memo().read().expect("memo poisoned").get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut quotient: Vec<i64> = vec![0; n + 1];
    quotient[0] = -1;
    quotient[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let divisor = cyclotomic_poly(d);
        quotient = exact_div_monic(&quotient, &divisor);
    }
    let poly: Arc<[i64]> = quotient.into();
    memo()
        .write()
        .expect("memo poisoned")
        .entry(n)
        .or_insert(poly)
        .clone()
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

/// Euler's totient, i.e. the degree of `Φ_n`.
pub fn totient(n: usize) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Reduce an integer coefficient vector (in powers of `ζ_n`) to the canonical
/// power basis `1, ζ, …, ζ^{φ(n)-1}`.
pub(crate) fn reduce(n: usize, mut v: Vec<BigInt>) -> Vec<BigInt> {
    // ζ^n = 1
    if v.len() > n {
        let extra = v.split_off(n);
        for (i, c) in extra.into_iter().enumerate() {
            let slot = i % n;
            v[slot] += c;
        }
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if v.len() > deg {
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                match pj {
                    0 => {}
                    1 => v[i - deg + j] -= &c,
                    -1 => v[i - deg + j] += &c,
                    _ => v[i - deg + j] -= &c * pj,
                }
            }
        }
        v.truncate(deg);
    }
    v.resize(deg, BigInt::zero());
    v
}

pub(crate) fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
