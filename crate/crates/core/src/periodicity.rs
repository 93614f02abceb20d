//! Minimal eventual periods of sequences and their rational generating
//! functions `Q(t) / (1 - t^n)`.

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, DEFAULT_TOL};
use crate::series::Poly;

/// `prefix` (length `preperiod`) followed by `block` repeated forever.
#[derive(Clone, Debug, PartialEq)]
pub struct EventualPeriod<S> {
    pub preperiod: usize,
    pub period: usize,
    pub prefix: Vec<S>,
    pub block: Vec<S>,
}

impl<S: Scalar> EventualPeriod<S> {
    pub fn new(prefix: Vec<S>, block: Vec<S>) -> Result<Self> {
        if block.is_empty() {
            return Err(Error::InvalidInput("repeating block must be nonempty".into()));
        }
        Ok(EventualPeriod {
            preperiod: prefix.len(),
            period: block.len(),
            prefix,
            block,
        })
    }

    /// The `i`-th term (0-based).
    pub fn term(&self, i: usize) -> S {
        if i < self.preperiod {
            self.prefix[i].clone()
        } else {
            self.block[(i - self.preperiod) % self.period].clone()
        }
    }

    /// The first `len` terms.
    pub fn expand(&self, len: usize) -> Vec<S> {
        (0..len).map(|i| self.term(i)).collect()
    }

    /// Same sequence with the smallest period, then the shortest prefix.
    pub fn minimized(&self, tol: f64) -> Self {
        let n = self.period;
        let n_min = (1..=n)
            .filter(|m| n % m == 0)
            .find(|&m| (0..n).all(|i| self.block[i].eq_within(&self.block[(i + m) % n], tol)))
            .unwrap_or(n);
        let mut block: Vec<S> = self.block[..n_min].to_vec();
        let mut prefix = self.prefix.clone();
        while let Some(last) = prefix.last() {
            if !last.eq_within(&block[n_min - 1], tol) {
                break;
            }
            block.rotate_right(1);
            prefix.pop();
        }
        EventualPeriod {
            preperiod: prefix.len(),
            period: n_min,
            prefix,
            block,
        }
    }

    /// Termwise comparison of the defining data.
    pub fn eq_within(&self, other: &Self, tol: f64) -> bool {
        self.preperiod == other.preperiod
            && self.period == other.period
            && self.prefix.iter().zip(&other.prefix).all(|(a, b)| a.eq_within(b, tol))
            && self.block.iter().zip(&other.block).all(|(a, b)| a.eq_within(b, tol))
    }
}

/// Minimal `(k, n)` with `s_{i+n} = s_i` for all `k ≤ i`, over the whole
/// window. A candidate is accepted only if `k + 2n ≤ seq.len()`, so every
/// block position is seen at least twice, and `2k ≤ seq.len()`, so the
/// repetition fills at least half the window. Without the second condition
/// any window ending in two equal terms would pass as period 1.
pub fn detect_eventual_period<S: Scalar>(seq: &[S], tol: f64) -> Result<EventualPeriod<S>> {
    let len = seq.len();
    for n in 1..=len / 2 {
        let k = (0..len - n)
            .rev()
            .find(|&i| !seq[i].eq_within(&seq[i + n], tol))
            .map_or(0, |i| i + 1);
        if k + 2 * n <= len && 2 * k <= len {
            return EventualPeriod::new(seq[..k].to_vec(), seq[k..k + n].to_vec());
        }
    }
    Err(Error::NotPeriodicWithinBudget(len))
}

/// `(q_0(t)(1 - t^n) + q(t) t^k, 1 - t^n)` for the prefix polynomial `q_0`
/// and block polynomial `q`.
pub fn gf_from_periodic<S: Scalar>(ep: &EventualPeriod<S>) -> (Poly<S>, Poly<S>) {
    let denom = Poly::one_minus_power(ep.period);
    let q0 = Poly::new(ep.prefix.clone());
    let q = Poly::new(ep.block.clone());
    (q0.mul(&denom).add(&q.shift(ep.preperiod)), denom)
}

/// Sequence with generating function `numer / (1 - t^n)`.
///
/// Split `numer = Σ_i Q_i(t) t^{in}` with `deg Q_i < n`. Every term from
/// index `m·n` on (`m` the last block index) is a coefficient of
/// `Π = Σ_i Q_i`; the earlier terms are partial sums of the `Q_i`. The result
/// is then minimized.
pub fn periodic_from_gf<S: Scalar>(numer: &Poly<S>, n: usize) -> Result<EventualPeriod<S>> {
    if n == 0 {
        return Err(Error::InvalidInput("period must be positive".into()));
    }
    let tol = if S::EXACT { 0.0 } else { DEFAULT_TOL };
    let c = numer.coeffs();
    let m = c.len().saturating_sub(1) / n;
    let mut running = vec![S::zero(); n];
    let mut prefix = Vec::with_capacity(m * n);
    for i in 0..m {
        for (r, acc) in running.iter_mut().enumerate() {
            *acc = acc.plus(&numer.coeff(i * n + r));
        }
        prefix.extend(running.iter().cloned());
    }
    let block: Vec<S> = (0..n)
        .map(|r| running[r].plus(&numer.coeff(m * n + r)))
        .collect();
    Ok(EventualPeriod::new(prefix, block)?.minimized(tol))
}
