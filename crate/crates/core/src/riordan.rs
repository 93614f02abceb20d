//! The Riordan array `(1/(1 - t^{d+1}), t·p(t))` of a polynomial, its
//! column structure and the column partial sums `S_[k]`.

use crate::circulant::circulant_of;
use crate::error::{Error, Result};
use crate::exactnum::{ComplexF, Cyclo, Scalar};
use crate::series::{fps_expand_rational, Poly};

/// Input polynomial `p(t) = a_0 + a_1 t + … + a_d t^d` with `a_0 ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpec<S> {
    a: Vec<S>,
}

impl<S: Scalar> PolySpec<S> {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut a: Vec<S>) -> Result<Self> {
        while a.len() > 1 && a.last().is_some_and(|c| c.is_zero_within(0.0)) {
            a.pop();
        }
        match a.first() {
            Some(a0) if !a0.is_zero_within(0.0) => Ok(PolySpec { a }),
            _ => Err(Error::InvalidPolynomial),
        }
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    /// `d + 1`, the period of every column.
    pub fn width(&self) -> usize {
        self.a.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.a
    }

    pub fn poly(&self) -> Poly<S> {
        Poly::new(self.a.clone())
    }

    /// `t · p(t)`
    pub fn tp(&self) -> Poly<S> {
        self.poly().shift(1)
    }

    pub fn coeff_sum(&self) -> S {
        self.a.iter().fold(S::zero(), |acc, c| acc.plus(c))
    }

    pub fn to_float(&self) -> PolySpec<ComplexF> {
        PolySpec {
            a: self.a.iter().map(Scalar::to_complex).collect(),
        }
    }

    pub fn is_exact(&self) -> bool {
        S::EXACT
    }
}

impl PolySpec<Cyclo> {
    /// Smallest order `N` such that every coefficient lies in `Q(ζ_N)`.
    pub fn field_order(&self) -> usize {
        self.a
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.order()))
    }
}

/// Column `k` of the array: a finite prefix followed by a repeating block.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnStructure<S> {
    pub k: usize,
    /// `C_{0,k} … C_{(k-1)(d+1),k}`
    pub prefix: Vec<S>,
    /// The next `d + 1` entries, repeated forever.
    pub block: Vec<S>,
}

/// `S_[1], S_[2], …`
#[derive(Clone, Debug, PartialEq)]
pub struct PSumSeq<S> {
    pub terms: Vec<S>,
}

impl<S> PSumSeq<S> {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `S_[k]`, 1-based.
    pub fn get(&self, k: usize) -> Option<&S> {
        k.checked_sub(1).and_then(|i| self.terms.get(i))
    }
}

/// Lower-triangular table; row `n` holds columns `0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct RaTable<S> {
    pub rows: Vec<Vec<S>>,
}

impl<S: Scalar> RaTable<S> {
    /// `C_{n,k}`, zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> S {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(S::zero)
    }
}

/// `C_{n,k} = [t^n] (t p)^k / (1 - t^{d+1})`.
pub fn ra_entry<S: Scalar>(p: &PolySpec<S>, n: usize, k: usize) -> S {
    if n < k {
        return S::zero();
    }
    let col = fps_expand_rational(
        &p.tp().pow(k as u64),
        &Poly::one_minus_power(p.width()),
        n + 1,
    )
    .expect("1 - t^(d+1) has unit constant term");
    col.coeff_of(n).expect("expanded far enough").clone()
}

/// Rows `0..n_rows` of the array.
pub fn ra_matrix<S: Scalar>(p: &PolySpec<S>, n_rows: usize) -> RaTable<S> {
    let denom: Poly<S> = Poly::one_minus_power(p.width());
    let tp = p.tp();
    let mut rows: Vec<Vec<S>> = (0..n_rows).map(|n| Vec::with_capacity(n + 1)).collect();
    let mut power = Poly::one();
    for k in 0..n_rows {
        let col = fps_expand_rational(&power, &denom, n_rows)
            .expect("1 - t^(d+1) has unit constant term");
        for (n, row) in rows.iter_mut().enumerate().skip(k) {
            row.push(col.coeffs()[n].clone());
        }
        power = power.mul(&tp);
    }
    RaTable { rows }
}

/// Extra periods over which a column block is checked to repeat.
const BLOCK_CHECK_PERIODS: usize = 3;

/// Prefix and repeating block of column `k ≥ 1`, checked against `V^k`.
pub fn column_structure<S: Scalar>(p: &PolySpec<S>, k: usize, tol: f64) -> Result<ColumnStructure<S>> {
    if k == 0 {
        return Err(Error::InvalidInput("column index must be at least 1".into()));
    }
    let w = p.width();
    let start = 1 + (k - 1) * w;
    let total = start + (1 + BLOCK_CHECK_PERIODS) * w;
    let col = fps_expand_rational(&p.tp().pow(k as u64), &Poly::one_minus_power(w), total)?
        .into_coeffs();
    let prefix = col[..start].to_vec();
    let block = col[start..start + w].to_vec();
    for (i, v) in col[start..].iter().enumerate() {
        if !v.eq_within(&block[i % w], tol) {
            return Err(Error::InternalInconsistency(format!(
                "column {k} does not repeat at offset {}",
                start + i
            )));
        }
    }
    let vk = circulant_of(p).pow(k as u64);
    let last_col: Vec<S> = (0..w).map(|i| vk.entry(i, w - 1)).collect();
    if !block.iter().zip(&last_col).all(|(x, y)| x.eq_within(y, tol)) {
        return Err(Error::InternalInconsistency(format!(
            "block of column {k} differs from V^{k} e_d"
        )));
    }
    Ok(ColumnStructure { k, prefix, block })
}

/// `S_[k] = [t^{(k-1)(d+1)}] (t p)^k / ((1 - t)(1 - t^{d+1}))`.
pub fn partial_sum_column<S: Scalar>(p: &PolySpec<S>, k: usize) -> S {
    if k == 0 {
        return S::zero();
    }
    weighted_head(&p.tp().pow(k as u64), (k - 1) * p.width(), p.width())
}

/// `[t^n] f / ((1 - t)(1 - t^w))` for a polynomial `f`.
fn weighted_head<S: Scalar>(f: &Poly<S>, n: usize, w: usize) -> S {
    f.coeffs()
        .iter()
        .enumerate()
        .take(n + 1)
        .filter(|(_, c)| !c.is_zero_within(0.0))
        .fold(S::zero(), |acc, (i, c)| {
            acc.plus(&c.times(&S::from_i64(((n - i) / w + 1) as i64)))
        })
}

/// `h_{n,k} = [t^n] (t p)^k / ((1 - t)(1 - t^{d+1}))`.
pub fn psum_array_entry<S: Scalar>(p: &PolySpec<S>, n: usize, k: usize) -> S {
    let denom = Poly::one_minus_power(1).mul(&Poly::one_minus_power(p.width()));
    let f = fps_expand_rational(&p.tp().pow(k as u64), &denom, n + 1)
        .expect("denominator has unit constant term");
    f.coeff_of(n).expect("expanded far enough").clone()
}

/// `S_[1] … S_[count]`, reusing each power of `t p` for the next.
pub fn psum_sequence<S: Scalar>(p: &PolySpec<S>, count: usize) -> PSumSeq<S> {
    let tp = p.tp();
    let w = p.width();
    let mut power = Poly::one();
    let mut terms = Vec::with_capacity(count);
    for k in 1..=count {
        power = power.mul(&tp);
        terms.push(weighted_head(&power, (k - 1) * w, w));
    }
    PSumSeq { terms }
}

/// `S_[1] … S_[count]` for `p(1) = 0`, read off the column blocks.
///
/// With `p(1) = 0` every block polynomial `p_{k-1}` also vanishes at 1, and
/// `S_[k] = p_{k-1}'(1) / (d+1)` for `k ≥ 2`, where the coefficients of
/// `p_{k-1}` are `V^{k-1} (a_0, …, a_d)`. Iterating `V` instead of expanding
/// `(tp)^k` keeps float mode accurate when `V` is periodic.
pub fn psum_sequence_from_blocks<S: Scalar>(p: &PolySpec<S>, count: usize, tol: f64) -> Result<PSumSeq<S>> {
    if !p.coeff_sum().is_zero_within(tol) {
        return Err(Error::InvalidInput("block formula needs p(1) = 0".into()));
    }
    let v = circulant_of(p);
    let inv_w = S::from_i64(p.width() as i64).recip()?;
    let mut x: Vec<S> = p.coeffs().to_vec();
    let mut terms = Vec::with_capacity(count);
    for k in 1..=count {
        if k == 1 {
            terms.push(S::zero());
            continue;
        }
        x = v.apply(&x);
        let slope = x
            .iter()
            .enumerate()
            .skip(1)
            .fold(S::zero(), |acc, (j, c)| acc.plus(&c.times(&S::from_i64(j as i64))));
        terms.push(slope.times(&inv_w));
    }
    Ok(PSumSeq { terms })
}

/// `S_[1] … S_[count]` from `p^k mod (t^w - 1)`, `w = d + 1`.
///
/// With `s = p(1)` and `M = (k-1)w - k`,
/// `w·S_[k] = k·d·s^k - k·s^{k-1}·p'(1) - Σ_ρ F_k[ρ]·((M - ρ) mod w)`,
/// where `F_k[ρ]` sums the coefficients of `p^k` at exponents `≡ ρ (mod w)`.
/// `F_k` is one cyclic convolution away from `F_{k-1}`, so nothing of the
/// size of `p^k` is ever formed; float mode stays accurate for any `p`.
pub fn psum_sequence_folded<S: Scalar>(p: &PolySpec<S>, count: usize) -> PSumSeq<S> {
    let a = p.coeffs();
    let w = p.width();
    let d = p.degree() as i64;
    let s = p.coeff_sum();
    let slope = p.poly().derivative().eval(&S::one());
    let inv_w = S::from_i64(w as i64).recip().expect("w ≥ 1");
    let mut folded = vec![S::zero(); w];
    folded[0] = S::one();
    let mut s_prev = S::one();
    let mut terms = Vec::with_capacity(count);
    for k in 1..=count {
        let mut next = vec![S::zero(); w];
        for (i, f) in folded.iter().enumerate() {
            for (j, c) in a.iter().enumerate() {
                let r = (i + j) % w;
                next[r] = next[r].plus(&f.times(c));
            }
        }
        folded = next;
        let s_k = s_prev.times(&s);
        let ki = k as i64;
        let m = ((k - 1) * w) as i64 - ki;
        let tail = folded.iter().enumerate().fold(S::zero(), |acc, (rho, f)| {
            acc.plus(&f.times(&S::from_i64((m - rho as i64).rem_euclid(w as i64))))
        });
        let total = s_k
            .times(&S::from_i64(ki * d))
            .minus(&s_prev.times(&slope).times(&S::from_i64(ki)))
            .minus(&tail);
        terms.push(total.times(&inv_w));
        s_prev = s_k;
    }
    PSumSeq { terms }
}
