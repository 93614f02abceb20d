//! JSON documents emitted with `--format json`.
//!
//! Exact values travel as literal strings in powers of `z = ζ_N`, where `N`
//! is the document's `root_order`; every exact value in one document shares
//! that order, so `parse_cyclo(s, root_order)` recovers it. Float values are
//! `[re, im]` pairs of doubles.

use riordan_core::exactnum::{ComplexF, Cyclo, Scalar};
use riordan_core::oracles::IdentityReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Exact(String),
    Float([f64; 2]),
}

/// A scalar domain the CLI can print.
pub trait Printable: Scalar {
    /// Smallest order whose field contains the value; 1 for floats.
    fn order(&self) -> usize;
    fn num(&self, order: usize) -> Num;
    fn text(&self, order: usize) -> String;
}

impl Printable for Cyclo {
    fn order(&self) -> usize {
        Cyclo::order(self)
    }

    fn num(&self, order: usize) -> Num {
        Num::Exact(self.text(order))
    }

    fn text(&self, order: usize) -> String {
        self.embed(order).expect("order is a common multiple").to_literal()
    }
}

impl Printable for ComplexF {
    fn order(&self) -> usize {
        1
    }

    fn num(&self, _: usize) -> Num {
        Num::Float([self.re, self.im])
    }

    fn text(&self, _: usize) -> String {
        fmt_complex(*self)
    }
}

/// `0.404508+0.293893i`; parts below 5e-7 in magnitude are dropped.
pub fn fmt_complex(z: ComplexF) -> String {
    let clean = |x: f64| if x.abs() < 5e-7 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re:.6}"),
        (true, false) => format!("{im:.6}i"),
        (false, false) => format!("{re:.6}{im:+.6}i"),
    }
}

/// Least common multiple of the orders of `values` and `base`.
pub fn common_order<'a, S: Printable + 'a>(base: usize, values: impl IntoIterator<Item = &'a S>) -> usize {
    values.into_iter().fold(base, |acc, v| num_integer::lcm(acc, v.order()))
}

pub fn nums<S: Printable>(values: &[S], order: usize) -> Vec<Num> {
    values.iter().map(|v| v.num(order)).collect()
}

/// Fields shared by every polynomial command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Header {
    pub command: String,
    pub mode: String,
    /// Order `N` of `z` in exact literals; null in float mode.
    pub root_order: Option<usize>,
    pub coeffs: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShowDoc {
    #[serde(flatten)]
    pub header: Header,
    pub rows: Vec<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsumsDoc {
    #[serde(flatten)]
    pub header: Header,
    pub count: usize,
    /// `S_[1] … S_[count]`.
    pub terms: Vec<Num>,
    pub periodic: bool,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub prefix: Option<Vec<Num>>,
    pub block: Option<Vec<Num>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodDoc {
    #[serde(flatten)]
    pub header: Header,
    pub max_steps: usize,
    pub periodic: bool,
    pub preperiod: Option<usize>,
    pub period: Option<usize>,
    pub eigenvalues: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PredictorDoc {
    Geometric { coeff: Num, ratio: Num, shift: u32 },
    Sine { a: Num },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    #[serde(flatten)]
    pub header: Header,
    pub case: String,
    pub psums_periodic: bool,
    pub mu: Option<usize>,
    pub matrix_preperiod: Option<usize>,
    pub predicted_period: Option<usize>,
    pub parameters: Vec<Param>,
    pub predictor: Option<PredictorDoc>,
    pub float_verified: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootDoc {
    /// Set when the root is rational.
    pub exact: Option<String>,
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FmuDoc {
    pub command: String,
    pub mu: usize,
    /// Rational coefficients, lowest degree first.
    pub coeffs: Vec<String>,
    /// Primitive integer row, as decimal strings.
    pub integer_row: Vec<String>,
    pub roots: Vec<RootDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub command: String,
    pub suite: String,
    pub pass: bool,
    pub reports: Vec<IdentityReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotFile {
    pub path: String,
    pub label: String,
    pub preperiod: usize,
    pub period: usize,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlotDoc {
    pub command: String,
    /// Family name, or `polynomial`.
    pub target: String,
    pub files: Vec<PlotFile>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
