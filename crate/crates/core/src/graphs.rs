//! Plane graphs of eventually periodic partial-sum sequences and their SVG
//! rendering, including the six reference families.
//!
//! Vertices are the distinct values of the sequence, edges join consecutive
//! terms. A graph is built from `preperiod + 2·period` terms, which is enough
//! to close every cycle.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::classify::{f_mu, prop_d_poly, real_roots, solve_a_quadc};
use crate::error::{Error, Result};
use crate::exactnum::{rat, ComplexF, Cyclo, Scalar, DEFAULT_TOL};
use crate::periodicity::{detect_eventual_period, EventualPeriod};
use crate::riordan::{psum_sequence_folded, PolySpec};

/// Float values closer than this are one vertex.
pub const DEDUP_TOL: f64 = 1e-7;

/// Window lengths tried, in order, when measuring a sequence's period.
const WINDOWS: [usize; 4] = [48, 96, 192, 384];

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneGraph {
    pub vertices: Vec<ComplexF>,
    /// Index pairs `(i, j)` with `i < j`, in order of first traversal.
    pub edges: Vec<(usize, usize)>,
}

/// Fixed styling; only the geometry carries meaning.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    /// Fraction of each side left blank.
    pub margin: f64,
    pub vertex_radius: f64,
    pub stroke_width: f64,
    pub axes: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 400,
            height: 400,
            margin: 0.08,
            vertex_radius: 4.0,
            stroke_width: 1.5,
            axes: true,
        }
    }
}

/// Vertices in first-appearance order; one undirected edge per consecutive
/// pair of distinct vertices. Exact scalars are deduplicated exactly.
pub fn psum_graph<S: Scalar>(seq: &[S], dedup_tol: f64) -> PlaneGraph {
    let mut reps: Vec<&S> = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(seq.len());
    for x in seq {
        let idx = match reps.iter().position(|v| v.eq_within(x, dedup_tol)) {
            Some(i) => i,
            None => {
                reps.push(x);
                reps.len() - 1
            }
        };
        path.push(idx);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for w in path.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let e = (w[0].min(w[1]), w[0].max(w[1]));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    PlaneGraph {
        vertices: reps.iter().map(|v| v.to_complex()).collect(),
        edges,
    }
}

/// Fixed three-decimal output; `-0.000` is printed as `0.000`.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

/// SVG 1.1 text. The bounding box of the vertices (and the origin when
/// axes are drawn) is mapped into the viewport with a common scale, y up.
pub fn render_svg(g: &PlaneGraph, spec: &RenderSpec) -> String {
    let mut pts: Vec<ComplexF> = g.vertices.clone();
    if spec.axes || pts.is_empty() {
        pts.push(ComplexF::new(0.0, 0.0));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for p in &pts {
        x0 = x0.min(p.re);
        x1 = x1.max(p.re);
        y0 = y0.min(p.im);
        y1 = y1.max(p.im);
    }
    let (w, h) = (f64::from(spec.width), f64::from(spec.height));
    let inner_w = w * (1.0 - 2.0 * spec.margin);
    let inner_h = h * (1.0 - 2.0 * spec.margin);
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let scale = (inner_w / span).min(inner_h / span);
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let map = |z: ComplexF| (w / 2.0 + (z.re - cx) * scale, h / 2.0 - (z.im - cy) * scale);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        spec.width, spec.height, spec.width, spec.height
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    if spec.axes {
        let (ox, oy) = map(ComplexF::new(0.0, 0.0));
        let _ = writeln!(
            out,
            "<path d=\"M 0 {oy} H {w} M {ox} 0 V {h}\" stroke=\"#b0b0b0\" stroke-width=\"1\" fill=\"none\"/>",
            oy = num(oy),
            w = num(w),
            ox = num(ox),
            h = num(h)
        );
    }
    let _ = writeln!(
        out,
        "<g stroke=\"#1f4e8c\" stroke-width=\"{}\" stroke-linecap=\"round\">",
        num(spec.stroke_width)
    );
    for &(i, j) in &g.edges {
        let (ax, ay) = map(g.vertices[i]);
        let (bx, by) = map(g.vertices[j]);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
            num(ax),
            num(ay),
            num(bx),
            num(by)
        );
    }
    out.push_str("</g>\n<g fill=\"#c0392b\">\n");
    for &v in &g.vertices {
        let (x, y) = map(v);
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            num(x),
            num(y),
            num(spec.vertex_radius)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Measured eventual period of the partial sums of `p`, widening the
/// window until one is verified.
pub fn measure_psums<S: Scalar>(p: &PolySpec<S>, tol: f64) -> Result<EventualPeriod<S>> {
    let mut last = Err(Error::NotPeriodicWithinBudget(0));
    for n in WINDOWS {
        last = detect_eventual_period(&psum_sequence_folded(p, n).terms, tol);
        if last.is_ok() {
            break;
        }
    }
    last.map(|ep| ep.minimized(tol))
}

/// Graph of the partial sums of `p` along with the measured period.
pub fn graph_of_poly<S: Scalar>(p: &PolySpec<S>, tol: f64) -> Result<(EventualPeriod<S>, PlaneGraph)> {
    let ep = measure_psums(p, tol)?;
    let seq = ep.expand(ep.preperiod + 2 * ep.period);
    let g = psum_graph(&seq, if S::EXACT { 0.0 } else { DEDUP_TOL });
    Ok((ep, g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `a(1 - t)`, `-2a = ζ_14^s`
    Fig1,
    /// `a(1 - 2t - 2t²)`, `(3a)^12 = 1`
    Fig2,
    /// `a(ξ² + t + ξt²)`, `(3aξ²)^7 = 1`
    Fig3,
    /// `a(1 - t)(1 + (r+1)t)` with `r` the largest root of `f_14`
    Fig4,
    /// `a(1 - t)(1 + (r+1)t)` with `r = 1 + √3`, the largest root of `f_12`
    Fig5,
    /// `a(2 - 2t - 2t² - 2t³)`, `(4a)^5 = 1`
    Fig6,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::Fig1, Family::Fig2, Family::Fig3, Family::Fig4, Family::Fig5, Family::Fig6];

    pub fn name(self) -> &'static str {
        match self {
            Family::Fig1 => "fig1",
            Family::Fig2 => "fig2",
            Family::Fig3 => "fig3",
            Family::Fig4 => "fig4",
            Family::Fig5 => "fig5",
            Family::Fig6 => "fig6",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown figure family '{s}' (expected fig1 … fig6)")))
    }
}

/// One graph of a family.
#[derive(Clone, Debug, PartialEq)]
pub struct FigureMember {
    pub family: Family,
    /// 1-based position within the family.
    pub index: usize,
    /// The family's parameter `a`.
    pub parameter: ComplexF,
    pub label: String,
    pub coeffs: Vec<ComplexF>,
    pub preperiod: usize,
    pub period: usize,
    /// `preperiod + 2·period` terms.
    pub sequence: Vec<ComplexF>,
    /// Present for families computed exactly (all but `Fig4`).
    pub exact: Option<EventualPeriod<Cyclo>>,
    pub graph: PlaneGraph,
}

impl FigureMember {
    pub fn file_name(&self) -> String {
        format!("{}_{}.svg", self.family.name(), self.index)
    }
}

fn zeta(n: usize, k: i64) -> Cyclo {
    Cyclo::zeta(n, k).expect("small orders are always valid")
}

fn q(n: i64, d: i64) -> Cyclo {
    Cyclo::from_rat(&rat(n, d))
}

fn exact_member(family: Family, index: usize, a: &Cyclo, p: PolySpec<Cyclo>) -> Result<FigureMember> {
    let (ep, graph) = graph_of_poly(&p, 0.0)?;
    let sequence = ep.expand(ep.preperiod + 2 * ep.period).iter().map(Cyclo::to_complex).collect();
    Ok(FigureMember {
        family,
        index,
        parameter: a.to_complex(),
        label: format!("a = {} (z = ζ_{})", a.to_literal(), a.order()),
        coeffs: p.coeffs().iter().map(Cyclo::to_complex).collect(),
        preperiod: ep.preperiod,
        period: ep.period,
        sequence,
        exact: Some(ep),
        graph,
    })
}

fn float_member(family: Family, index: usize, a: ComplexF, p: PolySpec<ComplexF>) -> Result<FigureMember> {
    let (ep, graph) = graph_of_poly(&p, DEFAULT_TOL)?;
    Ok(FigureMember {
        family,
        index,
        parameter: a,
        label: format!("a = {} {} {:.6}i", num6(a.re), if a.im < -5e-7 { '-' } else { '+' }, a.im.abs()),
        coeffs: p.coeffs().to_vec(),
        preperiod: ep.preperiod,
        period: ep.period,
        sequence: ep.expand(ep.preperiod + 2 * ep.period),
        exact: None,
        graph,
    })
}

fn num6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// `arg z` in `[0, 2π)`, with `|Im z| ≤ tol` read as real.
fn arg0(z: ComplexF, tol: f64) -> f64 {
    let im = if z.im.abs() <= tol { 0.0 } else { z.im };
    let t = im.atan2(z.re);
    if t < 0.0 {
        t + std::f64::consts::TAU
    } else {
        t
    }
}

/// One of each conjugate pair (the one with nonnegative imaginary part),
/// ordered by argument.
fn upper_half<S: Scalar>(mut v: Vec<S>, tol: f64) -> Vec<S> {
    v.retain(|a| a.to_complex().im >= -tol);
    v.sort_by(|x, y| arg0(x.to_complex(), tol).total_cmp(&arg0(y.to_complex(), tol)));
    v
}

/// The QuadC polynomial `a(1 + rt - (1+r)t²)`.
fn quad_c_poly<S: Scalar>(a: &S, r: &S) -> Result<PolySpec<S>> {
    let one_r = S::one().plus(r);
    PolySpec::new(vec![a.clone(), a.times(r), a.times(&one_r).negated()])
}

/// Parameters and polynomials of a family, in figure order.
pub fn family_members(family: Family) -> Result<Vec<FigureMember>> {
    let mut out = Vec::new();
    match family {
        Family::Fig1 => {
            // a = 1/2 and a = -1/2 first, then -2a = ζ_14^s for s = 1..6
            for (i, s) in [7, 0, 1, 2, 3, 4, 5, 6].into_iter().enumerate() {
                let a = &q(-1, 2) * &zeta(14, s);
                let p = PolySpec::new(vec![a.clone(), -a.clone()])?;
                out.push(exact_member(family, i + 1, &a, p)?);
            }
        }
        Family::Fig2 => {
            // a ∈ {-1, 1, i, e^{πi/6}, e^{πi/3}, e^{2πi/3}, e^{5πi/6}} / 3
            for (i, s) in [6, 0, 3, 1, 2, 4, 5].into_iter().enumerate() {
                let a = &q(1, 3) * &zeta(12, s);
                let m2 = &a * &q(-2, 1);
                let p = PolySpec::new(vec![a.clone(), m2.clone(), m2])?;
                out.push(exact_member(family, i + 1, &a, p)?);
            }
        }
        Family::Fig3 => {
            // 3aξ² = ζ_7^s, so a = ζ_7^s ξ / 3; ordered by arg a
            let xi = zeta(3, 1);
            let mut params: Vec<Cyclo> = (0..7).map(|s| &(&q(1, 3) * &zeta(7, s)) * &xi).collect();
            params.sort_by(|x, y| arg0(x.to_complex(), 0.0).total_cmp(&arg0(y.to_complex(), 0.0)));
            for (i, a) in params.iter().enumerate() {
                let p = PolySpec::new(vec![a * &(&xi * &xi), a.clone(), a * &xi])?;
                out.push(exact_member(family, i + 1, a, p)?);
            }
        }
        Family::Fig4 => {
            let roots = real_roots(&f_mu(14), 1e-15);
            let r = roots
                .last()
                .ok_or_else(|| Error::InternalInconsistency("f_14 has no real roots".into()))?
                .approx();
            let r = ComplexF::new(r, 0.0);
            for (i, a) in upper_half(solve_a_quadc(&r, 14, DEFAULT_TOL), DEFAULT_TOL).into_iter().enumerate() {
                out.push(float_member(family, i + 1, a, quad_c_poly(&a, &r)?)?);
            }
        }
        Family::Fig5 => {
            let r = &Cyclo::one() + &(&zeta(12, 1) + &zeta(12, -1));
            for (i, a) in upper_half(solve_a_quadc(&r, 12, 0.0), 0.0).into_iter().enumerate() {
                let p = quad_c_poly(&a, &r)?;
                out.push(exact_member(family, i + 1, &a, p)?);
            }
        }
        Family::Fig6 => {
            // 4a = ζ_5^s with s = 0, 3, 4: the real solution and one of each
            // conjugate pair, listed as in the reference figure
            for (i, s) in [0, 3, 4].into_iter().enumerate() {
                let a = &q(1, 4) * &zeta(5, s);
                let p = prop_d_poly(3, &a)?;
                out.push(exact_member(family, i + 1, &a, p)?);
            }
        }
    }
    Ok(out)
}

/// Writes `<family>_<i>.svg` (1-based) into `out_dir` and returns the paths.
pub fn figure_family(family: Family, out_dir: &Path) -> Result<Vec<PathBuf>> {
    write_members(&family_members(family)?, out_dir)
}

/// Renders each member with the default style into `out_dir`.
pub fn write_members(members: &[FigureMember], out_dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir).map_err(|e| io_err(out_dir, e))?;
    let spec = RenderSpec::default();
    let mut written = Vec::new();
    for m in members {
        let path = out_dir.join(m.file_name());
        fs::write(&path, render_svg(&m.graph, &spec)).map_err(|e| io_err(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}
