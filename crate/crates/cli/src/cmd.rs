use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use riordan_core::circulant::{circulant_of, default_max_steps, eigenvalues, matrix_period};
use riordan_core::classify::{self as cls, f_mu, f_mu_integer_row, real_roots, Predictor};
use riordan_core::exactnum::{parse_coeff_list, rat, ComplexF, Cyclo, Rat};
use riordan_core::graphs::{family_members, graph_of_poly, render_svg, write_members, Family, RenderSpec};
use riordan_core::oracles::{
    corollary_report, gf_report, lemma6_report, lemma7_report, prop9_report, IdentityReport, Lemma7Variant,
};
use riordan_core::periodicity::{detect_eventual_period, gf_from_periodic, EventualPeriod};
use riordan_core::riordan::{psum_sequence_folded, ra_matrix, PolySpec};
use riordan_core::series::fps_expand_rational;
use riordan_core::{Error, Result};

use crate::doc::{self, common_order, nums, Printable};
use crate::{Format, Mode, OptPolyArgs, Outcome, OutArgs, PolyArgs, Suite};

pub const DEFAULT_SEED: u64 = 20_240_607;

/// Resolved polynomial input.
struct Input {
    exact: PolySpec<Cyclo>,
    root_order: usize,
    mode: Mode,
    tol: f64,
    format: Format,
}

impl Input {
    fn parse(root_order: usize, coeffs: &str, mode: Mode, tol: f64, out: &OutArgs) -> Result<Self> {
        if !(tol >= 0.0 && tol.is_finite()) {
            return Err(Error::InvalidInput(format!("tolerance must be a nonnegative number, got {tol}")));
        }
        let exact = PolySpec::new(parse_coeff_list(coeffs, root_order)?)?;
        Ok(Input { exact, root_order, mode, tol, format: out.format })
    }

    fn from_args(a: &PolyArgs) -> Result<Self> {
        Input::parse(a.root_order, &a.coeffs, a.mode, a.tol, &a.out)
    }

    fn mode_name(&self) -> &'static str {
        match self.mode {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

/// Runs `f` on the exact or the float form of the input.
macro_rules! dispatch {
    ($input:expr, $f:ident ( $($arg:expr),* )) => {
        match $input.mode {
            Mode::Exact => $f::<Cyclo>(&$input, &$input.exact, 0.0 $(, $arg)*),
            Mode::Float => $f::<ComplexF>(&$input, &$input.exact.to_float(), $input.tol $(, $arg)*),
        }
    };
}

/// Order for exact literals, `None` in float mode.
fn doc_order<'a, S: Printable + 'a>(input: &Input, values: impl IntoIterator<Item = &'a S>) -> (usize, Option<usize>) {
    let n = common_order(input.root_order, values);
    (n, S::EXACT.then_some(n))
}

fn header<S: Printable>(command: &str, input: &Input, p: &PolySpec<S>, order: (usize, Option<usize>)) -> doc::Header {
    doc::Header {
        command: command.into(),
        mode: input.mode_name().into(),
        root_order: order.1,
        coeffs: nums(p.coeffs(), order.0),
    }
}

fn zeta_note(order: (usize, Option<usize>)) -> String {
    match order.1 {
        Some(n) if n > 1 => format!("z = exp(2πi/{n})\n"),
        _ => String::new(),
    }
}

fn join<S: Printable>(values: &[S], order: usize) -> String {
    values.iter().map(|v| v.text(order)).collect::<Vec<_>>().join(", ")
}

fn emit<T: serde::Serialize>(format: Format, text: impl FnOnce() -> String, doc: &T) {
    match format {
        Format::Text => print!("{}", text()),
        Format::Json => print!("{}", doc::to_json(doc)),
    }
}

pub fn show(args: &PolyArgs, rows: usize) -> Result<Outcome> {
    let input = Input::from_args(args)?;
    dispatch!(input, show_in(rows))
}

fn show_in<S: Printable>(input: &Input, p: &PolySpec<S>, _tol: f64, rows: usize) -> Result<Outcome> {
    let table = ra_matrix(p, rows);
    let order = doc_order(input, table.rows.iter().flatten().chain(p.coeffs()));
    let cells: Vec<Vec<String>> = table.rows.iter().map(|r| r.iter().map(|v| v.text(order.0)).collect()).collect();
    let doc = doc::ShowDoc {
        header: header("show", input, p, order),
        rows: table.rows.iter().map(|r| nums(r, order.0)).collect(),
    };
    emit(
        input.format,
        || {
            let mut width = vec![0usize; rows];
            for row in &cells {
                for (k, c) in row.iter().enumerate() {
                    width[k] = width[k].max(c.chars().count());
                }
            }
            let mut out = zeta_note(order);
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{}{c}", " ".repeat(width[k] - c.chars().count())))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        },
        &doc,
    );
    Ok(Outcome::Done)
}

pub fn psums(args: &PolyArgs, count: usize) -> Result<Outcome> {
    if count == 0 {
        return Err(Error::InvalidInput("--count must be positive".into()));
    }
    let input = Input::from_args(args)?;
    dispatch!(input, psums_in(count))
}

fn psums_in<S: Printable>(input: &Input, p: &PolySpec<S>, tol: f64, count: usize) -> Result<Outcome> {
    let seq = psum_sequence_folded(p, count);
    let found = detect_eventual_period(&seq.terms, tol).ok();
    let order = doc_order(input, seq.terms.iter().chain(p.coeffs()));
    let doc = doc::PsumsDoc {
        header: header("psums", input, p, order),
        count,
        terms: nums(&seq.terms, order.0),
        periodic: found.is_some(),
        preperiod: found.as_ref().map(|e| e.preperiod),
        period: found.as_ref().map(|e| e.period),
        prefix: found.as_ref().map(|e| nums(&e.prefix, order.0)),
        block: found.as_ref().map(|e| nums(&e.block, order.0)),
    };
    emit(
        input.format,
        || {
            let mut out = zeta_note(order);
            let _ = writeln!(out, "S_[1..{count}]: {}", join(&seq.terms, order.0));
            match &found {
                Some(e) => {
                    let _ = writeln!(out, "preperiod {}, period {}", e.preperiod, e.period);
                    if !e.prefix.is_empty() {
                        let _ = writeln!(out, "prefix: {}", join(&e.prefix, order.0));
                    }
                    let _ = writeln!(out, "block: {}", join(&e.block, order.0));
                }
                None => {
                    let _ = writeln!(out, "not periodic within {count} terms");
                }
            }
            out
        },
        &doc,
    );
    Ok(if found.is_some() { Outcome::Done } else { Outcome::Negative })
}

pub fn period(args: &PolyArgs, steps: Option<usize>) -> Result<Outcome> {
    let input = Input::from_args(args)?;
    dispatch!(input, period_in(steps))
}

fn period_in<S: Printable>(input: &Input, p: &PolySpec<S>, tol: f64, steps: Option<usize>) -> Result<Outcome> {
    let v = circulant_of(p);
    let max_steps = steps.unwrap_or_else(|| default_max_steps(p.width()));
    let info = match matrix_period(&v, max_steps, tol) {
        Ok(info) => Some(info),
        Err(Error::PeriodNotFound(_)) => None,
        Err(e) => return Err(e),
    };
    let eig = eigenvalues(&v);
    let order = doc_order(input, eig.iter().chain(p.coeffs()));
    let doc = doc::PeriodDoc {
        header: header("period", input, p, order),
        max_steps,
        periodic: info.is_some(),
        preperiod: info.map(|i| i.preperiod),
        period: info.map(|i| i.period),
        eigenvalues: nums(&eig, order.0),
    };
    emit(
        input.format,
        || {
            let mut out = zeta_note(order);
            match info {
                Some(i) => {
                    let _ = writeln!(out, "preperiod {}, period {}", i.preperiod, i.period);
                }
                None => {
                    let _ = writeln!(out, "powers do not repeat within {max_steps} steps");
                }
            }
            let _ = writeln!(out, "eigenvalues: {}", join(&eig, order.0));
            out
        },
        &doc,
    );
    Ok(if info.is_some() { Outcome::Done } else { Outcome::Negative })
}

pub fn classify(args: &PolyArgs, mu_bound: usize) -> Result<Outcome> {
    let input = Input::from_args(args)?;
    dispatch!(input, classify_in(mu_bound))
}

fn classify_in<S: Printable>(input: &Input, p: &PolySpec<S>, tol: f64, mu_bound: usize) -> Result<Outcome> {
    let c = cls::classify(p, mu_bound, tol)?;
    let mut values: Vec<&S> = p.coeffs().iter().chain(c.parameters.iter().map(|(_, v)| v)).collect();
    match &c.predictor {
        Some(Predictor::Geometric { coeff, ratio, .. }) => values.extend([coeff, ratio]),
        Some(Predictor::Sine { a }) => values.push(a),
        None => {}
    }
    let order = doc_order(input, values);
    let n = order.0;
    let predictor = c.predictor.as_ref().map(|pr| match pr {
        Predictor::Geometric { coeff, ratio, shift } => doc::PredictorDoc::Geometric {
            coeff: coeff.num(n),
            ratio: ratio.num(n),
            shift: *shift,
        },
        Predictor::Sine { a } => doc::PredictorDoc::Sine { a: a.num(n) },
    });
    let doc = doc::ClassifyDoc {
        header: header("classify", input, p, order),
        case: c.case_tag.name().into(),
        psums_periodic: c.psums_periodic(),
        mu: c.mu,
        matrix_preperiod: c.matrix_preperiod,
        predicted_period: c.predicted_period,
        parameters: c
            .parameters
            .iter()
            .map(|(name, v)| doc::Param { name: name.clone(), value: v.num(n) })
            .collect(),
        predictor,
        float_verified: c.float_verified,
        note: c.note.clone(),
    };
    emit(
        input.format,
        || {
            let mut out = zeta_note(order);
            let _ = writeln!(out, "case: {}", c.case_tag);
            let verdict = if c.psums_periodic() { "eventually periodic" } else { "not eventually periodic" };
            let _ = writeln!(out, "partial sums: {verdict}");
            if let Some(mu) = c.mu {
                let _ = writeln!(out, "matrix period: {mu} (preperiod {})", c.matrix_preperiod.unwrap_or(0));
            }
            if let Some(per) = c.predicted_period {
                let _ = writeln!(out, "predicted partial-sum period: {per}");
            }
            for (name, v) in &c.parameters {
                let _ = writeln!(out, "{name} = {}", v.text(n));
            }
            match &c.predictor {
                Some(Predictor::Geometric { coeff, ratio, shift }) => {
                    let _ = writeln!(out, "S_[k] = ({}) * ({})^(k - {shift}) for k >= 2", coeff.text(n), ratio.text(n));
                }
                Some(Predictor::Sine { a }) => {
                    let _ = writeln!(
                        out,
                        "S_[k] = -(2/(3√3)) (-a√3)^k sin((k - 4)π/6) for k >= 2, a = {}",
                        a.text(n)
                    );
                }
                None => {}
            }
            if let Some(note) = &c.note {
                let _ = writeln!(out, "note: {note}");
            }
            out
        },
        &doc,
    );
    Ok(if c.psums_periodic() { Outcome::Done } else { Outcome::Negative })
}

fn root_text(r: &riordan_core::classify::RealRoot) -> String {
    match &r.exact {
        Some(q) => q.to_string(),
        None => format!("{:.6}", r.approx()),
    }
}

pub fn fmu(mu: usize, format: Format) -> Result<Outcome> {
    if mu == 0 {
        return Err(Error::InvalidInput("mu must be positive".into()));
    }
    let f = f_mu(mu);
    let roots = real_roots(&f, 1e-12);
    let doc = doc::FmuDoc {
        command: "fmu".into(),
        mu,
        coeffs: f.coeffs.iter().map(Rat::to_string).collect(),
        integer_row: f_mu_integer_row(mu).iter().map(|c| c.to_string()).collect(),
        roots: roots
            .iter()
            .map(|r| doc::RootDoc {
                exact: r.exact.as_ref().map(Rat::to_string),
                lo: r.lo.to_string(),
                hi: r.hi.to_string(),
                approx: r.approx(),
            })
            .collect(),
    };
    emit(
        format,
        || {
            let list: Vec<String> = roots.iter().map(root_text).collect();
            format!("{f}; roots: {}\n", list.join(", "))
        },
        &doc,
    );
    Ok(Outcome::Done)
}

/// Random eventually periodic sequences over `Q(ζ_6)`, expanded from their
/// generating function and detected again.
fn roundtrip_report(trials: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let elem = |rng: &mut StdRng| -> Result<Cyclo> {
        let raw: Vec<Rat> = (0..2).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
        Cyclo::new(6, &raw)
    };
    let describe = |ep: &EventualPeriod<Cyclo>| format!("preperiod {}, period {}", ep.preperiod, ep.period);
    let (mut lhs, mut rhs, mut first_mismatch) = (Vec::new(), Vec::new(), None);
    for trial in 0..trials {
        let k = rng.gen_range(0..=6);
        let n = rng.gen_range(1..=8);
        let prefix = (0..k).map(|_| elem(&mut rng)).collect::<Result<Vec<_>>>()?;
        let block = (0..n).map(|_| elem(&mut rng)).collect::<Result<Vec<_>>>()?;
        let want = EventualPeriod::new(prefix, block)?.minimized(0.0);
        let (numer, denom) = gf_from_periodic(&want);
        let seq = fps_expand_rational(&numer, &denom, 2 * k + 3 * n + 8)?;
        let got = detect_eventual_period(seq.coeffs(), 0.0);
        lhs.push(describe(&want));
        rhs.push(got.as_ref().map_or_else(|e| e.to_string(), describe));
        if first_mismatch.is_none() && got.as_ref() != Ok(&want) {
            first_mismatch = Some(trial);
        }
    }
    Ok(IdentityReport {
        identity: "roundtrip".into(),
        range: format!("{trials} trials, seed {seed}"),
        lhs,
        rhs,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

pub fn verify(suite: Suite, kmax: usize, trials: usize, seed: u64, format: Format) -> Result<Outcome> {
    if kmax < 2 {
        return Err(Error::InvalidInput("--kmax must be at least 2".into()));
    }
    let selected: &[Suite] = match suite {
        Suite::All => &[
            Suite::Lemma6,
            Suite::Lemma7,
            Suite::Lemma7b,
            Suite::Prop9,
            Suite::Corollary,
            Suite::Gf,
            Suite::Roundtrip,
        ],
        ref one => std::slice::from_ref(one),
    };
    let mut reports = Vec::new();
    for s in selected {
        reports.push(match s {
            Suite::Lemma6 => lemma6_report(kmax),
            Suite::Lemma7 => lemma7_report(kmax, Lemma7Variant::Eq3),
            Suite::Lemma7b => lemma7_report(kmax, Lemma7Variant::Eq3B),
            Suite::Prop9 => prop9_report(kmax),
            Suite::Corollary => corollary_report(kmax),
            Suite::Gf => gf_report(kmax),
            Suite::Roundtrip => roundtrip_report(trials, seed)?,
            Suite::All => unreachable!("expanded above"),
        });
    }
    let pass = reports.iter().all(|r| r.pass);
    let name = clap::ValueEnum::to_possible_value(&suite).expect("no skipped variants").get_name().to_string();
    let doc = doc::VerifyDoc { command: "verify".into(), suite: name, pass, reports };
    emit(
        format,
        || {
            let mut out = String::new();
            for r in &doc.reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let _ = write!(out, "{verdict} {} ({}, {} checks)", r.identity, r.range, r.lhs.len());
                if let Some(i) = r.first_mismatch {
                    let _ = write!(out, ": check {i} gives {} vs {}", r.lhs[i], r.rhs[i]);
                }
                out.push('\n');
            }
            out
        },
        &doc,
    );
    Ok(if pass { Outcome::Done } else { Outcome::Negative })
}

fn display(p: &Path) -> String {
    p.display().to_string()
}

pub fn plot(family: Option<&str>, args: &OptPolyArgs, out: Option<PathBuf>) -> Result<Outcome> {
    let format = args.out.format;
    match (family, &args.coeffs) {
        (Some(_), Some(_)) => Err(Error::InvalidInput("give a figure family or --coeffs, not both".into())),
        (None, None) => Err(Error::InvalidInput("give a figure family (fig1 … fig6) or --coeffs".into())),
        (Some(name), None) => {
            let fam: Family = name.parse()?;
            let dir = out.unwrap_or_else(|| PathBuf::from(fam.name()));
            let members = family_members(fam)?;
            let paths = write_members(&members, &dir)?;
            let doc = doc::PlotDoc {
                command: "plot".into(),
                target: fam.name().into(),
                files: members
                    .iter()
                    .zip(&paths)
                    .map(|(m, path)| doc::PlotFile {
                        path: display(path),
                        label: m.label.clone(),
                        preperiod: m.preperiod,
                        period: m.period,
                        vertices: m.graph.vertices.len(),
                        edges: m.graph.edges.len(),
                    })
                    .collect(),
            };
            emit(format, || plot_text(&doc), &doc);
            Ok(Outcome::Done)
        }
        (None, Some(coeffs)) => {
            let input = Input::parse(args.root_order, coeffs, args.mode, args.tol, &args.out)?;
            let path = out.unwrap_or_else(|| PathBuf::from("psums.svg"));
            dispatch!(input, plot_poly_in(&path))
        }
    }
}

fn plot_text(doc: &doc::PlotDoc) -> String {
    let mut out = String::new();
    for f in &doc.files {
        let _ = writeln!(
            out,
            "{}  {}  preperiod {}, period {}, {} vertices",
            f.path, f.label, f.preperiod, f.period, f.vertices
        );
    }
    out
}

fn plot_poly_in<S: Printable>(input: &Input, p: &PolySpec<S>, tol: f64, path: &Path) -> Result<Outcome> {
    let (ep, graph) = match graph_of_poly(p, tol) {
        Ok(found) => found,
        Err(Error::NotPeriodicWithinBudget(n)) => {
            eprintln!("partial sums not periodic within {n} terms; nothing to plot");
            return Ok(Outcome::Negative);
        }
        Err(e) => return Err(e),
    };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.into(), message: e.to_string() })?;
    }
    fs::write(path, render_svg(&graph, &RenderSpec::default()))
        .map_err(|e| Error::Io { path: path.into(), message: e.to_string() })?;
    let order = doc_order(input, p.coeffs());
    let label = join(p.coeffs(), order.0);
    let doc = doc::PlotDoc {
        command: "plot".into(),
        target: "polynomial".into(),
        files: vec![doc::PlotFile {
            path: display(path),
            label: format!("({label})"),
            preperiod: ep.preperiod,
            period: ep.period,
            vertices: graph.vertices.len(),
            edges: graph.edges.len(),
        }],
    };
    emit(input.format, || plot_text(&doc), &doc);
    Ok(Outcome::Done)
}
