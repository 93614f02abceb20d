//! Acceptance criteria, one line of output each. Runs without the libtest
//! harness so the verdict lines are always printed.
//!
//! `ACCEPTANCE_SEED` overrides the seed of the randomized round trips.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use riordan_core::circulant::{circulant_of, matrix_period_default};
use riordan_core::classify::{
    classify, f_mu, f_mu_integer_row, prop_d_family, prop_d_poly, real_roots, CaseTag, Predictor,
};
use riordan_core::exactnum::{rat, ComplexF, Cyclo, Rat};
use riordan_core::graphs::{figure_family, Family};
use riordan_core::oracles::{
    corollary_report, gf_case_b0_expand, lemma6_report, lemma7_pair, lemma7_report, prop9_report, Lemma7Variant,
};
use riordan_core::periodicity::{detect_eventual_period, gf_from_periodic, EventualPeriod};
use riordan_core::riordan::{partial_sum_column, psum_sequence, ra_matrix, PolySpec};
use riordan_core::series::fps_expand_rational;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64, d: i64) -> Cyclo {
    Cyclo::from_rat(&rat(n, d))
}

fn z(n: usize, k: i64) -> Cyclo {
    Cyclo::zeta(n, k).unwrap()
}

fn spec(c: Vec<Cyclo>) -> PolySpec<Cyclo> {
    PolySpec::new(c).unwrap()
}

fn array_reproduction() -> Check {
    let expected: [&[(i64, i64)]; 7] = [
        &[(1, 1)],
        &[(0, 1), (1, 2)],
        &[(1, 1), (-1, 2), (1, 4)],
        &[(0, 1), (1, 2), (-1, 2), (1, 8)],
        &[(1, 1), (-1, 2), (1, 2), (-3, 8), (1, 16)],
        &[(0, 1), (1, 2), (-1, 2), (1, 2), (-1, 4), (1, 32)],
        &[(1, 1), (-1, 2), (1, 2), (-1, 2), (7, 16), (-5, 32), (1, 64)],
    ];
    let t = ra_matrix(&spec(vec![q(1, 2), q(-1, 2)]), 7);
    for (n, row) in expected.iter().enumerate() {
        for k in 0..7 {
            let want = row.get(k).map_or(q(0, 1), |&(a, b)| q(a, b));
            ensure!(t.get(n, k) == want, "entry ({n}, {k}) is {} not {want}", t.get(n, k));
        }
    }
    Ok(())
}

fn partial_sum_sequences() -> Check {
    let ep = detect_eventual_period(&psum_sequence(&spec(vec![q(1, 2), q(-1, 2)]), 40).terms, 0.0)
        .map_err(|e| e.to_string())?;
    ensure!((ep.preperiod, ep.period) == (1, 2), "(a) got ({}, {})", ep.preperiod, ep.period);
    ensure!(ep.block == vec![q(1, 4), q(-1, 4)], "(a) block {:?}", ep.block);

    let p = spec(vec![q(-1, 3), q(2, 3), q(2, 3)]);
    let ep = detect_eventual_period(&psum_sequence(&p, 40).terms, 0.0).map_err(|e| e.to_string())?;
    let block = vec![q(0, 1), q(-1, 3), q(-2, 3), q(-2, 3), q(-1, 3), q(0, 1)];
    ensure!((ep.preperiod, ep.period) == (0, 6), "(b) got ({}, {})", ep.preperiod, ep.period);
    ensure!(ep.block == block, "(b) block {:?}", ep.block);

    let p = spec(vec![q(2, 3), q(-1, 3), q(2, 3)]);
    let seq = psum_sequence(&p, 60);
    let first = [(0, 1), (0, 1), (1, 3), (1, 1), (5, 3), (2, 1), (2, 1), (2, 1), (7, 3), (3, 1)];
    for (i, &(a, b)) in first.iter().enumerate() {
        ensure!(seq.terms[i] == q(a, b), "(c) term {} is {}", i + 1, seq.terms[i]);
    }
    ensure!(detect_eventual_period(&seq.terms, 0.0).is_err(), "(c) a period was reported");
    Ok(())
}

fn f_mu_table() -> Check {
    let table: [&[(i64, i64)]; 6] = [
        &[(1, 1), (-1, 1)],
        &[(1, 1), (0, 1), (-1, 1)],
        &[(1, 1), (3, 2), (-3, 2), (-1, 1)],
        &[(1, 1), (4, 1), (0, 1), (-4, 1), (-1, 1)],
        &[(1, 1), (10, 1), (10, 1), (-10, 1), (-10, 1), (-1, 1)],
        &[(0, 1), (-6, 1), (-15, 1), (0, 1), (15, 1), (6, 1)],
    ];
    for (i, row) in table.iter().enumerate() {
        let want: Vec<Rat> = row.iter().map(|&(a, b)| rat(a, b)).collect();
        ensure!(f_mu(i + 1).coeffs == want, "f_{} = {}", i + 1, f_mu(i + 1));
    }
    let ints: [&[i64]; 9] = [
        &[1, -1],
        &[1, 0, -1],
        &[2, 3, -3, -2],
        &[1, 4, 0, -4, -1],
        &[1, 10, 10, -10, -10, -1],
        &[0, 6, 15, 0, -15, -6, 0],
        &[1, -7, -42, -35, 35, 42, 7, -1],
        &[1, 0, -28, -56, 0, 56, 28, 0, -1],
        &[2, 9, -36, -168, -126, 126, 168, 36, -9, -2],
    ];
    for (i, row) in ints.iter().enumerate() {
        let want: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
        ensure!(f_mu_integer_row(i + 1) == want, "integer row {}", i + 1);
    }
    let s3 = 3f64.sqrt();
    let r4: Vec<f64> = real_roots(&f_mu(4), 1e-12).iter().map(|r| r.approx()).collect();
    let want4 = [-2.0 - s3, -1.0, -2.0 + s3, 1.0];
    ensure!(r4.len() == 4, "f_4 has {} roots", r4.len());
    for (a, b) in r4.iter().zip(want4) {
        ensure!((a - b).abs() < 1e-9, "f_4 root {a} vs {b}");
    }
    let r5: Vec<f64> = real_roots(&f_mu(5), 1e-12).iter().map(|r| r.approx()).collect();
    let want5 = [-8.74, -1.46, -0.68, -0.11, 1.0];
    ensure!(r5.len() == 5, "f_5 has {} roots", r5.len());
    for (a, b) in r5.iter().zip(want5) {
        ensure!((a - b).abs() < 0.005, "f_5 root {a:.4} vs {b}");
    }
    Ok(())
}

fn degree_three_example() -> Check {
    let cls = prop_d_family(3, &q(1, 4)).map_err(|e| e.to_string())?;
    ensure!(cls.predicted_period == Some(4), "predicted {:?}", cls.predicted_period);
    let ep = detect_eventual_period(&psum_sequence(&prop_d_poly(3, &q(1, 4)).unwrap(), 24).terms, 0.0)
        .map_err(|e| e.to_string())?;
    ensure!(ep.block == vec![q(0, 1), q(-1, 2), q(1, 2), q(0, 1)], "block {:?}", ep.block);

    Ok(())
}

/// The 20-term block for `a = ζ₅³/4` as printed in the reference list.
fn degree_three_reference_block() -> Vec<Cyclo> {
    let x = |k: i64, s: i64| &q(s, 2) * &z(10, k);
    let o = q(0, 1);
    vec![
        o.clone(), x(2, -1), x(3, -1), o.clone(), o.clone(), x(1, 1), x(2, 1), o.clone(),
        o.clone(), x(0, -1), x(1, -1), o.clone(), o.clone(), x(4, -1), x(0, 1), o.clone(),
        o.clone(), x(6, 1), x(8, 1), o,
    ]
}

fn degree_three_measured() -> std::result::Result<EventualPeriod<Cyclo>, String> {
    let a = &q(1, 4) * &z(5, 3);
    let cls = prop_d_family(3, &a).map_err(|e| e.to_string())?;
    ensure!(cls.predicted_period == Some(20), "predicted {:?}", cls.predicted_period);
    let seq = psum_sequence(&prop_d_poly(3, &a).unwrap(), 60);
    let ep = detect_eventual_period(&seq.terms, 0.0).map_err(|e| e.to_string())?;
    ensure!((ep.preperiod, ep.period) == (0, 20), "measured ({}, {})", ep.preperiod, ep.period);
    Ok(ep)
}

fn degree_three_example_complex() -> Check {
    let ep = degree_three_measured()?;
    let diff: Vec<String> = degree_three_reference_block()
        .iter()
        .zip(&ep.block)
        .enumerate()
        .filter(|(_, (want, got))| want != got)
        .map(|(i, (want, got))| {
            let lit = |c: &Cyclo| c.embed(10).map(|e| e.to_literal()).unwrap_or_else(|e| e.to_string());
            format!("k = {}: listed {}, measured {} (z = ζ₁₀)", i + 1, lit(want), lit(got))
        })
        .collect();
    ensure!(diff.is_empty(), "{}", diff.join("; "));
    Ok(())
}

/// The reference list with entries 18 and 19 replaced by `ξ³/2` and `ξ⁴/2`,
/// the values forced by the constant ratio `ξ` inside every nonzero pair and
/// confirmed in floating point. Guards the expected failure above.
fn degree_three_corrected() -> Check {
    let ep = degree_three_measured()?;
    let mut block = degree_three_reference_block();
    block[17] = &q(1, 2) * &z(10, 3);
    block[18] = &q(1, 2) * &z(10, 4);
    ensure!(ep.block == block, "measured block {:?}", ep.block);
    let p = prop_d_poly(3, &(&q(1, 4) * &z(5, 3))).unwrap().to_float();
    for (k, v) in psum_sequence(&p, 40).terms.iter().enumerate() {
        ensure!((v - block[k % 20].to_complex()).norm() < 1e-9, "float route at k = {}", k + 1);
    }
    Ok(())
}

fn degree_three_example_all() -> Check {
    degree_three_example()?;
    degree_three_example_complex()
}

fn order_of_matrix() -> Check {
    for d in 2..=7usize {
        let p = prop_d_poly(d, &q(1, d as i64 + 1)).unwrap();
        let info = matrix_period_default(&circulant_of(&p)).map_err(|e| e.to_string())?;
        let want = if d % 2 == 1 { d + 1 } else { 2 * (d + 1) };
        ensure!(
            (info.preperiod, info.period) == (0, want),
            "d = {d}: ({}, {}) instead of (0, {want})",
            info.preperiod,
            info.period
        );
    }
    Ok(())
}

fn identity_suites() -> Check {
    for rep in [
        lemma6_report(30),
        lemma7_report(30, Lemma7Variant::Eq3),
        lemma7_report(30, Lemma7Variant::Eq3B),
        prop9_report(25),
        corollary_report(30),
    ] {
        ensure!(rep.pass, "{} fails at position {:?}", rep.identity, rep.first_mismatch);
    }
    let (lhs, _) = lemma7_pair(3, 4, Lemma7Variant::Eq3);
    ensure!(lhs == &(&q(3, 1) * &z(3, 1)) - &q(2, 1), "i = 4, k = 3 gives {lhs}");
    Ok(())
}

fn linear_family() -> Check {
    for s in 1..=14 {
        let a = &q(-1, 2) * &z(14, s);
        let p = spec(vec![a.clone(), -a.clone()]);
        let seq = psum_sequence(&p, 30);
        let ratio = &a * &q(-2, 1);
        for k in 2..=30usize {
            let want = &(&a * &a) * &ratio.pow(k as u64 - 2);
            ensure!(seq.terms[k - 1] == want, "s = {s}, k = {k}");
        }
        let cls = classify(&p, 64, 0.0).map_err(|e| e.to_string())?;
        ensure!(cls.case_tag == CaseTag::Linear2, "s = {s} classified {}", cls.case_tag);
    }
    for (a, b) in [(q(1, 2), q(1, 2)), (q(1, 2), q(1, 3)), (q(1, 3), q(-1, 2))] {
        let seq = psum_sequence(&spec(vec![a.clone(), b.clone()]), 60);
        ensure!(detect_eventual_period(&seq.terms, 0.0).is_err(), "a = {a}, b = {b} reported a period");
    }
    Ok(())
}

fn quadratic_closed_forms() -> Check {
    let xi = z(3, 1);
    let xi2 = z(3, 2);
    for mu in [1usize, 3, 7] {
        for s in 0..mu as i64 {
            let unit = z(mu, s);
            for (tag, a, c) in [
                (CaseTag::QuadB1, &unit * &(&q(3, 1) * &xi).inv().unwrap(), [xi2.clone(), xi.clone()]),
                (CaseTag::QuadB2, &unit * &(&q(3, 1) * &xi2).inv().unwrap(), [xi.clone(), xi2.clone()]),
            ] {
                let p = spec(vec![a.clone(), &a * &c[0], &a * &c[1]]);
                let cls = classify(&p, 64, 0.0).map_err(|e| e.to_string())?;
                ensure!(cls.case_tag == tag, "μ = {mu}, s = {s}: {} instead of {tag}", cls.case_tag);
                let pred = cls.predictor.as_ref().ok_or("no predictor")?;
                for k in 2..=3 * mu + 2 {
                    ensure!(pred.eval(k) == partial_sum_column(&p, k), "{tag} μ = {mu}, s = {s}, k = {k}");
                }
            }
        }
    }
    let a = ComplexF::new(1.0 / 3f64.sqrt(), 0.0);
    let gf = gf_case_b0_expand(&a, 24).map_err(|e| e.to_string())?;
    let sine = Predictor::Sine { a };
    for (j, v) in gf.coeffs().iter().enumerate() {
        ensure!((v - sine.eval(j + 2)).norm() < 1e-9, "float sine form at k = {}", j + 2);
    }
    let a = q(1, 3);
    let p = spec(vec![a.clone(), q(0, 1), -a.clone()]);
    let gf = gf_case_b0_expand(&a, 24).map_err(|e| e.to_string())?;
    let sine = Predictor::Sine { a };
    for (j, v) in gf.coeffs().iter().enumerate() {
        ensure!(*v == partial_sum_column(&p, j + 2), "series at k = {}", j + 2);
        ensure!(*v == sine.eval(j + 2), "exact sine form at k = {}", j + 2);
    }
    Ok(())
}

fn gf_round_trips() -> Check {
    let seed = std::env::var("ACCEPTANCE_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(20_240_607u64);
    let mut rng = StdRng::seed_from_u64(seed);
    let elem = |rng: &mut StdRng| {
        let raw: Vec<Rat> = (0..2).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
        Cyclo::new(6, &raw).unwrap()
    };
    for trial in 0..200 {
        let k = rng.gen_range(0..=6);
        let n = rng.gen_range(1..=8);
        let prefix: Vec<Cyclo> = (0..k).map(|_| elem(&mut rng)).collect();
        let block: Vec<Cyclo> = (0..n).map(|_| elem(&mut rng)).collect();
        let ep = EventualPeriod::new(prefix, block).unwrap();
        let (numer, denom) = gf_from_periodic(&ep);
        let len = 2 * k + 3 * n + 8;
        let seq = fps_expand_rational(&numer, &denom, len).map_err(|e| e.to_string())?;
        let found = detect_eventual_period(seq.coeffs(), 0.0).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure!(found == ep.minimized(0.0), "trial {trial} (seed {seed}): ({k}, {n}) came back as ({}, {})", found.preperiod, found.period);
    }
    Ok(())
}

fn graph_emission() -> Check {
    let base = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (fam, want) in [(Family::Fig1, Some(8)), (Family::Fig2, Some(7)), (Family::Fig3, Some(7)), (Family::Fig6, Some(3)), (Family::Fig4, None), (Family::Fig5, None)] {
        let one = figure_family(fam, &base.path().join("one")).map_err(|e| e.to_string())?;
        let two = figure_family(fam, &base.path().join("two")).map_err(|e| e.to_string())?;
        if let Some(w) = want {
            ensure!(one.len() == w, "{} wrote {} files, expected {w}", fam.name(), one.len());
        }
        ensure!(!one.is_empty(), "{} wrote nothing", fam.name());
        for (x, y) in one.iter().zip(&two) {
            let a = std::fs::read(x).map_err(|e| e.to_string())?;
            let b = std::fs::read(y).map_err(|e| e.to_string())?;
            ensure!(a == b, "{} differs between runs", x.display());
            let text = String::from_utf8(a).map_err(|e| e.to_string())?;
            roxmltree::Document::parse(&text).map_err(|e| format!("{}: {e}", x.display()))?;
        }
    }
    for m in riordan_core::graphs::family_members(Family::Fig1).map_err(|e| e.to_string())? {
        for v in m.graph.vertices.iter().filter(|v| v.norm() > 1e-12) {
            ensure!((v.norm() - 0.25).abs() < 1e-9, "{}: vertex {v} off the circle", m.label);
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("array reproduction", array_reproduction),
        ("partial-sum sequences", partial_sum_sequences),
        ("f_mu table, integer rows and roots", f_mu_table),
        ("degree-3 example", degree_three_example_all),
        ("matrix order for a = 1/(d+1)", order_of_matrix),
        ("identity suites", identity_suites),
        ("linear family, mu = 14", linear_family),
        ("quadratic closed forms", quadratic_closed_forms),
        ("generating-function round trips", gf_round_trips),
        ("graph emission", graph_emission),
    ];
    // Criteria whose reference data is known to be wrong. Each keeps its
    // literal comparison and must fail it; the paired guard must pass. A
    // known failure that starts passing is reported as unexpected.
    let known: [(usize, &str, fn() -> Check); 1] = [(
        4,
        "reference entries 18 and 19 break the ratio-ξ pattern; measured block matches the corrected list",
        degree_three_corrected,
    )];
    let run = |check: fn() -> Check| catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
    let mut unexpected = 0;
    let mut expected = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        let start = Instant::now();
        let outcome = run(*check);
        let secs = start.elapsed().as_secs_f64();
        let known_entry = known.iter().find(|(k, _, _)| *k == id);
        match (outcome, known_entry) {
            (Ok(()), None) => println!("PASS {id:>2} {name} ({secs:.2}s)"),
            (Ok(()), Some(_)) => {
                unexpected += 1;
                println!("FAIL {id:>2} {name} ({secs:.2}s): listed as a known failure but now passes");
            }
            (Err(why), None) => {
                unexpected += 1;
                println!("FAIL {id:>2} {name} ({secs:.2}s): {why}");
            }
            (Err(why), Some((_, reason, guard))) => match run(*guard) {
                Ok(()) => {
                    expected += 1;
                    println!("FAIL {id:>2} {name} ({secs:.2}s, known: {reason}): {why}");
                }
                Err(g) => {
                    unexpected += 1;
                    println!("FAIL {id:>2} {name} ({secs:.2}s): {why}; guard also fails: {g}");
                }
            },
        }
    }
    let passed = criteria.len() - unexpected - expected;
    println!("acceptance: {passed} passed, {expected} known failures, {unexpected} unexpected failures");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
