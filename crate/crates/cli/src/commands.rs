use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};

use dirdom::bounds::{bound_report, BoundReport, ReportOptions, Satisfied};
use dirdom::domination::GammaOptions;
use dirdom::harness::{
    run_partition, schuette as schuette_report, tournament_experiment, verify as run_verify,
    ExtractorKind, Theorem, Universe, VerifyConfig,
};
use dirdom::partition::PartitionCertificate;

use crate::args::{
    ExtractorArg, GraphArgs, PartitionArgs, RunArgs, SchuetteArgs, TheoremArg, TournamentArgs,
    VerifyArgs,
};
use crate::input::{read_graphs, read_instances};
use crate::Failure;

fn emit(run: &RunArgs, text: &str) -> Result<(), Failure> {
    match &run.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

fn workers(run: &RunArgs) -> usize {
    run.workers as usize
}

fn satisfied(s: Satisfied) -> &'static str {
    match s {
        Satisfied::True => "true",
        Satisfied::False => "false",
        Satisfied::Unknown => "unknown",
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn report_text(r: &BoundReport, out: &mut String) {
    let inv = &r.invariants;
    let ex = &r.exact;
    let _ = writeln!(
        out,
        "graph {} (n={}, m={})",
        r.graph.graph6.as_deref().unwrap_or("-"),
        r.graph.n,
        r.graph.m
    );
    let _ = writeln!(
        out,
        "  alpha={} matching={} chi={} gamma={} delta={} Delta={} degeneracy={}",
        inv.alpha,
        inv.matching,
        opt(inv.chi),
        opt(inv.gamma),
        inv.min_degree,
        inv.max_degree,
        inv.degeneracy
    );
    let _ = writeln!(
        out,
        "  Gamma_d={} Gamma_(d,{})={} Gamma_d(G,{})={} Gamma_d(complement)={}",
        opt(ex.gamma_d),
        ex.r,
        opt(ex.gamma_dr),
        ex.d,
        opt(ex.gamma_d_dist),
        opt(ex.gamma_d_complement)
    );
    for b in &r.bounds {
        let value = b.value.map_or_else(|| "-".to_string(), |v| format!("{v:.6}"));
        let _ = writeln!(
            out,
            "  {:<36} applicable={:<5} value={:<12} satisfied={}",
            b.name,
            b.applicable,
            value,
            satisfied(b.satisfied)
        );
    }
}

/// `exact` and `bounds`: one report per input graph, in input order.
pub fn exact(a: &GraphArgs, sweep: bool) -> Result<bool, Failure> {
    if a.r == 0 || a.d == 0 {
        return Err(Failure::usage("--r and --d must be at least 1"));
    }
    let graphs = read_graphs(&a.input)?;
    let opts = ReportOptions {
        r: a.r,
        d: a.d,
        gamma: GammaOptions {
            cap: if sweep { a.run.max_orientations } else { 0 },
            workers: workers(&a.run),
        },
    };
    let mut out = String::new();
    let mut clean = true;
    for g in &graphs {
        let report = bound_report(g, &opts);
        clean &= report.violations().next().is_none();
        if a.run.json {
            out.push_str(&json(&report));
            out.push('\n');
        } else {
            report_text(&report, &mut out);
        }
    }
    emit(&a.run, &out)?;
    Ok(clean)
}

fn theorem(t: TheoremArg) -> Theorem {
    match t {
        TheoremArg::Chain => Theorem::Chain,
        TheoremArg::Main => Theorem::Main,
        TheoremArg::Peel => Theorem::Peel,
        TheoremArg::NgUpper => Theorem::NgUpper,
        TheoremArg::Distance => Theorem::Distance,
        TheoremArg::Rdom => Theorem::Rdom,
        TheoremArg::Degenerate => Theorem::Degenerate,
        TheoremArg::K1m => Theorem::K1m,
        TheoremArg::Bounds => Theorem::Bounds,
    }
}

pub fn verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let universe = match a.samples {
        Some(samples) => Universe::Sampled {
            n: a.n,
            samples,
            seed: a.seed,
            p: a.p,
        },
        None => Universe::Exhaustive { n: a.n },
    };
    let mut cfg = VerifyConfig::new(theorem(a.theorem), universe);
    cfg.r = a.r;
    cfg.d = a.d;
    cfg.gamma.cap = a.run.max_orientations;
    cfg.workers = workers(&a.run);
    cfg.allow_large = a.allow_large;
    let report = run_verify(&cfg)?;
    eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    let text = if a.run.json {
        format!("{}\n", json(&report))
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "theorem: {}", report.theorem);
        let _ = writeln!(s, "universe: {}", report.universe);
        let _ = writeln!(s, "checked: {}", report.checked);
        let _ = writeln!(s, "violations: {}", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(s, "  #{} {}: {}", v.index, v.graph6, v.detail);
        }
        if let Some(ng) = report.ng {
            let _ = writeln!(s, "Gamma_d(G) + Gamma_d(complement): min {}, max {}", ng.min, ng.max);
        }
        let _ = writeln!(s, "result: {}", if report.pass { "PASS" } else { "FAIL" });
        s
    };
    emit(&a.run, &text)?;
    Ok(report.pass)
}

fn certificate_text(i: usize, c: &PartitionCertificate, out: &mut String) {
    let parts: Vec<String> = c.parts.iter().map(|p| p.to_string()).collect();
    let _ = writeln!(
        out,
        "instance {i}: extractor={} t={} parts={} bound={:.6} ceiling={}",
        c.extractor,
        c.threshold,
        c.part_count,
        c.bound,
        c.bound_ceiling()
    );
    let _ = writeln!(out, "  {}", parts.join(" "));
}

pub fn partition(a: &PartitionArgs) -> Result<bool, Failure> {
    let kind = match a.extractor {
        ExtractorArg::Independence => ExtractorKind::Independence,
        ExtractorArg::Outdegree => ExtractorKind::Outdegree,
        ExtractorArg::Degenerate => ExtractorKind::Degenerate,
    };
    let param = match kind {
        ExtractorKind::Outdegree => a.alpha,
        ExtractorKind::Degenerate => a.d,
        ExtractorKind::Independence => None,
    };
    let mut out = String::new();
    let mut first_error: Option<Failure> = None;
    let mut failed = 0;
    for (i, inst) in read_instances(&a.input)?.into_iter().enumerate() {
        let d = inst.into_digraph();
        match run_partition(&d, kind, param) {
            Ok(c) => {
                if a.run.json {
                    out.push_str(&json(&c));
                    out.push('\n');
                } else {
                    certificate_text(i, &c, &mut out);
                }
            }
            Err(e) => {
                eprintln!("instance {i}: {e}");
                failed += 1;
                first_error.get_or_insert_with(|| e.into());
            }
        }
    }
    emit(&a.run, &out)?;
    match first_error {
        None => Ok(true),
        Some(f) => Err(Failure {
            message: format!("{failed} instance(s) failed; first: {}", f.message),
            ..f
        }),
    }
}

pub fn tournament(a: &TournamentArgs) -> Result<bool, Failure> {
    let run = tournament_experiment(a.n, a.samples, a.seed, a.include_qr7, workers(&a.run))?;
    let text = if a.run.json {
        format!("{}\n", json(&run))
    } else {
        run.to_csv()
    };
    emit(&a.run, &text)?;
    Ok(run.summary.bound_violations == 0)
}

pub fn schuette(a: &SchuetteArgs) -> Result<bool, Failure> {
    let r = schuette_report(a.k)?;
    let text = if a.run.json {
        format!("{}\n", json(&r))
    } else {
        let mut s = format!(
            "k={} witness on n={} vertices: {}/{} sets dominated, {}\n",
            r.k,
            r.n,
            r.dominated,
            r.checked,
            if r.verified { "verified" } else { "NOT verified" }
        );
        for line in &r.trace {
            let _ = writeln!(s, "  {line}");
        }
        s
    };
    emit(&a.run, &text)?;
    Ok(r.verified)
}
