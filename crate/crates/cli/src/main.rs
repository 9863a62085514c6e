//! Command line front end: colouring checks and enumeration, the closure and
//! its verdict, motion synthesis, verification, sampling and export.
//!
//! Exit codes: 0 success or a positive verdict, 1 a negative verdict,
//! 2 an error, 3 a search truncated by a cap.

mod catalog;
mod document;
mod export;

use anyhow::{anyhow, bail, Context, Result};
use document::{format_decimal, FlexDocument, GraphDocument};
use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use symflex_core::closure::{gold_closure, necessity_verdict, ClosureError, NecessityVerdict};
use symflex_core::colourings::{
    classify_rs, conjugate, enumerate_nac, enumerate_pseudo_rs, is_cartesian, is_nac,
    is_pseudo_rs, Budget, CartesianVerdict, Colour, EnumerateOptions, NacVerdict, RsVerdict,
    ThreeColouring, TwoColour, TwoColouring,
};
use symflex_core::flexes::{
    double_flex, grid_flex, sample_flex, verify_flex, walkindep_flex, DoubleOptions, FlexError,
    TolProfile,
};
use symflex_core::frameworks::{
    angle_preserving_classes, decide_tp_flexibility, noninvariant_apc, TpVerdict,
};
use symflex_core::SymmetricGraph;

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_TRUNCATED: u8 = 3;

struct Options {
    positional: Vec<String>,
    flags: BTreeMap<String, String>,
    switches: Vec<String>,
    budget: Budget,
    seed: u64,
    tol: f64,
    json: bool,
}

const VALUE_FLAGS: &[&str] = &[
    "--seed",
    "--cap-cycles",
    "--budget",
    "--tol",
    "--colouring",
    "--colouring2",
    "--pivot",
    "--k",
    "--m",
    "--n",
    "--frames",
    "--samples",
    "--csv",
    "--svg",
];

fn parse_args(args: &[String]) -> Result<Options> {
    let mut positional = Vec::new();
    let mut flags = BTreeMap::new();
    let mut switches = Vec::new();
    let mut it = args.iter().peekable();
    while let Some(arg) = it.next() {
        if VALUE_FLAGS.contains(&arg.as_str()) {
            let value = it
                .next()
                .ok_or_else(|| anyhow!("flag {arg} needs a value"))?;
            flags.insert(arg.clone(), value.clone());
        } else if let Some(rest) = arg.strip_prefix("--") {
            switches.push(rest.to_owned());
        } else {
            positional.push(arg.clone());
        }
    }
    let mut budget = Budget::default();
    if let Ok(env_budget) = std::env::var("SYMFLEX_BUDGET") {
        budget.max_orbits = env_budget
            .parse()
            .map_err(|_| anyhow!("SYMFLEX_BUDGET must be an integer"))?;
    }
    if let Some(v) = flags.get("--budget") {
        budget.max_orbits = v.parse().context("--budget")?;
    }
    budget.max_nac_edges = budget.max_orbits.max(budget.max_nac_edges);
    if let Some(v) = flags.get("--cap-cycles") {
        budget.cycle_cap = v.parse().context("--cap-cycles")?;
    }
    let seed = flags.get("--seed").map_or(Ok(0), |v| v.parse()).context("--seed")?;
    let tol = flags.get("--tol").map_or(Ok(1e-9), |v| v.parse()).context("--tol")?;
    let json = switches.iter().any(|s| s == "json");
    Ok(Options { positional, flags, switches, budget, seed, tol, json })
}

impl Options {
    fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    fn flag(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn read_input(&self, index: usize) -> Result<String> {
        match self.positional.get(index).map(String::as_str) {
            None | Some("-") => {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
                Ok(buf)
            }
            Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        }
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() || args[0] == "--help" || args[0] == "help" {
        print_usage();
        return ExitCode::from(EXIT_TRUE);
    }
    let opts = match parse_args(&args) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    match run(&opts) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

/// Restore the default broken-pipe behaviour so `symflex ... | head` ends
/// quietly instead of panicking mid-print.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn print_usage() {
    println!(
        "symflex: mirror-symmetric flexibility analysis for planar bar-joint frameworks

usage: symflex <command> [arguments] [flags]

commands:
  check nac|pseudo-rs|rs|cartesian <file> --colouring NAME
  enumerate nac|pseudo-rs|rs <file> [--up-to-conjugation]
  closure <file>
  verdict <file>
  apc <file>
  flex grid <file> --colouring NAME
  flex double <file> --colouring NAME --colouring2 NAME [--pivot V] [--force]
  flex walkindep <file> --colouring NAME
  tp-decide <file>
  verify [flexfile] [--samples N]
  sample --n N [flexfile]
  export (--csv FILE | --svg DIR) --frames N [flexfile]
  fixtures <name> [--k N] [--m N] [--n N] [--brace] [--seed N] [variant]

global flags: --seed N  --cap-cycles N  --budget N  --tol X  --json
environment:  SYMFLEX_BUDGET overrides the enumeration budget
exit codes:   0 true/success, 1 false/negative, 2 error, 3 truncated"
    );
}

fn load_graph(opts: &Options, index: usize) -> Result<(GraphDocument, SymmetricGraph)> {
    let text = opts.read_input(index)?;
    let doc = GraphDocument::parse(&text)?;
    let graph = doc.validate()?;
    Ok((doc, graph))
}

fn named_colouring(
    opts: &Options,
    doc: &GraphDocument,
    g: &SymmetricGraph,
    flag: &str,
) -> Result<(String, ThreeColouring)> {
    let name = opts
        .flag(flag)
        .ok_or_else(|| anyhow!("missing {flag} NAME"))?;
    Ok((name.to_owned(), doc.colouring(g, name)?))
}

fn run(opts: &Options) -> Result<u8> {
    let command = opts.positional.first().map(String::as_str).unwrap_or("");
    match command {
        "check" => run_check(opts),
        "enumerate" => run_enumerate(opts),
        "closure" => run_closure(opts),
        "verdict" => run_verdict(opts),
        "apc" => run_apc(opts),
        "flex" => run_flex(opts),
        "tp-decide" => run_tp_decide(opts),
        "verify" => run_verify(opts),
        "sample" => run_sample(opts),
        "export" => run_export(opts),
        "fixtures" => run_fixtures(opts),
        other => bail!("unknown command {other:?}; run symflex --help"),
    }
}

fn emit_json(value: serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("json value"));
}

fn two_colouring(delta: &ThreeColouring) -> Result<TwoColouring> {
    delta
        .0
        .iter()
        .map(|&c| match c {
            Colour::Red => Ok(TwoColour::Red),
            Colour::Blue => Ok(TwoColour::Blue),
            Colour::Gold => Err(anyhow!("colouring has gold edges; not a two-colouring")),
        })
        .collect::<Result<Vec<_>>>()
        .map(TwoColouring)
}

fn run_check(opts: &Options) -> Result<u8> {
    let kind = opts
        .positional
        .get(1)
        .ok_or_else(|| anyhow!("check needs a kind: nac|pseudo-rs|rs|cartesian"))?
        .as_str();
    let (doc, g) = load_graph(opts, 2)?;
    let (name, delta) = named_colouring(opts, &doc, &g, "--colouring")?;
    let (status, detail, code) = match kind {
        "nac" => {
            let two = two_colouring(&delta)?;
            match is_nac(&g, &two) {
                NacVerdict::Nac => ("nac".to_owned(), String::new(), EXIT_TRUE),
                NacVerdict::NotSurjective => {
                    ("not-nac".to_owned(), "missing a colour".to_owned(), EXIT_FALSE)
                }
                NacVerdict::AlmostCycle(cycle) => (
                    "not-nac".to_owned(),
                    format!("witness cycle {}", cycle_names(&g, &cycle)),
                    EXIT_FALSE,
                ),
            }
        }
        "pseudo-rs" => match is_pseudo_rs(&g, &delta) {
            Ok(()) => ("pseudo-rs".to_owned(), String::new(), EXIT_TRUE),
            Err(reason) => ("not-pseudo-rs".to_owned(), format!("{reason:?}"), EXIT_FALSE),
        },
        "rs" => {
            // certificates: colourings shipped in the document first, the
            // full enumeration only when still undecided
            let mut pool: Vec<ThreeColouring> = Vec::new();
            if let Some(cols) = &doc.colourings {
                for key in cols.keys() {
                    let d = doc.colouring(&g, key)?;
                    if is_pseudo_rs(&g, &d).is_ok() {
                        pool.push(conjugate(&g, &d));
                        pool.push(d);
                    }
                }
            }
            let mut verdict = classify_rs(&g, &delta, Some(&pool), &opts.budget)?;
            if matches!(verdict, RsVerdict::PseudoRsOnly(_)) {
                verdict = classify_rs(&g, &delta, None, &opts.budget)?;
            }
            match verdict {
                RsVerdict::RsNoCycle => ("rs-no-cycle".to_owned(), String::new(), EXIT_TRUE),
                RsVerdict::RsCertified(certs) => (
                    "rs-certified".to_owned(),
                    format!("{} cycle(s) certified", certs.len()),
                    EXIT_TRUE,
                ),
                RsVerdict::PseudoRsOnly(cycle) => (
                    "pseudo-rs-only".to_owned(),
                    format!("uncertified cycle {}", cycle_names(&g, &cycle)),
                    EXIT_FALSE,
                ),
                RsVerdict::NotPseudoRs(reason) => {
                    ("not-pseudo-rs".to_owned(), format!("{reason:?}"), EXIT_FALSE)
                }
                RsVerdict::UnknownTruncated => {
                    ("unknown-truncated".to_owned(), String::new(), EXIT_TRUNCATED)
                }
            }
        }
        "cartesian" => {
            if let Err(reason) = is_pseudo_rs(&g, &delta) {
                ("not-pseudo-rs".to_owned(), format!("{reason:?}"), EXIT_FALSE)
            } else {
                match is_cartesian(&g, &delta) {
                    CartesianVerdict::Cartesian => {
                        ("cartesian".to_owned(), String::new(), EXIT_TRUE)
                    }
                    CartesianVerdict::NotCartesian(u, v) => (
                        "not-cartesian".to_owned(),
                        format!("witness pair {}-{}", g.vertex_name(u), g.vertex_name(v)),
                        EXIT_FALSE,
                    ),
                }
            }
        }
        other => bail!("unknown check kind {other:?}"),
    };
    if opts.json {
        emit_json(serde_json::json!({
            "check": kind,
            "colouring": name,
            "status": status,
            "detail": detail,
        }));
    } else if detail.is_empty() {
        println!("{status}");
    } else {
        println!("{status}: {detail}");
    }
    Ok(code)
}

fn cycle_names(g: &SymmetricGraph, cycle: &[u32]) -> String {
    cycle
        .iter()
        .map(|&v| g.vertex_name(v))
        .collect::<Vec<_>>()
        .join("-")
}

fn run_enumerate(opts: &Options) -> Result<u8> {
    let kind = opts
        .positional
        .get(1)
        .ok_or_else(|| anyhow!("enumerate needs a kind: nac|pseudo-rs|rs"))?
        .as_str();
    let (_, g) = load_graph(opts, 2)?;
    let quotient = opts.switch("up-to-conjugation");
    let mut truncated = false;
    let rendered: Vec<BTreeMap<String, String>> = match kind {
        "nac" => enumerate_nac(&g, quotient, &opts.budget)?
            .into_iter()
            .map(|two| {
                (0..g.edge_count())
                    .map(|e| {
                        let colour = match two.0[e] {
                            TwoColour::Red => "red",
                            TwoColour::Blue => "blue",
                        };
                        (g.edge_key(e), colour.to_owned())
                    })
                    .collect()
            })
            .collect(),
        "pseudo-rs" | "rs" => {
            let all = enumerate_pseudo_rs(
                &g,
                &EnumerateOptions { up_to_conjugation: quotient, ..Default::default() },
                &opts.budget,
            )?;
            let kept: Vec<ThreeColouring> = if kind == "rs" {
                let pool = enumerate_pseudo_rs(&g, &EnumerateOptions::default(), &opts.budget)?;
                let mut kept = Vec::new();
                for delta in all {
                    match classify_rs(&g, &delta, Some(&pool), &opts.budget)? {
                        RsVerdict::RsNoCycle | RsVerdict::RsCertified(_) => kept.push(delta),
                        RsVerdict::UnknownTruncated => truncated = true,
                        _ => {}
                    }
                }
                kept
            } else {
                all
            };
            kept.iter()
                .map(|delta| {
                    (0..g.edge_count())
                        .map(|e| (g.edge_key(e), delta.get(e).name().to_owned()))
                        .collect()
                })
                .collect()
        }
        other => bail!("unknown enumerate kind {other:?}"),
    };
    if opts.json {
        emit_json(serde_json::json!({
            "kind": kind,
            "up_to_conjugation": quotient,
            "count": rendered.len(),
            "truncated": truncated,
            "colourings": rendered,
        }));
    } else {
        println!("count: {}", rendered.len());
        for (i, entries) in rendered.iter().enumerate() {
            println!("# {i}");
            for (key, colour) in entries {
                println!("{key}: {colour}");
            }
        }
        if truncated {
            println!("truncated: some classifications hit the cycle cap");
        }
    }
    Ok(if truncated { EXIT_TRUNCATED } else { EXIT_TRUE })
}

fn closure_error_code(e: &ClosureError) -> u8 {
    match e {
        ClosureError::Truncated => EXIT_TRUNCATED,
        _ => EXIT_ERROR,
    }
}

fn run_closure(opts: &Options) -> Result<u8> {
    let (_, g) = load_graph(opts, 1)?;
    let trace = match gold_closure(&g, &opts.budget) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(closure_error_code(&e));
        }
    };
    if trace.vacuous {
        eprintln!("warning: some stage has no certified colouring; the closure is vacuous there");
    }
    let stages: Vec<serde_json::Value> = trace
        .stages
        .iter()
        .map(|stage| {
            serde_json::json!({
                "edges": stage.graph.edge_count(),
                "added": stage
                    .added
                    .iter()
                    .map(|(a, b)| vec![a.clone(), b.clone()])
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let final_doc = GraphDocument::from_graph(trace.final_graph(), None, None);
    emit_json(serde_json::json!({
        "vacuous": trace.vacuous,
        "stages": stages,
        "final": serde_json::to_value(&final_doc).expect("document"),
    }));
    Ok(EXIT_TRUE)
}

fn run_verdict(opts: &Options) -> Result<u8> {
    let (_, g) = load_graph(opts, 1)?;
    let verdict = match necessity_verdict(&g, &opts.budget) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(closure_error_code(&e));
        }
    };
    let (status, code, extra) = match &verdict {
        NecessityVerdict::NoRs => ("no-rs-colouring", EXIT_FALSE, serde_json::json!({})),
        NecessityVerdict::ClosureNoRs { trace } => (
            "closure-has-no-rs-colouring",
            EXIT_FALSE,
            serde_json::json!({ "added": trace.added_edges() }),
        ),
        NecessityVerdict::HasRs { sample, trace, all_classes, active_candidates } => (
            "has-rs-colouring",
            EXIT_TRUE,
            serde_json::json!({
                "classes_up_to_conjugation": all_classes.len(),
                "restriction_candidates": active_candidates.len(),
                "closure_added": trace.added_edges(),
                "sample": (0..g.edge_count())
                    .map(|e| (g.edge_key(e), sample.get(e).name().to_owned()))
                    .collect::<BTreeMap<_, _>>(),
            }),
        ),
    };
    if opts.json {
        let mut value = serde_json::json!({ "status": status });
        if let (Some(obj), Some(add)) = (value.as_object_mut(), extra.as_object()) {
            for (k, v) in add {
                obj.insert(k.clone(), v.clone());
            }
        }
        emit_json(value);
    } else {
        println!("{status}");
        if let NecessityVerdict::HasRs { all_classes, active_candidates, .. } = &verdict {
            println!(
                "classes up to conjugation: {}, of which restriction candidates: {}",
                all_classes.len(),
                active_candidates.len()
            );
        }
    }
    Ok(code)
}

fn run_apc(opts: &Options) -> Result<u8> {
    let (_, g) = load_graph(opts, 1)?;
    let apcs = angle_preserving_classes(&g);
    let classes: Vec<Vec<String>> = apcs
        .classes
        .iter()
        .map(|class| class.iter().map(|&e| g.edge_key(e)).collect())
        .collect();
    let invariant: Vec<bool> = (0..classes.len()).map(|c| apcs.is_invariant(c)).collect();
    if opts.json {
        emit_json(serde_json::json!({
            "classes": classes,
            "invariant": invariant,
            "noninvariant_class": noninvariant_apc(&g),
        }));
    } else {
        for (i, class) in classes.iter().enumerate() {
            println!(
                "class {i}{}: {}",
                if invariant[i] { " (invariant)" } else { "" },
                class.join(" ")
            );
        }
    }
    Ok(EXIT_TRUE)
}

fn flex_error_code(e: &FlexError) -> u8 {
    match e {
        FlexError::NotRsNoCycle(_)
        | FlexError::ConditionsFailed(_)
        | FlexError::ZeroLengthEdge(..)
        | FlexError::NotWalkIndependent(_)
        | FlexError::NotCartesian(..) => EXIT_FALSE,
        FlexError::TruncatedSearch => EXIT_TRUNCATED,
        _ => EXIT_ERROR,
    }
}

fn run_flex(opts: &Options) -> Result<u8> {
    let kind = opts
        .positional
        .get(1)
        .ok_or_else(|| anyhow!("flex needs a kind: grid|double|walkindep"))?
        .as_str();
    let (doc, g) = load_graph(opts, 2)?;
    let built = match kind {
        "grid" => {
            let (name, delta) = named_colouring(opts, &doc, &g, "--colouring")?;
            grid_flex(&g, &delta, opts.seed, &opts.budget).map(|flex| (flex, delta, name))
        }
        "double" => {
            let (name, d1) = named_colouring(opts, &doc, &g, "--colouring")?;
            let (_, d2) = named_colouring(opts, &doc, &g, "--colouring2")?;
            let pivot = match opts.flag("--pivot") {
                Some(p) => g
                    .vertex_ix(p)
                    .ok_or_else(|| anyhow!("unknown pivot vertex {p:?}"))?,
                None => *g
                    .invariant_vertices()
                    .first()
                    .ok_or_else(|| anyhow!("graph has no invariant vertex"))?,
            };
            let dopts = DoubleOptions {
                forced: opts.switch("force"),
                mirrored_branch: opts.switch("mirrored-branch"),
            };
            double_flex(&g, &d1, &d2, pivot, opts.seed, &opts.budget, dopts)
                .map(|(flex, _)| (flex, d1, name))
        }
        "walkindep" => {
            let (name, delta) = named_colouring(opts, &doc, &g, "--colouring")?;
            let fw = doc.framework(&g)?;
            walkindep_flex(&fw, &delta, opts.tol).map(|flex| (flex, delta, name))
        }
        other => bail!("unknown flex kind {other:?}"),
    };
    match built {
        Ok((flex, delta, _)) => {
            let out = FlexDocument::build(&g, &flex, Some(&delta), doc.name.as_deref());
            print!("{}", out.emit());
            Ok(EXIT_TRUE)
        }
        Err(e) => {
            eprintln!("refused: {e}");
            Ok(flex_error_code(&e))
        }
    }
}

fn run_tp_decide(opts: &Options) -> Result<u8> {
    let (doc, g) = load_graph(opts, 1)?;
    let fw = doc.framework(&g)?;
    match decide_tp_flexibility(&fw, opts.tol) {
        TpVerdict::Flexible { colouring, class } => {
            let flex = walkindep_flex(&fw, &colouring, opts.tol)
                .map_err(|e| anyhow!("construction failed unexpectedly: {e}"))?;
            let out = FlexDocument::build(&g, &flex, Some(&colouring), doc.name.as_deref());
            eprintln!("flexible: non-invariant angle-preserving class {class}");
            print!("{}", out.emit());
            Ok(EXIT_TRUE)
        }
        TpVerdict::Rigid { reason } => {
            println!("rigid: {reason}");
            Ok(EXIT_FALSE)
        }
        TpVerdict::NotApplicable { verdict } => {
            println!("not-applicable: {verdict:?}");
            Ok(EXIT_FALSE)
        }
    }
}

fn run_verify(opts: &Options) -> Result<u8> {
    let text = opts.read_input(1)?;
    let doc = FlexDocument::parse(&text)?;
    let (g, flex, _) = doc.restore()?;
    let samples: usize =
        opts.flag("--samples").map_or(Ok(200), str::parse).context("--samples")?;
    let report = verify_flex(&g, &flex, samples.max(2), TolProfile::default());
    if opts.json {
        emit_json(serde_json::json!({
            "passed": report.passed(),
            "max_rel_length_variation": format_decimal(report.max_rel_length_variation),
            "max_symmetry_residual": format_decimal(report.max_symmetry_residual),
            "min_edge_gap": format_decimal(report.min_edge_gap),
            "nontriviality_angle": format_decimal(report.nontriviality_angle),
            "samples": report.samples,
            "failures": report.failures,
        }));
    } else {
        println!(
            "{}: rel-length {:.3e}, symmetry {:.3e}, min-gap {:.3e}, angle-range {:.4}",
            if report.passed() { "pass" } else { "FAIL" },
            report.max_rel_length_variation,
            report.max_symmetry_residual,
            report.min_edge_gap,
            report.nontriviality_angle
        );
        if !report.passed() {
            println!("failed: {}", report.failures.join(", "));
        }
    }
    Ok(if report.passed() { EXIT_TRUE } else { EXIT_FALSE })
}

fn run_sample(opts: &Options) -> Result<u8> {
    let n: usize = opts
        .flag("--n")
        .ok_or_else(|| anyhow!("sample needs --n COUNT"))?
        .parse()
        .context("--n")?;
    let text = opts.read_input(1)?;
    let doc = FlexDocument::parse(&text)?;
    let (g, flex, _) = doc.restore()?;
    let samples = sample_flex(&flex, n).map_err(|e| anyhow!("{e}"))?;
    let rendered: Vec<serde_json::Value> = samples
        .iter()
        .map(|(t, positions)| {
            let map: BTreeMap<String, (String, String)> = (0..g.vertex_count() as u32)
                .map(|u| {
                    let p = positions[u as usize];
                    (
                        g.vertex_name(u).to_owned(),
                        (format_decimal(p[0]), format_decimal(p[1])),
                    )
                })
                .collect();
            serde_json::json!({ "t": format_decimal(*t), "positions": map })
        })
        .collect();
    emit_json(serde_json::Value::Array(rendered));
    Ok(EXIT_TRUE)
}

fn run_export(opts: &Options) -> Result<u8> {
    let frames: usize = opts
        .flag("--frames")
        .ok_or_else(|| anyhow!("export needs --frames N"))?
        .parse()
        .context("--frames")?;
    if frames < 1 {
        bail!("--frames must be at least 1");
    }
    let text = opts.read_input(1)?;
    let doc = FlexDocument::parse(&text)?;
    let (g, flex, colouring) = doc.restore()?;
    if let Some(path) = opts.flag("--csv") {
        export::write_csv(&g, &flex, frames, &PathBuf::from(path))?;
        eprintln!("wrote {path}");
        return Ok(EXIT_TRUE);
    }
    if let Some(dir) = opts.flag("--svg") {
        let written =
            export::write_svg_frames(&g, &flex, colouring.as_ref(), frames, &PathBuf::from(dir))?;
        eprintln!("wrote {} frame(s) under {dir}", written.len());
        return Ok(EXIT_TRUE);
    }
    bail!("export needs --csv FILE or --svg DIR")
}

fn run_fixtures(opts: &Options) -> Result<u8> {
    let name = opts.positional.get(1).ok_or_else(|| {
        anyhow!("fixtures needs a name; known: {}", catalog::FIXTURE_NAMES.join(", "))
    })?;
    let args = catalog::FixtureArgs {
        k: opts.flag("--k").map(str::parse).transpose().context("--k")?,
        m: opts.flag("--m").map(str::parse).transpose().context("--m")?,
        n: opts.flag("--n").map(str::parse).transpose().context("--n")?,
        brace: opts.switch("brace"),
        seed: opts.seed,
        variant: opts.positional.get(2).cloned(),
    };
    let doc = catalog::build(name, &args)?;
    print!("{}", doc.emit());
    Ok(EXIT_TRUE)
}
