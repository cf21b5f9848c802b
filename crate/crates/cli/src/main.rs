//! `stresslab`: generate corpus complexes and run checks with replayable
//! JSON/CSV reports.
//!
//! Exit codes: 0 when no check fails, 1 when some check fails, 2 on bad
//! input or usage.

mod checks;
mod input;
mod manifest;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use stresslab::exactla::{PrimeField, Rationals};

use checks::{CheckName, CheckResult, Item, Settings};
use input::FieldChoice;
use manifest::RunManifest;

#[derive(Parser)]
#[command(name = "stresslab", version, about = "Exact checks on Artinian reductions of face rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a corpus complex as a facet list.
    Gen(GenArgs),
    /// Run a check on one or more inputs.
    Check(Box<CheckArgs>),
}

#[derive(Args)]
struct GenArgs {
    /// boundary_simplex, boundary_crosspolytope, octahedron, cyclic,
    /// moebius_torus_7, icosahedron, stacked_sphere, cycle, bad_reduction
    kind: String,
    params: Vec<String>,
    /// Output path (stdout if omitted; required for bad_reduction, which
    /// also writes `<out>.coords.json`).
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CheckArgs {
    check: CheckName,
    /// Facet files (`.json` for the JSON form), built-ins such as
    /// `cyclic:7:4`, edge lists for `laman`, or numbers for `crossing` and
    /// `m-sequence`.
    inputs: Vec<String>,
    /// q, fp:<prime> or fp:random
    #[arg(long, default_value = "fp:random")]
    field: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// full, empty, star:<v>, vertices:<a,b>, antipodal, adjacent,
    /// intersection, or a facet file
    #[arg(long)]
    subcomplex: Option<String>,
    /// Fixed vertex coordinates (JSON).
    #[arg(long)]
    coords: Option<PathBuf>,
    /// Closed 2d-manifold containing the input (gks).
    #[arg(long)]
    ambient: Option<String>,
    /// Single vertex for `cone`.
    #[arg(long)]
    vertex: Option<String>,
    /// Decay ratio for decaying elements.
    #[arg(long, default_value = "10")]
    ratio: String,
    /// Enumerate all subcomplexes (gks).
    #[arg(long)]
    sweep: bool,
    /// Use ℓ decaying along an L-decomposition (lefschetz).
    #[arg(long)]
    decaying: bool,
    /// Size parameter for generated instances (kazhdan, laman).
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Number of generated instances (laman, perturbation).
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Record wall-clock per check (makes the JSON non-reproducible).
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Gen(a) => gen(a).map(|_| ExitCode::SUCCESS),
        Cmd::Check(a) => check(*a),
    };
    res.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}

fn gen(a: GenArgs) -> Result<()> {
    let params: Vec<&str> = a.params.iter().map(String::as_str).collect();
    let (facets, coords) = input::gen_files(&a.kind, &params)?;
    match (&a.out, coords) {
        (Some(p), coords) => {
            std::fs::write(p, facets).with_context(|| format!("writing {}", p.display()))?;
            if let Some(c) = coords {
                let cp = PathBuf::from(format!("{}.coords.json", p.display()));
                std::fs::write(&cp, c).with_context(|| format!("writing {}", cp.display()))?;
            }
        }
        (None, None) => print!("{facets}"),
        (None, Some(_)) => anyhow::bail!("{} writes two files; pass --out", a.kind),
    }
    Ok(())
}

fn run_item(s: &Settings, field: FieldChoice, item: &Item, timings: bool) -> Result<Vec<CheckResult>> {
    let start = Instant::now();
    let mut rows = match field {
        FieldChoice::Q => checks::run(s, item, &Rationals),
        FieldChoice::Fp(p) => checks::run(s, item, &PrimeField::new(p)?),
    }
    .with_context(|| format!("{} on {}", s.check.as_str(), item.name()))?;
    if timings {
        let ms = start.elapsed().as_secs_f64() * 1e3;
        for r in rows.iter_mut() {
            r.wall_ms = Some(ms);
        }
    }
    Ok(rows)
}

fn check(a: CheckArgs) -> Result<ExitCode> {
    let field = FieldChoice::parse(&a.field, a.seed)?;
    let s = Settings {
        check: a.check,
        seed: a.seed,
        trials: a.trials,
        k: a.k,
        d: a.d,
        subcomplex: a.subcomplex.clone(),
        ambient: a.ambient.clone(),
        vertex: a.vertex.clone(),
        ratio: a.ratio.clone(),
        sweep: a.sweep,
        decaying: a.decaying,
        n: a.n,
        count: a.count,
    };
    let (items, digests) = checks::items(&s, &a.inputs, a.coords.as_deref())?;
    // independent inputs run concurrently; results keep input order
    let outcomes: Vec<Result<Vec<CheckResult>>> = std::thread::scope(|sc| {
        let handles: Vec<_> = items.iter().map(|it| sc.spawn(|| run_item(&s, field, it, a.timings))).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err(anyhow::anyhow!("check panicked")))).collect()
    });
    let mut results = Vec::new();
    for o in outcomes {
        results.extend(o?);
    }
    let command: Vec<String> = std::env::args().skip(1).collect();
    let m = RunManifest::new(command, a.seed, field.label(), digests, results);
    let json = m.to_json();
    match &a.json {
        Some(p) => std::fs::write(p, &json).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{json}"),
    }
    if let Some(p) = &a.csv {
        let f = std::fs::File::create(p).with_context(|| format!("writing {}", p.display()))?;
        m.write_csv(f)?;
    }
    for r in &m.results {
        eprintln!("{:<8} {} {} {} [{} vs {}]", r.verdict.to_string(), r.check, r.instance, r.parameter, r.lhs, r.rhs);
    }
    eprintln!("overall: {}", m.verdict);
    Ok(if m.verdict == stresslab::report::Verdict::Fail { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
