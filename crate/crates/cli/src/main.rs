mod report;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};
use e510::acceptance::{Runner, CRITERIA};
use e510::models::Family;
use e510::search::{named_instances, sweep, CellStatus, SweepConfig, DEFAULT_CAP};
use e510::sl5::{set_global_cache, ModuleCache, Weight};
use e510::verma::{
    compose, format_vector, verify_morphism, CatalogError, MorphismData, MorphismError, Named,
    VerificationReport, VerifyOptions,
};

use report::Report;

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const INFEASIBLE: u8 = 3;

/// Verification, composition and search for morphisms between generalized
/// Verma modules over E(5,10).
#[derive(Parser)]
#[command(name = "e510", version)]
struct Cli {
    /// Directory for cached sl5-modules.
    #[arg(
        long,
        env = "E510_CACHE_DIR",
        default_value = "./.e510-cache",
        global = true
    )]
    cache_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a named morphism, e.g. `nabla C 2 3` or `t_AB 4`.
    Verify {
        #[arg(required = true, num_args = 1..)]
        name: Vec<String>,
        /// Check g1 on every basis vector, not only the highest-weight vector.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve for all morphisms of the given degrees from every source in the grid.
    Sweep {
        /// Degrees to search (repeat or separate by commas).
        #[arg(long, short = 'd', required = true, value_delimiter = ',')]
        degree: Vec<u32>,
        /// Sources are all dominant weights with n1+n2+n3+n4 at most this.
        #[arg(long)]
        grid: i64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Maximum number of unknowns per cell.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Resumable cell log (default: sweep.log in the cache directory).
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compose two named morphisms: OUTER ∘ INNER.
    Compose {
        /// e.g. "nabla C 0 0"
        outer: String,
        /// e.g. "t_AB 3"
        inner: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the morphisms between the three families as a DOT graph.
    Diagram {
        /// Components with m+n at most this; negative gives an empty graph.
        #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
        bound: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance criteria.
    Selftest {
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        /// Only these criteria (comma separated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Errors that map to the usage exit code.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn build_named(words: &str) -> anyhow::Result<(Named, MorphismData)> {
    let parts: Vec<&str> = words.split_whitespace().collect();
    let name = Named::parse(&parts).map_err(|e| usage(e.to_string()))?;
    let m = name.build().map_err(|e| match e {
        CatalogError::Unknown(_) | CatalogError::OutOfRange(_) | CatalogError::Degree4(_) => {
            usage(e.to_string())
        }
        other => anyhow::Error::new(other),
    })?;
    Ok((name, m))
}

fn weight_or_zero(w: Option<Weight>) -> String {
    w.map_or("0 (zero module)".into(), |w| w.to_string())
}

fn describe(r: &mut Report, m: &MorphismData) {
    r.line("source", weight_or_zero(m.source_weight()));
    r.line("target", weight_or_zero(m.target_weight()));
    r.line("degree", m.degree);
    r.line("zero map", if m.is_zero() { "yes" } else { "no" });
    r.detail("table entries", m.nnz());
}

fn truncate(s: String, n: usize) -> String {
    match s.char_indices().nth(n) {
        Some((i, _)) => format!("{}…", &s[..i]),
        None => s,
    }
}

fn verification(r: &mut Report, v: &VerificationReport) {
    let pf = |ok: bool| if ok { "pass" } else { "fail" };
    r.line("equivariance", pf(v.equivariance.is_empty()));
    r.line(
        "g1",
        format!("{} (scope {:?})", pf(v.g1.is_empty()), v.scope),
    );
    for d in v.equivariance.iter().chain(&v.g1) {
        r.line(
            "defect",
            format!(
                "{} at {}: {}",
                d.generator,
                d.at,
                truncate(format_vector(&d.residual), 200)
            ),
        );
    }
    r.line("verdict", pf(v.passed()));
}

fn cmd_verify(
    args: &[String],
    name: &[String],
    full: bool,
    out: Option<PathBuf>,
) -> anyhow::Result<u8> {
    let mut r = Report::new("verify", args);
    let (named, m) = build_named(&name.join(" "))?;
    r.line("morphism", named);
    describe(&mut r, &m);
    let opts = if full {
        VerifyOptions::FULL
    } else {
        VerifyOptions::FAST
    };
    let v = verify_morphism(&m, opts)?;
    verification(&mut r, &v);
    r.print();
    r.write(out.as_deref())?;
    Ok(if v.passed() { OK } else { MISMATCH })
}

fn cmd_compose(
    args: &[String],
    outer: &str,
    inner: &str,
    out: Option<PathBuf>,
) -> anyhow::Result<u8> {
    let mut r = Report::new("compose", args);
    let (a, psi) = build_named(outer)?;
    let (b, phi) = build_named(inner)?;
    let m = match compose(&psi, &phi) {
        Ok(m) => m,
        Err(e @ MorphismError::ModuleMismatch) => return Err(usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    r.line("morphism", format!("{a} ∘ {b}"));
    describe(&mut r, &m);
    let v = verify_morphism(&m, VerifyOptions::FAST)?;
    verification(&mut r, &v);
    r.print();
    r.write(out.as_deref())?;
    Ok(if v.passed() { OK } else { MISMATCH })
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    args: &[String],
    cache_dir: &std::path::Path,
    degree: Vec<u32>,
    grid: i64,
    jobs: usize,
    cap: usize,
    log: Option<PathBuf>,
    out: Option<PathBuf>,
) -> anyhow::Result<u8> {
    if degree.iter().any(|&k| k == 0) {
        return Err(usage("degrees start at 1"));
    }
    if grid < 0 {
        return Err(usage("--grid must be nonnegative"));
    }
    let degrees: Vec<u32> = degree
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let log = log.unwrap_or_else(|| cache_dir.join("sweep.log"));
    let cfg = SweepConfig {
        bound: grid,
        degrees: degrees.clone(),
        jobs,
        cap,
        log: Some(log.clone()),
    };
    let mut r = Report::new("sweep", args);
    let rep = sweep(&cfg)?;
    r.line(
        "degrees",
        degrees
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    r.line("grid", format!("n1+n2+n3+n4 <= {grid}"));
    r.detail("cap", cap);
    r.detail("log", log.display());
    let infeasible = rep
        .cells
        .iter()
        .filter(|c| c.status == CellStatus::Infeasible)
        .count();
    r.line("cells", rep.cells.len());
    // kept out of the report so reruns produce identical files
    eprintln!(
        "resumed: {}",
        rep.cells.iter().filter(|c| c.resumed).count()
    );
    r.line("infeasible", infeasible);
    for c in &rep.cells {
        let nonzero = c.dim.is_some_and(|d| d > 0);
        let text = c.log_line();
        if nonzero || c.status == CellStatus::Infeasible {
            r.line("cell", text);
        } else {
            r.detail("cell", text);
        }
    }
    for cmp in &rep.comparisons {
        let label = if cmp.degree == 1 {
            "matches Theorem 4.2 list".to_string()
        } else {
            format!("matches expected list for degree {}", cmp.degree)
        };
        r.line(&label, if cmp.matches() { "yes" } else { "no" });
        for (a, b) in &cmp.missing {
            r.line("missing", format!("{a} -> {b} k={}", cmp.degree));
        }
        for (a, b) in &cmp.unexpected {
            r.line("unexpected", format!("{a} -> {b} k={}", cmp.degree));
        }
        for (a, b, d) in &cmp.wrong_dim {
            r.line("dimension", format!("{a} -> {b} k={} dim={d}", cmp.degree));
        }
        for (a, b) in &cmp.unverified {
            r.line("unverified", format!("{a} -> {b} k={}", cmp.degree));
        }
        for w in &cmp.not_degenerate {
            r.line("outside conjectured degenerate list", w);
        }
    }
    r.line(
        "degenerate",
        rep.degenerate
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    r.print();
    r.write(out.as_deref())?;
    Ok(if !rep.matches() {
        MISMATCH
    } else if infeasible > 0 {
        INFEASIBLE
    } else {
        OK
    })
}

fn family_nodes(bound: i64) -> BTreeSet<(Weight, Vec<String>)> {
    let mut nodes: std::collections::BTreeMap<Weight, Vec<String>> = Default::default();
    if bound >= 0 {
        for f in Family::ALL {
            for m in 0..=bound as u32 {
                for n in 0..=bound as u32 - m {
                    nodes
                        .entry(e510::models::lambda(f, m, n))
                        .or_default()
                        .push(f.to_string());
                }
            }
        }
    }
    nodes.into_iter().collect()
}

fn node_id(w: Weight) -> String {
    let n = w.0;
    format!("M{}_{}_{}_{}", n[0], n[1], n[2], n[3])
}

fn edge_label(n: &Named) -> String {
    match n {
        Named::Nabla(f, ..) => format!("∇_{f}"),
        Named::TAB(_) => "t_AB".into(),
        Named::TBC(_) => "t_BC".into(),
        Named::NablaAB(_) => "∇_AB".into(),
        Named::NablaBC(_) => "∇_BC".into(),
        Named::NablaAC => "∇_AC".into(),
        Named::NablaABC => "∇_ABC".into(),
        Named::TPrime => "t′".into(),
        Named::TDoublePrime => "t″".into(),
    }
}

/// DOT text for the diagram of the given bound.
fn diagram(bound: i64) -> String {
    let nodes = family_nodes(bound);
    let present: BTreeSet<Weight> = nodes.iter().map(|(w, _)| *w).collect();
    let mut s = String::from("digraph e510 {\n  rankdir=LR;\n");
    for (w, fams) in &nodes {
        s += &format!(
            "  {} [label=\"M{}\", family=\"{}\"];\n",
            node_id(*w),
            w,
            fams.join(",")
        );
    }
    for k in 1..=5 {
        for n in named_instances(k, bound) {
            if let (a, Some(b)) = n.endpoints() {
                if present.contains(&a) && present.contains(&b) {
                    s += &format!(
                        "  {} -> {} [label=\"{}\", degree={k}];\n",
                        node_id(a),
                        node_id(b),
                        edge_label(&n)
                    );
                }
            }
        }
    }
    s += "}\n";
    s
}

fn cmd_diagram(bound: i64, out: Option<PathBuf>) -> anyhow::Result<u8> {
    let dot = diagram(bound);
    match out {
        Some(p) => std::fs::write(&p, dot).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{dot}"),
    }
    Ok(OK)
}

fn cmd_selftest(
    args: &[String],
    jobs: usize,
    only: Vec<u8>,
    out: Option<PathBuf>,
) -> anyhow::Result<u8> {
    if let Some(bad) = only
        .iter()
        .find(|&&i| !(1..=CRITERIA.len() as u8).contains(&i))
    {
        return Err(usage(format!("no criterion {bad}")));
    }
    let mut r = Report::new("selftest", args);
    let runner = Runner::new(jobs);
    let mut failed = 0;
    for (id, _) in CRITERIA {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let o = runner.run(id);
        println!("{}", o.line());
        r.detail(
            "criterion",
            format!(
                "{} {} {}",
                id,
                if o.passed { "pass" } else { "fail" },
                o.detail
            ),
        );
        failed += !o.passed as usize;
    }
    r.line("verdict", if failed == 0 { "pass" } else { "fail" });
    r.print();
    r.write(out.as_deref())?;
    Ok(if failed == 0 { OK } else { MISMATCH })
}

fn run(cli: Cli, args: &[String]) -> anyhow::Result<u8> {
    set_global_cache(ModuleCache::with_dir(&cli.cache_dir));
    match cli.command {
        Command::Verify { name, full, out } => cmd_verify(args, &name, full, out),
        Command::Sweep {
            degree,
            grid,
            jobs,
            cap,
            log,
            out,
        } => cmd_sweep(args, &cli.cache_dir, degree, grid, jobs, cap, log, out),
        Command::Compose { outer, inner, out } => cmd_compose(args, &outer, &inner, out),
        Command::Diagram { bound, out } => cmd_diagram(bound, out),
        Command::Selftest { jobs, only, out } => cmd_selftest(args, jobs, only, out),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let t = Instant::now();
    let code = match run(cli, &args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                USAGE
            } else {
                MISMATCH
            }
        }
    };
    eprintln!("time: {:.2}s", t.elapsed().as_secs_f64());
    ExitCode::from(code)
}
