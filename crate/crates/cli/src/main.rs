use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use stoplat::io::{self, BaseRef};
use stoplat::mwi::{self, MwiSolution};
use stoplat::npo::{self, NpoIterator, COUNT_LIMIT};
use stoplat::reductions::{realized_stop_order, superreduction};
use stoplat::selftest::{self, Scope};
use stoplat::{Axiom, BoundaryFunctional, Poset, StOpMap, TotalExtension};

mod output;

use output::{sig5, Out};

#[derive(Parser)]
#[command(
    name = "stoplat",
    version,
    about = "Steiner operations on ideal lattices of finite posets"
)]
struct Cli {
    /// Emit tab-separated rows instead of human-readable text.
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the order ideals of a poset in canonical order.
    Ideals {
        #[arg(long)]
        poset: PathBuf,
    },
    /// Validate a StOp table against the axioms.
    CheckStop(CheckStopArgs),
    /// Recover the poset whose ideals form the range of an idempotent StOp.
    StopOrder {
        /// Base poset; defaults to the base named in the table header.
        #[arg(long)]
        poset: Option<PathBuf>,
        #[arg(long)]
        stop: PathBuf,
    },
    /// Build the superreduction from a base poset towards an extension of it.
    Superreduce {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Total extension of the target; defaults to its greedy linear extension.
        #[arg(long)]
        tau: Option<PathBuf>,
        /// Also write the recovered StOp-order to this file.
        #[arg(long)]
        order_out: Option<PathBuf>,
    },
    /// Check that the superreduction from the discrete order recovers the target.
    Theorem5 {
        #[arg(long)]
        target: PathBuf,
    },
    /// Minimum-weight ideal of a given cardinality.
    Mwi(MwiArgs),
    /// Count or stream natural partial orders on n elements.
    #[command(group(ArgGroup::new("mode").required(true).args(["count", "stream"])))]
    Npo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        stream: bool,
    },
    /// Check semimodularity and the Jordan-Dedekind chain condition of NPO(n).
    VerifyNpo {
        #[arg(long)]
        n: usize,
    },
    /// Compare enumerated counts with the asymptotic estimate.
    Bps {
        #[arg(long)]
        n_max: usize,
        /// Enumerate counts up to this n and use the published sequence beyond.
        #[arg(long, default_value_t = 7)]
        compute_limit: usize,
    },
    /// Run the built-in verification suites.
    Selftest {
        /// Run every population at full size.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Append wall-clock milliseconds to each line.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("bf").args(["boundary", "graph"])))]
struct CheckStopArgs {
    /// Base poset; defaults to the base named in the table header.
    #[arg(long)]
    poset: Option<PathBuf>,
    #[arg(long)]
    stop: PathBuf,
    /// Additive weights used as the boundary functional.
    #[arg(long)]
    boundary: Option<PathBuf>,
    /// Graph whose edge or vertex boundary is the functional.
    #[arg(long, requires = "kind")]
    graph: Option<PathBuf>,
    #[arg(long, group = "kind", requires = "graph")]
    edge: bool,
    #[arg(long, group = "kind", requires = "graph")]
    vertex: bool,
    /// Total extension for the monotone-weight axiom.
    #[arg(long)]
    tau: Option<PathBuf>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("card").required(true).args(["k", "all_k"])))]
struct MwiArgs {
    #[arg(long)]
    poset: PathBuf,
    #[arg(long)]
    weights: PathBuf,
    #[arg(long)]
    k: Option<usize>,
    /// Solve over the ideals of this extension, assuming increasing weights.
    #[arg(long)]
    target: Option<PathBuf>,
    /// Emit one row per cardinality 0..=n.
    #[arg(long)]
    all_k: bool,
}

enum Status {
    Pass,
    Fail,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_poset(path: &Path) -> Result<Poset> {
    io::parse_poset(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// Loads a StOp table. Without an explicit base, the header's inline base is
/// used, or its path is resolved relative to the table's directory.
fn load_stop(stop: &Path, poset: Option<&Path>) -> Result<StOpMap> {
    let text = read(stop)?;
    let base = match poset {
        Some(p) => load_poset(p)?,
        None => {
            match io::parse_stop_header(&text).with_context(|| format!("{}", stop.display()))? {
                (_, BaseRef::Inline(p)) => p,
                (_, BaseRef::Path(rel)) => {
                    let dir = stop.parent().unwrap_or(Path::new("."));
                    load_poset(&dir.join(rel))?
                }
            }
        }
    };
    io::parse_stop(&text, &base).with_context(|| format!("{}", stop.display()))
}

fn load_tau(path: &Path, poset: &Poset) -> Result<TotalExtension> {
    io::parse_tau(&read(path)?, poset).with_context(|| format!("{}", path.display()))
}

fn ideals(out: &mut Out, poset: &Path) -> Result<Status> {
    let family = load_poset(poset)?.enumerate_ideals();
    for &m in family.members() {
        out.line(&io::format_member(m));
    }
    out.pair("count", family.len());
    Ok(Status::Pass)
}

fn check_stop(out: &mut Out, a: &CheckStopArgs) -> Result<Status> {
    let map = load_stop(&a.stop, a.poset.as_deref())?;
    let n = map.base().len();
    let boundary = if let Some(w) = &a.boundary {
        let w = io::parse_weights(&read(w)?).with_context(|| format!("{}", w.display()))?;
        Some(BoundaryFunctional::AdditiveWeight(w.as_slice().to_vec()))
    } else if let Some(g) = &a.graph {
        let g = io::parse_graph(&read(g)?).with_context(|| format!("{}", g.display()))?;
        Some(if a.edge {
            BoundaryFunctional::EdgeBoundary(g)
        } else {
            BoundaryFunctional::VertexBoundary(g)
        })
    } else {
        None
    };
    if let Some(bf) = &boundary {
        if bf.ground_size() != n {
            bail!(
                "boundary is defined on {} elements but the base has {n}",
                bf.ground_size()
            );
        }
    }
    let tau = a
        .tau
        .as_deref()
        .map(|t| load_tau(t, map.base()))
        .transpose()?;

    let verdicts = [
        (Axiom::Size, Some(map.check_axiom1())),
        (
            Axiom::Boundary,
            boundary.as_ref().map(|b| map.check_axiom2(b)).transpose()?,
        ),
        (Axiom::Monotone, Some(map.check_axiom3())),
        (
            Axiom::Weight,
            tau.as_ref().map(|t| map.check_axiom4(t)).transpose()?,
        ),
    ];
    let mut failed = false;
    for (axiom, verdict) in verdicts {
        let word = match verdict {
            Some(true) => "PASS",
            Some(false) => {
                failed = true;
                "FAIL"
            }
            None => "SKIP",
        };
        out.verdict(&axiom.to_string(), word);
    }
    Ok(if failed { Status::Fail } else { Status::Pass })
}

fn stop_order(out: &mut Out, poset: Option<&Path>, stop: &Path) -> Result<Status> {
    let q = load_stop(stop, poset)?.stop_order()?;
    out.raw(&io::write_poset(&q));
    Ok(Status::Pass)
}

fn superreduce(
    out: &mut Out,
    base: &Path,
    target: &Path,
    tau: Option<&Path>,
    order_out: Option<&Path>,
) -> Result<Status> {
    let base = load_poset(base)?;
    let target = load_poset(target)?;
    let tau = match tau {
        Some(t) => load_tau(t, &target)?,
        None => target.default_linear_extension(),
    };
    let map = superreduction(&base, &target, &tau)?;
    let order = map.stop_order()?;
    let order_text = io::write_poset(&order);
    out.raw(&io::write_stop(&map));
    out.line("# stop-order");
    for l in order_text.lines() {
        out.line(&format!("# {l}"));
    }
    if let Some(path) = order_out {
        fs::write(path, &order_text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(Status::Pass)
}

fn theorem5(out: &mut Out, target: &Path) -> Result<Status> {
    let target = load_poset(target)?;
    let recovered = realized_stop_order(&target)?;
    if recovered == target {
        out.line("PASS");
        Ok(Status::Pass)
    } else {
        out.line("FAIL");
        out.raw(&io::write_poset(&recovered));
        Ok(Status::Fail)
    }
}

fn solution_row(out: &mut Out, k: Option<usize>, s: &MwiSolution) {
    let mut fields = Vec::with_capacity(4);
    if let Some(k) = k {
        fields.push(("k", k.to_string()));
    }
    fields.push(("value", s.value.to_string()));
    fields.push(("witness", s.witness.to_string()));
    fields.push(("searched", s.searched.to_string()));
    out.record(&fields);
}

fn mwi_cmd(out: &mut Out, a: &MwiArgs) -> Result<Status> {
    let poset = load_poset(&a.poset)?;
    let w = io::parse_weights(&read(&a.weights)?)
        .with_context(|| format!("{}", a.weights.display()))?;
    let target = a.target.as_deref().map(load_poset).transpose()?;
    if a.all_k {
        let rows = match &target {
            Some(q) => mwi::mwi_reduced_all_k(&poset, q, &w)?,
            None => mwi::mwi_all_k(&poset, &w)?,
        };
        out.header(&["k", "value", "witness", "searched"]);
        for (k, s) in rows.iter().enumerate() {
            solution_row(out, Some(k), s);
        }
    } else {
        let k = a.k.expect("clap enforces k or all-k");
        out.header(&["value", "witness", "searched"]);
        let s = match &target {
            Some(q) => mwi::mwi_reduced(&poset, q, &w, k)?,
            None => mwi::mwi_bruteforce(&poset, &w, k)?,
        };
        solution_row(out, None, &s);
    }
    Ok(Status::Pass)
}

fn npo_cmd(out: &mut Out, n: usize, stream: bool) -> Result<Status> {
    if stream {
        for (i, p) in NpoIterator::new(n)?.enumerate() {
            if i > 0 {
                out.line("");
            }
            out.raw(&io::write_poset(&p));
        }
    } else {
        out.line(&npo::count_npo(n, COUNT_LIMIT)?.to_string());
    }
    Ok(Status::Pass)
}

fn verify_npo(out: &mut Out, n: usize) -> Result<Status> {
    let semi = npo::check_semimodular(n)?;
    let jd = npo::check_jordan_dedekind(n)?;
    let word = |b: bool| if b { "PASS" } else { "FAIL" };
    out.verdict("semimodular", word(semi));
    out.verdict("jordan-dedekind", word(jd));
    Ok(if semi && jd {
        Status::Pass
    } else {
        Status::Fail
    })
}

fn bps_cmd(out: &mut Out, n_max: usize, compute_limit: usize) -> Result<Status> {
    let rows = npo::bps_ratio_table(n_max, compute_limit.min(COUNT_LIMIT))?;
    let width = rows
        .last()
        .map_or(1, |r| r.count.to_string().len() + 1)
        .max(8);
    let names = ["n", "|NPO(n)|", "BPS(n)", "BPS(n)/|NPO(n)|"];
    if out.is_tsv() {
        out.header(&names);
    } else {
        let widths = [3, width, 12, 16];
        let cells: Vec<_> = names
            .iter()
            .zip(widths)
            .map(|(s, w)| (s.to_string(), w))
            .collect();
        out.table_row(&cells);
    }
    for r in &rows {
        let count = if r.computed {
            r.count.to_string()
        } else {
            format!("{}*", r.count)
        };
        out.table_row(&[
            (r.n.to_string(), 3),
            (count, width),
            (sig5(r.bps), 12),
            (sig5(r.ratio), 16),
        ]);
    }
    if rows.iter().any(|r| !r.computed) {
        out.note(&format!(
            "* count taken from the published sequence (n > {compute_limit})"
        ));
    }
    Ok(Status::Pass)
}

fn selftest_cmd(out: &mut Out, full: bool, seed: u64, timings: bool) -> Result<Status> {
    let scope = if full { Scope::Full } else { Scope::Quick };
    let outcomes = selftest::run(scope, seed);
    let mut fields = Vec::new();
    for o in &outcomes {
        fields.clear();
        fields.push(if o.passed { "PASS" } else { "FAIL" }.to_string());
        fields.push(o.name.to_string());
        fields.push(o.detail.clone());
        if timings {
            fields.push(format!("{}ms", o.millis));
        }
        let refs: Vec<&str> = fields.iter().map(String::as_str).collect();
        out.words(&refs);
    }
    Ok(if outcomes.iter().all(|o| o.passed) {
        Status::Pass
    } else {
        Status::Fail
    })
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("STOPLAT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .with_context(|| format!("STOPLAT_THREADS must be a non-negative integer, got `{raw}`"))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut Out) -> Result<Status> {
    configure_threads()?;
    match &cli.command {
        Command::Ideals { poset } => ideals(out, poset),
        Command::CheckStop(a) => check_stop(out, a),
        Command::StopOrder { poset, stop } => stop_order(out, poset.as_deref(), stop),
        Command::Superreduce {
            base,
            target,
            tau,
            order_out,
        } => superreduce(out, base, target, tau.as_deref(), order_out.as_deref()),
        Command::Theorem5 { target } => theorem5(out, target),
        Command::Mwi(a) => mwi_cmd(out, a),
        Command::Npo { n, stream, .. } => npo_cmd(out, *n, *stream),
        Command::VerifyNpo { n } => verify_npo(out, *n),
        Command::Bps {
            n_max,
            compute_limit,
        } => bps_cmd(out, *n_max, *compute_limit),
        Command::Selftest {
            full,
            seed,
            timings,
        } => selftest_cmd(out, *full, *seed, *timings),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out::new(cli.tsv);
    let status = run(&cli, &mut out);
    print!("{}", out.finish());
    match status {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            let mut msg = String::new();
            let _ = write!(msg, "{e:#}");
            eprintln!("stoplat: error: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
