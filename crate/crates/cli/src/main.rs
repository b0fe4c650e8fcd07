//! Command line front end: compute cycle packings, separators, density
//! witnesses and tree-width certificates, generate digraph families, and
//! re-verify emitted witnesses.

use clap::{Args, Parser, Subcommand};
use cyclepack::bounds::{propagate_upper_bounds, theorem_bounds, BoundsError};
use cyclepack::constructions::{
    blow_up, complete_biorientation, cylindrical_wall, join_construction,
    random_regular_digraph, ConstructionError,
};
use cyclepack::cycles::{c_number, cycles_through, theorem1_trace, CycleError};
use cyclepack::density::{dense_subdigraph, DensityError, SearchMode};
use cyclepack::dtw::{build_certificate, theorem2_certificate, DtwError, DEFAULT_SUBSET_BUDGET};
use cyclepack::edgelist::{emit_digraph, parse_digraph};
use cyclepack::menger::{max_disjoint_paths, MengerError};
use cyclepack::rational::{parse_rational, Rational};
use cyclepack::witness::{parse_witness, verify_witness, VerifyContext, WitnessError};
use cyclepack::{Digraph, VertexSet};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cyclepack", version, about = "Cycle packings and tree-width certificates for regular digraphs")]
struct Cli {
    /// Seed for every randomized search
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for parallel search (0 = automatic)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Emit machine-readable JSON only
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute c(D) with a witness packing
    C { file: PathBuf },
    /// Compute the maximum packing through a fixed hub
    Cycles {
        file: PathBuf,
        #[arg(long)]
        hub: usize,
    },
    /// Maximum vertex-disjoint U-to-W paths and a matching separator
    Menger {
        file: PathBuf,
        #[arg(long = "U", value_delimiter = ',', required = true)]
        u: Vec<usize>,
        #[arg(long = "W", value_delimiter = ',', required = true)]
        w: Vec<usize>,
    },
    /// Extract a dense subdigraph and its recursion transcript
    Dense {
        file: PathBuf,
        #[command(flatten)]
        density: DensityArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check that a vertex set is k-linked
    Linked {
        file: PathBuf,
        #[arg(long = "L", value_delimiter = ',', required = true)]
        l: Vec<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: u128,
    },
    /// Replay the packing-bound pipeline on a regular digraph
    Trace1 {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Produce a directed tree-width certificate for a regular digraph
    Cert2 {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: u128,
    },
    /// Closed-form bounds for r-regular digraphs
    Bounds {
        #[arg(long)]
        r: usize,
        /// Known upper bounds r:ub for propagation to this degree
        #[arg(long, value_delimiter = ',')]
        known: Vec<String>,
    },
    /// Generate a digraph family in edge-list format
    #[command(subcommand)]
    Gen(GenCmd),
    /// Re-verify a JSON witness against a digraph
    Verify {
        witness: PathBuf,
        file: PathBuf,
        #[arg(long = "U", value_delimiter = ',')]
        u: Option<Vec<usize>>,
        #[arg(long = "W", value_delimiter = ',')]
        w: Option<Vec<usize>>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_parser = ratio)]
        beta: Option<Rational>,
        #[arg(long, value_parser = ratio)]
        gamma: Option<Rational>,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: u128,
    },
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = ratio)]
    beta: Rational,
    #[arg(long, value_parser = ratio)]
    gamma: Rational,
}

#[derive(Args)]
struct SearchArgs {
    /// Use seeded local search instead of exhaustive partition search
    #[arg(long)]
    heuristic: bool,
    /// Vertex cap for exhaustive partition search
    #[arg(long, default_value_t = 20)]
    cap: usize,
    /// Local-search restarts in heuristic mode
    #[arg(long, default_value_t = 32)]
    starts: usize,
}

impl SearchArgs {
    fn mode(&self, seed: u64) -> SearchMode {
        if self.heuristic {
            SearchMode::Heuristic { seed, starts: self.starts }
        } else {
            SearchMode::Exact { cap: self.cap }
        }
    }
}

#[derive(Subcommand)]
enum GenCmd {
    /// Cylindrical wall of order k
    Wall { k: usize },
    /// Complete biorientation on n vertices
    Complete { n: usize },
    /// Blow-up of a digraph by factor b
    Blowup { file: PathBuf, b: usize },
    /// Random r-regular digraph on n vertices
    Regular { n: usize, r: usize },
    /// Disjoint union with all arcs from the second digraph to the first
    Join { file1: PathBuf, file2: PathBuf },
}

fn ratio(s: &str) -> Result<Rational, String> {
    parse_rational(s)
}

/// Failure exits 1 (a property or witness did not hold), Usage exits 2.
enum CliError {
    Failure(String),
    Usage(String),
}

impl CliError {
    fn usage(msg: impl ToString) -> CliError {
        CliError::Usage(msg.to_string())
    }
}

impl From<MengerError> for CliError {
    fn from(e: MengerError) -> Self {
        CliError::usage(e)
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        CliError::usage(e)
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::RetriesExhausted(_) => CliError::Failure(e.to_string()),
            _ => CliError::usage(e),
        }
    }
}

impl From<DensityError> for CliError {
    fn from(e: DensityError) -> Self {
        match e {
            DensityError::NotDense | DensityError::Soundness(_) => {
                CliError::Failure(e.to_string())
            }
            _ => CliError::usage(e),
        }
    }
}

impl From<CycleError> for CliError {
    fn from(e: CycleError) -> Self {
        match e {
            CycleError::HubNotFound | CycleError::Soundness(_) => {
                CliError::Failure(e.to_string())
            }
            CycleError::Density(d) => d.into(),
            _ => CliError::usage(e),
        }
    }
}

impl From<DtwError> for CliError {
    fn from(e: DtwError) -> Self {
        match e {
            DtwError::NotLinked { .. } | DtwError::NoMajority | DtwError::Soundness(_) => {
                CliError::Failure(e.to_string())
            }
            DtwError::Density(d) => d.into(),
            _ => CliError::usage(e),
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        CliError::usage(e)
    }
}

fn read_digraph(path: &PathBuf) -> Result<Digraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    parse_digraph(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

fn vertex_set(elems: &[usize], d: &Digraph, name: &str) -> Result<VertexSet, CliError> {
    VertexSet::new(elems.to_vec(), d.n())
        .map_err(|e| CliError::usage(format!("invalid {name}: {e}")))
}

/// Prints a summary line (unless --json) followed by the JSON artifact.
fn emit(json_only: bool, summary: &str, value: &serde_json::Value) {
    if !json_only {
        println!("{summary}");
    }
    println!("{value}");
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::C { file } => {
            let d = read_digraph(&file)?;
            let (c, packing) = c_number(&d);
            emit(
                cli.json,
                &format!("c = {c}"),
                &json!({ "c": c, "packing": packing.to_value() }),
            );
        }
        Cmd::Cycles { file, hub } => {
            let d = read_digraph(&file)?;
            if hub >= d.n() {
                return Err(CliError::usage(format!(
                    "hub {hub} out of range for {} vertices",
                    d.n()
                )));
            }
            let packing = cycles_through(&d, hub);
            emit(
                cli.json,
                &format!("packing size {} at hub {hub}", packing.len()),
                &packing.to_value(),
            );
        }
        Cmd::Menger { file, u, w } => {
            let d = read_digraph(&file)?;
            let us = vertex_set(&u, &d, "U")?;
            let ws = vertex_set(&w, &d, "W")?;
            let (family, separator) = max_disjoint_paths(&d, &us, &ws)?;
            emit(
                cli.json,
                &format!(
                    "disjoint paths = {}, separator size = {}",
                    family.len(),
                    separator.s.len()
                ),
                &json!({ "paths": family.to_value(), "separator": separator.to_value() }),
            );
        }
        Cmd::Dense { file, density, search } => {
            let d = read_digraph(&file)?;
            let mode = search.mode(cli.seed);
            let (sub, witness) =
                dense_subdigraph(&d, density.r, &density.beta, &density.gamma, mode)?;
            emit(
                cli.json,
                &format!(
                    "dense subdigraph on {} of {} vertices ({})",
                    sub.n(),
                    d.n(),
                    if witness.verified { "exactly verified" } else { "heuristic" }
                ),
                &witness.to_value(),
            );
        }
        Cmd::Linked { file, l, k, budget } => {
            let d = read_digraph(&file)?;
            let ls = vertex_set(&l, &d, "L")?;
            if k == 0 {
                return Err(CliError::usage("k must be at least 1"));
            }
            let cert = build_certificate(&d, ls, k, budget)?;
            if cert.verified_upto < k {
                return Err(CliError::usage(format!(
                    "budget {budget} only covers removal sets up to size {}",
                    cert.verified_upto
                )));
            }
            emit(
                cli.json,
                &format!("{k}-linked: verified (directed tree-width >= {})", k - 1),
                &cert.to_value(k - 1),
            );
        }
        Cmd::Trace1 { file, search } => {
            let d = read_digraph(&file)?;
            let t = theorem1_trace(&d, search.mode(cli.seed))?;
            emit(
                cli.json,
                &format!(
                    "hub {}: {} cycles, bound {} ({})",
                    t.hub,
                    t.packing.len(),
                    t.bound,
                    if t.dense.verified { "exactly verified" } else { "heuristic, unverified" }
                ),
                &t.to_value(),
            );
        }
        Cmd::Cert2 { file, search, budget } => {
            let d = read_digraph(&file)?;
            let (cert, bound) = theorem2_certificate(&d, search.mode(cli.seed), budget)?;
            emit(
                cli.json,
                &format!("directed tree-width >= {bound} (k = {}, verified)", cert.k),
                &cert.to_value(bound),
            );
        }
        Cmd::Bounds { r, known } => {
            let report = theorem_bounds(r)?;
            let mut value = report.to_value();
            let mut summary = report.human_line();
            if !known.is_empty() {
                let mut map = BTreeMap::new();
                for entry in &known {
                    let (kr, ub) = entry
                        .split_once(':')
                        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                        .ok_or_else(|| {
                            CliError::usage(format!("bad --known entry '{entry}', want r:ub"))
                        })?;
                    map.insert(kr, ub);
                }
                let propagated = propagate_upper_bounds(&map, r);
                value["c_upper_propagated"] = json!(propagated);
                summary = format!("{summary} c_upper_propagated={propagated}");
            }
            emit(cli.json, &summary, &value);
        }
        Cmd::Gen(gen) => {
            let d = match gen {
                GenCmd::Wall { k } => cylindrical_wall(k)?.0,
                GenCmd::Complete { n } => complete_biorientation(n)?,
                GenCmd::Blowup { file, b } => blow_up(&read_digraph(&file)?, b)?,
                GenCmd::Regular { n, r } => random_regular_digraph(n, r, cli.seed)?,
                GenCmd::Join { file1, file2 } => {
                    join_construction(&read_digraph(&file1)?, &read_digraph(&file2)?)
                }
            };
            print!("{}", emit_digraph(&d));
        }
        Cmd::Verify { witness, file, u, w, r, beta, gamma, budget } => {
            let d = read_digraph(&file)?;
            let text = std::fs::read_to_string(&witness)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", witness.display())))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", witness.display())))?;
            let parsed = parse_witness(&value)?;
            let endpoints = match (u, w) {
                (Some(u), Some(w)) => {
                    Some((vertex_set(&u, &d, "U")?, vertex_set(&w, &d, "W")?))
                }
                (None, None) => None,
                _ => return Err(CliError::usage("--U and --W must be given together")),
            };
            let density = match (r, beta, gamma) {
                (Some(r), Some(beta), Some(gamma)) => Some((r, beta, gamma)),
                (None, None, None) => None,
                _ => {
                    return Err(CliError::usage(
                        "--r, --beta and --gamma must be given together",
                    ))
                }
            };
            let ctx = VerifyContext { endpoints, density, budget };
            if verify_witness(&d, &parsed, &ctx)? {
                if !cli.json {
                    println!("witness verified");
                }
            } else {
                return Err(CliError::Failure("witness rejected".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = if cli.jobs > 0 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build();
        match pool {
            Ok(pool) => pool.install(|| run(cli)),
            Err(e) => Err(CliError::usage(format!("cannot build thread pool: {e}"))),
        }
    } else {
        run(cli)
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
