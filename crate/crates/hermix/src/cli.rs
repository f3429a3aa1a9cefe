//! Command-line front end. Exit codes: 0 success, 1 verification failure
//! (including "not optimum" / "not equivalent" verdicts), 2 usage error,
//! 3 I/O or parse error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::census::{
    reproduce_cubic_scan, reproduce_theorem_3_1, reproduce_theorem_3_2, reproduce_theorem_4_3_k3,
    run_census, write_hits_jsonl, CensusMode, SearchSpace, Strategy,
};
use crate::cycles::{classify, four_cycles, holonomy};
use crate::error::Error;
use crate::graph::named_or_graph6;
use crate::hermitian::{hermitian_square, is_optimum};
use crate::hypercube::{phi0, reduce_to_phi0, verify_phi0, HypercubeOrientation};
use crate::mixed::{emit_mixed_json, parse_mixed_json, MixedGraph};
use crate::spectra::{energy_bound, hermitian_energy, DEFAULT_SOLVER_TOL};
use crate::switching::{iso_switching_equivalent, switching_equivalent, EquivalenceWitness};

#[derive(Parser)]
#[command(
    name = "hermix",
    version,
    about = "Hermitian energy of mixed graphs: exact optimality, spectra, switching equivalence and exhaustive censuses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Mixed,
    Oriented,
}

impl From<ModeArg> for CensusMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Mixed => CensusMode::Mixed,
            ModeArg::Oriented => CensusMode::Oriented,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print E_H, the n*sqrt(D) bound, the gap and the optimum verdict.
    Energy {
        input: PathBuf,
        /// Tolerance for the optimum verdict on the energy gap.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Exact H^2 = D*I verdict (no floating point).
    CheckOptimum { input: PathBuf },
    /// Per-4-cycle holonomy and type table.
    Cycles { input: PathBuf },
    /// Decide switching equivalence of two mixed graphs; print a witness.
    SwitchEquiv {
        a: PathBuf,
        b: PathBuf,
        /// Also try underlying-graph automorphisms (n <= 10).
        #[arg(long)]
        iso: bool,
    },
    /// Hypercube orientation tooling.
    Hypercube {
        #[command(subcommand)]
        command: HypercubeCommand,
    },
    /// Census of optimum edge-state assignments over one underlying graph.
    Census {
        /// graph6 string or a named graph: K<n>, C<n>, Q<k>, K33, prism.
        graph: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Backtracking with orthogonality cuts instead of full scan.
        #[arg(long)]
        pruned: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Report file (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Exclude wall time from the report so identical runs diff equal.
        #[arg(long)]
        no_meta: bool,
        /// Also write the raw hits as JSON lines.
        #[arg(long)]
        hits: Option<PathBuf>,
    },
    /// Named verification runs: thm3.1, thm3.2, thm4.3-k3, cubic-scan.
    Reproduce {
        target: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        no_meta: bool,
    },
}

#[derive(Subcommand)]
enum HypercubeCommand {
    /// Emit the optimum orientation of Q_k as mixed-graph JSON.
    Gen {
        #[arg(short)]
        k: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact H^2 = k*I and 4-cycle checks; numeric energy for k <= 8.
    Verify {
        #[arg(short)]
        k: u32,
    },
    /// Reduce an optimum orientation onto the standard one; print the signs.
    Reduce { input: PathBuf },
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap reserves exit code 2 for usage errors; keep help/version at 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Io(_)
        | Error::Json(_)
        | Error::MixedJson(_)
        | Error::UnknownState(_)
        | Error::Graph6Empty
        | Error::Graph6InvalidByte { .. }
        | Error::Graph6Truncated { .. }
        | Error::Graph6LongForm
        | Error::Graph6TooLarge(_)
        | Error::UnorderedEdge { .. }
        | Error::DuplicateEdge(_, _)
        | Error::SelfLoop(_)
        | Error::VertexOutOfRange { .. } => 3,
        Error::UnsupportedOrder(_, _)
        | Error::Usage(_)
        | Error::UnknownFixture(_)
        | Error::SpaceTooLarge { .. }
        | Error::ZeroDimension
        | Error::DimensionTooLarge(_, _) => 2,
        _ => 1,
    }
}

fn load_mixed(path: &Path) -> Result<MixedGraph, Error> {
    let text = fs::read_to_string(path)?;
    parse_mixed_json(&text)
}

fn write_or_print(output: Option<&Path>, content: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn print_witness(w: &EquivalenceWitness) {
    if let Some(perm) = &w.perm {
        println!("perm = {perm:?}");
    }
    println!("theta = {:?}", w.theta.signs());
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Energy { input, tol } => {
            let m = load_mixed(&input)?;
            let e = hermitian_energy(&m, DEFAULT_SOLVER_TOL)?;
            let bound = energy_bound(&m);
            let gap = bound - e;
            println!("E_H={e:.9}");
            println!("bound={bound:.9}");
            println!("gap={gap:.9}");
            println!("optimum: {}", if gap.abs() <= tol { "yes" } else { "no" });
            Ok(0)
        }
        Command::CheckOptimum { input } => {
            let m = load_mixed(&input)?;
            if is_optimum(&m) {
                let delta = m.graph().max_degree();
                println!("optimum: yes (H^2 = {delta}I)");
                Ok(0)
            } else {
                let delta = m.graph().max_degree();
                let sq = hermitian_square(&m);
                let off = (0..m.graph().vertex_count())
                    .flat_map(|i| (0..m.graph().vertex_count()).map(move |j| (i, j)))
                    .find(|&(i, j)| {
                        let want = if i == j {
                            crate::hermitian::GaussianInt::new(delta as i64, 0)
                        } else {
                            crate::hermitian::GaussianInt::ZERO
                        };
                        sq.get(i, j) != want
                    });
                match off {
                    Some((i, j)) => println!(
                        "optimum: no (H^2 entry ({i}, {j}) = {} != {})",
                        sq.get(i, j),
                        if i == j { format!("{delta}") } else { "0".to_string() }
                    ),
                    None => println!("optimum: no"),
                }
                Ok(1)
            }
        }
        Command::Cycles { input } => {
            let m = load_mixed(&input)?;
            for quad in four_cycles(m.graph()) {
                let h = holonomy(&m, &quad)?;
                let ty = classify(&m, &quad)?;
                let [u, x, v, y] = quad.vertices();
                println!("({u}, {x}, {v}, {y}) holonomy={h} type={ty:?}");
            }
            Ok(0)
        }
        Command::SwitchEquiv { a, b, iso } => {
            let ma = load_mixed(&a)?;
            let mb = load_mixed(&b)?;
            let witness = if iso {
                let aut = crate::graph::automorphisms(ma.graph())?;
                iso_switching_equivalent(&ma, &mb, &aut)?
            } else {
                switching_equivalent(&ma, &mb)?
            };
            match witness {
                Some(w) => {
                    print_witness(&w);
                    Ok(0)
                }
                None => {
                    println!("not equivalent");
                    Ok(1)
                }
            }
        }
        Command::Hypercube { command } => hypercube_command(command),
        Command::Census { graph, mode, pruned, jobs, output, no_meta, hits } => {
            let g = named_or_graph6(&graph)?;
            let strategy = if pruned { Strategy::Pruned } else { Strategy::Full };
            let mode = CensusMode::from(mode);
            if let Some(hits_path) = &hits {
                let space = SearchSpace::new(g.clone(), mode);
                let outcome = crate::census::enumerate_optimum(&space, strategy, jobs)?;
                let mut file = fs::File::create(hits_path)?;
                write_hits_jsonl(&outcome.hits, &mut file)?;
            }
            let mut report = run_census(&g, mode, strategy, jobs)?;
            if no_meta {
                report = report.strip_meta();
            }
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            write_or_print(output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Reproduce { target, jobs, output, no_meta } => {
            let (text, pass) = match target.as_str() {
                "thm3.1" => {
                    let mut r = reproduce_theorem_3_1(jobs)?;
                    if no_meta {
                        r = r.strip_meta();
                    }
                    (serde_json::to_string_pretty(&r)?, true)
                }
                "thm3.2" => {
                    let mut r = reproduce_theorem_3_2(jobs)?;
                    if no_meta {
                        r = r.strip_meta();
                    }
                    (serde_json::to_string_pretty(&r)?, true)
                }
                "thm4.3-k3" => {
                    let mut r = reproduce_theorem_4_3_k3(jobs)?;
                    if no_meta {
                        r = r.strip_meta();
                    }
                    (serde_json::to_string_pretty(&r)?, true)
                }
                "cubic-scan" => {
                    let r = reproduce_cubic_scan(jobs)?;
                    (r.to_csv(), true)
                }
                other => {
                    return Err(Error::Usage(format!(
                        "unknown reproduce target {other:?}: expected thm3.1, thm3.2, thm4.3-k3 or cubic-scan"
                    )));
                }
            };
            let mut text = text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            write_or_print(output.as_deref(), &text)?;
            println!("{target}: {}", if pass { "PASS" } else { "FAIL" });
            Ok(0)
        }
    }
}

fn hypercube_command(command: HypercubeCommand) -> Result<i32, Error> {
    match command {
        HypercubeCommand::Gen { k, output } => {
            let o = phi0(k)?;
            let mut text = emit_mixed_json(o.mixed());
            text.push('\n');
            write_or_print(output.as_deref(), &text)?;
            Ok(0)
        }
        HypercubeCommand::Verify { k } => {
            let report = verify_phi0(k)?;
            println!(
                "H^2 = {}I: {}",
                report.k,
                if report.square_is_k_identity { "ok" } else { "FAIL" }
            );
            println!(
                "all {} 4-cycles all-arc type: {}",
                report.four_cycle_count,
                if report.all_cycles_all_arc_odd { "ok" } else { "FAIL" }
            );
            match report.energy {
                Some(e) => println!(
                    "energy={e:.9} target={:.9} (n = {})",
                    report.energy_target, report.n
                ),
                None => println!(
                    "energy check skipped (k > {})",
                    crate::hypercube::ENERGY_MAX_K
                ),
            }
            Ok(0)
        }
        HypercubeCommand::Reduce { input } => {
            let m = load_mixed(&input)?;
            let o = HypercubeOrientation::from_mixed(m)?;
            let theta = reduce_to_phi0(&o)?;
            println!("theta = {:?}", theta.signs());
            Ok(0)
        }
    }
}

