//! `rcng` - rainbow connection numbers, extremal constructions, and the
//! Nordhaus-Gaddum census, as reproducible commands.
//!
//! Human-readable output goes to stdout; machine-readable documents go
//! to `--out` and are byte-identical across reruns except for the
//! elapsed-time field. Exit status: 0 on success, 1 when a verification
//! does not hold, 2 on usage or input errors.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rcng_core::census::{
    ng_census, verify_bounds, verify_gamma_bound, verify_no_2_2, CensusOptions,
};
use rcng_core::constructions::{double_star, lower_family, small_case_pairs, ConstructedPair};
use rcng_core::graph::Graph;
use rcng_core::graph6::{parse_graph6, to_graph6};
use rcng_core::rainbow::{find_rainbow_path, is_rainbow_connected};
use rcng_core::solver::{rc_exact_with, SolverOptions};
use rcng_core::EdgeColoring;

#[derive(Parser)]
#[command(
    name = "rcng",
    version,
    about = "Rainbow connection toolkit: exact rc, extremal families, census"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact rainbow connection number with a witness.
    Rc {
        /// graph6 string, or @FILE to read one from a file
        #[arg(long)]
        graph6: String,
        /// Allow graphs larger than the default order limit
        #[arg(long)]
        effort: bool,
        /// Write the machine-readable certificate to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a coloring document makes the graph rainbow connected.
    Check {
        #[arg(long)]
        graph6: String,
        /// Coloring document path
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Print a rainbow path between two vertices, or NONE.
    Path {
        #[arg(long)]
        graph6: String,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Print the graph6 encoding of the complement.
    Complement {
        #[arg(long)]
        graph6: String,
    },
    /// Emit an extremal pair bundle (JSON lines to --out).
    Construct {
        #[arg(long)]
        family: FamilyArg,
        /// First star order (double-star)
        #[arg(long)]
        p: Option<usize>,
        /// Second star order (double-star)
        #[arg(long)]
        q: Option<usize>,
        /// Number of vertices (lower-family)
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exhaustive census and write the JSONL report.
    Census {
        #[arg(long)]
        n: usize,
        /// Required for the n=8 census
        #[arg(long)]
        effort: bool,
        /// Worker threads (0 = auto)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Chunk checkpoint file for long runs
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a theorem at a given order; exits 1 if it does not hold.
    Verify {
        #[arg(long)]
        theorem: TheoremArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        effort: bool,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Print the connected domination number.
    Gamma {
        #[arg(long)]
        graph6: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    DoubleStar,
    LowerFamily,
    SmallCases,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    No22,
    Bounds,
    Gammac,
}

/// Errors that map to exit status 2.
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn read_graph_arg(arg: &str) -> Result<Graph, UsageError> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    Ok(parse_graph6(&text)?)
}

fn read_coloring(path: &PathBuf) -> Result<EdgeColoring, UsageError> {
    let text = fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    Ok(EdgeColoring::parse_doc(&text)?)
}

fn write_out(out: &Option<PathBuf>, contents: &str) -> Result<(), UsageError> {
    if let Some(path) = out {
        fs::write(path, contents)
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn pair_summary(pair: &ConstructedPair) -> String {
    format!(
        "{}: n={} rc(G)={} rc(Gbar)={} sum={}",
        pair.label,
        pair.n(),
        pair.claimed_rc_g,
        pair.claimed_rc_gbar,
        pair.rc_sum()
    )
}

fn run(cli: Cli) -> Result<u8, UsageError> {
    match cli.command {
        Command::Rc { graph6, effort, out } => {
            let g = read_graph_arg(&graph6)?;
            let cert = rc_exact_with(&g, &SolverOptions { effort_override: effort })?;
            println!("rc {}", cert.value);
            println!("evidence {}", cert.evidence);
            print!("{}", cert.witness.to_doc());
            let machine = serde_json::json!({
                "graph6": to_graph6(&g),
                "value": cert.value,
                "evidence": cert.evidence.to_string(),
                "witness": cert.witness.to_doc(),
            });
            write_out(&out, &format!("{machine}\n"))?;
            Ok(0)
        }
        Command::Check { graph6, coloring } => {
            let g = read_graph_arg(&graph6)?;
            let c = read_coloring(&coloring)?;
            let ok = is_rainbow_connected(&g, &c)?;
            println!("{ok}");
            Ok(if ok { 0 } else { 1 })
        }
        Command::Path { graph6, coloring, from, to } => {
            let g = read_graph_arg(&graph6)?;
            let c = read_coloring(&coloring)?;
            match find_rainbow_path(&g, &c, from, to)? {
                Some(path) => {
                    let mut line = format!("{from}");
                    for (a, b) in path {
                        let color = c.color_of(a, b).expect("path edge is colored");
                        let _ = write!(line, " -{color}- {b}");
                    }
                    println!("{line}");
                }
                None => println!("NONE"),
            }
            Ok(0)
        }
        Command::Complement { graph6 } => {
            let g = read_graph_arg(&graph6)?;
            println!("{}", to_graph6(&g.complement()));
            Ok(0)
        }
        Command::Construct { family, p, q, n, out } => {
            let pairs = match family {
                FamilyArg::DoubleStar => {
                    let (p, q) = match (p, q) {
                        (Some(p), Some(q)) => (p, q),
                        _ => return Err(UsageError("double-star needs --p and --q".into())),
                    };
                    vec![double_star(p, q)?]
                }
                FamilyArg::LowerFamily => {
                    let n = n.ok_or_else(|| UsageError("lower-family needs --n".into()))?;
                    vec![lower_family(n)?]
                }
                FamilyArg::SmallCases => small_case_pairs()?,
            };
            let mut machine = String::new();
            for pair in &pairs {
                println!("{}", pair_summary(pair));
                let line =
                    serde_json::to_string(&pair.bundle()).expect("bundle serializes");
                machine.push_str(&line);
                machine.push('\n');
            }
            write_out(&out, &machine)?;
            Ok(0)
        }
        Command::Census { n, effort, threads, checkpoint, out } => {
            let opts = CensusOptions { effort_override: effort, threads, checkpoint };
            let report = ng_census(n, &opts)?;
            println!(
                "n={}: {} classes, sum range [{}, {}]",
                report.n, report.class_count, report.min_sum, report.max_sum
            );
            println!(
                "min witness {}  max witness {}",
                report.min_witness, report.max_witness
            );
            println!(
                "scanned {} labeled graphs ({} both-connected), {} rc searches, {} search nodes, {} ms",
                report.stats.labeled_scanned,
                report.stats.labeled_both_connected,
                report.stats.rc_searches,
                report.stats.search_nodes,
                report.stats.elapsed_ms
            );
            write_out(&out, &report.to_jsonl())?;
            Ok(0)
        }
        Command::Verify { theorem, n, effort, threads } => {
            let opts = CensusOptions { effort_override: effort, threads, checkpoint: None };
            let holds = match theorem {
                TheoremArg::No22 => {
                    let report = verify_no_2_2(n, &opts)?;
                    println!("holds: {}", report.holds);
                    for w in &report.counterexamples {
                        println!("counterexample: {} / {}", w.graph6_g, w.graph6_gbar);
                    }
                    report.holds
                }
                TheoremArg::Bounds => {
                    let report = verify_bounds(n, &opts)?;
                    for line in &report.lines {
                        println!("{line}");
                    }
                    println!("holds: {}", report.holds);
                    report.holds
                }
                TheoremArg::Gammac => {
                    let report = verify_gamma_bound(n, &opts)?;
                    for line in &report.lines {
                        println!("{line}");
                    }
                    println!("holds: {}", report.holds);
                    report.holds
                }
            };
            Ok(if holds { 0 } else { 1 })
        }
        Command::Gamma { graph6 } => {
            let g = read_graph_arg(&graph6)?;
            let gamma = g.connected_domination_number()?;
            println!("{gamma}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
