// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use prodgraph::characterize::{decide, KindPair};
use prodgraph::io::{read_graph, to_graph6, write_edge_list};
use prodgraph::iso::{distance_regularity_check, find_isomorphism, DistanceRegularity, SearchOutcome};
use prodgraph::reproduce::reproduce;
use prodgraph::spectra::{adjacency_spectrum_with_tol, distance_spectrum_with_tol, DEFAULT_TOL};
use prodgraph::{product, Graph, ProductKind};

#[derive(Parser)]
#[command(name = "prodgraph", version, about = "Graph products, spectra and product isomorphism checks")]
struct Cli {
    /// Spectral clustering tolerance.
    #[arg(long, global = true, env = "PRODGRAPH_TOL", default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product of two graphs.
    Product {
        #[arg(long)]
        kind: ProductKind,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
    },
    /// Adjacency or distance spectrum with multiplicities.
    Spectrum {
        #[arg(long, value_enum)]
        matrix: MatrixKind,
        #[arg(long)]
        g: PathBuf,
    },
    /// Search for an isomorphism between two graphs.
    CheckIso {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        /// Write the map as "v phi(v)" lines.
        #[arg(long)]
        map_out: Option<PathBuf>,
    },
    /// Intersection array, or a witness that the graph is not distance-regular.
    DrgCheck {
        #[arg(long)]
        g: PathBuf,
    },
    /// Decide whether two products of the same factors are isomorphic.
    Characterize {
        #[arg(long)]
        pair: KindPair,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
    },
    /// Recompute every claim and report pass/fail.
    Reproduce {
        #[arg(long, default_value_t = 13)]
        max_n: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixKind {
    Adjacency,
    Distance,
}

/// Exit status: 0 success, 1 a claim failed or search was inconclusive,
/// 2 bad input or a violated hypothesis.
enum Failure {
    Claim,
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_graph(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Product { kind, g, h, out, format } => {
            let p = product(*kind, &load(g)?, &load(h)?).into_graph();
            let text = match format {
                Format::Edgelist => write_edge_list(&p),
                Format::Graph6 => format!("{}\n", to_graph6(&p)),
            };
            if cli.json && out.is_none() {
                return print_json(&json!({
                    "kind": kind,
                    "order": p.order(),
                    "edges": p.edge_count(),
                    "graph6": to_graph6(&p),
                }));
            }
            emit(out.as_deref(), &text)?;
            if cli.json {
                print_json(&json!({ "kind": kind, "order": p.order(), "edges": p.edge_count() }))?;
            }
            Ok(())
        }
        Command::Spectrum { matrix, g } => {
            let g = load(g)?;
            let s = match matrix {
                MatrixKind::Adjacency => adjacency_spectrum_with_tol(&g, cli.tol)?,
                MatrixKind::Distance => distance_spectrum_with_tol(&g, cli.tol)?,
            };
            if cli.json {
                return print_json(&json!({ "order": s.order(), "tol": s.tol(), "clusters": s.clusters() }));
            }
            for (value, mult) in s.clusters() {
                println!("{value:.9} x{mult}");
            }
            Ok(())
        }
        Command::CheckIso { g1, g2, map_out } => {
            let outcome = find_isomorphism(&load(g1)?, &load(g2)?);
            if let (Some(path), Some(map)) = (map_out, outcome.map()) {
                let lines: String = map.as_slice().iter().enumerate().map(|(v, w)| format!("{v} {w}\n")).collect();
                emit(Some(path), &lines)?;
            }
            if cli.json {
                print_json(&outcome)?;
            } else {
                match &outcome {
                    SearchOutcome::Isomorphic { .. } => println!("isomorphic"),
                    SearchOutcome::NonIsomorphic { reason, .. } => println!("not isomorphic ({reason:?})"),
                    SearchOutcome::BudgetExceeded { nodes } => println!("undetermined: search budget exhausted after {nodes} nodes"),
                }
            }
            match outcome {
                SearchOutcome::BudgetExceeded { .. } => Err(Failure::Claim),
                _ => Ok(()),
            }
        }
        Command::DrgCheck { g } => {
            let result = distance_regularity_check(&load(g)?)?;
            if cli.json {
                return print_json(&result);
            }
            match result {
                DistanceRegularity::Regular { intersection_array } => {
                    println!("distance-regular, intersection array {intersection_array}")
                }
                DistanceRegularity::NotRegular { witness: w } => {
                    let family = format!("{:?}", w.family).to_lowercase();
                    println!(
                        "not distance-regular: {family}_{} is {} for {:?} but {} for {:?}",
                        w.distance, w.first_count, w.first, w.second_count, w.second
                    );
                }
            }
            Ok(())
        }
        Command::Characterize { pair, g, h } => {
            let (ka, kb) = pair.kinds();
            let d = decide(ka, kb, &load(g)?, &load(h)?)?;
            if cli.json {
                return print_json(&d);
            }
            let verdict = if d.isomorphic { "isomorphic" } else { "not isomorphic" };
            println!("{verdict} ({})", serde_json::to_value(d.rule)?.as_str().unwrap_or_default());
            Ok(())
        }
        Command::Reproduce { max_n, out } => {
            let report = reproduce(*max_n)?;
            if let Some(path) = out {
                emit(Some(path), &format!("{}\n", serde_json::to_string_pretty(&report)?))?;
            }
            if cli.json {
                print_json(&report)?;
            } else {
                for claim in &report.claims {
                    println!("{}", claim.line());
                }
            }
            if report.all_pass {
                Ok(())
            } else {
                Err(Failure::Claim)
            }
        }
    }
}
