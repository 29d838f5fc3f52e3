//! `binsys`: command-line access to the binsys library.
//!
//! Groupoids are read from GroupoidFile documents (`-` reads standard input)
//! and commands that produce a groupoid write one back to standard output,
//! so they compose through pipes. Reports are JSON tagged with `"schema": 1`.

use std::fs;
use std::io::{self, Read, Write};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use binsys::axioms::{algebra_classes, AxiomVector};
use binsys::claims::verify_claims;
use binsys::enumerate::{census, enumerate};
use binsys::factor::{self, Method};
use binsys::format::{dot, gpd};
use binsys::graph::{from_graph, to_digraph, to_graph};
use binsys::semigroup::{find_inverse, product};
use binsys::{classify, Error, Groupoid};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "binsys",
    version,
    about = "Finite binary systems and the ⋄ product"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write `A ⋄ B` as a groupoid file.
    Product { a: String, b: String },
    /// Factor a groupoid with one of the four methods.
    Derive {
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Write only this table, as a groupoid file.
        #[arg(long, value_enum, conflicts_with = "json")]
        emit: Option<Emit>,
        /// Write the factor pair as a JSON report.
        #[arg(long)]
        json: bool,
        file: String,
    },
    /// Prime, composite and normal verdicts as JSON.
    Classify { file: String },
    /// Axiom vector and algebra classes as JSON (needs a `zero:` line).
    Axioms { file: String },
    /// Convert between groupoids and graphs.
    Graph {
        #[command(subcommand)]
        action: GraphAction,
    },
    /// List every groupoid of an order, or count them with `--census`.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        census: bool,
    },
    /// Check the registered statements at one order.
    Verify {
        #[arg(long)]
        order: usize,
        /// Check this many random tables instead of all of them.
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long, requires = "sample")]
        seed: Option<u64>,
    },
    /// Write a two-sided ⋄-inverse, if there is one.
    Inverse { file: String },
}

#[derive(Subcommand)]
enum GraphAction {
    /// Groupoid file to a DOT `graph`.
    ToDot { file: String },
    /// DOT `graph` to a locally-zero groupoid file.
    FromDot { file: String },
    /// Groupoid with the orientation property to a DOT `digraph`.
    ToDigraph { file: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Ua,
    Au,
    Oj,
    Jo,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Ua => Method::Ua,
            MethodArg::Au => Method::Au,
            MethodArg::Oj => Method::Oj,
            MethodArg::Jo => Method::Jo,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Left,
    Right,
    Product,
}

enum Failure {
    Input(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_precondition() {
            Failure::Precondition(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: T,
}

fn read(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn load(path: &str) -> Result<Groupoid, Failure> {
    gpd::parse(&read(path)?).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

fn json<T: Serialize>(out: &mut String, body: T) {
    let text = serde_json::to_string_pretty(&Report {
        schema: SCHEMA,
        body,
    })
    .expect("reports serialize");
    out.push_str(&text);
    out.push('\n');
}

fn compact(g: &Groupoid) -> String {
    g.rows()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let mut out = String::new();
    match cli.command {
        Command::Product { a, b } => out = gpd::serialize(&product(&load(&a)?, &load(&b)?)?),
        Command::Derive {
            method,
            emit,
            json: as_json,
            file,
        } => {
            let g = load(&file)?;
            let pair = factor::derive(&g, method.into());
            if as_json {
                json(&mut out, &pair);
            } else if let Some(which) = emit {
                out = match which {
                    Emit::Left => gpd::serialize(&pair.left),
                    Emit::Right => gpd::serialize(&pair.right),
                    Emit::Product => gpd::serialize(&pair.product()),
                };
            } else {
                let m = Method::from(method);
                out.push_str(&format!(
                    "# {m} left factor\n{}",
                    gpd::serialize(&pair.left)
                ));
                out.push_str(&format!(
                    "\n# {m} right factor\n{}",
                    gpd::serialize(&pair.right)
                ));
                out.push_str(&format!("\n# product\n{}", gpd::serialize(&pair.product())));
                out.push_str(&format!(
                    "\nreproduces_target: {}\n",
                    pair.reproduces_target
                ));
            }
        }
        Command::Classify { file } => json(&mut out, classify(&load(&file)?)),
        Command::Axioms { file } => {
            let g = load(&file)?;
            #[derive(Serialize)]
            struct Body {
                axioms: AxiomVector,
                classes: binsys::axioms::AlgebraClasses,
            }
            let body = Body {
                axioms: AxiomVector::of(&g)?,
                classes: algebra_classes(&g)?,
            };
            json(&mut out, body);
        }
        Command::Graph { action } => {
            match action {
                GraphAction::ToDot { file } => {
                    let g = load(&file)?;
                    if !g.is_locally_zero() {
                        eprintln!("warning: {file} is not locally-zero, so the graph does not determine it");
                    }
                    out = dot::graph_to_dot(&to_graph(&g));
                }
                GraphAction::FromDot { file } => {
                    let graph = dot::parse_graph(&read(&file)?)
                        .map_err(|e| Failure::Input(format!("{file}: {e}")))?;
                    out = gpd::serialize(&from_graph(&graph));
                }
                GraphAction::ToDigraph { file } => {
                    out = dot::digraph_to_dot(&to_digraph(&load(&file)?)?)
                }
            }
        }
        Command::Enumerate {
            order,
            census: true,
        } => json(&mut out, census(order)?),
        Command::Enumerate {
            order,
            census: false,
        } => {
            for (k, g) in enumerate(order)?.enumerate() {
                out.push_str(&format!("{k}\t{}\n", compact(&g)));
            }
        }
        Command::Verify {
            order,
            sample,
            seed,
        } => {
            let reports = verify_claims(order, sample.zip(seed))?;
            let failed: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passed)
                .map(|r| r.claim)
                .collect();
            #[derive(Serialize)]
            struct Body<'a> {
                order: usize,
                checked_claims: usize,
                failed: Vec<&'a str>,
                reports: &'a [binsys::claims::ClaimReport],
            }
            json(
                &mut out,
                Body {
                    order,
                    checked_claims: reports.len(),
                    failed,
                    reports: &reports,
                },
            );
        }
        Command::Inverse { file } => match find_inverse(&load(&file)?)? {
            Some(h) => out = gpd::serialize(&h),
            None => eprintln!("no two-sided inverse exists"),
        },
    }
    Ok(out)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("BINSYS_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::Input(format!(
                "BINSYS_THREADS must be a positive integer, got {value:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    panic::set_hook(Box::new(|info| eprintln!("internal error: {info}")));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        configure_threads()?;
        run(cli)
    }));
    match outcome {
        Ok(Ok(text)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Input(m))) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Precondition(m))) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(_) => ExitCode::from(3),
    }
}
