use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use indpoly::commands::{
    cmd_analyze, cmd_oracle, cmd_poly, cmd_search, cmd_verify, Property, SearchKind,
    SearchMode, SearchOptions,
};
use indpoly::engine::DEFAULT_ORACLE_CAP;
use indpoly::Error;

const VIOLATION_EXIT: u8 = 4;

const EXPR_HELP: &str = "\
Graph expression. Atoms:
  K(n) Kbar(n) P(n) C(n) S(n) W(n) Tri(n) TriK2(n) T1 T2
  Kmulti(n1, n2, ...)   complete multipartite; `3*120` repeats a part size
  graph{n; u-v, ...}    explicit graph on vertices 0..n
  file(\"path\")          edge-list file: first line n, then `u v` per line
Combinators:
  union(e, ...)  zykov(e, ...)  star(e)  rep(k, e)
  ej(e1, u, e2, v)   joins vertex u of e1 to vertex v of e2 by an edge;
                     u indexes e1, v indexes e2, and in the result the
                     vertices of e1 come first
Graphs too large to build fall back to closed forms when one exists.";

#[derive(Parser)]
#[command(name = "indpoly", version, about = "Exact independence polynomials of graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial, shape and structural flags of a graph.
    Analyze {
        #[arg(help = EXPR_HELP)]
        expr: String,
    },
    /// Coefficients of the independence polynomial.
    Poly {
        #[arg(help = EXPR_HELP)]
        expr: String,
    },
    /// Stable-set counts by brute-force subset enumeration.
    Oracle {
        #[arg(help = EXPR_HELP)]
        expr: String,
        /// Refuse graphs with more vertices than this (at most 26).
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        max_oracle_vertices: usize,
    },
    /// Check a named identity for every n up to --n-max.
    ///
    /// Identities: star, centipede-even, centipede-odd, spider-closed-form,
    /// spider-mode, lemma1 (the bound alpha*s_alpha <= n*s_(alpha-1) on
    /// random graphs), zykov-m.
    Verify {
        identity: String,
        #[arg(long)]
        n_max: usize,
        /// Seed for identities that draw random graphs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Test trees, or their star graphs, for a coefficient-shape property.
    Search {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = PropertyArg::Unimodal)]
        property: PropertyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random labeled trees per order in sample mode.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Trees,
    StarTrees,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Unimodal,
    LogConcave,
}

fn emit<T: serde::Serialize>(format: Format, report: &T, text: String) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(report).expect("reports serialize")
        ),
        Format::Text => print!("{text}"),
    }
}

/// Runs the command and returns whether it found no violation.
fn run(cli: &Cli) -> Result<bool, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Analyze { expr } => {
            let r = cmd_analyze(expr)?;
            emit(format, &r, r.to_text());
            Ok(true)
        }
        Command::Poly { expr } => {
            let r = cmd_poly(expr)?;
            emit(format, &r, r.to_text());
            Ok(true)
        }
        Command::Oracle {
            expr,
            max_oracle_vertices,
        } => {
            let r = cmd_oracle(expr, *max_oracle_vertices)?;
            emit(format, &r, r.to_text());
            Ok(r.matches_engine)
        }
        Command::Verify {
            identity,
            n_max,
            seed,
        } => {
            let r = cmd_verify(identity, *n_max, *seed)?;
            emit(format, &r, r.to_text());
            Ok(r.all_passed())
        }
        Command::Search {
            kind,
            n_max,
            mode,
            property,
            seed,
            samples,
        } => {
            let opts = SearchOptions {
                kind: match kind {
                    KindArg::Trees => SearchKind::Trees,
                    KindArg::StarTrees => SearchKind::StarTrees,
                },
                mode: match mode {
                    ModeArg::Exhaustive => SearchMode::Exhaustive,
                    ModeArg::Sample => SearchMode::Sample,
                },
                property: match property {
                    PropertyArg::Unimodal => Property::Unimodal,
                    PropertyArg::LogConcave => Property::LogConcave,
                },
                n_max: *n_max,
                seed: *seed,
                samples: *samples,
                ..SearchOptions::default()
            };
            let r = cmd_search(&opts)?;
            emit(format, &r, r.to_text());
            Ok(r.total_violations == 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(VIOLATION_EXIT),
        Err(e) => {
            if cli.format == Format::Json {
                let body = serde_json::json!({
                    "error": { "code": e.code(), "message": e.to_string() }
                });
                println!("{}", serde_json::to_string_pretty(&body).expect("json"));
            }
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
