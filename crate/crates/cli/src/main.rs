use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use tricox::suites::{self, CayleyConfig, DihedralConfig, DiscConfig, PentagonConfig, SearchConfig};
use tricox::Report;
use tricox_core::disc::DiscConstraints;
use tricox_core::graph::DEFAULT_VERTEX_CAP;

/// Exact checks of certificates about the (2,4,5) triangle Coxeter group.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Print each report as one JSON line (the human summary goes to stderr).
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads; defaults to TRICOX_THREADS, then to the CPU count.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay certificate suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Triangulated disc tools.
    #[command(subcommand)]
    Discs(Discs),
    /// Exploratory searches.
    #[command(subcommand)]
    Search(Search),
}

#[derive(Subcommand)]
enum Verify {
    /// The connecting-cliques implication list in the Cayley graph.
    CayleyCerts {
        /// Replay this JSON-lines certificate file instead of the built-in list.
        #[arg(long)]
        certs: Option<String>,
    },
    /// Chord closure in the 2m-gon from every seed.
    Dihedral {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=5))]
        order: u8,
    },
    /// Pentagon families, the d_n chain and endpoint distances.
    Pentagon {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
}

#[derive(Subcommand)]
enum Discs {
    /// All discs with the given boundary up to isomorphism.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, default_value_t = 10)]
    boundary: usize,
    #[arg(long, default_value_t = 12)]
    max_triangles: usize,
    /// Forbid edges between non-consecutive boundary vertices.
    #[arg(long)]
    no_chords: bool,
    /// Least number of triangles at each boundary vertex.
    #[arg(long, default_value_t = 0)]
    min_angle: usize,
    /// Every interior vertex lies in at least six triangles.
    #[arg(long)]
    locally_6_large: bool,
}

#[derive(Subcommand)]
enum Search {
    /// Breadth-first implication closure from the (FixD10, r FixD10) type.
    D10 {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        vertex_cap: usize,
    },
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Verify(Verify::CayleyCerts { certs }) => suites::cayley_certs(&CayleyConfig { certs: certs.clone() }),
        Command::Verify(Verify::Dihedral { order }) => suites::dihedral(&DihedralConfig { order: *order }),
        Command::Verify(Verify::Pentagon { max_n, radius, vertex_cap }) => {
            suites::pentagon(&PentagonConfig { max_n: *max_n, radius: *radius, vertex_cap: *vertex_cap })
        }
        Command::Discs(Discs::Enumerate(a)) => suites::discs(&DiscConfig {
            boundary: a.boundary,
            max_triangles: a.max_triangles,
            constraints: DiscConstraints {
                locally_6_large: a.locally_6_large,
                min_boundary_angle: a.min_angle,
                forbid_boundary_chords: a.no_chords,
            },
        }),
        Command::Search(Search::D10 { depth, radius, vertex_cap }) => {
            suites::search_d10(&SearchConfig { depth: *depth, radius: *radius, vertex_cap: *vertex_cap })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads.or_else(tricox::threads_from_env) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json_line());
                eprint!("{}", report.human());
            } else {
                print!("{}", report.human());
            }
            if report.is_verified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
