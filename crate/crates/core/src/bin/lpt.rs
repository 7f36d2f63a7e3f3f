use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lpt::commands::{self, exit_code, Class, GenKind, GenParams};
use lpt::report::Report;
use lpt::suites::{run_suite, Suite};
use lpt::Error;

#[derive(Parser)]
#[command(name = "lpt", version, about = "Longest path transversals with exact certification")]
struct Cli {
    /// Print reports as JSON instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Longest path length, path count and exact transversal number.
    Oracle { graph: PathBuf },
    /// Run the construction for one graph class.
    Pipeline {
        #[arg(long)]
        class: Class,
        graph: PathBuf,
    },
    /// Representation-based extraction.
    Hgraph {
        #[command(subcommand)]
        command: HgraphCommand,
    },
    /// Emit instance files.
    Gen(GenArgs),
    /// Run a seeded verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum HgraphCommand {
    Extract {
        rep: PathBuf,
        /// PACE tree decomposition of the subdivision.
        #[arg(long)]
        td: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    kind: GenKind,
    /// Fixture name for `gen fixture`.
    name: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Comma-separated forbidden patterns, e.g. `P5,bull,chair`.
    #[arg(long, value_delimiter = ',')]
    forbid: Vec<String>,
    #[arg(long, default_value_t = 10_000)]
    budget: usize,
    /// Edge-list output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Representation JSON output file, for generators that have one.
    #[arg(long)]
    rep: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String, Error> {
    Ok(std::fs::read_to_string(path)?)
}

fn print(report: &Report, json: bool) {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Oracle { graph } => print(&commands::oracle_report(&read(&graph)?)?, cli.json),
        Command::Pipeline { class, graph } => {
            print(&commands::pipeline_report(class, &read(&graph)?)?, cli.json)
        }
        Command::Hgraph {
            command: HgraphCommand::Extract { rep, td },
        } => {
            let td = td.as_deref().map(read).transpose()?;
            let (report, ok) = commands::hgraph_report(&read(&rep)?, td.as_deref())?;
            print(&report, cli.json);
            if !ok {
                return Ok(4);
            }
        }
        Command::Gen(a) => {
            let params = GenParams {
                seed: a.seed,
                n: a.n,
                density: a.density,
                p: a.p,
                forbid: a.forbid,
                budget: a.budget,
                fixture: a.name,
            };
            let out = commands::generate(a.kind, &params)?;
            match a.out {
                Some(path) => std::fs::write(path, &out.edge_list)?,
                None => print!("{}", out.edge_list),
            }
            if let (Some(path), Some(json)) = (a.rep, out.rep_json) {
                std::fs::write(path, json)?;
            }
        }
        Command::Verify { suite, trials, seed } => {
            let report = run_suite(suite, trials, seed);
            print!("{}", report.render());
            if !report.is_clean() {
                return Ok(4);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
