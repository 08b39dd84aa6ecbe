mod analyze;
mod sweep;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use strongres::families::FamilySpec;
use strongres::graph::graph_from_edge_list;
use strongres::{Error, Graph};

const SPEC_HELP: &str = "\
Family specs are written FAMILY:KEY=VALUE,KEY=VALUE. Families and keys:
  path:n  cycle:n  complete:n  complete_bipartite:r,s  star:r  hypercube:k
  grid:m,n  wheel:r  fan:r  comet:n,r  c1:r,t  sphere:k,r  kn_minus_e:n
  tree:edges=0-1/1-2/...  k1_plus_cliques:sizes=2/3/...
  realization_a:r,n  realization_b:r,t,n
  block_random:seed,blocks,min,max  unicyclic_random:seed,n[,t][,shape=free|leg|majors]
  tree_random:seed,n  gnp:seed,n,p
Example: c1:r=2,t=4";

#[derive(Parser)]
#[command(name = "strongres", version, about = "Strong metric dimension and strong partition dimension of graphs")]
#[command(after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct BudgetArg {
    /// Node limit for the partition search.
    #[arg(long, env = "STRONGRES_BUDGET", default_value_t = strongres::resolve::DEFAULT_SEARCH_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Write the edge list of a family spec.
    Gen {
        spec: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Analyze an edge-list file or a family spec.
    #[command(after_help = SPEC_HELP)]
    Analyze {
        /// Path to an edge-list file, or a family spec.
        input: String,
        /// Strong resolving graph summary.
        #[arg(long)]
        srg: bool,
        /// Strong metric dimension with a basis.
        #[arg(long)]
        dims: bool,
        /// Strong partition dimension with a partition basis.
        #[arg(long)]
        pds: bool,
        /// Lower and upper bounds on the strong partition dimension.
        #[arg(long)]
        bounds: bool,
        /// Emit one JSON object.
        #[arg(long)]
        json: bool,
        /// Leave timings out of the output.
        #[arg(long)]
        no_timings: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run a verification suite.
    Verify {
        suite: verify::Suite,
        /// Largest order for exhaustive corpora.
        #[arg(long)]
        max_n: Option<usize>,
        /// Number of seeded random instances.
        #[arg(long)]
        count: Option<usize>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Tabulate a family over parameter ranges as CSV.
    #[command(after_help = "Ranges are KEY=A..B (inclusive) or KEY=VALUE, e.g. `sweep c1 r=2..3 t=4..7`.")]
    Sweep {
        family: String,
        ranges: Vec<String>,
        /// Add columns comparing 2 dim_s with pd_s + n - 2.
        #[arg(long)]
        explore_open_question: bool,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
}

/// Exit status for library errors.
pub(crate) fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 2,
        Some(Error::NotConnected) => 3,
        Some(Error::Parse { .. } | Error::InvalidFamily(_)) => 4,
        _ => 1,
    }
}

/// Reads `input` as an edge-list file when such a file exists, otherwise
/// parses it as a family spec.
pub(crate) fn load_graph(input: &str) -> anyhow::Result<(analyze::Input, Graph)> {
    let path = std::path::Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let g = graph_from_edge_list(&text)?;
        Ok((analyze::Input::File(input.to_string()), g))
    } else {
        let spec: FamilySpec = input.parse()?;
        let g = spec.generate()?;
        Ok((analyze::Input::Spec(spec.to_string()), g))
    }
}

pub(crate) fn write_output(output: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen { spec, output } => {
            let g = spec.parse::<FamilySpec>()?.generate()?;
            write_output(output.as_ref(), &g.to_edge_list())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze {
            input,
            srg,
            dims,
            pds,
            bounds,
            json,
            no_timings,
            budget,
        } => {
            let all = !(srg || dims || pds || bounds);
            let want = analyze::Want {
                srg: srg || all,
                dims: dims || all,
                pds: pds || all,
                bounds: bounds || all,
            };
            analyze::run(&input, want, json, !no_timings, budget.budget)
        }
        Command::Verify {
            suite,
            max_n,
            count,
            budget,
        } => verify::run(suite, max_n, count, budget.budget),
        Command::Sweep {
            family,
            ranges,
            explore_open_question,
            output,
            budget,
        } => {
            let csv = sweep::run(&family, &ranges, explore_open_question, budget.budget)?;
            write_output(output.as_ref(), &csv)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
