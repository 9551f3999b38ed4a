use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use geodex::game::{SearchConfig, DEFAULT_BUDGET};
use geodex::Graph;
use geodex_cli::commands::{self, CommandError, SolverChoice, VerifyFamily, VerifyOptions};
use geodex_cli::server::{self, ServeConfig};
use geodex_cli::source::{parse_inline_edges, read_graph_file, FamilySpec, SourceError};

#[derive(Parser)]
#[command(name = "geodex", version, about = "Solve, verify and play the closed geodetic game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Grundy value and outcome of a graph.
    Solve(SolveArgs),
    /// Compare a solver family against exhaustive search on generated instances.
    Verify(VerifyArgs),
    /// Print `param,grundy` rows for a one-parameter family.
    Table(TableArgs),
    /// Run the HTTP play service.
    Serve(ServeArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file in edge-list format.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Inline edges such as "0-1,1-2".
    #[arg(long)]
    edges: Option<String>,
    #[arg(long, value_name = "NAME")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    #[arg(long)]
    seed: Option<u64>,
    /// Edge probability for random-graph.
    #[arg(long)]
    p: Option<f64>,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph, SourceError> {
        match (&self.input, &self.edges, &self.family) {
            (Some(path), None, None) => read_graph_file(path),
            (None, Some(edges), None) => parse_inline_edges(edges, self.n),
            (None, None, Some(name)) => FamilySpec {
                name: name.clone(),
                n: self.n,
                m: self.m,
                dims: self.dims.clone(),
                seed: self.seed,
                p: self.p,
            }
            .build(),
            _ => Err(SourceError::NoSource),
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// auto, brute, tree, block, cactus or closed-form.
    #[arg(long, default_value = "auto")]
    solver: String,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// tree, block, cactus, closed-forms or product.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 1)]
    from: usize,
    #[arg(long, default_value_t = 10)]
    to: usize,
    /// Fixed first part size for complete-bipartite.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    host: IpAddr,
    /// Idle seconds before a session is dropped.
    #[arg(long, default_value_t = 3600)]
    ttl_secs: u64,
    /// Seconds allowed for one engine computation.
    #[arg(long, default_value_t = 10)]
    timeout_secs: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

fn search(budget: u64) -> SearchConfig {
    SearchConfig { budget, ..SearchConfig::default() }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn run(cli: Cli) -> Result<ExitCode, CommandError> {
    match cli.command {
        Command::Solve(args) => {
            let solver = SolverChoice::parse(&args.solver)
                .ok_or_else(|| CommandError::Usage(format!("unknown solver {:?}", args.solver)))?;
            let graph = args.graph.load()?;
            let report = commands::solve(&graph, solver, search(args.budget))?;
            println!("{}", if args.json { to_json(&report) } else { report.text() });
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let family = VerifyFamily::parse(&args.family)
                .ok_or_else(|| CommandError::Usage(format!("unknown verify family {:?}", args.family)))?;
            let opts = VerifyOptions { count: args.count, max_n: args.max_n, seed: args.seed, config: search(args.budget) };
            let report = commands::verify(family, opts)?;
            print!("{}", if args.json { to_json(&report) + "\n" } else { report.text() });
            Ok(match (report.mismatches.is_empty(), report.flagged.is_empty()) {
                (false, _) => ExitCode::from(1),
                (true, false) => ExitCode::from(3),
                (true, true) => ExitCode::SUCCESS,
            })
        }
        Command::Table(args) => {
            let base = FamilySpec { name: args.family, m: args.m, seed: args.seed, ..FamilySpec::default() };
            let rows = commands::table(&base, args.from, args.to, search(args.budget))?;
            print!("{}", commands::table_csv(&rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Serve(args) => {
            let config = ServeConfig {
                ttl: Duration::from_secs(args.ttl_secs),
                engine_timeout: Duration::from_secs(args.timeout_secs),
                budget: args.budget,
            };
            let runtime = tokio::runtime::Runtime::new()
                .map_err(|e| CommandError::Usage(format!("cannot start runtime: {e}")))?;
            runtime
                .block_on(server::serve(SocketAddr::new(args.host, args.port), config))
                .map_err(|e| CommandError::Usage(format!("server error: {e}")))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
