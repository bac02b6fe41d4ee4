use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spectre::commands::{self, Metric, Output, PartitionSource};
use spectre::{apply_env_limit, CliError};

/// Spectral analysis of interconnection topologies.
///
/// Set SPECTRE_MAX_N to raise the eigensolver's dimension limit (2500).
#[derive(Parser)]
#[command(name = "spectre", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Write a topology as an edge list.
    Gen {
        /// Topology spec, e.g. `torus:k=4,d=2`.
        spec: String,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the family's automorphism generators as JSON here.
        #[arg(long)]
        automorphisms: Option<PathBuf>,
    },
    /// Report metrics of a graph as JSON.
    Analyze {
        /// Edge-list file or topology spec.
        input: String,
        /// Comma-separated subset of: spectrum, rho2, gap, lambda, ramanujan,
        /// diameter, bw-exact, bw-fiedler, iso, bounds-check.
        #[arg(long, default_value = "rho2,gap,lambda,ramanujan,diameter")]
        metrics: String,
    },
    /// Print the closed-form bounds row of a topology as JSON.
    Bounds { spec: String },
    /// Emit bounds rows over a parameter sweep as CSV.
    Sweep {
        /// Comma-separated family names (all when omitted).
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        #[arg(long, default_value_t = 64)]
        max_radix: u64,
        #[arg(long, default_value_t = 100_000)]
        max_nodes: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient a graph by automorphism orbits and check the spectrum.
    Reduce {
        /// Edge-list file or topology spec.
        graph: String,
        /// JSON array of permutation images. Specs with a built-in fixture
        /// may omit both this and --partition.
        #[arg(long, conflicts_with = "partition")]
        automorphisms: Option<PathBuf>,
        /// JSON array of class labels, one per vertex.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Average over each class instead of requiring an equitable partition.
        #[arg(long)]
        haemers: bool,
        /// Also write the quotient's arc list here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the LPS graph X^{p,q} as Ramanujan.
    Certify { p: u64, q: u64 },
}

fn run(verb: Verb) -> Result<Output, CliError> {
    apply_env_limit()?;
    match verb {
        Verb::Gen {
            spec,
            out,
            automorphisms,
        } => commands::gen(&spec, out.as_deref(), automorphisms.as_deref()),
        Verb::Analyze { input, metrics } => {
            commands::analyze(&input, &Metric::parse_list(&metrics)?)
        }
        Verb::Bounds { spec } => commands::bounds(&spec),
        Verb::Sweep {
            families,
            max_radix,
            max_nodes,
            out,
        } => commands::sweep(&families, max_radix, max_nodes, out.as_deref()),
        Verb::Reduce {
            graph,
            automorphisms,
            partition,
            haemers,
            out,
        } => {
            let source = match (&automorphisms, &partition) {
                (Some(a), _) => PartitionSource::Automorphisms(a),
                (None, Some(p)) => PartitionSource::Labels(p),
                (None, None) => PartitionSource::Builtin,
            };
            commands::reduce(&graph, source, haemers, out.as_deref())
        }
        Verb::Certify { p, q } => commands::certify(p, q),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
