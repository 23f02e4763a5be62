use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use unproj_cli::commands::{self, CliError, Common, FSource};
use unproj_cli::golden;
use unproj_cli::grid::Grid;
use unproj_core::Field;

#[derive(Parser, Debug)]
#[command(
    name = "unproj",
    version,
    about = "Unprojection of rational normal scrolls: builders, checks and scans"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: Field,
    /// Degree bound for Hilbert tables and basis checks.
    #[arg(long, global = true)]
    degree_bound: Option<u64>,
    /// Directory holding golden.json.
    #[arg(long, global = true)]
    golden_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build F(m,n) and verify its structure.
    Scroll { m: usize, n: usize },
    /// Build the unprojection ring of F(m,n) for a divisor or polynomial f.
    #[command(group(ArgGroup::new("source").required(true).args(["points", "f"])))]
    Unproject {
        m: usize,
        n: usize,
        /// Points `a:b` or `a:b@k`, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        points: Vec<String>,
        /// Homogeneous polynomial in the scroll variables.
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        /// Also run the Rees-algebra eliminations.
        #[arg(long)]
        rees: bool,
    },
    /// Intersection-lattice computations.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Run the verification grid.
    VerifyAll {
        /// Bounds such as `m<=2 n<=2 k<=2`.
        #[arg(long, num_args = 1..)]
        grid: Vec<String>,
        /// Rewrite golden values from this run.
        #[arg(long)]
        update_golden: bool,
        /// Skip the Rees eliminations.
        #[arg(long)]
        no_rees: bool,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Blow-up chain over a divisor on a fibre.
    Chain {
        /// Multiplicities of the points, comma separated.
        #[arg(long = "D", value_delimiter = ',', required = true)]
        d: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        hirzebruch: i64,
        /// Index of the point lying on the negative section.
        #[arg(long)]
        on_delta0: Option<usize>,
    },
    /// Elementary transformation of F_d at one point.
    Elementary {
        d: i64,
        #[arg(long)]
        on_delta0: bool,
    },
    /// Numerology of the odd Horikawa surface over F(m,n).
    Horikawa {
        m: usize,
        n: usize,
        #[arg(long)]
        infinitely_near: bool,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: unproj_core::Error| e.to_string())
}

fn run(cli: Cli) -> Result<unproj_cli::ReportEnvelope, CliError> {
    let common = Common {
        field: cli.field,
        degree_bound: cli.degree_bound,
        golden_dir: cli.golden_dir.unwrap_or_else(golden::default_dir),
    };
    match cli.command {
        Command::Scroll { m, n } => commands::scroll(m, n, &common),
        Command::Unproject {
            m,
            n,
            points,
            f,
            rees,
        } => {
            let source = match f {
                Some(f) => FSource::Poly(f),
                None => FSource::Points(points),
            };
            commands::unproject(m, n, &source, rees, &common)
        }
        Command::Lattice(LatticeCommand::Chain {
            d,
            hirzebruch,
            on_delta0,
        }) => commands::lattice_chain(&d, hirzebruch, on_delta0),
        Command::Lattice(LatticeCommand::Elementary { d, on_delta0 }) => {
            commands::lattice_elementary(d, on_delta0)
        }
        Command::Lattice(LatticeCommand::Horikawa {
            m,
            n,
            infinitely_near,
        }) => commands::lattice_horikawa(m, n, infinitely_near),
        Command::VerifyAll {
            grid,
            update_golden,
            no_rees,
        } => {
            let grid = Grid::parse(&grid).map_err(CliError::Usage)?;
            commands::verify_all(grid, update_golden, !no_rees, &common)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            let text = if json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
