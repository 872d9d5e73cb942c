use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use agpoly_core::Error as CoreError;

mod commands;
mod grid;
mod output;

#[derive(Parser)]
#[command(name = "agpoly", version, about = "Bigraded Hilbert polynomials d_N(k,l,r;q,z)")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute d_N by one method, e.g. `agpoly compute N=3 k=1 l=1 r=1`.
    Compute {
        /// Parameters as `N=.. k=.. l=.. r=..`.
        #[arg(required = true)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Fermionic)]
        method: Method,
        /// Series truncation in q (bosonic) or q-degree bound (oracle).
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite over a parameter grid.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// e.g. `N=2..4,k=0..2,l=0..k,r=0..k`.
        #[arg(long)]
        grid: Option<String>,
        /// Methods compared by `crosscheck`, comma separated.
        #[arg(long, value_delimiter = ',')]
        methods: Option<Vec<CrossMethodArg>>,
        #[arg(long, allow_hyphen_values = true)]
        cutoff: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// JSON file with default grids per suite.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Re-render a machine-format result file (`-` for stdin).
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fermionic,
    Enumerate,
    Transfer,
    Recursion,
    Bosonic,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Crosscheck,
    Stp,
    Recursion,
    Symmetry,
    Lemmas,
    Grouped,
    AndrewsGordon,
    Conjecture,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Crosscheck => "crosscheck",
            Suite::Stp => "stp",
            Suite::Recursion => "recursion",
            Suite::Symmetry => "symmetry",
            Suite::Lemmas => "lemmas",
            Suite::Grouped => "grouped",
            Suite::AndrewsGordon => "andrews-gordon",
            Suite::Conjecture => "conjecture",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CrossMethodArg {
    Fermionic,
    Enumerate,
    Transfer,
    Oracle,
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const NOT_DIVISIBLE: u8 = 3;
}

fn parse_assignments(tokens: &[String]) -> Result<[i64; 4]> {
    let mut vals: [Option<i64>; 4] = [None; 4];
    for tok in tokens.iter().flat_map(|t| t.split(',')).filter(|t| !t.is_empty()) {
        let (name, value) = tok
            .split_once('=')
            .ok_or_else(|| anyhow!("expected `name=value`, got `{tok}`"))?;
        let slot = match name {
            "N" => 0,
            "k" => 1,
            "l" => 2,
            "r" => 3,
            _ => bail!("unknown parameter `{name}`"),
        };
        let v = value.parse().with_context(|| format!("`{tok}` is not an integer"))?;
        if vals[slot].replace(v).is_some() {
            bail!("parameter `{name}` given twice");
        }
    }
    let mut out = [0; 4];
    for (i, name) in ["N", "k", "l", "r"].iter().enumerate() {
        out[i] = vals[i].ok_or_else(|| anyhow!("missing parameter `{name}`"))?;
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Command::Compute {
            params,
            method,
            cutoff,
            format,
        } => {
            let [n, k, l, r] = parse_assignments(&params)?;
            let result = commands::compute(n, k, l, r, method, cutoff)?;
            println!("{}", output::render_compute(&result, format)?);
            Ok(exit::OK)
        }
        Command::Verify {
            suite,
            grid,
            methods,
            cutoff,
            format,
            config,
        } => {
            let config = config.map(|p| commands::Config::load(&p)).transpose()?;
            let spec = match (grid, &config) {
                (Some(g), _) => g,
                (None, Some(c)) => c
                    .grid_for(suite)
                    .ok_or_else(|| anyhow!("config has no grid for `{}`", suite.name()))?,
                (None, None) => bail!("--grid or --config is required"),
            };
            let cutoff = cutoff.or(config.as_ref().and_then(|c| c.cutoff));
            let report = commands::verify(suite, &spec, methods.as_deref(), cutoff)?;
            print!("{}", output::render_report(&report, format)?);
            Ok(report.exit_code())
        }
        Command::Render { file, format } => {
            let text = if file.as_os_str() == "-" {
                std::io::read_to_string(std::io::stdin())?
            } else {
                std::fs::read_to_string(&file)
                    .with_context(|| format!("reading {}", file.display()))?
            };
            let result = output::parse_compute(&text)?;
            println!("{}", output::render_compute(&result, format)?);
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<CoreError>() {
                Some(CoreError::Inconsistent(_)) => exit::MISMATCH,
                _ => exit::USAGE,
            };
            ExitCode::from(code)
        }
    }
}
