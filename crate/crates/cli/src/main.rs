//! `rkistab` binary.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cli::commands::{
    amp_cmd, experiment_cmd, method_cmd, parse_tols, poly_cmd, region_cmd, MethodOptions,
};
use cli::tables::ssp3_table;
use cli::{parse_method_spec, parse_region_target, run_table, CliError, TableOptions};
use methods_catalog::FormPreference;
use region::DEFAULT_RESOLUTION;

#[derive(Parser)]
#[command(
    name = "rkistab",
    version,
    about = "Internal stability of explicit Runge-Kutta methods"
)]
struct Cli {
    /// Structured JSON output where supported.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Natural,
    Butcher,
}

#[derive(Args)]
struct MethodFlags {
    /// Coefficient form to analyse.
    #[arg(long, value_enum, default_value = "natural")]
    form: Form,
    /// Append the embedded lower-order row.
    #[arg(long, conflicts_with = "no_embedded")]
    embedded: bool,
    /// Drop the embedded row.
    #[arg(long)]
    no_embedded: bool,
}

impl MethodFlags {
    fn options(&self) -> MethodOptions {
        MethodOptions {
            form: match self.form {
                Form::Natural => FormPreference::Natural,
                Form::Butcher => FormPreference::Butcher,
            },
            embedded: if self.embedded {
                Some(true)
            } else if self.no_embedded {
                Some(false)
            } else {
                None
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a method.
    Method {
        spec: String,
        #[command(flatten)]
        flags: MethodFlags,
    },
    /// Exact stability polynomial P and internal stability polynomials Q_j.
    Poly {
        spec: String,
        #[command(flatten)]
        flags: MethodFlags,
    },
    /// Boundary of the region of absolute stability as `re,im` CSV.
    Region {
        /// A method spec or `taylor:p`.
        target: String,
        #[arg(long)]
        half_plane: bool,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[command(flatten)]
        flags: MethodFlags,
    },
    /// Maximum internal amplification factors.
    Amp {
        /// Method spec; omit when using `--table`.
        spec: Option<String>,
        #[arg(long)]
        half_plane: bool,
        /// Check the proved bounds for the family; violations exit with code 3.
        #[arg(long)]
        check_bounds: bool,
        /// Emit a family table instead of a single report (`ssp3`).
        #[arg(long)]
        table: Option<String>,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        #[command(flatten)]
        flags: MethodFlags,
    },
    /// Adaptive tolerance sweep with injected roundoff.
    Experiment {
        /// Test problem; only `d2` is available.
        problem: String,
        #[arg(long)]
        method: String,
        /// Decade range `1e-4..1e-12` or a comma list.
        #[arg(long, default_value = "1e-4..1e-12")]
        tols: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Disable roundoff injection.
        #[arg(long)]
        no_roundoff: bool,
        #[arg(long, value_enum, default_value = "natural")]
        form: Form,
    },
    /// Reproduction tables; run `rkistab tables list` for the ids.
    Tables {
        id: String,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Largest order for per-order tables.
        #[arg(long)]
        p_max: Option<u32>,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
    },
}

fn default_p_max(id: &str) -> u32 {
    match id {
        "taylor-radius" | "taylor-radius-half" => 20,
        "em" => 8,
        "em-zero" => 10,
        _ => 8,
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Method { spec, flags } => {
            method_cmd(flags.options().apply(parse_method_spec(spec)?), json)
        }
        Command::Poly { spec, flags } => {
            poly_cmd(flags.options().apply(parse_method_spec(spec)?), json)
        }
        Command::Region {
            target,
            half_plane,
            resolution,
            flags,
        } => {
            let target = match parse_region_target(target)? {
                cli::RegionTarget::Method(s) => cli::RegionTarget::Method(flags.options().apply(s)),
                t => t,
            };
            region_cmd(target, *half_plane, *resolution)
        }
        Command::Amp {
            spec,
            half_plane,
            check_bounds,
            table,
            n_max,
            resolution,
            flags,
        } => match (table, spec) {
            (Some(t), _) if t == "ssp3" => ssp3_table(*n_max),
            (Some(t), _) => Err(CliError::Usage(format!(
                "unknown amp table {t:?}; available: ssp3"
            ))),
            (None, Some(s)) => amp_cmd(
                flags.options().apply(parse_method_spec(s)?),
                *half_plane,
                *check_bounds,
                json,
                *resolution,
            ),
            (None, None) => Err(CliError::Usage("amp needs a method spec or --table".into())),
        },
        Command::Experiment {
            problem,
            method,
            tols,
            seed,
            no_roundoff,
            form,
        } => {
            let opts = MethodFlags {
                form: *form,
                embedded: false,
                no_embedded: false,
            }
            .options();
            experiment_cmd(
                problem,
                opts.apply(parse_method_spec(method)?),
                &parse_tols(tols)?,
                *seed,
                !no_roundoff,
                json,
            )
        }
        Command::Tables {
            id,
            resolution,
            p_max,
            n_max,
        } => {
            if id == "list" {
                return Ok(cli::TABLES
                    .iter()
                    .map(|t| format!("{}\t{}\n", t.id, t.description))
                    .collect());
            }
            let opts = TableOptions {
                resolution: *resolution,
                p_max: p_max.unwrap_or(default_p_max(id)),
                n_max: *n_max,
            };
            run_table(id, opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("rkistab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
