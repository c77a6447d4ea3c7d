use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use xalg::{CommandError, CommandSpec, QFlag, RunOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact verifier for crossed modules of commutative algebras over prime
/// fields: pullback and induced base change, free crossed modules, and the
/// adjunction between the two functors, all checked by exhaustive search.
#[derive(Debug, Parser)]
#[command(name = "xalg", version, max_term_width = 100)]
struct Cli {
    /// Definition file with named algebras, morphisms, ideals and xmods
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    /// Output format for the report
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on exhaustive search spaces (number of candidates)
    #[arg(long, global = true, default_value_t = xalg_core::DEFAULT_MAX_SEARCH)]
    max_search: u64,

    /// Shuffle the execution order of catalog entries (never their results)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Include wall-clock timing in the report (breaks byte-for-byte
    /// reproducibility of the output)
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a crossed module and its structure lemmas
    Verify { name: String },
    /// Pull a crossed module back along a base morphism
    Pullback { xmod: String, phi: String },
    /// Induce a crossed module along a base morphism (balanced tensor)
    Induce { xmod: String, phi: String },
    /// Induce along a surjection via the quotient formula, checked against
    /// the tensor construction
    InduceEpi { xmod: String, phi: String },
    /// Induce an ideal chain D <= S <= R in closed form and compare
    InduceIdeal {
        algebra: String,
        s_ideal: String,
        d_ideal: String,
        /// Use the zero ideal of R/S as the distinguished ideal
        #[arg(long, conflicts_with_all = ["q_whole", "q_gens"])]
        q_zero: bool,
        /// Use all of R/S as the distinguished ideal
        #[arg(long, conflicts_with = "q_gens")]
        q_whole: bool,
        /// Generators of the distinguished ideal, in R/S coordinates,
        /// e.g. "1 0; 0 1"
        #[arg(long)]
        q_gens: Option<String>,
    },
    /// Count hom-sets on both sides of the base-change adjunction
    Adjunction {
        phi: String,
        d_xmod: String,
        c_xmod: String,
    },
    /// Build the free crossed module on named elements
    Free {
        algebra: String,
        #[arg(required = true)]
        values: Vec<String>,
    },
    /// Cross-validate the free presentation through its differential
    Koszul {
        algebra: String,
        #[arg(required = true)]
        values: Vec<String>,
    },
    /// Compute the multiplier algebra and its crossed module
    Multiplier { algebra: String },
    /// Run the bundled worked-example suite
    Catalog,
}

fn parse_gens(raw: &str) -> Result<Vec<Vec<u64>>, CommandError> {
    let mut out = Vec::new();
    for chunk in raw.split(';') {
        let trimmed = chunk.trim();
        if trimmed.is_empty() {
            continue;
        }
        let row: Result<Vec<u64>, _> = trimmed.split_whitespace().map(str::parse).collect();
        out.push(
            row.map_err(|e| CommandError::Usage(format!("bad --q-gens entry '{trimmed}': {e}")))?,
        );
    }
    Ok(out)
}

fn to_spec(command: &Command) -> Result<CommandSpec, CommandError> {
    Ok(match command {
        Command::Verify { name } => CommandSpec::Verify { name: name.clone() },
        Command::Pullback { xmod, phi } => CommandSpec::Pullback {
            xmod: xmod.clone(),
            phi: phi.clone(),
        },
        Command::Induce { xmod, phi } => CommandSpec::Induce {
            xmod: xmod.clone(),
            phi: phi.clone(),
        },
        Command::InduceEpi { xmod, phi } => CommandSpec::InduceEpi {
            xmod: xmod.clone(),
            phi: phi.clone(),
        },
        Command::InduceIdeal {
            algebra,
            s_ideal,
            d_ideal,
            q_zero,
            q_whole,
            q_gens,
        } => {
            let q = if *q_zero {
                Some(QFlag::Zero)
            } else if *q_whole {
                Some(QFlag::Whole)
            } else if let Some(raw) = q_gens {
                Some(QFlag::Generators(parse_gens(raw)?))
            } else {
                None
            };
            CommandSpec::InduceIdeal {
                algebra: algebra.clone(),
                s_ideal: s_ideal.clone(),
                d_ideal: d_ideal.clone(),
                q,
            }
        }
        Command::Adjunction {
            phi,
            d_xmod,
            c_xmod,
        } => CommandSpec::Adjunction {
            phi: phi.clone(),
            d_xmod: d_xmod.clone(),
            c_xmod: c_xmod.clone(),
        },
        Command::Free { algebra, values } => CommandSpec::Free {
            algebra: algebra.clone(),
            values: values.clone(),
        },
        Command::Koszul { algebra, values } => CommandSpec::Koszul {
            algebra: algebra.clone(),
            values: values.clone(),
        },
        Command::Multiplier { algebra } => CommandSpec::Multiplier {
            algebra: algebra.clone(),
        },
        Command::Catalog => CommandSpec::Catalog,
    })
}

fn execute(cli: &Cli) -> Result<(xalg::Report, bool), CommandError> {
    let spec = to_spec(&cli.command)?;
    let defs = match &cli.file {
        Some(path) => xalg::parse_file(path)?,
        None => {
            if !matches!(spec, CommandSpec::Catalog) {
                return Err(CommandError::Usage(
                    "this command needs --file <definitions>".into(),
                ));
            }
            xalg::DefinitionFile::default()
        }
    };
    let opts = RunOptions {
        max_search: cli.max_search,
        seed: cli.seed,
    };
    let started = Instant::now();
    let mut report = xalg::run(&spec, &defs, &opts)?;
    if cli.timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    let passed = report.passed();
    Ok((report, passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((report, passed)) => {
            let rendered = match cli.format {
                Format::Text => report.render_text(),
                Format::Json => report.render_json(),
            };
            print!("{rendered}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
