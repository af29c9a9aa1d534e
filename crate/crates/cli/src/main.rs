use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use equimon_cli::commands::{self, What, EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED};
use equimon_cli::report::DEFAULT_VERIFY_CAP;
use equimon_cli::{InputError, Limits};

/// Count G-equivariant transformations of finite G-sets.
#[derive(Parser)]
#[command(name = "equimon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the box table and the four counts as JSON.
    Analyze { file: PathBuf },
    /// Compare every formula against brute-force enumeration.
    Verify {
        file: PathBuf,
        /// Maximum number of maps the oracle may enumerate.
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: u64,
        /// Skip the monoid generation check.
        #[arg(long)]
        skip_closure: bool,
    },
    /// List equivariant maps as image arrays.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: WhatArg,
        /// Maximum number of maps to print.
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Render the box poset as Graphviz DOT.
    Poset { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    End,
    Aut,
    Collapsings,
}

fn run(cli: Cli) -> Result<(String, i32), InputError> {
    let limits = Limits::from_env()?;
    Ok(match cli.command {
        Command::Analyze { file } => (commands::analyze(&file, limits)?, EXIT_OK),
        Command::Verify { file, cap, skip_closure } => {
            let (json, ok) = commands::verify(&file, limits, cap, skip_closure)?;
            (json, if ok { EXIT_OK } else { EXIT_VERIFICATION_FAILED })
        }
        Command::Enumerate { file, what, limit } => {
            let what = match what {
                WhatArg::End => What::End,
                WhatArg::Aut => What::Aut,
                WhatArg::Collapsings => What::Collapsings,
            };
            (commands::enumerate(&file, limits, what, limit)?, EXIT_OK)
        }
        Command::Poset { file } => (commands::poset(&file, limits)?, EXIT_OK),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
