use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weakcross_cli::{cmd_biproduct, cmd_generate, cmd_verify, Flags, Outcome, DEFAULT_SEED, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "weakcross", about = "Exact checks of weak crossed biproducts of groupoid algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Check the groupoid axioms and the weak Hopf algebra laws of its algebra.
    Verify {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the biproduct of the factorization in the file and compare it
    /// with the closed form.
    Biproduct {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Print a random factorized groupoid in .gpd form.
    Generate {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn finish(out: Outcome) -> ExitCode {
    if let Some(r) = &out.report {
        print!("{}", r.render_text());
    }
    if let Some(m) = &out.message {
        eprintln!("{m}");
    }
    ExitCode::from(out.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    match cli.command {
        Command::Verify { file, report } => finish(cmd_verify(&file, &Flags { report, dump: None })),
        Command::Biproduct { file, report, dump } => finish(cmd_biproduct(&file, &Flags { report, dump })),
        Command::Generate { out } => {
            let text = cmd_generate(cli.seed);
            match out {
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("{}: {e}", path.display());
                        ExitCode::from(EXIT_INPUT as u8)
                    }
                },
                None => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
            }
        }
    }
}
