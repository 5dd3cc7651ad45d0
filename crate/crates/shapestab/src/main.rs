use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use shapestab::commands::{self, CheckOptions, MatrixOptions, Outcome};
use shapestab_core::{DEFAULT_MAX_STEPS, DEFAULT_MAX_WORD_LEN};

/// Decide whether an attractor's inclusion into its basin is a shape
/// equivalence from the endomorphism its dynamics induce on π₁.
#[derive(Parser)]
#[command(name = "shapestab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide stabilization of a free-group endomorphism.
    /// Exit 0: shape equivalence, 1: not, 2: error.
    Check {
        file: PathBuf,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
        /// The trapping region is a handlebody; describe the attractor's shape.
        #[arg(long)]
        handlebody: bool,
        /// Abort when an iterated image exceeds this many letters.
        #[arg(long, default_value_t = DEFAULT_MAX_WORD_LEN)]
        max_word_len: usize,
    },
    /// Test whether WORD lies in im Φ. Exit 0: member, 1: not.
    Member { file: PathBuf, word: String },
    /// Print the rank of im Φ.
    Rank { file: PathBuf },
    /// Print the abelianized matrix in matrix-file format.
    Abelianize { file: PathBuf },
    /// Image chain of a matrix file (or of an abelianized problem file).
    /// Exit 0: stabilizes, 1: never stabilizes, 2: inconclusive or error.
    Matrix {
        file: PathBuf,
        /// Step budget for integer chains.
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Report Ȟ_d(K;ℤ₂) in this degree, reducing integer matrices mod 2.
        #[arg(long)]
        degree: Option<usize>,
        /// The continuum lies in a surface; state its shape as a wedge of circles.
        #[arg(long)]
        surface: bool,
    },
    /// Run the regression corpus (the bundled one unless DIR is given).
    Corpus { dir: Option<PathBuf> },
}

fn read(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::error(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Check {
            file,
            json,
            handlebody,
            max_word_len,
        } => read(&file).map(|t| {
            commands::check(
                &t,
                CheckOptions {
                    json,
                    handlebody,
                    max_word_len,
                },
            )
        }),
        Command::Member { file, word } => read(&file).map(|t| commands::membership(&t, &word)),
        Command::Rank { file } => read(&file).map(|t| commands::rank(&t)),
        Command::Abelianize { file } => read(&file).map(|t| commands::abelianize_cmd(&t)),
        Command::Matrix {
            file,
            max_steps,
            degree,
            surface,
        } => read(&file).map(|t| {
            commands::matrix(
                &t,
                MatrixOptions {
                    max_steps,
                    degree,
                    surface,
                },
            )
        }),
        Command::Corpus { dir } => Ok(commands::corpus(dir.as_deref())),
    };
    result.unwrap_or_else(|e| e)
}

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.code as u8)
}
