//! Library side of the `expratio` command: argument parsing, the four
//! subcommands and their text, CSV and JSON renderings.
//!
//! Exit status: 0 on success, 1 when `verify` finds a contradiction, 2 on a
//! usage or parameter error.

mod classify;
mod eval;
mod output;
mod table;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "expratio",
    version,
    about = "Exponential-difference ratio functions and their sign-condition calculus"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum Function {
    G,
    F,
    Q,
    H,
    P,
}

impl Function {
    pub fn arity(self) -> usize {
        match self {
            Function::G | Function::F | Function::Q => 2,
            Function::H | Function::P => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Function::G => "G",
            Function::F => "F",
            Function::Q => "Q",
            Function::H => "H",
            Function::P => "P",
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate G, F, Q, H or P at one point or over a range
    Eval(eval::Args),
    /// Classify monotonicity and log-convexity of H, P or Q
    Classify(classify::Args),
    /// Cross-check the classifier against the numerical oracle on random draws
    Verify(verify::Args),
    /// Print the monotonicity decision table
    Table(table::Args),
}

/// A failed run: the exit status and, for status 2, the diagnostic.
pub enum Failure {
    Usage(String),
    Contradictions(String),
}

impl From<expratio::Error> for Failure {
    fn from(e: expratio::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<expratio::ParamError> for Failure {
    fn from(e: expratio::ParamError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn dispatch(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Eval(args) => eval::run(args),
        Command::Classify(args) => classify::run(args),
        Command::Verify(args) => verify::run(args),
        Command::Table(args) => Ok(table::run(args)),
    }
}

/// Everything one invocation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args`; the first item is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let out = |code, stdout: String, stderr: String| Outcome {
        code,
        stdout,
        stderr,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                out(2, String::new(), rendered)
            } else {
                out(0, rendered, String::new())
            };
        }
    };
    match dispatch(cli) {
        Ok(text) => out(0, text, String::new()),
        Err(Failure::Usage(msg)) => out(2, String::new(), format!("error: {msg}\n")),
        Err(Failure::Contradictions(text)) => out(1, text, String::new()),
    }
}
