use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use stabcat::Budget;
use stabcat_cli::{execute, Format, Options};

/// Exact checks for cotorsion pairs, Hovey triples, triangulations and homotopy categories.
#[derive(Parser, Debug)]
#[command(name = "stabcat", version)]
struct Cli {
    /// Workspace file.
    workspace: PathBuf,
    /// Command to run (`help` lists them).
    command: String,
    /// Command arguments and command flags.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
    args: Vec<String>,
    /// Enumerate every vector of each space over a finite field up to the dimension cap.
    #[arg(long, global = true)]
    enumerate_full: bool,
    /// Largest dimension enumerated in full.
    #[arg(long, default_value_t = 10, global = true)]
    dim_cap: usize,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    machine: bool,
    /// Hovey triple to use.
    #[arg(long, global = true)]
    triple: Option<String>,
}

/// Moves global flags that follow the command out of the command arguments.
fn take_global_flags(cli: &mut Cli) -> Result<Vec<String>, String> {
    let mut rest = Vec::new();
    let mut it = std::mem::take(&mut cli.args).into_iter();
    while let Some(a) = it.next() {
        let mut value = |name: &str| it.next().ok_or_else(|| format!("{name} needs a value"));
        match a.as_str() {
            "--enumerate-full" => cli.enumerate_full = true,
            "--machine" => cli.machine = true,
            "--triple" => cli.triple = Some(value("--triple")?),
            "--dim-cap" => cli.dim_cap = value("--dim-cap")?.parse().map_err(|_| "--dim-cap expects a number".to_string())?,
            "--seed" => cli.seed = value("--seed")?.parse().map_err(|_| "--seed expects a number".to_string())?,
            _ => rest.push(a),
        }
    }
    Ok(rest)
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    let rest = match take_global_flags(&mut cli) {
        Ok(rest) => rest,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let budget = Budget { full: cli.enumerate_full, dim_cap: cli.dim_cap, seed: cli.seed, ..Budget::default() };
    let opts = Options { budget, triple: cli.triple };
    let format = if cli.machine { Format::Machine } else { Format::Text };
    match execute(&cli.workspace, &cli.command, &rest, &opts, format) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
