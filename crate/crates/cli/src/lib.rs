//! Command line front end: workspace files, command dispatch and report output.

pub mod commands;
pub mod error;
pub mod output;
pub mod workspace;

pub use commands::{report_all, run_command, Options};
pub use error::{CliError, CliResult};
pub use output::{emit_report, exit_code, Format};
pub use workspace::{parse_workspace, parse_workspace_str, Workspace};

/// Loads `path`, runs `cmd` and renders the report. Returns the output and exit status.
pub fn execute(path: &std::path::Path, cmd: &str, args: &[String], opts: &Options, format: Format) -> CliResult<(String, i32)> {
    let ws = parse_workspace(path)?;
    let report = run_command(&ws, cmd, args, opts)?;
    Ok((emit_report(&report, format), exit_code(&report)))
}
