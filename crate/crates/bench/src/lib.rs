//! Shared fixtures for the benchmarks.

use std::path::PathBuf;

use stabcat_cli::{parse_workspace, Workspace};

/// A shipped fixture workspace by file name, e.g. `d2.ws`.
pub fn fixture(name: &str) -> Workspace {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    parse_workspace(&path).unwrap_or_else(|e| panic!("{name}: {e}"))
}
