//! File formats and command implementations behind the `spectre` binary.

pub mod commands;
pub mod edgelist;
mod error;
pub mod json;

pub use error::{CliError, Result};

/// Column order of `sweep` output.
pub const CSV_HEADER: [&str; 9] = [
    "family",
    "params",
    "nodes",
    "radix",
    "rho2_upper",
    "bw_upper",
    "prop_bw",
    "ramanujan_rho2",
    "ramanujan_prop_bw",
];

/// Environment variable overriding the eigensolver's dimension guard.
pub const MAX_N_VAR: &str = "SPECTRE_MAX_N";

/// Applies `SPECTRE_MAX_N` if set.
pub fn apply_env_limit() -> Result<()> {
    if let Ok(v) = std::env::var(MAX_N_VAR) {
        let n = v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}='{v}' is not a positive integer")))?;
        spectre_core::eigen::set_max_dimension(n);
    }
    Ok(())
}
