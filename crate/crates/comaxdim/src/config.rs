//! Resource caps and oracle policy.
//!
//! Library functions never read the environment themselves; the caller
//! builds a [`Caps`] (the CLI layers `COMAXDIM_*` variables and flags on
//! top of the defaults) and passes it down, so results are reproducible.

use crate::{Error, Result};

/// Environment variable overriding the ideal enumeration cap.
pub const ENV_ENUM_CAP: &str = "COMAXDIM_ENUM_CAP";
/// Environment variable overriding the exact solver vertex cap.
pub const ENV_SOLVE_CAP: &str = "COMAXDIM_SOLVE_CAP";
/// Environment variable overriding the brute-force vertex cap.
pub const ENV_BRUTE_CAP: &str = "COMAXDIM_BRUTE_CAP";

/// Hard limits for enumeration and exact search.
///
/// Exceeding a cap is an explicit [`Error::CapExceeded`], never a silent
/// approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Maximum number of ideals enumerated per ring (product of `k_i + 1`).
    pub enum_cap: u64,
    /// Maximum vertex count accepted by the exact vertex-cover solver.
    pub solve_cap: usize,
    /// Maximum vertex count accepted by brute-force dimension search.
    pub brute_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enum_cap: 1 << 20,
            solve_cap: 300,
            brute_cap: 30,
        }
    }
}

impl Caps {
    /// Defaults overlaid with any `COMAXDIM_*` environment variables.
    pub fn from_env() -> Result<Self> {
        let mut caps = Caps::default();
        if let Some(v) = read_env(ENV_ENUM_CAP)? {
            caps.enum_cap = v;
        }
        if let Some(v) = read_env(ENV_SOLVE_CAP)? {
            caps.solve_cap = v as usize;
        }
        if let Some(v) = read_env(ENV_BRUTE_CAP)? {
            caps.brute_cap = v as usize;
        }
        Ok(caps)
    }
}

fn read_env(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::InvalidArgument(format!("{name} must be a non-negative integer, got `{text}`"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => Err(Error::InvalidArgument(format!(
            "{name} is not valid unicode"
        ))),
    }
}

/// Whether verification runs the brute-force oracle next to the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Pipeline only.
    Off,
    /// Run the oracle when the graph fits under the brute cap, skip otherwise.
    Auto,
    /// Run the oracle unconditionally; over-cap graphs are an error.
    Require,
}

impl OracleMode {
    /// Decide whether to run the oracle for a graph of `n` vertices.
    pub fn should_run(self, n: usize, caps: &Caps) -> Result<bool> {
        match self {
            OracleMode::Off => Ok(false),
            OracleMode::Auto => Ok(n <= caps.brute_cap),
            OracleMode::Require => {
                if n <= caps.brute_cap {
                    Ok(true)
                } else {
                    Err(Error::CapExceeded {
                        what: "brute-force search",
                        needed: n as u128,
                        cap: caps.brute_cap as u128,
                    })
                }
            }
        }
    }
}
