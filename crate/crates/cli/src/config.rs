//! Optional TOML configuration: tolerances, grid defaults, thread count.
//!
//! Precedence for the thread count, lowest to highest: built-in default,
//! config file, `CPULSE_THREADS` environment variable, `--threads` flag.

use std::path::Path;

use serde::Deserialize;

/// Environment variable overriding the configured thread count.
pub const THREADS_ENV_VAR: &str = "CPULSE_THREADS";

#[derive(Debug, Clone, PartialEq, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Worker threads for grid evaluations; 0 means one per core.
    pub threads: usize,
    pub tolerances: Tolerances,
    pub fidmap: FidmapDefaults,
    pub nogo: NogoDefaults,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Max-entry norm below which a first-order error operator counts as
    /// vanishing.
    pub robust: f64,
    /// Tolerance on `|tr U|/2` for identity-up-to-phase tests.
    pub trivial: f64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FidmapDefaults {
    pub eps_min: f64,
    pub eps_max: f64,
    pub f_min: f64,
    pub f_max: f64,
    pub resolution: usize,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NogoDefaults {
    pub resolution: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            robust: 1e-6,
            trivial: 1e-6,
        }
    }
}

impl Default for FidmapDefaults {
    fn default() -> Self {
        Self {
            eps_min: -0.2,
            eps_max: 0.2,
            f_min: -0.2,
            f_max: 0.2,
            resolution: 101,
        }
    }
}

impl Default for NogoDefaults {
    fn default() -> Self {
        Self { resolution: 32 }
    }
}

impl Config {
    /// Load from a TOML file, or the defaults when no path is given, then
    /// apply the environment thread override.
    pub fn load(path: Option<&Path>) -> Result<Self, String> {
        let mut config = match path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
                toml::from_str(&text)
                    .map_err(|e| format!("cannot parse config {}: {e}", p.display()))?
            }
            None => Config::default(),
        };
        if let Ok(raw) = std::env::var(THREADS_ENV_VAR) {
            config.threads = raw
                .trim()
                .parse()
                .map_err(|_| format!("{THREADS_ENV_VAR}='{raw}' is not a thread count"))?;
        }
        Ok(config)
    }
}
