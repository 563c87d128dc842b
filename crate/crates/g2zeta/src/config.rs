//! Run configuration: precision targets, grid specs, scan parameters.
//!
//! A process-global copy is installed once at startup (the CLI does this from
//! `--config` / environment); library defaults apply otherwise.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::sync::OnceLock;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Inputs closer than this to a declared pole raise `AtPole`.
    pub pole_exclusion_radius: f64,
    /// Grid spacing for the inequality and bound scans.
    pub grid_spacing: f64,
    /// Step for critical-line scans.
    pub scan_step: f64,
    /// Default scan height for the verification pipeline.
    pub default_t: f64,
    /// Directory for cached zero tables (none = no caching).
    pub cache_dir: Option<PathBuf>,
    /// Seed for randomized sample grids.
    pub seed: u64,
    /// Worker cap for data-parallel scans (0 = library default).
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            pole_exclusion_radius: 1e-8,
            grid_spacing: 0.1,
            scan_step: 0.01,
            default_t: 60.0,
            cache_dir: None,
            seed: 7,
            jobs: 0,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.pole_exclusion_radius > 0.0) {
            return Err(Error::Config("pole_exclusion_radius must be positive".into()));
        }
        if !(self.grid_spacing > 0.0) {
            return Err(Error::Config("grid_spacing must be positive".into()));
        }
        if !(self.scan_step > 0.0 && self.scan_step <= 0.05) {
            return Err(Error::Config("scan_step must lie in (0, 0.05]".into()));
        }
        if !(self.default_t > 0.0) {
            return Err(Error::Config("default_t must be positive".into()));
        }
        Ok(())
    }

    /// Parse from TOML-style `key = value` text.
    pub fn from_toml_str(text: &str) -> Result<Self, Error> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Apply `G2ZETA_*` environment overrides.
    pub fn apply_env(&mut self) -> Result<(), Error> {
        fn parse<T: std::str::FromStr>(key: &str) -> Result<Option<T>, Error> {
            match std::env::var(key) {
                Ok(v) => v
                    .parse::<T>()
                    .map(Some)
                    .map_err(|_| Error::Config(format!("bad value for {key}: {v}"))),
                Err(_) => Ok(None),
            }
        }
        if let Some(v) = parse::<f64>("G2ZETA_POLE_EXCLUSION_RADIUS")? {
            self.pole_exclusion_radius = v;
        }
        if let Some(v) = parse::<f64>("G2ZETA_GRID_SPACING")? {
            self.grid_spacing = v;
        }
        if let Some(v) = parse::<f64>("G2ZETA_SCAN_STEP")? {
            self.scan_step = v;
        }
        if let Some(v) = parse::<f64>("G2ZETA_T")? {
            self.default_t = v;
        }
        if let Some(v) = parse::<u64>("G2ZETA_SEED")? {
            self.seed = v;
        }
        if let Some(v) = parse::<usize>("G2ZETA_JOBS")? {
            self.jobs = v;
        }
        if let Ok(v) = std::env::var("G2ZETA_CACHE_DIR") {
            self.cache_dir = Some(PathBuf::from(v));
        }
        self.validate()
    }
}

static GLOBAL: OnceLock<Config> = OnceLock::new();

/// Install the process-global config. Returns false if one was already set.
pub fn set_global(cfg: Config) -> bool {
    GLOBAL.set(cfg).is_ok()
}

/// The installed config, or defaults.
pub fn global() -> Config {
    GLOBAL.get().cloned().unwrap_or_default()
}

/// Pole-exclusion radius used by the special-function evaluators.
pub fn pole_exclusion_radius() -> f64 {
    GLOBAL
        .get()
        .map(|c| c.pole_exclusion_radius)
        .unwrap_or(1e-8)
}
