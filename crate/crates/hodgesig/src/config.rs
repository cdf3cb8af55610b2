use std::path::{Path, PathBuf};

use hodgesig_core::weil::Precision;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PrecisionConfig {
    pub initial_bits: u32,
    pub max_escalations: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig { initial_bits: 128, max_escalations: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EnumerationConfig {
    pub max_q: u64,
    pub max_g: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_q: 9, max_g: 4 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ReportConfig {
    /// Largest base-extension degree used for the stable exotic list.
    pub stable_depth: u32,
    /// Fractional digits in printed enclosures.
    pub digits: usize,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig { stable_depth: 12, digits: 20 }
    }
}

/// Contents of the optional TOML config file. Flags override it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub precision: PrecisionConfig,
    pub enumeration: EnumerationConfig,
    pub report: ReportConfig,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        let Some(path) = path else { return Ok(Config::default()) };
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn precision(&self) -> Precision {
        Precision { initial_bits: self.precision.initial_bits, max_escalations: self.precision.max_escalations }
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.precision.initial_bits < 16 || self.precision.initial_bits > 1 << 16 {
            return Err(CliError::Usage("initial_bits must lie in 16..=65536".into()));
        }
        if self.precision.max_escalations > 16 {
            return Err(CliError::Usage("max_escalations must be at most 16".into()));
        }
        if self.report.stable_depth == 0 {
            return Err(CliError::Usage("stable_depth must be at least 1".into()));
        }
        if self.report.digits == 0 || self.report.digits > 200 {
            return Err(CliError::Usage("digits must lie in 1..=200".into()));
        }
        Ok(())
    }
}
