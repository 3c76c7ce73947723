//! Run configuration: defaults, a `key = value` file, then command-line
//! overrides.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use pisot_core::rootlab::precision_cap;
use serde::Serialize;

pub const DEFAULT_PRECISION_BITS: u32 = 256;
pub const DEFAULT_NODE_BUDGET: u64 = 5_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Settings shared by all subcommands. Everything except `workers` and
/// `output` is embedded in the output, so outputs do not depend on the
/// worker count.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub node_budget: u64,
    pub format: Format,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub workers: Option<usize>,
    /// Ceiling for precision escalation, from the environment or the default.
    pub precision_cap: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: DEFAULT_PRECISION_BITS,
            node_budget: DEFAULT_NODE_BUDGET,
            format: Format::Json,
            output: None,
            workers: None,
            precision_cap: precision_cap(),
        }
    }
}

impl RunConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let value = value.trim();
        let bad = |e: &dyn fmt::Display| format!("bad value for `{key}`: {e}");
        match key.trim() {
            "precision_bits" => self.precision_bits = value.parse().map_err(|e| bad(&e))?,
            "node_budget" => self.node_budget = value.parse().map_err(|e| bad(&e))?,
            "format" => self.format = value.parse().map_err(|e: String| bad(&e))?,
            "output" => self.output = Some(PathBuf::from(value)),
            "workers" => self.workers = Some(value.parse().map_err(|e| bad(&e))?),
            other => return Err(format!("unknown config key `{other}`")),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment.
    pub fn load_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        self.load_str(&text)
    }

    pub fn load_str(&mut self, text: &str) -> Result<(), String> {
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected `key = value`", i + 1))?;
            self.set(k, v).map_err(|e| format!("line {}: {e}", i + 1))?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.precision_bits < 64 || self.precision_bits > self.precision_cap {
            return Err(format!(
                "precision_bits must lie in [64, {}], got {}",
                self.precision_cap, self.precision_bits
            ));
        }
        if self.node_budget == 0 {
            return Err("node_budget must be positive".into());
        }
        if self.workers == Some(0) {
            return Err("workers must be positive".into());
        }
        Ok(())
    }
}
