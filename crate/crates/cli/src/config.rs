use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Certify,
    Lemma,
    Extremal,
    Construct,
    Ramsey,
    Experiment,
}

/// A whole run in one TOML or JSON file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct ExperimentConfig {
    pub command: CommandKind,
    #[serde(default)]
    pub parameters: Map<String, Value>,
    pub seed: Option<u64>,
    #[serde(alias = "output_dir")]
    pub output_dir: Option<PathBuf>,
    pub format: Option<Format>,
    pub budget: Option<u64>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let json = path.extension().is_some_and(|e| e == "json");
        let cfg = if json {
            serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        } else {
            toml::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
        };
        Ok(cfg)
    }

    /// Parameters with `seed` and `budget` folded in, decoded into a subcommand's argument struct.
    pub fn args<T: serde::de::DeserializeOwned>(&self) -> Result<T, CliError> {
        let mut p = self.parameters.clone();
        for (key, val) in [("seed", self.seed), ("budget", self.budget)] {
            if let Some(v) = val {
                if p.insert(key.into(), Value::from(v)).is_some() {
                    return Err(CliError::Config(format!("`{key}` given both at top level and in parameters")));
                }
            }
        }
        serde_json::from_value(Value::Object(p)).map_err(|e| CliError::Config(format!("parameters: {e}")))
    }
}
