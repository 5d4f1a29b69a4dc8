//! `key = value` run configuration. Command-line flags override the file.

use std::collections::BTreeMap;
use std::path::Path;

use hurwitz_core::braid::OrbitConfig;
use hurwitz_core::enumerate::EnumConfig;
use hurwitz_core::groupid::GroupConfig;

use crate::error::CliError;

/// Degree and tuple-length bounds unlocked by `extended`.
pub const EXTENDED_DEGREE: usize = 10;
pub const EXTENDED_TUPLE_LEN: usize = 8;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub max_degree: Option<usize>,
    pub max_tuple_len: Option<usize>,
    pub workers: Option<usize>,
    pub max_states: Option<usize>,
    pub extended: bool,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Settings, CliError> {
        let mut map = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| {
                CliError::Input(format!("config line {}: expected key=value", n + 1))
            })?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut s = Settings::default();
        for (k, v) in &map {
            let num = || {
                v.parse::<usize>()
                    .map_err(|_| CliError::Input(format!("config key {k}: {v:?} is not a number")))
            };
            match k.as_str() {
                "max_degree" => s.max_degree = Some(num()?),
                "max_tuple_len" => s.max_tuple_len = Some(num()?),
                "workers" => s.workers = Some(num()?),
                "max_states" => s.max_states = Some(num()?),
                "extended" => {
                    s.extended = v.parse().map_err(|_| {
                        CliError::Input(format!("config key extended: {v:?} is not true/false"))
                    })?
                }
                _ => return Err(CliError::Input(format!("unknown config key {k}"))),
            }
        }
        Ok(s)
    }

    pub fn load(path: &Path) -> Result<Settings, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("reading {}: {e}", path.display())))?;
        Settings::parse(&text)
    }

    /// `other` wins wherever it is set.
    pub fn overridden_by(self, other: Settings) -> Settings {
        Settings {
            max_degree: other.max_degree.or(self.max_degree),
            max_tuple_len: other.max_tuple_len.or(self.max_tuple_len),
            workers: other.workers.or(self.workers),
            max_states: other.max_states.or(self.max_states),
            extended: other.extended || self.extended,
        }
    }

    pub fn enum_config(&self) -> EnumConfig {
        let base = EnumConfig::default();
        let (deg, len) = if self.extended {
            (EXTENDED_DEGREE, EXTENDED_TUPLE_LEN)
        } else {
            (base.max_degree, base.max_tuple_len)
        };
        EnumConfig {
            max_degree: self.max_degree.unwrap_or(deg),
            max_tuple_len: self.max_tuple_len.unwrap_or(len),
            workers: self.workers,
        }
    }

    pub fn orbit_config(&self) -> OrbitConfig {
        OrbitConfig {
            max_states: self.max_states,
            ..OrbitConfig::default()
        }
    }

    pub fn group_config(&self) -> GroupConfig {
        GroupConfig::default()
    }
}
