use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use current_km::classify::{psi_validate, PsiEntry, PsiInput, PsiSpec};
use current_km::liecore::validate_gcm;
use current_km::polyring::{parse_rational, Ring};
use current_km::zerodim::Ideal;

use crate::CliError;

fn default_depth() -> usize {
    6
}

fn default_max_power() -> u32 {
    8
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default = "default_depth")]
    pub depth: usize,
    #[serde(default = "default_max_power")]
    pub max_power: u32,
    #[serde(default)]
    pub verify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_rank: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options { depth: default_depth(), max_power: default_max_power(), verify: false, oracle_rank: None }
    }
}

/// Problem file as read from disk. `psi` maps `"h<i>"` to a map from
/// standard-monomial strings to rational strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub ideal: Vec<String>,
    pub gcm: Vec<Vec<i64>>,
    pub psi: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hpp: Option<Vec<String>>,
    #[serde(default)]
    pub options: Options,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))
    }

    /// Parses and validates everything into a `PsiSpec`.
    pub fn to_spec(&self) -> Result<PsiSpec, CliError> {
        if self.variables.is_empty() {
            return Err(CliError::Schema("at least one variable is required".into()));
        }
        let cartan = validate_gcm(&self.gcm)?;
        let ring = Ring::new(&self.variables);
        let ideal = Ideal::parse(&ring, &self.ideal)?;
        let mut entries = Vec::new();
        for (label, row) in &self.psi {
            let coroot = coroot_index(label)?;
            for (monomial, value) in row {
                entries.push(PsiEntry::new(coroot, monomial.clone(), parse_rational(value)?));
            }
        }
        let hpp = match &self.hpp {
            Some(values) => Some(values.iter().map(|v| parse_rational(v)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        Ok(psi_validate(&PsiInput { cartan, ideal, entries, hpp })?)
    }
}

/// `"h3"` → `2`
fn coroot_index(label: &str) -> Result<usize, CliError> {
    label
        .strip_prefix('h')
        .and_then(|digits| digits.parse::<usize>().ok())
        .filter(|&i| i >= 1)
        .map(|i| i - 1)
        .ok_or_else(|| CliError::Schema(format!("psi key {label:?} is not of the form h<i> with i >= 1")))
}
