use std::collections::BTreeSet;

use serde::Serialize;

use current_km::classify::{classify_module, predicted_character, Decomposition, Obstruction, PsiSpec, Verdict};
use current_km::hwchar::CharacterTable;
use current_km::liecore::{RootLatticeElement, Weight};
use current_km::oracle::{Generator, ModuleOracle, Nilpotency, PbwVector};
use current_km::polyring::{rat, Rational};

use crate::problem::ProblemFile;
use crate::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: ProblemFile,
    pub quotient_dimension: usize,
    pub standard_basis: Vec<String>,
    pub radical: Vec<String>,
    pub points: Vec<Vec<String>>,
    pub idempotents: Vec<String>,
    pub weights: Vec<Vec<String>>,
    pub verdict: VerdictReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictReport {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reason {
    pub kind: &'static str,
    pub message: String,
    pub coroot: String,
    /// one-based index into `points`
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub depth: usize,
    pub complete: bool,
    /// `[β coordinates, multiplicity]`
    pub entries: Vec<(Vec<i64>, u64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub depth: usize,
    pub max_power: u32,
    pub comparison: Vec<Comparison>,
    pub probes: Vec<Probe>,
    /// Characters agree and all probes are nilpotent (integrable case), or
    /// some probe fails to terminate (non-integrable case).
    pub confirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub beta: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<u64>,
    pub oracle: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Probe {
    pub generator: String,
    pub nilpotent: bool,
    /// first vanishing power, or the cap when none was found
    pub power: u32,
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_string).collect()
}

fn weight_strings(w: &Weight) -> Vec<String> {
    rationals(w.values())
}

fn verdict_report(verdict: &Verdict) -> VerdictReport {
    match verdict {
        Verdict::Integrable => VerdictReport { status: "Integrable", reason: None },
        Verdict::NotIntegrable(obstruction) => {
            let (coroot, point, witness) = match obstruction {
                Obstruction::Radical(r) => (r.coroot, None, Some(r.witness.to_string())),
                Obstruction::NonDominantWeight { point, coroot } => (*coroot, Some(point + 1), None),
            };
            VerdictReport {
                status: "NotIntegrable",
                reason: Some(Reason {
                    kind: obstruction.kind(),
                    message: obstruction.to_string(),
                    coroot: format!("h{}", coroot + 1),
                    point,
                    witness,
                }),
            }
        }
    }
}

fn character_report(table: &CharacterTable) -> CharacterReport {
    CharacterReport {
        depth: table.depth(),
        complete: table.is_complete(),
        entries: table.entries().map(|(beta, m)| (beta.coords().to_vec(), m)).collect(),
    }
}

/// Runs classification and, when `verify` is set, the oracle cross-check.
pub fn build_report(
    input: &ProblemFile,
    spec: &PsiSpec,
    depth: usize,
    verify: Option<u32>,
) -> Result<Report, CliError> {
    let decomposition = classify_module(spec)?;
    let predicted = match predicted_character(&decomposition, depth) {
        Ok(table) => Some(table),
        Err(current_km::Error::NotIntegrable) => None,
        Err(e) => return Err(e.into()),
    };
    let oracle = match verify {
        Some(max_power) => Some(oracle_report(spec, &decomposition, predicted.as_ref(), depth, max_power)?),
        None => None,
    };
    let q = spec.quotient();
    Ok(Report {
        input: input.clone(),
        quotient_dimension: decomposition.quotient_dim,
        standard_basis: (0..q.dim()).map(|k| q.basis_label(k)).collect(),
        radical: decomposition.radical.elements().iter().map(ToString::to_string).collect(),
        points: decomposition.points.iter().map(|p| rationals(p)).collect(),
        idempotents: decomposition.idempotents.iter().map(ToString::to_string).collect(),
        weights: decomposition.weights.iter().map(weight_strings).collect(),
        verdict: verdict_report(&decomposition.verdict),
        character: predicted.as_ref().map(character_report),
        oracle,
    })
}

fn oracle_report(
    spec: &PsiSpec,
    decomposition: &Decomposition,
    predicted: Option<&CharacterTable>,
    depth: usize,
    max_power: u32,
) -> Result<OracleReport, CliError> {
    let mut oracle = ModuleOracle::new(spec)?;
    let observed = oracle.irreducible_character(depth);

    let mut betas: BTreeSet<RootLatticeElement> = observed.entries().map(|(b, _)| b.clone()).collect();
    if let Some(p) = predicted {
        betas.extend(p.entries().map(|(b, _)| b.clone()));
    }
    let comparison: Vec<Comparison> = betas
        .iter()
        .map(|beta| Comparison {
            beta: beta.coords().to_vec(),
            predicted: predicted.map(|p| p.get(beta)),
            oracle: observed.get(beta),
        })
        .collect();

    let q = spec.quotient();
    let mut probes = Vec::new();
    for i in 0..spec.cartan().rank() {
        for k in 0..q.dim() {
            let f = vec![(Generator::lowering(i, k), rat(1))];
            let (nilpotent, power) = match oracle.nilpotency_probe(&f, &PbwVector::vacuum(), max_power) {
                Nilpotency::Nilpotent(p) => (true, p),
                Nilpotency::NotNilpotentUpTo(p) => (false, p),
            };
            probes.push(Probe { generator: format!("f{}⊗{}", i + 1, q.basis_label(k)), nilpotent, power });
        }
    }

    let confirmed = if decomposition.is_integrable() {
        comparison.iter().all(|c| c.predicted == Some(c.oracle)) && probes.iter().all(|p| p.nilpotent)
    } else {
        probes.iter().any(|p| !p.nilpotent)
    };
    Ok(OracleReport { depth, max_power, comparison, probes, confirmed })
}
