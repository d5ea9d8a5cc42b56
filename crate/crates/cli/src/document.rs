use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use latred_core::{
    FuzzyAutomaton, FuzzyMatrix, FuzzyVector, LatticeKind, LatticeSpec, Method, ReductionReport,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// On-disk form of an automaton. Entries are plain decimals; the Boolean
/// lattice also accepts the integers 0 and 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub lattice: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub sigma: Vec<f64>,
    pub tau: Vec<f64>,
    pub delta: BTreeMap<String, Vec<Vec<f64>>>,
}

impl AutomatonDocument {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        write_file(path, &self.to_json())
    }

    pub fn lattice_spec(&self) -> Result<LatticeSpec, CliError> {
        let kind: LatticeKind =
            self.lattice
                .parse()
                .map_err(|e: latred_core::lattice::UnknownLattice| {
                    CliError::Validation(e.to_string())
                })?;
        Ok(match self.epsilon {
            Some(eps) => LatticeSpec::new(kind, eps)?,
            None => LatticeSpec::with_default_epsilon(kind),
        })
    }

    /// Validates the document and builds the automaton it describes.
    pub fn to_automaton(&self) -> Result<FuzzyAutomaton, CliError> {
        let l = self.lattice_spec()?;
        let n = self.states;
        if n == 0 {
            return Err(CliError::Validation(
                "an automaton needs at least one state".into(),
            ));
        }
        for (field, v) in [("sigma", &self.sigma), ("tau", &self.tau)] {
            if v.len() != n {
                return Err(CliError::Validation(format!(
                    "{field} has {} entries, expected {n}",
                    v.len()
                )));
            }
        }
        for symbol in self.delta.keys() {
            if !self.alphabet.contains(symbol) {
                return Err(CliError::Validation(format!(
                    "delta has a matrix for {symbol:?}, which is not in the alphabet"
                )));
            }
        }
        let mut delta = Vec::with_capacity(self.alphabet.len());
        for symbol in &self.alphabet {
            let rows = self.delta.get(symbol).ok_or_else(|| {
                CliError::Validation(format!("delta has no matrix for {symbol:?}"))
            })?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(CliError::Validation(format!(
                    "delta[{symbol:?}] must be {n}x{n}"
                )));
            }
            delta.push(FuzzyMatrix::from_rows(l, rows)?);
        }
        Ok(FuzzyAutomaton::new(
            self.alphabet.clone(),
            FuzzyVector::new(l, self.sigma.clone())?,
            delta,
            FuzzyVector::new(l, self.tau.clone())?,
        )?)
    }

    pub fn from_automaton(a: &FuzzyAutomaton, name: Option<String>) -> Self {
        let l = a.lattice();
        let epsilon = match l.kind() {
            LatticeKind::Boolean => None,
            _ => Some(l.epsilon()),
        };
        AutomatonDocument {
            name,
            lattice: l.kind().name().to_string(),
            epsilon,
            alphabet: a.alphabet().to_vec(),
            states: a.states(),
            sigma: a.sigma().entries().to_vec(),
            tau: a.tau().entries().to_vec(),
            delta: a
                .alphabet()
                .iter()
                .zip(a.transitions())
                .map(|(s, d)| (s.clone(), d.to_rows()))
                .collect(),
        }
    }
}

/// A word on which two automata disagree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Counterexample {
    pub word: Vec<String>,
    pub original: f64,
    pub reduced: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub method: String,
    pub k: usize,
    pub d_sequence: Vec<usize>,
    pub stabilized_at: Option<usize>,
    pub original_states: usize,
    pub reduced_states: usize,
    pub equivalence_checked_to: usize,
    pub factorized: Option<usize>,
    /// Length bound of the optional extra check beyond `k`.
    #[serde(default)]
    pub verified_to: Option<usize>,
    /// First failure of the extra check; absent when it passed or was not run.
    #[serde(default)]
    pub counterexample: Option<Counterexample>,
}

impl ReportDocument {
    pub fn from_report(r: &ReductionReport) -> Self {
        ReportDocument {
            method: r.method.name().to_string(),
            k: r.k,
            d_sequence: r.d_sequence.clone(),
            stabilized_at: r.stabilized_at,
            original_states: r.original_states,
            reduced_states: r.reduced_states,
            equivalence_checked_to: r.equivalence_checked_to,
            factorized: r.factorized,
            verified_to: None,
            counterexample: None,
        }
    }

    pub fn to_report(&self) -> Result<ReductionReport, CliError> {
        let method: Method =
            self.method
                .parse()
                .map_err(|e: latred_core::reduction::UnknownMethod| {
                    CliError::Validation(e.to_string())
                })?;
        Ok(ReductionReport {
            method,
            k: self.k,
            d_sequence: self.d_sequence.clone(),
            stabilized_at: self.stabilized_at,
            original_states: self.original_states,
            reduced_states: self.reduced_states,
            equivalence_checked_to: self.equivalence_checked_to,
            factorized: self.factorized,
        })
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        write_file(path, &self.to_json())
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
