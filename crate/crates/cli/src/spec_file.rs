//! The JSON spec file: group, highest weights with multiplicities, and
//! run options.

use serde::{Deserialize, Serialize};
use symrep::reps::{RepError, SympRepSpec};
use symrep::rootdata::{Letter, RootDataError, RootDatum};
use symrep::weight::WeightVec;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub group: GroupSection,
    pub rep: Vec<RepEntry>,
    #[serde(default, skip_serializing_if = "Options::is_empty")]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSection {
    /// `(letter, rank)` per simple factor.
    #[serde(default)]
    pub simple: Vec<(String, usize)>,
    #[serde(default)]
    pub central_torus_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepEntry {
    /// Fundamental-weight coordinates per factor, then central charges.
    pub hw: Vec<i64>,
    pub mult: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl Options {
    pub fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

/// A parsed file and the validated spec it describes.
#[derive(Clone, Debug)]
pub struct ParsedSpec {
    pub file: SpecFile,
    pub spec: SympRepSpec,
}

/// Parses and validates spec text. Syntax errors carry line and column;
/// validation errors name the offending field.
pub fn parse_spec(text: &str) -> Result<ParsedSpec, CliError> {
    let file: SpecFile = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let spec = validate(&file)?;
    Ok(ParsedSpec { file, spec })
}

pub fn validate(file: &SpecFile) -> Result<SympRepSpec, CliError> {
    let mut factors = Vec::with_capacity(file.group.simple.len());
    for (i, (letter, rank)) in file.group.simple.iter().enumerate() {
        let field = format!("group.simple[{i}]");
        let l = Letter::parse(letter).ok_or_else(|| CliError::Invalid {
            code: "InvalidCartanType",
            field: field.clone(),
            message: format!("unknown Cartan letter {letter:?}"),
        })?;
        factors.push((l, *rank));
        RootDatum::new(&[(l, *rank)], 0).map_err(|e| root_data_error(e, field))?;
    }
    let datum = RootDatum::new(&factors, file.group.central_torus_rank)
        .map_err(|e| root_data_error(e, "group".to_string()))?;
    let n = datum.ambient_dim();
    for (i, r) in file.rep.iter().enumerate() {
        if r.hw.len() != n {
            return Err(CliError::Invalid {
                code: "DimensionMismatch",
                field: format!("rep[{i}].hw"),
                message: format!("expected {n} coordinates, found {}", r.hw.len()),
            });
        }
    }
    let summands: Vec<(WeightVec, u64)> = file.rep.iter().map(|r| (WeightVec::new(r.hw.clone()), r.mult)).collect();
    SympRepSpec::new(datum, &summands).map_err(|e| rep_error(e, file))
}

fn root_data_error(e: RootDataError, field: String) -> CliError {
    let code = match e {
        RootDataError::InvalidCartanType { .. } => "InvalidCartanType",
        RootDataError::DimensionMismatch { .. } => "DimensionMismatch",
        RootDataError::GroupTooLarge { .. } => "GroupTooLarge",
        RootDataError::IndexOutOfRange { .. } => "IndexOutOfRange",
    };
    CliError::Invalid { code, field, message: e.to_string() }
}

fn rep_error(e: RepError, file: &SpecFile) -> CliError {
    let weight = match &e {
        RepError::NotDominant(w)
        | RepError::ZeroMultiplicity(w)
        | RepError::NotSelfDual(w)
        | RepError::OddOrthogonalMultiplicity(w)
        | RepError::NotACharacter(w) => Some(w.clone()),
        RepError::DimensionCap { weight, .. } => Some(weight.clone()),
        RepError::BudgetExceeded(_) | RepError::RootData(_) => None,
    };
    let field = weight
        .and_then(|w| file.rep.iter().position(|r| r.hw == w.coords()))
        .map_or_else(|| "rep".to_string(), |i| format!("rep[{i}]"));
    CliError::Invalid { code: rep_error_code(&e), field, message: e.to_string() }
}

pub fn rep_error_code(e: &RepError) -> &'static str {
    match e {
        RepError::NotDominant(_) => "NotDominant",
        RepError::ZeroMultiplicity(_) => "ZeroMultiplicity",
        RepError::NotSelfDual(_) => "NotSelfDual",
        RepError::OddOrthogonalMultiplicity(_) => "OddOrthogonalMultiplicity",
        RepError::DimensionCap { .. } => "DimensionCap",
        RepError::NotACharacter(_) => "NotACharacter",
        RepError::BudgetExceeded(_) => "BudgetExceeded",
        RepError::RootData(_) => "RootData",
    }
}
