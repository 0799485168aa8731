//! Run configuration: a JSON file mirroring the command-line flags. Flags
//! given on the command line override values from the file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use uqsl::rewrite::CompletionBudget;
use uqsl::suites::SuiteId;
use uqsl::Rat;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// A number written as an integer or as a string such as `"-1/2"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Epsilons {
    List(Vec<Number>),
    Text(String),
}

/// An extra target: `label` is optional in files.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
pub struct CheckSpec {
    #[serde(default)]
    pub label: Option<String>,
    pub expr: String,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<u8>,
    pub m: Option<u8>,
    pub deformed: Option<bool>,
    pub suites: Option<Vec<String>>,
    pub max_steps: Option<usize>,
    pub max_degree: Option<usize>,
    pub max_new_rules: Option<usize>,
    pub checks: Option<Vec<CheckSpec>>,
    pub cutoff: Option<i64>,
    pub order_p: Option<u32>,
    pub epsilons: Option<Epsilons>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, Failure> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| Failure::Usage(format!("malformed config {}: {e}", path.display())))
    }
}

pub fn require<T>(v: Option<T>, name: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing required setting `{name}`")))
}

pub fn parse_rat(s: &str) -> Result<Rat, Failure> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Failure::Usage(format!("not a rational number: {s:?}")))
}

pub fn parse_epsilons(e: &Epsilons) -> Result<Vec<Rat>, Failure> {
    match e {
        Epsilons::Text(s) => s.split(',').map(parse_rat).collect(),
        Epsilons::List(v) => v
            .iter()
            .map(|x| match x {
                Number::Int(k) => Ok(Rat::from_integer((*k).into())),
                Number::Text(s) => parse_rat(s),
            })
            .collect(),
    }
}

/// Suites in request order, duplicates dropped.
pub fn parse_suites(names: &[String]) -> Result<Vec<SuiteId>, Failure> {
    let mut out = Vec::new();
    for name in names {
        let id: SuiteId = name.parse().map_err(|_| {
            let known: Vec<&str> = SuiteId::ALL.iter().map(|s| s.as_str()).collect();
            Failure::Usage(format!("unknown suite {name:?}; expected one of {}", known.join(", ")))
        })?;
        if !out.contains(&id) {
            out.push(id);
        }
    }
    Ok(out)
}

/// Suites that need the deformed algebra.
pub fn needs_deformation(id: SuiteId) -> bool {
    matches!(
        id,
        SuiteId::MixedBrackets
            | SuiteId::AdjacentBrackets
            | SuiteId::TheoremForward
            | SuiteId::TheoremBackward
            | SuiteId::Supercommute
    )
}

pub fn default_suites(deformed: bool) -> Vec<SuiteId> {
    if deformed {
        vec![SuiteId::RepValidation, SuiteId::TheoremForward, SuiteId::Supercommute]
    } else {
        vec![SuiteId::RepValidation, SuiteId::ClassicalTriples, SuiteId::SpanCheck]
    }
}

pub fn budget(max_steps: Option<usize>, max_degree: Option<usize>, max_new_rules: Option<usize>) -> Result<CompletionBudget, Failure> {
    let mut b = CompletionBudget::default();
    for (name, v, slot) in [
        ("max_steps", max_steps, &mut b.max_steps),
        ("max_degree", max_degree, &mut b.max_degree),
        ("max_new_rules", max_new_rules, &mut b.max_new_rules),
    ] {
        if let Some(v) = v {
            if v == 0 {
                return Err(Failure::Usage(format!("`{name}` must be positive")));
            }
            *slot = v;
        }
    }
    Ok(b)
}

/// `LABEL=EXPR` or a bare expression.
pub fn parse_check_flag(s: &str) -> CheckSpec {
    match s.split_once('=') {
        Some((label, expr)) if !label.trim().is_empty() => CheckSpec {
            label: Some(label.trim().to_string()),
            expr: expr.trim().to_string(),
        },
        _ => CheckSpec { label: None, expr: s.trim().to_string() },
    }
}
