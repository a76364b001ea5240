//! JSON forms of representation descriptors and integral specs.
//!
//! Ranks of `generic` and `trivial` descriptors are taken from the enclosing
//! spec or Eisenstein block; an explicit `n` is cross-checked against it.

use gldim_core::{IntegralSpec, Partition, RepDescriptor};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RepJson {
    Generic {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    Trivial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<u32>,
    },
    Speh {
        p: u32,
        q: u32,
    },
    Orbit {
        partition: Partition,
    },
    Eisenstein {
        blocks: Vec<u32>,
        constituents: Vec<RepJson>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecJson {
    pub n: u32,
    pub representations: Vec<RepJson>,
}

fn rank_of(path: &str, given: Option<u32>, context: Option<u32>) -> Result<u32> {
    match (given, context) {
        (Some(n), Some(r)) if n != r => Err(CliError::invalid(format!(
            "{path}.n: {n} does not match the enclosing rank {r}"
        ))),
        (Some(n), _) | (None, Some(n)) => {
            if n == 0 {
                Err(CliError::invalid(format!("{path}.n: rank must be positive")))
            } else {
                Ok(n)
            }
        }
        (None, None) => Err(CliError::invalid(format!(
            "{path}.n: rank cannot be inferred here, give \"n\""
        ))),
    }
}

fn check_rank(path: &str, what: &str, rank: u32, context: Option<u32>) -> Result<()> {
    match context {
        Some(r) if r != rank => Err(CliError::invalid(format!(
            "{path}: {what} has rank {rank} but the enclosing rank is {r}"
        ))),
        _ => Ok(()),
    }
}

impl RepJson {
    /// Builds the descriptor, with `rank` the rank expected by the context.
    pub fn to_rep(&self, rank: Option<u32>, path: &str) -> Result<RepDescriptor> {
        let rep = match self {
            RepJson::Generic { n } => RepDescriptor::generic(rank_of(path, *n, rank)?),
            RepJson::Trivial { n } => RepDescriptor::trivial(rank_of(path, *n, rank)?),
            RepJson::Speh { p, q } => {
                if *p == 0 || *q == 0 {
                    return Err(CliError::invalid(format!("{path}: speh p and q must be positive")));
                }
                check_rank(path, "speh p*q", p * q, rank)?;
                RepDescriptor::speh(*p, *q)
            }
            RepJson::Orbit { partition } => {
                if partition.is_empty() {
                    return Err(CliError::invalid(format!("{path}.partition: must be nonempty")));
                }
                check_rank(path, "orbit partition", partition.n(), rank)?;
                RepDescriptor::orbit(partition.clone())
            }
            RepJson::Eisenstein { blocks, constituents } => {
                if constituents.len() != blocks.len() {
                    return Err(CliError::invalid(format!(
                        "{path}.constituents: {} entries for {} blocks",
                        constituents.len(),
                        blocks.len()
                    )));
                }
                check_rank(path, "eisenstein blocks", blocks.iter().sum(), rank)?;
                let cs = constituents
                    .iter()
                    .zip(blocks)
                    .enumerate()
                    .map(|(i, (c, &m))| c.to_rep(Some(m), &format!("{path}.constituents[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                RepDescriptor::eisenstein(blocks.clone(), cs)
                    .map_err(|e| CliError::invalid(format!("{path}.blocks: {}", core_message(&e))))?
            }
        };
        Ok(rep)
    }

    pub fn from_rep(rep: &RepDescriptor) -> Self {
        match rep {
            RepDescriptor::Generic { .. } => RepJson::Generic { n: None },
            RepDescriptor::TrivialConstituent { .. } => RepJson::Trivial { n: None },
            RepDescriptor::Speh { p, q } => RepJson::Speh { p: *p, q: *q },
            RepDescriptor::ExplicitOrbit { orbit } => RepJson::Orbit {
                partition: orbit.clone(),
            },
            RepDescriptor::Eisenstein { blocks, constituents } => RepJson::Eisenstein {
                blocks: blocks.clone(),
                constituents: constituents.iter().map(RepJson::from_rep).collect(),
            },
        }
    }
}

fn core_message(e: &gldim_core::Error) -> &str {
    match e {
        gldim_core::Error::InvalidInput(m) | gldim_core::Error::ResourceLimit(m) => m,
    }
}

impl SpecJson {
    pub fn to_spec(&self) -> Result<IntegralSpec> {
        let reps = self
            .representations
            .iter()
            .enumerate()
            .map(|(i, r)| r.to_rep(Some(self.n), &format!("representations[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegralSpec::new(self.n, reps)?)
    }

    pub fn from_spec(spec: &IntegralSpec) -> Self {
        SpecJson {
            n: spec.n(),
            representations: spec.reps().iter().map(RepJson::from_rep).collect(),
        }
    }
}

fn json_error(e: serde_json::Error) -> CliError {
    CliError::invalid(format!("JSON: {e}"))
}

pub fn parse_spec(text: &str) -> Result<IntegralSpec> {
    serde_json::from_str::<SpecJson>(text).map_err(json_error)?.to_spec()
}

pub fn spec_to_json(spec: &IntegralSpec) -> String {
    serde_json::to_string(&SpecJson::from_spec(spec)).expect("spec serializes")
}

/// Either a whole spec or a single descriptor (which then needs an explicit
/// `n` unless its rank is implied by its data).
pub enum RepInput {
    Spec(IntegralSpec),
    Single(RepDescriptor),
}

pub fn parse_rep_input(text: &str) -> Result<RepInput> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("representations").is_some() {
        let spec: SpecJson = serde_json::from_value(value).map_err(json_error)?;
        return Ok(RepInput::Spec(spec.to_spec()?));
    }
    let rep: RepJson = serde_json::from_value(value).map_err(json_error)?;
    let rep = rep.to_rep(None, "representation")?;
    rep.validate()?;
    Ok(RepInput::Single(rep))
}
