//! The JSON instance format.
//!
//! ```json
//! {
//!   "group": { "degree": 2, "generators": [[1, 0]] },
//!   "action": { "generator_images": [[1, 0, 3, 2, 4, 5]] }
//! }
//! ```
//!
//! The action is either `generator_images` (one image array per group
//! generator, plus `n_points` when the group has no generators) or
//! `coset_spaces`: a list of subgroups, each given as a list of words in
//! the generators (arrays of generator indices, `[]` is the identity).
//! An optional `expected` block lists counts that `verify` checks the
//! formulas against.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use equimon::group::DEFAULT_MAX_GROUP_ORDER;
use equimon::subgroup::{subgroup_generated, DEFAULT_SUBGROUP_CAP};
use equimon::{GSet, GroupTable, Perm, Subgroup};

/// Overrides the subgroup-enumeration cap.
pub const MAX_GROUP_ORDER_ENV: &str = "EQUIMON_MAX_GROUP_ORDER";

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{field}: {message}")]
    Field { field: String, message: String },

    #[error(transparent)]
    Library(#[from] equimon::Error),
}

impl InputError {
    fn field(field: impl Into<String>, message: impl ToString) -> Self {
        InputError::Field {
            field: field.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub group: GroupSpec,
    pub action: ActionSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_images: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_points: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coset_spaces: Option<Vec<Vec<Vec<usize>>>>,
}

/// Counts are decimal strings, like in reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedCounts {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixing_collapsings: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub collapsing_types: Option<String>,
}

/// Size limits applied while building an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_group_order: usize,
    pub subgroup_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
            subgroup_cap: DEFAULT_SUBGROUP_CAP,
        }
    }
}

impl Limits {
    /// Defaults, with the subgroup cap taken from `EQUIMON_MAX_GROUP_ORDER`
    /// when set.
    pub fn from_env() -> Result<Self, InputError> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(MAX_GROUP_ORDER_ENV) {
            limits.subgroup_cap = v
                .trim()
                .parse()
                .map_err(|e| InputError::field(MAX_GROUP_ORDER_ENV, e))?;
        }
        Ok(limits)
    }
}

/// A parsed and validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub file: InstanceFile,
    pub group: Arc<GroupTable>,
    pub gset: GSet,
    pub limits: Limits,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| {
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let message = e.to_string();
            InputError::Parse {
                line: e.line(),
                column: e.column(),
                message: message.strip_suffix(&suffix).unwrap_or(&message).to_string(),
            }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }

    pub fn build(self, limits: Limits) -> Result<Instance, InputError> {
        let degree = self.group.degree;
        let mut gens = Vec::with_capacity(self.group.generators.len());
        for (i, images) in self.group.generators.iter().enumerate() {
            let field = format!("group.generators[{i}]");
            if images.len() != degree {
                return Err(InputError::field(
                    field,
                    format!("expected {degree} images, found {}", images.len()),
                ));
            }
            gens.push(Perm::new(images.clone()).map_err(|e| InputError::field(field, e))?);
        }
        let group = Arc::new(
            GroupTable::from_generators(&gens, degree, limits.max_group_order)
                .map_err(|e| InputError::field("group", e))?,
        );

        let gset = match (&self.action.generator_images, &self.action.coset_spaces) {
            (Some(images), None) => {
                let n_points = match (self.action.n_points, images.first()) {
                    (Some(n), _) => n,
                    (None, Some(first)) => first.len(),
                    (None, None) => {
                        return Err(InputError::field(
                            "action.n_points",
                            "required when there are no generator images",
                        ))
                    }
                };
                let mut perms = Vec::with_capacity(images.len());
                for (i, img) in images.iter().enumerate() {
                    let field = format!("action.generator_images[{i}]");
                    if img.len() != n_points {
                        return Err(InputError::field(
                            field,
                            format!("expected {n_points} images, found {}", img.len()),
                        ));
                    }
                    perms.push(Perm::new(img.clone()).map_err(|e| InputError::field(field, e))?);
                }
                GSet::from_generator_action(group.clone(), &perms, n_points)
                    .map_err(|e| InputError::field("action.generator_images", e))?
            }
            (None, Some(spaces)) => {
                if self.action.n_points.is_some() {
                    return Err(InputError::field(
                        "action.n_points",
                        "only allowed with generator_images",
                    ));
                }
                let mut subgroups: Vec<Subgroup> = Vec::with_capacity(spaces.len());
                for (i, words) in spaces.iter().enumerate() {
                    let mut seed = Vec::with_capacity(words.len());
                    for (j, word) in words.iter().enumerate() {
                        let e = group.word(word).map_err(|_| {
                            InputError::field(
                                format!("action.coset_spaces[{i}][{j}]"),
                                format!(
                                    "generator index out of range (group has {} generators)",
                                    group.generator_indices().len()
                                ),
                            )
                        })?;
                        seed.push(e);
                    }
                    subgroups.push(subgroup_generated(&group, &seed)?);
                }
                GSet::from_coset_spaces(group.clone(), &subgroups)
            }
            _ => {
                return Err(InputError::field(
                    "action",
                    "exactly one of generator_images or coset_spaces is required",
                ))
            }
        };

        Ok(Instance {
            file: self,
            group,
            gset,
            limits,
        })
    }
}

impl Instance {
    pub fn parse(text: &str, limits: Limits) -> Result<Self, InputError> {
        InstanceFile::parse(text)?.build(limits)
    }

    pub fn load(path: &Path, limits: Limits) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::parse(&text, limits)
    }
}
