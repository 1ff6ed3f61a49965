use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A generator as 1-based cycle notation or a 1-based image list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Cycles(String),
    Images(Vec<usize>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// Decimal string; checked against the computed order on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_order: Option<String>,
}

impl Metadata {
    fn is_empty(&self) -> bool {
        self.source.is_none() && self.expected_order.is_none()
    }
}

/// On-disk group description: one JSON object per file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<GeneratorSpec>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

impl GeneratorSpec {
    pub fn to_permutation(&self, degree: usize) -> Result<Permutation> {
        match self {
            GeneratorSpec::Cycles(text) => Permutation::parse_cycles(text, degree),
            GeneratorSpec::Images(images) => {
                if images.len() != degree {
                    return Err(Error::DegreeMismatch {
                        left: degree,
                        right: images.len(),
                    });
                }
                let zero_based = images
                    .iter()
                    .map(|&x| {
                        x.checked_sub(1).ok_or(Error::PointOutOfRange { point: 0, degree })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::from_images(zero_based)
            }
        }
    }
}

impl GroupFile {
    pub fn parse(text: &str, path: &str) -> Result<GroupFile> {
        serde_json::from_str(text).map_err(|e| Error::Format {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Describes `group` with cycle-notation generators and its order as
    /// `expected_order`.
    pub fn from_group(name: &str, group: &PermGroup, source: Option<String>) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| GeneratorSpec::Cycles(g.format_cycles()))
                .collect(),
            metadata: Metadata {
                source,
                expected_order: Some(group.order().to_string()),
            },
        }
    }

    /// Parses the generators, normalizes, and verifies `expected_order`.
    pub fn to_group(&self) -> Result<PermGroup> {
        if self.degree == 0 {
            return Err(Error::InvalidParameter("degree must be at least 1".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidParameter("at least one generator required".into()));
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_permutation(self.degree))
            .collect::<Result<Vec<_>>>()?;
        let group = PermGroup::new(self.degree, gens)?.with_label(self.name.clone());
        if let Some(expected) = &self.metadata.expected_order {
            let actual = group.order().to_string();
            if expected.trim() != actual {
                return Err(Error::OrderMismatch {
                    expected: expected.clone(),
                    actual,
                });
            }
        }
        Ok(group)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

pub fn load_group(path: impl AsRef<Path>) -> Result<PermGroup> {
    let path = path.as_ref();
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: display.clone(),
        source,
    })?;
    GroupFile::parse(&text, &display)?.to_group()
}
