//! Group literals: the textual and JSON descriptions of finite groups used on
//! the command line and in model files.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A description of a finite group.
///
/// JSON form: `{"kind": "cyclic", "n": 3}`, `{"kind": "trivial"}`,
/// `{"kind": "product", "factors": [...]}`, `{"kind": "table", "table": [[...]]}`.
/// Command-line form: `trivial`, `cyclic:3`, `symmetric:4`, `dihedral:5`,
/// `product:(cyclic:2,cyclic:2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupLiteral {
    Trivial,
    Cyclic { n: usize },
    Symmetric { n: usize },
    Dihedral { n: usize },
    Product { factors: Vec<GroupLiteral> },
    Table { table: Vec<Vec<usize>> },
}

impl GroupLiteral {
    pub fn build(&self) -> Result<FiniteGroup> {
        let label = self.to_string();
        let group = match self {
            Self::Trivial => FiniteGroup::trivial(),
            Self::Cyclic { n } => FiniteGroup::cyclic(*n)?,
            Self::Symmetric { n } => FiniteGroup::symmetric(*n)?,
            Self::Dihedral { n } => FiniteGroup::dihedral(*n)?,
            Self::Product { factors } => {
                let mut acc = FiniteGroup::trivial();
                for f in factors {
                    acc = FiniteGroup::direct_product(&acc, &f.build()?)?;
                }
                acc
            }
            Self::Table { table } => FiniteGroup::from_cayley_table(table, label.clone())?,
        };
        Ok(group.with_label(label))
    }
}

impl fmt::Display for GroupLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Trivial => write!(f, "trivial"),
            Self::Cyclic { n } => write!(f, "cyclic:{n}"),
            Self::Symmetric { n } => write!(f, "symmetric:{n}"),
            Self::Dihedral { n } => write!(f, "dihedral:{n}"),
            Self::Product { factors } => {
                write!(f, "product:(")?;
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Self::Table { table } => write!(f, "table[{}]", table.len()),
        }
    }
}

impl FromStr for GroupLiteral {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::BadLiteral {
            literal: s.to_string(),
            message: message.to_string(),
        };
        let s = s.trim();
        if s == "trivial" {
            return Ok(Self::Trivial);
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected trivial or <kind>:<argument>"))?;
        let number = || -> Result<usize> {
            arg.trim()
                .parse()
                .map_err(|_| bad("expected a nonnegative integer argument"))
        };
        match kind.trim() {
            "cyclic" => Ok(Self::Cyclic { n: number()? }),
            "symmetric" => Ok(Self::Symmetric { n: number()? }),
            "dihedral" => Ok(Self::Dihedral { n: number()? }),
            "product" => {
                let inner = arg
                    .trim()
                    .strip_prefix('(')
                    .and_then(|a| a.strip_suffix(')'))
                    .ok_or_else(|| bad("product factors must be wrapped in parentheses"))?;
                let factors = split_top_level(inner)
                    .ok_or_else(|| bad("unbalanced parentheses"))?
                    .into_iter()
                    .map(str::parse)
                    .collect::<Result<Vec<_>>>()?;
                if factors.is_empty() {
                    return Err(bad("product needs at least one factor"));
                }
                Ok(Self::Product { factors })
            }
            other => Err(bad(&format!("unknown group kind {other:?}"))),
        }
    }
}

/// Splits on commas that are not nested inside parentheses.
pub fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    let last = s[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    Some(parts)
}
