use crate::error::{Error, Result};
use crate::euler::{Member, SetFamily};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Formal sum `⊕ c_I·p_I` of line-bundle classes over `(S²)^d`, where `p_I`
/// is pulled back along the coordinates in `I` and `p_∅` is the trivial line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ExprRecord", into = "ExprRecord")]
pub struct ProjectionExpr {
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, u64>,
}

#[derive(Serialize, Deserialize)]
struct ExprRecord {
    dim: usize,
    coeffs: Vec<Member>,
}

impl TryFrom<ExprRecord> for ProjectionExpr {
    type Error = Error;
    fn try_from(r: ExprRecord) -> Result<Self> {
        ProjectionExpr::new(r.dim, r.coeffs.into_iter().map(|m| (m.set, m.mult)))
    }
}

impl From<ProjectionExpr> for ExprRecord {
    fn from(e: ProjectionExpr) -> Self {
        ExprRecord { dim: e.dim, coeffs: e.terms().map(|(set, mult)| Member { set: set.to_vec(), mult }).collect() }
    }
}

impl ProjectionExpr {
    /// Sums repeated sets and drops zero multiplicities.
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (Vec<usize>, u64)>) -> Result<Self> {
        let mut coeffs: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (mut set, c) in terms {
            set.sort_unstable();
            set.dedup();
            if let Some(&i) = set.iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::OutOfRange(format!("index {i} outside 1..={dim}")));
            }
            if c == 0 {
                continue;
            }
            let e = coeffs.entry(set).or_insert(0);
            *e = e.checked_add(c).ok_or_else(|| Error::MultiplicityOverflow("coefficient sum".into()))?;
        }
        Ok(ProjectionExpr { dim, coeffs })
    }

    /// `c·p_I`.
    pub fn line(dim: usize, set: &[usize], c: u64) -> Result<Self> {
        Self::new(dim, [(set.to_vec(), c)])
    }

    /// The trivial line `1 = p_∅`.
    pub fn trivial(dim: usize) -> Self {
        Self::new(dim, [(Vec::new(), 1)]).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> u128 {
        self.coeffs.values().map(|c| *c as u128).sum()
    }

    pub fn coeff(&self, set: &[usize]) -> u64 {
        self.coeffs.get(set).copied().unwrap_or(0)
    }

    /// Multiplicity of the trivial line.
    pub fn trivial_count(&self) -> u64 {
        self.coeff(&[])
    }

    /// Terms in canonical order `(|I|, I)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], u64)> {
        let mut v: Vec<(&[usize], u64)> = self.coeffs.iter().map(|(s, c)| (s.as_slice(), *c)).collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v.into_iter()
    }

    /// Coordinates used by some summand.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs.keys().flatten().copied().collect()
    }

    pub fn oplus(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Self::new(self.dim, self.coeffs.iter().chain(&other.coeffs).map(|(s, c)| (s.clone(), *c)))
    }

    /// `n·ξ`.
    pub fn times(&self, n: u64) -> Result<Self> {
        let terms = self
            .coeffs
            .iter()
            .map(|(s, c)| {
                c.checked_mul(n)
                    .map(|v| (s.clone(), v))
                    .ok_or_else(|| Error::MultiplicityOverflow(format!("{n} · {c}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.dim, terms)
    }

    pub fn without_trivial(&self) -> Self {
        let mut e = self.clone();
        e.coeffs.remove(&Vec::new());
        e
    }

    /// The index sets with multiplicities, trivial summands included as `∅`.
    pub fn family(&self) -> Result<SetFamily> {
        SetFamily::new(self.dim, self.coeffs.iter().map(|(s, c)| (s.clone(), *c)))
    }
}

impl fmt::Display for ProjectionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .map(|(s, c)| {
                let base = if s.is_empty() {
                    "1".to_string()
                } else {
                    format!("p{{{}}}", s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
                };
                if c == 1 {
                    base
                } else {
                    format!("{c}·{base}")
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" ⊕ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_display() {
        let e = ProjectionExpr::new(3, [(vec![2, 1], 1), (vec![], 1), (vec![3], 2), (vec![1, 2], 1)]).unwrap();
        assert_eq!(e.to_string(), "1 ⊕ 2·p{3} ⊕ 2·p{1,2}");
        assert_eq!(e.rank(), 5);
        assert_eq!(e.support(), BTreeSet::from([1, 2, 3]));
        assert!(ProjectionExpr::line(2, &[3], 1).is_err());
    }

    #[test]
    fn record_round_trip() {
        let e = ProjectionExpr::new(3, [(vec![], 1), (vec![1, 3], 4)]).unwrap();
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(text, r#"{"dim":3,"coeffs":[{"set":[],"mult":1},{"set":[1,3],"mult":4}]}"#);
        assert_eq!(serde_json::from_str::<ProjectionExpr>(&text).unwrap(), e);
        assert!(serde_json::from_str::<ProjectionExpr>(r#"{"dim":1,"coeffs":[{"set":[2],"mult":1}]}"#).is_err());
    }
}
