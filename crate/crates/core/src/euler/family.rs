use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Multiplicities above this bound are rejected.
pub const MAX_MULTIPLICITY: u64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    /// 1-based indices into the ground set.
    pub set: Vec<usize>,
    pub mult: u64,
}

/// A multiset of index sets over the ground set `{1, …, ground}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFamily {
    pub ground: usize,
    pub members: Vec<Member>,
}

impl SetFamily {
    /// Validated family in canonical form: each set sorted and deduplicated,
    /// members ordered by `(|I|, I)`.
    pub fn new(ground: usize, members: impl IntoIterator<Item = (Vec<usize>, u64)>) -> Result<Self> {
        let mut out = SetFamily { ground, members: Vec::new() };
        for (mut set, mult) in members {
            if mult > MAX_MULTIPLICITY {
                return Err(Error::MultiplicityOverflow(format!("{mult} exceeds 2^62")));
            }
            set.sort_unstable();
            set.dedup();
            if let Some(&i) = set.iter().find(|&&i| i == 0 || i > ground) {
                return Err(Error::OutOfRange(format!("index {i} outside 1..={ground}")));
            }
            out.members.push(Member { set, mult });
        }
        out.members.sort_by(|a, b| (a.set.len(), &a.set).cmp(&(b.set.len(), &b.set)));
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SetFamily = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        Self::new(raw.ground, raw.members.into_iter().map(|m| (m.set, m.mult)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// Total multiplicity `Σ c`, exact.
    pub fn total(&self) -> u128 {
        self.members.iter().map(|m| m.mult as u128).sum()
    }

    /// Family with every multiplicity scaled by `k`.
    pub fn scaled(&self, k: u64) -> Result<Self> {
        let members = self
            .members
            .iter()
            .map(|m| {
                m.mult
                    .checked_mul(k)
                    .filter(|c| *c <= MAX_MULTIPLICITY)
                    .map(|c| (m.set.clone(), c))
                    .ok_or_else(|| Error::MultiplicityOverflow(format!("{} · {k}", m.mult)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.ground, members)
    }
}
