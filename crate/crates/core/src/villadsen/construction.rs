use crate::bundle::ProjectionExpr;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Ground sets larger than this are refused.
pub const GROUND_GUARD: usize = 1_000_000;
/// Families with more members than this are refused.
pub const MEMBER_GUARD: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "name")]
pub enum Variant {
    /// `|J_j| = N·2^{j−1}`.
    Simple1,
    /// `|J_j| = 2^{2j−1}·j`.
    Simple2,
    /// `|J_j| = inf_tensor_size(factor, j, N)` for the given tensor factor.
    InfTensor { factor: u64 },
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simple1" => Ok(Variant::Simple1),
            "simple2" => Ok(Variant::Simple2),
            _ => match s.strip_prefix("inf_tensor") {
                Some("") => Ok(Variant::InfTensor { factor: 1 }),
                Some(rest) => rest
                    .strip_prefix(':')
                    .and_then(|k| k.parse().ok())
                    .filter(|k| *k >= 1)
                    .map(|factor| Variant::InfTensor { factor })
                    .ok_or_else(|| Error::InvalidParameter(format!("bad variant {s:?}"))),
                None => Err(Error::InvalidParameter(format!("unknown variant {s:?}"))),
            },
        }
    }
}

/// Stage data: disjoint blocks `J_1, …, J_n` (with `J_0 = ∅`), the ground size
/// `d_n` and `q_n = 1 ⊕ p_{J_1} ⊕ 2·p_{J_2} ⊕ ⋯ ⊕ 2^{n−1}·p_{J_n}` of rank `2^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSpec {
    pub variant: Variant,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u64,
    #[serde(rename = "J")]
    pub blocks: Vec<Vec<usize>>,
    pub d_n: usize,
    pub q_n: ProjectionExpr,
}

impl ConstructionSpec {
    /// Multiplicity `2^{max(j−1, 0)}` of `p_{J_j}` in `q_n`.
    pub fn multiplicity(j: u64) -> u64 {
        1u64 << j.saturating_sub(1)
    }

    /// `q_n` without its trivial summand.
    pub fn nontrivial_part(&self) -> ProjectionExpr {
        self.q_n.without_trivial()
    }

    /// Structural self-check: disjoint consecutive blocks of the variant's sizes
    /// and `rank(q_n) = 2^n`.
    pub fn is_consistent(&self) -> bool {
        let mut next = 1;
        for (j, b) in self.blocks.iter().enumerate() {
            let want = block_size(self.variant, self.big_n, j as u64 + 1).ok();
            if want != Some(b.len()) || b.iter().enumerate().any(|(t, &e)| e != next + t) {
                return false;
            }
            next += b.len();
        }
        self.d_n == next - 1 && self.q_n.rank() == 1u128 << self.n && self.q_n.dim() == self.d_n
    }
}

fn block_size(variant: Variant, big_n: u64, j: u64) -> Result<usize> {
    let too_big = || Error::TooLarge(format!("block J_{j} exceeds the ground-set guard"));
    let size: u128 = match variant {
        Variant::Simple1 => {
            if j > 64 {
                return Err(too_big());
            }
            (big_n as u128) << (j - 1)
        }
        Variant::Simple2 => {
            if j > 64 {
                return Err(too_big());
            }
            (1u128 << (2 * j - 1)).saturating_mul(j as u128)
        }
        Variant::InfTensor { factor } => inf_tensor_size(factor, j, big_n)?,
    };
    if size > GROUND_GUARD as u128 {
        return Err(too_big());
    }
    Ok(size as usize)
}

/// Builds stage `n` of the variant, allocating `J_1, J_2, …` as consecutive
/// blocks of `{1, 2, …}` in ascending order.
pub fn build(variant: Variant, big_n: u64, n: u64) -> Result<ConstructionSpec> {
    if n == 0 || n > 62 {
        return Err(Error::InvalidParameter("stage n must lie in 1..=62".into()));
    }
    if big_n == 0 && variant != Variant::Simple2 {
        return Err(Error::InvalidParameter("N must be at least 1".into()));
    }
    let mut blocks = Vec::new();
    let mut next = 1usize;
    for j in 1..=n {
        let size = block_size(variant, big_n, j)?;
        if next - 1 + size > GROUND_GUARD {
            return Err(Error::TooLarge(format!("ground set exceeds {GROUND_GUARD}")));
        }
        blocks.push((next..next + size).collect::<Vec<_>>());
        next += size;
    }
    let d_n = next - 1;
    let mut terms = vec![(Vec::new(), 1u64)];
    for (j, b) in blocks.iter().enumerate() {
        terms.push((b.clone(), ConstructionSpec::multiplicity(j as u64 + 1)));
    }
    let q_n = ProjectionExpr::new(d_n, terms)?;
    Ok(ConstructionSpec { variant, big_n, n, blocks, d_n, q_n })
}

/// An index pair `(k, j) ∈ N × N₀` under the total order
/// `(k,j) < (ℓ,i)` iff `k + j < ℓ + i`, or `k + j = ℓ + i` and `k < ℓ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairOrder {
    pub k: u64,
    pub j: u64,
}

impl Ord for PairOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k + self.j, self.k).cmp(&(other.k + other.j, other.k))
    }
}

impl PartialOrd for PairOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All `m`-tuples `(i_1, …, i_m)` of non-negative integers with `i_k = j` and
/// `(ℓ, i_ℓ) < (k, j)` for every `ℓ ≠ k`, in lexicographic order.
///
/// For `ℓ > k` the condition reads `i_ℓ < k + j − ℓ`, so the set is empty once
/// `m ≥ k + j` with `m > k`.
pub fn s_enum(m: u64, k: u64, j: u64) -> Vec<Vec<u64>> {
    if k == 0 || m < k {
        return Vec::new();
    }
    let pivot = PairOrder { k, j };
    // per-position ranges, all finite: i_ℓ ≤ k + j − ℓ
    let ranges: Vec<Vec<u64>> = (1..=m)
        .map(|l| {
            if l == k {
                vec![j]
            } else {
                (0..=(k + j).saturating_sub(l)).filter(|&i| PairOrder { k: l, j: i } < pivot).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    if ranges.iter().any(|r| r.is_empty()) {
        return out;
    }
    let mut pos = vec![0usize; ranges.len()];
    loop {
        out.push(pos.iter().zip(&ranges).map(|(p, r)| r[*p]).collect());
        let Some(t) = (0..ranges.len()).rev().find(|&t| pos[t] + 1 < ranges[t].len()) else { break };
        pos[t] += 1;
        for p in pos.iter_mut().skip(t + 1) {
            *p = 0;
        }
    }
    out
}

/// `max_{k ≤ m ≤ k+j} Σ_{S(m;k,j)} N·∏_t 2^{max(i_t − 1, 0)}`; larger `m`
/// contribute empty sums.
pub fn inf_tensor_size(k: u64, j: u64, big_n: u64) -> Result<u128> {
    if k == 0 || j == 0 || big_n == 0 {
        return Err(Error::InvalidParameter("k, j and N must be at least 1".into()));
    }
    if k + j > 24 {
        return Err(Error::TooLarge(format!("S(m;{k},{j}) enumeration")));
    }
    let mut best: u128 = 0;
    for m in k..=k + j {
        let mut total: u128 = 0;
        for t in s_enum(m, k, j) {
            let exp: u64 = t.iter().map(|i| i.saturating_sub(1)).sum();
            if exp >= 100 {
                return Err(Error::TooLarge("inf-tensor block size".into()));
            }
            total += (big_n as u128) << exp;
        }
        best = best.max(total);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple1_sizes() {
        let s = build(Variant::Simple1, 2, 2).unwrap();
        assert_eq!(s.blocks.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 4]);
        assert_eq!((s.d_n, s.q_n.rank()), (6, 4));
        let s = build(Variant::Simple1, 1, 1).unwrap();
        assert_eq!(s.q_n.to_string(), "1 ⊕ p{1}");
        assert!(s.is_consistent());
    }

    #[test]
    fn simple2_sizes() {
        let s = build(Variant::Simple2, 0, 2).unwrap();
        assert_eq!(s.blocks.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 16]);
        assert_eq!(s.d_n, 18);
        assert!(s.is_consistent());
        assert!(matches!(build(Variant::Simple2, 0, 9), Err(Error::TooLarge(_))));
    }

    #[test]
    fn pair_order_examples() {
        let p = |k, j| PairOrder { k, j };
        assert!(p(1, 0) < p(1, 1));
        assert!(p(1, 1) < p(2, 0));
        assert!(p(2, 0) < p(1, 2));
    }

    #[test]
    fn s_enum_examples() {
        assert_eq!(s_enum(1, 1, 1), vec![vec![1]]);
        assert!(s_enum(2, 1, 1).is_empty());
        assert_eq!(s_enum(2, 1, 2), vec![vec![2, 0]]);
    }

    #[test]
    fn s_enum_size_is_not_monotone_in_m() {
        assert_eq!(s_enum(1, 1, 3).len(), 1);
        assert_eq!(s_enum(2, 1, 3), vec![vec![3, 0], vec![3, 1]]);
    }

    #[test]
    fn inf_tensor_size_examples() {
        assert_eq!(inf_tensor_size(1, 1, 1).unwrap(), 1);
        assert_eq!(inf_tensor_size(1, 2, 1).unwrap(), 2);
        assert_eq!(inf_tensor_size(1, 1, 3).unwrap(), 3);
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("simple1".parse::<Variant>().unwrap(), Variant::Simple1);
        assert_eq!("inf_tensor:2".parse::<Variant>().unwrap(), Variant::InfTensor { factor: 2 });
        assert!("bogus".parse::<Variant>().is_err());
    }
}
