//! Certified bounds on divisibility numbers of sums of line bundles.

use super::compare::{BundleOracle, Certificate, Rule, Verdict};
use super::ProjectionExpr;
use crate::error::{Error, Result};
use crate::euler::{hall_check, HallCertificate, SetFamily};
use crate::villadsen::{ConstructionSpec, GROUND_GUARD};
use serde::Serialize;

/// Outcome of an Euler-class lower bound: `holds` certifies the bound.
#[derive(Debug, Clone, Serialize)]
pub struct LowerBound {
    pub holds: bool,
    pub family: SetFamily,
    pub certificate: HallCertificate,
}

impl LowerBound {
    pub fn recheck(&self) -> bool {
        self.certificate.feasible == self.holds && self.certificate.recheck(&self.family)
    }
}

/// Certifies `div_2(1 ⊕ q) > N` when `e(q)^N ≠ 0`, i.e. when the sets of `q`
/// with multiplicities `N·c_I` admit a transversal.
pub fn div2_lower_bound(q: &ProjectionExpr, big_n: u64) -> Result<LowerBound> {
    if q.trivial_count() > 0 {
        return Err(Error::InvalidParameter("q must not contain a trivial summand".into()));
    }
    let family = q.family()?.scaled(big_n)?;
    let certificate = hall_check(&family)?;
    Ok(LowerBound { holds: certificate.feasible, family, certificate })
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MultiLowerBound {
    /// Hall check on `{(J_j ∪ I_i, 2^{max(0,j−1)})}`; `holds` certifies
    /// `div_{2^k}(q_n) > 2^k·k`.
    Matching { m: u64, big_n: u64, bound: LowerBound },
    /// `m = 2^k` exceeds `rank q_n`, so `div_m(q_n) = ∞`.
    InfiniteByRank { m: u64, rank: u128 },
}

impl MultiLowerBound {
    pub fn holds(&self) -> bool {
        match self {
            MultiLowerBound::Matching { bound, .. } => bound.holds,
            MultiLowerBound::InfiniteByRank { .. } => true,
        }
    }
}

/// Lower bound `div_{2^k}(q_n) > 2^k·k` by the Euler class of
/// `q_n ⊗ ⊕_i p_{I_i}`, with `N = 2^k·k` fresh disjoint sets `I_i` of size
/// `2^k − 1` appended after the construction's ground set.
pub fn divm_lower_bound(spec: &ConstructionSpec, k: u32) -> Result<MultiLowerBound> {
    if k == 0 || k > 16 {
        return Err(Error::InvalidParameter("k must lie in 1..=16".into()));
    }
    let m = 1u64 << k;
    let rank = spec.q_n.rank();
    if m as u128 > rank {
        return Ok(MultiLowerBound::InfiniteByRank { m, rank });
    }
    let big_n = m * k as u64;
    let ground = spec.d_n + (big_n * (m - 1)) as usize;
    if ground > GROUND_GUARD {
        return Err(Error::TooLarge(format!("extended ground set of {ground} elements")));
    }
    let fresh: Vec<Vec<usize>> = (0..big_n as usize)
        .map(|i| {
            let start = spec.d_n + 1 + i * (m as usize - 1);
            (start..start + m as usize - 1).collect()
        })
        .collect();
    let mut members = Vec::new();
    let empty = Vec::new();
    for (j, block) in std::iter::once(&empty).chain(&spec.blocks).enumerate() {
        for extra in &fresh {
            let mut set = block.clone();
            set.extend_from_slice(extra);
            members.push((set, ConstructionSpec::multiplicity(j as u64)));
        }
    }
    let family = SetFamily::new(ground, members)?;
    let certificate = hall_check(&family)?;
    Ok(MultiLowerBound::Matching { m, big_n, bound: LowerBound { holds: certificate.feasible, family, certificate } })
}

/// `Div_m(u) ≤ n` witnessed by `x = p_I`: `m·x ≤ u` by summand dominance and
/// `u ≤ n·x` by the stable-range margin.
#[derive(Debug, Clone, Serialize)]
pub struct UpperBound {
    pub m: u64,
    pub n: u64,
    pub witness: Vec<usize>,
    pub dominance: Verdict,
    pub stability: Verdict,
}

impl UpperBound {
    pub fn recheck(&self, u: &ProjectionExpr) -> bool {
        let Ok(mx) = ProjectionExpr::line(u.dim(), &self.witness, self.m) else { return false };
        let Ok(nx) = ProjectionExpr::line(u.dim(), &self.witness, self.n) else { return false };
        self.dominance.rule() == Some(Rule::R1)
            && self.dominance.recheck(&mx, u)
            && self.stability.rule() == Some(Rule::R2)
            && self.stability.recheck(u, &nx)
    }
}

/// Upper bound for `Div_m(u)`: among classes `x = p_I` with `c_I(u) ≥ m`, the
/// smallest `n` with `u ≤ n·x` by the margin rule, `n = rank u + margin`.
pub fn div_upper_bound(u: &ProjectionExpr, m: u64, oracle: &BundleOracle) -> Result<UpperBound> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let mut best: Option<UpperBound> = None;
    for (set, c) in u.terms() {
        if c < m {
            continue;
        }
        let mx = ProjectionExpr::line(u.dim(), set, m)?;
        let dominance = oracle.compare(&mx, u)?;
        if !dominance.is_yes() {
            continue;
        }
        let probe = ProjectionExpr::line(u.dim(), set, 1)?;
        let margin = oracle.margin.margin(u, &probe);
        let n = u64::try_from(u.rank() + margin as u128)
            .ok()
            .ok_or_else(|| Error::TooLarge("upper bound exceeds u64".into()))?;
        let nx = ProjectionExpr::line(u.dim(), set, n)?;
        let rank_xi = u.rank();
        let stability = Verdict::Yes {
            rule: Rule::R2,
            certificate: Certificate::RankMargin { rank_xi, rank_eta: n as u128, margin, rule: oracle.margin },
        };
        if !stability.recheck(u, &nx) {
            continue;
        }
        if best.as_ref().is_none_or(|b| n < b.n) {
            best = Some(UpperBound { m, n, witness: set.to_vec(), dominance, stability });
        }
    }
    best.ok_or_else(|| Error::InvalidParameter(format!("no summand of u has multiplicity ≥ {m}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::villadsen::{build, Variant};

    #[test]
    fn div2_examples() {
        let q = ProjectionExpr::line(2, &[1, 2], 1).unwrap();
        let b = div2_lower_bound(&q, 2).unwrap();
        assert!(b.holds && b.recheck());
        let q = ProjectionExpr::line(1, &[1], 1).unwrap();
        assert!(!div2_lower_bound(&q, 2).unwrap().holds);
        let s = build(Variant::Simple1, 2, 2).unwrap();
        assert!(div2_lower_bound(&s.nontrivial_part(), 2).unwrap().holds);
        assert!(div2_lower_bound(&s.q_n, 2).is_err());
    }

    #[test]
    fn upper_examples() {
        let oracle = BundleOracle::default();
        for big_n in 1..=5 {
            let s = build(Variant::Simple1, big_n, 2).unwrap();
            let b = div_upper_bound(&s.q_n, 2, &oracle).unwrap();
            assert_eq!(b.n, 3 * big_n + 4);
            assert_eq!(b.witness, s.blocks[1]);
            assert!(b.recheck(&s.q_n));
        }
        let u = ProjectionExpr::line(1, &[1], 2).unwrap();
        assert_eq!(div_upper_bound(&u, 2, &oracle).unwrap().n, 3);
        assert!(div_upper_bound(&u, 3, &oracle).is_err());
    }

    #[test]
    fn divm_examples() {
        let s1 = build(Variant::Simple2, 0, 1).unwrap();
        match divm_lower_bound(&s1, 1).unwrap() {
            MultiLowerBound::Matching { bound, .. } => {
                assert_eq!(bound.family.members.len(), 4);
                assert!(bound.holds && bound.recheck());
                assert!(crate::euler::sdr_bruteforce(&bound.family).unwrap());
            }
            other => panic!("{other:?}"),
        }
        assert!(divm_lower_bound(&build(Variant::Simple2, 0, 2).unwrap(), 2).unwrap().holds());
        assert!(matches!(divm_lower_bound(&s1, 2).unwrap(), MultiLowerBound::InfiniteByRank { m: 4, rank: 2 }));
    }
}
