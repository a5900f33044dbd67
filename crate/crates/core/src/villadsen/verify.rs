use super::construction::{build, ConstructionSpec, Variant, GROUND_GUARD, MEMBER_GUARD};
use crate::bundle::{div2_lower_bound, div_upper_bound, divm_lower_bound, BundleOracle, LowerBound, MultiLowerBound, UpperBound};
use crate::divisibility::DivKind;
use crate::error::{Error, Result};
use crate::euler::{hall_check, HallCertificate, SetFamily};
use serde::Serialize;
use std::fmt;

const LIMIT_NOTE: &str = "stage-level bounds; divisibility numbers of an inductive limit are the \
infimum along the chain, the lower bound holds at every stage checked and the upper bound from \
stage 2 persists under the unital connecting maps";

/// `lower < quantity ≤ upper`, the lower end for `lower_kind` and the upper end
/// for `upper_kind`, which dominates it.
#[derive(Debug, Clone, Serialize)]
pub struct CertifiedInterval {
    pub lower_kind: DivKind,
    pub upper_kind: DivKind,
    pub m: u64,
    pub lower: u64,
    pub upper: u64,
    /// One matching certificate per stage `1..=n`.
    pub lower_cert: Vec<LowerBound>,
    pub upper_cert: UpperBound,
    pub provenance: String,
}

impl CertifiedInterval {
    pub fn recheck(&self, upper_unit: &crate::bundle::ProjectionExpr) -> bool {
        self.lower < self.upper
            && self.lower_cert.iter().all(|c| c.holds && c.recheck())
            && self.upper_cert.n == self.upper
            && self.upper_cert.recheck(upper_unit)
    }
}

impl fmt::Display for CertifiedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lower, self.upper)
    }
}

/// `N < div_2 ≤ Div_2 ≤ 3N + 4` for the first simple construction, the lower
/// end certified by a transversal at each stage up to `n`, the upper end by
/// `x = p_{J_2}` at stage 2.
pub fn verify_thm_simple(big_n: u64, n: u64) -> Result<CertifiedInterval> {
    if n < 2 {
        return Err(Error::InvalidParameter("stage n must be at least 2".into()));
    }
    let spec = build(Variant::Simple1, big_n, n)?;
    let mut lower_cert = Vec::new();
    for stage in 1..=n {
        let s = build(Variant::Simple1, big_n, stage)?;
        let cert = div2_lower_bound(&s.nontrivial_part(), big_n)?;
        if !cert.holds {
            return Err(Error::InvalidParameter(format!("no transversal at stage {stage}")));
        }
        lower_cert.push(cert);
    }
    let q2 = build(Variant::Simple1, big_n, 2)?.q_n;
    let upper_cert = div_upper_bound(&q2, 2, &BundleOracle::default())?;
    Ok(CertifiedInterval {
        lower_kind: DivKind::WeakDiv,
        upper_kind: DivKind::Div,
        m: 2,
        lower: big_n,
        upper: upper_cert.n,
        lower_cert,
        upper_cert,
        provenance: format!("simple1(N={big_n}) up to stage {}: {LIMIT_NOTE}", spec.n),
    })
}

pub type Simple2Outcome = MultiLowerBound;

/// `div_{2^k}(q_n) > 2^k·k` for the second simple construction, or `∞` by rank
/// when `n < k`.
pub fn verify_lm_simple2(k: u32, n: u64) -> Result<Simple2Outcome> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidParameter("k and n must be at least 1".into()));
    }
    let spec = build(Variant::Simple2, 0, n)?;
    divm_lower_bound(&spec, k)
}

#[derive(Debug, Clone, Serialize)]
pub struct InfTensorOutcome {
    pub holds: bool,
    /// `blocks[k−1][j−1] = J_j^{(k)}`, disjoint across all `(k, j)`.
    pub blocks: Vec<Vec<Vec<usize>>>,
    pub family: SetFamily,
    pub certificate: HallCertificate,
}

/// All nonzero `m`-tuples with entries in `0..=n`, lexicographically.
pub fn nonzero_tuples(m: usize, n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut t = vec![0u64; m];
    loop {
        let Some(p) = (0..m).rev().find(|&p| t[p] < n) else { break };
        t[p] += 1;
        for x in t.iter_mut().skip(p + 1) {
            *x = 0;
        }
        out.push(t.clone());
    }
    out
}

/// The family `{(J^{(1)}_{i_1} ∪ ⋯ ∪ J^{(m)}_{i_m}, N·∏_t 2^{max(i_t−1, 0)})}`
/// over nonzero tuples, on disjoint blocks allocated factor by factor.
pub fn inf_tensor_family(big_n: u64, m: usize, n: u64) -> Result<(Vec<Vec<Vec<usize>>>, SetFamily)> {
    if big_n == 0 || m == 0 || n == 0 {
        return Err(Error::InvalidParameter("N, m and n must be at least 1".into()));
    }
    let count = (n as u128 + 1).checked_pow(m as u32).unwrap_or(u128::MAX);
    if count - 1 > MEMBER_GUARD as u128 {
        return Err(Error::TooLarge(format!("{} family members", count - 1)));
    }
    let mut blocks = Vec::with_capacity(m);
    let mut offset = 0usize;
    for k in 1..=m as u64 {
        let spec: ConstructionSpec = build(Variant::InfTensor { factor: k }, big_n, n)?;
        let shifted: Vec<Vec<usize>> =
            spec.blocks.iter().map(|b| b.iter().map(|e| e + offset).collect()).collect();
        offset += spec.d_n;
        if offset > GROUND_GUARD {
            return Err(Error::TooLarge(format!("ground set exceeds {GROUND_GUARD}")));
        }
        blocks.push(shifted);
    }
    let mut members = Vec::new();
    for t in nonzero_tuples(m, n) {
        let mut set = Vec::new();
        let mut mult = big_n;
        for (k, &i) in t.iter().enumerate() {
            if i > 0 {
                set.extend_from_slice(&blocks[k][i as usize - 1]);
            }
            mult = mult
                .checked_mul(ConstructionSpec::multiplicity(i))
                .ok_or_else(|| Error::MultiplicityOverflow(format!("{t:?}")))?;
        }
        members.push((set, mult));
    }
    Ok((blocks, SetFamily::new(offset, members)?))
}

/// Hall check certifying `div_2(q_n^{(1)} ⊗ ⋯ ⊗ q_n^{(m)}) > N`.
pub fn verify_thm_inf_tensor(big_n: u64, m: usize, n: u64) -> Result<InfTensorOutcome> {
    let (blocks, family) = inf_tensor_family(big_n, m, n)?;
    let certificate = hall_check(&family)?;
    Ok(InfTensorOutcome { holds: certificate.feasible, blocks, family, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::sdr_bruteforce;

    #[test]
    fn simple_intervals() {
        for (big_n, n, want) in [(2, 3, "(2, 10]"), (1, 2, "(1, 7]"), (5, 2, "(5, 19]")] {
            let r = verify_thm_simple(big_n, n).unwrap();
            assert_eq!(r.to_string(), want);
            let q2 = build(Variant::Simple1, big_n, 2).unwrap().q_n;
            assert!(r.recheck(&q2));
            assert_eq!(r.lower_cert.len(), n as usize);
        }
        assert!(verify_thm_simple(1, 1).is_err());
    }

    #[test]
    fn simple2_examples() {
        assert!(verify_lm_simple2(1, 1).unwrap().holds());
        assert!(matches!(verify_lm_simple2(2, 1).unwrap(), MultiLowerBound::InfiniteByRank { .. }));
        assert!(verify_lm_simple2(2, 2).unwrap().holds());
    }

    #[test]
    fn tuples() {
        assert_eq!(nonzero_tuples(2, 1), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(nonzero_tuples(3, 2).len(), 26);
    }

    #[test]
    fn inf_tensor_examples() {
        let r = verify_thm_inf_tensor(1, 1, 1).unwrap();
        assert!(r.holds && r.family.members.len() == 1);
        let r = verify_thm_inf_tensor(1, 2, 1).unwrap();
        assert_eq!(r.family.members.len(), 3);
        assert!(r.holds);
        assert!(r.certificate.recheck(&r.family));
        if r.family.total() <= 8 {
            assert!(sdr_bruteforce(&r.family).unwrap());
        }
        assert!(verify_thm_inf_tensor(2, 2, 2).unwrap().holds);
    }
}
