//! Infinite-family decomposition conditions reduced to finite carriers.
//!
//! In a finite carrier an infinite family `(x_i)` takes some value `x`
//! infinitely often, so `Σ_i x_i ≥ ∞·x`; conversely the constant family at `x`
//! sums to `∞·x`. Splitting the index set into infinitely many infinite
//! blocks, `u` is `(ω,n)`-decomposable exactly when a single `x` has
//! `∞·x ≤ u ≤ n·x`, and weakly so when `x_1, …, x_n` have `∞·x_i ≤ u ≤ Σ x_i`.

use super::search::smallest_multiset;
use super::DivKind;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Result};
use crate::model::CuModel;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaOutcome<E> {
    pub holds: bool,
    pub witness: Option<Vec<E>>,
}

pub fn omega_check<M: CuModel>(model: &M, u: &M::Elem, kind: DivKind, n: u64) -> Result<OmegaOutcome<M::Elem>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !model.contains(u) {
        return Err(Error::OutOfRange(model.label(u)));
    }
    let mut cands = Vec::new();
    for x in model.below(u)?.elements {
        if model.leq(&model.infinite_multiple(&x)?, u) {
            cands.push(x);
        }
    }
    let witness = match kind {
        DivKind::Decomp => cands.into_iter().find(|x| model.leq(u, &model.multiple(x, n))).map(|x| vec![x]),
        DivKind::WeakDiv => {
            let mut meter = Meter::new(Budget::from_env().search_nodes, "omega witness search");
            smallest_multiset(model, &cands, n as usize, &|_| true, &|s| model.leq(u, s), &mut meter)?
        }
        other => return Err(Error::InvalidParameter(format!("{other} has no ω-variant"))),
    };
    Ok(OmegaOutcome { holds: witness.is_some(), witness })
}

/// Verdicts for two corona-factorization conditions.
///
/// (iii): `m·y = ⊤` for some `m` forces `∞·y = ⊤`.
/// (v): a full `y` that is `(ω,m)`-decomposable for some `m` is properly infinite.
///
/// Both hold in every finite model: `m·y ≤ ∞·y ≤ ⊤`, and `∞·x ≤ y ≤ m·x ≤ ∞·x`
/// forces `y = ∞·x`, which is properly infinite.
#[derive(Debug, Clone, Serialize)]
pub struct CfpReport<E> {
    pub iii_pass: bool,
    pub iii_witness: Option<(E, u64)>,
    pub v_pass: bool,
    pub v_witness: Option<(E, u64)>,
    pub note: &'static str,
}

pub fn cfp4s_check<M: CuModel>(model: &M) -> Result<CfpReport<M::Elem>> {
    let top = model.top().ok_or(Error::NoTop)?;
    let els = model.elements();
    let bound = els.len() as u64;
    let mut iii_witness = None;
    let mut v_witness = None;
    for y in &els {
        let inf = model.infinite_multiple(y)?;
        if iii_witness.is_none() && inf != top {
            if let Some(m) = (1..=bound).find(|m| model.multiple(y, *m) == top) {
                iii_witness = Some((y.clone(), m));
            }
        }
        let full = inf == top;
        let properly_infinite = model.leq(&model.add(y, y), y);
        if v_witness.is_none() && full && !properly_infinite {
            for m in 1..=bound {
                if omega_check(model, y, DivKind::Decomp, m)?.holds {
                    v_witness = Some((y.clone(), m));
                    break;
                }
            }
        }
    }
    Ok(CfpReport {
        iii_pass: iii_witness.is_none(),
        iii_witness,
        v_pass: v_witness.is_none(),
        v_witness,
        note: "both conditions hold in every finite model under the compact convention",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{zoo, ExtNat, ExtNatModel, ProductModel};

    #[test]
    fn extnat_examples() {
        let m = ExtNatModel::new(5).unwrap();
        assert!(omega_check(&m, &ExtNat::Inf, DivKind::Decomp, 1).unwrap().holds);
        for n in 1..=8 {
            assert!(!omega_check(&m, &ExtNat::Fin(5), DivKind::Decomp, n).unwrap().holds);
            assert!(!omega_check(&m, &ExtNat::Fin(5), DivKind::WeakDiv, n).unwrap().holds);
        }
    }

    #[test]
    fn three_point_is_omega_decomposable() {
        let m = zoo::three_point();
        let r = omega_check(&m, &2, DivKind::Decomp, 2).unwrap();
        assert_eq!(r.witness, Some(vec![1]));
    }

    #[test]
    fn cfp_conditions_pass() {
        let r = cfp4s_check(&ExtNatModel::new(5).unwrap()).unwrap();
        assert!(r.iii_pass && r.v_pass);
        let r = cfp4s_check(&zoo::three_point()).unwrap();
        assert!(r.iii_pass && r.v_pass);
        let p = ProductModel::new(ExtNatModel::new(2).unwrap(), ExtNatModel::new(3).unwrap());
        let r = cfp4s_check(&p).unwrap();
        assert!(r.iii_pass && r.v_pass);
        for m in zoo::zoo().iter().take(20) {
            let r = cfp4s_check(m).unwrap();
            assert!(r.iii_pass && r.v_pass, "{}", m.name());
        }
    }

    #[test]
    fn missing_top_is_an_error() {
        let m = crate::model::RationalConeModel::new(num_rational::Rational64::from_integer(1), 2).unwrap();
        assert!(cfp4s_check(&m).is_ok());
        let add = vec![vec![0, 1], vec![1, 1]];
        let no_top = crate::model::FiniteCuModel::new("nt", add, &[[0, 1]], 1, None, None).unwrap();
        assert!(matches!(cfp4s_check(&no_top), Err(Error::NoTop)));
    }
}
