//! Cuntz comparison of sums of line bundles over `(S²)^d`, as far as rank,
//! summand dominance, Euler classes and stable range decide it.

mod bounds;
mod compare;
mod expr;

pub use bounds::{div2_lower_bound, div_upper_bound, divm_lower_bound, LowerBound, MultiLowerBound, UpperBound};
pub use compare::{compare, BundleOracle, Certificate, MarginRule, Rule, Verdict};
pub use expr::ProjectionExpr;

use crate::error::Result;
use serde::Serialize;

/// Finite evidence for a unit that is `(ω,2)`-decomposable without being
/// properly infinite: with `x_i = p_{{i}}` and `v = 1`, (a) `v ≤ 2·x_i` for
/// every `i`, and (b) `v` does not embed into `⊕_{i∈F} x_i` for any nonempty
/// `F ⊆ {1..d}`.
#[derive(Debug, Clone, Serialize)]
pub struct OmegaExampleReport {
    pub d: usize,
    pub embeddings: Vec<(usize, Verdict)>,
    pub obstructions: Vec<(Vec<usize>, Verdict)>,
    pub pass: bool,
}

pub fn verify_omega_example(d: usize) -> Result<OmegaExampleReport> {
    verify_omega_example_with(d, &BundleOracle::default())
}

pub fn verify_omega_example_with(d: usize, oracle: &BundleOracle) -> Result<OmegaExampleReport> {
    if d > 20 {
        return Err(crate::Error::TooLarge(format!("2^{d} subsets")));
    }
    let v = ProjectionExpr::trivial(d);
    let mut embeddings = Vec::new();
    for i in 1..=d {
        let two_x = ProjectionExpr::line(d, &[i], 2)?;
        embeddings.push((i, oracle.compare(&v, &two_x)?));
    }
    let mut obstructions = Vec::new();
    for mask in 1u32..(1 << d) {
        let f: Vec<usize> = (1..=d).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let sum = ProjectionExpr::new(d, f.iter().map(|&i| (vec![i], 1)))?;
        obstructions.push((f, oracle.compare(&v, &sum)?));
    }
    obstructions.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let pass = embeddings.iter().all(|(_, v)| v.is_yes()) && obstructions.iter().all(|(_, v)| v.is_no());
    Ok(OmegaExampleReport { d, embeddings, obstructions, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_example() {
        let r = verify_omega_example(1).unwrap();
        assert!(r.pass);
        assert_eq!(r.embeddings[0].1.rule(), Some(Rule::R2));
        let r = verify_omega_example(3).unwrap();
        assert_eq!(r.obstructions.len(), 7);
        assert!(r.pass);
        let r = verify_omega_example(0).unwrap();
        assert!(r.pass && r.embeddings.is_empty() && r.obstructions.is_empty());
    }

    #[test]
    fn ambient_margin_leaves_embeddings_undecided() {
        let r = verify_omega_example_with(2, &BundleOracle::new(MarginRule::AmbientDimension)).unwrap();
        assert!(!r.pass);
        assert!(r.embeddings.iter().all(|(_, v)| *v == Verdict::Unknown));
    }
}
