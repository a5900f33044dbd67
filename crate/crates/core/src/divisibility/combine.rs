//! Combining reports along products (supremum) and inductive chains (infimum).

use super::{DivValue, DivisibilityReport};
use crate::error::{Error, Result};

fn sup(a: DivValue, b: DivValue) -> DivValue {
    use DivValue::*;
    match (a, b) {
        (Infinite, _) | (_, Infinite) => Infinite,
        (Finite(x), Finite(y)) => Finite(x.max(y)),
        (AtLeast(x), Finite(y)) | (Finite(y), AtLeast(x)) | (AtLeast(x), AtLeast(y)) => AtLeast(x.max(y)),
    }
}

fn inf(a: DivValue, b: DivValue) -> DivValue {
    use DivValue::*;
    match (a, b) {
        (Infinite, v) | (v, Infinite) => v,
        (Finite(x), Finite(y)) => Finite(x.min(y)),
        (AtLeast(x), Finite(y)) | (Finite(y), AtLeast(x)) => {
            if y < x {
                Finite(y)
            } else {
                AtLeast(x)
            }
        }
        (AtLeast(x), AtLeast(y)) => AtLeast(x.min(y)),
    }
}

fn common<E>(reports: &[DivisibilityReport<E>]) -> Result<()> {
    let first = reports.first().ok_or_else(|| Error::MixedReports("no reports".into()))?;
    if let Some(r) = reports.iter().find(|r| r.kind != first.kind || r.m != first.m) {
        return Err(Error::MixedReports(format!("({}, {}) vs ({}, {})", first.kind, first.m, r.kind, r.m)));
    }
    Ok(())
}

/// Report for a product of algebras: the supremum of the factors' values.
/// Witnesses live in different models, so the result carries none.
pub fn combine_product<E, F>(reports: &[DivisibilityReport<E>]) -> Result<DivisibilityReport<F>> {
    common(reports)?;
    let value = reports.iter().map(|r| r.value).reduce(sup).expect("non-empty");
    Ok(DivisibilityReport {
        kind: reports[0].kind,
        m: reports[0].m,
        value,
        witness: None,
        cutoff: reports.iter().map(|r| r.cutoff).max().unwrap_or(0),
        proof_tag: Some("supremum over factors".into()),
    })
}

/// Report for an inductive limit with compact unit: the infimum along the
/// chain, carrying the witness of the first report attaining it.
pub fn combine_chain<E: Clone>(reports: &[DivisibilityReport<E>]) -> Result<DivisibilityReport<E>> {
    common(reports)?;
    let value = reports.iter().map(|r| r.value).reduce(inf).expect("non-empty");
    let attaining = reports.iter().find(|r| r.value == value);
    Ok(DivisibilityReport {
        kind: reports[0].kind,
        m: reports[0].m,
        value,
        witness: attaining.and_then(|r| r.witness.clone()),
        cutoff: reports.iter().map(|r| r.cutoff).max().unwrap_or(0),
        proof_tag: Some("infimum along the chain".into()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisibility::DivKind;

    fn r(v: DivValue) -> DivisibilityReport<u64> {
        DivisibilityReport { kind: DivKind::Div, m: 2, value: v, witness: None, cutoff: 64, proof_tag: None }
    }

    fn f(n: u64) -> DivisibilityReport<u64> {
        r(DivValue::Finite(n))
    }

    #[test]
    fn product_is_supremum() {
        let p: DivisibilityReport<u64> = combine_product(&[f(3), f(4), f(4)]).unwrap();
        assert_eq!(p.value, DivValue::Finite(4));
        let p: DivisibilityReport<u64> = combine_product(&[f(2), r(DivValue::Infinite)]).unwrap();
        assert_eq!(p.value, DivValue::Infinite);
    }

    #[test]
    fn chain_is_infimum() {
        assert_eq!(combine_chain(&[f(5), f(4), f(4), f(3)]).unwrap().value, DivValue::Finite(3));
        let inf = r(DivValue::Infinite);
        assert_eq!(combine_chain(&[inf.clone(), inf]).unwrap().value, DivValue::Infinite);
        assert_eq!(combine_chain(&[f(3), f(3), f(3)]).unwrap().value, DivValue::Finite(3));
        assert_eq!(combine_chain(&[r(DivValue::AtLeast(65)), f(7)]).unwrap().value, DivValue::Finite(7));
    }

    #[test]
    fn mixed_reports_are_rejected() {
        let mut other = f(3);
        other.m = 3;
        assert!(matches!(combine_chain(&[f(3), other]), Err(Error::MixedReports(_))));
        assert!(combine_chain::<u64>(&[]).is_err());
    }
}
