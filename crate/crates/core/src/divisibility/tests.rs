use super::*;
use crate::model::{zoo, ExtNat, ExtNatModel, FiniteCuModel, ProductModel, RationalConeModel};
use num_rational::Rational64;

fn ext(k: u64) -> ExtNatModel {
    ExtNatModel::new(k).unwrap()
}

#[test]
fn check_examples() {
    let w = check(&ext(4), &ExtNat::Fin(4), DivKind::Div, 2, 2).unwrap().unwrap();
    assert_eq!(w.elements, vec![ExtNat::Fin(2)]);
    assert!(check(&ext(3), &ExtNat::Fin(3), DivKind::Div, 2, 2).unwrap().is_none());
    for m in zoo::hand_built() {
        let u = m.unit();
        let w = check(&m, &u, DivKind::WeakDiv, 1, 1).unwrap().unwrap();
        assert_eq!(w.elements, vec![u]);
    }
}

#[test]
fn least_examples() {
    let r = least(&ext(7), &ExtNat::Fin(7), DivKind::Div, 3, 64).unwrap();
    assert_eq!(r.value, DivValue::Finite(4));
    assert!(r.recheck(&ext(7), &ExtNat::Fin(7)));
    let r = least(&ext(2), &ExtNat::Fin(2), DivKind::Div, 3, 64).unwrap();
    assert_eq!((r.value, r.proof_tag.as_deref()), (DivValue::Infinite, Some(TAG_RANK)));
    let r = least(&ext(5), &ExtNat::Fin(5), DivKind::Cov, 2, 64).unwrap();
    assert_eq!(r.value, DivValue::Finite(1));
    let w = r.witness.clone().unwrap();
    assert_eq!(w.elements, vec![ExtNat::Fin(5)]);
    assert!(r.recheck(&ext(5), &ExtNat::Fin(5)));
}

#[test]
fn table_verdicts_carry_exhaustion_tag() {
    let m = zoo::extnat(2, 4);
    let r = least(&m, &2, DivKind::Div, 3, 64).unwrap();
    assert_eq!((r.value, r.proof_tag.as_deref()), (DivValue::Infinite, Some(TAG_EXHAUSTED)));
}

#[test]
fn cutoff_reports_lower_bound() {
    // Div_2(12) in ExtNat is 2; with cutoff 1 the answer is unresolved
    let r = least(&ext(12), &ExtNat::Fin(12), DivKind::Div, 5, 2).unwrap();
    assert_eq!(r.value, DivValue::AtLeast(3));
    assert!(r.proof_tag.is_none());
}

#[test]
fn zero_unit_passes_everything() {
    let m = FiniteCuModel::new("{0}", vec![vec![0]], &[], 0, Some(0), None).unwrap();
    for kind in DivKind::ALL {
        for mm in 1..=4 {
            let r = least(&m, &0, kind, mm, 64).unwrap();
            assert_eq!(r.value, DivValue::Finite(1));
            assert!(r.witness.as_ref().unwrap().elements.iter().all(|x| *x == 0));
        }
    }
}

#[test]
fn formula_agreement_small() {
    for k in 2..=8 {
        let model = ext(k);
        for mm in 2..=k {
            let expect = matrix_div(mm, k).unwrap();
            for kind in [DivKind::Div, DivKind::Decomp, DivKind::WeakDiv] {
                let r = least(&model, &ExtNat::Fin(k), kind, mm, 64).unwrap();
                assert_eq!(r.value, expect, "k={k} m={mm} {kind}");
                assert!(r.recheck(&model, &ExtNat::Fin(k)));
            }
        }
    }
}

#[test]
fn native_and_table_agree() {
    for k in 1..=6 {
        let t = zoo::extnat(k, 2 * k);
        for mm in 1..=4 {
            for kind in DivKind::ALL {
                let a = least(&ext(k), &ExtNat::Fin(k), kind, mm, 64).unwrap().value;
                let b = least(&t, &(k as usize), kind, mm, 64).unwrap().value;
                assert_eq!(a, b, "k={k} m={mm} {kind}");
            }
        }
    }
}

#[test]
fn product_matches_supremum() {
    let p = ProductModel::new(ext(4), ext(6));
    let u = (ExtNat::Fin(4), ExtNat::Fin(6));
    let r = least(&p, &u, DivKind::Div, 2, 64).unwrap();
    assert_eq!(r.value, DivValue::Finite(2));
    let a = least(&ext(4), &ExtNat::Fin(4), DivKind::Div, 2, 64).unwrap();
    let b = least(&ext(6), &ExtNat::Fin(6), DivKind::Div, 2, 64).unwrap();
    let c: DivisibilityReport<ExtNat> = combine_product(&[a, b]).unwrap();
    assert_eq!(c.value, r.value);
}

#[test]
fn rational_cone_divides_exactly() {
    let q = RationalConeModel::new(Rational64::from_integer(1), 6).unwrap();
    let u = q.unit();
    for mm in 2..=6 {
        let r = least(&q, &u, DivKind::Div, mm, 64).unwrap();
        assert_eq!(r.value, DivValue::Finite(mm));
        assert_eq!(r.proof_tag.as_deref(), Some(TAG_PROPINF));
        assert!(r.recheck(&q, &u));
    }
}

#[test]
fn report_serialization_round_trip() {
    let r = least(&ext(5), &ExtNat::Fin(5), DivKind::Cov, 2, 64).unwrap();
    let text = serde_json::to_string(&r).unwrap();
    let back: DivisibilityReport<ExtNat> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
    let inf = least(&ext(2), &ExtNat::Fin(2), DivKind::Div, 3, 64).unwrap();
    let text = serde_json::to_string(&inf).unwrap();
    assert!(text.contains("\"value\":\"inf\""), "{text}");
}

#[test]
fn tensor_pairing_transfers_comparison() {
    // ExtNat(6) is (2,3)-divisible via z = 2, so 3x ≤ 2y forces x⊗6 ≤ y⊗6
    assert!(check(&ext(6), &ExtNat::Fin(6), DivKind::Div, 2, 3).unwrap().is_some());
    for x in 0..=20u64 {
        for y in 0..=20u64 {
            if 3 * x <= 2 * y {
                let (a, _) = ext_tensor_pair(ExtNat::Fin(x), 1, ExtNat::Fin(6), 6);
                let (b, _) = ext_tensor_pair(ExtNat::Fin(y), 1, ExtNat::Fin(6), 6);
                assert!(a <= b);
            }
        }
    }
}

#[test]
fn search_budget_is_reported() {
    let cfg = SearchConfig { cutoff: 64, budget: crate::Budget { search_nodes: 10, terms: 10 } };
    let err = least_with(&ext(12), &ExtNat::Fin(12), DivKind::WeakDiv, 5, &cfg).unwrap_err();
    assert!(matches!(err, crate::Error::SearchSpaceTooLarge { .. }));
}
