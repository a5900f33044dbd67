use cudiv::bundle::{compare, ProjectionExpr, Verdict};
use cudiv::divisibility::{least_with, matrix_div, DivKind, DivValue, SearchConfig};
use cudiv::euler::{
    euler_of_family, hall_check, linear_form, linear_form_power, sdr_bruteforce, MultilinearPoly, SetFamily,
};
use cudiv::model::{check_axioms, zoo, CuModel, FiniteCuModel};
use num_bigint::BigInt;
use proptest::prelude::*;

const D: usize = 6;

fn subset(d: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::btree_set(1..=d, 0..=d).prop_map(|s| s.into_iter().collect())
}

fn poly() -> impl Strategy<Value = MultilinearPoly> {
    proptest::collection::vec((subset(D), -3i64..=3), 0..5).prop_map(|terms| {
        let mut p = MultilinearPoly::zero(D).unwrap();
        for (set, c) in terms {
            let mono = cudiv::euler::mask_of(&set, D).unwrap();
            p = p.add(&MultilinearPoly::monomial(D, mono, BigInt::from(c)).unwrap()).unwrap();
        }
        p
    })
}

fn family() -> impl Strategy<Value = SetFamily> {
    (1..=7usize).prop_flat_map(|ground| {
        proptest::collection::vec((subset(ground), 1..=3u64), 0..4)
            .prop_map(move |members| SetFamily::new(ground, members).unwrap())
    })
}

fn expr(d: usize) -> impl Strategy<Value = ProjectionExpr> {
    proptest::collection::vec((subset(d), 0..=3u64), 0..4)
        .prop_map(move |terms| ProjectionExpr::new(d, terms).unwrap())
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.mul(&MultilinearPoly::one(D).unwrap()).unwrap(), a.clone());
    }

    #[test]
    fn squares_of_generators_vanish(i in 1..=D) {
        let z = linear_form(&[i], D).unwrap();
        prop_assert!(z.mul(&z).unwrap().is_zero());
    }

    #[test]
    fn power_formula_matches_repeated_product(set in subset(D), c in 0..=4u64) {
        let mut p = MultilinearPoly::one(D).unwrap();
        for _ in 0..c {
            let f = if set.is_empty() { MultilinearPoly::zero(D).unwrap() } else { linear_form(&set, D).unwrap() };
            p = p.mul(&f).unwrap();
        }
        prop_assert_eq!(linear_form_power(&set, D, c, 1 << 20).unwrap(), p);
    }

    #[test]
    fn euler_nonzero_iff_hall(f in family()) {
        let hall = hall_check(&f).unwrap();
        prop_assert!(hall.recheck(&f));
        prop_assert_eq!(!euler_of_family(&f).unwrap().is_zero(), hall.feasible);
        if let Ok(brute) = sdr_bruteforce(&f) {
            prop_assert_eq!(brute, hall.feasible);
        }
    }

    #[test]
    fn hall_is_monotone(f in family(), drop in any::<prop::sample::Index>(), bump in 1..=2u64) {
        let feasible = hall_check(&f).unwrap().feasible;
        if f.members.is_empty() {
            return Ok(());
        }
        let i = drop.index(f.members.len());
        let fewer: Vec<_> = f.members.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, m)| (m.set.clone(), m.mult)).collect();
        let more: Vec<_> = f.members.iter().enumerate().map(|(j, m)| (m.set.clone(), m.mult + if j == i { bump } else { 0 })).collect();
        if feasible {
            prop_assert!(hall_check(&SetFamily::new(f.ground, fewer).unwrap()).unwrap().feasible);
        } else {
            prop_assert!(!hall_check(&SetFamily::new(f.ground, more).unwrap()).unwrap().feasible);
        }
    }

    #[test]
    fn family_json_round_trip(f in family()) {
        prop_assert_eq!(SetFamily::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn expression_json_round_trip(e in expr(4)) {
        let text = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<ProjectionExpr>(&text).unwrap(), e);
    }

    #[test]
    fn verdicts_recheck_and_respect_rank(xi in expr(3), eta in expr(3)) {
        let v = compare(&xi, &eta).unwrap();
        prop_assert!(v.recheck(&xi, &eta));
        if v.is_yes() {
            prop_assert!(xi.rank() <= eta.rank());
        }
        if xi == eta {
            prop_assert!(v.is_yes());
        }
        prop_assert!(!matches!(v, Verdict::Unknown) || xi.rank() <= eta.rank());
    }

    #[test]
    fn matrix_formula_matches_integer_search(m in 1..=20u64, k in 1..=60u64) {
        let brute = (1..=k)
            .filter(|x| m * x <= k)
            .map(|x| k.div_ceil(x))
            .min()
            .map_or(DivValue::Infinite, DivValue::Finite);
        prop_assert_eq!(matrix_div(m, k).unwrap(), brute);
    }

    #[test]
    fn div_value_serde_round_trip(v in prop_oneof![
        (1..1000u64).prop_map(DivValue::Finite),
        (1..1000u64).prop_map(DivValue::AtLeast),
        Just(DivValue::Infinite),
    ]) {
        let text = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(serde_json::from_str::<DivValue>(&text).unwrap(), v);
    }

    #[test]
    fn least_is_monotone_in_m(k in 2..=10u64, u in 0..=10usize) {
        let t = zoo::extnat(k, k);
        let u = u.min(t.size() - 1);
        let cfg = SearchConfig::default();
        for kind in DivKind::ALL {
            let a = least_with(&t, &u, kind, 2, &cfg).unwrap();
            let b = least_with(&t, &u, kind, 3, &cfg).unwrap();
            prop_assert!(a.recheck(&t, &u) && b.recheck(&t, &u));
            prop_assert_ne!(a.value.known_le(b.value), Some(false), "{}: {} then {}", kind, a.value, b.value);
        }
    }
}

#[test]
fn model_documents_round_trip() {
    for m in zoo::hand_built() {
        let doc = m.to_document();
        let back = FiniteCuModel::load(&doc.to_json()).unwrap();
        assert_eq!(back.to_document(), doc);
        assert!(check_axioms(&back).all_pass());
        assert_eq!(back.unit(), m.unit());
    }
}
