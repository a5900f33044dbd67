//! Built-in models used by the property suites.

use super::{ExtNatModel, FiniteCuModel, RationalConeModel};
use crate::error::Result;
use num_rational::Rational64;

/// `ExtNat(k)` truncated at `cap`, unit `k`.
pub fn extnat(k: u64, cap: u64) -> FiniteCuModel {
    ExtNatModel::new(k).and_then(|m| m.to_table(cap)).expect("cap ≥ scale")
}

/// Coordinatewise product of two tables; unit and top are taken coordinatewise.
pub fn product(a: &FiniteCuModel, b: &FiniteCuModel) -> Result<FiniteCuModel> {
    let (na, nb) = (a.size(), b.size());
    let idx = |i: usize, j: usize| i * nb + j;
    let n = na * nb;
    let mut add = vec![vec![0; n]; n];
    let mut leq = Vec::new();
    let mut labels = Vec::with_capacity(n);
    for i in 0..na {
        for j in 0..nb {
            labels.push(format!("({}, {})", a.label_of(i), b.label_of(j)));
            for k in 0..na {
                for l in 0..nb {
                    add[idx(i, j)][idx(k, l)] = idx(a.sum(i, k), b.sum(j, l));
                    if a.le(i, k) && b.le(j, l) {
                        leq.push([idx(i, j), idx(k, l)]);
                    }
                }
            }
        }
    }
    let top = match (a.top_index(), b.top_index()) {
        (Some(s), Some(t)) => Some(idx(s, t)),
        _ => None,
    };
    FiniteCuModel::new(
        format!("{} × {}", a.name(), b.name()),
        add,
        &leq,
        idx(a.unit_index(), b.unit_index()),
        top,
        Some(labels),
    )
}

/// `{0, a, b}` with `0 < a < b`, `a + a = b` and `b` absorbing; unit `a`.
pub fn three_point() -> FiniteCuModel {
    let add = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
    let labels = ["0", "a", "b"].map(String::from).to_vec();
    FiniteCuModel::new("{0,a,2a=⊤}", add, &[[0, 1], [1, 2]], 1, Some(2), Some(labels)).expect("valid")
}

/// `{0, ∞}`: the unit is properly infinite.
pub fn two_point() -> FiniteCuModel {
    let add = vec![vec![0, 1], vec![1, 1]];
    let labels = ["0", "∞"].map(String::from).to_vec();
    FiniteCuModel::new("{0,∞}", add, &[[0, 1]], 1, Some(1), Some(labels)).expect("valid")
}

/// Small curated tables of at most 8 elements, all satisfying the axioms.
pub fn hand_built() -> Vec<FiniteCuModel> {
    let e3 = extnat(3, 3);
    let mut out = vec![
        FiniteCuModel::new("{0}", vec![vec![0]], &[], 0, Some(0), None).expect("valid"),
        two_point(),
        three_point(),
        extnat(1, 2),
        extnat(2, 2),
        e3.clone(),
        e3.clone().with_unit(1).expect("in range"),
        e3.with_unit(2).expect("in range"),
        extnat(2, 6),
    ];
    let e1 = extnat(1, 1);
    out.push(product(&two_point(), &two_point()).expect("valid"));
    out.push(product(&e1, &two_point()).expect("valid"));
    out.push(product(&three_point(), &two_point()).expect("valid"));
    let diag = product(&two_point(), &two_point()).expect("valid");
    let one_side = diag.with_unit(1).expect("in range");
    out.push(one_side);
    out
}

/// Everything the property suites quantify over: `ExtNat(k)` for `k ≤ 10`
/// (cap `2k`), products of two such (cap `k` per factor) and [`hand_built`].
pub fn zoo() -> Vec<FiniteCuModel> {
    let mut out: Vec<FiniteCuModel> = (1..=10).map(|k| extnat(k, 2 * k)).collect();
    for k in 1..=10 {
        for l in k..=10 {
            out.push(product(&extnat(k, k), &extnat(l, l)).expect("valid"));
        }
    }
    out.extend(hand_built());
    out
}

/// The grid `{0, 1/den, …, bound, ∞}` with the given unit.
pub fn rational_grid(den: u64, bound: i64, unit: Rational64) -> FiniteCuModel {
    RationalConeModel::grid_table(den, Rational64::from_integer(bound), unit).expect("valid grid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{check_axioms, infinite_multiple, CuModel};

    #[test]
    fn hand_built_models_satisfy_the_axioms() {
        for m in hand_built() {
            assert!(m.size() <= 8, "{}", m.name());
            let r = check_axioms(&m);
            assert!(r.all_pass(), "{}: {r:?}", m.name());
        }
    }

    #[test]
    fn extnat_tables_satisfy_the_axioms() {
        for k in 1..=12 {
            assert!(check_axioms(&extnat(k, 2 * k)).all_pass(), "k = {k}");
        }
    }

    #[test]
    fn small_products_satisfy_the_axioms() {
        for k in 1..=3 {
            for l in k..=3 {
                assert!(check_axioms(&product(&extnat(k, k), &extnat(l, l)).unwrap()).all_pass());
            }
        }
    }

    #[test]
    fn three_point_infinite_multiple() {
        let m = three_point();
        assert_eq!(infinite_multiple(&m, &1).unwrap(), 2);
        assert_eq!(infinite_multiple(&m, &0).unwrap(), 0);
    }

    #[test]
    fn zoo_models_are_valid() {
        let z = zoo();
        assert_eq!(z.len(), 10 + 55 + hand_built().len());
        for m in &z {
            assert!(m.unit() < m.size());
        }
    }
}
