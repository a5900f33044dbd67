use crate::error::{Error, Result};
use crate::model::CuModel;
use std::collections::BTreeMap;

/// Searches for `x_1, …, x_N` with `2x_i ≤ v` and
/// `2v ≤ v + (2N+1)·u + Σ 2x_i`, the elements guaranteed to exist whenever
/// `Div_2(u + v) ≤ N`.
///
/// Exhaustive over the multiset of doubles `2x_i`, tracked level by level as
/// reachable sums, so the cost is `N · |sums| · |candidates|`.
pub fn two_divisibility_witness<M: CuModel>(
    model: &M,
    u: &M::Elem,
    v: &M::Elem,
    n: u64,
) -> Result<Option<Vec<M::Elem>>> {
    if !model.contains(u) || !model.contains(v) {
        return Err(Error::OutOfRange(format!("{} or {}", model.label(u), model.label(v))));
    }
    let doubles: BTreeMap<M::Elem, M::Elem> = model
        .below(v)?
        .elements
        .into_iter()
        .rev()
        .filter_map(|x| {
            let d = model.add(&x, &x);
            model.leq(&d, v).then_some((d, x))
        })
        .collect();
    let base = model.add(v, &model.multiple(u, 2 * n + 1));
    let target = model.add(v, v);
    // levels[i]: sum of i doubles -> (previous sum, chosen x)
    let mut levels: Vec<BTreeMap<M::Elem, Option<(M::Elem, M::Elem)>>> = vec![BTreeMap::from([(model.zero(), None)])];
    for _ in 0..n {
        let mut next = BTreeMap::new();
        for s in levels.last().expect("non-empty").keys() {
            for (d, x) in &doubles {
                next.entry(model.add(s, d)).or_insert_with(|| Some((s.clone(), x.clone())));
            }
        }
        levels.push(next);
    }
    let last = levels.last().expect("non-empty");
    let Some(mut sum) = last.keys().find(|s| model.leq(&target, &model.add(&base, s))).cloned() else {
        return Ok(None);
    };
    let mut xs = Vec::new();
    for level in levels.iter().rev() {
        match &level[&sum] {
            Some((prev, x)) => {
                xs.push(x.clone());
                sum = prev.clone();
            }
            None => break,
        }
    }
    xs.sort();
    Ok(Some(xs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::zoo;

    #[test]
    fn extnat_instance() {
        let m = zoo::extnat(4, 8);
        // u = 1, v = 3: Div_2(4) = 2
        let xs = two_divisibility_witness(&m, &1, &3, 2).unwrap().unwrap();
        assert_eq!(xs.len(), 2);
        for x in &xs {
            assert!(m.leq(&m.add(x, x), &3));
        }
    }
}
