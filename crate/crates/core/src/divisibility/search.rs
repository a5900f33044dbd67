//! Multiset searches shared by the solvers.

use crate::budget::Meter;
use crate::error::Result;
use crate::model::CuModel;
use std::collections::{BTreeSet, HashSet};

/// Sums of `k`-element multisets drawn from `cands`, restricted to partial sums
/// accepted by `keep`.
pub(crate) fn reachable_sums<M: CuModel>(
    model: &M,
    from: &BTreeSet<M::Elem>,
    cands: &[M::Elem],
    keep: &dyn Fn(&M::Elem) -> bool,
    meter: &mut Meter,
) -> Result<BTreeSet<M::Elem>> {
    let mut next = BTreeSet::new();
    for s in from {
        for c in cands {
            meter.tick()?;
            let t = model.add(s, c);
            if keep(&t) {
                next.insert(t);
            }
        }
    }
    Ok(next)
}

/// Lexicographically smallest nondecreasing `k`-tuple over the sorted slice
/// `cands` whose partial sums all satisfy `keep` and whose total satisfies
/// `accept`. Since every element is `≥ 0`, partial sums only grow, so a
/// downward-closed `keep` prunes soundly.
pub(crate) fn smallest_multiset<M: CuModel>(
    model: &M,
    cands: &[M::Elem],
    k: usize,
    keep: &dyn Fn(&M::Elem) -> bool,
    accept: &dyn Fn(&M::Elem) -> bool,
    meter: &mut Meter,
) -> Result<Option<Vec<M::Elem>>> {
    struct Dfs<'a, M: CuModel> {
        model: &'a M,
        cands: &'a [M::Elem],
        keep: &'a dyn Fn(&M::Elem) -> bool,
        accept: &'a dyn Fn(&M::Elem) -> bool,
        failed: HashSet<(usize, usize, M::Elem)>,
        stack: Vec<M::Elem>,
    }
    impl<M: CuModel> Dfs<'_, M> {
        fn go(&mut self, left: usize, start: usize, sum: M::Elem, meter: &mut Meter) -> Result<bool> {
            if left == 0 {
                return Ok((self.accept)(&sum));
            }
            let key = (left, start, sum.clone());
            if self.failed.contains(&key) {
                return Ok(false);
            }
            for i in start..self.cands.len() {
                meter.tick()?;
                let next = self.model.add(&sum, &self.cands[i]);
                if !(self.keep)(&next) {
                    continue;
                }
                self.stack.push(self.cands[i].clone());
                if self.go(left - 1, i, next, meter)? {
                    return Ok(true);
                }
                self.stack.pop();
            }
            self.failed.insert(key);
            Ok(false)
        }
    }
    let mut dfs = Dfs { model, cands, keep, accept, failed: HashSet::new(), stack: Vec::with_capacity(k) };
    Ok(if dfs.go(k, 0, model.zero(), meter)? { Some(dfs.stack) } else { None })
}

/// Least `n ≥ 1` with `u ≤ n·x`, searched up to `limit`; `None` if the
/// sequence `n·x` stabilizes below `u` or the limit is reached first.
/// The flag reports whether stabilization (a proof of "never") was observed.
pub(crate) fn least_multiple_above<M: CuModel>(model: &M, x: &M::Elem, u: &M::Elem, limit: u64) -> (Option<u64>, bool) {
    let mut acc = x.clone();
    for n in 1..=limit {
        if model.leq(u, &acc) {
            return (Some(n), false);
        }
        let next = model.add(&acc, x);
        if next == acc {
            return (None, true);
        }
        acc = next;
    }
    (None, false)
}
