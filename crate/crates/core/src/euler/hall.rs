use super::family::SetFamily;
use super::flow::FlowNetwork;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Subfamily whose union is smaller than its total multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violator {
    /// Indices into the family's members.
    pub members: Vec<usize>,
    pub union_size: usize,
    pub demand: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallCertificate {
    pub feasible: bool,
    /// For each member, its `mult` distinct representatives.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transversal: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violator: Option<Violator>,
}

impl HallCertificate {
    /// Re-verifies the certificate against `family` without any flow computation.
    pub fn recheck(&self, family: &SetFamily) -> bool {
        match (self.feasible, &self.transversal, &self.violator) {
            (true, Some(t), None) => {
                if t.len() != family.members.len() {
                    return false;
                }
                let mut used = BTreeSet::new();
                family.members.iter().zip(t).all(|(m, reps)| {
                    reps.len() as u64 == m.mult
                        && reps.iter().all(|e| m.set.binary_search(e).is_ok() && used.insert(*e))
                })
            }
            (false, None, Some(v)) => {
                let mut union = BTreeSet::new();
                let mut demand: u128 = 0;
                for &i in &v.members {
                    let Some(m) = family.members.get(i) else { return false };
                    union.extend(m.set.iter().copied());
                    demand += m.mult as u128;
                }
                union.len() == v.union_size && demand == v.demand && (union.len() as u128) < demand
            }
            _ => false,
        }
    }
}

fn violator_of(family: &SetFamily, members: Vec<usize>) -> Violator {
    let union: BTreeSet<usize> = members.iter().flat_map(|&i| family.members[i].set.iter().copied()).collect();
    let demand = members.iter().map(|&i| family.members[i].mult as u128).sum();
    Violator { members, union_size: union.len(), demand }
}

/// Decides whether the multiset (each set repeated `mult` times) has a system
/// of distinct representatives, by integral max-flow
/// `source → member (mult) → element (mult) → sink (1)`.
///
/// Infeasible instances return the members reachable from the source in the
/// final residual network; their union is smaller than their demand.
pub fn hall_check(family: &SetFamily) -> Result<HallCertificate> {
    let active: Vec<usize> = (0..family.members.len()).filter(|&i| family.members[i].mult > 0).collect();
    let elements: BTreeSet<usize> = active.iter().flat_map(|&i| family.members[i].set.iter().copied()).collect();
    let total = family.total();
    if total > elements.len() as u128 {
        // pigeonhole on the whole family, no flow needed
        let v = violator_of(family, active);
        return Ok(HallCertificate { feasible: false, transversal: None, violator: Some(v) });
    }
    let index: BTreeMap<usize, usize> = elements.iter().enumerate().map(|(k, e)| (*e, k)).collect();
    let (s, t) = (0, 1);
    let member_node = |i: usize| 2 + i;
    let element_node = |e: usize| 2 + family.members.len() + index[&e];
    let mut g = FlowNetwork::new(2 + family.members.len() + elements.len());
    let mut assignment_edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); family.members.len()];
    for &i in &active {
        let m = &family.members[i];
        g.add_edge(s, member_node(i), m.mult);
        for &e in &m.set {
            let id = g.add_edge(member_node(i), element_node(e), m.mult);
            assignment_edges[i].push((id, e));
        }
    }
    for &e in &elements {
        g.add_edge(element_node(e), t, 1);
    }
    let flow = g.max_flow(s, t);
    if flow == total {
        let transversal = assignment_edges
            .iter()
            .map(|edges| edges.iter().filter(|(id, _)| g.flow_on(*id) > 0).map(|(_, e)| *e).collect())
            .collect();
        return Ok(HallCertificate { feasible: true, transversal: Some(transversal), violator: None });
    }
    let reach = g.residual_reachable(s);
    let members: Vec<usize> = active.into_iter().filter(|&i| reach[member_node(i)]).collect();
    let v = violator_of(family, members);
    if v.union_size as u128 >= v.demand {
        return Err(Error::InvalidParameter("min cut did not yield a Hall violator".into()));
    }
    Ok(HallCertificate { feasible: false, transversal: None, violator: Some(v) })
}

/// Backtracking search for a system of distinct representatives; the
/// reference oracle for [`hall_check`] on instances of total multiplicity ≤ 8.
pub fn sdr_bruteforce(family: &SetFamily) -> Result<bool> {
    if family.total() > 8 {
        return Err(Error::TooLarge(format!("total multiplicity {} exceeds 8", family.total())));
    }
    let copies: Vec<&[usize]> = family
        .members
        .iter()
        .flat_map(|m| std::iter::repeat_n(m.set.as_slice(), m.mult as usize))
        .collect();
    fn go(copies: &[&[usize]], used: &mut Vec<usize>) -> bool {
        let Some((first, rest)) = copies.split_first() else { return true };
        for &e in *first {
            if !used.contains(&e) {
                used.push(e);
                if go(rest, used) {
                    return true;
                }
                used.pop();
            }
        }
        false
    }
    Ok(go(&copies, &mut Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(ground: usize, members: &[(&[usize], u64)]) -> SetFamily {
        SetFamily::new(ground, members.iter().map(|(s, c)| (s.to_vec(), *c))).unwrap()
    }

    #[test]
    fn examples() {
        let f = fam(1, &[(&[1], 2)]);
        let c = hall_check(&f).unwrap();
        assert!(!c.feasible);
        assert_eq!(c.violator.as_ref().unwrap().members, vec![0]);
        assert_eq!((c.violator.as_ref().unwrap().union_size, c.violator.as_ref().unwrap().demand), (1, 2));
        assert!(c.recheck(&f));

        let f = fam(2, &[(&[1, 2], 2)]);
        let c = hall_check(&f).unwrap();
        assert_eq!(c.transversal, Some(vec![vec![1, 2]]));
        assert!(c.recheck(&f));

        // disjoint blocks of sizes 2 and 4 with matching demands
        let f = fam(6, &[(&[1, 2], 2), (&[3, 4, 5, 6], 4)]);
        assert!(hall_check(&f).unwrap().feasible);
        assert!(sdr_bruteforce(&f).unwrap());
    }

    #[test]
    fn bruteforce_examples() {
        assert!(!sdr_bruteforce(&fam(1, &[(&[1], 1), (&[1], 1)])).unwrap());
        assert!(sdr_bruteforce(&fam(2, &[(&[1], 1), (&[1, 2], 1)])).unwrap());
        assert!(sdr_bruteforce(&fam(9, &[(&[1, 2, 3, 4, 5, 6, 7, 8, 9], 9)])).is_err());
    }

    #[test]
    fn violator_needs_the_min_cut() {
        // {1}, {1}, {1,2,3}: total 3 = |ground| but the first two collide
        let f = fam(3, &[(&[1], 1), (&[1], 1), (&[1, 2, 3], 1)]);
        let c = hall_check(&f).unwrap();
        assert!(!c.feasible);
        let v = c.violator.clone().unwrap();
        assert_eq!(v.members, vec![0, 1]);
        assert!(c.recheck(&f));
    }

    #[test]
    fn empty_member_and_zero_multiplicity() {
        let f = fam(2, &[(&[], 1), (&[1], 1)]);
        let c = hall_check(&f).unwrap();
        assert!(!c.feasible && c.recheck(&f));
        let f = fam(2, &[(&[], 0), (&[1], 1)]);
        assert!(hall_check(&f).unwrap().feasible);
    }

    #[test]
    fn large_multiplicities_without_unary_expansion() {
        let c = 1u64 << 40;
        let f = fam(3, &[(&[1, 2, 3], c)]);
        let cert = hall_check(&f).unwrap();
        assert!(!cert.feasible && cert.recheck(&f));
    }
}
