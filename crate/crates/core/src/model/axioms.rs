use super::CuModel;
use serde::Serialize;
use std::collections::HashMap;

/// Which law a flag reports on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    Commutative,
    Associative,
    Neutral,
    PartialOrder,
    Positive,
    OrderCompatible,
    /// (A1): increasing sequences have suprema.
    A1,
    /// (A2): every element is a supremum of a `≪`-increasing sequence.
    A2,
    /// (A3): `u' ≪ u, v' ≪ v ⇒ u' + v' ≪ u + v`.
    A3,
    /// (A4): suprema are additive.
    A4,
    /// (P1): almost Riesz decomposition.
    P1,
    /// (P2): the order is almost algebraic.
    P2,
    Top,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomFlag<E> {
    pub axiom: Axiom,
    pub pass: bool,
    /// Violating tuple, present exactly when `pass` is false.
    pub witness: Option<Vec<E>>,
    pub note: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport<E> {
    pub flags: Vec<AxiomFlag<E>>,
}

impl<E: Clone> AxiomReport<E> {
    pub fn all_pass(&self) -> bool {
        self.flags.iter().all(|f| f.pass)
    }

    pub fn flag(&self, axiom: Axiom) -> &AxiomFlag<E> {
        self.flags.iter().find(|f| f.axiom == axiom).expect("every axiom is reported")
    }

    /// Re-evaluates every failure witness; true when each one is a genuine violation.
    pub fn recheck<M: CuModel<Elem = E>>(&self, model: &M) -> bool {
        self.flags.iter().all(|f| match &f.witness {
            None => f.pass,
            Some(w) => !f.pass && violates(model, f.axiom, w),
        })
    }
}

const AUTOMATIC: &str = "automatic in finite models: increasing sequences stabilize";
const COMPACT: &str = "checked with ≪ read as ≤ (every element is compact)";

fn violates<M: CuModel>(m: &M, axiom: Axiom, w: &[M::Elem]) -> bool {
    let els = m.elements();
    match (axiom, w) {
        (Axiom::Commutative, [a, b]) => m.add(a, b) != m.add(b, a),
        (Axiom::Associative, [a, b, c]) => m.add(&m.add(a, b), c) != m.add(a, &m.add(b, c)),
        (Axiom::Neutral, [a]) => m.add(&m.zero(), a) != *a,
        (Axiom::Positive, [a]) => !m.leq(&m.zero(), a),
        (Axiom::PartialOrder, [a]) => !m.leq(a, a),
        (Axiom::PartialOrder, [a, b]) => a != b && m.leq(a, b) && m.leq(b, a),
        (Axiom::PartialOrder, [a, b, c]) => m.leq(a, b) && m.leq(b, c) && !m.leq(a, c),
        (Axiom::OrderCompatible, [a, b, c]) => m.leq(a, b) && !m.leq(&m.add(a, c), &m.add(b, c)),
        (Axiom::A3, [a, b, c, d]) => m.leq(a, b) && m.leq(c, d) && !m.leq(&m.add(a, c), &m.add(b, d)),
        (Axiom::Top, [t, x]) => !m.leq(x, t) || m.add(x, t) != *t,
        (Axiom::P1, [u, v, w]) => m.leq(u, &m.add(v, w)) && !p1_holds(m, &els, u, v, w),
        (Axiom::P2, [u, v]) => m.leq(u, v) && !p2_holds(m, &els, u, v),
        _ => false,
    }
}

fn p1_holds<M: CuModel>(m: &M, els: &[M::Elem], u: &M::Elem, v: &M::Elem, w: &M::Elem) -> bool {
    let ws = maximal_common_lower(m, els, u, w);
    maximal_common_lower(m, els, u, v).iter().any(|a| ws.iter().any(|b| m.leq(u, &m.add(a, b))))
}

/// Maximal elements of `{x : x ≤ u, x ≤ v}`; by monotonicity these are the
/// only candidates (P1) needs.
fn maximal_common_lower<M: CuModel>(m: &M, els: &[M::Elem], u: &M::Elem, v: &M::Elem) -> Vec<M::Elem> {
    let common: Vec<&M::Elem> = els.iter().filter(|x| m.leq(x, u) && m.leq(x, v)).collect();
    common
        .iter()
        .filter(|x| !common.iter().any(|y| y != *x && m.leq(x, y)))
        .map(|x| (*x).clone())
        .collect()
}

fn p2_holds<M: CuModel>(m: &M, els: &[M::Elem], u: &M::Elem, v: &M::Elem) -> bool {
    els.iter().any(|w| {
        let s = m.add(u, w);
        m.leq(&s, v) && m.leq(v, &s)
    })
}

fn flag<E>(axiom: Axiom, witness: Option<Vec<E>>, note: Option<&'static str>) -> AxiomFlag<E> {
    AxiomFlag { axiom, pass: witness.is_none(), witness, note }
}

/// Exhaustive check of the monoid, order and Cu-style laws over the model's
/// enumerable carrier.
///
/// (A1) and (A4) are reported as passing automatically; (A2) holds because
/// `u ≪ u` for every `u`; (A3), (P1) and (P2) are quantified with `≪ = ≤`.
pub fn check_axioms<M: CuModel>(model: &M) -> AxiomReport<M::Elem> {
    let m = model;
    let els = m.elements();
    let first = |f: &dyn Fn() -> Option<Vec<M::Elem>>| f();

    let commutative = first(&|| {
        for a in &els {
            for b in &els {
                if m.add(a, b) != m.add(b, a) {
                    return Some(vec![a.clone(), b.clone()]);
                }
            }
        }
        None
    });
    let associative = first(&|| {
        for a in &els {
            for b in &els {
                let ab = m.add(a, b);
                for c in &els {
                    if m.add(&ab, c) != m.add(a, &m.add(b, c)) {
                        return Some(vec![a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
        None
    });
    let neutral = els.iter().find(|a| m.add(&m.zero(), a) != **a).map(|a| vec![a.clone()]);
    let positive = els.iter().find(|a| !m.leq(&m.zero(), a)).map(|a| vec![a.clone()]);
    let partial_order = first(&|| {
        for a in &els {
            if !m.leq(a, a) {
                return Some(vec![a.clone()]);
            }
            for b in &els {
                if a != b && m.leq(a, b) && m.leq(b, a) {
                    return Some(vec![a.clone(), b.clone()]);
                }
                if !m.leq(a, b) {
                    continue;
                }
                for c in &els {
                    if m.leq(b, c) && !m.leq(a, c) {
                        return Some(vec![a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
        None
    });
    let compatible = first(&|| {
        for a in &els {
            for b in els.iter().filter(|b| m.leq(a, b)) {
                for c in &els {
                    if !m.leq(&m.add(a, c), &m.add(b, c)) {
                        return Some(vec![a.clone(), b.clone(), c.clone()]);
                    }
                }
            }
        }
        None
    });
    // with a transitive compatible order, a + c ≤ b + c ≤ b + d
    let derived = compatible.is_none() && partial_order.is_none();
    let a3 = first(&|| {
        if derived {
            return None;
        }
        for a in &els {
            for b in els.iter().filter(|b| m.leq(a, b)) {
                for c in &els {
                    for d in els.iter().filter(|d| m.leq(c, d)) {
                        if !m.leq(&m.add(a, c), &m.add(b, d)) {
                            return Some(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
                        }
                    }
                }
            }
        }
        None
    });
    let top = m.top().and_then(|t| {
        els.iter()
            .find(|x| !m.leq(x, &t) || m.add(x, &t) != t)
            .map(|x| vec![t.clone(), x.clone()])
    });
    let p1 = first(&|| {
        let mut lower: HashMap<(M::Elem, M::Elem), Vec<M::Elem>> = HashMap::new();
        let mut maxes = |u: &M::Elem, v: &M::Elem| -> Vec<M::Elem> {
            lower.entry((u.clone(), v.clone())).or_insert_with(|| maximal_common_lower(m, &els, u, v)).clone()
        };
        for v in &els {
            for w in &els {
                let vw = m.add(v, w);
                for u in els.iter().filter(|u| m.leq(u, &vw)) {
                    let (vs, ws) = (maxes(u, v), maxes(u, w));
                    if !vs.iter().any(|a| ws.iter().any(|b| m.leq(u, &m.add(a, b)))) {
                        return Some(vec![u.clone(), v.clone(), w.clone()]);
                    }
                }
            }
        }
        None
    });
    let p2 = first(&|| {
        for u in &els {
            for v in els.iter().filter(|v| m.leq(u, v)) {
                if !p2_holds(m, &els, u, v) {
                    return Some(vec![u.clone(), v.clone()]);
                }
            }
        }
        None
    });

    AxiomReport {
        flags: vec![
            flag(Axiom::Commutative, commutative, None),
            flag(Axiom::Associative, associative, None),
            flag(Axiom::Neutral, neutral, None),
            flag(Axiom::PartialOrder, partial_order, None),
            flag(Axiom::Positive, positive, None),
            flag(Axiom::OrderCompatible, compatible, None),
            flag(Axiom::A1, None, Some(AUTOMATIC)),
            flag(Axiom::A2, None, Some("every element is compact, u ≪ u")),
            flag(Axiom::A3, a3, Some(COMPACT)),
            flag(Axiom::A4, None, Some(AUTOMATIC)),
            flag(Axiom::P1, p1, Some(COMPACT)),
            flag(Axiom::P2, p2, Some(COMPACT)),
            flag(Axiom::Top, top, None),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ExtNatModel, FiniteCuModel, RationalConeModel};
    use num_rational::Rational64;

    #[test]
    fn extnat_passes() {
        let r = check_axioms(&ExtNatModel::new(5).unwrap().to_table(10).unwrap());
        assert!(r.all_pass(), "{r:?}");
        assert!(r.recheck(&ExtNatModel::new(5).unwrap().to_table(10).unwrap()));
        let native = ExtNatModel::new(5).unwrap();
        assert!(check_axioms(&native).all_pass());
    }

    #[test]
    fn quarter_grid_passes() {
        let g = RationalConeModel::grid_table(4, Rational64::new(2, 1), Rational64::new(1, 1)).unwrap();
        assert_eq!(g.size(), 10);
        assert!(check_axioms(&g).all_pass());
    }

    #[test]
    fn non_monotone_order_is_flagged() {
        // 0 < a < b with a + a = 0
        let add = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]];
        let m = FiniteCuModel::new_unchecked("nm", add, &[[0, 1], [1, 2]], 1, Some(2), None).unwrap();
        let r = check_axioms(&m);
        let f = r.flag(Axiom::OrderCompatible);
        assert!(!f.pass);
        assert!(f.witness.is_some());
        assert!(r.recheck(&m));
        assert!(FiniteCuModel::new("nm", vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]], &[[0, 1], [1, 2]], 1, Some(2), None).is_err());
    }

    #[test]
    fn missing_riesz_is_flagged() {
        // 0 < a, 0 < b, a and b incomparable, a + b = t = 2a = 2b, and c between a and t
        // u = c ≤ a + b but nothing below c and a sums above c.
        // elements: 0, a, b, c, t
        let add = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 4, 4, 4, 4],
            vec![2, 4, 4, 4, 4],
            vec![3, 4, 4, 4, 4],
            vec![4, 4, 4, 4, 4],
        ];
        let leq = [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]];
        let m = FiniteCuModel::new("no-p1", add, &leq, 4, Some(4), None).unwrap();
        let r = check_axioms(&m);
        assert!(!r.flag(Axiom::P1).pass);
        assert!(r.recheck(&m));
    }
}
