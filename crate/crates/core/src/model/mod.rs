//! Ordered abelian monoid models standing in for finite fragments of a Cuntz
//! semigroup.
//!
//! # Compact convention
//!
//! Every increasing sequence in a finite model stabilizes, so every element is
//! compact and compact containment `≪` coincides with `≤`. Under this
//! convention the divisibility conditions quantified over all `u' ≪ u` collapse
//! to their compact-unit form (`m·x ≤ u ≤ n·x` and friends), axioms (A1), (A2)
//! and (A4) hold automatically and (A3) is order compatibility.
//!
//! Models that are not finite ([`ExtNatModel`] above its enumeration cap,
//! [`RationalConeModel`]) expose a finite *search carrier* through
//! [`CuModel::below`]; the flag [`Below::exhaustive`] tells the solvers whether
//! an exhausted search may be turned into an `∞` verdict.

mod axioms;
mod extnat;
mod product;
mod rational;
mod table;
pub mod zoo;

pub use axioms::{check_axioms, AxiomFlag, AxiomReport};
pub use extnat::{ExtNat, ExtNatModel};
pub use product::ProductModel;
pub use rational::{QExt, RationalConeModel};
pub use table::{FiniteCuModel, ModelDocument};

use crate::error::{Error, Result};
use std::fmt::Debug;
use std::hash::Hash;

/// Elements of the search carrier lying below some bound.
#[derive(Debug, Clone)]
pub struct Below<E> {
    /// Sorted in canonical order.
    pub elements: Vec<E>,
    /// `true` when `elements` contains every element of the model below the bound.
    pub exhaustive: bool,
}

/// Flags of a single element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ElementFlags {
    pub properly_infinite: bool,
    pub full: bool,
    /// Always `true`: every element of a finite model is compact.
    pub compact: bool,
}

/// A positively ordered abelian monoid with a distinguished unit.
///
/// `Ord` on the element type is the canonical order used for witness
/// tie-breaking; it need not agree with the semigroup order.
pub trait CuModel {
    type Elem: Clone + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    /// Largest element, when the model has one.
    fn top(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// The enumerable part of the carrier in canonical order.
    fn elements(&self) -> Vec<Self::Elem>;

    /// `true` when [`elements`](CuModel::elements) is the whole carrier.
    fn is_finite(&self) -> bool;

    fn label(&self, x: &Self::Elem) -> String;

    /// Carrier elements `≤ u`.
    fn below(&self, u: &Self::Elem) -> Result<Below<Self::Elem>> {
        let elements = self.elements().into_iter().filter(|x| self.leq(x, u)).collect();
        Ok(Below { elements, exhaustive: self.is_finite() })
    }

    /// `k·x` for `k ≥ 0`.
    fn multiple(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        // double-and-add
        let mut acc = self.zero();
        let mut base = x.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    /// The stable value of the increasing sequence `(k·x)_k`.
    fn infinite_multiple(&self, x: &Self::Elem) -> Result<Self::Elem> {
        let steps = self.elements().len() + 1;
        let mut cur = x.clone();
        for _ in 0..steps {
            let next = self.add(&cur, x);
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::NoStableMultiple(self.label(x)))
    }

    /// Rank of `u` when the model has a rank obstruction (`m·x ≤ u` forces
    /// `x = 0` for `m > rank`).
    fn rank(&self, _u: &Self::Elem) -> Option<u64> {
        None
    }

    /// Truncation cap of the enumeration, when there is one.
    fn cap(&self) -> Option<u64> {
        None
    }

    fn contains(&self, x: &Self::Elem) -> bool;
}

/// Stable value of `k·x`. Errors when the sequence does not reach a fixed point
/// within `|elements|` steps.
pub fn infinite_multiple<M: CuModel>(model: &M, x: &M::Elem) -> Result<M::Elem> {
    if !model.contains(x) {
        return Err(Error::OutOfRange(model.label(x)));
    }
    model.infinite_multiple(x)
}

/// Proper infiniteness (`2x ≤ x`) and fullness (`∞·x` is the largest element).
pub fn element_flags<M: CuModel>(model: &M, x: &M::Elem) -> Result<ElementFlags> {
    if !model.contains(x) {
        return Err(Error::OutOfRange(model.label(x)));
    }
    let properly_infinite = model.leq(&model.add(x, x), x);
    let inf = model.infinite_multiple(x)?;
    let full = match model.top() {
        Some(top) => inf == top,
        None => {
            let els = model.elements();
            // without a declared top, full means ∞·x dominates everything
            els.iter().all(|y| model.leq(y, &inf))
        }
    };
    Ok(ElementFlags { properly_infinite, full, compact: true })
}
