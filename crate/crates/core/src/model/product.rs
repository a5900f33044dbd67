use super::{Below, CuModel};
use crate::error::Result;

/// Coordinatewise product `S × T` (the Cuntz semigroup of a direct sum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductModel<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: CuModel, B: CuModel> ProductModel<A, B> {
    pub fn new(left: A, right: B) -> Self {
        ProductModel { left, right }
    }
}

impl<A: CuModel, B: CuModel> CuModel for ProductModel<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn zero(&self) -> Self::Elem {
        (self.left.zero(), self.right.zero())
    }

    fn unit(&self) -> Self::Elem {
        (self.left.unit(), self.right.unit())
    }

    fn top(&self) -> Option<Self::Elem> {
        Some((self.left.top()?, self.right.top()?))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.left.add(&a.0, &b.0), self.right.add(&a.1, &b.1))
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.left.leq(&a.0, &b.0) && self.right.leq(&a.1, &b.1)
    }

    fn elements(&self) -> Vec<Self::Elem> {
        let rs = self.right.elements();
        let mut out = Vec::new();
        for l in self.left.elements() {
            for r in &rs {
                out.push((l.clone(), r.clone()));
            }
        }
        out
    }

    fn is_finite(&self) -> bool {
        self.left.is_finite() && self.right.is_finite()
    }

    fn label(&self, x: &Self::Elem) -> String {
        format!("({}, {})", self.left.label(&x.0), self.right.label(&x.1))
    }

    fn below(&self, u: &Self::Elem) -> Result<Below<Self::Elem>> {
        let l = self.left.below(&u.0)?;
        let r = self.right.below(&u.1)?;
        let mut elements = Vec::with_capacity(l.elements.len() * r.elements.len());
        for a in &l.elements {
            for b in &r.elements {
                elements.push((a.clone(), b.clone()));
            }
        }
        Ok(Below { elements, exhaustive: l.exhaustive && r.exhaustive })
    }

    fn multiple(&self, x: &Self::Elem, k: u64) -> Self::Elem {
        (self.left.multiple(&x.0, k), self.right.multiple(&x.1, k))
    }

    fn infinite_multiple(&self, x: &Self::Elem) -> Result<Self::Elem> {
        Ok((self.left.infinite_multiple(&x.0)?, self.right.infinite_multiple(&x.1)?))
    }

    /// Smallest positive coordinate rank: a coordinate of rank `r ≥ 1` already
    /// blocks `m > r`.
    fn rank(&self, u: &Self::Elem) -> Option<u64> {
        let l = self.left.rank(&u.0).filter(|r| *r > 0);
        let r = self.right.rank(&u.1).filter(|r| *r > 0);
        match (l, r) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        self.left.contains(&x.0) && self.right.contains(&x.1)
    }
}
