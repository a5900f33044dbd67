use super::{Below, CuModel, FiniteCuModel};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of `{0, 1, 2, …, ∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn add(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_add(b).map(ExtNat::Fin).unwrap_or(ExtNat::Inf),
            _ => ExtNat::Inf,
        }
    }

    /// Product with `∞·0 = 0`.
    pub fn mul(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::Fin(0),
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_mul(b).map(ExtNat::Fin).unwrap_or(ExtNat::Inf),
            _ => ExtNat::Inf,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => write!(f, "∞"),
        }
    }
}

impl From<u64> for ExtNat {
    fn from(v: u64) -> Self {
        ExtNat::Fin(v)
    }
}

/// The extended naturals with unit `k`: the Cuntz semigroup of `M_k(ℂ)`.
///
/// Arithmetic is native. `cap` only bounds [`CuModel::elements`]; queries below
/// a finite `u` enumerate `0..=u` exhaustively whatever the cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtNatModel {
    scale: u64,
    cap: u64,
    unit: ExtNat,
}

impl ExtNatModel {
    /// Enumeration cap defaults to `2k`.
    pub fn new(scale: u64) -> Result<Self> {
        Self::with_cap(scale, 2 * scale)
    }

    pub fn with_cap(scale: u64, cap: u64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParameter("scale must be positive".into()));
        }
        if cap < scale {
            return Err(Error::InvalidParameter(format!("cap {cap} below scale {scale}")));
        }
        Ok(ExtNatModel { scale, cap, unit: ExtNat::Fin(scale) })
    }

    /// Same carrier, different distinguished unit (e.g. `∞`).
    pub fn with_unit(mut self, unit: ExtNat) -> Self {
        self.unit = unit;
        self
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Table on `{0, …, cap, ∞}` where sums above `cap` saturate to `∞`.
    ///
    /// Identifying everything above `cap` with `∞` is a monoid congruence
    /// compatible with the order, and every divisibility witness for `u ≤ cap`
    /// lies below `u`, so least-n answers for such `u` are exact.
    pub fn to_table(&self, cap: u64) -> Result<FiniteCuModel> {
        if cap < self.scale {
            return Err(Error::BeyondCap { cap });
        }
        let size = (cap + 2) as usize;
        let inf = size - 1;
        let add = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| if a == inf || b == inf || a + b > cap as usize { inf } else { a + b })
                    .collect()
            })
            .collect();
        let leq: Vec<[usize; 2]> = (0..size - 1).map(|a| [a, a + 1]).collect();
        let mut labels: Vec<String> = (0..=cap).map(|v| v.to_string()).collect();
        labels.push("∞".into());
        let unit = match self.unit {
            ExtNat::Fin(v) if v <= cap => v as usize,
            ExtNat::Fin(_) => return Err(Error::BeyondCap { cap }),
            ExtNat::Inf => inf,
        };
        FiniteCuModel::new(format!("ExtNat({})/cap {}", self.scale, cap), add, &leq, unit, Some(inf), Some(labels))
    }
}

impl CuModel for ExtNatModel {
    type Elem = ExtNat;

    fn zero(&self) -> ExtNat {
        ExtNat::Fin(0)
    }

    fn unit(&self) -> ExtNat {
        self.unit
    }

    fn top(&self) -> Option<ExtNat> {
        Some(ExtNat::Inf)
    }

    fn add(&self, a: &ExtNat, b: &ExtNat) -> ExtNat {
        a.add(*b)
    }

    fn leq(&self, a: &ExtNat, b: &ExtNat) -> bool {
        a <= b
    }

    fn elements(&self) -> Vec<ExtNat> {
        (0..=self.cap).map(ExtNat::Fin).chain(std::iter::once(ExtNat::Inf)).collect()
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn label(&self, x: &ExtNat) -> String {
        x.to_string()
    }

    fn below(&self, u: &ExtNat) -> Result<Below<ExtNat>> {
        Ok(match u {
            ExtNat::Fin(v) => Below { elements: (0..=*v).map(ExtNat::Fin).collect(), exhaustive: true },
            ExtNat::Inf => Below { elements: self.elements(), exhaustive: false },
        })
    }

    fn multiple(&self, x: &ExtNat, k: u64) -> ExtNat {
        x.mul(ExtNat::Fin(k))
    }

    fn infinite_multiple(&self, x: &ExtNat) -> Result<ExtNat> {
        Ok(if *x == ExtNat::Fin(0) { *x } else { ExtNat::Inf })
    }

    fn rank(&self, u: &ExtNat) -> Option<u64> {
        match u {
            ExtNat::Fin(v) => Some(*v),
            ExtNat::Inf => None,
        }
    }

    fn cap(&self) -> Option<u64> {
        Some(self.cap)
    }

    fn contains(&self, _x: &ExtNat) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{element_flags, infinite_multiple};

    #[test]
    fn table_agrees_with_native() {
        for k in 1..=6u64 {
            let native = ExtNatModel::new(k).unwrap();
            let table = native.to_table(2 * k).unwrap();
            let inf = table.size() - 1;
            let idx = |v: ExtNat| match v {
                ExtNat::Fin(v) if v <= 2 * k => v as usize,
                _ => inf,
            };
            for a in native.elements() {
                for b in native.elements() {
                    assert_eq!(idx(native.add(&a, &b)), table.add(&idx(a), &idx(b)));
                    assert_eq!(native.leq(&a, &b), table.leq(&idx(a), &idx(b)));
                }
                assert_eq!(idx(native.infinite_multiple(&a).unwrap()), table.infinite_multiple(&idx(a)).unwrap());
            }
        }
    }

    #[test]
    fn flags() {
        let m = ExtNatModel::new(5).unwrap();
        let f = element_flags(&m, &ExtNat::Inf).unwrap();
        assert!(f.properly_infinite && f.full);
        let f = element_flags(&m, &ExtNat::Fin(2)).unwrap();
        assert!(!f.properly_infinite && f.full);
        let f = element_flags(&m, &ExtNat::Fin(0)).unwrap();
        assert!(f.properly_infinite && !f.full);
        assert_eq!(infinite_multiple(&m, &ExtNat::Fin(1)).unwrap(), ExtNat::Inf);
        assert_eq!(infinite_multiple(&m, &ExtNat::Fin(0)).unwrap(), ExtNat::Fin(0));
    }

    #[test]
    fn six_element_truncation_of_three() {
        let t = ExtNatModel::new(3).unwrap().to_table(4).unwrap();
        assert_eq!(t.size(), 6);
        assert_eq!(t.add(&3, &2), 5);
        assert_eq!(t.add(&2, &2), 4);
    }
}
