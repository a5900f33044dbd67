use super::{Below, CuModel, FiniteCuModel};
use crate::error::{Error, Result};
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `{0} ∪ ℚ₊ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QExt {
    Q(Rational64),
    Inf,
}

impl QExt {
    pub fn new(num: i64, den: i64) -> QExt {
        QExt::Q(Rational64::new(num, den))
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QExt::Q(q) => write!(f, "{q}"),
            QExt::Inf => write!(f, "∞"),
        }
    }
}

/// The positive rational cone with unit `q`. Every positive element is full.
///
/// The cone is infinite; the search carrier is the Farey-style grid
/// `{a/b : 1 ≤ b ≤ max_den}` up to `2q`, so searches on it never produce
/// `∞` verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalConeModel {
    unit: QExt,
    max_den: i64,
    bound: Rational64,
}

impl RationalConeModel {
    pub fn new(unit: Rational64, max_den: i64) -> Result<Self> {
        if unit <= Rational64::zero() {
            return Err(Error::InvalidParameter("rational unit must be positive".into()));
        }
        if max_den < 1 {
            return Err(Error::InvalidParameter("max_den must be positive".into()));
        }
        Ok(RationalConeModel { unit: QExt::Q(unit), max_den, bound: unit * 2 })
    }

    /// Same carrier with a different unit (`∞` gives a properly infinite unit).
    pub fn with_unit(mut self, unit: QExt) -> Self {
        self.unit = unit;
        self
    }

    fn grid_upto(&self, hi: Rational64) -> Vec<QExt> {
        let mut out: Vec<Rational64> = Vec::new();
        for b in 1..=self.max_den {
            let top = (hi * b).floor().to_integer();
            for a in 0..=top {
                out.push(Rational64::new(a, b));
            }
        }
        out.sort();
        out.dedup();
        out.into_iter().map(QExt::Q).collect()
    }

    /// Finite table on `{0, 1/den, 2/den, …, bound, ∞}` with sums above
    /// `bound` saturating to `∞`.
    pub fn grid_table(den: u64, bound: Rational64, unit: Rational64) -> Result<FiniteCuModel> {
        let steps = (bound * den as i64).to_integer();
        if Rational64::new(steps, den as i64) != bound || steps < 0 {
            return Err(Error::InvalidParameter("bound must be a multiple of 1/den".into()));
        }
        let unit_steps = unit * den as i64;
        if !unit_steps.is_integer() || unit_steps.to_integer() > steps || unit_steps.to_integer() <= 0 {
            return Err(Error::InvalidParameter("unit must be a positive grid point".into()));
        }
        let n = steps as usize + 2;
        let inf = n - 1;
        let add = (0..n)
            .map(|a| (0..n).map(|b| if a == inf || b == inf || a + b > steps as usize { inf } else { a + b }).collect())
            .collect();
        let leq: Vec<[usize; 2]> = (0..n - 1).map(|a| [a, a + 1]).collect();
        let mut labels: Vec<String> =
            (0..=steps).map(|a| Rational64::new(a, den as i64).to_string()).collect();
        labels.push("∞".into());
        FiniteCuModel::new(
            format!("Q-grid(1/{den}, {bound})"),
            add,
            &leq,
            unit_steps.to_integer().to_usize().unwrap(),
            Some(inf),
            Some(labels),
        )
    }
}

impl CuModel for RationalConeModel {
    type Elem = QExt;

    fn zero(&self) -> QExt {
        QExt::Q(Rational64::zero())
    }

    fn unit(&self) -> QExt {
        self.unit
    }

    fn top(&self) -> Option<QExt> {
        Some(QExt::Inf)
    }

    fn add(&self, a: &QExt, b: &QExt) -> QExt {
        match (a, b) {
            (QExt::Q(x), QExt::Q(y)) => QExt::Q(x + y),
            _ => QExt::Inf,
        }
    }

    fn leq(&self, a: &QExt, b: &QExt) -> bool {
        a <= b
    }

    fn elements(&self) -> Vec<QExt> {
        let mut v = self.grid_upto(self.bound);
        v.push(QExt::Inf);
        v
    }

    fn is_finite(&self) -> bool {
        false
    }

    fn label(&self, x: &QExt) -> String {
        x.to_string()
    }

    fn below(&self, u: &QExt) -> Result<Below<QExt>> {
        Ok(match u {
            QExt::Q(q) if q.is_zero() => Below { elements: vec![*u], exhaustive: true },
            QExt::Q(q) => Below { elements: self.grid_upto(*q), exhaustive: false },
            QExt::Inf => Below { elements: self.elements(), exhaustive: false },
        })
    }

    fn multiple(&self, x: &QExt, k: u64) -> QExt {
        match x {
            QExt::Q(q) => QExt::Q(q * k as i64),
            QExt::Inf if k == 0 => self.zero(),
            QExt::Inf => QExt::Inf,
        }
    }

    fn infinite_multiple(&self, x: &QExt) -> Result<QExt> {
        Ok(match x {
            QExt::Q(q) if q.is_zero() => *x,
            _ => QExt::Inf,
        })
    }

    fn contains(&self, x: &QExt) -> bool {
        match x {
            QExt::Q(q) => *q >= Rational64::zero(),
            QExt::Inf => true,
        }
    }
}
