use super::{least_with, DivKind, DivValue, SearchConfig};
use crate::error::{Error, Result};
use crate::model::CuModel;
use num_rational::Rational64;
use serde::{Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Estimate {
    Value(Rational64),
    Infinite,
}

impl fmt::Display for Estimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Estimate::Value(q) => write!(f, "{q}"),
            Estimate::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for Estimate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&match self {
            Estimate::Value(q) => q.to_string(),
            Estimate::Infinite => "inf".into(),
        })
    }
}

/// Samples of `Div_m(u)` and the resulting estimate of `liminf Div_m/m`.
///
/// `lower` is certified: `Div_m ≤ m·Div_* + 1` for every `m`. `upper` is the
/// smallest sampled ratio, which the limit approaches from the samples; it is
/// exact when some `Div_m` is `∞` (then `Div_*` is `∞`) or the unit is
/// properly infinite (then every `Div_m` is 1 and `Div_*` is 0).
#[derive(Debug, Clone, Serialize)]
pub struct DivStarEstimate {
    pub samples: Vec<(u64, DivValue)>,
    pub lower: Estimate,
    pub upper: Estimate,
}

pub fn div_star_estimate<M: CuModel>(model: &M, m_max: u64, cfg: &SearchConfig) -> Result<DivStarEstimate> {
    if m_max < 2 {
        return Err(Error::InvalidParameter("m_max must be at least 2".into()));
    }
    let u = model.unit();
    let mut samples = Vec::new();
    for m in 2..=m_max {
        samples.push((m, least_with(model, &u, DivKind::Div, m, cfg)?.value));
    }
    let zero = Estimate::Value(Rational64::from_integer(0));
    if model.leq(&model.add(&u, &u), &u) {
        return Ok(DivStarEstimate { samples, lower: zero, upper: zero });
    }
    if samples.iter().any(|(_, v)| *v == DivValue::Infinite) {
        return Ok(DivStarEstimate { samples, lower: Estimate::Infinite, upper: Estimate::Infinite });
    }
    let ratio = |n: u64, m: u64| Rational64::new(n as i64, m as i64);
    let upper = samples
        .iter()
        .filter_map(|(m, v)| v.finite().map(|n| ratio(n, *m)))
        .min()
        .map_or(Estimate::Infinite, Estimate::Value);
    let lower = samples
        .iter()
        .map(|(m, v)| match v {
            DivValue::Finite(n) | DivValue::AtLeast(n) => ratio(n.saturating_sub(1), *m),
            DivValue::Infinite => unreachable!(),
        })
        .max()
        .map_or(zero, Estimate::Value);
    Ok(DivStarEstimate { samples, lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ExtNatModel, QExt, RationalConeModel};

    #[test]
    fn finite_rank_gives_infinity() {
        let e = div_star_estimate(&ExtNatModel::new(6).unwrap(), 8, &SearchConfig::default()).unwrap();
        assert_eq!(e.upper, Estimate::Infinite);
        assert_eq!(e.samples[5], (7, DivValue::Infinite));
    }

    #[test]
    fn rational_cone_gives_one() {
        let q = RationalConeModel::new(Rational64::from_integer(1), 8).unwrap();
        let e = div_star_estimate(&q, 8, &SearchConfig::default()).unwrap();
        for (m, v) in &e.samples {
            assert_eq!(*v, DivValue::Finite(*m));
        }
        assert_eq!(e.upper, Estimate::Value(Rational64::from_integer(1)));
        assert!(e.lower <= e.upper);
    }

    #[test]
    fn properly_infinite_unit_gives_zero() {
        let q = RationalConeModel::new(Rational64::from_integer(1), 4).unwrap().with_unit(QExt::Inf);
        let e = div_star_estimate(&q, 8, &SearchConfig::default()).unwrap();
        assert_eq!(e.upper, Estimate::Value(Rational64::from_integer(0)));
        assert!(e.samples.iter().all(|(_, v)| *v == DivValue::Finite(1)));
    }
}
