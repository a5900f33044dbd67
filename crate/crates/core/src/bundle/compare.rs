//! A three-valued comparison oracle `ξ ≲ η` for sums of line bundles.
//!
//! Rules, evaluated in the order R1, R3, R4, R2:
//! - R1 (Yes): every coefficient of `ξ` is at most the one of `η`.
//! - R3 (No): `rank ξ > rank η`.
//! - R4 (No): `ξ` has a trivial summand and the Euler class of `η` is nonzero,
//!   decided as a transversal of `η`'s index sets; a nowhere-vanishing section
//!   of `η` would kill its Euler class.
//! - R2 (Yes): `rank η − rank ξ ≥ margin`, the stable-range condition
//!   `⌈(dim_R X − 1)/2⌉` for the base `(S²)^s`.

use super::ProjectionExpr;
use crate::error::{Error, Result};
use crate::euler::{euler_of_family_guarded, hall_check, HallCertificate, SetFamily};
use serde::{Deserialize, Serialize};

/// Term budget for the optional Euler-class polynomial in R4 certificates.
const EULER_DISPLAY_TERMS: usize = 4096;

/// How the stable-range margin of R2 is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MarginRule {
    /// `s = |supp ξ ∪ supp η|`: both sums are pulled back from `(S²)^s`, and
    /// comparison there pulls back to `(S²)^d`.
    #[default]
    SupportDimension,
    /// `s = d`, the ambient number of sphere factors.
    AmbientDimension,
}

impl MarginRule {
    pub fn margin(self, xi: &ProjectionExpr, eta: &ProjectionExpr) -> u64 {
        match self {
            MarginRule::SupportDimension => xi.support().union(&eta.support()).count() as u64,
            MarginRule::AmbientDimension => xi.dim() as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// `(I, c_I(ξ), c_I(η))` for every `I` in the support of `ξ`.
    Dominance { pairs: Vec<(Vec<usize>, u64, u64)> },
    RankExcess { rank_xi: u128, rank_eta: u128 },
    EulerObstruction {
        family: SetFamily,
        hall: HallCertificate,
        /// The Euler class, when small enough to expand.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        euler: Option<String>,
    },
    RankMargin { rank_xi: u128, rank_eta: u128, margin: u64, rule: MarginRule },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    Yes { rule: Rule, certificate: Certificate },
    No { rule: Rule, certificate: Certificate },
    Unknown,
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No { .. })
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            Verdict::Yes { rule, .. } | Verdict::No { rule, .. } => Some(*rule),
            Verdict::Unknown => None,
        }
    }

    /// Re-derives the verdict's certificate from `ξ` and `η`.
    pub fn recheck(&self, xi: &ProjectionExpr, eta: &ProjectionExpr) -> bool {
        match self {
            Verdict::Unknown => true,
            Verdict::Yes { rule: Rule::R1, certificate: Certificate::Dominance { pairs } } => {
                pairs.iter().all(|(s, a, b)| xi.coeff(s) == *a && eta.coeff(s) == *b && a <= b)
                    && xi.terms().all(|(s, _)| pairs.iter().any(|(p, _, _)| p == s))
            }
            Verdict::No { rule: Rule::R3, certificate: Certificate::RankExcess { rank_xi, rank_eta } } => {
                *rank_xi == xi.rank() && *rank_eta == eta.rank() && rank_xi > rank_eta
            }
            Verdict::No { rule: Rule::R4, certificate: Certificate::EulerObstruction { family, hall, .. } } => {
                xi.trivial_count() >= 1
                    && eta.family().map(|f| f == *family).unwrap_or(false)
                    && hall.feasible
                    && hall.recheck(family)
            }
            Verdict::Yes {
                rule: Rule::R2,
                certificate: Certificate::RankMargin { rank_xi, rank_eta, margin, rule },
            } => {
                *rank_xi == xi.rank()
                    && *rank_eta == eta.rank()
                    && *margin == rule.margin(xi, eta)
                    && rank_eta >= rank_xi
                    && rank_eta - rank_xi >= *margin as u128
            }
            _ => false,
        }
    }
}

/// Comparison oracle with a configurable R2 margin.
#[derive(Debug, Clone, Copy, Default)]
pub struct BundleOracle {
    pub margin: MarginRule,
}

impl BundleOracle {
    pub fn new(margin: MarginRule) -> Self {
        BundleOracle { margin }
    }

    pub fn compare(&self, xi: &ProjectionExpr, eta: &ProjectionExpr) -> Result<Verdict> {
        if xi.dim() != eta.dim() {
            return Err(Error::DimensionMismatch(xi.dim(), eta.dim()));
        }
        if let Some(v) = self.r1(xi, eta) {
            return Ok(v);
        }
        let (rank_xi, rank_eta) = (xi.rank(), eta.rank());
        if rank_xi > rank_eta {
            return Ok(Verdict::No { rule: Rule::R3, certificate: Certificate::RankExcess { rank_xi, rank_eta } });
        }
        if let Some(v) = self.r4(xi, eta)? {
            return Ok(v);
        }
        let margin = self.margin.margin(xi, eta);
        if rank_eta - rank_xi >= margin as u128 {
            return Ok(Verdict::Yes {
                rule: Rule::R2,
                certificate: Certificate::RankMargin { rank_xi, rank_eta, margin, rule: self.margin },
            });
        }
        Ok(Verdict::Unknown)
    }

    fn r1(&self, xi: &ProjectionExpr, eta: &ProjectionExpr) -> Option<Verdict> {
        let pairs: Vec<(Vec<usize>, u64, u64)> = xi.terms().map(|(s, c)| (s.to_vec(), c, eta.coeff(s))).collect();
        pairs
            .iter()
            .all(|(_, a, b)| a <= b)
            .then_some(Verdict::Yes { rule: Rule::R1, certificate: Certificate::Dominance { pairs } })
    }

    fn r4(&self, xi: &ProjectionExpr, eta: &ProjectionExpr) -> Result<Option<Verdict>> {
        if xi.trivial_count() == 0 {
            return Ok(None);
        }
        let family = eta.family()?;
        let hall = hall_check(&family)?;
        if !hall.feasible {
            return Ok(None);
        }
        let euler = euler_of_family_guarded(&family, EULER_DISPLAY_TERMS).ok().map(|p| p.to_string());
        Ok(Some(Verdict::No { rule: Rule::R4, certificate: Certificate::EulerObstruction { family, hall, euler } }))
    }
}

/// [`BundleOracle::compare`] with the default margin.
pub fn compare(xi: &ProjectionExpr, eta: &ProjectionExpr) -> Result<Verdict> {
    BundleOracle::default().compare(xi, eta)
}
