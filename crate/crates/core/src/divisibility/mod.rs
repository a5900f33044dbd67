//! Least-`n` solvers for the divisibility numbers `Div_m`, `∂iv_m`, `div_m`
//! and the covering number, with re-checkable witnesses.
//!
//! With every element compact, `u` is `(m,n)`-divisible when some `x` has
//! `m·x ≤ u ≤ n·x`; `(m,n)`-decomposable when `x_1 + ⋯ + x_m ≤ u ≤ n·x_j` for
//! all `j`; weakly `(m,n)`-divisible when `m·x_j ≤ u ≤ x_1 + ⋯ + x_n`; and
//! covered by `n` elements when `x_i ≤ u ≤ x_1 + ⋯ + x_n` with each
//! `x_i = Σ_j m_ij·y_ij`, `m ≤ m_ij < 2m`.

mod asymptotic;
mod combine;
mod lemmas;
mod matrix;
mod omega;
mod search;

pub use asymptotic::{div_star_estimate, DivStarEstimate, Estimate};
pub use combine::{combine_chain, combine_product};
pub use lemmas::two_divisibility_witness;
pub use matrix::{ext_tensor_pair, matrix_div};
pub use omega::{cfp4s_check, omega_check, CfpReport, OmegaOutcome};

use crate::budget::{Budget, Meter, DEFAULT_CUTOFF};
use crate::error::{Error, Result};
use crate::model::CuModel;
use search::{least_multiple_above, reachable_sums, smallest_multiset};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub const TAG_RANK: &str = "rank obstruction: m > rank";
pub const TAG_EXHAUSTED: &str = "exhausted finite carrier";
pub const TAG_PARTIAL: &str = "least over the enumerated carrier";
pub const TAG_PROPINF: &str = "minimal: n < m would make n·u properly infinite";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DivKind {
    Div,
    Decomp,
    WeakDiv,
    Cov,
}

impl DivKind {
    pub const ALL: [DivKind; 4] = [DivKind::Div, DivKind::Decomp, DivKind::WeakDiv, DivKind::Cov];
}

impl fmt::Display for DivKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivKind::Div => "Div",
            DivKind::Decomp => "Decomp",
            DivKind::WeakDiv => "WeakDiv",
            DivKind::Cov => "Cov",
        })
    }
}

impl std::str::FromStr for DivKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "div" => Ok(DivKind::Div),
            "decomp" => Ok(DivKind::Decomp),
            "weakdiv" | "weak-div" => Ok(DivKind::WeakDiv),
            "cov" => Ok(DivKind::Cov),
            _ => Err(Error::InvalidParameter(format!("unknown kind {s:?}"))),
        }
    }
}

/// A least-`n` value. `AtLeast(c)` means the search up to `c − 1` failed
/// without an impossibility proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DivValue {
    Finite(u64),
    AtLeast(u64),
    Infinite,
}

impl DivValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            DivValue::Finite(n) => Some(n),
            _ => None,
        }
    }

    /// `self ≤ other` when both are known well enough to decide it.
    pub fn known_le(self, other: DivValue) -> Option<bool> {
        use DivValue::*;
        match (self, other) {
            (_, Infinite) => Some(true),
            (Infinite, Finite(_)) => Some(false),
            (Finite(a), Finite(b)) => Some(a <= b),
            (Finite(a), AtLeast(b)) if a < b => Some(true),
            (AtLeast(a), Finite(b)) if a > b => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for DivValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivValue::Finite(n) => write!(f, "{n}"),
            DivValue::AtLeast(n) => write!(f, "≥ {n}"),
            DivValue::Infinite => f.write_str("∞"),
        }
    }
}

impl Serialize for DivValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DivValue::Finite(n) => s.serialize_u64(*n),
            DivValue::AtLeast(n) => s.serialize_str(&format!(">={n}")),
            DivValue::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DivValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(DivValue::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(DivValue::Infinite),
            Raw::S(s) => s
                .strip_prefix(">=")
                .and_then(|t| t.parse().ok())
                .map(DivValue::AtLeast)
                .ok_or_else(|| serde::de::Error::custom(format!("bad value {s:?}"))),
        }
    }
}

/// Witness tuple; `parts` lists `(m_ij, y_ij)` for each covering element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness<E> {
    pub elements: Vec<E>,
    #[serde(default = "Vec::new", skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Vec<(u64, E)>>,
}

impl<E> Witness<E> {
    fn plain(elements: Vec<E>) -> Self {
        Witness { elements, parts: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport<E> {
    pub kind: DivKind,
    pub m: u64,
    pub value: DivValue,
    pub witness: Option<Witness<E>>,
    pub cutoff: u64,
    pub proof_tag: Option<String>,
}

impl<E: Clone> DivisibilityReport<E> {
    /// Re-verifies the witness of a finite value against the defining inequalities.
    pub fn recheck<M: CuModel<Elem = E>>(&self, model: &M, u: &E) -> bool {
        match (self.value, &self.witness) {
            (DivValue::Finite(n), Some(w)) => verify(model, u, self.kind, self.m, n, w),
            (DivValue::Finite(_), None) => false,
            (DivValue::Infinite, _) => self.proof_tag.is_some(),
            (DivValue::AtLeast(_), _) => true,
        }
    }
}

/// Solver settings.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub cutoff: u64,
    pub budget: Budget,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { cutoff: DEFAULT_CUTOFF, budget: Budget::from_env() }
    }
}

impl SearchConfig {
    pub fn with_cutoff(cutoff: u64) -> Self {
        SearchConfig { cutoff, ..Default::default() }
    }
}

/// Checks the defining inequalities of `kind` for the given witness.
pub fn verify<M: CuModel>(model: &M, u: &M::Elem, kind: DivKind, m: u64, n: u64, w: &Witness<M::Elem>) -> bool {
    let xs = &w.elements;
    let sum = |xs: &[M::Elem]| xs.iter().fold(model.zero(), |a, x| model.add(&a, x));
    match kind {
        DivKind::Div => {
            xs.len() == 1 && model.leq(&model.multiple(&xs[0], m), u) && model.leq(u, &model.multiple(&xs[0], n))
        }
        DivKind::Decomp => {
            xs.len() as u64 == m
                && model.leq(&sum(xs), u)
                && xs.iter().all(|x| model.leq(u, &model.multiple(x, n)))
        }
        DivKind::WeakDiv => {
            xs.len() as u64 == n
                && xs.iter().all(|x| model.leq(&model.multiple(x, m), u))
                && model.leq(u, &sum(xs))
        }
        DivKind::Cov => {
            xs.len() as u64 == n
                && w.parts.len() == xs.len()
                && xs.iter().zip(&w.parts).all(|(x, parts)| {
                    let total = parts.iter().fold(model.zero(), |a, (k, y)| model.add(&a, &model.multiple(y, *k)));
                    parts.iter().all(|(k, _)| m <= *k && *k < 2 * m) && total == *x && model.leq(x, u)
                })
                && model.leq(u, &sum(xs))
        }
    }
}

fn validate<M: CuModel>(model: &M, u: &M::Elem, m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if !model.contains(u) {
        return Err(Error::OutOfRange(model.label(u)));
    }
    Ok(())
}

/// Elements `x ≤ u` with `m·x ≤ u`, in canonical order.
fn small_candidates<M: CuModel>(model: &M, u: &M::Elem, m: u64) -> Result<(Vec<M::Elem>, bool)> {
    let below = model.below(u)?;
    let c = below.elements.into_iter().filter(|x| model.leq(&model.multiple(x, m), u)).collect();
    Ok((c, below.exhaustive))
}

/// Elements of the form `Σ_j m_j·y_j ≤ u` with `m ≤ m_j < 2m`, including `0`,
/// each with the first decomposition found.
fn covering_candidates<M: CuModel>(
    model: &M,
    u: &M::Elem,
    m: u64,
    meter: &mut Meter,
) -> Result<(BTreeMap<M::Elem, Vec<(u64, M::Elem)>>, bool)> {
    let below = model.below(u)?;
    let mut gens: Vec<(u64, M::Elem, M::Elem)> = Vec::new();
    for y in &below.elements {
        for k in m..2 * m {
            let ky = model.multiple(y, k);
            if model.leq(&ky, u) {
                gens.push((k, y.clone(), ky));
            }
        }
    }
    let mut closure: BTreeMap<M::Elem, Vec<(u64, M::Elem)>> = BTreeMap::new();
    closure.insert(model.zero(), Vec::new());
    let mut frontier: Vec<M::Elem> = vec![model.zero()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for (k, y, ky) in &gens {
                meter.tick()?;
                let t = model.add(s, ky);
                if model.leq(&t, u) && !closure.contains_key(&t) {
                    let mut parts = closure[s].clone();
                    parts.push((*k, y.clone()));
                    closure.insert(t.clone(), parts);
                    next.push(t);
                }
            }
        }
        next.sort();
        frontier = next;
    }
    Ok((closure, below.exhaustive))
}

/// Decides whether `u` satisfies `kind` with parameters `(m, n)`; returns the
/// canonically smallest witness when it does.
pub fn check<M: CuModel>(model: &M, u: &M::Elem, kind: DivKind, m: u64, n: u64) -> Result<Option<Witness<M::Elem>>> {
    check_with(model, u, kind, m, n, &Budget::from_env())
}

pub fn check_with<M: CuModel>(
    model: &M,
    u: &M::Elem,
    kind: DivKind,
    m: u64,
    n: u64,
    budget: &Budget,
) -> Result<Option<Witness<M::Elem>>> {
    validate(model, u, m)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let mut meter = Meter::new(budget.search_nodes, "divisibility witness search");
    let leq_u = |s: &M::Elem| model.leq(s, u);
    let geq_u = |s: &M::Elem| model.leq(u, s);
    let always = |_: &M::Elem| true;
    match kind {
        DivKind::Div => {
            let (c, _) = small_candidates(model, u, m)?;
            Ok(c.into_iter().find(|x| model.leq(u, &model.multiple(x, n))).map(|x| Witness::plain(vec![x])))
        }
        DivKind::Decomp => {
            let below = model.below(u)?;
            let c: Vec<_> = below.elements.into_iter().filter(|x| model.leq(u, &model.multiple(x, n))).collect();
            Ok(smallest_multiset(model, &c, m as usize, &leq_u, &always, &mut meter)?.map(Witness::plain))
        }
        DivKind::WeakDiv => {
            let (c, _) = small_candidates(model, u, m)?;
            Ok(smallest_multiset(model, &c, n as usize, &always, &geq_u, &mut meter)?.map(Witness::plain))
        }
        DivKind::Cov => {
            let (closure, _) = covering_candidates(model, u, m, &mut meter)?;
            let c: Vec<_> = closure.keys().cloned().collect();
            Ok(smallest_multiset(model, &c, n as usize, &always, &geq_u, &mut meter)?.map(|xs| Witness {
                parts: xs.iter().map(|x| closure[x].clone()).collect(),
                elements: xs,
            }))
        }
    }
}

/// Least `n ≤ cutoff` for which `u` satisfies `kind` with parameter `m`.
pub fn least<M: CuModel>(model: &M, u: &M::Elem, kind: DivKind, m: u64, cutoff: u64) -> Result<DivisibilityReport<M::Elem>> {
    least_with(model, u, kind, m, &SearchConfig::with_cutoff(cutoff))
}

pub fn least_with<M: CuModel>(
    model: &M,
    u: &M::Elem,
    kind: DivKind,
    m: u64,
    cfg: &SearchConfig,
) -> Result<DivisibilityReport<M::Elem>> {
    validate(model, u, m)?;
    if cfg.cutoff == 0 {
        return Err(Error::InvalidParameter("cutoff must be at least 1".into()));
    }
    let report = |value, witness, proof_tag: Option<&str>| DivisibilityReport {
        kind,
        m,
        value,
        witness,
        cutoff: cfg.cutoff,
        proof_tag: proof_tag.map(String::from),
    };
    if let Some(r) = model.rank(u) {
        if r > 0 && m > r {
            return Ok(report(DivValue::Infinite, None, Some(TAG_RANK)));
        }
    }
    let mut meter = Meter::new(cfg.budget.search_nodes, "least-n search");
    let (found, exhaustive, impossible) = match kind {
        DivKind::Div => least_div(model, u, m, cfg.cutoff)?,
        DivKind::Decomp => least_decomp(model, u, m, cfg.cutoff, &mut meter)?,
        DivKind::WeakDiv => {
            let (c, ex) = small_candidates(model, u, m)?;
            least_by_sums(model, u, &c, ex, cfg.cutoff, &mut meter)?
        }
        DivKind::Cov => {
            let (closure, ex) = covering_candidates(model, u, m, &mut meter)?;
            let c: Vec<_> = closure.keys().cloned().collect();
            let (found, ex, imp) = least_by_sums(model, u, &c, ex, cfg.cutoff, &mut meter)?;
            let found = found.map(|(n, w)| {
                let parts = w.elements.iter().map(|x| closure[x].clone()).collect();
                (n, Witness { parts, ..w })
            });
            (found, ex, imp)
        }
    };
    Ok(match found {
        Some((n, w)) => {
            let tag = if exhaustive || n == 1 {
                None
            } else if kind != DivKind::Cov
                && n == m
                && (1..m).all(|k| {
                    let ku = model.multiple(u, k);
                    !model.leq(&model.add(&ku, &ku), &ku)
                })
            {
                Some(TAG_PROPINF)
            } else {
                Some(TAG_PARTIAL)
            };
            report(DivValue::Finite(n), Some(w), tag)
        }
        None if exhaustive && impossible => report(DivValue::Infinite, None, Some(TAG_EXHAUSTED)),
        None => report(DivValue::AtLeast(cfg.cutoff + 1), None, None),
    })
}

type Found<E> = (Option<(u64, Witness<E>)>, bool, bool);

fn least_div<M: CuModel>(model: &M, u: &M::Elem, m: u64, cutoff: u64) -> Result<Found<M::Elem>> {
    let (c, exhaustive) = small_candidates(model, u, m)?;
    let mut best: Option<(u64, M::Elem)> = None;
    let mut all_never = true;
    for x in c {
        let (n, never) = least_multiple_above(model, &x, u, cutoff);
        all_never &= never;
        if let Some(n) = n {
            if best.as_ref().is_none_or(|(b, _)| n < *b) {
                best = Some((n, x));
            }
        }
    }
    Ok((best.map(|(n, x)| (n, Witness::plain(vec![x]))), exhaustive, all_never))
}

fn least_decomp<M: CuModel>(
    model: &M,
    u: &M::Elem,
    m: u64,
    cutoff: u64,
    meter: &mut Meter,
) -> Result<Found<M::Elem>> {
    let below = model.below(u)?;
    // threshold n_x for each candidate
    let mut graded: Vec<(u64, M::Elem)> = Vec::new();
    let mut all_known = true;
    for x in below.elements {
        match least_multiple_above(model, &x, u, cutoff) {
            (Some(n), _) => graded.push((n, x)),
            (None, never) => all_known &= never,
        }
    }
    let thresholds: BTreeSet<u64> = graded.iter().map(|(n, _)| *n).collect();
    let leq_u = |s: &M::Elem| model.leq(s, u);
    let always = |_: &M::Elem| true;
    for t in thresholds {
        let mut c: Vec<M::Elem> = graded.iter().filter(|(n, _)| *n <= t).map(|(_, x)| x.clone()).collect();
        c.sort();
        if let Some(xs) = smallest_multiset(model, &c, m as usize, &leq_u, &always, meter)? {
            return Ok((Some((t, Witness::plain(xs))), below.exhaustive, false));
        }
    }
    Ok((None, below.exhaustive, all_known))
}

/// Least `n` with an `n`-multiset of `cands` summing above `u`.
fn least_by_sums<M: CuModel>(
    model: &M,
    u: &M::Elem,
    cands: &[M::Elem],
    exhaustive: bool,
    cutoff: u64,
    meter: &mut Meter,
) -> Result<Found<M::Elem>> {
    let not_done = |s: &M::Elem| !model.leq(u, s);
    let geq_u = |s: &M::Elem| model.leq(u, s);
    let always = |_: &M::Elem| true;
    // sums that do not yet dominate u; 0 is a candidate whenever cands is
    // non-empty, so the sets only grow
    let mut open: BTreeSet<M::Elem> = BTreeSet::new();
    open.insert(model.zero());
    for n in 1..=cutoff {
        let hit = open.iter().any(|s| cands.iter().any(|c| model.leq(u, &model.add(s, c))));
        if hit {
            let w = smallest_multiset(model, cands, n as usize, &always, &geq_u, meter)?
                .expect("reachable sum has a witness");
            return Ok((Some((n, Witness::plain(w))), exhaustive, false));
        }
        let next = reachable_sums(model, &open, cands, &not_done, meter)?;
        if next == open || cands.is_empty() {
            return Ok((None, exhaustive, true));
        }
        open = next;
    }
    Ok((None, exhaustive, false))
}

/// The three divisibility numbers and the covering number of `u`.
pub fn analyze<M: CuModel>(model: &M, u: &M::Elem, m: u64, cfg: &SearchConfig) -> Result<Vec<DivisibilityReport<M::Elem>>> {
    DivKind::ALL.iter().map(|k| least_with(model, u, *k, m, cfg)).collect()
}

#[cfg(test)]
mod tests;
