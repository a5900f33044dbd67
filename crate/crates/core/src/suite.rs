//! Named invariant checks over the built-in models and constructions, run by
//! `cudiv verify-suite`. Each check is deterministic given the seed.

use crate::bundle::{compare, div_upper_bound, verify_omega_example, BundleOracle, ProjectionExpr, Rule, Verdict};
use crate::divisibility::{
    analyze, check, combine_chain, combine_product, div_star_estimate, least_with, matrix_div,
    two_divisibility_witness, DivKind, DivValue, Estimate, SearchConfig,
};
use crate::error::Result;
use crate::euler::{euler_of_family, hall_check, sdr_bruteforce, SetFamily};
use crate::model::{check_axioms, element_flags, zoo, CuModel, ExtNatModel, FiniteCuModel, RationalConeModel};
use crate::villadsen::{build, s_enum, verify_lm_simple2, verify_thm_inf_tensor, verify_thm_simple, PairOrder, Variant};
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub pass: bool,
    /// Number of instances examined.
    pub checked: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

type Check = fn(u64) -> Result<Outcome>;

#[derive(Default)]
pub struct Outcome {
    checked: u64,
    failure: Option<String>,
}

impl Outcome {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

pub const PROPERTIES: &[(&str, Check)] = &[
    ("axioms", axioms),
    ("matrix-formula", matrix_formula),
    ("inequality-chain", inequality_chain),
    ("cov-sandwich", cov_sandwich),
    ("proper-infiniteness", proper_infiniteness),
    ("euler-hall", euler_hall),
    ("combine-product", combine_products),
    ("combine-chain", combine_chains),
    ("two-divisibility", two_divisibility),
    ("omega-example", omega_example),
    ("simple-interval", simple_interval),
    ("simple2-lower-bound", simple2_lower_bound),
    ("inf-tensor", inf_tensor),
    ("div-star", div_star),
    ("pair-order", pair_order),
    ("compare-coherence", compare_coherence),
    ("simple1-saturation", simple1_saturation),
];

/// Runs every property whose name contains `filter`.
pub fn run_suite(filter: Option<&str>, seed: u64) -> Result<Vec<PropertyResult>> {
    PROPERTIES
        .iter()
        .filter(|(name, _)| filter.is_none_or(|f| name.contains(f)))
        .map(|(name, f)| {
            let o = f(seed)?;
            Ok(PropertyResult { name, pass: o.failure.is_none(), checked: o.checked, failure: o.failure })
        })
        .collect()
}

fn axioms(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for m in zoo::zoo() {
        let r = check_axioms(&m);
        o.expect(r.all_pass(), || format!("{}: {:?}", m.name(), r.flags.iter().find(|f| !f.pass)));
    }
    Ok(o)
}

fn matrix_formula(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let cfg = SearchConfig::default();
    for k in 2..=12 {
        let t = zoo::extnat(k, k);
        for m in 2..=k {
            let want = matrix_div(m, k)?;
            for kind in [DivKind::Div, DivKind::Decomp, DivKind::WeakDiv] {
                let got = least_with(&t, &t.unit(), kind, m, &cfg)?.value;
                o.expect(got == want, || format!("{kind}_{m}({k}) = {got}, formula {want}"));
            }
        }
    }
    Ok(o)
}

fn values(m: &FiniteCuModel, u: usize, k: u64) -> Result<[DivValue; 4]> {
    let r = analyze(m, &u, k, &SearchConfig::default())?;
    Ok([r[0].value, r[1].value, r[2].value, r[3].value])
}

fn le(a: DivValue, b: DivValue) -> bool {
    a.known_le(b).unwrap_or(true)
}

fn pow(v: DivValue, e: u32) -> DivValue {
    match v {
        DivValue::Finite(n) => n.checked_pow(e).map_or(DivValue::Infinite, DivValue::Finite),
        other => other,
    }
}

fn scaled(v: DivValue, c: u64) -> DivValue {
    match v {
        DivValue::Finite(n) => DivValue::Finite(n * c),
        other => other,
    }
}

/// `div ≤ Div`, `∂iv ≤ Div` and `div ≤ ∂iv^m` at every element.
fn inequality_chain(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for model in zoo::zoo() {
        for u in model.elements() {
            for m in [2u64, 3] {
                let [div_big, decomp, weak, _] = values(&model, u, m)?;
                o.expect(
                    le(weak, div_big) && le(decomp, div_big) && le(weak, pow(decomp, m as u32)),
                    || format!("{} at {}: Div {div_big}, ∂iv {decomp}, div {weak}", model.name(), model.label(&u)),
                );
            }
        }
    }
    Ok(o)
}

/// `cov ≤ div_m ≤ (2m − 1)·cov`.
fn cov_sandwich(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for model in zoo::zoo() {
        for u in model.elements() {
            for m in [2u64, 3] {
                let [_, _, weak, cov] = values(&model, u, m)?;
                if weak.finite().is_none() || cov.finite().is_none() {
                    continue;
                }
                o.expect(le(cov, weak) && le(weak, scaled(cov, 2 * m - 1)), || {
                    format!("{} at {}: div {weak}, cov {cov}", model.name(), model.label(&u))
                });
            }
        }
    }
    Ok(o)
}

/// `(m, n)`-divisibility of any of the three kinds with `n < m` makes `n·u`
/// properly infinite.
fn proper_infiniteness(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for model in zoo::zoo() {
        for u in model.elements() {
            for m in 2..=4u64 {
                for n in 1..m {
                    for kind in [DivKind::Div, DivKind::Decomp, DivKind::WeakDiv] {
                        if check(&model, &u, kind, m, n)?.is_some() {
                            let nu = model.multiple(&u, n);
                            let pi = element_flags(&model, &nu)?.properly_infinite;
                            o.expect(pi, || format!("{} at {}: {kind}({m},{n})", model.name(), model.label(&u)));
                        }
                    }
                }
            }
        }
    }
    Ok(o)
}

/// A random family on at most 12 points with total multiplicity at most 8.
pub fn random_family(rng: &mut impl Rng) -> SetFamily {
    let ground = rng.gen_range(1..=12usize);
    let count = rng.gen_range(1..=4usize);
    let mut budget = 8u64;
    let mut members = Vec::new();
    for _ in 0..count {
        if budget == 0 {
            break;
        }
        let set: Vec<usize> = (1..=ground).filter(|_| rng.gen_bool(0.35)).collect();
        let mult = rng.gen_range(1..=budget.min(3));
        budget -= mult;
        members.push((set, mult));
    }
    SetFamily::new(ground, members).expect("valid random family")
}

fn euler_hall(seed: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..2000 {
        let f = random_family(&mut rng);
        let hall = hall_check(&f)?;
        let brute = sdr_bruteforce(&f)?;
        let euler = !euler_of_family(&f)?.is_zero();
        o.expect(hall.feasible == brute && brute == euler && hall.recheck(&f), || f.to_json());
    }
    Ok(o)
}

fn combine_products(seed: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SearchConfig::default();
    for _ in 0..20 {
        let (k, l) = (rng.gen_range(1..=6u64), rng.gen_range(1..=6u64));
        let a = zoo::extnat(k, k + 2).with_unit(rng.gen_range(0..(k as usize + 3)))?;
        let b = zoo::extnat(l, l + 2).with_unit(rng.gen_range(0..(l as usize + 3)))?;
        let p = zoo::product(&a, &b)?;
        for m in [2u64, 3] {
            for kind in [DivKind::Div, DivKind::Decomp, DivKind::WeakDiv] {
                let ra = least_with(&a, &a.unit(), kind, m, &cfg)?;
                let rb = least_with(&b, &b.unit(), kind, m, &cfg)?;
                let combined = combine_product::<usize, usize>(&[ra, rb])?;
                let direct = least_with(&p, &p.unit(), kind, m, &cfg)?;
                o.expect(combined.value == direct.value, || {
                    format!("{} {kind}_{m}: combined {}, direct {}", p.name(), combined.value, direct.value)
                });
            }
        }
    }
    Ok(o)
}

fn combine_chains(seed: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SearchConfig::default();
    for _ in 0..20 {
        let m = rng.gen_range(2..=4u64);
        let len = rng.gen_range(1..=5usize);
        // ExtNat(k) with k growing: Div_m decreases towards its limit
        let start = rng.gen_range(m..=m + 4);
        let mut reports = Vec::new();
        for k in start..start + len as u64 {
            let t = zoo::extnat(k, k);
            reports.push(least_with(&t, &t.unit(), DivKind::Div, m, &cfg)?);
        }
        let want = reports.iter().filter_map(|r| r.value.finite()).min();
        let got = combine_chain(&reports)?;
        o.expect(got.value.finite() == want, || format!("chain from {start}, m={m}"));
        let constant = vec![reports[0].clone(); len];
        o.expect(combine_chain(&constant)?.value == reports[0].value, || "constant chain".into());
    }
    Ok(o)
}

fn two_divisibility(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let cfg = SearchConfig::default();
    for model in zoo::zoo().into_iter().filter(|m| m.size() <= 36) {
        let els = model.elements();
        let div2: Vec<DivValue> =
            els.iter().map(|w| least_with(&model, w, DivKind::Div, 2, &cfg).map(|r| r.value)).collect::<Result<_>>()?;
        for u in &els {
            for v in &els {
                let w = model.add(u, v);
                let Some(n) = div2[w].finite().filter(|&n| n <= 4) else { continue };
                let found = two_divisibility_witness(&model, u, v, n)?.is_some();
                o.expect(found, || format!("{} at ({}, {})", model.name(), model.label(u), model.label(v)));
            }
        }
    }
    Ok(o)
}

fn omega_example(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for d in 0..=6 {
        let r = verify_omega_example(d)?;
        o.expect(r.pass, || format!("d = {d}"));
    }
    Ok(o)
}

fn simple_interval(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for big_n in 1..=5 {
        let q2 = build(Variant::Simple1, big_n, 2)?.q_n;
        for n in 2..=4 {
            let r = verify_thm_simple(big_n, n)?;
            o.expect(r.lower == big_n && r.upper == 3 * big_n + 4 && r.recheck(&q2), || {
                format!("N={big_n}, n={n}: {r}")
            });
        }
    }
    Ok(o)
}

fn simple2_lower_bound(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (k, n) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        o.expect(verify_lm_simple2(k, n)?.holds(), || format!("k={k}, n={n}"));
    }
    Ok(o)
}

fn inf_tensor(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for big_n in 1..=3 {
        for m in 1..=2 {
            for n in 1..=2 {
                let r = verify_thm_inf_tensor(big_n, m, n)?;
                o.expect(r.holds && r.certificate.recheck(&r.family), || format!("N={big_n}, m={m}, n={n}"));
            }
        }
    }
    Ok(o)
}

fn div_star(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let cfg = SearchConfig::default();
    let q = RationalConeModel::new(Rational64::from_integer(1), 12)?;
    let e = div_star_estimate(&q, 12, &cfg)?;
    for (m, v) in &e.samples {
        o.expect(*v == DivValue::Finite(*m), || format!("rational cone Div_{m} = {v}"));
    }
    o.expect(e.upper == Estimate::Value(Rational64::from_integer(1)), || format!("upper {}", e.upper));
    for k in 1..=6 {
        let e = div_star_estimate(&ExtNatModel::new(k)?, 12, &cfg)?;
        o.expect(e.lower == Estimate::Infinite, || format!("ExtNat({k}) lower {}", e.lower));
    }
    Ok(o)
}

fn pair_order(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let grid: Vec<PairOrder> = (1..=10).flat_map(|k| (0..=10).map(move |j| PairOrder { k, j })).collect();
    for a in &grid {
        o.expect(a.partial_cmp(a) == Some(std::cmp::Ordering::Equal), || format!("{a:?}"));
        for b in &grid {
            o.expect((a < b) as u8 + (b < a) as u8 + (a == b) as u8 == 1, || format!("{a:?} vs {b:?}"));
        }
    }
    for k in 1..=4 {
        for j in 0..=4 {
            for m in k..=8 {
                let len = s_enum(m, k, j).len();
                o.expect(m == k || m < k + j || len == 0, || format!("S({m};{k},{j}) has {len} tuples"));
            }
        }
    }
    Ok(o)
}

/// All sums over `d` factors with rank at most `max_rank`.
pub fn small_exprs(d: usize, max_rank: u64) -> Vec<ProjectionExpr> {
    let sets: Vec<Vec<usize>> =
        (0u32..1 << d).map(|mask| (1..=d).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; sets.len()];
    fn rec(
        pos: usize,
        left: u64,
        d: usize,
        sets: &[Vec<usize>],
        coeffs: &mut Vec<u64>,
        out: &mut Vec<ProjectionExpr>,
    ) {
        if pos == sets.len() {
            let terms = sets.iter().cloned().zip(coeffs.iter().copied());
            out.push(ProjectionExpr::new(d, terms).expect("valid"));
            return;
        }
        for c in 0..=left {
            coeffs[pos] = c;
            rec(pos + 1, left - c, d, sets, coeffs, out);
        }
        coeffs[pos] = 0;
    }
    rec(0, max_rank, d, &sets, &mut coeffs, &mut out);
    out
}

/// No pair admits both a Yes rule and a No rule; Yes verdicts never lower rank;
/// R1 is transitive; R4 transversals match nonzero Euler classes.
fn compare_coherence(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    for d in 0..=2 {
        let exprs = small_exprs(d, 4);
        for xi in &exprs {
            for eta in &exprs {
                let dominated = xi.terms().all(|(s, c)| c <= eta.coeff(s));
                let stable = eta.rank() >= xi.rank() + BundleOracle::default().margin.margin(xi, eta) as u128;
                let excess = xi.rank() > eta.rank();
                let hall = hall_check(&eta.family()?)?.feasible;
                let obstructed = xi.trivial_count() > 0 && hall;
                o.expect(!((dominated || stable) && (excess || obstructed)), || format!("{xi} vs {eta}"));
                let v = compare(xi, eta)?;
                if v.is_yes() {
                    o.expect(xi.rank() <= eta.rank(), || format!("rank along {xi} ≲ {eta}"));
                }
                if v.rule() == Some(Rule::R4) {
                    let nonzero = !euler_of_family(&eta.family()?)?.is_zero();
                    o.expect(nonzero && v.recheck(xi, eta), || format!("R4 on {xi} vs {eta}"));
                }
            }
        }
        let r1 = |a: &ProjectionExpr, b: &ProjectionExpr| {
            matches!(compare(a, b), Ok(Verdict::Yes { rule: Rule::R1, .. }))
        };
        let sample: Vec<&ProjectionExpr> = exprs.iter().step_by(3).collect();
        for a in &sample {
            for b in &sample {
                if !r1(a, b) {
                    continue;
                }
                for c in &sample {
                    if r1(b, c) {
                        o.expect(r1(a, c), || format!("{a} ≲ {b} ≲ {c}"));
                    }
                }
            }
        }
    }
    Ok(o)
}

/// The defining family `{(J_j, N·2^{j−1})}` of the first construction is
/// matched with zero slack: every member uses its whole block.
fn simple1_saturation(_: u64) -> Result<Outcome> {
    let mut o = Outcome::default();
    let oracle = BundleOracle::default();
    for big_n in 1..=5 {
        for n in 1..=5 {
            let s = build(Variant::Simple1, big_n, n)?;
            let f = s.nontrivial_part().family()?.scaled(big_n)?;
            let h = hall_check(&f)?;
            let tight = f.members.iter().all(|m| m.set.len() as u64 == m.mult);
            o.expect(h.feasible && tight && f.total() == s.d_n as u128, || format!("N={big_n}, n={n}"));
            if n >= 2 {
                let b = div_upper_bound(&s.q_n, 1 << (n - 1), &oracle)?;
                o.expect(b.recheck(&s.q_n) && b.n == (1u64 << n) + s.d_n as u64, || {
                    format!("upper at N={big_n}, n={n}: {}", b.n)
                });
            }
        }
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_properties_pass() {
        for name in ["omega-example", "simple-interval", "pair-order", "simple1-saturation", "simple2"] {
            for r in run_suite(Some(name), 7).unwrap() {
                assert!(r.pass, "{}: {:?}", r.name, r.failure);
                assert!(r.checked > 0);
            }
        }
    }

    #[test]
    fn small_exprs_counts() {
        // compositions of at most 4 into 2 parts: C(6, 2)
        assert_eq!(small_exprs(1, 4).len(), 15);
        assert_eq!(small_exprs(0, 4).len(), 5);
    }
}
