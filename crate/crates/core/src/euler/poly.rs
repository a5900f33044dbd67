//! Integer polynomials in the exterior-like quotient `Z[z_1..z_d]/(z_1², …, z_d²)`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Largest supported number of variables (monomials are 128-bit masks).
pub const MAX_DIM: usize = 128;

/// Squarefree monomial as a bit mask; bit `i − 1` stands for `z_i`.
pub type Monomial = u128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearPoly {
    dim: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

fn check_dim(d: usize) -> Result<()> {
    if d > MAX_DIM {
        return Err(Error::TooLarge(format!("{d} variables exceed the {MAX_DIM}-variable limit")));
    }
    Ok(())
}

/// Mask of a 1-based index set; errors on indices outside `1..=d`.
pub fn mask_of(set: &[usize], d: usize) -> Result<Monomial> {
    check_dim(d)?;
    let mut mask = 0;
    for &i in set {
        if i == 0 || i > d {
            return Err(Error::OutOfRange(format!("index {i} outside 1..={d}")));
        }
        mask |= 1u128 << (i - 1);
    }
    Ok(mask)
}

impl MultilinearPoly {
    pub fn zero(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(MultilinearPoly { dim, terms: BTreeMap::new() })
    }

    pub fn one(dim: usize) -> Result<Self> {
        Self::monomial(dim, 0, BigInt::one())
    }

    pub fn monomial(dim: usize, mono: Monomial, coeff: BigInt) -> Result<Self> {
        let mut p = Self::zero(dim)?;
        if dim < MAX_DIM && mono >> dim != 0 {
            return Err(Error::OutOfRange(format!("monomial {mono:#b} outside {dim} variables")));
        }
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: Monomial) -> BigInt {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    /// Terms in increasing mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Highest total degree of a nonzero term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.count_ones()).max()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(*m).or_insert_with(BigInt::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Ok(MultilinearPoly { dim: self.dim, terms })
    }

    /// Product with `z_i² = 0`; errors once the result would exceed `max_terms`.
    pub fn mul_guarded(&self, other: &Self, max_terms: usize) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a & b != 0 {
                    continue;
                }
                *terms.entry(a | b).or_insert_with(BigInt::zero) += ca * cb;
                if terms.len() > max_terms {
                    return Err(Error::TermGuard { terms: terms.len(), budget: max_terms });
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(MultilinearPoly { dim: self.dim, terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_guarded(other, crate::Budget::from_env().terms)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !k.is_zero() {
            for (m, c) in &self.terms {
                terms.insert(*m, c * k);
            }
        }
        MultilinearPoly { dim: self.dim, terms }
    }
}

/// `Σ_{i∈I} z_i`, and `1` for the empty set.
pub fn linear_form(set: &[usize], d: usize) -> Result<MultilinearPoly> {
    let mask = mask_of(set, d)?;
    if mask == 0 {
        return MultilinearPoly::one(d);
    }
    let mut p = MultilinearPoly::zero(d)?;
    for i in 0..d {
        if mask >> i & 1 == 1 {
            p.terms.insert(1u128 << i, BigInt::one());
        }
    }
    Ok(p)
}

/// `(Σ_{i∈I} z_i)^c = c! · Σ_{S⊆I, |S|=c} z_S` in the quotient ring.
pub fn linear_form_power(set: &[usize], d: usize, c: u64, max_terms: usize) -> Result<MultilinearPoly> {
    let mask = mask_of(set, d)?;
    if c == 0 {
        return MultilinearPoly::one(d);
    }
    let idx: Vec<u32> = (0..d as u32).filter(|i| mask >> i & 1 == 1).collect();
    if c as usize > idx.len() {
        return MultilinearPoly::zero(d);
    }
    let c = c as usize;
    let count = binomial(idx.len(), c);
    if count > max_terms as u128 {
        return Err(Error::TermGuard { terms: count.min(usize::MAX as u128) as usize, budget: max_terms });
    }
    let fact: BigInt = (1..=c as u64).map(BigInt::from).product();
    let mut p = MultilinearPoly::zero(d)?;
    // enumerate c-subsets of idx in lexicographic order
    let mut pick: Vec<usize> = (0..c).collect();
    loop {
        let m = pick.iter().fold(0u128, |acc, &p| acc | 1u128 << idx[p]);
        p.terms.insert(m, fact.clone());
        let Some(pos) = (0..c).rev().find(|&i| pick[i] < idx.len() - c + i) else { break };
        pick[pos] += 1;
        for j in pos + 1..c {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(p)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // graded order: by degree, then lexicographically by index set
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by_key(|m| (m.count_ones(), (0..128u32).filter(|i| *m >> i & 1 == 1).collect::<Vec<_>>()));
        for m in keys {
            let c = &self.terms[m];
            if !first {
                f.write_str(if c.sign() == num_bigint::Sign::Minus { " - " } else { " + " })?;
            } else if c.sign() == num_bigint::Sign::Minus {
                f.write_str("-")?;
            }
            first = false;
            let a = c.magnitude();
            let vars: Vec<String> = (0..self.dim).filter(|i| m >> i & 1 == 1).map(|i| format!("z{}", i + 1)).collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&vars.join(""))?;
            } else {
                write!(f, "{a}·{}", vars.join(""))?;
            }
        }
        Ok(())
    }
}
