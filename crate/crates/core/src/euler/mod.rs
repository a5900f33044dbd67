//! Euler classes of sums of line bundles over products of 2-spheres, and the
//! equivalent transversal problem.
//!
//! The class of the bundle pulled back along coordinates `I` is the linear
//! form `Σ_{i∈I} z_i` in `Z[z_1..z_d]/(z_i²)`, and the Euler class of a
//! direct sum is the product of the summands' classes. A product of linear
//! forms with `{0,1}` coefficients expands with non-negative coefficients,
//! and the coefficient of `z_S` counts the ways to pick distinct
//! representatives in `S` for the factors. Hence the product is nonzero
//! exactly when the multiset of index sets has a transversal.

mod family;
mod flow;
mod hall;
mod poly;

pub use family::{Member, SetFamily, MAX_MULTIPLICITY};
pub use flow::FlowNetwork;
pub use hall::{hall_check, sdr_bruteforce, HallCertificate, Violator};
pub use poly::{linear_form, linear_form_power, mask_of, Monomial, MultilinearPoly, MAX_DIM};

use crate::error::Result;

/// `∏ (Σ_{i∈I} z_i)^c` over the members, with `z_i² = 0`.
///
/// A member with `I = ∅` and `c ≥ 1` is a trivial line bundle summand, whose
/// Euler class is `0`; the result is then `0`. Products whose degree `Σ c`
/// exceeds `d` vanish and are short-circuited. Errors with
/// [`Error::TermGuard`](crate::Error::TermGuard) when an intermediate product
/// exceeds `max_terms` terms; [`hall_check`] decides the same question.
pub fn euler_of_family_guarded(f: &SetFamily, max_terms: usize) -> Result<MultilinearPoly> {
    let d = f.ground;
    let zero = MultilinearPoly::zero(d)?;
    if f.members.iter().any(|m| m.mult > 0 && m.set.is_empty()) || f.total() > d as u128 {
        return Ok(zero);
    }
    let mut acc = MultilinearPoly::one(d)?;
    for m in &f.members {
        let p = linear_form_power(&m.set, d, m.mult, max_terms)?;
        acc = acc.mul_guarded(&p, max_terms)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

pub fn euler_of_family(f: &SetFamily) -> Result<MultilinearPoly> {
    euler_of_family_guarded(f, crate::Budget::from_env().terms)
}
