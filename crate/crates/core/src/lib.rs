//! Exact divisibility computations on finite ordered-monoid models of Cuntz
//! semigroups, Euler-class and Hall-transversal oracles, and certified bounds
//! for Villadsen-type constructions.

pub mod budget;
pub mod bundle;
pub mod error;
pub mod euler;
pub mod divisibility;
pub mod model;
pub mod suite;
pub mod villadsen;

pub use budget::Budget;
pub use error::{Error, Result};
