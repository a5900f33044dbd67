//! Stage data of the staged line-bundle constructions and end-to-end
//! verifiers for their divisibility bounds.

mod construction;
mod verify;

pub use construction::{
    build, inf_tensor_size, s_enum, ConstructionSpec, PairOrder, Variant, GROUND_GUARD, MEMBER_GUARD,
};
pub use verify::{
    inf_tensor_family, nonzero_tuples, verify_lm_simple2, verify_thm_inf_tensor, verify_thm_simple,
    CertifiedInterval, InfTensorOutcome, Simple2Outcome,
};
