use super::DivValue;
use crate::error::{Error, Result};
use crate::model::ExtNat;

/// Closed form of `Div_m` for the unit `k` of the extended naturals:
/// `⌈k / ⌊k/m⌋⌉` when `m ≤ k`, `∞` otherwise. The same value is taken by the
/// decomposition and weak divisibility numbers.
pub fn matrix_div(m: u64, k: u64) -> Result<DivValue> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameter("m and k must be at least 1".into()));
    }
    if m > k {
        return Ok(DivValue::Infinite);
    }
    Ok(DivValue::Finite(k.div_ceil(k / m)))
}

/// The bi-additive pairing of extended naturals with units `scale_a` and
/// `scale_b` into the extended naturals with unit `scale_a·scale_b`:
/// `x ⊗ y = x·y`, `∞` absorbing except against `0`.
pub fn ext_tensor_pair(x: ExtNat, scale_a: u64, y: ExtNat, scale_b: u64) -> (ExtNat, u64) {
    (x.mul(y), scale_a.saturating_mul(scale_b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(matrix_div(2, 4).unwrap(), DivValue::Finite(2));
        assert_eq!(matrix_div(3, 2).unwrap(), DivValue::Infinite);
        assert_eq!(matrix_div(3, 7).unwrap(), DivValue::Finite(4));
        assert!(matrix_div(0, 3).is_err());
    }

    #[test]
    fn divisor_and_large_scale_rules() {
        for k in 1..=40u64 {
            for m in 1..=k {
                let v = matrix_div(m, k).unwrap().finite().unwrap();
                assert_eq!(v == m, k % m == 0, "m={m} k={k}");
                if k % m != 0 && m * (m - 1) <= k {
                    assert_eq!(v, m + 1, "m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn pairing() {
        assert_eq!(ext_tensor_pair(ExtNat::Fin(2), 3, ExtNat::Fin(4), 5), (ExtNat::Fin(8), 15));
        assert_eq!(ext_tensor_pair(ExtNat::Inf, 2, ExtNat::Fin(1), 7).0, ExtNat::Inf);
        assert_eq!(ext_tensor_pair(ExtNat::Inf, 2, ExtNat::Fin(0), 7).0, ExtNat::Fin(0));
    }
}
