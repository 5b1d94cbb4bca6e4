use crate::error::{Error, Result};

/// Work budgets for exhaustive computations.
///
/// `enumeration` bounds codeword, subspace, and column-subset enumerations;
/// `dense` bounds the dimension `q^n` of state vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u64,
    pub dense: u64,
}

impl Limits {
    pub const DEFAULT_ENUMERATION: u64 = 1 << 24;
    pub const DEFAULT_DENSE: u64 = 1 << 20;

    pub(crate) fn check_enumeration(&self, what: &'static str, required: u128) -> Result<()> {
        if required > self.enumeration as u128 {
            return Err(Error::CapExceeded {
                what,
                required,
                cap: self.enumeration,
            });
        }
        Ok(())
    }

    pub(crate) fn check_dense(&self, what: &'static str, required: u128) -> Result<()> {
        if required > self.dense as u128 {
            return Err(Error::CapExceeded {
                what,
                required,
                cap: self.dense,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: Self::DEFAULT_ENUMERATION,
            dense: Self::DEFAULT_DENSE,
        }
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
