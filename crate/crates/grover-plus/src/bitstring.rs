//! Exact integer combinatorics on basis-state indices.
//!
//! Basis states of an `n`-qubit register are identified with their integer
//! index; bit `alpha` of the index is the `alpha`-th digit of the binary
//! string. Everything here is exact integer arithmetic.

use crate::error::{Error, Result};

/// A computational-basis index `j` in `[0, 2^n)` together with its register
/// width `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    value: u64,
    n: u32,
}

impl BasisIndex {
    pub fn new(value: u64, n: u32) -> Result<Self> {
        if n == 0 || n > 64 {
            return Err(Error::Domain(format!(
                "register width must be in [1, 64], got {n}"
            )));
        }
        if n < 64 && value >> n != 0 {
            return Err(Error::Domain(format!(
                "index {value} does not fit in {n} bits"
            )));
        }
        Ok(Self { value, n })
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn qubits(self) -> u32 {
        self.n
    }

    fn check_same_width(self, other: BasisIndex) -> Result<()> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// Number of 1-bits in the binary string of `j`.
pub fn hamming_weight(j: BasisIndex) -> u32 {
    j.value.count_ones()
}

/// Number of bit positions where `j` and `k` differ.
pub fn hamming_distance(j: BasisIndex, k: BasisIndex) -> Result<u32> {
    j.check_same_width(k)?;
    Ok((j.value ^ k.value).count_ones())
}

/// Number of positions where both `j` and `k` have a 1.
pub fn intersection(j: BasisIndex, k: BasisIndex) -> Result<u32> {
    j.check_same_width(k)?;
    Ok((j.value & k.value).count_ones())
}

/// Exact binomial coefficient C(n, r) for `n <= 64`.
pub fn binomial(n: u32, r: u32) -> Result<u128> {
    if r > n {
        return Err(Error::Domain(format!("binomial({n}, {r}): r > n")));
    }
    if n > 64 {
        return Err(Error::Domain(format!("binomial({n}, {r}): n > 64")));
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r as u128 {
        acc = acc
            .checked_mul(n as u128 - i)
            .ok_or_else(|| Error::Domain(format!("binomial({n}, {r}) overflows")))?;
        // division is exact: acc holds C(n, i+1) * (i+1)! / (i+1)! stepwise
        acc /= i + 1;
    }
    Ok(acc)
}
