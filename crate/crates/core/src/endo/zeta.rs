use num_bigint::BigInt;

use crate::arith::integers::primes_up_to;
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{enumerate_ideals, primes_above};

/// `a(n)` for `1 <= n <= bound`, and the Euler-product coefficients when
/// requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaCoefficients {
    pub bound: u64,
    /// `counts[n - 1] = a(n)`.
    pub counts: Vec<u64>,
    pub euler: Option<Vec<u64>>,
}

impl ZetaCoefficients {
    pub fn get(&self, n: u64) -> Option<u64> {
        self.counts.get((n as usize).checked_sub(1)?).copied()
    }

    pub fn euler_agrees(&self) -> Option<bool> {
        self.euler.as_ref().map(|e| *e == self.counts)
    }
}

/// Number of integral ideals of each norm up to `bound`.
pub fn zeta_coefficients(k: &NumberField, bound: u64, euler_check: bool) -> Result<ZetaCoefficients> {
    if bound == 0 {
        return Err(Error::InvalidData("bound must be positive".into()));
    }
    let mut counts = vec![0u64; bound as usize];
    for a in enumerate_ideals(k, bound)? {
        let n: usize = a.norm_int().try_into().map_err(|_| Error::InvalidData("norm out of range".into()))?;
        counts[n - 1] += 1;
    }
    let euler = if euler_check { Some(euler_coefficients(k, bound)?) } else { None };
    Ok(ZetaCoefficients { bound, counts, euler })
}

/// Coefficients of `prod_P (1 - N(P)^{-s})^{-1}` up to `bound`, from the
/// residue degrees of the primes above each rational prime.
pub fn euler_coefficients(k: &NumberField, bound: u64) -> Result<Vec<u64>> {
    let mut coeffs = vec![0u64; bound as usize];
    coeffs[0] = 1;
    for p in primes_up_to(bound) {
        // local[j] = coefficient of p^{js}
        let mut top = 0;
        let mut q = p;
        while q <= bound {
            top += 1;
            q = q.saturating_mul(p);
        }
        let mut local = vec![0u64; top + 1];
        local[0] = 1;
        for prime in primes_above(k, &BigInt::from(p))? {
            let f = prime.f as usize;
            for j in f..=top {
                local[j] += local[j - f];
            }
        }
        let mut next = coeffs.clone();
        for n in 1..=bound {
            if coeffs[n as usize - 1] == 0 || n % p == 0 {
                continue;
            }
            let mut m = n;
            for &c in &local[1..] {
                m = match m.checked_mul(p) {
                    Some(m) if m <= bound => m,
                    _ => break,
                };
                next[m as usize - 1] = coeffs[n as usize - 1] * c;
            }
        }
        coeffs = next;
    }
    Ok(coeffs)
}
