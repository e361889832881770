use num_bigint::BigInt;
use num_traits::Zero;

use super::Ideal;
use crate::arith::matrix::pivot_columns;
use crate::error::{Error, Result};
use crate::field::NumberField;

/// The finite ring `O/m` for a nonzero integral ideal `m`. Elements are the
/// canonical remainders of integral coordinate vectors.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    modulus: Ideal,
    diag: Vec<BigInt>,
}

impl ResidueRing {
    pub fn new(m: &Ideal) -> Result<Self> {
        if !m.is_integral() {
            return Err(Error::InvalidData("modulus must be integral".into()));
        }
        let b = m.basis();
        let diag = pivot_columns(b).into_iter().enumerate().map(|(i, c)| b[(i, c)].clone()).collect();
        Ok(ResidueRing { modulus: m.clone(), diag })
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn order(&self) -> BigInt {
        self.diag.iter().product()
    }

    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.modulus.reduce(x)
    }

    pub fn mul(&self, k: &NumberField, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&k.mul_int(x, y))
    }

    pub fn one(&self, k: &NumberField) -> Vec<BigInt> {
        self.reduce(&k.one().integer_coords().expect("1 is integral"))
    }

    /// Every residue class, in lexicographic order of the canonical remainders.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        let mut out: Vec<Vec<BigInt>> = vec![Vec::new()];
        for d in &self.diag {
            let mut next = Vec::new();
            for v in &out {
                let mut c = BigInt::zero();
                while &c < d {
                    let mut w = v.clone();
                    w.push(c.clone());
                    next.push(w);
                    c += 1;
                }
            }
            out = next;
        }
        out
    }

    /// `x` is invertible modulo the ideal.
    pub fn is_unit(&self, k: &NumberField, x: &[BigInt]) -> bool {
        if self.modulus.is_unit() {
            return true;
        }
        if x.iter().all(Zero::is_zero) {
            return false;
        }
        let xi = super::principal(k, &crate::field::FieldElement::from_ints(x)).expect("nonzero");
        super::coprime(k, &xi, &self.modulus)
    }

    /// The unit group `(O/m)^x` as canonical remainders.
    pub fn units(&self, k: &NumberField) -> Vec<Vec<BigInt>> {
        self.elements().into_iter().filter(|x| self.is_unit(k, x)).collect()
    }

    /// Multiplicative inverse of a unit.
    pub fn inverse(&self, k: &NumberField, x: &[BigInt]) -> Result<Vec<BigInt>> {
        let one = self.one(k);
        let units = self.units(k);
        units.into_iter().find(|y| self.mul(k, x, y) == one).ok_or(Error::NotCoprime)
    }

    /// The order of a unit in `(O/m)^x`.
    pub fn unit_order(&self, k: &NumberField, x: &[BigInt]) -> Result<u64> {
        if !self.is_unit(k, x) {
            return Err(Error::NotCoprime);
        }
        let one = self.one(k);
        let mut cur = self.reduce(x);
        let mut n = 1u64;
        while cur != one {
            cur = self.mul(k, &cur, x);
            n += 1;
        }
        Ok(n)
    }
}
