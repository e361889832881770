//! Fractional ideals of a maximal order, stored as a scaled lattice in
//! Hermite normal form over the integral basis.

mod primes;
mod residue;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::matrix::{hnf, hnf_contains, hnf_reduce, kernel_mod};
use crate::arith::IntMatrix;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};

pub use primes::{divisors_of, enumerate_ideals, factor_ideal, primes_above, valuation, PrimeIdeal};
pub use residue::ResidueRing;

/// The fractional ideal `(1/den) * L`, where `L` is the row lattice of
/// `basis` in integral-basis coordinates. The representation is canonical:
/// `basis` is in HNF and `gcd(den, entries of basis) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    basis: IntMatrix,
    den: BigInt,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis.to_rows().iter().map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))).collect();
        if self.den.is_one() {
            write!(f, "<{}>", rows.join(","))
        } else {
            write!(f, "<{}>/{}", rows.join(","), self.den)
        }
    }
}

impl Ideal {
    fn normalized(basis: IntMatrix, den: BigInt) -> Result<Self> {
        let n = basis.cols();
        let h = hnf(&basis);
        if h.rows() != n {
            return Err(Error::ZeroIdeal);
        }
        let g = h.entries().iter().fold(den.clone(), |g, x| g.gcd(x));
        let (h, den) = if g.is_one() {
            (h, den)
        } else {
            let rows = h.to_rows().into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect();
            (IntMatrix::from_rows(n, rows), den / &g)
        };
        Ok(Ideal { basis: h, den })
    }

    /// HNF basis of the numerator lattice.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// `den * self`, an integral ideal.
    pub fn numerator(&self) -> Ideal {
        Ideal { basis: self.basis.clone(), den: BigInt::one() }
    }

    pub fn norm(&self) -> BigRational {
        let d = num_traits::pow(self.den.clone(), self.degree());
        BigRational::new(self.basis.det().abs(), d)
    }

    /// Norm of an integral ideal as an integer.
    pub fn norm_int(&self) -> BigInt {
        assert!(self.is_integral(), "norm_int of a fractional ideal");
        self.basis.det().abs()
    }

    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm_int().is_one()
    }

    /// Lattice generators as field elements.
    pub fn generators(&self) -> Vec<FieldElement> {
        let d = BigRational::from_integer(self.den.clone());
        self.basis.to_rows().iter().map(|r| FieldElement::from_ints(r).scale(&(BigRational::one() / &d))).collect()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        let y = x.scale(&BigRational::from_integer(self.den.clone()));
        match y.integer_coords() {
            Some(c) => hnf_contains(&self.basis, &c),
            None => false,
        }
    }

    /// `self` is contained in `other`.
    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.generators().iter().all(|g| other.contains(g))
    }

    /// For integral ideals: `self` divides `other`, i.e. `other` is inside `self`.
    pub fn divides(&self, other: &Ideal) -> bool {
        other.is_subset(self)
    }

    /// Canonical representative of an integral element modulo this integral ideal.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        hnf_reduce(&self.basis, x)
    }

    /// Smallest positive integer in an integral ideal.
    pub fn min_integer(&self, k: &NumberField) -> BigInt {
        let one = k.one().integer_coords().expect("1 is integral");
        let n = self.norm_int();
        let mut best = n.clone();
        for (p, _) in crate::arith::integers::factor_integer(&n) {
            while (&best % &p).is_zero() {
                let c = &best / &p;
                let v: Vec<BigInt> = one.iter().map(|x| x * &c).collect();
                if hnf_contains(&self.basis, &v) {
                    best = c;
                } else {
                    break;
                }
            }
        }
        best
    }
}

pub fn unit_ideal(k: &NumberField) -> Ideal {
    principal(k, &k.one()).expect("1 is nonzero")
}

pub fn from_integer(k: &NumberField, n: &BigInt) -> Result<Ideal> {
    principal(k, &k.from_int(n))
}

pub fn principal(k: &NumberField, x: &FieldElement) -> Result<Ideal> {
    from_generators(k, std::slice::from_ref(x))
}

/// The ideal generated by the given elements.
pub fn from_generators(k: &NumberField, gens: &[FieldElement]) -> Result<Ideal> {
    let n = k.degree();
    let den = gens.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.denominator()));
    let d = BigRational::from_integer(den.clone());
    let mut rows = Vec::new();
    for g in gens {
        if g.coords().len() != n {
            return Err(Error::InvalidData("element has the wrong number of coordinates".into()));
        }
        let c = g.scale(&d).integer_coords().expect("cleared denominators");
        if c.iter().all(Zero::is_zero) {
            continue;
        }
        rows.extend(k.mult_matrix_int(&c).to_rows());
    }
    if rows.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    Ideal::normalized(IntMatrix::from_rows(n, rows), den)
}

pub fn mul(k: &NumberField, a: &Ideal, b: &Ideal) -> Ideal {
    let mut rows = Vec::with_capacity(a.basis.rows() * b.basis.rows());
    for x in a.basis.to_rows() {
        for y in b.basis.to_rows() {
            rows.push(k.mul_int(&x, &y));
        }
    }
    Ideal::normalized(IntMatrix::from_rows(k.degree(), rows), &a.den * &b.den).expect("product of nonzero ideals")
}

/// `a + b`; for integral ideals this is the gcd.
pub fn add(k: &NumberField, a: &Ideal, b: &Ideal) -> Ideal {
    let den = a.den.lcm(&b.den);
    let mut rows = Vec::new();
    for (m, d) in [(&a.basis, &a.den), (&b.basis, &b.den)] {
        let s = &den / d;
        rows.extend(m.to_rows().into_iter().map(|r| r.into_iter().map(|x| x * &s).collect::<Vec<_>>()));
    }
    Ideal::normalized(IntMatrix::from_rows(k.degree(), rows), den).expect("sum of nonzero ideals")
}

pub fn inverse(k: &NumberField, a: &Ideal) -> Ideal {
    let n = k.degree();
    let nm = a.norm_int_numerator();
    let mut cols: Vec<Vec<BigInt>> = vec![Vec::new(); n];
    for g in a.basis.to_rows() {
        let m = k.mult_matrix_int(&g);
        for (i, c) in cols.iter_mut().enumerate() {
            c.extend(m.row(i).iter().cloned());
        }
    }
    let big = IntMatrix::from_rows(n * n, cols);
    let ker = kernel_mod(&big, &nm);
    // a^{-1} = den * A^{-1} = den * (1/N) * ker
    let inv = Ideal::normalized(ker.mul(&IntMatrix::diagonal(&vec![a.den.clone(); n])), nm).expect("inverse of a nonzero ideal");
    debug_assert!(mul(k, a, &inv).is_unit(), "ideal inverse failed for {a:?}");
    inv
}

impl Ideal {
    fn norm_int_numerator(&self) -> BigInt {
        self.basis.det().abs()
    }
}

pub fn div(k: &NumberField, a: &Ideal, b: &Ideal) -> Ideal {
    mul(k, a, &inverse(k, b))
}

pub fn pow(k: &NumberField, a: &Ideal, e: i64) -> Ideal {
    let base = if e < 0 { inverse(k, a) } else { a.clone() };
    let mut acc = unit_ideal(k);
    for _ in 0..e.unsigned_abs() {
        acc = mul(k, &acc, &base);
    }
    acc
}

/// Integral ideals `a`, `b` are coprime.
pub fn coprime(k: &NumberField, a: &Ideal, b: &Ideal) -> bool {
    add(k, a, b).is_unit()
}

#[cfg(test)]
mod tests;
