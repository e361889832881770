use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::integers::{divisors_u64, gcd_u64};
use crate::arith::poly::{int_poly_mul, int_poly_rem_monic};
use crate::arith::IntPolynomial;
use crate::error::{Error, Result};

/// A commutative, torsion-free coefficient ring for Witt vectors.
pub trait CoefficientRing {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `a / n` if it lies in the ring.
    fn div_exact_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem>;
    /// The designated Frobenius lift at `p`, if any.
    fn frobenius_lift(&self, p: u64, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        self.mul(a, &self.from_int(n))
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_divisible(&self, a: &Self::Elem, n: &BigInt) -> bool {
        self.div_exact_int(a, n).is_some()
    }
}

/// The integers, with the identity as Frobenius lift at every prime.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn div_exact_int(&self, a: &BigInt, n: &BigInt) -> Option<BigInt> {
        let (q, r) = a.div_rem(n);
        r.is_zero().then_some(q)
    }
    fn frobenius_lift(&self, _p: u64, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
}

/// The rationals; division by nonzero integers is always exact.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl CoefficientRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn div_exact_int(&self, a: &BigRational, n: &BigInt) -> Option<BigRational> {
        (!n.is_zero()).then(|| a / BigRational::from_integer(n.clone()))
    }
    fn frobenius_lift(&self, _p: u64, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
}

/// `m`-th cyclotomic polynomial, by dividing `x^m - 1` by `Phi_d` for the
/// proper divisors `d` of `m`.
pub fn cyclotomic_polynomial(m: u64) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic level must be positive");
    let mut num: Vec<BigInt> = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut q = crate::arith::QPoly::new(num.into_iter().map(BigRational::from_integer).collect());
    for d in divisors_u64(m) {
        if d < m {
            q = q.div_rem(&cyclotomic_polynomial(d).to_rational()).0;
        }
    }
    IntPolynomial::new(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

/// `Z[zeta_m] = Z[x]/(Phi_m)`, elements as coefficient vectors of length
/// `phi(m)` on the power basis of `zeta_m`.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    level: u64,
    phi: IntPolynomial,
    degree: usize,
}

impl CyclotomicRing {
    pub fn new(level: u64) -> Self {
        let phi = cyclotomic_polynomial(level);
        let degree = phi.degree().unwrap_or(0);
        CyclotomicRing { level, phi, degree }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn modulus(&self) -> &IntPolynomial {
        &self.phi
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn reduce(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let mut r = int_poly_rem_monic(coeffs, &self.phi);
        r.resize(self.degree, BigInt::zero());
        r
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> Vec<BigInt> {
        let e = k.rem_euclid(self.level as i64) as usize;
        let mut c = vec![BigInt::zero(); e + 1];
        c[e] = BigInt::one();
        self.reduce(&c)
    }

    /// The substitution `zeta -> zeta^a`; a ring automorphism when `gcd(a, m) = 1`.
    pub fn substitute(&self, a: u64, x: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.degree];
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = self.zeta_pow((i as u64 * a % self.level) as i64);
            for (o, v) in out.iter_mut().zip(z) {
                *o += c * v;
            }
        }
        out
    }

    /// `sigma_p(zeta) = zeta^p`, defined for `p` prime to the level.
    pub fn sigma(&self, p: u64, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if gcd_u64(p, self.level) != 1 {
            return Err(Error::Unsupported(format!("no Frobenius lift at {p} on Z[zeta_{}]", self.level)));
        }
        Ok(self.substitute(p, x))
    }

    /// Basis monomials `zeta^i`, `0 <= i < phi(m)`.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.degree).map(|i| self.zeta_pow(i as i64)).collect()
    }
}

impl CoefficientRing for CyclotomicRing {
    type Elem = Vec<BigInt>;

    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.degree]
    }
    fn one(&self) -> Vec<BigInt> {
        self.zeta_pow(0)
    }
    fn from_int(&self, n: &BigInt) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = n.clone();
        v
    }
    fn add(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<BigInt>) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Vec<BigInt>, b: &Vec<BigInt>) -> Vec<BigInt> {
        self.reduce(&int_poly_mul(a, b))
    }
    fn div_exact_int(&self, a: &Vec<BigInt>, n: &BigInt) -> Option<Vec<BigInt>> {
        a.iter().map(|x| Integers.div_exact_int(x, n)).collect()
    }
    fn frobenius_lift(&self, p: u64, a: &Vec<BigInt>) -> Option<Vec<BigInt>> {
        self.sigma(p, a).ok()
    }
}
