use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{FieldElement, NumberField, UnitGroup};
use crate::arith::integers::{isqrt, squarefree_decompose};
use crate::arith::matrix::RatMatrix;
use crate::arith::IntPolynomial;

fn rat(n: BigInt, d: BigInt) -> BigRational {
    BigRational::new(n, d)
}

/// Integral basis `{1, omega}` of the quadratic field defined by `g`, with
/// `omega = sqrt(d)` or `(1 + sqrt(d))/2`, expressed in the power basis of the
/// root `t`. Here `sqrt(d) = (2t + b)/f` where `b^2 - 4c = f^2 d`.
pub(super) fn integral_basis(g: &IntPolynomial) -> (RatMatrix, BigInt) {
    let c = &g.coeffs()[0];
    let b = &g.coeffs()[1];
    let (d, f) = squarefree_decompose(&(b * b - 4 * c));
    let one = BigRational::one();
    let zero = BigRational::zero();
    let sqrt_d = [rat(b.clone(), f.clone()), rat(BigInt::from(2), f.clone())];
    let omega = if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
        let half = rat(BigInt::one(), BigInt::from(2));
        vec![(&one + &sqrt_d[0]) * &half, &sqrt_d[1] * &half]
    } else {
        sqrt_d.to_vec()
    };
    (vec![vec![one, zero], omega], d)
}

/// Trace and norm of `omega` for squarefree `d`.
pub(super) fn omega_trace_norm(d: &BigInt) -> (BigInt, BigInt) {
    if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
        (BigInt::one(), (BigInt::one() - d) / 4)
    } else {
        (BigInt::zero(), -d)
    }
}

/// Coefficients `(h, k)` of the fundamental unit `h + k*omega > 1` of the real
/// quadratic field `Q(sqrt d)`, from the continued fraction of `-conj(omega)`.
pub fn fundamental_unit_coefficients(d: &BigInt) -> (BigInt, BigInt) {
    assert!(d.is_positive(), "real quadratic field expected");
    let (tr, nm) = omega_trace_norm(d);
    let s = isqrt(d);
    let (mut p, mut q) = if tr.is_zero() { (BigInt::zero(), BigInt::one()) } else { (-BigInt::one(), BigInt::from(2)) };
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    loop {
        let a = if q.is_positive() { (&p + &s).div_floor(&q) } else { (&p + &s + BigInt::one()).div_floor(&q) };
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        let norm = &h * &h + &h * &k * &tr + &k * &k * &nm;
        if norm.abs().is_one() && k.is_positive() {
            return (h, k);
        }
        h0 = std::mem::replace(&mut h1, h);
        k0 = std::mem::replace(&mut k1, k);
        p = &a * &q - &p;
        q = (d - &p * &p) / &q;
    }
}

pub(super) fn unit_group(field: &NumberField, d: &BigInt) -> UnitGroup {
    if d.is_negative() {
        let (torsion, order) = if *d == BigInt::from(-1) {
            (FieldElement::from_i64(&[0, 1]), 4)
        } else if *d == BigInt::from(-3) {
            (FieldElement::from_i64(&[0, 1]), 6)
        } else {
            (field.from_int(&BigInt::from(-1)), 2)
        };
        UnitGroup { torsion, torsion_order: order, fundamental: Vec::new() }
    } else {
        let (h, k) = fundamental_unit_coefficients(d);
        UnitGroup { torsion: field.from_int(&BigInt::from(-1)), torsion_order: 2, fundamental: vec![FieldElement::from_ints(&[h, k])] }
    }
}
