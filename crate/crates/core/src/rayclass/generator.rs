use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::units::negative_places;
use crate::arith::integers::{isqrt, isqrt_ceil};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{self, Ideal, ResidueRing};

/// Integer upper bound for the absolute values of the embeddings of a real
/// quadratic unit.
fn unit_bound(k: &NumberField, e: &FieldElement) -> BigInt {
    let t = k.trace(e).to_integer().abs();
    let n = k.norm(e).to_integer();
    let disc = &t * &t - 4 * n;
    (&t + isqrt_ceil(&disc) + 1) / 2 + 1
}

/// A generator of the integral ideal `a`, or `None` if `a` is not principal.
pub fn principal_generator(k: &NumberField, a: &Ideal) -> Result<Option<FieldElement>> {
    if !a.is_integral() {
        let y = principal_generator(k, &a.numerator())?;
        let d = BigRational::new(BigInt::one(), a.den().clone());
        return Ok(y.map(|y| y.scale(&d)));
    }
    let t = a.norm_int();
    match k.degree() {
        1 => Ok(Some(k.from_int(&t))),
        2 => {
            let w = k.basis_element(1);
            let tr = k.trace(&w).to_integer();
            let nm = k.norm(&w).to_integer();
            let disc: BigInt = &tr * &tr - 4 * &nm;
            let bound = if disc.is_negative() { 4 * &t } else { 4 * &t * unit_bound(k, &k.units().fundamental[0]) };
            let b_max = isqrt(&(bound / disc.abs()));
            let signs: &[i32] = if disc.is_negative() { &[1] } else { &[1, -1] };
            let mut b = BigInt::zero();
            while b <= b_max {
                for bb in [b.clone(), -b.clone()] {
                    for &s in signs {
                        // a^2 + (b tr) a + (b^2 nm - s t) = 0
                        let da: BigInt = &bb * &bb * &disc + BigInt::from(4 * s) * &t;
                        if da.is_negative() {
                            continue;
                        }
                        let r = isqrt(&da);
                        if &r * &r != da {
                            continue;
                        }
                        for rr in [r.clone(), -r.clone()] {
                            let num = -&bb * &tr + rr;
                            if num.is_odd() {
                                continue;
                            }
                            let y = FieldElement::from_ints(&[num / 2, bb.clone()]);
                            if a.contains(&y) {
                                return Ok(Some(y));
                            }
                        }
                    }
                    if b.is_zero() {
                        break;
                    }
                }
                b += 1;
            }
            Ok(None)
        }
        _ => Err(Error::Inconclusive("principal generator search needs a certified bound in degree >= 3".into())),
    }
}

/// `Some(x)` with `(x) = c`, `x - 1` in `m` and `x` totally positive (when
/// `strict`), or `None` if no such `x` exists.
pub fn congruent_generator_with(k: &NumberField, c: &Ideal, m: &Ideal, strict: bool) -> Result<Option<FieldElement>> {
    let Some(x0) = principal_generator(k, c)? else {
        return Ok(None);
    };
    // x0 * u - 1 in m depends only on u modulo g = O cap c^{-1} m
    let j = ideal::mul(k, &ideal::inverse(k, c), m);
    let g = ideal::div(k, &j, &ideal::add(k, &ideal::unit_ideal(k), &j));
    let ring = ResidueRing::new(&g)?;
    let units = k.units();
    let rank = units.fundamental.len();
    if rank > 1 {
        return Err(Error::Inconclusive("unit orbit search for unit rank above one".into()));
    }
    let r1 = if strict { k.signature().0 } else { 0 };
    let x0_neg = if strict { negative_places(k, &x0) } else { Vec::new() };
    let zeta = units.torsion.integer_coords().expect("units are integral");
    let zeta_neg = if strict { negative_places(k, &units.torsion) } else { Vec::new() };
    let (eps, eps_neg, period) = match units.fundamental.first() {
        None => (ring.one(k), vec![false; r1], 1u64),
        Some(e) => {
            let ec = ring.reduce(&e.integer_coords().expect("units are integral"));
            let en = if strict { negative_places(k, e) } else { vec![false; 0] };
            let one = ring.one(k);
            let (mut cur, mut neg, mut p) = (ec.clone(), en.clone(), 1u64);
            while cur != one || neg.iter().any(|&b| b) {
                cur = ring.mul(k, &cur, &ec);
                neg = neg.iter().zip(&en).map(|(a, b)| a ^ b).collect();
                p += 1;
            }
            (ec, en, p)
        }
    };
    let one_elem = k.one();
    let mut zj = ring.one(k);
    let mut zj_neg = vec![false; r1];
    for jz in 0..units.torsion_order {
        let mut ek = ring.one(k);
        let mut ek_neg = vec![false; r1];
        for kk in 0..period {
            let neg_ok = x0_neg.iter().zip(&zj_neg).zip(&ek_neg).all(|((a, b), c)| !(a ^ b ^ c));
            if neg_ok {
                let u_red = ring.mul(k, &zj, &ek);
                let x = k.mul(&x0, &FieldElement::from_ints(&u_red));
                if m.contains(&x.sub(&one_elem)) {
                    let mut u = k.pow(&units.torsion, jz);
                    if let Some(e) = units.fundamental.first() {
                        u = k.mul(&u, &k.pow(e, kk));
                    }
                    let x = k.mul(&x0, &u);
                    debug_assert!(ideal::principal(k, &x).map(|p| &p == c).unwrap_or(false));
                    return Ok(Some(x));
                }
            }
            ek = ring.mul(k, &ek, &eps);
            ek_neg = ek_neg.iter().zip(&eps_neg).map(|(a, b)| a ^ b).collect();
        }
        zj = ring.mul(k, &zj, &zeta);
        zj_neg = zj_neg.iter().zip(&zeta_neg).map(|(a, b)| a ^ b).collect();
    }
    Ok(None)
}

/// Strict version: the generator must be totally positive.
pub fn congruent_generator(k: &NumberField, c: &Ideal, m: &Ideal) -> Result<Option<FieldElement>> {
    congruent_generator_with(k, c, m, true)
}
