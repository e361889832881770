use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::integers::isqrt;

type Form = (BigInt, BigInt, BigInt);

fn primitive(a: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    a.gcd(b).gcd(c).is_one()
}

fn divisors_abs(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            out.push(i.clone());
            let j = &n / &i;
            if j != i {
                out.push(j);
            }
        }
        i += 1;
    }
    out
}

fn reduced_definite(disc: &BigInt) -> usize {
    let n = -disc;
    let mut count = 0;
    let mut a = BigInt::one();
    while 3 * &a * &a <= n {
        let mut b: BigInt = -&a + 1;
        while b <= a {
            let num: BigInt = &b * &b - disc;
            if (&num % (BigInt::from(4) * &a)).is_zero() {
                let c: BigInt = &num / (BigInt::from(4) * &a);
                let ok = c >= a && !(c == a && b.is_negative()) && primitive(&a, &b, &c);
                if ok {
                    count += 1;
                }
            }
            b += 1;
        }
        a += 1;
    }
    count
}

fn reduced_indefinite(disc: &BigInt) -> Vec<Form> {
    let s = isqrt(disc);
    let mut out = Vec::new();
    let mut b = BigInt::one();
    while b <= s {
        let num: BigInt = &b * &b - disc;
        if (&num % BigInt::from(4)).is_zero() {
            let ac: BigInt = &num / BigInt::from(4);
            for a0 in divisors_abs(&ac) {
                let lo: BigInt = 2 * &a0 + &b;
                let hi: BigInt = 2 * &a0 - &b;
                if &lo * &lo <= *disc || (hi.is_positive() && &hi * &hi >= *disc) {
                    continue;
                }
                for a in [a0.clone(), -a0.clone()] {
                    let c = &ac / &a;
                    if primitive(&a, &b, &c) {
                        out.push((a, b.clone(), c));
                    }
                }
            }
        }
        b += 1;
    }
    out
}

fn rho(f: &Form, disc: &BigInt, s: &BigInt) -> Form {
    let (_, b, c) = f;
    let m = 2 * c.abs();
    let r = (-b).mod_floor(&m);
    let bp = s - (s - &r).mod_floor(&m);
    let cp = (&bp * &bp - disc) / (4 * c);
    (c.clone(), bp, cp)
}

/// Number of proper equivalence classes of primitive binary quadratic forms
/// of fundamental discriminant `disc` (positive definite ones when `disc < 0`).
/// For real fields this is the narrow class number.
pub fn narrow_class_number_from_forms(disc: &BigInt) -> BigInt {
    if disc.is_negative() {
        return BigInt::from(reduced_definite(disc));
    }
    let s = isqrt(disc);
    let forms = reduced_indefinite(disc);
    let mut seen: BTreeSet<Form> = BTreeSet::new();
    let mut cycles = 0u64;
    for f in forms {
        if seen.contains(&f) {
            continue;
        }
        cycles += 1;
        let mut g = f.clone();
        loop {
            seen.insert(g.clone());
            g = rho(&g, disc, &s);
            if g == f {
                break;
            }
        }
    }
    BigInt::from(cycles)
}

/// Wide class number of the quadratic field of discriminant `disc`, given the
/// norm of its fundamental unit (ignored for imaginary fields).
pub fn class_number_from_forms(disc: &BigInt, unit_norm: i32) -> BigInt {
    let h = narrow_class_number_from_forms(disc);
    if disc.is_positive() && unit_norm == 1 {
        h / 2
    } else {
        h
    }
}
