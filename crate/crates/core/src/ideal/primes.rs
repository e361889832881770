use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{from_generators, from_integer, inverse, mul, unit_ideal, Ideal};
use crate::arith::integers::{factor_integer, primes_up_to};
use crate::arith::matrix::rat_det;
use crate::arith::modp::{lift, Fp};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};

/// A prime ideal `P` over the rational prime `p` with ramification index `e`
/// and residue degree `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeIdeal {
    pub p: BigInt,
    pub e: u32,
    pub f: u32,
    pub ideal: Ideal,
}

impl PrimeIdeal {
    pub fn norm(&self) -> BigInt {
        num_traits::pow(self.p.clone(), self.f as usize)
    }
}

/// Discriminant of the power basis `1, a, ..., a^{n-1}`.
fn power_disc(k: &NumberField, a: &FieldElement) -> BigRational {
    let n = k.degree();
    let mut pows = vec![k.one()];
    for i in 1..2 * n - 1 {
        pows.push(k.mul(&pows[i - 1], a));
    }
    let m: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| k.trace(&pows[i + j])).collect()).collect();
    rat_det(&m)
}

/// An integral element `a` with `p` not dividing `[O : Z[a]]`.
fn kummer_element(k: &NumberField, p: &BigInt) -> Result<FieldElement> {
    let n = k.degree();
    let disc = BigRational::from_integer(k.discriminant().clone());
    let mut candidates: Vec<Vec<i64>> = Vec::new();
    for i in 1..n {
        let mut c = vec![0i64; n];
        c[i] = 1;
        candidates.push(c);
    }
    for r in 1..=2i64 {
        for mask in 1..(1usize << (n - 1)) {
            for sign_mask in 0..(1usize << (n - 1)) {
                let mut c = vec![0i64; n];
                for i in 1..n {
                    if mask >> (i - 1) & 1 == 1 {
                        c[i] = if sign_mask >> (i - 1) & 1 == 1 { -r } else { r };
                    }
                }
                candidates.push(c);
            }
        }
    }
    for c in candidates {
        let a = FieldElement::from_i64(&c);
        let d = power_disc(k, &a);
        if d.is_zero() {
            continue;
        }
        let idx2 = (d / &disc).to_integer();
        if !(&idx2 % p).is_zero() {
            return Ok(a);
        }
    }
    Err(Error::Unsupported(format!("no element with index prime to {p} found for prime decomposition")))
}

/// The prime ideals above `p`, with `e` and `f`.
pub fn primes_above(k: &NumberField, p: &BigInt) -> Result<Vec<PrimeIdeal>> {
    if !crate::arith::integers::is_prime(p) {
        return Err(Error::InvalidData(format!("{p} is not prime")));
    }
    if k.degree() == 1 {
        return Ok(vec![PrimeIdeal { p: p.clone(), e: 1, f: 1, ideal: from_integer(k, p)? }]);
    }
    let pu = p.to_u64().ok_or_else(|| Error::Unsupported(format!("prime {p} exceeds 64 bits")))?;
    let a = kummer_element(k, p)?;
    let h = k.char_poly(&a).to_primitive_int();
    let fp = Fp::new(pu);
    let mut out = Vec::new();
    for (g, e) in fp.factor(&fp.from_int_poly(h.coeffs())) {
        let mut val = k.zero();
        let mut pw = k.one();
        for c in lift(&g) {
            val = val.add(&pw.scale(&BigRational::from_integer(c)));
            pw = k.mul(&pw, &a);
        }
        let ideal = from_generators(k, &[k.from_int(p), val])?;
        out.push(PrimeIdeal { p: p.clone(), e, f: (g.len() - 1) as u32, ideal });
    }
    out.sort_by(|x, y| (x.norm(), &x.ideal).cmp(&(y.norm(), &y.ideal)));
    Ok(out)
}

fn integral_valuation(k: &NumberField, prime: &PrimeIdeal, a: &Ideal) -> i64 {
    let pinv = inverse(k, &prime.ideal);
    let mut v = 0;
    let mut cur = a.clone();
    while cur.is_subset(&prime.ideal) {
        cur = mul(k, &cur, &pinv);
        v += 1;
    }
    v
}

/// `v_P(a)` for a fractional ideal `a`.
pub fn valuation(k: &NumberField, prime: &PrimeIdeal, a: &Ideal) -> i64 {
    let num = integral_valuation(k, prime, &a.numerator());
    let den = i64::from(prime.e) * crate::arith::integers::valuation(a.den(), prime.p.to_u64().unwrap_or(0)) as i64;
    num - den
}

/// Prime factorization of a fractional ideal, sorted by prime norm.
pub fn factor_ideal(k: &NumberField, a: &Ideal) -> Result<Vec<(PrimeIdeal, i64)>> {
    let num = a.numerator();
    let mut ps: Vec<BigInt> = factor_integer(&num.norm_int()).into_iter().map(|(p, _)| p).collect();
    ps.extend(factor_integer(a.den()).into_iter().map(|(p, _)| p));
    ps.sort();
    ps.dedup();
    let mut out = Vec::new();
    for p in ps {
        for prime in primes_above(k, &p)? {
            let v = valuation(k, &prime, a);
            if v != 0 {
                out.push((prime, v));
            }
        }
    }
    out.sort_by(|x, y| (x.0.norm(), &x.0.ideal).cmp(&(y.0.norm(), &y.0.ideal)));
    Ok(out)
}

/// All integral ideals of norm at most `bound`, sorted by norm and then by
/// HNF basis.
pub fn enumerate_ideals(k: &NumberField, bound: u64) -> Result<Vec<Ideal>> {
    let mut primes = Vec::new();
    for p in primes_up_to(bound) {
        for prime in primes_above(k, &BigInt::from(p))? {
            if prime.norm() <= BigInt::from(bound) {
                primes.push(prime);
            }
        }
    }
    let bound = BigInt::from(bound);
    let mut out = Vec::new();
    let mut stack = vec![(unit_ideal(k), BigInt::one(), 0usize)];
    while let Some((ideal, norm, start)) = stack.pop() {
        for (i, prime) in primes.iter().enumerate().skip(start) {
            let nn = &norm * prime.norm();
            if nn <= bound {
                stack.push((mul(k, &ideal, &prime.ideal), nn, i));
            }
        }
        out.push((norm, ideal));
    }
    out.sort();
    Ok(out.into_iter().map(|(_, i)| i).collect())
}

/// All integral divisors of an integral ideal, sorted by norm then basis.
pub fn divisors_of(k: &NumberField, a: &Ideal) -> Result<Vec<Ideal>> {
    if !a.is_integral() {
        return Err(Error::InvalidData("divisors of a fractional ideal".into()));
    }
    let mut out = vec![unit_ideal(k)];
    for (prime, e) in factor_ideal(k, a)? {
        let mut next = Vec::new();
        for d in &out {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = mul(k, &cur, &prime.ideal);
                next.push(cur.clone());
            }
        }
        out = next;
    }
    let mut keyed: BTreeMap<(BigInt, Ideal), ()> = BTreeMap::new();
    for d in out {
        keyed.insert((d.norm_int(), d), ());
    }
    Ok(keyed.into_keys().map(|(_, d)| d).collect())
}
