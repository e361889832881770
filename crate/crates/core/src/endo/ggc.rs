use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{spectrum, DRSet};
use crate::arith::integers::{divisors_u64, gcd_u64};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, enumerate_ideals};
use crate::witt::{CoefficientRing, CyclotomicRing};

pub const GGC_MAX_LEVEL: u64 = 30;

/// The homomorphisms `prod_{d | n} Q(zeta_d) -> Qbar` as pairs `(d, j)`
/// (`zeta_d -> zeta_d^j`), and an equivariant bijection onto `DR_(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GgcWitness {
    pub level: u64,
    pub homs: Vec<(u64, u64)>,
    /// `bijection[i]` is the spectrum element matched with `homs[i]`.
    pub bijection: Vec<usize>,
}

/// Builds the hom-set of `E_n` over `Q` with the pullback action and searches
/// for an equivariant bijection with `spectrum((n))`.
pub fn ggc_check_q(n: u64) -> Result<Option<GgcWitness>> {
    if n == 0 || n > GGC_MAX_LEVEL {
        return Err(Error::Ceiling(format!("level {n} outside 1..={GGC_MAX_LEVEL}")));
    }
    let q = NumberField::rationals();
    let spec = spectrum(&q, &ideal::from_integer(&q, &BigInt::from(n))?)?;
    let ring = CyclotomicRing::new(n);
    let mut homs = Vec::new();
    let mut images = Vec::new();
    for d in divisors_u64(n) {
        for j in (1..=d).filter(|&j| gcd_u64(j, d) == 1) {
            homs.push((d, j));
            images.push(ring.zeta_pow((j * (n / d)) as i64));
        }
    }
    let lookup: HashMap<Vec<BigInt>, usize> = images.iter().cloned().enumerate().map(|(i, z)| (z, i)).collect();
    let act_by = |a: u64| -> Result<Vec<usize>> {
        images.iter().map(|z| lookup.get(&ring.pow(z, a)).copied().ok_or_else(|| Error::Verification(format!("power {a} leaves the hom set")))).collect()
    };
    let monoid = spec.monoid();
    let mut action = Vec::with_capacity(monoid.len());
    for e in monoid.elements() {
        let a = e.repr.min_integer(&q).to_u64().ok_or_else(|| Error::Ceiling("representative too large".into()))?;
        action.push(act_by(a)?);
    }
    // the pullback action must only depend on the class of (a)
    for a in enumerate_ideals(&q, 2 * n + 2)? {
        let m = monoid.classify(&q, &a)?;
        let g = a.min_integer(&q).to_u64().ok_or_else(|| Error::Ceiling("generator too large".into()))?;
        if act_by(g)? != action[m] {
            return Err(Error::Verification(format!("pullback by {g} is not constant on its class")));
        }
    }
    let homset = DRSet::new(monoid.clone(), action)?;
    Ok(equivariant_bijection(&homset, &spec).map(|bijection| GgcWitness { level: n, homs, bijection }))
}

/// An equivariant bijection `a -> b` between two sets over the same monoid,
/// found by orbit-type pruning followed by exhaustive matching.
pub fn equivariant_bijection(a: &DRSet, b: &DRSet) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.action().len() != b.action().len() {
        return None;
    }
    let invariant = |s: &DRSet, x: usize| {
        let stab: Vec<bool> = s.action().iter().map(|row| row[x] == x).collect();
        let mut orbit: Vec<usize> = s.action().iter().map(|row| row[x]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        (stab, orbit.len())
    };
    let ia: Vec<_> = (0..a.len()).map(|x| invariant(a, x)).collect();
    let ib: Vec<_> = (0..b.len()).map(|x| invariant(b, x)).collect();
    let mut map = vec![None; a.len()];
    let mut used = vec![false; b.len()];
    if extend(a, b, &ia, &ib, &mut map, &mut used) {
        Some(map.into_iter().map(|m| m.expect("complete")).collect())
    } else {
        None
    }
}

fn extend<I: PartialEq>(a: &DRSet, b: &DRSet, ia: &[I], ib: &[I], map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
    let Some(x) = map.iter().position(Option::is_none) else {
        return true;
    };
    for y in 0..b.len() {
        if used[y] || ia[x] != ib[y] {
            continue;
        }
        let (saved_map, saved_used) = (map.clone(), used.clone());
        if propagate(a, b, x, y, map, used) && extend(a, b, ia, ib, map, used) {
            return true;
        }
        *map = saved_map;
        *used = saved_used;
    }
    false
}

/// Assigns `x -> y` and closes under `m x -> m y`; false on conflict.
fn propagate(a: &DRSet, b: &DRSet, x: usize, y: usize, map: &mut [Option<usize>], used: &mut [bool]) -> bool {
    let mut queue = vec![(x, y)];
    while let Some((x, y)) = queue.pop() {
        match map[x] {
            Some(z) if z == y => continue,
            Some(_) => return false,
            None if used[y] => return false,
            None => {
                map[x] = Some(y);
                used[y] = true;
            }
        }
        for (ra, rb) in a.action().iter().zip(b.action()) {
            queue.push((ra[x], rb[y]));
        }
    }
    true
}
