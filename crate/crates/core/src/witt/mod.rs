//! Big Witt vectors over torsion-free rings on finite divisor-closed
//! truncation sets, computed through ghost components.

mod periodic;
mod ring;

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::arith::integers::{divisors_u64, is_prime_u64};
use crate::error::{Error, Result};

pub use periodic::{is_periodic, periodic_rank, PeriodicRank, Periodicity};
pub use ring::{cyclotomic_polynomial, CoefficientRing, CyclotomicRing, Integers, Rationals};

/// A finite set of positive integers closed under taking divisors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncationSet {
    elems: Vec<u64>,
}

impl TruncationSet {
    pub fn new(elems: impl IntoIterator<Item = u64>) -> Result<Self> {
        let set: BTreeSet<u64> = elems.into_iter().collect();
        if set.is_empty() {
            return Err(Error::Truncation("empty set".into()));
        }
        if set.contains(&0) {
            return Err(Error::Truncation("0 is not a valid index".into()));
        }
        for &n in &set {
            if let Some(d) = divisors_u64(n).into_iter().find(|d| !set.contains(d)) {
                return Err(Error::Truncation(format!("{n} is present but its divisor {d} is not")));
            }
        }
        Ok(TruncationSet { elems: set.into_iter().collect() })
    }

    /// Divisor closure of the given integers.
    pub fn closure(gens: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut all = BTreeSet::new();
        for g in gens {
            if g == 0 {
                return Err(Error::Truncation("0 is not a valid index".into()));
            }
            all.extend(divisors_u64(g));
        }
        Self::new(all)
    }

    /// All divisors of `n`.
    pub fn divisors(n: u64) -> Self {
        Self::closure([n]).expect("positive n")
    }

    /// `{1, ..., n}`.
    pub fn initial(n: u64) -> Self {
        Self::new(1..=n).expect("initial segments are divisor-closed")
    }

    pub fn elems(&self) -> &[u64] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elems.binary_search(&n).is_ok()
    }

    pub fn position(&self, n: u64) -> Option<usize> {
        self.elems.binary_search(&n).ok()
    }

    pub fn max(&self) -> u64 {
        *self.elems.last().expect("nonempty")
    }

    /// `{n : m n in S}`.
    pub fn quotient(&self, m: u64) -> Result<Self> {
        Self::new(self.elems.iter().filter(|&&n| n % m == 0).map(|&n| n / m)).map_err(|_| Error::Truncation(format!("{m} is not in the truncation set")))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Self::new(self.elems.iter().copied().filter(|&n| other.contains(n)))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.elems.iter().all(|&n| other.contains(n))
    }
}

/// Ghost components `w_n`, `n` in `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostVector<E> {
    pub set: TruncationSet,
    pub w: Vec<E>,
}

/// Witt coordinates `x_n`, `n` in `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittVector<E> {
    pub set: TruncationSet,
    pub x: Vec<E>,
}

impl<E: Clone> GhostVector<E> {
    pub fn new(set: TruncationSet, w: Vec<E>) -> Result<Self> {
        if set.len() != w.len() {
            return Err(Error::Truncation(format!("{} components for {} indices", w.len(), set.len())));
        }
        Ok(GhostVector { set, w })
    }

    pub fn get(&self, n: u64) -> Option<&E> {
        self.set.position(n).map(|i| &self.w[i])
    }

    pub fn restrict(&self, t: &TruncationSet) -> Result<Self> {
        if !t.is_subset(&self.set) {
            return Err(Error::Truncation("restriction to a non-subset".into()));
        }
        Ok(GhostVector { set: t.clone(), w: t.elems().iter().map(|&n| self.get(n).expect("subset").clone()).collect() })
    }
}

impl<E: Clone> WittVector<E> {
    pub fn new(set: TruncationSet, x: Vec<E>) -> Result<Self> {
        if set.len() != x.len() {
            return Err(Error::Truncation(format!("{} coordinates for {} indices", x.len(), set.len())));
        }
        Ok(WittVector { set, x })
    }

    pub fn get(&self, n: u64) -> Option<&E> {
        self.set.position(n).map(|i| &self.x[i])
    }

    /// Restriction to a divisor-closed subset (a ring homomorphism).
    pub fn restrict(&self, t: &TruncationSet) -> Result<Self> {
        if !t.is_subset(&self.set) {
            return Err(Error::Truncation("restriction to a non-subset".into()));
        }
        Ok(WittVector { set: t.clone(), x: t.elems().iter().map(|&n| self.get(n).expect("subset").clone()).collect() })
    }
}

/// `w_n = sum over d | n of d x_d^{n/d}`.
pub fn ghost<R: CoefficientRing>(r: &R, x: &WittVector<R::Elem>) -> GhostVector<R::Elem> {
    let w = x
        .set
        .elems()
        .iter()
        .map(|&n| {
            divisors_u64(n).into_iter().fold(r.zero(), |acc, d| {
                let term = r.scale(&r.pow(x.get(d).expect("divisor-closed"), n / d), &BigInt::from(d));
                r.add(&acc, &term)
            })
        })
        .collect();
    GhostVector { set: x.set.clone(), w }
}

/// Inverse of [`ghost`]; fails with the first index whose coordinate is not
/// in the ring.
pub fn unghost<R: CoefficientRing>(r: &R, w: &GhostVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    let mut x: Vec<R::Elem> = Vec::with_capacity(w.set.len());
    for (i, &n) in w.set.elems().iter().enumerate() {
        let mut rest = w.w[i].clone();
        for d in divisors_u64(n) {
            if d == n {
                continue;
            }
            let xd = &x[w.set.position(d).expect("divisor-closed")];
            rest = r.sub(&rest, &r.scale(&r.pow(xd, n / d), &BigInt::from(d)));
        }
        x.push(r.div_exact_int(&rest, &BigInt::from(n)).ok_or(Error::NonIntegral(n))?);
    }
    Ok(WittVector { set: w.set.clone(), x })
}

/// Dwork congruences `w_{pn} = psi_p(w_n) mod p^{v_p(pn)}` for all primes `p`
/// and `n` with `pn` in `S`.
pub fn dwork_member<R: CoefficientRing>(r: &R, w: &GhostVector<R::Elem>) -> Result<bool> {
    for &m in w.set.elems() {
        for p in (2..=m).filter(|&p| m % p == 0 && is_prime_u64(p)) {
            let n = m / p;
            let wn = w.get(n).expect("divisor-closed");
            let lifted = r.frobenius_lift(p, wn).ok_or_else(|| Error::Unsupported(format!("no Frobenius lift at {p}")))?;
            let mut pk = BigInt::from(1);
            let mut mm = m;
            while mm % p == 0 {
                pk *= p;
                mm /= p;
            }
            if !r.is_divisible(&r.sub(w.get(m).expect("present"), &lifted), &pk) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_same<E>(a: &WittVector<E>, b: &WittVector<E>) -> Result<()> {
    if a.set != b.set {
        return Err(Error::Truncation("mismatched truncation sets".into()));
    }
    Ok(())
}

fn ghostwise<R: CoefficientRing>(
    r: &R,
    a: &WittVector<R::Elem>,
    b: &WittVector<R::Elem>,
    op: impl Fn(&R::Elem, &R::Elem) -> R::Elem,
) -> Result<WittVector<R::Elem>> {
    check_same(a, b)?;
    let (ga, gb) = (ghost(r, a), ghost(r, b));
    let w = ga.w.iter().zip(&gb.w).map(|(x, y)| op(x, y)).collect();
    unghost(r, &GhostVector { set: a.set.clone(), w })
}

pub fn witt_add<R: CoefficientRing>(r: &R, a: &WittVector<R::Elem>, b: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    ghostwise(r, a, b, |x, y| r.add(x, y))
}

pub fn witt_sub<R: CoefficientRing>(r: &R, a: &WittVector<R::Elem>, b: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    ghostwise(r, a, b, |x, y| r.sub(x, y))
}

pub fn witt_mul<R: CoefficientRing>(r: &R, a: &WittVector<R::Elem>, b: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    ghostwise(r, a, b, |x, y| r.mul(x, y))
}

pub fn witt_pow<R: CoefficientRing>(r: &R, a: &WittVector<R::Elem>, e: u64) -> Result<WittVector<R::Elem>> {
    let g = ghost(r, a);
    unghost(r, &GhostVector { set: a.set.clone(), w: g.w.iter().map(|x| r.pow(x, e)).collect() })
}

/// `n * x` in the Witt ring (ghost components scaled by `n`).
pub fn witt_scale<R: CoefficientRing>(r: &R, a: &WittVector<R::Elem>, n: &BigInt) -> Result<WittVector<R::Elem>> {
    let g = ghost(r, a);
    unghost(r, &GhostVector { set: a.set.clone(), w: g.w.iter().map(|x| r.scale(x, n)).collect() })
}

pub fn witt_zero<R: CoefficientRing>(r: &R, set: &TruncationSet) -> WittVector<R::Elem> {
    WittVector { set: set.clone(), x: vec![r.zero(); set.len()] }
}

pub fn witt_one<R: CoefficientRing>(r: &R, set: &TruncationSet) -> WittVector<R::Elem> {
    teichmuller(r, &r.one(), set)
}

/// `[a]`: coordinates `(a, 0, 0, ...)`, ghost `a^n`.
pub fn teichmuller<R: CoefficientRing>(r: &R, a: &R::Elem, set: &TruncationSet) -> WittVector<R::Elem> {
    let mut x = vec![r.zero(); set.len()];
    x[0] = a.clone();
    WittVector { set: set.clone(), x }
}

/// Ghost-level Frobenius `(F_m w)_n = w_{mn}` on `S/m`.
pub fn ghost_frobenius<E: Clone>(m: u64, w: &GhostVector<E>) -> Result<GhostVector<E>> {
    let t = w.set.quotient(m)?;
    let comps = t.elems().iter().map(|&n| w.get(m * n).expect("in S").clone()).collect();
    Ok(GhostVector { set: t, w: comps })
}

pub fn frobenius<R: CoefficientRing>(r: &R, m: u64, x: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    unghost(r, &ghost_frobenius(m, &ghost(r, x))?)
}

/// `V_m`: `y_{mn} = x_n`, other coordinates zero, on the divisor closure of `mS`.
pub fn verschiebung<R: CoefficientRing>(r: &R, m: u64, x: &WittVector<R::Elem>) -> Result<WittVector<R::Elem>> {
    if m == 0 {
        return Err(Error::Truncation("V_0 is undefined".into()));
    }
    let t = TruncationSet::closure(x.set.elems().iter().map(|&n| m * n))?;
    let coords = t.elems().iter().map(|&n| if n % m == 0 { x.get(n / m).cloned().unwrap_or_else(|| r.zero()) } else { r.zero() }).collect();
    Ok(WittVector { set: t, x: coords })
}

/// `F_p(x) - x^p` lies in `p W(R)`: its ghost components divided by `p` are
/// again the ghost components of a Witt vector over `R`.
pub fn frobenius_congruence<R: CoefficientRing>(r: &R, p: u64, x: &WittVector<R::Elem>) -> Result<bool> {
    let fx = frobenius(r, p, x)?;
    let xp = witt_pow(r, &x.restrict(&fx.set)?, p)?;
    let diff = ghost(r, &witt_sub(r, &fx, &xp)?);
    let pb = BigInt::from(p);
    let Some(w) = diff.w.iter().map(|v| r.div_exact_int(v, &pb)).collect::<Option<Vec<_>>>() else {
        return Ok(false);
    };
    Ok(unghost(r, &GhostVector { set: diff.set, w }).is_ok())
}

/// `sigma_p(x) - x^p` is divisible by `p` for every basis monomial and
/// `trials` pseudo-random elements of `Z[zeta_m]`.
pub fn cyclotomic_frobenius_check(m: u64, p: u64, trials: usize, seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    if m % p == 0 {
        return Err(Error::Unsupported(format!("{p} divides the level {m}")));
    }
    if !is_prime_u64(p) {
        return Err(Error::InvalidData(format!("{p} is not prime")));
    }
    let ring = CyclotomicRing::new(m);
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed ^ (m << 32) ^ p);
    let mut samples = ring.basis();
    for _ in 0..trials {
        samples.push((0..ring.degree()).map(|_| BigInt::from(rng.gen_range(-50i64..=50))).collect());
    }
    let pb = BigInt::from(p);
    for x in samples {
        let d = ring.sub(&ring.sigma(p, &x)?, &ring.pow(&x, p));
        if !ring.is_divisible(&d, &pb) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
