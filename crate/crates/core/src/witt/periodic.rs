use num_bigint::BigInt;

use super::{ghost, ghost_frobenius, CoefficientRing, WittVector};
use crate::dr::{dr_structural, DrContext};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, Ideal};

/// Outcome of a periodicity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Periodicity {
    /// `F_a(x) = F_b(x)` for every tested pair.
    Periodic { pairs_checked: usize },
    /// A witnessing pair with `[a] = [b]` but `F_a(x) != F_b(x)`.
    NotPeriodic { a: u64, b: u64 },
    /// No pair `a != b` in the truncation set shares a class.
    Vacuous,
}

/// Tests `F_a(x) = F_b(x)` on the common truncation for all `a, b` in `S`
/// with `(a)` and `(b)` in the same class of `DR_(n)` over `Q`.
pub fn is_periodic<R: CoefficientRing>(r: &R, x: &WittVector<R::Elem>, n: u64) -> Result<Periodicity> {
    if n == 0 {
        return Err(Error::InvalidData("period must be positive".into()));
    }
    let q = NumberField::rationals();
    let dr = dr_structural(&q, &ideal::from_integer(&q, &BigInt::from(n))?)?;
    let s = x.set.elems();
    let classes: Vec<usize> = s.iter().map(|&a| dr.classify(&q, &ideal::from_integer(&q, &BigInt::from(a))?)).collect::<Result<_>>()?;
    let g = ghost(r, x);
    let mut pairs = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if classes[i] != classes[j] {
                continue;
            }
            let (a, b) = (s[i], s[j]);
            let fa = ghost_frobenius(a, &g)?;
            let fb = ghost_frobenius(b, &g)?;
            let common = fa.set.intersect(&fb.set)?;
            pairs += 1;
            if fa.restrict(&common)? != fb.restrict(&common)? {
                return Ok(Periodicity::NotPeriodic { a, b });
            }
        }
    }
    Ok(if pairs == 0 { Periodicity::Vacuous } else { Periodicity::Periodic { pairs_checked: pairs } })
}

/// `sum over d | f of h^+_{f/d}` together with `|DR_f|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicRank {
    pub rank: BigInt,
    /// `(d, h^+_{f/d})` for each divisor `d`.
    pub terms: Vec<(Ideal, BigInt)>,
    pub dr_size: usize,
}

/// Rank of the `f`-periodic model: the sum of the degrees of the strict ray
/// class fields over the divisors, checked against `|DR_f|`.
pub fn periodic_rank(k: &NumberField, f: &Ideal) -> Result<PeriodicRank> {
    let ctx = DrContext::new(k, f)?;
    let terms: Vec<(Ideal, BigInt)> = ctx.divisors().iter().enumerate().map(|(i, d)| (d.clone(), ctx.group(i).order())).collect();
    let rank: BigInt = terms.iter().map(|(_, h)| h).sum();
    for (i, _) in terms.iter().enumerate() {
        let g = ctx.group(i);
        if &g.order() != g.formula_order() {
            return Err(Error::Verification("ray class order disagrees with the order formula".into()));
        }
    }
    let dr_size = dr_structural(k, f)?.len();
    if BigInt::from(dr_size) != rank {
        return Err(Error::Verification(format!("rank {rank} differs from |DR_f| = {dr_size}")));
    }
    Ok(PeriodicRank { rank, terms, dr_size })
}
