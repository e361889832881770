use num_traits::ToPrimitive;

use super::{dr_equivalent, Construction, DRElement, DRMonoid, DrContext};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, Ideal};

fn find_class(k: &NumberField, ctx: &DrContext, reps: &[(usize, Ideal)], a: &Ideal) -> Result<Option<usize>> {
    let comp = ctx.component(k, a)?;
    for (i, (c, r)) in reps.iter().enumerate() {
        if *c == comp && dr_equivalent(k, a, r, ctx.modulus())? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Construction A: partitions all integral ideals up to a growing norm bound
/// by the relation, stopping once the class count reaches `sum h^+_{f/d}`.
/// Fails with a ceiling error if `norm_ceiling` is exceeded first.
pub fn dr_quotient(k: &NumberField, f: &Ideal, norm_ceiling: u64) -> Result<DRMonoid> {
    let ctx = DrContext::new(k, f)?;
    let target = ctx.expected_size().to_usize().ok_or_else(|| Error::Unsupported("DR_f too large".into()))?;
    let mut reps: Vec<(usize, Ideal)> = Vec::new();
    let mut done = 0u64;
    let mut bound = f.norm_int().to_u64().unwrap_or(u64::MAX).max(k.minkowski_bound()).max(2);
    loop {
        for a in ideal::enumerate_ideals(k, bound)? {
            if a.norm_int() <= done.into() {
                continue;
            }
            if find_class(k, &ctx, &reps, &a)?.is_none() {
                reps.push((ctx.component(k, &a)?, a));
            }
        }
        done = bound;
        if reps.len() == target {
            break;
        }
        if reps.len() > target {
            return Err(Error::Verification(format!("found {} classes, more than the expected {target}", reps.len())));
        }
        if bound >= norm_ceiling {
            return Err(Error::Ceiling(format!("found {} of {target} classes among ideals of norm up to {bound}", reps.len())));
        }
        bound = (bound * 2).min(norm_ceiling);
    }
    let n = reps.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let p = ideal::mul(k, &reps[i].1, &reps[j].1);
            let c = find_class(k, &ctx, &reps, &p)?.ok_or_else(|| Error::Verification(format!("product {p:?} lies in no class")))?;
            table[i][j] = c;
            table[j][i] = c;
        }
    }
    let elements = reps
        .iter()
        .map(|(comp, r)| {
            let (i, class) = ctx.label(k, r)?;
            debug_assert_eq!(i, *comp);
            Ok(DRElement { component: i, divisor: ctx.divisors()[i].clone(), class, repr: r.clone() })
        })
        .collect::<Result<Vec<_>>>()?;
    DRMonoid::assemble(Construction::Quotient, ctx, elements, table, None)
}
