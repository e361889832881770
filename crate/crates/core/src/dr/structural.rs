use std::collections::HashMap;

use super::{Construction, DRElement, DRMonoid, DrContext};
use crate::arith::GroupElement;
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, Ideal};

/// Construction B: pairs `(d, c)` with `d | f` and `c` in `Cl^+_{f/d}`.
/// The product of `(d1, c1)` and `(d2, c2)` lies over `d3 = d1 d2 + f`, with
/// class `[d1 d2 d3^{-1}] + c1 + c2` pushed to `Cl^+_{f/d3}`.
pub fn dr_structural(k: &NumberField, f: &Ideal) -> Result<DRMonoid> {
    let ctx = DrContext::new(k, f)?;
    let mut elements = Vec::new();
    for (i, d) in ctx.divisors().iter().enumerate() {
        for (c, rep) in ctx.group(i).classes() {
            elements.push(DRElement { component: i, divisor: d.clone(), class: c.clone(), repr: ideal::mul(k, d, rep) });
        }
    }
    let lookup: HashMap<(usize, GroupElement), usize> = elements.iter().enumerate().map(|(i, e)| ((e.component, e.class.clone()), i)).collect();
    let mut pushed: HashMap<(usize, usize), GroupElement> = HashMap::new();
    let mut push = |x: usize, target: usize| -> Result<GroupElement> {
        if let Some(c) = pushed.get(&(x, target)) {
            return Ok(c.clone());
        }
        let e: &DRElement = &elements[x];
        let rep = ctx.group(e.component).representative(&e.class);
        let c = ctx.group(target).class_of(k, rep)?;
        pushed.insert((x, target), c.clone());
        Ok(c)
    };
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let (d1, d2) = (&elements[i].divisor, &elements[j].divisor);
            let d12 = ideal::mul(k, d1, d2);
            let t = ctx.component(k, &d12)?;
            let g = ctx.group(t);
            let extra = g.class_of(k, &ideal::div(k, &d12, &ctx.divisors()[t]))?;
            let c = g.group().add(&g.group().add(&extra, &push(i, t)?), &push(j, t)?);
            let idx = *lookup.get(&(t, c.clone())).ok_or_else(|| Error::Verification(format!("no element with label ({t}, {c:?})")))?;
            table[i][j] = idx;
            table[j][i] = idx;
        }
    }
    DRMonoid::assemble(Construction::Structural, ctx, elements, table, None)
}
