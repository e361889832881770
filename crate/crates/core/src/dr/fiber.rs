use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Construction, DRElement, DRMonoid, DrContext};
use crate::arith::GroupElement;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{self, Ideal, ResidueRing};

/// Direction of the unit action on the class-group factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionConvention {
    /// `u.(r, c) = (u r, s(u)^{-1} c)`.
    Stated,
    /// `u.(r, c) = (u r, s(u) c)`.
    Inverse,
}

impl ActionConvention {
    pub fn name(self) -> &'static str {
        match self {
            ActionConvention::Stated => "stated",
            ActionConvention::Inverse => "inverse",
        }
    }
}

/// Nonzero totally positive lift of a residue modulo `f`.
fn positive_lift(k: &NumberField, r: &[BigInt], n0: &BigInt) -> Result<FieldElement> {
    let base = FieldElement::from_ints(r);
    let step = k.from_int(n0);
    let mut x = base;
    for _ in 0..10_000 {
        if !x.is_zero() && k.is_totally_positive(&x)? {
            return Ok(x);
        }
        x = x.add(&step);
    }
    Err(Error::Ceiling("no totally positive lift found".into()))
}

type Point = (Vec<BigInt>, GroupElement);

/// Construction C: orbits of `O/f x Cl^+_f` under `(O/f)^x`, mapped to ideal
/// classes by `(r, c) -> (r~) q_c` for a totally positive lift `r~`.
pub fn dr_fiber_product(k: &NumberField, f: &Ideal) -> Result<DRMonoid> {
    let ctx = DrContext::new(k, f)?;
    let target = ctx.expected_size().to_usize().ok_or_else(|| Error::Unsupported("DR_f too large".into()))?;
    let ring = ResidueRing::new(f)?;
    let n0 = f.min_integer(k);
    let cl = ctx.group(0);
    let g = cl.group();
    let residues = ring.elements();
    let mut lifts: HashMap<Vec<BigInt>, Ideal> = HashMap::new();
    for r in &residues {
        let x = positive_lift(k, r, &n0)?;
        lifts.insert(r.clone(), ideal::principal(k, &x)?);
    }
    let units = ring.units(k);
    let mut s = Vec::with_capacity(units.len());
    for u in &units {
        s.push(cl.class_of(k, &lifts[u])?);
    }
    let points: Vec<Point> = residues.iter().flat_map(|r| cl.classes().iter().map(move |(c, _)| (r.clone(), c.clone()))).collect();
    let point_index: HashMap<Point, usize> = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let mut labels: HashMap<usize, (usize, GroupElement)> = HashMap::new();
    let mut label_of = |i: usize| -> Result<(usize, GroupElement)> {
        if let Some(l) = labels.get(&i) {
            return Ok(l.clone());
        }
        let (r, c) = &points[i];
        let a = ideal::mul(k, &lifts[r], cl.representative(c));
        let l = ctx.label(k, &a)?;
        labels.insert(i, l.clone());
        Ok(l)
    };
    let mut failures = Vec::new();
    for convention in [ActionConvention::Stated, ActionConvention::Inverse] {
        let mut orbit_of = vec![usize::MAX; points.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..points.len() {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let (r, c) = &points[start];
            let mut members = Vec::new();
            for (u, su) in units.iter().zip(&s) {
                let shift = match convention {
                    ActionConvention::Stated => g.neg(su),
                    ActionConvention::Inverse => su.clone(),
                };
                let p = (ring.mul(k, u, r), g.add(c, &shift));
                let j = point_index[&p];
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
            orbits.push(members);
        }
        if orbits.len() != target {
            failures.push(format!("{}: {} orbits, expected {target}", convention.name(), orbits.len()));
            continue;
        }
        let mut orbit_labels = Vec::with_capacity(orbits.len());
        let mut consistent = true;
        for members in &orbits {
            let l0 = label_of(members[0])?;
            for &m in &members[1..] {
                if label_of(m)? != l0 {
                    consistent = false;
                    break;
                }
            }
            if !consistent {
                break;
            }
            orbit_labels.push(l0);
        }
        if !consistent {
            failures.push(format!("{}: an orbit meets two DR classes", convention.name()));
            continue;
        }
        let n = orbits.len();
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i..n {
                let (r1, c1) = &points[orbits[i][0]];
                let (r2, c2) = &points[orbits[j][0]];
                let p = (ring.mul(k, r1, r2), g.add(c1, c2));
                let o = orbit_of[point_index[&p]];
                table[i][j] = o;
                table[j][i] = o;
            }
        }
        let elements = orbits
            .iter()
            .zip(&orbit_labels)
            .map(|(members, (comp, class))| {
                let (r, c) = &points[members[0]];
                DRElement {
                    component: *comp,
                    divisor: ctx.divisors()[*comp].clone(),
                    class: class.clone(),
                    repr: ideal::mul(k, &lifts[r], cl.representative(c)),
                }
            })
            .collect();
        return DRMonoid::assemble(Construction::FiberProduct, ctx, elements, table, Some(convention));
    }
    Err(Error::Verification(format!("fiber product failed under both action conventions ({})", failures.join("; "))))
}
