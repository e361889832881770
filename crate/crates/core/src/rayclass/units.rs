use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{generated_subgroup, FiniteAbelianGroup, GroupElement, Sign};
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::ideal::{Ideal, ResidueRing};

/// Image of `O_K^x` in `(O/f)^x`, times the sign group `{+-1}^{r1}` when strict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitImage {
    pub strict: bool,
    /// `|(O/f)^x| * 2^{r1}` (without the sign factor when not strict).
    pub target_order: BigInt,
    pub image_order: BigInt,
    /// `target_order / image_order`.
    pub index: BigInt,
    /// Order of the torsion generator's image.
    pub torsion_period: u64,
    /// Order of each fundamental unit's image.
    pub periods: Vec<u64>,
}

type Target = (Vec<BigInt>, Vec<bool>);

pub(crate) fn negative_places(k: &NumberField, x: &FieldElement) -> Vec<bool> {
    k.real_signs(x).into_iter().map(|s| s == Sign::Negative).collect()
}

fn target_of(k: &NumberField, ring: &ResidueRing, u: &FieldElement, strict: bool) -> Target {
    let res = ring.reduce(&u.integer_coords().expect("units are integral"));
    let signs = if strict { negative_places(k, u) } else { Vec::new() };
    (res, signs)
}

fn target_mul(k: &NumberField, ring: &ResidueRing, a: &Target, b: &Target) -> Target {
    (ring.mul(k, &a.0, &b.0), a.1.iter().zip(&b.1).map(|(x, y)| x ^ y).collect())
}

fn target_order(k: &NumberField, ring: &ResidueRing, t: &Target, one: &Target) -> u64 {
    let mut cur = t.clone();
    let mut n = 1;
    while &cur != one {
        cur = target_mul(k, ring, &cur, t);
        n += 1;
    }
    n
}

/// Image of the unit group modulo `f` (and in the sign group when `strict`).
pub fn unit_image_mod(k: &NumberField, f: &Ideal, strict: bool) -> Result<UnitImage> {
    if !f.is_integral() {
        return Err(Error::InvalidData("modulus must be integral".into()));
    }
    let ring = ResidueRing::new(f)?;
    let r1 = if strict { k.signature().0 } else { 0 };
    let units = k.units();
    let one: Target = (ring.one(k), vec![false; r1]);
    let gens: Vec<Target> = std::iter::once(&units.torsion).chain(units.fundamental.iter()).map(|u| target_of(k, &ring, u, strict)).collect();
    let (elems, _) = generated_subgroup(&gens, one.clone(), |a, b| target_mul(k, &ring, a, b))?;
    let unit_count = BigInt::from(ring.units(k).len());
    let total = unit_count << r1;
    let image_order = BigInt::from(elems.len());
    Ok(UnitImage {
        strict,
        index: &total / &image_order,
        target_order: total,
        image_order,
        torsion_period: target_order(k, &ring, &gens[0], &one),
        periods: gens[1..].iter().map(|g| target_order(k, &ring, g, &one)).collect(),
    })
}

/// `(O/f)^x` with its abstract group structure and a discrete-log table.
#[derive(Clone, Debug)]
pub struct ResidueUnits {
    ring: ResidueRing,
    group: FiniteAbelianGroup,
    table: Vec<(Vec<BigInt>, GroupElement)>,
    index: HashMap<Vec<BigInt>, usize>,
}

impl ResidueUnits {
    pub fn new(k: &NumberField, f: &Ideal) -> Result<Self> {
        let ring = ResidueRing::new(f)?;
        let units = ring.units(k);
        let one = ring.one(k);
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        let mut covered: std::collections::HashSet<Vec<BigInt>> = [one.clone()].into_iter().collect();
        for u in &units {
            if covered.contains(u) {
                continue;
            }
            gens.push(u.clone());
            let (elems, _) = generated_subgroup(&gens, one.clone(), |a, b| ring.mul(k, a, b))?;
            covered = elems.into_iter().map(|(e, _)| e).collect();
        }
        let (elems, pres) = generated_subgroup(&gens, one, |a, b| ring.mul(k, a, b))?;
        let mut table: Vec<(Vec<BigInt>, GroupElement)> = elems.into_iter().map(|(e, v)| (e, pres.evaluate(&v))).collect();
        table.sort();
        let index = table.iter().enumerate().map(|(i, (e, _))| (e.clone(), i)).collect();
        Ok(ResidueUnits { ring, group: pres.group, table, index })
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn order(&self) -> BigInt {
        BigInt::from(self.table.len())
    }

    /// Residues and their exponent vectors, sorted by residue.
    pub fn table(&self) -> &[(Vec<BigInt>, GroupElement)] {
        &self.table
    }

    pub fn log(&self, x: &[BigInt]) -> Result<GroupElement> {
        let r = self.ring.reduce(x);
        self.index.get(&r).map(|&i| self.table[i].1.clone()).ok_or(Error::NotCoprime)
    }

    pub fn exp(&self, g: &[BigInt]) -> Vec<BigInt> {
        let g = self.group.reduce(g);
        self.table.iter().find(|(_, e)| *e == g).map(|(r, _)| r.clone()).unwrap_or_else(|| vec![BigInt::one()])
    }
}
