//! Strict and ordinary ray class groups, residue unit groups and the
//! congruent principal-generator test.

mod generator;
mod units;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::integers::primes_up_to;
use crate::arith::{group_from_relations, FiniteAbelianGroup, GroupElement, IntMatrix, Presentation};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, primes_above, Ideal, PrimeIdeal};

pub use generator::{congruent_generator, congruent_generator_with, principal_generator};
pub use units::{unit_image_mod, ResidueUnits, UnitImage};

/// Largest prime norm tried before giving up on matching the order formula.
const PRIME_NORM_CEILING: u64 = 200_000;

/// `Cl_f` (or `Cl^+_f` when strict) with a small representative per class.
#[derive(Clone, Debug)]
pub struct RayClassGroup {
    modulus: Ideal,
    strict: bool,
    presentation: Presentation,
    generators: Vec<PrimeIdeal>,
    classes: Vec<(GroupElement, Ideal)>,
    unit_image: UnitImage,
    expected_order: BigInt,
}

/// `a ~ b` in the ray class group mod `f`, for `a`, `b` coprime to `f`.
pub fn ray_equivalent(k: &NumberField, a: &Ideal, b: &Ideal, f: &Ideal, strict: bool) -> Result<bool> {
    let binv = ideal::inverse(k, b);
    let c = ideal::mul(k, a, &binv);
    let m = ideal::mul(k, f, &binv);
    Ok(congruent_generator_with(k, &c, &m, strict)?.is_some())
}

/// The ray class group modulo `f`.
pub fn ray_class_group(k: &NumberField, f: &Ideal, strict: bool) -> Result<RayClassGroup> {
    ray_class_group_avoiding(k, f, strict, &ideal::unit_ideal(k))
}

/// As [`ray_class_group`], with all generators and representatives also
/// coprime to `avoid`.
pub fn ray_class_group_avoiding(k: &NumberField, f: &Ideal, strict: bool, avoid: &Ideal) -> Result<RayClassGroup> {
    if !f.is_integral() || !avoid.is_integral() {
        return Err(Error::InvalidData("ray class modulus must be integral".into()));
    }
    let unit_image = unit_image_mod(k, f, strict)?;
    let h = k.class_number().ok_or_else(|| Error::MissingData("class number required for the order formula".into()))?;
    let expected_order = h * &unit_image.index;
    let target = expected_order.to_usize().ok_or_else(|| Error::Unsupported("ray class group too large".into()))?;
    let bad = ideal::mul(k, f, avoid);

    let mut generators: Vec<PrimeIdeal> = Vec::new();
    let mut relations: Vec<Vec<BigInt>> = Vec::new();
    let mut reps: Vec<(Ideal, Vec<BigInt>)> = vec![(ideal::unit_ideal(k), Vec::new())];
    let mut p_lo = 1u64;
    'outer: while reps.len() < target {
        let p_hi = (p_lo * 2).max(64);
        if p_lo > PRIME_NORM_CEILING {
            return Err(Error::Ceiling(format!("found {} of {} ray classes using primes of norm up to {}", reps.len(), target, PRIME_NORM_CEILING)));
        }
        for p in primes_up_to(p_hi).into_iter().filter(|&p| p > p_lo) {
            for prime in primes_above(k, &BigInt::from(p))? {
                if bad.is_subset(&prime.ideal) {
                    continue;
                }
                let mut power = prime.ideal.clone();
                let mut j = 1u64;
                let hit = loop {
                    let mut found = None;
                    for (i, (r, _)) in reps.iter().enumerate() {
                        if ray_equivalent(k, &power, r, f, strict)? {
                            found = Some(i);
                            break;
                        }
                    }
                    if let Some(i) = found {
                        break i;
                    }
                    power = ideal::mul(k, &power, &prime.ideal);
                    j += 1;
                    if (j as usize) * reps.len() > target {
                        return Err(Error::Verification(format!("ray class group mod {f:?} exceeds the order formula value {expected_order}")));
                    }
                };
                if j == 1 {
                    continue;
                }
                let gi = generators.len();
                generators.push(prime.clone());
                for r in reps.iter_mut() {
                    r.1.push(BigInt::zero());
                }
                for rel in relations.iter_mut() {
                    rel.push(BigInt::zero());
                }
                let mut rel: Vec<BigInt> = reps[hit].1.iter().map(|x| -x).collect();
                rel[gi] += BigInt::from(j);
                relations.push(rel);
                let base = reps.clone();
                let mut pi = prime.ideal.clone();
                for i in 1..j {
                    for (r, v) in &base {
                        let mut w = v.clone();
                        w[gi] = BigInt::from(i);
                        reps.push((ideal::mul(k, r, &pi), w));
                    }
                    pi = ideal::mul(k, &pi, &prime.ideal);
                }
                if reps.len() >= target {
                    break 'outer;
                }
            }
        }
        p_lo = p_hi;
    }
    if reps.len() != target {
        return Err(Error::Verification(format!("ray class group mod {f:?} has {} classes, order formula gives {expected_order}", reps.len())));
    }
    let ng = generators.len();
    let presentation = group_from_relations(ng, &IntMatrix::from_rows(ng, relations))?;
    let mut classes: Vec<(GroupElement, Ideal)> = reps.into_iter().map(|(r, v)| (presentation.evaluate(&v), r)).collect();
    classes.sort();
    Ok(RayClassGroup { modulus: f.clone(), strict, presentation, generators, classes, unit_image, expected_order })
}

impl RayClassGroup {
    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.presentation.group
    }

    pub fn order(&self) -> BigInt {
        self.group().order()
    }

    /// Value of `h_K * |(O/f)^x| * 2^{r1} / |image of units|`.
    pub fn formula_order(&self) -> &BigInt {
        &self.expected_order
    }

    pub fn unit_image(&self) -> &UnitImage {
        &self.unit_image
    }

    /// Prime ideals generating the group, in the order they were adjoined.
    pub fn generators(&self) -> &[PrimeIdeal] {
        &self.generators
    }

    /// Class of each generator.
    pub fn generator_classes(&self) -> &[GroupElement] {
        &self.presentation.generator_images
    }

    /// Every class with its representative ideal, sorted by class.
    pub fn classes(&self) -> &[(GroupElement, Ideal)] {
        &self.classes
    }

    /// Representative ideal of a class.
    pub fn representative(&self, c: &[BigInt]) -> &Ideal {
        let c = self.group().reduce(c);
        let i = self.classes.binary_search_by(|(g, _)| g.cmp(&c)).expect("every class has a representative");
        &self.classes[i].1
    }

    /// Class of a fractional ideal coprime to the modulus.
    pub fn class_of(&self, k: &NumberField, a: &Ideal) -> Result<GroupElement> {
        if a.is_integral() {
            return self.class_of_integral(k, a);
        }
        let mut den = ideal::unit_ideal(k);
        for (p, e) in ideal::factor_ideal(k, a)? {
            if e < 0 {
                den = ideal::mul(k, &den, &ideal::pow(k, &p.ideal, -e));
            }
        }
        let num = ideal::mul(k, a, &den);
        let cn = self.class_of_integral(k, &num)?;
        let cd = self.class_of_integral(k, &den)?;
        Ok(self.group().add(&cn, &self.group().neg(&cd)))
    }

    fn class_of_integral(&self, k: &NumberField, a: &Ideal) -> Result<GroupElement> {
        if !ideal::coprime(k, a, &self.modulus) {
            return Err(Error::NotCoprime);
        }
        for (g, r) in &self.classes {
            if ray_equivalent(k, a, r, &self.modulus, self.strict)? {
                return Ok(g.clone());
            }
        }
        Err(Error::Verification(format!("{a:?} matched no ray class representative")))
    }
}
