//! The finite Deligne-Ribet monoid `DR_f`: integral ideals modulo
//! `a ~ b` iff `(x) = a b^{-1}` for a totally positive `x` in `1 + f b^{-1}`.
//!
//! Three constructions are provided and cross-checked: the brute-force
//! quotient ([`dr_quotient`]), the coproduct of ray class groups over the
//! divisors of `f` ([`dr_structural`]), and the orbit space of
//! `O/f x Cl^+_f` ([`dr_fiber_product`]).

mod fiber;
mod quotient;
mod structural;

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::GroupElement;
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, Ideal};
use crate::rayclass::{congruent_generator, ray_class_group_avoiding, RayClassGroup};

pub use fiber::{dr_fiber_product, ActionConvention};
pub use quotient::dr_quotient;
pub use structural::dr_structural;

/// One-sided relation: `(x) = a b^{-1}` with `x >> 0` and `x - 1` in `f b^{-1}`.
pub fn dr_relation(k: &NumberField, a: &Ideal, b: &Ideal, f: &Ideal) -> Result<bool> {
    let binv = ideal::inverse(k, b);
    let c = ideal::mul(k, a, &binv);
    let m = ideal::mul(k, f, &binv);
    Ok(congruent_generator(k, &c, &m)?.is_some())
}

/// Symmetric closure of [`dr_relation`].
pub fn dr_equivalent(k: &NumberField, a: &Ideal, b: &Ideal, f: &Ideal) -> Result<bool> {
    if a == b {
        return Ok(true);
    }
    Ok(dr_relation(k, a, b, f)? || dr_relation(k, b, a, f)?)
}

/// Divisors of `f` with the ray class group of each complementary conductor.
#[derive(Clone, Debug)]
pub struct DrContext {
    modulus: Ideal,
    divisors: Vec<Ideal>,
    groups: Vec<RayClassGroup>,
}

impl DrContext {
    pub fn new(k: &NumberField, f: &Ideal) -> Result<Self> {
        if !f.is_integral() {
            return Err(Error::InvalidData("modulus must be integral".into()));
        }
        let divisors = ideal::divisors_of(k, f)?;
        let groups = divisors.iter().map(|d| ray_class_group_avoiding(k, &ideal::div(k, f, d), true, f)).collect::<Result<Vec<_>>>()?;
        Ok(DrContext { modulus: f.clone(), divisors, groups })
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn divisors(&self) -> &[Ideal] {
        &self.divisors
    }

    /// `Cl^+_{f/d}` for the `i`-th divisor `d`.
    pub fn group(&self, i: usize) -> &RayClassGroup {
        &self.groups[i]
    }

    /// `sum over d | f of h^+_{f/d}`.
    pub fn expected_size(&self) -> BigInt {
        self.groups.iter().map(RayClassGroup::order).sum()
    }

    /// Index of the divisor `a + f`.
    pub fn component(&self, k: &NumberField, a: &Ideal) -> Result<usize> {
        let d = ideal::add(k, a, &self.modulus);
        self.divisors.iter().position(|x| *x == d).ok_or_else(|| Error::Verification(format!("{d:?} is not a divisor of the modulus")))
    }

    /// `(i, c)` where `d_i = a + f` and `c` is the class of `a d_i^{-1}` in `Cl^+_{f/d_i}`.
    pub fn label(&self, k: &NumberField, a: &Ideal) -> Result<(usize, GroupElement)> {
        if !a.is_integral() {
            return Err(Error::InvalidData("DR classes are defined for integral ideals".into()));
        }
        let i = self.component(k, a)?;
        let c = self.groups[i].class_of(k, &ideal::div(k, a, &self.divisors[i]))?;
        Ok((i, c))
    }
}

/// Which construction produced a monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Quotient,
    Structural,
    FiberProduct,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Quotient => "a",
            Construction::Structural => "b",
            Construction::FiberProduct => "c",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DRElement {
    /// Index into the context's divisor list.
    pub component: usize,
    pub divisor: Ideal,
    pub class: GroupElement,
    /// An integral ideal in this class.
    pub repr: Ideal,
}

/// A finite commutative monoid with canonically ordered elements.
#[derive(Clone, Debug)]
pub struct DRMonoid {
    construction: Construction,
    context: DrContext,
    elements: Vec<DRElement>,
    table: Vec<Vec<usize>>,
    identity: usize,
    index: HashMap<(usize, GroupElement), usize>,
    convention: Option<ActionConvention>,
}

impl DRMonoid {
    /// Sorts labelled elements canonically and relabels the table.
    fn assemble(
        construction: Construction,
        context: DrContext,
        elements: Vec<DRElement>,
        table: Vec<Vec<usize>>,
        convention: Option<ActionConvention>,
    ) -> Result<Self> {
        let n = elements.len();
        let key = |e: &DRElement| (context.divisors[e.component].norm_int(), e.divisor.clone(), e.class.clone());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| key(&elements[i]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let elements: Vec<DRElement> = order.iter().map(|&i| elements[i].clone()).collect();
        let table: Vec<Vec<usize>> = order.iter().map(|&i| order.iter().map(|&j| pos[table[i][j]]).collect()).collect();
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert((e.component, e.class.clone()), i).is_some() {
                return Err(Error::Verification(format!("two elements share the label ({:?}, {:?})", e.divisor, e.class)));
            }
        }
        let identity = *index.get(&(0, context.groups[0].group().identity())).ok_or_else(|| Error::Verification("identity class missing".into()))?;
        Ok(DRMonoid { construction, context, elements, table, identity, index, convention })
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn context(&self) -> &DrContext {
        &self.context
    }

    pub fn modulus(&self) -> &Ideal {
        &self.context.modulus
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[DRElement] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// For the fiber-product construction, the action convention that held.
    pub fn convention(&self) -> Option<ActionConvention> {
        self.convention
    }

    /// Element indices of each component, in divisor order.
    pub fn components(&self) -> Vec<(Ideal, Vec<usize>)> {
        self.context.divisors.iter().enumerate().map(|(c, d)| (d.clone(), (0..self.len()).filter(|&i| self.elements[i].component == c).collect())).collect()
    }

    pub fn find(&self, component: usize, class: &[BigInt]) -> Option<usize> {
        let c = self.context.groups.get(component)?.group().reduce(class);
        self.index.get(&(component, c)).copied()
    }

    /// Element containing the integral ideal `a`.
    pub fn classify(&self, k: &NumberField, a: &Ideal) -> Result<usize> {
        let (i, c) = self.context.label(k, a)?;
        self.index.get(&(i, c)).copied().ok_or_else(|| Error::Verification(format!("{a:?} has no element")))
    }

    /// `[a] * x`.
    pub fn act(&self, k: &NumberField, a: &Ideal, x: usize) -> Result<usize> {
        Ok(self.table[self.classify(k, a)?][x])
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.table[i][i] == i).collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.table[self.table[a][b]][c] == self.table[a][self.table[b][c]])))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn is_unital(&self) -> bool {
        (0..self.len()).all(|a| self.table[self.identity][a] == a)
    }

    /// Associativity, commutativity, unit, and the expected cardinality.
    pub fn check_laws(&self) -> Result<()> {
        if BigInt::from(self.len()) != self.context.expected_size() {
            return Err(Error::Verification(format!("|DR_f| = {} but the ray class orders sum to {}", self.len(), self.context.expected_size())));
        }
        if !self.is_associative() || !self.is_commutative() || !self.is_unital() {
            return Err(Error::Verification("multiplication table is not a commutative monoid".into()));
        }
        Ok(())
    }
}

/// Explicit isomorphism from `other` to `reference`, matching
/// representatives with the raw relation. Returns `map[i]` = index in
/// `reference` of element `i` of `other`.
pub fn isomorphism(k: &NumberField, reference: &DRMonoid, other: &DRMonoid) -> Result<Vec<usize>> {
    if reference.modulus() != other.modulus() || reference.len() != other.len() {
        return Err(Error::Verification("monoids have different moduli or sizes".into()));
    }
    let f = reference.modulus();
    let mut map = Vec::with_capacity(other.len());
    for x in other.elements() {
        let mut hit = None;
        for (i, y) in reference.elements().iter().enumerate() {
            if y.component == x.component && dr_equivalent(k, &x.repr, &y.repr, f)? {
                hit = Some(i);
                break;
            }
        }
        map.push(hit.ok_or_else(|| Error::Verification(format!("{:?} matches no element", x.repr)))?);
    }
    let mut seen = vec![false; map.len()];
    for &m in &map {
        if std::mem::replace(&mut seen[m], true) {
            return Err(Error::Verification("map is not injective".into()));
        }
    }
    for i in 0..other.len() {
        for j in 0..other.len() {
            if map[other.mul(i, j)] != reference.mul(map[i], map[j]) {
                return Err(Error::Verification(format!("map fails to respect the product of elements {i} and {j}")));
            }
        }
    }
    Ok(map)
}

/// The projection `DR_{f'} -> DR_f` for `f | f'`, as an index map, verified to
/// be a surjective monoid homomorphism.
pub fn dr_project(k: &NumberField, source: &DRMonoid, target: &DRMonoid) -> Result<Vec<usize>> {
    if !target.modulus().divides(source.modulus()) {
        return Err(Error::NotDivisor(format!("{:?}", target.modulus()), format!("{:?}", source.modulus())));
    }
    let map: Vec<usize> = source.elements().iter().map(|e| target.classify(k, &e.repr)).collect::<Result<_>>()?;
    let n = source.len();
    for i in 0..n {
        for j in 0..n {
            if map[source.mul(i, j)] != target.mul(map[i], map[j]) {
                return Err(Error::Verification("projection is not multiplicative".into()));
            }
        }
    }
    if map[source.identity()] != target.identity() {
        return Err(Error::Verification("projection does not preserve the identity".into()));
    }
    let mut hit = vec![false; target.len()];
    for &m in &map {
        hit[m] = true;
    }
    if hit.iter().any(|h| !h) {
        return Err(Error::Verification("projection is not surjective".into()));
    }
    Ok(map)
}

#[cfg(test)]
mod tests;
