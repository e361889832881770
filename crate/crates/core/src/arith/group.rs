//! Finite abelian groups in invariant-factor form.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::{snf, IntMatrix};
use crate::error::{Error, Result};

/// `Z/d_1 x ... x Z/d_k` with `d_1 | d_2 | ... | d_k`, all `d_i >= 2`.
/// Elements are exponent vectors reduced into `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariants: Vec<BigInt>,
}

pub type GroupElement = Vec<BigInt>;

impl FiniteAbelianGroup {
    pub fn new(invariants: Vec<BigInt>) -> Result<Self> {
        if invariants.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::InvalidData("invariant factors must be at least 2".into()));
        }
        if invariants.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(Error::InvalidData("invariant factors must form a divisibility chain".into()));
        }
        Ok(FiniteAbelianGroup { invariants })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariants: Vec::new() }
    }

    pub fn invariants(&self) -> &[BigInt] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> BigInt {
        self.invariants.iter().product()
    }

    /// Exponent of the group (largest invariant factor).
    pub fn exponent(&self) -> BigInt {
        self.invariants.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn identity(&self) -> GroupElement {
        vec![BigInt::zero(); self.invariants.len()]
    }

    pub fn reduce(&self, v: &[BigInt]) -> GroupElement {
        v.iter().zip(&self.invariants).map(|(x, d)| x.mod_floor(d)).collect()
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> GroupElement {
        a.iter().zip(b).zip(&self.invariants).map(|((x, y), d)| (x + y).mod_floor(d)).collect()
    }

    pub fn neg(&self, a: &[BigInt]) -> GroupElement {
        a.iter().zip(&self.invariants).map(|(x, d)| (-x).mod_floor(d)).collect()
    }

    pub fn scale(&self, a: &[BigInt], k: &BigInt) -> GroupElement {
        a.iter().zip(&self.invariants).map(|(x, d)| (x * k).mod_floor(d)).collect()
    }

    pub fn is_identity(&self, a: &[BigInt]) -> bool {
        a.iter().all(Zero::is_zero)
    }

    /// All elements in lexicographic order of exponent vectors.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for d in &self.invariants {
            let d = d.to_u64().expect("enumerable group");
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |i| {
                        let mut v = prefix.clone();
                        v.push(BigInt::from(i));
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// Order of an element.
    pub fn element_order(&self, a: &[BigInt]) -> BigInt {
        a.iter().zip(&self.invariants).fold(BigInt::one(), |acc, (x, d)| acc.lcm(&(d / x.gcd(d))))
    }
}

/// A finite abelian group presented as a quotient of `Z^k`, with the image of
/// each original generator.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FiniteAbelianGroup,
    pub generator_images: Vec<GroupElement>,
}

impl Presentation {
    /// Image of an exponent vector over the original generators.
    pub fn evaluate(&self, exponents: &[BigInt]) -> GroupElement {
        let mut acc = self.group.identity();
        for (e, img) in exponents.iter().zip(&self.generator_images) {
            acc = self.group.add(&acc, &self.group.scale(img, e));
        }
        acc
    }
}

/// `Z^num_generators / rowspan(relations)` in invariant-factor form.
pub fn group_from_relations(num_generators: usize, relations: &IntMatrix) -> Result<Presentation> {
    if num_generators == 0 {
        return Ok(Presentation { group: FiniteAbelianGroup::trivial(), generator_images: Vec::new() });
    }
    if relations.rows() > 0 && relations.cols() != num_generators {
        return Err(Error::InvalidData("relation width differs from generator count".into()));
    }
    let rel = if relations.rows() == 0 { IntMatrix::zeros(1, num_generators) } else { relations.clone() };
    let s = snf(&rel);
    let mut diag = s.diagonal();
    diag.resize(num_generators, BigInt::zero());
    let free = diag.iter().filter(|d| d.is_zero()).count();
    if free > 0 {
        return Err(Error::InfiniteGroup(free));
    }
    let keep: Vec<usize> = (0..num_generators).filter(|&i| !diag[i].is_one()).collect();
    let group = FiniteAbelianGroup::new(keep.iter().map(|&i| diag[i].clone()).collect())?;
    let generator_images = (0..num_generators).map(|g| group.reduce(&keep.iter().map(|&i| s.v[(g, i)].clone()).collect::<Vec<_>>())).collect();
    Ok(Presentation { group, generator_images })
}

/// The subgroup generated by `gens` inside some ambient finite abelian group
/// given by hashable elements and a multiplication. Returns every element
/// with an exponent vector over `gens`, plus the presentation of the subgroup.
pub fn generated_subgroup<T, F>(gens: &[T], identity: T, mul: F) -> Result<(Vec<(T, Vec<BigInt>)>, Presentation)>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let k = gens.len();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elems: Vec<(T, Vec<BigInt>)> = vec![(identity.clone(), vec![BigInt::zero(); k])];
    index.insert(identity, 0);
    let mut relations = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        let mut power = g.clone();
        let mut m = 1u64;
        let hit = loop {
            if let Some(&i) = index.get(&power) {
                break i;
            }
            power = mul(&power, g);
            m += 1;
        };
        let mut rel: Vec<BigInt> = elems[hit].1.iter().map(|x| -x).collect();
        rel[gi] += BigInt::from(m);
        relations.push(rel);
        let base: Vec<(T, Vec<BigInt>)> = elems.clone();
        let mut gj = g.clone();
        for j in 1..m {
            for (h, v) in &base {
                let e = mul(h, &gj);
                let mut w = v.clone();
                w[gi] = BigInt::from(j);
                index.insert(e.clone(), elems.len());
                elems.push((e, w));
            }
            gj = mul(&gj, g);
        }
    }
    let pres = group_from_relations(k, &IntMatrix::from_rows(k, relations))?;
    Ok((elems, pres))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn relations_examples() {
        let p = group_from_relations(2, &IntMatrix::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(p.group.invariants(), &bi(&[2, 2])[..]);
        let p = group_from_relations(2, &IntMatrix::from_i64(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(p.group.invariants(), &bi(&[6])[..]);
        // generators map to elements of order 2 and 3
        assert_eq!(p.group.element_order(&p.generator_images[0]), BigInt::from(2));
        assert_eq!(p.group.element_order(&p.generator_images[1]), BigInt::from(3));
        assert_eq!(group_from_relations(1, &IntMatrix::zeros(0, 1)).unwrap_err(), Error::InfiniteGroup(1));
    }

    #[test]
    fn units_mod_15() {
        let gens = vec![2u64, 14];
        let (elems, pres) = generated_subgroup(&gens, 1u64, |a, b| a * b % 15).unwrap();
        assert_eq!(elems.len(), 8);
        assert_eq!(pres.group.invariants(), &bi(&[2, 4])[..]);
        // every element's exponent vector evaluates consistently
        for (e, v) in &elems {
            let direct = gens.iter().zip(v).fold(1u64, |acc, (g, k)| (0..k.to_u64().unwrap()).fold(acc, |a, _| a * g % 15));
            assert_eq!(direct, *e);
        }
    }

    #[test]
    fn chain_validation() {
        assert!(FiniteAbelianGroup::new(bi(&[2, 3])).is_err());
        assert!(FiniteAbelianGroup::new(bi(&[1])).is_err());
        assert_eq!(FiniteAbelianGroup::new(bi(&[2, 4])).unwrap().order(), BigInt::from(8));
    }
}
