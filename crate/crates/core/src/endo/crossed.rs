use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::matrix::IntMatrix;
use crate::dr::{dr_structural, DRMonoid};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{self, enumerate_ideals, Ideal};

/// Cap on the backtracking nodes of the section search.
const SECTION_NODE_CAP: usize = 1_000_000;

/// A square matrix acting on functions `DR_f -> Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelOperator {
    pub level: Ideal,
    pub matrix: IntMatrix,
}

/// The operators attached to one integral ideal `a`.
#[derive(Clone, Debug)]
pub struct CrossedOps {
    pub ideal: Ideal,
    pub class: usize,
    pub sigma: LevelOperator,
    pub e: LevelOperator,
    pub mu: LevelOperator,
    pub mu_star: LevelOperator,
    /// Projection onto the image of the chosen section.
    pub domain: LevelOperator,
}

/// `DR_f` together with a compatible family of sections `s_m` of
/// `x -> m x`, satisfying `s_{mn} = s_n s_m` on `mn DR_f`.
#[derive(Clone, Debug)]
pub struct Endomotive {
    monoid: DRMonoid,
    sections: Vec<Vec<Option<usize>>>,
}

impl Endomotive {
    pub fn new(k: &NumberField, f: &Ideal) -> Result<Self> {
        let monoid = dr_structural(k, f)?;
        let sections = find_sections(&monoid)?.ok_or_else(|| Error::Unsupported(format!("DR_f for {f:?} admits no multiplicative family of sections")))?;
        Ok(Endomotive { monoid, sections })
    }

    pub fn monoid(&self) -> &DRMonoid {
        &self.monoid
    }

    /// `s_m(y)` for `y` in `m DR_f`.
    pub fn section(&self, m: usize, y: usize) -> Option<usize> {
        self.sections[m][y]
    }

    fn op(&self, f: impl Fn(usize, usize) -> bool) -> LevelOperator {
        let n = self.monoid.len();
        let rows = (0..n).map(|i| (0..n).map(|j| if f(i, j) { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        LevelOperator { level: self.monoid.modulus().clone(), matrix: IntMatrix::from_rows(n, rows) }
    }

    /// `(sigma v)[x] = v[m x]`.
    pub fn sigma(&self, m: usize) -> LevelOperator {
        self.op(|x, y| self.monoid.mul(m, x) == y)
    }

    /// Projection onto functions supported on `m DR_f`.
    pub fn e(&self, m: usize) -> LevelOperator {
        self.op(|x, y| x == y && self.sections[m][x].is_some())
    }

    /// `(mu v)[y] = v[s_m(y)]` on `m DR_f`, zero elsewhere.
    pub fn mu(&self, m: usize) -> LevelOperator {
        self.op(|y, x| self.sections[m][y] == Some(x))
    }

    pub fn mu_star(&self, m: usize) -> LevelOperator {
        self.op(|x, y| self.sections[m][y] == Some(x))
    }

    pub fn domain(&self, m: usize) -> LevelOperator {
        self.op(|x, y| x == y && self.sections[m].contains(&Some(x)))
    }

    /// Multiplication operator by the indicator of `x`.
    pub fn delta(&self, x: usize) -> LevelOperator {
        self.op(|i, j| i == x && j == x)
    }

    pub fn ops(&self, k: &NumberField, a: &Ideal) -> Result<CrossedOps> {
        let m = self.monoid.classify(k, a)?;
        Ok(CrossedOps { ideal: a.clone(), class: m, sigma: self.sigma(m), e: self.e(m), mu: self.mu(m), mu_star: self.mu_star(m), domain: self.domain(m) })
    }
}

/// Backtracking search over `s_m(y)` in the fibre of `y`, checking
/// `m s_m(y) = y`, `s_m(mn DR_f) in n DR_f` and `s_n(s_m(y)) = s_{mn}(y)`.
fn find_sections(m: &DRMonoid) -> Result<Option<Vec<Vec<Option<usize>>>>> {
    let n = m.len();
    let image: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut img = vec![false; n];
            for x in 0..n {
                img[m.mul(a, x)] = true;
            }
            img
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (a != m.identity(), image[a].iter().filter(|&&b| b).count() != n, a));
    let vars: Vec<(usize, usize)> = order.iter().flat_map(|&a| (0..n).filter(|&y| image[a][y]).map(move |y| (a, y)).collect::<Vec<_>>()).collect();
    let mut s = vec![vec![None; n]; n];
    let mut nodes = 0;
    let ok = search(m, &image, &vars, 0, &mut s, &mut nodes)?;
    Ok(ok.then_some(s))
}

fn search(m: &DRMonoid, image: &[Vec<bool>], vars: &[(usize, usize)], i: usize, s: &mut Vec<Vec<Option<usize>>>, nodes: &mut usize) -> Result<bool> {
    let Some(&(a, y)) = vars.get(i) else {
        return Ok(true);
    };
    for x in (0..m.len()).filter(|&x| m.mul(a, x) == y) {
        *nodes += 1;
        if *nodes > SECTION_NODE_CAP {
            return Err(Error::Ceiling("section search exceeded its node cap".into()));
        }
        s[a][y] = Some(x);
        if consistent(m, image, s) && search(m, image, vars, i + 1, s, nodes)? {
            return Ok(true);
        }
    }
    s[a][y] = None;
    Ok(false)
}

fn consistent(m: &DRMonoid, image: &[Vec<bool>], s: &[Vec<Option<usize>>]) -> bool {
    let n = m.len();
    for a in 0..n {
        for b in 0..n {
            let ab = m.mul(a, b);
            for y in (0..n).filter(|&y| image[ab][y]) {
                let Some(x) = s[a][y] else { continue };
                if !image[b][x] {
                    return false;
                }
                if let (Some(u), Some(v)) = (s[b][x], s[ab][y]) {
                    if u != v {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn crossed_ops(k: &NumberField, f: &Ideal, norm_bound: u64) -> Result<Vec<CrossedOps>> {
    let endo = Endomotive::new(k, f)?;
    enumerate_ideals(k, norm_bound)?.iter().map(|a| endo.ops(k, a)).collect()
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

/// Every crossed-product identity for all integral ideals of norm at most
/// `norm_bound` and all pairs of them.
pub fn verify_relations(k: &NumberField, f: &Ideal, norm_bound: u64) -> Result<Vec<RelationCheck>> {
    let endo = Endomotive::new(k, f)?;
    let ideals = enumerate_ideals(k, norm_bound)?;
    let ops: Vec<CrossedOps> = ideals.iter().map(|a| endo.ops(k, a)).collect::<Result<_>>()?;
    let n = endo.monoid().len();
    let id = IntMatrix::identity(n);
    let mut out = Vec::new();
    let mut check = |relation: String, holds: bool| out.push(RelationCheck { relation, holds });
    let name = |a: &Ideal| format!("{:?}", a.generators().iter().map(|g| k.format_element(g)).collect::<Vec<_>>());
    for o in &ops {
        let a = name(&o.ideal);
        let (s, e, mu, ms, d) = (&o.sigma.matrix, &o.e.matrix, &o.mu.matrix, &o.mu_star.matrix, &o.domain.matrix);
        check(format!("mu_star{a} = mu{a}^T"), *ms == mu.transpose());
        check(format!("e{a}^2 = e{a}"), e.mul(e) == *e);
        let rank = (0..n).filter(|&i| !e[(i, i)].is_zero()).count();
        let image = (0..n).map(|x| endo.monoid().mul(o.class, x)).collect::<std::collections::BTreeSet<_>>().len();
        check(format!("rank e{a} = |a DR_f|"), rank == image);
        check(format!("mu{a} mu_star{a} = e{a}"), mu.mul(ms) == *e);
        check(format!("mu_star{a} mu{a} = domain{a}"), ms.mul(mu) == *d && d.mul(d) == *d);
        check(format!("mu{a} sigma{a} = e{a}"), mu.mul(s) == *e);
        let cov = (0..n).all(|x| {
            let dx = endo.delta(x).matrix;
            let lhs = ms.mul(&dx).mul(mu);
            let sv: Vec<BigInt> = (0..n).map(|y| s.row(y)[x].clone()).collect();
            lhs == IntMatrix::diagonal(&sv).mul(d)
        });
        check(format!("mu_star{a} f mu{a} = sigma{a}(f) domain{a}"), cov);
        if o.ideal.is_unit() {
            check("sigma(1) = mu(1) = 1".into(), *s == id && *mu == id);
        }
    }
    for (i, oa) in ops.iter().enumerate() {
        for ob in &ops[i..] {
            let ab = ideal::mul(k, &oa.ideal, &ob.ideal);
            let c = endo.monoid().classify(k, &ab)?;
            let (a, b) = (name(&oa.ideal), name(&ob.ideal));
            check(format!("sigma{a} sigma{b} = sigma(ab)"), oa.sigma.matrix.mul(&ob.sigma.matrix) == endo.sigma(c).matrix);
            check(format!("mu{a} mu{b} = mu(ab)"), oa.mu.matrix.mul(&ob.mu.matrix) == endo.mu(c).matrix);
            check(format!("mu{a} mu{b} = mu{b} mu{a}"), oa.mu.matrix.mul(&ob.mu.matrix) == ob.mu.matrix.mul(&oa.mu.matrix));
        }
    }
    Ok(out)
}
