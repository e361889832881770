//! Finite-level endomotive: the spectrum of `E_f` as a `DR_f`-set, the level
//! maps between spectra, crossed-product operators, and ideal counting.

mod crossed;
mod ggc;
mod zeta;

pub use crossed::{crossed_ops, verify_relations, CrossedOps, Endomotive, LevelOperator, RelationCheck};
pub use ggc::{equivariant_bijection, ggc_check_q, GgcWitness, GGC_MAX_LEVEL};
pub use zeta::{euler_coefficients, zeta_coefficients, ZetaCoefficients};

use crate::dr::{dr_project, dr_structural, DRMonoid};
use crate::error::{Error, Result};
use crate::field::NumberField;
use crate::ideal::{enumerate_ideals, Ideal};

/// Norm bound on the ideals used to test level-map equivariance.
pub const LEVEL_MAP_NORM_BOUND: u64 = 20;

/// A finite set with an action of `DR_f`, stored as `action[m][x] = m * x`.
#[derive(Clone, Debug)]
pub struct DRSet {
    monoid: DRMonoid,
    action: Vec<Vec<usize>>,
}

impl DRSet {
    /// Validates identity and compositivity on the full table.
    pub fn new(monoid: DRMonoid, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = monoid.len();
        if action.len() != n {
            return Err(Error::InvalidData("action needs one row per monoid element".into()));
        }
        let size = action.first().map_or(0, Vec::len);
        if action.iter().any(|row| row.len() != size || row.iter().any(|&x| x >= size)) {
            return Err(Error::InvalidData("action rows must map the carrier to itself".into()));
        }
        let e = monoid.identity();
        if (0..size).any(|x| action[e][x] != x) {
            return Err(Error::Verification("identity does not act trivially".into()));
        }
        for a in 0..n {
            for b in 0..n {
                let ab = monoid.mul(a, b);
                if (0..size).any(|x| action[ab][x] != action[a][action[b][x]]) {
                    return Err(Error::Verification(format!("action is not compositive at ({a}, {b})")));
                }
            }
        }
        Ok(DRSet { monoid, action })
    }

    pub fn monoid(&self) -> &DRMonoid {
        &self.monoid
    }

    pub fn len(&self) -> usize {
        self.action.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    /// `[a] * x` for an integral ideal `a`.
    pub fn act(&self, k: &NumberField, a: &Ideal, x: usize) -> Result<usize> {
        Ok(self.action[self.monoid.classify(k, a)?][x])
    }
}

/// The regular `DR_f`-set.
pub fn spectrum(k: &NumberField, f: &Ideal) -> Result<DRSet> {
    let m = dr_structural(k, f)?;
    let action = m.table().to_vec();
    DRSet::new(m, action)
}

/// The surjection `spectrum(f') -> spectrum(f)` for `f | f'`, with
/// equivariance checked against every integral ideal of norm at most
/// [`LEVEL_MAP_NORM_BOUND`].
pub fn level_map(k: &NumberField, source: &DRSet, target: &DRSet) -> Result<Vec<usize>> {
    let map = dr_project(k, source.monoid(), target.monoid())?;
    for a in enumerate_ideals(k, LEVEL_MAP_NORM_BOUND)? {
        let (s, t) = (source.monoid().classify(k, &a)?, target.monoid().classify(k, &a)?);
        for x in 0..source.len() {
            if map[source.action[s][x]] != target.action[t][map[x]] {
                return Err(Error::Verification(format!("level map is not equivariant for {a:?}")));
            }
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests;
