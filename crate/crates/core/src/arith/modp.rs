//! Polynomials over prime fields F_p (p < 2^63) and their factorization
//! (squarefree, distinct-degree and equal-degree splitting).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Polynomial over F_p, coefficients from the constant term upwards, trimmed.
pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn addm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    fn subm(&self, a: u64, b: u64) -> u64 {
        self.addm(a, self.p - b % self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow_u(a, self.p - 2)
    }

    fn pow_u(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mulm(r, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().expect("reduced residue fits")
    }

    pub fn from_int_poly(&self, coeffs: &[BigInt]) -> PolyP {
        trim(coeffs.iter().map(|c| self.reduce_int(c)).collect())
    }

    pub fn mul(&self, a: &PolyP, b: &PolyP) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.addm(out[i + j], self.mulm(x, y));
            }
        }
        trim(out)
    }

    pub fn sub(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| self.subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    pub fn div_rem(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut r = a.clone();
        let mut q = vec![0u64; a.len().saturating_sub(db)];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let c = self.mulm(r[k], inv);
            if c != 0 {
                for (i, &bc) in b.iter().enumerate() {
                    r[k - db + i] = self.subm(r[k - db + i], self.mulm(c, bc));
                }
                q[k - db] = c;
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (trim(q), trim(r))
    }

    pub fn rem(&self, a: &PolyP, b: &PolyP) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, a: &PolyP) -> PolyP {
        match a.last() {
            Some(&l) => {
                let inv = self.inv(l);
                a.iter().map(|&c| self.mulm(c, inv)).collect()
            }
            None => Vec::new(),
        }
    }

    pub fn gcd(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, a: &PolyP) -> PolyP {
        trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mulm(c, i as u64 % self.p)).collect())
    }

    pub fn pow_mod(&self, base: &PolyP, e: &BigUint, m: &PolyP) -> PolyP {
        let mut result: PolyP = vec![1];
        result = self.rem(&result, m);
        let mut b = self.rem(base, m);
        for i in 0..e.bits() {
            if e.bit(i) {
                result = self.rem(&self.mul(&result, &b), m);
            }
            b = self.rem(&self.mul(&b, &b), m);
        }
        result
    }

    /// Squarefree decomposition: pairs `(f_i, i)` with `a = lc * prod f_i^i`.
    fn squarefree(&self, a: &PolyP) -> Vec<(PolyP, u32)> {
        let a = self.monic(a);
        if a.len() <= 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let d = self.derivative(&a);
        let mut c = self.gcd(&a, &d);
        let mut w = self.div_rem(&a, &c).0;
        let mut i = 1u32;
        while w.len() > 1 {
            let y = self.gcd(&w, &c);
            let fac = self.div_rem(&w, &y).0;
            if fac.len() > 1 {
                out.push((self.monic(&fac), i));
            }
            w = y;
            c = self.div_rem(&c, &w).0;
            i += 1;
        }
        if c.len() > 1 {
            let p = self.p as usize;
            let root: PolyP = c.iter().step_by(p).copied().collect();
            for (g, j) in self.squarefree(&root) {
                out.push((g, j * self.p as u32));
            }
        }
        out
    }

    fn distinct_degree(&self, f: &PolyP) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: PolyP = vec![0, 1];
        let mut h = self.rem(&x, &f);
        let p = BigUint::from(self.p);
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push((f.clone(), f.len() - 1));
                break;
            }
            h = self.pow_mod(&h, &p, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            if g.len() > 1 {
                out.push((g.clone(), d));
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
            }
        }
        out
    }

    fn equal_degree(&self, f: &PolyP, d: usize, rng: &mut ChaCha20Rng) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![self.monic(f)];
        }
        loop {
            let r: PolyP = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if r.len() <= 1 {
                continue;
            }
            let s = if self.p == 2 {
                let mut t = self.rem(&r, f);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = self.rem(&self.mul(&t, &t), f);
                    // characteristic 2: subtraction is addition
                    acc = self.sub(&acc, &t);
                }
                acc
            } else {
                let e = (num_traits::pow(BigUint::from(self.p), d) - BigUint::one()) / BigUint::from(2u32);
                self.sub(&self.pow_mod(&r, &e, f), &vec![1])
            };
            let g = self.gcd(f, &s);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by (degree, coefficients). Deterministic.
    pub fn factor(&self, a: &PolyP) -> Vec<(PolyP, u32)> {
        let mut rng = ChaCha20Rng::seed_from_u64(self.p ^ 0x5eed);
        let mut out = Vec::new();
        for (sf, e) in self.squarefree(a) {
            for (g, d) in self.distinct_degree(&sf) {
                for h in self.equal_degree(&g, d, &mut rng) {
                    out.push((h, e));
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| (a.len(), a.iter().rev().collect::<Vec<_>>()).cmp(&(b.len(), b.iter().rev().collect::<Vec<_>>())));
        out
    }
}

pub fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Lifts an F_p polynomial to integer coefficients in `[0, p)`.
pub fn lift(a: &PolyP) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn is_zero(a: &PolyP) -> bool {
    a.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(f: &Fp, facs: &[(PolyP, u32)]) -> PolyP {
        let mut acc: PolyP = vec![1];
        for (g, e) in facs {
            for _ in 0..*e {
                acc = f.mul(&acc, g);
            }
        }
        acc
    }

    #[test]
    fn factor_x2_plus_1() {
        let f5 = Fp::new(5);
        let facs = f5.factor(&vec![1, 0, 1]);
        assert_eq!(facs, vec![(vec![2, 1], 1), (vec![3, 1], 1)]);
        let f3 = Fp::new(3);
        assert_eq!(f3.factor(&vec![1, 0, 1]), vec![(vec![1, 0, 1], 1)]);
        let f2 = Fp::new(2);
        assert_eq!(f2.factor(&vec![1, 0, 1]), vec![(vec![1, 1], 2)]);
    }

    #[test]
    fn factor_roundtrip() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let f = Fp::new(p);
            for seed in 0..20u64 {
                let mut rng = ChaCha20Rng::seed_from_u64(seed);
                let deg = rng.gen_range(1..8);
                let mut a: PolyP = (0..deg).map(|_| rng.gen_range(0..p)).collect();
                a.push(1);
                let facs = f.factor(&a);
                assert_eq!(expand(&f, &facs), a, "p={p} seed={seed}");
                for (g, _) in &facs {
                    // irreducible: no nontrivial factorization
                    let sub = f.factor(g);
                    assert_eq!(sub.len(), 1);
                    assert_eq!(sub[0].1, 1);
                }
            }
        }
    }

    #[test]
    fn degree_two_irreducible_over_f2() {
        let f2 = Fp::new(2);
        // x^4 + x + 1 irreducible; (x^2+x+1)^2 = x^4 + x^2 + 1
        assert_eq!(f2.factor(&vec![1, 1, 0, 0, 1]).len(), 1);
        assert_eq!(f2.factor(&vec![1, 0, 1, 0, 1]), vec![(vec![1, 1, 1], 2)]);
    }
}
