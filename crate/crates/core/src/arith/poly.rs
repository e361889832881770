//! Univariate polynomials over the integers and rationals, Sturm sequences
//! and exact sign determination at real algebraic points.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients from the constant term upwards.
/// Normalized: no trailing zero coefficients; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect::<Vec<_>>(), "x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders a rational polynomial in the given variable, highest degree first.
pub fn format_poly(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { "-" } else { "+" });
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else if a.is_integer() {
            out.push_str(&format!("{a}*{mono}"));
        } else {
            out.push_str(&format!("{}*{mono}/{}", a.numer(), a.denom()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Rational polynomial, coefficients from the constant term upwards.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, s: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> QPoly {
        let mut acc = QPoly::constant(BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect())
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let c = &r[k] / &lead;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k - dd + i] -= &c * dc;
                }
                q[k - dd] = c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> QPoly {
        match self.coeffs.last() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient (same roots, same sign up to a positive factor when the
    /// original leading coefficient is positive).
    pub fn to_primitive_int(&self) -> IntPolynomial {
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return IntPolynomial::default();
        }
        IntPolynomial::new(ints.into_iter().map(|c| c / &g).collect())
    }
}

/// Sign of a real number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &BigRational) -> Sign {
        match x.cmp(&BigRational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Sturm sequence of a polynomial.
#[derive(Clone, Debug)]
pub struct Sturm {
    seq: Vec<QPoly>,
}

impl Sturm {
    pub fn new(p: &QPoly) -> Self {
        let mut seq = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(r.neg());
            }
        }
        Sturm { seq }
    }

    /// Sign variations at `x` (zeros skipped).
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut last: Option<Sign> = None;
        let mut count = 0;
        for p in &self.seq {
            let s = Sign::of(&p.eval(x));
            if s == Sign::Zero {
                continue;
            }
            if last.is_some_and(|l| l != s) {
                count += 1;
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// A real root of a squarefree polynomial, isolated by an interval with
/// rational endpoints: either exactly rational, or the unique root in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolatedRoot {
    Exact(BigRational),
    Interval(BigRational, BigRational),
}

/// Cauchy bound: every real root lies in `(-M, M)`.
fn cauchy_bound(p: &QPoly) -> BigRational {
    let n = p.degree().unwrap_or(0);
    let lead = p.coeff(n).abs();
    let m = (0..n).map(|i| p.coeff(i).abs() / &lead).max().unwrap_or_else(BigRational::zero);
    m + BigRational::one()
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// The real roots of a squarefree polynomial, isolated and sorted increasingly.
#[derive(Clone, Debug)]
pub struct RealRoots {
    poly: QPoly,
    sturm: Sturm,
    roots: Vec<IsolatedRoot>,
}

impl RealRoots {
    pub fn isolate(g: &IntPolynomial) -> Result<Self> {
        let p = g.to_rational();
        if p.degree().is_none_or(|d| d == 0) {
            return Ok(RealRoots { sturm: Sturm::new(&p), poly: p, roots: Vec::new() });
        }
        if p.gcd(&p.derivative()).degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
        let sturm = Sturm::new(&p);
        let m = cauchy_bound(&p);
        let mut roots = Vec::new();
        let mut stack = vec![(-m.clone(), m)];
        while let Some((lo, hi)) = stack.pop() {
            let c = sturm.count(&lo, &hi);
            if c == 0 {
                continue;
            }
            if p.eval(&hi).is_zero() && c == 1 {
                roots.push(IsolatedRoot::Exact(hi));
                continue;
            }
            if c == 1 {
                roots.push(IsolatedRoot::Interval(lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / two();
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        roots.sort_by(|a, b| Self::left(a).cmp(Self::left(b)));
        Ok(RealRoots { poly: p, sturm, roots })
    }

    fn left(r: &IsolatedRoot) -> &BigRational {
        match r {
            IsolatedRoot::Exact(x) => x,
            IsolatedRoot::Interval(lo, _) => lo,
        }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[IsolatedRoot] {
        &self.roots
    }

    fn bisect(&self, root: &IsolatedRoot) -> IsolatedRoot {
        match root {
            IsolatedRoot::Exact(_) => root.clone(),
            IsolatedRoot::Interval(lo, hi) => {
                let mid = (lo + hi) / two();
                if self.poly.eval(&mid).is_zero() {
                    IsolatedRoot::Exact(mid)
                } else if self.sturm.count(lo, &mid) == 1 {
                    IsolatedRoot::Interval(lo.clone(), mid)
                } else {
                    IsolatedRoot::Interval(mid, hi.clone())
                }
            }
        }
    }

    /// Refines every isolating interval to width at most `width`.
    pub fn refine_to(&mut self, width: &BigRational) {
        for i in 0..self.roots.len() {
            while let IsolatedRoot::Interval(lo, hi) = &self.roots[i] {
                if &(hi - lo) <= width {
                    break;
                }
                self.roots[i] = self.bisect(&self.roots[i]);
            }
        }
    }

    /// Exact sign of `a` at each real root, in increasing root order.
    pub fn signs(&self, a: &QPoly) -> Vec<Sign> {
        if a.is_zero() {
            return vec![Sign::Zero; self.roots.len()];
        }
        let common = self.poly.gcd(a);
        let common_sturm = (common.degree().unwrap_or(0) > 0).then(|| Sturm::new(&common));
        let a_sf = {
            let g = a.gcd(&a.derivative());
            a.div_rem(&g).0
        };
        let a_sturm = Sturm::new(&a_sf);
        self.roots
            .iter()
            .map(|root| {
                let mut root = root.clone();
                loop {
                    match &root {
                        IsolatedRoot::Exact(x) => return Sign::of(&a.eval(x)),
                        IsolatedRoot::Interval(lo, hi) => {
                            if let Some(cs) = &common_sturm {
                                if cs.count(lo, hi) > 0 {
                                    return Sign::Zero;
                                }
                            }
                            if a_sf.degree() == Some(0) || a_sturm.count(lo, hi) == 0 {
                                return Sign::of(&a.eval(hi));
                            }
                        }
                    }
                    root = self.bisect(&root);
                }
            })
            .collect()
    }
}

/// Exact signs of `a(theta_i)` over the real roots `theta_1 < ... < theta_r`
/// of the squarefree polynomial `g`.
pub fn real_root_signs(g: &IntPolynomial, a: &IntPolynomial) -> Result<Vec<Sign>> {
    Ok(RealRoots::isolate(g)?.signs(&a.to_rational()))
}

/// Integer polynomial helpers used by the number field code.
pub fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder of an integer polynomial modulo a monic integer polynomial.
pub fn int_poly_rem_monic(a: &[BigInt], m: &IntPolynomial) -> Vec<BigInt> {
    let d = m.degree().expect("nonzero modulus");
    let mc = m.coeffs();
    let mut r = a.to_vec();
    while r.len() > d {
        let k = r.len() - 1;
        let c = r[k].clone();
        if !c.is_zero() {
            for i in 0..d {
                r[k - d + i] -= &c * &mc[i];
            }
        }
        r.pop();
    }
    r.resize(d, BigInt::zero());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn signs_sqrt2() {
        let g = IntPolynomial::from_i64(&[-2, 0, 1]);
        let s = real_root_signs(&g, &IntPolynomial::from_i64(&[1, 1])).unwrap();
        assert_eq!(s, vec![Sign::Negative, Sign::Positive]);
        let s = real_root_signs(&g, &IntPolynomial::from_i64(&[3])).unwrap();
        assert_eq!(s, vec![Sign::Positive, Sign::Positive]);
    }

    #[test]
    fn no_real_roots() {
        let g = IntPolynomial::from_i64(&[1, 0, 1]);
        assert!(real_root_signs(&g, &IntPolynomial::from_i64(&[0, 1])).unwrap().is_empty());
    }

    #[test]
    fn zero_sign_and_rational_roots() {
        // g = (x - 1)(x + 2)(x^2 - 3); a = x - 1 vanishes at the root 1.
        let g = IntPolynomial::from_i64(&[6, -3, -5, 1, 1]);
        let s = real_root_signs(&g, &IntPolynomial::from_i64(&[-1, 1])).unwrap();
        assert_eq!(s, vec![Sign::Negative, Sign::Negative, Sign::Zero, Sign::Positive]);
    }

    #[test]
    fn rejects_non_squarefree() {
        let g = IntPolynomial::from_i64(&[1, -2, 1]);
        assert_eq!(real_root_signs(&g, &IntPolynomial::from_i64(&[1])), Err(Error::NotSquarefree));
    }

    #[test]
    fn sturm_counts() {
        let p = IntPolynomial::from_i64(&[-2, 0, 1]).to_rational();
        let s = Sturm::new(&p);
        assert_eq!(s.count(&q(-2), &q(2)), 2);
        assert_eq!(s.count(&q(0), &q(2)), 1);
        assert_eq!(s.count(&q(2), &q(3)), 0);
    }

    #[test]
    fn division() {
        let a = IntPolynomial::from_i64(&[-1, 0, 0, 1]).to_rational();
        let b = IntPolynomial::from_i64(&[-1, 1]).to_rational();
        let (qq, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(qq, IntPolynomial::from_i64(&[1, 1, 1]).to_rational());
    }
}
