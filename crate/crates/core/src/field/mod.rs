//! Number fields `K = Q[x]/(g)`, their rings of integers, elements,
//! embeddings, norms, total positivity and unit groups.
//!
//! Degrees 1 and 2 are fully automatic. For degree three and above the
//! caller supplies an integral basis and unit generators ([`FieldData`]),
//! which are validated rather than trusted.

mod classnum;
pub mod parse;
mod quadratic;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::integers::{factor_integer, primes_up_to};
use crate::arith::matrix::{rat_det, rat_inverse, rat_mul, rat_vec_mul, RatMatrix};
use crate::arith::modp::Fp;
use crate::arith::poly::int_poly_rem_monic;
use crate::arith::{IntMatrix, IntPolynomial, QPoly, RealRoots, Sign};
use crate::error::{Error, Result};

pub use classnum::{class_number_from_forms, narrow_class_number_from_forms};
pub use quadratic::fundamental_unit_coefficients;

/// An element of `K`, as rational coordinates on the integral basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coords: Vec<BigRational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(parse::rational_to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl FieldElement {
    pub fn new(coords: Vec<BigRational>) -> Self {
        FieldElement { coords }
    }

    pub fn from_ints(coords: &[BigInt]) -> Self {
        FieldElement { coords: coords.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        FieldElement { coords: coords.iter().map(|&c| BigRational::from_integer(c.into())).collect() }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if integral.
    pub fn integer_coords(&self) -> Option<Vec<BigInt>> {
        self.is_integral().then(|| self.coords.iter().map(|c| c.to_integer()).collect())
    }

    /// Least positive integer `d` with `d * self` integral.
    pub fn denominator(&self) -> BigInt {
        self.coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, s: &BigRational) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|a| a * s).collect() }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(parse::rational_to_string).collect()
    }
}

/// Torsion generator and fundamental units of `O_K^x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    pub torsion: FieldElement,
    pub torsion_order: u64,
    pub fundamental: Vec<FieldElement>,
}

/// Optional data for fields the builder cannot handle on its own.
#[derive(Clone, Debug, Default)]
pub struct FieldData {
    /// Rows express the integral basis in the power basis of the root.
    pub integral_basis: Option<RatMatrix>,
    pub units: Option<UnitGroup>,
    pub class_number: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    /// `Q(sqrt d)` with `d` squarefree.
    Quadratic {
        d: BigInt,
    },
    General,
}

/// A number field with its maximal order.
#[derive(Clone)]
pub struct NumberField {
    poly: IntPolynomial,
    degree: usize,
    basis: RatMatrix,
    basis_inv: RatMatrix,
    mult: Vec<Vec<Vec<BigInt>>>,
    disc: BigInt,
    signature: (usize, usize),
    real_roots: RealRoots,
    units: UnitGroup,
    class_number: Option<BigInt>,
    kind: FieldKind,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField").field("poly", &self.poly).field("disc", &self.disc).finish()
    }
}

/// Characteristic polynomial of a square rational matrix (Faddeev-LeVerrier),
/// monic, coefficients from the constant term upwards.
pub fn char_poly(a: &RatMatrix) -> QPoly {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m: RatMatrix = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        let mut am = rat_mul(a, &m);
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = am;
        let amk = rat_mul(a, &m);
        let tr: BigRational = (0..n).map(|i| amk[i][i].clone()).sum();
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    QPoly::new(coeffs)
}

fn check_irreducible(g: &IntPolynomial) -> Result<()> {
    let n = g.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(());
    }
    let c0 = &g.coeffs()[0];
    if n <= 3 {
        if c0.is_zero() {
            return Err(Error::Reducible(format!("{g} has the root 0")));
        }
        let mut divisors = vec![BigInt::one()];
        for (p, e) in factor_integer(c0) {
            let mut next = Vec::new();
            for d in &divisors {
                let mut pk = BigInt::one();
                for _ in 0..=e {
                    next.push(d * &pk);
                    pk *= &p;
                }
            }
            divisors = next;
        }
        for d in divisors {
            for r in [d.clone(), -d] {
                if g.eval_int(&r).is_zero() {
                    return Err(Error::Reducible(format!("{g} has the root {r}")));
                }
            }
        }
        return Ok(());
    }
    // Degree patterns modulo good primes: a factor of degree k over Q would
    // appear as a subset sum of the factor degrees modulo every good prime.
    let mut possible: Vec<bool> = (0..=n).map(|_| true).collect();
    let mut used = 0;
    for p in primes_up_to(2000) {
        let fp = Fp::new(p);
        let gp = fp.from_int_poly(g.coeffs());
        if fp.gcd(&gp, &fp.derivative(&gp)).len() > 1 {
            continue;
        }
        let facs = fp.factor(&gp);
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for (h, _) in &facs {
            let d = h.len() - 1;
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for k in 0..=n {
            possible[k] &= sums[k];
        }
        used += 1;
        if (1..n).all(|k| !possible[k]) {
            return Ok(());
        }
        if used >= 50 {
            break;
        }
    }
    Err(Error::CannotCertify(g.to_string()))
}

impl NumberField {
    /// Builds `K = Q[x]/(g)`. For degree at most two every piece of data is
    /// computed; beyond that `data` must provide an integral basis and units.
    pub fn new(g: IntPolynomial, data: FieldData) -> Result<Self> {
        let n = g.degree().ok_or_else(|| Error::InvalidData("zero polynomial".into()))?;
        if n == 0 {
            return Err(Error::InvalidData("defining polynomial must have degree at least 1".into()));
        }
        if !g.is_monic() {
            return Err(Error::InvalidData(format!("{g} is not monic")));
        }
        check_irreducible(&g)?;
        let real_roots = RealRoots::isolate(&g)?;
        let r1 = real_roots.len();
        let signature = (r1, (n - r1) / 2);
        let (basis, kind) = match n {
            1 => (vec![vec![BigRational::one()]], FieldKind::Rational),
            2 => {
                let (b, d) = quadratic::integral_basis(&g);
                (b, FieldKind::Quadratic { d })
            }
            _ => (data.integral_basis.clone().ok_or_else(|| Error::MissingData("integral basis required for degree >= 3".into()))?, FieldKind::General),
        };
        if basis.len() != n || basis.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidData("integral basis must be n x n".into()));
        }
        let basis_inv = rat_inverse(&basis).ok_or_else(|| Error::InvalidData("integral basis is singular".into()))?;
        let mut field = NumberField {
            poly: g,
            degree: n,
            basis,
            basis_inv,
            mult: Vec::new(),
            disc: BigInt::zero(),
            signature,
            real_roots,
            units: UnitGroup { torsion: FieldElement::from_i64(&[]), torsion_order: 1, fundamental: Vec::new() },
            class_number: data.class_number.clone(),
            kind,
        };
        field.build_mult_table()?;
        let one = field.one();
        if !one.is_integral() {
            return Err(Error::InvalidData("integral basis does not contain 1".into()));
        }
        let trace_form: RatMatrix =
            (0..n).map(|i| (0..n).map(|j| field.trace(&field.mul(&field.basis_element(i), &field.basis_element(j)))).collect()).collect();
        let disc = rat_det(&trace_form);
        if !disc.is_integer() || disc.is_zero() {
            return Err(Error::InvalidData("degenerate trace form".into()));
        }
        field.disc = disc.to_integer();
        field.units = match &field.kind {
            FieldKind::Rational => UnitGroup { torsion: FieldElement::from_i64(&[-1]), torsion_order: 2, fundamental: Vec::new() },
            FieldKind::Quadratic { d } => quadratic::unit_group(&field, d),
            FieldKind::General => {
                let u = data.units.clone().ok_or_else(|| Error::MissingData("unit generators required for degree >= 3".into()))?;
                field.validate_units(&u)?;
                u
            }
        };
        if field.class_number.is_none() {
            field.class_number = match &field.kind {
                FieldKind::Rational => Some(BigInt::one()),
                FieldKind::Quadratic { .. } => Some(class_number_from_forms(&field.disc, field.fundamental_unit_norm())),
                FieldKind::General => None,
            };
        }
        Ok(field)
    }

    /// Convenience constructor from a polynomial string in `x`.
    pub fn from_str_poly(s: &str) -> Result<Self> {
        Self::new(parse_defining_poly(s)?, FieldData::default())
    }

    pub fn rationals() -> Arc<Self> {
        Arc::new(Self::from_str_poly("x").expect("Q is a field"))
    }

    fn build_mult_table(&mut self) -> Result<()> {
        let n = self.degree;
        let mut mult = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let pi = QPoly::new(self.basis[i].clone());
                let pj = QPoly::new(self.basis[j].clone());
                let prod = self.reduce_power(&pi.mul(&pj));
                let coords = rat_vec_mul(&prod, &self.basis_inv);
                if coords.iter().any(|c| !c.is_integer()) {
                    return Err(Error::InvalidData("basis is not closed under multiplication".into()));
                }
                let ints: Vec<BigInt> = coords.into_iter().map(|c| c.to_integer()).collect();
                mult[i][j] = ints.clone();
                mult[j][i] = ints;
            }
        }
        self.mult = mult;
        Ok(())
    }

    fn validate_units(&self, u: &UnitGroup) -> Result<()> {
        let (r1, r2) = self.signature;
        if u.fundamental.len() != r1 + r2 - 1 {
            return Err(Error::InvalidData(format!("expected {} fundamental units, got {}", r1 + r2 - 1, u.fundamental.len())));
        }
        for e in u.fundamental.iter().chain(std::iter::once(&u.torsion)) {
            if e.coords.len() != self.degree || !e.is_integral() {
                return Err(Error::InvalidData(format!("unit {e:?} is not an algebraic integer")));
            }
            if self.norm(e).abs() != BigRational::one() {
                return Err(Error::InvalidData(format!("unit {e:?} has norm {}", self.norm(e))));
            }
        }
        if u.torsion_order == 0 || !self.pow(&u.torsion, u.torsion_order).eq(&self.one()) {
            return Err(Error::InvalidData("torsion generator has the wrong order".into()));
        }
        for (q, _) in factor_integer(&BigInt::from(u.torsion_order)) {
            let e = u.torsion_order / q.to_u64().unwrap_or(1);
            if self.pow(&u.torsion, e) == self.one() {
                return Err(Error::InvalidData("torsion generator has smaller order than stated".into()));
            }
        }
        Ok(())
    }

    /// Reduces a rational polynomial in the root modulo `g`, returning the
    /// length-`n` coefficient vector in the power basis.
    fn reduce_power(&self, p: &QPoly) -> Vec<BigRational> {
        let r = p.rem(&self.poly.to_rational());
        (0..self.degree).map(|i| r.coeff(i)).collect()
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.disc
    }

    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn kind(&self) -> &FieldKind {
        &self.kind
    }

    pub fn units(&self) -> &UnitGroup {
        &self.units
    }

    pub fn class_number(&self) -> Option<&BigInt> {
        self.class_number.as_ref()
    }

    pub fn integral_basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// Multiplication table: coordinates of `b_i * b_j`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[BigInt] {
        &self.mult[i][j]
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coords: vec![BigRational::zero(); self.degree] }
    }

    pub fn one(&self) -> FieldElement {
        let mut e = vec![BigRational::zero(); self.degree];
        e[0] = BigRational::one();
        FieldElement { coords: rat_vec_mul(&e, &self.basis_inv) }
    }

    pub fn basis_element(&self, i: usize) -> FieldElement {
        let mut c = vec![BigRational::zero(); self.degree];
        c[i] = BigRational::one();
        FieldElement { coords: c }
    }

    pub fn from_int(&self, k: &BigInt) -> FieldElement {
        self.one().scale(&BigRational::from_integer(k.clone()))
    }

    pub fn from_rational(&self, k: &BigRational) -> FieldElement {
        self.one().scale(k)
    }

    /// Element given by a rational polynomial in the root `t` of `g`.
    pub fn from_power_basis(&self, p: &QPoly) -> FieldElement {
        FieldElement { coords: rat_vec_mul(&self.reduce_power(p), &self.basis_inv) }
    }

    pub fn to_power_basis(&self, x: &FieldElement) -> QPoly {
        QPoly::new(rat_vec_mul(&x.coords, &self.basis))
    }

    /// Parses an element written in the root `t`, e.g. `(1+t)/2`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        Ok(self.from_power_basis(&parse::parse_poly(s, 't')?))
    }

    pub fn format_element(&self, x: &FieldElement) -> String {
        crate::arith::poly::format_poly(self.to_power_basis(x).coeffs(), "t")
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y.coords[j].is_zero() {
                    continue;
                }
                let s = &x.coords[i] * &y.coords[j];
                for (o, c) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        FieldElement { coords: out }
    }

    /// Product of integral elements given by integer coordinates.
    pub fn mul_int(&self, x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree;
        let mut out = vec![BigInt::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let s = &x[i] * &y[j];
                for (o, c) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &FieldElement, e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Matrix of multiplication by `x` on the integral basis (row `i` holds
    /// the coordinates of `x * b_i`).
    pub fn mult_matrix(&self, x: &FieldElement) -> RatMatrix {
        (0..self.degree).map(|i| self.mul(x, &self.basis_element(i)).coords).collect()
    }

    /// Integer multiplication matrix of an integral element.
    pub fn mult_matrix_int(&self, x: &[BigInt]) -> IntMatrix {
        let rows = (0..self.degree)
            .map(|i| {
                let mut e = vec![BigInt::zero(); self.degree];
                e[i] = BigInt::one();
                self.mul_int(x, &e)
            })
            .collect();
        IntMatrix::from_rows(self.degree, rows)
    }

    pub fn norm(&self, x: &FieldElement) -> BigRational {
        rat_det(&self.mult_matrix(x))
    }

    pub fn trace(&self, x: &FieldElement) -> BigRational {
        let m = self.mult_matrix(x);
        (0..self.degree).map(|i| m[i][i].clone()).sum()
    }

    /// `(norm, trace)` of `x`.
    pub fn norm_trace(&self, x: &FieldElement) -> (BigRational, BigRational) {
        (self.norm(x), self.trace(x))
    }

    pub fn char_poly(&self, x: &FieldElement) -> QPoly {
        char_poly(&self.mult_matrix(x))
    }

    pub fn inverse(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let inv = rat_inverse(&self.mult_matrix(x)).ok_or(Error::ZeroElement)?;
        Ok(FieldElement { coords: rat_vec_mul(&self.one().coords, &inv) })
    }

    /// Signs of `x` at the real embeddings, in increasing order of the real
    /// roots of `g`.
    pub fn real_signs(&self, x: &FieldElement) -> Vec<Sign> {
        self.real_roots.signs(&self.to_power_basis(x))
    }

    /// True iff every real embedding of `x` is positive (vacuous without real places).
    pub fn is_totally_positive(&self, x: &FieldElement) -> Result<bool> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.real_signs(x).iter().all(|&s| s == Sign::Positive))
    }

    /// Real roots of `g` (one per real place).
    pub fn real_roots(&self) -> &RealRoots {
        &self.real_roots
    }

    /// Norm of the fundamental unit for real quadratic fields.
    pub fn fundamental_unit_norm(&self) -> i32 {
        match self.units.fundamental.first() {
            Some(e) if self.degree == 2 => {
                if self.norm(e).is_negative() {
                    -1
                } else {
                    1
                }
            }
            _ => 1,
        }
    }

    /// Minkowski bound rounded up (used only as a starting point for searches).
    pub fn minkowski_bound(&self) -> u64 {
        let n = self.degree as f64;
        let r2 = self.signature.1 as i32;
        let mut fact = 1.0;
        for i in 1..=self.degree {
            fact *= i as f64;
        }
        let disc = self.disc.abs().to_f64().unwrap_or(f64::MAX);
        let b = fact / n.powf(n) * (4.0 / std::f64::consts::PI).powi(r2) * disc.sqrt();
        b.ceil().max(1.0) as u64
    }

    /// Integer coordinates of an element given as an integer polynomial in
    /// the root, when integral.
    pub fn from_int_poly(&self, coeffs: &[BigInt]) -> FieldElement {
        let r = int_poly_rem_monic(coeffs, &self.poly);
        self.from_power_basis(&QPoly::new(r.into_iter().map(BigRational::from_integer).collect()))
    }
}

/// Parses and validates a defining polynomial written in `x`.
pub fn parse_defining_poly(s: &str) -> Result<IntPolynomial> {
    let q = parse::parse_poly(s, 'x')?;
    if q.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(Error::InvalidData(format!("{s:?} has non-integer coefficients")));
    }
    Ok(IntPolynomial::new(q.coeffs().iter().map(|c| c.to_integer()).collect()))
}

/// Parses the JSON sidecar carrying an integral basis, units and class number.
///
/// ```json
/// {"integral_basis": [["1","0","0"], ["0","1","0"], ["0","1/2","1/2"]],
///  "units": {"torsion": {"element": ["-1","0","0"], "order": 2},
///            "fundamental": [["1","1","0"]]},
///  "class_number": "1"}
/// ```
/// Unit coordinates refer to the integral basis.
pub fn parse_sidecar(json: &serde_json::Value) -> Result<FieldData> {
    let rat_row = |v: &serde_json::Value| -> Result<Vec<BigRational>> {
        v.as_array()
            .ok_or_else(|| Error::Parse("expected an array of rationals".into()))?
            .iter()
            .map(|x| match x {
                serde_json::Value::String(s) => parse::parse_rational(s),
                serde_json::Value::Number(n) => parse::parse_rational(&n.to_string()),
                _ => Err(Error::Parse("expected rational string".into())),
            })
            .collect()
    };
    let mut data = FieldData::default();
    if let Some(b) = json.get("integral_basis") {
        let rows = b.as_array().ok_or_else(|| Error::Parse("integral_basis must be an array".into()))?;
        data.integral_basis = Some(rows.iter().map(rat_row).collect::<Result<_>>()?);
    }
    if let Some(u) = json.get("units") {
        let t = u.get("torsion").ok_or_else(|| Error::Parse("units.torsion missing".into()))?;
        let torsion = FieldElement::new(rat_row(t.get("element").ok_or_else(|| Error::Parse("units.torsion.element missing".into()))?)?);
        let order = t
            .get("order")
            .and_then(|o| o.as_u64().or_else(|| o.as_str().and_then(|s| s.parse().ok())))
            .ok_or_else(|| Error::Parse("units.torsion.order missing".into()))?;
        let fundamental = match u.get("fundamental") {
            Some(f) => f
                .as_array()
                .ok_or_else(|| Error::Parse("units.fundamental must be an array".into()))?
                .iter()
                .map(|e| rat_row(e).map(FieldElement::new))
                .collect::<Result<_>>()?,
            None => Vec::new(),
        };
        data.units = Some(UnitGroup { torsion, torsion_order: order, fundamental });
    }
    if let Some(h) = json.get("class_number") {
        let s = h.as_str().map(str::to_string).unwrap_or_else(|| h.to_string());
        data.class_number = Some(s.parse().map_err(|_| Error::Parse("class_number must be an integer".into()))?);
    }
    Ok(data)
}

#[cfg(test)]
mod tests;
