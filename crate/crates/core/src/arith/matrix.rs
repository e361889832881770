//! Dense integer matrices with Hermite and Smith normal forms, plus the
//! small amount of exact rational linear algebra the number field code needs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major matrix of arbitrary precision integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())).finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        IntMatrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant of a square matrix (fraction-free Bareiss elimination).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

fn row_sub_mul(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        *x -= q * y;
    }
}

/// Row Hermite normal form: upper triangular (echelon), positive pivots,
/// entries above each pivot reduced into `[0, pivot)`, zero rows dropped.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = m.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let mut r = 0;
    for c in 0..cols {
        if r >= a.len() {
            break;
        }
        loop {
            let pivot = (r..a.len()).filter(|&i| !a[i][c].is_zero()).min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = pivot else { break };
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..a.len() {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                row_sub_mul(&mut a, i, r, &q);
                if !a[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if r < a.len() && !a[r][c].is_zero() {
            if a[r][c].is_negative() {
                for x in a[r].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = a[i][c].div_floor(&a[r][c]);
                row_sub_mul(&mut a, i, r, &q);
            }
            r += 1;
        }
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|x| !x.is_zero()));
    IntMatrix::from_rows(cols, a)
}

/// Pivot column of each row of a matrix in echelon form.
pub fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    (0..h.rows).map(|i| h.row(i).iter().position(|x| !x.is_zero()).expect("zero row in echelon form")).collect()
}

/// Reduces `v` modulo the lattice spanned by the rows of `h` (which must be
/// in HNF). Returns the canonical remainder; `v` is in the lattice iff the
/// remainder is zero.
pub fn hnf_reduce(h: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    for (i, p) in pivot_columns(h).into_iter().enumerate() {
        let q = v[p].div_floor(&h[(i, p)]);
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(h.row(i)) {
                *x -= &q * y;
            }
        }
    }
    v
}

/// Membership of an integer vector in the row lattice of an HNF matrix.
pub fn hnf_contains(h: &IntMatrix, v: &[BigInt]) -> bool {
    hnf_reduce(h, v).iter().all(Zero::is_zero)
}

/// Smith normal form `d = u * m * v` with unimodular `u` and `v`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Diagonal entries `d_1 | d_2 | ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Smith normal form with transforms.
pub fn snf(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.to_rows();
    let mut u = IntMatrix::identity(rows).to_rows();
    let mut v = IntMatrix::identity(cols).to_rows(); // stored transposed: v[j] is column j
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish_snf(a, u, v, rows, cols);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            v.swap(t, pj);
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_sub_mul(&mut a, i, t, &q);
                row_sub_mul(&mut u, i, t, &q);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * s;
                }
                row_sub_mul(&mut v, j, t, &q);
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    row_sub_mul(&mut a, t, i, &-BigInt::one());
                    row_sub_mul(&mut u, t, i, &-BigInt::one());
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    finish_snf(a, u, v, rows, cols)
}

fn finish_snf(a: Vec<Vec<BigInt>>, u: Vec<Vec<BigInt>>, v: Vec<Vec<BigInt>>, rows: usize, cols: usize) -> Smith {
    Smith { d: IntMatrix::from_rows(cols, a), u: IntMatrix::from_rows(rows, u), v: IntMatrix::from_rows(cols, v).transpose() }
}

/// Integer kernel of `x -> x * m mod modulus` (row vectors): the lattice of
/// all `x` in `Z^rows` with `x * m` divisible by `modulus` entrywise, in HNF.
pub fn kernel_mod(m: &IntMatrix, modulus: &BigInt) -> IntMatrix {
    let (r, c) = (m.rows, m.cols);
    let mut rows = Vec::with_capacity(r + c);
    for i in 0..r {
        let mut row = m.row(i).to_vec();
        row.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
        rows.push(row);
    }
    for i in 0..c {
        let mut row = vec![BigInt::zero(); c + r];
        row[i] = modulus.clone();
        rows.push(row);
    }
    let h = hnf(&IntMatrix::from_rows(c + r, rows));
    let kernel: Vec<Vec<BigInt>> = h.to_rows().into_iter().filter(|row| row[..c].iter().all(Zero::is_zero)).map(|row| row[c..].to_vec()).collect();
    hnf(&IntMatrix::from_rows(r, kernel))
}

/// Square matrix of rationals, row-major.
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn rat_det(m: &RatMatrix) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let s = &f * &a[k][j];
                a[i][j] -= s;
            }
        }
    }
    det
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn rat_inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(p, k);
        let pivot = a[k][k].clone();
        for x in a[k].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * n {
                let s = &f * &a[k][j];
                a[i][j] -= s;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = vec![vec![BigRational::zero(); p]; n];
    for i in 0..n {
        for k in 0..m {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Row vector times matrix.
pub fn rat_vec_mul(v: &[BigRational], m: &RatMatrix) -> Vec<BigRational> {
    let p = m.first().map_or(0, |r| r.len());
    let mut out = vec![BigRational::zero(); p];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            *o += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(hnf(&IntMatrix::identity(2)), IntMatrix::identity(2));
        assert_eq!(hnf(&m(&[&[2, 0], &[1, 1]])), m(&[&[1, 1], &[0, 2]]));
        assert_eq!(hnf(&m(&[&[0, 0], &[3, 6]])), m(&[&[3, 6]]));
    }

    #[test]
    fn snf_examples() {
        let s = snf(&m(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.u.mul(&m(&[&[2, 0], &[0, 3]])).mul(&s.v), s.d);
        let s = snf(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
        let s = snf(&m(&[&[2, 0], &[0, 2]]));
        assert_eq!(s.d, m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn snf_rectangular() {
        let a = m(&[&[4, 6, 2], &[2, 8, 10]]);
        let s = snf(&a);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(2)]);
        assert!(s.u.det().abs().is_one() && s.v.det().abs().is_one());
    }

    #[test]
    fn determinant() {
        assert_eq!(m(&[&[2, 1], &[7, 4]]).det(), BigInt::from(1));
        assert_eq!(m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).det(), BigInt::from(-2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn kernel_mod_small() {
        // x * [2] == 0 mod 6  <=>  x in 3Z
        let k = kernel_mod(&m(&[&[2]]), &BigInt::from(6));
        assert_eq!(k, m(&[&[3]]));
    }

    #[test]
    fn rational_inverse() {
        let a: RatMatrix = vec![
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(1.into())],
            vec![BigRational::from_integer(1.into()), BigRational::from_integer(1.into())],
        ];
        let inv = rat_inverse(&a).unwrap();
        let id = rat_mul(&a, &inv);
        assert!(id[0][0].is_one() && id[0][1].is_zero() && id[1][1].is_one());
        assert_eq!(rat_det(&a), BigRational::one());
    }
}
