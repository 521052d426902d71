//! Dense exact linear algebra over `Q`.
//!
//! The workhorse is [`Matrix::rref`]; nullspaces, ranks, inverses and
//! affine solution sets are all read off the reduced row echelon form.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{self, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, s: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    /// Builds from row vectors. All rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational::int(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other` with `self`'s index outermost.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            let a = &self[(i / r2, j / c2)];
            if a.is_zero() {
                Rational::zero()
            } else {
                a * &other[(i % r2, j % c2)]
            }
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Gauss-Jordan elimination. Pivots are taken in column order, using the
    /// first row with a nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            let pivot_row: Vec<(usize, Rational)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &pivot_row {
                    let nv = &m[(i, *j)] - &f * v;
                    m[(i, *j)] = nv;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column, with a 1 in
    /// that free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let Rref { matrix, pivots } = self.rref();
        free_columns(self.cols, &pivots)
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Exact inverse, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| matrix[(i, n + j)].clone()))
    }

    /// Determinant by fraction-free elimination on the integer-scaled matrix.
    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let den = rational::common_denominator(self.data.iter());
        let ints: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|q| q.numer() * (&den / q.denom()))
                    .collect()
            })
            .collect();
        let det = bareiss_determinant(ints);
        Rational::new(det, num_traits::pow(den, n))
    }

    /// Solves `self·x = rhs`. Returns `None` when inconsistent, otherwise a
    /// particular solution (free variables zero) and a nullspace basis.
    pub fn solve_affine(&self, rhs: &[Rational]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
        assert_eq!(rhs.len(), self.rows);
        let b = Matrix::from_rows(rhs.iter().map(|x| vec![x.clone()]).collect(), 1);
        let Rref { matrix, pivots } = self.hstack(&b).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = matrix[(r, self.cols)].clone();
        }
        let kernel = free_columns(self.cols, &pivots)
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(r, f)].clone();
                }
                v
            })
            .collect();
        Some((particular, kernel))
    }

    /// Integer form `(M, d)` with `self = M / d` and `d` the least common
    /// denominator.
    pub fn to_integer(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let den = rational::common_denominator(self.data.iter());
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|q| q.numer() * (&den / q.denom()))
                    .collect()
            })
            .collect();
        (rows, den)
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..cols).filter(move |c| !pivots.contains(c))
}

/// True when `span(a) == span(b)` (rows of each list are the spanning
/// vectors; all of the same length `dim`).
pub fn same_span(a: &[Vec<Rational>], b: &[Vec<Rational>], dim: usize) -> bool {
    let ra = rank_of(a, dim);
    let rb = rank_of(b, dim);
    if ra != rb {
        return false;
    }
    let mut both = a.to_vec();
    both.extend(b.iter().cloned());
    rank_of(&both, dim) == ra
}

pub fn rank_of(vectors: &[Vec<Rational>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_rows(vectors.to_vec(), dim).rank()
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Characteristic polynomial `det(λI − M)` of an integer matrix by
/// Berkowitz's division-free algorithm. Coefficients are returned in
/// ascending degree; the leading coefficient is 1.
pub fn berkowitz_charpoly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    // Column vector of coefficients, descending degree.
    let mut vect: Vec<BigInt> = vec![BigInt::one()];
    if n > 0 {
        vect = vec![BigInt::one(), -m[0][0].clone()];
    }
    for r in 1..n {
        // Submatrix A = m[0..r][0..r], R = m[r][0..r], C = m[0..r][r], a = m[r][r].
        let a = &m[r][r];
        // Toeplitz column: [1, -a, -R C, -R A C, ..., -R A^{r-1} C]
        let mut col: Vec<BigInt> = vec![BigInt::one(), -a.clone()];
        let mut power: Vec<BigInt> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let rc: BigInt = (0..r).map(|j| &m[r][j] * &power[j]).sum();
            col.push(-rc);
            power = (0..r)
                .map(|i| (0..r).map(|j| &m[i][j] * &power[j]).sum())
                .collect();
        }
        // new_vect = T * vect, where T is the lower-triangular Toeplitz matrix
        // of size (r+2) x (r+1) generated by `col`.
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate() {
                if i >= j {
                    *slot += &col[i - j] * v;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    vect
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(rational::fmt).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            let body: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[{}]", body.join(" "))?;
            if i + 1 < self.rows {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn rref_and_nullspace() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn determinant_matches_cofactor() {
        let m = Matrix::from_rows(
            vec![
                vec![ratio(1, 2), int(3), int(0)],
                vec![int(-1), ratio(2, 3), int(4)],
                vec![int(5), int(0), ratio(-1, 5)],
            ],
            3,
        );
        // cofactor expansion along the first row
        let expected = ratio(1, 2) * (ratio(2, 3) * ratio(-1, 5) - int(0))
            - int(3) * (int(-1) * ratio(-1, 5) - int(4) * int(5));
        assert_eq!(m.determinant(), expected);
    }

    #[test]
    fn affine_solve_inconsistent() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert!(m.solve_affine(&[int(1), int(2)]).is_none());
        let (p, k) = m.solve_affine(&[int(1), int(1)]).unwrap();
        assert_eq!(m.mul_vec(&p), vec![int(1), int(1)]);
        assert_eq!(k.len(), 1);
    }

    #[test]
    fn berkowitz_small() {
        // [[2,1],[1,2]] has char poly x^2 - 4x + 3
        let m = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(2)],
        ];
        let cp = berkowitz_charpoly(&m);
        assert_eq!(cp, vec![3, -4, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
    }
}
