//! Exact dense linear algebra over the rationals.
//!
//! Rank, determinants and echelon forms are computed with fraction-free
//! (Bareiss) elimination on an integer copy of the matrix: every row is first
//! scaled by the least common multiple of its denominators, which changes
//! neither the rank nor the row space. Pivots are chosen as the first nonzero
//! entry in column order, so results are deterministic.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modp;

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Result of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Solved {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
    NoSolution,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

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

    /// Builds a matrix from integer entries given row-major.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count does not match shape"
        );
        Self {
            rows,
            cols,
            data: entries.iter().map(|&v| int(v)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are `columns`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Shape(
                "column length does not match row count".into(),
            ));
        }
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn column_vector(v: Vec<Rational>) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn row_vector(v: Vec<Rational>) -> Self {
        Self {
            rows: 1,
            cols: v.len(),
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| (&self[(i, j)] + &self[(j, i)]).is_zero()))
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

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match column count"
        );
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Horizontal concatenation. Panics on row-count mismatch.
    pub fn hstack(blocks: &[&RationalMatrix]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack row mismatch");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            for i in 0..rows {
                for j in 0..b.cols {
                    m[(i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation. Panics on column-count mismatch.
    pub fn vstack(blocks: &[&RationalMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack column mismatch"
        );
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend(b.data.iter().cloned());
        }
        Self { rows, cols, data }
    }

    /// Rows `row_idx` restricted to all columns.
    pub fn select_rows(&self, row_idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(row_idx.len() * self.cols);
        for &i in row_idx {
            data.extend(self.row(i).iter().cloned());
        }
        Self {
            rows: row_idx.len(),
            cols: self.cols,
            data,
        }
    }

    fn echelon(&self) -> Echelon {
        Echelon::of(self)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Rank of the reduction modulo the prime `2^61 - 1`, a lower bound for
    /// the rank over ℚ. `None` when a denominator vanishes modulo the prime.
    pub fn rank_mod_prime(&self) -> Option<usize> {
        let mut m = self
            .data
            .iter()
            .map(modp::reduce)
            .collect::<Option<Vec<u64>>>()?;
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(rank * cols + j, piv * cols + j);
            }
            let inv = modp::inv(m[rank * cols + c]);
            for r in rank + 1..rows {
                let f = modp::mul(m[r * cols + c], inv);
                if f == 0 {
                    continue;
                }
                for j in c..cols {
                    m[r * cols + j] = modp::sub(m[r * cols + j], modp::mul(f, m[rank * cols + j]));
                }
            }
            rank += 1;
        }
        Some(rank)
    }

    /// Basis of the right null space. Empty iff the matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.echelon().kernel(self.cols)
    }

    /// Basis of `{ y : y^T A = 0 }`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.transpose().kernel_basis()
    }

    /// A basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Vec<Vec<Rational>> {
        self.echelon()
            .pivots
            .iter()
            .map(|&j| self.column(j))
            .collect()
    }

    /// Solves `self * x = b`, returning a particular solution together with a
    /// basis of the homogeneous solutions.
    pub fn solve(&self, b: &[Rational]) -> Result<LinearSolution> {
        if b.len() != self.rows {
            return Err(Error::Shape(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let augmented = Self::hstack(&[self, &Self::column_vector(b.to_vec())]);
        let ech = augmented.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(LinearSolution::NoSolution);
        }
        let mut x = vec![Rational::zero(); self.cols + 1];
        x[self.cols] = -Rational::one();
        ech.back_substitute(&mut x);
        x.truncate(self.cols);
        Ok(LinearSolution::Solved {
            particular: x,
            nullspace: ech.kernel(self.cols),
        })
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let ech = self.echelon();
        if ech.pivots.len() < n {
            return Ok(Rational::zero());
        }
        // The last Bareiss pivot is the determinant of the row-scaled matrix.
        let mut det = Rational::from_integer(ech.rows[n - 1][n - 1].clone());
        if ech.swaps % 2 == 1 {
            det = -det;
        }
        let scale = ech.row_scales.iter().fold(BigInt::one(), |acc, s| acc * s);
        Ok(det / Rational::from_integer(scale))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&i| !a[(i, c)].is_zero())
                .ok_or(Error::Singular)?;
            if p != c {
                a.swap_rows(p, c);
                inv.swap_rows(p, c);
            }
            let piv = a[(c, c)].recip();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] * &piv;
                inv[(c, j)] = &inv[(c, j)] * &piv;
            }
            for i in 0..n {
                if i == c || a[(i, c)].is_zero() {
                    continue;
                }
                let factor = a[(i, c)].clone();
                for j in 0..n {
                    let da = &factor * &a[(c, j)];
                    let di = &factor * &inv[(c, j)];
                    a[(i, j)] -= da;
                    inv[(i, j)] -= di;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Pfaffian of a 4x4 skew-symmetric matrix laid out as
    ///
    /// ```text
    /// [ 0 -a -b -c ]
    /// [ a  0 -d -e ]
    /// [ b  d  0 -f ]
    /// [ c  e  f  0 ]
    /// ```
    ///
    /// returned as `b*e - a*f - d*c`. Its square is the determinant.
    pub fn pfaffian4(&self) -> Result<Rational> {
        if self.shape() != (4, 4) {
            return Err(Error::Shape(format!(
                "pfaffian4 needs a 4x4 matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.is_skew_symmetric() {
            return Err(Error::NotSkewSymmetric);
        }
        let a = -&self[(0, 1)];
        let b = -&self[(0, 2)];
        let c = -&self[(0, 3)];
        let d = -&self[(1, 2)];
        let e = -&self[(1, 3)];
        let f = -&self[(2, 3)];
        Ok(&b * &e - &a * &f - &d * &c)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
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

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(
            self.shape(),
            rhs.shape(),
            "matrix difference shape mismatch"
        );
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;

    fn neg(self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Fraction-free row echelon form of an integer-scaled copy of a matrix.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
    row_scales: Vec<BigInt>,
}

impl Echelon {
    fn of(m: &RationalMatrix) -> Self {
        let mut row_scales = Vec::with_capacity(m.rows);
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows)
            .map(|i| {
                let row = m.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                let ints = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
                row_scales.push(l);
                ints
            })
            .collect();

        let (nrows, ncols) = (m.rows, m.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        let mut pivots = Vec::new();
        let mut swaps = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                rows.swap(p, r);
                row_scales.swap(p, r);
                swaps += 1;
            }
            let (top, rest) = rows.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                for j in c + 1..ncols {
                    let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    row[j] = q;
                }
                row[c] = BigInt::zero();
            }
            prev = rows[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        Self {
            rows,
            pivots,
            swaps,
            row_scales,
        }
    }

    /// Fills the pivot coordinates of `x` so that every echelon row vanishes
    /// on it; the free coordinates must already be set.
    fn back_substitute(&self, x: &mut [Rational]) {
        for (k, &pc) in self.pivots.iter().enumerate().rev() {
            let row = &self.rows[k];
            let mut acc = Rational::zero();
            for (j, xj) in x.iter().enumerate().skip(pc + 1) {
                if !row[j].is_zero() && !xj.is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * xj;
                }
            }
            x[pc] = -acc / Rational::from_integer(row[pc].clone());
        }
    }

    fn kernel(&self, ncols: usize) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; ncols];
        for &p in &self.pivots {
            if p < ncols {
                is_pivot[p] = true;
            }
        }
        (0..ncols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut x = vec![Rational::zero(); self.rows.first().map_or(ncols, Vec::len)];
                x[free] = Rational::one();
                self.back_substitute(&mut x);
                x.truncate(ncols);
                x
            })
            .collect()
    }
}

/// True when `v` lies in the span of `basis` (all vectors of equal length).
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let n = v.len();
    let m = RationalMatrix::from_columns(n, basis).expect("basis vectors share length");
    let with_v = RationalMatrix::hstack(&[&m, &RationalMatrix::column_vector(v.to_vec())]);
    m.rank() == with_v.rank()
}

/// Rank of the span of the given vectors, each of length `dim`.
pub fn span_rank(dim: usize, vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    RationalMatrix::from_columns(dim, vectors)
        .expect("vectors share length")
        .rank()
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(m: &RationalMatrix) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        let mut det = Rational::zero();
        for j in 0..n {
            let minor_rows: Vec<Vec<Rational>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[(i, c)].clone())
                        .collect()
                })
                .collect();
            let minor = if n == 1 {
                RationalMatrix::zeros(0, 0)
            } else {
                RationalMatrix::from_rows(minor_rows).unwrap()
            };
            let term = &m[(0, j)] * cofactor_det(&minor);
            if j % 2 == 0 {
                det += term;
            } else {
                det -= term;
            }
        }
        det
    }

    fn skew(c: [i64; 6]) -> RationalMatrix {
        let [a, b, cc, d, e, f] = c;
        RationalMatrix::from_i64(
            4,
            4,
            &[0, -a, -b, -cc, a, 0, -d, -e, b, d, 0, -f, cc, e, f, 0],
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RationalMatrix::identity(4).rank(), 4);
        assert_eq!(RationalMatrix::zeros(4, 4).rank(), 0);
        assert_eq!(skew([1, 0, 0, 0, 0, 0]).rank(), 2);
    }

    #[test]
    fn kernel_examples() {
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
        assert_eq!(RationalMatrix::zeros(1, 4).kernel_basis().len(), 4);
        let k = RationalMatrix::from_i64(1, 4, &[1, 0, 0, 0]).kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(v[0].is_zero());
        }
        assert_eq!(span_rank(4, &k), 3);
    }

    #[test]
    fn kernel_of_empty_row_matrix_is_full() {
        let k = RationalMatrix::zeros(0, 3).kernel_basis();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), rat(-1, 2), int(0)];
        match RationalMatrix::identity(3).solve(&b).unwrap() {
            LinearSolution::Solved {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            LinearSolution::NoSolution => panic!("identity is solvable"),
        }

        match RationalMatrix::zeros(2, 2)
            .solve(&[int(0), int(0)])
            .unwrap()
        {
            LinearSolution::Solved {
                particular,
                nullspace,
            } => {
                assert!(particular.iter().all(Zero::is_zero));
                assert_eq!(nullspace.len(), 2);
            }
            LinearSolution::NoSolution => panic!(),
        }

        let a = RationalMatrix::from_i64(1, 2, &[1, 1]);
        match a.solve(&[int(2)]).unwrap() {
            LinearSolution::Solved {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, vec![int(2), int(0)]);
                assert_eq!(nullspace.len(), 1);
                assert!(in_span(&nullspace, &[int(1), int(-1)]));
            }
            LinearSolution::NoSolution => panic!(),
        }

        assert_eq!(
            RationalMatrix::zeros(1, 1).solve(&[int(1)]).unwrap(),
            LinearSolution::NoSolution
        );
        assert!(RationalMatrix::zeros(2, 2).solve(&[int(1)]).is_err());
    }

    #[test]
    fn pfaffian_examples() {
        assert_eq!(skew([1, 0, 0, 0, 0, 1]).pfaffian4().unwrap(), int(-1));
        assert_eq!(RationalMatrix::zeros(4, 4).pfaffian4().unwrap(), int(0));
        let m = skew([0, 1, 0, 0, 1, 0]);
        assert_eq!(m.pfaffian4().unwrap(), int(1));
        assert_eq!(cofactor_det(&m), int(1));
        assert_eq!(m.determinant().unwrap(), int(1));
    }

    #[test]
    fn pfaffian_rejects_non_skew() {
        assert_eq!(
            RationalMatrix::identity(4).pfaffian4(),
            Err(Error::NotSkewSymmetric)
        );
        assert!(RationalMatrix::zeros(3, 3).pfaffian4().is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = RationalMatrix::new(
            3,
            3,
            vec![
                rat(1, 2),
                int(3),
                int(-1),
                rat(2, 3),
                int(0),
                int(5),
                int(7),
                rat(-1, 3),
                int(2),
            ],
        )
        .unwrap();
        assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
        let swapped = RationalMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(swapped.determinant().unwrap(), int(-1));
    }

    #[test]
    fn inverse_roundtrip_and_singular() {
        let m = RationalMatrix::from_i64(3, 3, &[2, 1, 0, 0, 1, 4, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RationalMatrix::identity(3));
        assert_eq!(
            RationalMatrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse(),
            Err(Error::Singular)
        );
    }

    #[test]
    fn primitive_vector_normalization() {
        let v = primitive_integer_vector(&[rat(-2, 3), rat(4, 3)]);
        assert_eq!(v, vec![BigInt::from(1), BigInt::from(-2)]);
    }

    #[test]
    fn modular_rank_bounds_exact_rank() {
        let m = RationalMatrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.rank_mod_prime(), Some(2));
        let half = RationalMatrix::new(1, 2, vec![rat(1, 2), rat(-3, 7)]).unwrap();
        assert_eq!(half.rank_mod_prime(), Some(1));
        let mut s = crate::sample::Sampler::new(4);
        for k in 0..4 {
            let m = s.matrix_of_rank(5, 6, k);
            assert_eq!(m.rank_mod_prime(), Some(m.rank()));
        }
    }
}
