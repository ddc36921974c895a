//! Dense exact matrices.
//!
//! A matrix of shape `rows × cols` represents a linear map from a
//! `cols`-dimensional space to a `rows`-dimensional one: column `j` is the
//! image of the `j`-th basis vector. Tensor-product spaces are flattened
//! row-major, `e_i ⊗ e_j ↦ i·dim + j`, everywhere in the crate.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{big_content, Field, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Output of [`Matrix::rank_kernel_image`].
#[derive(Clone, Debug)]
pub struct RankKernelImage {
    pub rank: usize,
    /// `cols × nullity`; columns form a basis of the kernel.
    pub kernel: Matrix,
    /// `rows × rank`; the pivot columns of the input.
    pub image: Matrix,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if data.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Matrix { field, rows: nrows, cols, data })
    }

    /// Builds a `rows × columns.len()` matrix from column vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    /// Convenience for tests and built-in examples.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, r).expect("rectangular integer rows")
    }

    pub fn field(&self) -> Field {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        let idx = i * self.cols + j;
        self.data[idx] += value;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product; `(a ⊗ b)(e_i ⊗ e_j) = a(e_i) ⊗ b(e_j)` under the
    /// row-major flattening.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r1, c1) = self.shape();
        let (r2, c2) = other.shape();
        Matrix::from_fn(self.field, r1 * r2, c1 * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                return self.field.zero();
            }
            a * other.get(i % r2, j % c2)
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row count".into()));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match self.field {
            Field::Rational => rref_fraction_free(self),
            Field::Prime(p) => rref_mod_p(self, p),
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_kernel_image(&self) -> RankKernelImage {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut kernel = Matrix::zeros(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            kernel.set(fc, k, self.field.one());
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if !v.is_zero() {
                    kernel.set(pc, k, -v);
                }
            }
        }
        RankKernelImage {
            rank,
            kernel,
            image: self.select_columns(&pivots),
        }
    }

    pub fn kernel(&self) -> Matrix {
        self.rank_kernel_image().kernel
    }

    /// Solves `self · x = b`. `None` iff some column of `b` is outside the
    /// column space.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: matrix has {} rows, right-hand side {}",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows)).ok()??;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    /// True iff `v` lies in the column span.
    pub fn spans(&self, v: &[Scalar]) -> bool {
        let b = Matrix::from_fn(self.field, v.len(), 1, |i, _| v[i].clone());
        matches!(self.solve(&b), Ok(Some(_)))
    }
}

/// A row space in reduced echelon form, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    field: Field,
    width: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl RowSpace {
    /// The span of the rows of `m`.
    pub fn of_rows(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows = pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, r.row(i).to_vec()))
            .collect();
        RowSpace {
            field: m.field,
            width: m.cols,
            rows,
        }
    }

    /// The span of the columns of `m`, as row vectors.
    pub fn of_columns(m: &Matrix) -> Self {
        Self::of_rows(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `v` minus its projection along the pivot coordinates.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (p, row) in &self.rows {
            if out[*p].is_zero() {
                continue;
            }
            let c = out[*p].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &(&c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Basis rows as the columns of a `width × dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        Matrix::from_fn(self.field, self.width, self.rows.len(), |i, j| self.rows[j].1[i].clone())
    }
}

fn rref_mod_p(m: &Matrix, p: u64) -> (Matrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a: Vec<u64> = m
        .data
        .iter()
        .map(|s| match s {
            Scalar::Mod { value, .. } => *value,
            Scalar::Rat(_) => unreachable!("rational entry in a prime-field matrix"),
        })
        .collect();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let inv = |x: u64| {
        let (mut b, mut e, mut acc) = (x, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulm(acc, b);
            }
            b = mulm(b, b);
            e >>= 1;
        }
        acc
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        for j in 0..cols {
            a.swap(pr * cols + j, r * cols + j);
        }
        let iv = inv(a[r * cols + c]);
        for j in c..cols {
            a[r * cols + j] = mulm(a[r * cols + j], iv);
        }
        for i in 0..rows {
            let f = a[i * cols + c];
            if i == r || f == 0 {
                continue;
            }
            for j in c..cols {
                let t = mulm(f, a[r * cols + j]);
                a[i * cols + j] = (a[i * cols + j] + p - t) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let data = a
        .into_iter()
        .map(|value| Scalar::Mod { value, modulus: p })
        .collect();
    (
        Matrix {
            field: m.field,
            rows,
            cols,
            data,
        },
        pivots,
    )
}

/// Gauss–Jordan over ℤ with content removal after every row operation, then a
/// single division by the pivot at the end.
fn rref_fraction_free(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |l, s| {
                l.lcm(s.as_rational().expect("rational matrix").denom())
            });
            row.iter()
                .map(|s| {
                    let q = s.as_rational().unwrap();
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(pr, r);
        let (head, tail) = a.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        let pv = pivot_row[c].clone();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in 0..cols {
                if pivot_row[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * &pv;
                    }
                } else {
                    row[j] = &row[j] * &pv - &f * &pivot_row[j];
                }
            }
            let g = big_content(row);
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        let g = big_content(pivot_row);
        if !g.is_one() {
            for x in pivot_row.iter_mut() {
                *x = &*x / &g;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut data = Vec::with_capacity(rows * cols);
    for (i, row) in a.iter().enumerate() {
        let den = if i < pivots.len() {
            row[pivots[i]].clone()
        } else {
            BigInt::one()
        };
        for x in row {
            data.push(Scalar::Rat(BigRational::new(x.clone(), den.clone())));
        }
    }
    (
        Matrix {
            field: m.field,
            rows,
            cols,
            data,
        },
        pivots,
    )
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shapes do not compose")
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
