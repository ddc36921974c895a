use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar, SparseTensor3};
use crate::structure::coalgebra::dual_name;
use crate::structure::{default_names, Coalgebra};
use crate::verdict::{CheckResult, Witness};

/// A finite-dimensional unital associative algebra given by structure
/// constants `e_i · e_j = Σ_k mult[i, j, k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    names: Vec<String>,
    mult: SparseTensor3,
    unit: Vec<Scalar>,
}

impl Algebra {
    /// Validating constructor: the result always passes [`Algebra::check`].
    pub fn new(mult: SparseTensor3, unit: Vec<Scalar>) -> Result<Self> {
        let a = Self::from_parts_unchecked(mult, unit)?;
        a.check().into_result()?;
        Ok(a)
    }

    /// Shape-checked but axiom-unchecked construction, for data that is
    /// about to be inspected by [`Algebra::check`].
    pub fn from_parts_unchecked(mult: SparseTensor3, unit: Vec<Scalar>) -> Result<Self> {
        let (d1, d2, d3) = mult.dims();
        if d1 != d2 || d2 != d3 || d1 == 0 {
            return Err(Error::DimensionMismatch(format!(
                "multiplication tensor must be cubic and nonempty, got ({d1}, {d2}, {d3})"
            )));
        }
        if unit.len() != d1 {
            return Err(Error::DimensionMismatch(format!(
                "unit has {} coordinates, dimension is {d1}",
                unit.len()
            )));
        }
        let field = mult.field();
        if unit.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Algebra {
            field,
            dim: d1,
            names: default_names(d1),
            mult,
            unit,
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch("basis name count".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mult(&self) -> &SparseTensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (k, c) in self.mult.slice12(i, j) {
            out[k] = c.clone();
        }
        out
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, m) in self.mult.slice12(i, j) {
                    out[k] += &(&c * m);
                }
            }
        }
        out
    }

    /// Product in `A ⊗ A` of two row-major tensors.
    pub fn tensor_square_product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vector::zeros(self.field, n * n);
        for (p, xp) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (r, yr) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = xp * yr;
                let (p1, p2) = (p / n, p % n);
                let (r1, r2) = (r / n, r % n);
                for (u, mu) in self.mult.slice12(p1, r1) {
                    let cu = &c * mu;
                    for (v, mv) in self.mult.slice12(p2, r2) {
                        out[u * n + v] += &(&cu * mv);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `m : A ⊗ A → A`.
    pub fn mult_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n, n * n);
        for (i, j, k, c) in self.mult.iter() {
            m.set(k, i * n + j, c.clone());
        }
        m
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.product(x, &vector::basis(self.field, self.dim, j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Unit law first, then associativity on every basis triple.
    pub fn check(&self) -> CheckResult {
        let n = self.dim;
        for i in 0..n {
            let e = vector::basis(self.field, n, i);
            if self.product(&self.unit, &e) != e {
                return CheckResult::no(
                    Witness::Index(i),
                    format!("unit law fails: 1·{} ≠ {}", self.names[i], self.names[i]),
                );
            }
            if self.product(&e, &self.unit) != e {
                return CheckResult::no(
                    Witness::Index(i),
                    format!("unit law fails: {}·1 ≠ {}", self.names[i], self.names[i]),
                );
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut left: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, a) in self.mult.slice12(i, j) {
                        for (r, b) in self.mult.slice12(l, k) {
                            *left.entry(r).or_insert_with(|| self.field.zero()) += &(a * b);
                        }
                    }
                    let mut right: BTreeMap<usize, Scalar> = BTreeMap::new();
                    for (l, a) in self.mult.slice12(j, k) {
                        for (r, b) in self.mult.slice12(i, l) {
                            *right.entry(r).or_insert_with(|| self.field.zero()) += &(a * b);
                        }
                    }
                    left.retain(|_, c| !c.is_zero());
                    right.retain(|_, c| !c.is_zero());
                    if left != right {
                        return CheckResult::no(
                            Witness::Triple(i, j, k),
                            format!(
                                "associativity fails on ({}, {}, {})",
                                self.names[i], self.names[j], self.names[k]
                            ),
                        );
                    }
                }
            }
        }
        CheckResult::yes("associative and unital")
    }

    /// `A^op`: `mult[i, j, k] ↦ mult[j, i, k]`.
    pub fn opposite(&self) -> Algebra {
        Algebra {
            mult: self.mult.permuted([1, 0, 2]),
            ..self.clone()
        }
    }

    /// The dual coalgebra on the coordinate dual basis:
    /// `comult*[k, i, j] = mult[i, j, k]`, `ε*(e^k) = unit[k]`.
    pub fn dual(&self) -> Coalgebra {
        Coalgebra::from_parts_unchecked(self.mult.permuted([2, 0, 1]), self.unit.clone())
            .expect("shape preserved")
            .with_names(self.names.iter().map(|n| dual_name(n)).collect())
            .expect("same length")
    }

    pub fn is_commutative(&self) -> bool {
        self.mult == self.mult.permuted([1, 0, 2])
    }

    /// Reinterprets the structure constants in another field.
    pub fn change_field(&self, field: Field, f: &impl Fn(&Scalar) -> Option<Scalar>) -> Option<Algebra> {
        Some(Algebra {
            field,
            dim: self.dim,
            names: self.names.clone(),
            mult: self.mult.map_scalars(field, f)?,
            unit: self.unit.iter().map(f).collect::<Option<_>>()?,
        })
    }
}
