use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar, SparseTensor3};
use crate::structure::{default_names, Algebra};
use crate::verdict::{CheckResult, Witness};

/// A finite-dimensional coassociative counital coalgebra:
/// `Δ(e_i) = Σ_{j,k} comult[i, j, k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    names: Vec<String>,
    comult: SparseTensor3,
    counit: Vec<Scalar>,
}

impl Coalgebra {
    pub fn new(comult: SparseTensor3, counit: Vec<Scalar>) -> Result<Self> {
        let c = Self::from_parts_unchecked(comult, counit)?;
        c.check().into_result()?;
        Ok(c)
    }

    pub fn from_parts_unchecked(comult: SparseTensor3, counit: Vec<Scalar>) -> Result<Self> {
        let (d1, d2, d3) = comult.dims();
        if d1 != d2 || d2 != d3 || d1 == 0 {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication tensor must be cubic and nonempty, got ({d1}, {d2}, {d3})"
            )));
        }
        if counit.len() != d1 {
            return Err(Error::DimensionMismatch(format!(
                "counit has {} coordinates, dimension is {d1}",
                counit.len()
            )));
        }
        let field = comult.field();
        if counit.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(Coalgebra {
            field,
            dim: d1,
            names: default_names(d1),
            comult,
            counit,
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

    pub fn comult(&self) -> &SparseTensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `Δ(e_i)` as a row-major vector of length `dim²`.
    pub fn basis_coproduct(&self, i: usize) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vector::zeros(self.field, n * n);
        for (j, k, c) in self.comult.slice1(i) {
            out[j * n + k] = c.clone();
        }
        out
    }

    pub fn coproduct(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vector::zeros(self.field, n * n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, k, c) in self.comult.slice1(i) {
                out[j * n + k] += &(xi * c);
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (a, b) in x.iter().zip(&self.counit) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Matrix of `Δ : C → C ⊗ C`.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(self.field, n * n, n);
        for (i, j, k, c) in self.comult.iter() {
            m.set(j * n + k, i, c.clone());
        }
        m
    }

    /// Counit law first, then coassociativity, on every basis vector.
    pub fn check(&self) -> CheckResult {
        let n = self.dim;
        for i in 0..n {
            let e = vector::basis(self.field, n, i);
            let mut left = vector::zeros(self.field, n);
            let mut right = vector::zeros(self.field, n);
            for (j, k, c) in self.comult.slice1(i) {
                left[k] += &(c * &self.counit[j]);
                right[j] += &(c * &self.counit[k]);
            }
            if left != e || right != e {
                return CheckResult::no(
                    Witness::Index(i),
                    format!("counit law fails on {}", self.names[i]),
                );
            }
        }
        for i in 0..n {
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, c) in self.comult.slice1(i) {
                for (a, b, d) in self.comult.slice1(j) {
                    *left.entry((a, b, k)).or_insert_with(|| self.field.zero()) += &(c * d);
                }
                for (a, b, d) in self.comult.slice1(k) {
                    *right.entry((j, a, b)).or_insert_with(|| self.field.zero()) += &(c * d);
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            if left != right {
                return CheckResult::no(
                    Witness::Index(i),
                    format!("coassociativity fails on basis element {} ({})", i, self.names[i]),
                );
            }
        }
        CheckResult::yes("coassociative and counital")
    }

    /// `C^cop`: `comult[i, j, k] ↦ comult[i, k, j]`.
    pub fn coopposite(&self) -> Coalgebra {
        Coalgebra {
            comult: self.comult.permuted([0, 2, 1]),
            ..self.clone()
        }
    }

    /// The dual (convolution) algebra: `mult*[j, k, i] = comult[i, j, k]`,
    /// unit = counit.
    pub fn dual(&self) -> Algebra {
        Algebra::from_parts_unchecked(self.comult.permuted([1, 2, 0]), self.counit.clone())
            .expect("shape preserved")
            .with_names(self.names.iter().map(|n| dual_name(n)).collect())
            .expect("same length")
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult == self.comult.permuted([0, 2, 1])
    }

    pub fn change_field(&self, field: Field, f: &impl Fn(&Scalar) -> Option<Scalar>) -> Option<Coalgebra> {
        Some(Coalgebra {
            field,
            dim: self.dim,
            names: self.names.clone(),
            comult: self.comult.map_scalars(field, f)?,
            counit: self.counit.iter().map(f).collect::<Option<_>>()?,
        })
    }
}

/// `x*` for `x`, and back.
pub(crate) fn dual_name(n: &str) -> String {
    match n.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{n}*"),
    }
}
