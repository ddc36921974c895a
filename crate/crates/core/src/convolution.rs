//! The convolution algebra `Hom(C, A)`: `(f*g)(c) = f(c₁)g(c₂)`, with unit
//! `ηε`. Inverses are found by solving `f*g = ηε` as a linear system in the
//! entries of `g` and then checking `g*f = ηε`.

use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};
use crate::structure::{Algebra, Bialgebra, Coalgebra, HasAlgebra, HasCoalgebra, HopfAlgebra, LinearMap};

/// Maps `C → A` for a fixed coalgebra `C` and algebra `A`.
#[derive(Clone, Copy, Debug)]
pub struct ConvolutionProblem<'a> {
    pub coalgebra: &'a Coalgebra,
    pub algebra: &'a Algebra,
}

/// Outcome of an inversion attempt. `NotInvertible` is a result, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inverse {
    Invertible(Matrix),
    NotInvertible {
        /// First basis vector of `C` where the two-sided check fails, when the
        /// one-sided system was solvable.
        witness: Option<usize>,
        detail: String,
    },
}

impl Inverse {
    pub fn matrix(&self) -> Option<&Matrix> {
        match self {
            Inverse::Invertible(m) => Some(m),
            Inverse::NotInvertible { .. } => None,
        }
    }

    pub fn into_matrix(self) -> Option<Matrix> {
        match self {
            Inverse::Invertible(m) => Some(m),
            Inverse::NotInvertible { .. } => None,
        }
    }

    pub fn is_invertible(&self) -> bool {
        matches!(self, Inverse::Invertible(_))
    }
}

impl<'a> ConvolutionProblem<'a> {
    pub fn new(coalgebra: &'a Coalgebra, algebra: &'a Algebra) -> Result<Self> {
        if coalgebra.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(ConvolutionProblem { coalgebra, algebra })
    }

    fn check_shape(&self, f: &Matrix) -> Result<()> {
        if f.shape() != (self.algebra.dim(), self.coalgebra.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                self.algebra.dim(),
                self.coalgebra.dim()
            )));
        }
        if f.field() != self.algebra.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// `ηε`, the unit of the convolution algebra.
    pub fn unit(&self) -> Matrix {
        let field = self.algebra.field();
        let (m, n) = (self.algebra.dim(), self.coalgebra.dim());
        Matrix::from_fn(field, m, n, |r, i| &self.algebra.unit()[r] * &self.coalgebra.counit()[i])
    }

    pub fn convolve(&self, f: &Matrix, g: &Matrix) -> Result<Matrix> {
        self.check_shape(f)?;
        self.check_shape(g)?;
        let field = self.algebra.field();
        let a = self.algebra.dim();
        let fc: Vec<Vec<Scalar>> = f.columns();
        let gc: Vec<Vec<Scalar>> = g.columns();
        let cols: Vec<Vec<Scalar>> = (0..self.coalgebra.dim())
            .map(|i| {
                let mut out = vector::zeros(field, a);
                for (j, k, c) in self.coalgebra.comult().slice1(i) {
                    vector::add_scaled(&mut out, c, &self.algebra.product(&fc[j], &gc[k]));
                }
                out
            })
            .collect();
        Matrix::from_columns(field, a, &cols)
    }

    /// The first basis index `i` with `(f*g)(e_i) ≠ ηε(e_i)`.
    fn unit_defect(&self, f: &Matrix, g: &Matrix) -> Result<Option<usize>> {
        let p = self.convolve(f, g)?;
        let u = self.unit();
        Ok((0..p.cols()).find(|&i| p.column(i) != u.column(i)))
    }

    /// Solves `f*g = ηε` for `g`, then verifies `g*f = ηε`.
    pub fn inverse(&self, f: &Matrix) -> Result<Inverse> {
        self.check_shape(f)?;
        let field = self.algebra.field();
        let (a, c) = (self.algebra.dim(), self.coalgebra.dim());
        // Unknown G[r, k] sits at column r·c + k; equation (t, i) at row t·c + i.
        let mut system = Matrix::zeros(field, a * c, a * c);
        let left: Vec<Matrix> = f.columns().iter().map(|col| self.algebra.left_mult_matrix(col)).collect();
        for (i, j, k, coef) in self.coalgebra.comult().iter() {
            let l = &left[j];
            for r in 0..a {
                for t in 0..a {
                    let v = l.get(t, r);
                    if !v.is_zero() {
                        system.add_to(t * c + i, r * c + k, &(coef * v));
                    }
                }
            }
        }
        let u = self.unit();
        let rhs = Matrix::from_fn(field, a * c, 1, |row, _| u.get(row / c, row % c).clone());
        let Some(sol) = system.solve(&rhs)? else {
            return Ok(Inverse::NotInvertible {
                witness: None,
                detail: "f*g = ηε has no solution".into(),
            });
        };
        let g = Matrix::from_fn(field, a, c, |r, k| sol.get(r * c + k, 0).clone());
        if let Some(i) = self.unit_defect(&g, f)? {
            return Ok(Inverse::NotInvertible {
                witness: Some(i),
                detail: format!("right inverse fails g*f = ηε at {}", self.coalgebra.names()[i]),
            });
        }
        Ok(Inverse::Invertible(g))
    }
}

pub fn convolve<S: HasCoalgebra, T: HasAlgebra>(f: &LinearMap<S, T>, g: &LinearMap<S, T>) -> Result<Matrix> {
    ConvolutionProblem::new(f.source.coalgebra(), f.target.algebra())?.convolve(&f.matrix, &g.matrix)
}

pub fn convolution_inverse<S: HasCoalgebra, T: HasAlgebra>(f: &LinearMap<S, T>) -> Result<Inverse> {
    ConvolutionProblem::new(f.source.coalgebra(), f.target.algebra())?.inverse(&f.matrix)
}

/// The convolution inverse of the identity, if the bialgebra is Hopf.
pub fn antipode_solve(b: &Bialgebra) -> Result<Inverse> {
    ConvolutionProblem::new(b.coalgebra(), b.algebra())?.inverse(&Matrix::identity(b.field(), b.dim()))
}

/// The antipode of `H^cop`, checked against `S⁻¹`.
pub fn skew_antipode(h: &HopfAlgebra) -> Result<Inverse> {
    let s = h.require_antipode()?;
    let skew = antipode_solve(&h.bialgebra().coopposite())?;
    match (&skew, s.inverse()) {
        (Inverse::Invertible(t), Some(inv)) if *t != inv => Err(Error::Precondition(
            "skew antipode differs from the inverse of S".into(),
        )),
        (Inverse::Invertible(_), None) => Err(Error::Precondition(
            "skew antipode exists but S is singular".into(),
        )),
        _ => Ok(skew),
    }
}

pub const DEFAULT_MAX_ORDER: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntipodeReport {
    pub bijective: bool,
    /// Least `n ≥ 1` with `Sⁿ = id`; `None` if none up to `max_order`.
    pub order: Option<u32>,
    pub max_order: u32,
    pub image_dim: usize,
}

pub fn antipode_report(h: &HopfAlgebra, max_order: u32) -> Result<AntipodeReport> {
    let s = h.require_antipode()?;
    let image_dim = s.rank();
    let bijective = image_dim == h.dim();
    let mut order = None;
    if bijective {
        let mut p = s.clone();
        for n in 1..=max_order {
            if p.is_identity() {
                order = Some(n);
                break;
            }
            p = &p * s;
        }
    }
    Ok(AntipodeReport {
        bijective,
        order,
        max_order,
        image_dim,
    })
}
