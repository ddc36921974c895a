use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{vector, Matrix, Scalar};
use crate::structure::{Algebra, Based, Coalgebra, HasAlgebra, HasCoalgebra, HopfAlgebra};
use crate::verdict::{CheckResult, Witness};

/// A linear map between two based objects; column `j` of `matrix` is the
/// image of the source's `j`-th basis vector.
#[derive(Clone, Debug)]
pub struct LinearMap<S, T> {
    pub source: Arc<S>,
    pub target: Arc<T>,
    pub matrix: Matrix,
}

impl<S: Based, T: Based> LinearMap<S, T> {
    pub fn new(source: Arc<S>, target: Arc<T>, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(LinearMap { source, target, matrix })
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }
}

impl<S: Based> LinearMap<S, S> {
    pub fn identity(object: Arc<S>) -> Self {
        let m = Matrix::identity(object.field(), object.dim());
        LinearMap {
            source: object.clone(),
            target: object,
            matrix: m,
        }
    }
}

impl<S: HasAlgebra, T: HasAlgebra> LinearMap<S, T> {
    pub fn is_algebra_morphism(&self) -> CheckResult {
        algebra_morphism(self.source.algebra(), self.target.algebra(), &self.matrix)
    }
}

impl<S: HasCoalgebra, T: HasCoalgebra> LinearMap<S, T> {
    pub fn is_coalgebra_morphism(&self) -> CheckResult {
        coalgebra_morphism(self.source.coalgebra(), self.target.coalgebra(), &self.matrix)
    }
}

impl<S: HasAlgebra + HasCoalgebra, T: HasAlgebra + HasCoalgebra> LinearMap<S, T> {
    pub fn is_bialgebra_morphism(&self) -> CheckResult {
        let a = self.is_algebra_morphism();
        if !a.is_yes() {
            return a;
        }
        self.is_coalgebra_morphism()
    }
}

impl LinearMap<HopfAlgebra, HopfAlgebra> {
    /// Bialgebra morphism that also intertwines the antipodes.
    pub fn is_hopf_morphism(&self) -> Result<CheckResult> {
        hopf_morphism(&self.source, &self.target, &self.matrix)
    }
}

pub fn algebra_morphism(src: &Algebra, tgt: &Algebra, f: &Matrix) -> CheckResult {
    if f.shape() != (tgt.dim(), src.dim()) {
        return CheckResult::no(
            Witness::Dimension { expected: tgt.dim() * src.dim(), found: f.rows() * f.cols() },
            "matrix shape does not match source/target",
        );
    }
    if f.apply(src.unit()) != tgt.unit() {
        return CheckResult::no(Witness::Vector(src.unit().to_vec()), "f(1) ≠ 1");
    }
    let images: Vec<Vec<Scalar>> = (0..src.dim()).map(|j| f.column(j)).collect();
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let lhs = f.apply(&src.basis_product(i, j));
            let rhs = tgt.product(&images[i], &images[j]);
            if lhs != rhs {
                return CheckResult::no(
                    Witness::Pair(i, j),
                    format!("f({}·{}) ≠ f({})f({})", src.names()[i], src.names()[j], src.names()[i], src.names()[j]),
                );
            }
        }
    }
    CheckResult::yes("algebra morphism")
}

pub fn coalgebra_morphism(src: &Coalgebra, tgt: &Coalgebra, f: &Matrix) -> CheckResult {
    if f.shape() != (tgt.dim(), src.dim()) {
        return CheckResult::no(
            Witness::Dimension { expected: tgt.dim() * src.dim(), found: f.rows() * f.cols() },
            "matrix shape does not match source/target",
        );
    }
    let ff = f.kron(f);
    for i in 0..src.dim() {
        let fi = f.column(i);
        if tgt.counit_of(&fi) != src.counit()[i] {
            return CheckResult::no(Witness::Index(i), format!("ε(f({})) ≠ ε({})", src.names()[i], src.names()[i]));
        }
        if tgt.coproduct(&fi) != ff.apply(&src.basis_coproduct(i)) {
            return CheckResult::no(
                Witness::Index(i),
                format!("Δ(f({})) ≠ (f⊗f)Δ({})", src.names()[i], src.names()[i]),
            );
        }
    }
    CheckResult::yes("coalgebra morphism")
}

pub fn hopf_morphism(src: &HopfAlgebra, tgt: &HopfAlgebra, f: &Matrix) -> Result<CheckResult> {
    let s = src.require_antipode()?;
    let t = tgt.require_antipode()?;
    let a = algebra_morphism(src.algebra(), tgt.algebra(), f);
    if !a.is_yes() {
        return Ok(a);
    }
    let c = coalgebra_morphism(src.coalgebra(), tgt.coalgebra(), f);
    if !c.is_yes() {
        return Ok(c);
    }
    let fs = f * s;
    let tf = t * f;
    for j in 0..src.dim() {
        if fs.column(j) != tf.column(j) {
            return Ok(CheckResult::no(
                Witness::Index(j),
                format!("f(S({})) ≠ S'(f({}))", src.names()[j], src.names()[j]),
            ));
        }
    }
    Ok(CheckResult::yes("Hopf morphism"))
}

/// The image of a basis element as a vector, for witnesses and reports.
pub fn image_of(f: &Matrix, j: usize) -> Vec<Scalar> {
    f.apply(&vector::basis(f.field(), f.cols(), j))
}
