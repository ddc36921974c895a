use crate::categorical::{require_algebra_morphism, require_hopf_morphism};
use crate::error::Result;
use crate::linalg::{vector, Matrix, RowSpace, Scalar};
use crate::structure::{Algebra, HopfAlgebra};
use crate::verdict::{CheckResult, Witness};

/// `B ⊗_A B` for an algebra map `f: A → B`, as the quotient of `B ⊗ B` by
/// the span of `b·f(a) ⊗ b' − b ⊗ f(a)·b'`.
#[derive(Clone, Debug)]
pub struct RelativeTensorSquare {
    pub relations: RowSpace,
    pub quotient_dim: usize,
    /// `b ↦ b ⊗ 1`.
    pub left: Matrix,
    /// `b ↦ 1 ⊗ b`.
    pub right: Matrix,
}

impl RelativeTensorSquare {
    pub fn new(a: &Algebra, b: &Algebra, f: &Matrix) -> Result<Self> {
        require_algebra_morphism(a, b, f)?;
        let field = b.field();
        let n = b.dim();
        let images: Vec<Vec<Scalar>> = f.columns();
        let mut rels = Vec::new();
        for fa in &images {
            let right_by = (0..n).map(|i| b.product(&vector::basis(field, n, i), fa)).collect::<Vec<_>>();
            let left_by = (0..n).map(|j| b.product(fa, &vector::basis(field, n, j))).collect::<Vec<_>>();
            for (i, bi_fa) in right_by.iter().enumerate() {
                for (j, fa_bj) in left_by.iter().enumerate() {
                    let mut r = vector::tensor(bi_fa, &vector::basis(field, n, j));
                    let s = vector::tensor(&vector::basis(field, n, i), fa_bj);
                    vector::add_scaled(&mut r, &field.from_int(-1), &s);
                    if !vector::is_zero(&r) {
                        rels.push(r);
                    }
                }
            }
        }
        let relations = if rels.is_empty() {
            RowSpace::of_rows(&Matrix::zeros(field, 0, n * n))
        } else {
            RowSpace::of_rows(&Matrix::from_rows(field, rels)?)
        };
        let one = b.unit();
        let left_cols: Vec<Vec<Scalar>> = (0..n).map(|i| vector::tensor(&vector::basis(field, n, i), one)).collect();
        let right_cols: Vec<Vec<Scalar>> = (0..n).map(|i| vector::tensor(one, &vector::basis(field, n, i))).collect();
        Ok(RelativeTensorSquare {
            quotient_dim: n * n - relations.dim(),
            relations,
            left: Matrix::from_columns(field, n * n, &left_cols)?,
            right: Matrix::from_columns(field, n * n, &right_cols)?,
        })
    }

    pub fn equal_in_quotient(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        self.relations.contains(&vector::sub(x, y))
    }

    /// The multiplication `B ⊗ B → B` kills every relation.
    pub fn multiplication_descends(&self, b: &Algebra) -> bool {
        let m = b.mult_matrix();
        let basis = self.relations.basis_columns();
        (&m * &basis).is_zero()
    }
}

/// Epimorphism in the category of algebras: `1 ⊗ b = b ⊗ 1` in `B ⊗_A B`
/// for every basis vector `b`.
pub fn epi_test_alg(a: &Algebra, b: &Algebra, f: &Matrix) -> Result<CheckResult> {
    let t = RelativeTensorSquare::new(a, b, f)?;
    for i in 0..b.dim() {
        let x = t.right.column(i);
        let y = t.left.column(i);
        if !t.equal_in_quotient(&x, &y) {
            let name = &b.names()[i];
            return Ok(CheckResult::no(
                Witness::Vector(vector::sub(&x, &y)),
                format!(
                    "1⊗{name} − {name}⊗1 is nonzero in B⊗_A B (dim B⊗_A B = {})",
                    t.quotient_dim
                ),
            ));
        }
    }
    Ok(CheckResult::yes(format!("epimorphism; dim B⊗_A B = {}", t.quotient_dim)))
}

/// A Hopf morphism is epi among Hopf algebras iff its algebra map is epi.
pub fn epi_test_hopf(h: &HopfAlgebra, k: &HopfAlgebra, f: &Matrix) -> Result<CheckResult> {
    require_hopf_morphism(h, k, f)?;
    epi_test_alg(h.algebra(), k.algebra(), f)
}
