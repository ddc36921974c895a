use crate::categorical::{require_coalgebra_morphism, require_hopf_morphism};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::structure::{Coalgebra, HopfAlgebra};
use crate::verdict::{CheckResult, Witness};

/// `C □_D C ⊆ C ⊗ C` for a coalgebra map `f: C → D`: the kernel of
/// `ρ⊗id − id⊗λ` with `ρ = (id⊗f)Δ` and `λ = (f⊗id)Δ`.
#[derive(Clone, Debug)]
pub struct CotensorSpace {
    /// Columns span the cotensor product inside `C ⊗ C`.
    pub basis: Matrix,
    /// `Δ_C` written in that basis.
    pub corestriction: Matrix,
}

impl CotensorSpace {
    pub fn new(c: &Coalgebra, d: &Coalgebra, f: &Matrix) -> Result<Self> {
        require_coalgebra_morphism(c, d, f)?;
        let field = c.field();
        let n = c.dim();
        let id = Matrix::identity(field, n);
        let delta = c.comult_matrix();
        let rho = &id.kron(f) * &delta;
        let lambda = &f.kron(&id) * &delta;
        let eq = &rho.kron(&id) - &id.kron(&lambda);
        let basis = eq.kernel();
        let corestriction = basis
            .solve(&delta)?
            .ok_or_else(|| Error::Precondition("Δ does not land in the cotensor product".into()))?;
        Ok(CotensorSpace { basis, corestriction })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Monomorphism in the category of coalgebras: `Δ_C: C → C □_D C` is bijective.
pub fn mono_test_coalg(c: &Coalgebra, d: &Coalgebra, f: &Matrix) -> Result<CheckResult> {
    let t = CotensorSpace::new(c, d, f)?;
    let injective = t.corestriction.rank() == c.dim();
    if injective && t.dim() == c.dim() {
        Ok(CheckResult::yes(format!("monomorphism; dim C□_D C = {}", t.dim())))
    } else {
        Ok(CheckResult::no(
            Witness::Dimension {
                expected: c.dim(),
                found: t.dim(),
            },
            format!("dim C□_D C = {} but dim C = {}", t.dim(), c.dim()),
        ))
    }
}

pub fn mono_test_hopf(h: &HopfAlgebra, k: &HopfAlgebra, f: &Matrix) -> Result<CheckResult> {
    require_hopf_morphism(h, k, f)?;
    mono_test_coalg(h.coalgebra(), k.coalgebra(), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;
    use crate::linalg::Field;

    #[test]
    fn dual_of_projection_is_mono() {
        let q = Field::Rational;
        let z4 = library::cyclic_group_algebra(q, 4).unwrap().dual();
        let z2 = library::cyclic_group_algebra(q, 2).unwrap().dual();
        let f = library::cyclic_projection(q, 4, 2).transpose();
        assert!(mono_test_hopf(&z2, &z4, &f).unwrap().is_yes());
    }

    #[test]
    fn dual_of_inclusion_is_not_mono() {
        let q = Field::Rational;
        let z4 = library::cyclic_group_algebra(q, 4).unwrap().dual();
        let z2 = library::cyclic_group_algebra(q, 2).unwrap().dual();
        let f = library::cyclic_inclusion(q, 2, 4).transpose();
        let r = mono_test_hopf(&z4, &z2, &f).unwrap();
        assert!(r.is_no());
        assert_eq!(r.witness, Some(Witness::Dimension { expected: 4, found: 8 }));
    }

    #[test]
    fn identity_is_mono() {
        let c = library::matrix_coalgebra(Field::Rational, 2).unwrap();
        let id = Matrix::identity(Field::Rational, 4);
        let t = CotensorSpace::new(&c, &c, &id).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(mono_test_coalg(&c, &c, &id).unwrap().is_yes());
    }
}
