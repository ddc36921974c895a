use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, Scalar};
use crate::structure::{Algebra, Coalgebra};
use crate::verdict::{CheckResult, Witness};

/// An algebra and a coalgebra on one based space whose comultiplication
/// and counit are algebra maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
}

impl Bialgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        let b = Self::from_parts_unchecked(algebra, coalgebra)?;
        b.check().into_result()?;
        Ok(b)
    }

    pub fn from_parts_unchecked(algebra: Algebra, coalgebra: Coalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        let coalgebra = coalgebra
            .with_names(algebra.names().to_vec())
            .expect("same dimension");
        Ok(Bialgebra { algebra, coalgebra })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn check(&self) -> CheckResult {
        let a = self.algebra.check();
        if !a.is_yes() {
            return a;
        }
        let c = self.coalgebra.check();
        if !c.is_yes() {
            return c;
        }
        let n = self.dim();
        let unit = self.algebra.unit();
        if self.coalgebra.coproduct(unit) != vector::tensor(unit, unit) {
            return CheckResult::no(Witness::Vector(unit.to_vec()), "Δ(1) ≠ 1 ⊗ 1");
        }
        if !self.coalgebra.counit_of(unit).is_one() {
            return CheckResult::no(Witness::Vector(unit.to_vec()), "ε(1) ≠ 1");
        }
        let deltas: Vec<Vec<Scalar>> = (0..n).map(|i| self.coalgebra.basis_coproduct(i)).collect();
        let eps = self.coalgebra.counit();
        for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.basis_product(i, j);
                if self.coalgebra.coproduct(&prod)
                    != self.algebra.tensor_square_product(&deltas[i], &deltas[j])
                {
                    return CheckResult::no(
                        Witness::Pair(i, j),
                        format!("Δ is not multiplicative on ({}, {})", self.names()[i], self.names()[j]),
                    );
                }
                let lhs = self.coalgebra.counit_of(&prod);
                if lhs != &eps[i] * &eps[j] {
                    return CheckResult::no(
                        Witness::Pair(i, j),
                        format!("ε is not multiplicative on ({}, {})", self.names()[i], self.names()[j]),
                    );
                }
            }
        }
        CheckResult::yes("bialgebra axioms hold")
    }

    pub fn opposite(&self) -> Bialgebra {
        Bialgebra {
            algebra: self.algebra.opposite(),
            coalgebra: self.coalgebra.clone(),
        }
    }

    pub fn coopposite(&self) -> Bialgebra {
        Bialgebra {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.coopposite(),
        }
    }

    pub fn op_cop(&self) -> Bialgebra {
        Bialgebra {
            algebra: self.algebra.opposite(),
            coalgebra: self.coalgebra.coopposite(),
        }
    }

    /// The dual bialgebra; structure constants are transposed, basis names
    /// follow the dual basis.
    pub fn dual(&self) -> Bialgebra {
        Bialgebra::from_parts_unchecked(self.coalgebra.dual(), self.algebra.dual())
            .expect("dual of a bialgebra has matching shapes")
    }

    pub fn change_field(&self, field: Field, f: &impl Fn(&Scalar) -> Option<Scalar>) -> Option<Bialgebra> {
        Bialgebra::from_parts_unchecked(
            self.algebra.change_field(field, f)?,
            self.coalgebra.change_field(field, f)?,
        )
        .ok()
    }
}

/// A bialgebra with (optionally, while under construction) an antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    bialgebra: Bialgebra,
    antipode: Option<Matrix>,
}

impl HopfAlgebra {
    pub fn new(bialgebra: Bialgebra, antipode: Matrix) -> Result<Self> {
        let h = Self::from_parts_unchecked(bialgebra, Some(antipode))?;
        h.check()?.into_result()?;
        Ok(h)
    }

    pub fn from_parts_unchecked(bialgebra: Bialgebra, antipode: Option<Matrix>) -> Result<Self> {
        if let Some(s) = &antipode {
            let n = bialgebra.dim();
            if s.shape() != (n, n) {
                return Err(Error::DimensionMismatch(format!(
                    "antipode is {}x{}, expected {n}x{n}",
                    s.rows(),
                    s.cols()
                )));
            }
            if s.field() != bialgebra.field() {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(HopfAlgebra { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn algebra(&self) -> &Algebra {
        self.bialgebra.algebra()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        self.bialgebra.coalgebra()
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.bialgebra.names()
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    pub fn require_antipode(&self) -> Result<&Matrix> {
        self.antipode.as_ref().ok_or(Error::MissingAntipode)
    }

    pub fn without_antipode(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.clone(),
            antipode: None,
        }
    }

    pub fn with_antipode(&self, s: Matrix) -> Result<HopfAlgebra> {
        HopfAlgebra::from_parts_unchecked(self.bialgebra.clone(), Some(s))
    }

    /// Bialgebra axioms plus `m(S⊗id)Δ = ηε = m(id⊗S)Δ` on every basis
    /// vector. Errors when no antipode is attached.
    pub fn check(&self) -> Result<CheckResult> {
        let s = self.require_antipode()?;
        let b = self.bialgebra.check();
        if !b.is_yes() {
            return Ok(b);
        }
        Ok(antipode_identity(&self.bialgebra, s))
    }

    /// `H^{op,cop}`. Its antipode is the same matrix `S`.
    pub fn op_cop(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.op_cop(),
            antipode: self.antipode.clone(),
        }
    }

    /// `H^op`, whose antipode is `S⁻¹` (absent when `S` is singular or missing).
    pub fn opposite(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.opposite(),
            antipode: self.antipode.as_ref().and_then(Matrix::inverse),
        }
    }

    /// `H^cop`, whose antipode is `S⁻¹` (absent when `S` is singular or missing).
    pub fn coopposite(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.coopposite(),
            antipode: self.antipode.as_ref().and_then(Matrix::inverse),
        }
    }

    /// The dual Hopf algebra, antipode `Sᵀ`.
    pub fn dual(&self) -> HopfAlgebra {
        HopfAlgebra {
            bialgebra: self.bialgebra.dual(),
            antipode: self.antipode.as_ref().map(Matrix::transpose),
        }
    }

    pub fn change_field(&self, field: Field, f: &impl Fn(&Scalar) -> Option<Scalar>) -> Option<HopfAlgebra> {
        let bialgebra = self.bialgebra.change_field(field, f)?;
        let antipode = match &self.antipode {
            Some(s) => {
                let rows = (0..s.rows())
                    .map(|i| s.row(i).iter().map(f).collect::<Option<Vec<_>>>())
                    .collect::<Option<Vec<_>>>()?;
                Some(Matrix::from_rows(field, rows).ok()?)
            }
            None => None,
        };
        Some(HopfAlgebra { bialgebra, antipode })
    }
}

/// Evaluates both antipode identities on each basis vector; the witness is
/// the first basis index where either fails.
pub fn antipode_identity(b: &Bialgebra, s: &Matrix) -> CheckResult {
    let n = b.dim();
    let f = b.field();
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| s.column(j)).collect();
    let alg = b.algebra();
    for i in 0..n {
        let expected: Vec<Scalar> = alg
            .unit()
            .iter()
            .map(|u| u * &b.coalgebra().counit()[i])
            .collect();
        let mut left = vector::zeros(f, n);
        let mut right = vector::zeros(f, n);
        for (j, k, c) in b.coalgebra().comult().slice1(i) {
            let l = alg.product(&images[j], &vector::basis(f, n, k));
            vector::add_scaled(&mut left, c, &l);
            let r = alg.product(&vector::basis(f, n, j), &images[k]);
            vector::add_scaled(&mut right, c, &r);
        }
        if left != expected {
            return CheckResult::no(
                Witness::Index(i),
                format!("S(c₁)c₂ ≠ ε(c)1 for c = {}", b.names()[i]),
            );
        }
        if right != expected {
            return CheckResult::no(
                Witness::Index(i),
                format!("c₁S(c₂) ≠ ε(c)1 for c = {}", b.names()[i]),
            );
        }
    }
    CheckResult::yes("antipode identities hold")
}
