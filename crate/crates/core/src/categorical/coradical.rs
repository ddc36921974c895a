use crate::error::{Error, Result};
use crate::linalg::{vector, Field, Matrix, RowSpace, Scalar};
use crate::structure::{Algebra, Coalgebra, HopfAlgebra};
use crate::verdict::{CheckResult, Witness};

/// A subspace of a based space, spanned by independent columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Matrix,
}

impl Subspace {
    /// The column span of `m`, reduced to an independent basis.
    pub fn span(m: &Matrix) -> Self {
        let rk = m.rank_kernel_image();
        Subspace {
            ambient_dim: m.rows(),
            basis: rk.image,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.dim() == self.ambient_dim || self.basis.spans(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        let rows = RowSpace::of_columns(&self.basis);
        other.basis.columns().iter().all(|c| rows.contains(c))
    }

    pub fn is_everything(&self) -> bool {
        self.dim() == self.ambient_dim
    }
}

fn check_characteristic(field: Field, dim: usize) -> Result<()> {
    match field {
        Field::Rational => Ok(()),
        Field::Prime(p) if p as usize > dim => Ok(()),
        Field::Prime(p) => Err(Error::UnsupportedCharacteristic(format!(
            "trace-form radical needs characteristic 0 or p > dim; got p = {p}, dim = {dim}"
        ))),
    }
}

/// The Jacobson radical as the kernel of the trace form `(x, y) ↦ Tr(L_{xy})`.
pub fn jacobson_radical(a: &Algebra) -> Result<Subspace> {
    let n = a.dim();
    let field = a.field();
    check_characteristic(field, n)?;
    let traces: Vec<Scalar> = (0..n)
        .map(|l| {
            let mut t = field.zero();
            for j in 0..n {
                t += &a.mult().get(l, j, j);
            }
            t
        })
        .collect();
    let mut form = Matrix::zeros(field, n, n);
    for (i, j, l, c) in a.mult().iter() {
        if !traces[l].is_zero() {
            form.add_to(i, j, &(c * &traces[l]));
        }
    }
    Ok(Subspace {
        ambient_dim: n,
        basis: form.transpose().kernel(),
    })
}

/// `H_0 = J(C*)^⊥`.
pub fn coradical(c: &Coalgebra) -> Result<Subspace> {
    let j = jacobson_radical(&c.dual())?;
    let n = c.dim();
    let basis = if j.dim() == 0 {
        Matrix::identity(c.field(), n)
    } else {
        j.basis.transpose().kernel()
    };
    Ok(Subspace { ambient_dim: n, basis })
}

/// `Δ(V) ⊆ V ⊗ V`.
pub fn is_subcoalgebra(c: &Coalgebra, v: &Subspace) -> bool {
    let vv = Subspace {
        ambient_dim: c.dim() * c.dim(),
        basis: v.basis.kron(&v.basis),
    };
    let rows = RowSpace::of_columns(&vv.basis);
    v.basis.columns().iter().all(|x| rows.contains(&c.coproduct(x)))
}

/// Grouplikes among the given candidate vectors.
pub fn grouplikes_in<'a>(c: &Coalgebra, candidates: impl IntoIterator<Item = &'a [Scalar]>) -> Vec<Vec<Scalar>> {
    candidates
        .into_iter()
        .filter(|x| c.counit_of(x).is_one() && c.coproduct(x) == vector::tensor(x, x))
        .map(<[Scalar]>::to_vec)
        .collect()
}

#[derive(Clone, Debug)]
pub struct ScoradReport {
    pub coradical_dim: usize,
    pub image_dim: usize,
    /// `H_0 ⊆ S(H)`.
    pub contained: bool,
    pub surjective: bool,
    /// Yes when containment implies surjectivity, as it must.
    pub result: CheckResult,
}

pub fn scorad_check(h: &HopfAlgebra) -> Result<ScoradReport> {
    let s = h.require_antipode()?;
    let h0 = coradical(h.coalgebra())?;
    let image = Subspace::span(s);
    let contained = image.contains_subspace(&h0);
    let surjective = image.is_everything();
    let result = if contained && !surjective {
        CheckResult::no(
            Witness::Dimension {
                expected: h.dim(),
                found: image.dim(),
            },
            "S(H) contains the coradical but S is not surjective",
        )
    } else {
        CheckResult::yes(format!(
            "containment {contained}, surjective {surjective}; implication holds"
        ))
    };
    Ok(ScoradReport {
        coradical_dim: h0.dim(),
        image_dim: image.dim(),
        contained,
        surjective,
        result,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn sweedler_coradical_is_grouplike_span() {
        let q = Field::Rational;
        let h = library::sweedler(q).unwrap();
        let h0 = coradical(h.coalgebra()).unwrap();
        assert_eq!(h0.dim(), 2);
        assert!(h0.contains(&vector::basis(q, 4, 0)));
        assert!(h0.contains(&vector::basis(q, 4, 1)));
        assert!(is_subcoalgebra(h.coalgebra(), &h0));
    }

    #[test]
    fn cosemisimple_examples() {
        let q = Field::Rational;
        for h in [library::cyclic_group_algebra(q, 3).unwrap(), library::s3_group_algebra(q).unwrap()] {
            assert!(coradical(h.coalgebra()).unwrap().is_everything());
        }
        assert!(coradical(&library::matrix_coalgebra(q, 2).unwrap()).unwrap().is_everything());
    }

    #[test]
    fn small_characteristic_is_rejected() {
        let f = Field::prime(3).unwrap();
        let h = library::sweedler(f).unwrap();
        assert!(matches!(coradical(h.coalgebra()), Err(Error::UnsupportedCharacteristic(_))));
        let f = Field::prime(5).unwrap();
        assert_eq!(coradical(library::sweedler(f).unwrap().coalgebra()).unwrap().dim(), 2);
    }

    #[test]
    fn scorad_on_sweedler() {
        let r = scorad_check(&library::sweedler(Field::Rational).unwrap()).unwrap();
        assert!(r.contained && r.surjective && r.result.is_yes());
    }
}
