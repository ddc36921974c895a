//! Structure-constant representations of algebras, coalgebras, bialgebras
//! and Hopf algebras, with their axiom checks, opposite/coopposite/dual
//! constructions and morphism checks.

mod algebra;
mod coalgebra;
mod hopf;
mod morphism;

pub use algebra::Algebra;
pub use coalgebra::Coalgebra;
pub use hopf::{antipode_identity, Bialgebra, HopfAlgebra};
pub use morphism::{algebra_morphism, coalgebra_morphism, hopf_morphism, image_of, LinearMap};

use crate::linalg::Field;

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// Anything with a field and a finite basis.
pub trait Based {
    fn field(&self) -> Field;
    fn dim(&self) -> usize;
    fn names(&self) -> &[String];
}

pub trait HasAlgebra: Based {
    fn algebra(&self) -> &Algebra;
}

pub trait HasCoalgebra: Based {
    fn coalgebra(&self) -> &Coalgebra;
}

macro_rules! based {
    ($($t:ty),*) => {$(
        impl Based for $t {
            fn field(&self) -> Field { <$t>::field(self) }
            fn dim(&self) -> usize { <$t>::dim(self) }
            fn names(&self) -> &[String] { <$t>::names(self) }
        }
    )*};
}

based!(Algebra, Coalgebra, Bialgebra, HopfAlgebra);

impl HasAlgebra for Algebra {
    fn algebra(&self) -> &Algebra {
        self
    }
}

impl HasAlgebra for Bialgebra {
    fn algebra(&self) -> &Algebra {
        Bialgebra::algebra(self)
    }
}

impl HasAlgebra for HopfAlgebra {
    fn algebra(&self) -> &Algebra {
        HopfAlgebra::algebra(self)
    }
}

impl HasCoalgebra for Coalgebra {
    fn coalgebra(&self) -> &Coalgebra {
        self
    }
}

impl HasCoalgebra for Bialgebra {
    fn coalgebra(&self) -> &Coalgebra {
        Bialgebra::coalgebra(self)
    }
}

impl HasCoalgebra for HopfAlgebra {
    fn coalgebra(&self) -> &Coalgebra {
        HopfAlgebra::coalgebra(self)
    }
}
