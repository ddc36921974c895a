//! Decision procedures for categorical properties of finite-dimensional
//! morphisms: epimorphisms of algebras, monomorphisms of coalgebras, the
//! coradical, freeness of extensions, and a corpus-wide consistency harness.

mod coradical;
mod epi;
mod flat;
mod harness;
mod mono;

pub use coradical::{coradical, grouplikes_in, is_subcoalgebra, jacobson_radical, scorad_check, ScoradReport, Subspace};
pub use epi::{epi_test_alg, epi_test_hopf, RelativeTensorSquare};
pub use flat::{endomorphism_dim, faithful_coflatness_test, faithful_flatness_test, FlatnessConfig};
pub use harness::{consistency_harness, standard_corpus, CorpusEntry, EntryReport, HarnessReport};
pub use mono::{mono_test_coalg, mono_test_hopf, CotensorSpace};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::structure::{algebra_morphism, coalgebra_morphism, hopf_morphism, Algebra, Coalgebra, HopfAlgebra};

pub(crate) fn require_algebra_morphism(a: &Algebra, b: &Algebra, f: &Matrix) -> Result<()> {
    let r = algebra_morphism(a, b, f);
    if r.is_yes() {
        Ok(())
    } else {
        Err(Error::NotMorphism { level: "algebra", result: r })
    }
}

pub(crate) fn require_coalgebra_morphism(c: &Coalgebra, d: &Coalgebra, f: &Matrix) -> Result<()> {
    let r = coalgebra_morphism(c, d, f);
    if r.is_yes() {
        Ok(())
    } else {
        Err(Error::NotMorphism { level: "coalgebra", result: r })
    }
}

pub(crate) fn require_hopf_morphism(h: &HopfAlgebra, k: &HopfAlgebra, f: &Matrix) -> Result<()> {
    let r = hopf_morphism(h, k, f)?;
    if r.is_yes() {
        Ok(())
    } else {
        Err(Error::NotMorphism { level: "Hopf", result: r })
    }
}
