//! Degree-truncated free constructions: the free bialgebra on a coalgebra,
//! the free Hopf algebra on a coalgebra or a bialgebra, and the enveloping
//! Hopf algebra with bijective antipode.
//!
//! Generators are `c_n` for base basis elements `c` and families
//! `n = 0..=n_max`; `S(c_n) = c_{n+1}`. Odd families carry the coopposite
//! comultiplication. A truncation at degree `d` with slack `s` reduces words
//! of weight `≤ d` modulo all relation multiples of weight `≤ d + s`, so its
//! dimensions are upper bounds for the true ones.

mod elimination;
mod presentation;
mod truncation;
mod word;

pub use elimination::Eliminator;
pub use presentation::{BialgebraPresentation, GradedPresentation};
pub use truncation::{
    antipode_image_dims, colimit_oracle, free_bialgebra, free_hopf_on_bialgebra, free_hopf_on_coalgebra,
    free_hopf_on_presentation, k_star, k_star_with, unit_arrow_report, Construction, ImageDims, TruncatedBialgebra,
    TruncationOptions, UnitArrowReport,
};
pub use word::{Generator, Poly, Word};
