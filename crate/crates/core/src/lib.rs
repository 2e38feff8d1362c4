//! Harmonic analysis over the unit circle of GF(p^{2n}).
//!
//! Characters of a finite Abelian group `G = ∏ Z_{d_i}^{m_i}` take values in
//! the cyclic group `S(GF(q))` of norm-one elements, `q = p^{2n}`, whenever
//! every `d_i` divides `√q+1`. This crate provides exact arithmetic in the
//! field tower, the character table, the GF(q)-valued Fourier transform, and
//! the resulting notion of bent function, both scalar and vector valued, next
//! to a complex-valued comparison path.
//!
//! ```
//! use std::sync::Arc;
//! use ffharmonic::{bent, FieldContext, GroupSpec, ScalarFunction};
//!
//! let ctx = Arc::new(FieldContext::new(2, 1, None).unwrap());
//! let g = GroupSpec::cyclic(ctx, 3).unwrap();
//! let f = ScalarFunction::from_exponents(g, 3, &[0, 1, 1]).unwrap();
//! assert!(bent::is_bent_spectral(&f).unwrap().is_bent);
//! ```

pub mod bent;
pub mod characters;
pub mod classical;
pub mod error;
pub mod field;
pub mod fourier;
pub mod function;
pub mod group;
pub mod json;
pub mod vectorial;

pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement};
pub use function::ScalarFunction;
pub use group::{Factor, GroupElement, GroupSpec};
pub use vectorial::{FieldVector, VectorFunction};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct ReadMe;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/field-tower.md")]
    pub struct FieldTower;
    #[doc = include_str!("../../../book/src/characters.md")]
    pub struct Characters;
    #[doc = include_str!("../../../book/src/fourier.md")]
    pub struct Fourier;
    #[doc = include_str!("../../../book/src/bent.md")]
    pub struct Bent;
    #[doc = include_str!("../../../book/src/classical.md")]
    pub struct Classical;
    #[doc = include_str!("../../../book/src/vectorial.md")]
    pub struct Vectorial;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
