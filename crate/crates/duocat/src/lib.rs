//! An exact, finite engine for duoidal category theory.
//!
//! The crate represents small enriched categories, monoidal and duoidal
//! structures, bimonoids, module categories, convolution products, fusion
//! morphisms, and warpings as finite tables over one of two enrichment bases
//! (finite sets, or vector spaces over a prime field), and validates every
//! axiom by exhaustive evaluation. Validators return structured [`report`]s
//! with counterexample coordinates rather than booleans.
//!
//! Layering, bottom up:
//! - [`base`]: the enrichment backends — values, maps, tensor, (co)equalizers,
//!   internal homs.
//! - [`cat`]: enriched categories, functors, natural transformations.
//! - [`monoidal`]: monoidal structures, braidings, monoids/comonoids,
//!   hom-object monoidality and convolution monoids.
//! - [`duoidal`]: two interacting monoidal structures with interchange,
//!   bimonoids, structured functors.
//! - [`concrete`]: structural (non-tabulated) carriers for product-style
//!   categories whose hom objects are too large to tabulate.
//! - [`dayconv`]: coends, convolution of presheaves, pointwise lifted
//!   structure.
//! - [`tannaka`]: module categories over a bimonoid, lifted monoidal
//!   structures, and reconstruction of the bimonoid from them.
//! - [`hopf`]: fusion morphisms, the Hopf condition, closedness consequences.
//! - [`warp`]: warpings of monoidal categories and the induced structures.

pub mod base;
pub mod cat;
pub mod concrete;
pub mod dayconv;
pub mod duoidal;
pub mod error;
pub mod hopf;
pub mod monoidal;
pub mod par;
pub mod report;
pub mod tannaka;
pub mod warp;

pub use error::{Error, Result};
pub use report::{Check, Counterexample, Report, Status};
