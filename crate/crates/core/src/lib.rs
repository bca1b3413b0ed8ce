//! Exact symbolic engine for the transverse Getzler symbol calculus of a
//! foliation.

pub mod asymptotic;
pub mod composition;
pub mod dirac;
pub mod error;
pub mod exterior_clifford;
pub mod geometry_model;
pub mod quantization_oracle;
pub mod random;
pub mod serialization;
pub mod symbol_poly;
pub mod verify;

pub use composition::{a0, a0_riemannian, ak, compose_full, BidiffSelector};
pub use error::{Error, Result};
pub use exterior_clifford::{Blade, Endo, Multivector, Scalar};
pub use geometry_model::{random_geometry, ModelGeometry, RandomFlags};
pub use quantization_oracle::{calibrate, Calibration, DiffOp, Generator, Letter, Model};
pub use symbol_poly::{Dims, Monomial, PolySymbol, VarId};

// Book chapters, compiled as doc tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/clifford.md")]
    pub mod clifford {}
    #[doc = include_str!("../../../book/src/symbols.md")]
    pub mod symbols {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub mod oracle {}
    #[doc = include_str!("../../../book/src/composition.md")]
    pub mod composition {}
    #[doc = include_str!("../../../book/src/dirac.md")]
    pub mod dirac {}
    #[doc = include_str!("../../../book/src/asymptotic.md")]
    pub mod asymptotic {}
    #[doc = include_str!("../../../book/src/verification.md")]
    pub mod verification {}
}
