//! lcforge: boundary divisors and machine-re-verifiable certificates for
//! log canonical centers of projective varieties.
//!
//! Given an ambient projective variety and a subvariety of it, the library
//! embeds the subvariety in a reduced complete intersection through
//! verified random linear combinations, forms the boundary divisor from the
//! chosen hypersurfaces, derives the exceptional discrepancies by exact
//! divisor arithmetic, and emits a certificate in which every algebraically
//! checkable hypothesis carries re-runnable evidence. Facts that are not
//! decidable at this scale (normality of the ambient, primality of the
//! center, Cohen-Macaulayness, log canonicity of the given subvariety) are
//! declared by the caller and recorded; conclusions stay conditional on the
//! declarations.

pub mod builder;
pub mod certificate;
pub mod cli;
pub mod dimension;
pub mod error;
pub mod expr;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod predicates;
pub mod problem;
pub mod special;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Ring, RingContext};
