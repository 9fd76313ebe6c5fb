//! Deformations of the discrete Heisenberg group `Γ` acting on the real
//! Heisenberg group `G` from the left and right.
//!
//! The crate decides proper discontinuity of `Γ_{ρ,ρ'}` on `G×G/ΔG` by the
//! determinant criterion on the abelianized matrices `A`, `A'`, parametrizes
//! the parameter and deformation spaces, and ships a brute-force orbit
//! oracle that checks the criterion independently.
//!
//! All arithmetic is generic over [`Scalar`]: exact rationals decide every
//! "≠ 0" with certainty, `f64` decides it up to a [`Tolerance`].

pub mod error;
pub mod heis;
pub mod homs;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod parametrize;
pub mod properness;
pub mod scalar;

pub use error::{DeformError, Result};
pub use heis::{HeisPoint, LieVector};
pub use homs::{GammaWord, HeisHom};
pub use linalg::{Mat2, Mat3};
pub use oracle::{Contact, CoordBox, ProbeConfig, ProbeReport, ProbeVerdict};
pub use parametrize::{CanonicalCoords, Canonicalized, ParamPoint, UVPair};
pub use properness::{Component, Geometry, HomPair, ProperVerdict};
pub use scalar::{Rational, Scalar, Sign, Tolerance};
