//! Exact arithmetic in Galois rings GR(2^n, m) and generalized extended
//! Hamming codes over them: polynomial lifting, Teichmuller digits, the
//! level maps tau/eta/mu and Frobenius, parity-check codes with systematic
//! encoding, Hamming/Lee weights, minimum-weight searches, and the
//! constructions of the minimum-weight codeword families.

pub mod code;
pub mod construct;
pub mod error;
pub mod poly;
pub mod ring;
pub mod search;

pub use code::{CheckReport, Codeword, GehCode, WeightReport};
pub use error::{Error, Result};
pub use poly::{lift_primitive, BinaryPolynomial, LiftedPolynomial, PolyTable};
pub use ring::{RingElement, RingParams, TeichmullerDigits};
