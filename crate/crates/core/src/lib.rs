//! Exact computations on a smooth cubic surface viewed as the blow-up of the
//! plane at six general points.
//!
//! * [`picard`]: the rank-7 Néron–Severi lattice, the 27 lines and the 27
//!   conic pencils, nefness and the Weyl-group action.
//! * [`cones`]: an exact double-description engine and the nef cone together
//!   with its subcones `Γ(C)` and `Γ(h)`.
//! * [`constants`]: closed-form Seshadri and approximation constants with
//!   achieving-curve certificates, plus an independent blow-up oracle.
//! * [`tables`]: the 3 × 99 embedded generator tables and their verifier.
//! * [`heights`]: heights, distances and empirical approximation constants of
//!   rational test sequences.

pub mod cones;
pub mod constants;
mod error;
pub mod heights;
pub mod linalg;
pub mod picard;
pub mod tables;

pub use error::{Error, Result};
