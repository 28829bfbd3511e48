//! Exact computer algebra over `Z[q]` for the q-Hankel determinant families
//! `d_{m,n}`, `D_{m,n}`, `V_{k,n}`, the derived polynomial families
//! `r_{m,n}` and `u(n, q)`, and the q-Pascal triangle.
//!
//! Every family can be computed along at least two independent routes, and
//! the crate exposes each route separately so callers can cross-check them.

pub mod error;
pub mod hankel;
pub mod identities;
pub mod polyring;
pub mod qcore;
pub mod qpascal;

pub use error::{Error, Result};
pub use hankel::{det_cofactor, det_fraction_free, CofactorOracle, DetEngine, PolyMatrix};
pub use identities::{RTable, Route, USequence};
pub use polyring::{Degree, IntPoly, PolySeries};
pub use qpascal::{Partition, QTriangle};

pub use num_bigint::BigInt;
