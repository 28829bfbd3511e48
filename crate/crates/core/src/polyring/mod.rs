//! The ring `Z[q]` and truncated power series in `x` over it.

mod poly;
mod series;

pub use poly::{Degree, IntPoly};
pub use series::PolySeries;
