//! The q-Pascal triangle `<n k>_q`, its power-series characterisation, the
//! alternating-sum formula for `u(n, q)`, and the partition-weight
//! interpretation checked by exhaustive enumeration.

mod partition;
mod triangle;

pub use partition::{conjecture_check, partition_weight, partitions_first_part, Partition};
pub use triangle::{
    coefficient_sequence, f_power_coefficients, power_identity_holds, render_triangle_text, triangle_rows,
    u_via_triangle, QTriangle,
};
