//! Closed forms, recurrences and determinant identities for the `d`, `D`,
//! `V`, `r` and `u` families. Each family is reachable along at least two
//! independent routes so that results can be cross-checked exactly.

mod andrews_wimp;
mod closed;
mod condensation;
mod ratio;
mod rtable;
mod useq;

pub use andrews_wimp::{
    andrews_wimp_pair, detect_size_convention, v_via_u_hankel, v_via_u_hankel_as_printed, AndrewsWimp,
    SizeConvention,
};
pub use closed::{
    d_closed, r1_closed, r1_rec, r1_sum, r2_rec, r2_sum, r2_weight, vandermonde_q, vandermonde_q_det,
};
pub use condensation::{condensation_check_d, condensation_check_v};
pub use ratio::{
    r_condensation, r_def, r_def_with, r_step, rm1_via_u, v2_sign_exponent, v2_via_u, v_closed, v_det, R_STEP_SIGN,
};
pub use rtable::{RTable, Route};
pub use useq::{theta_series, u_sequence, USequence};

use crate::polyring::IntPoly;

/// `(-1)^e * p`.
pub fn with_sign(p: IntPoly, e: i64) -> IntPoly {
    if e.rem_euclid(2) == 0 {
        p
    } else {
        -p
    }
}

/// `q - 1`.
pub(crate) fn q_minus_one() -> IntPoly {
    IntPoly::from_i64s(&[-1, 1])
}
