//! Checks that span several modules through the public API only.

use qhankel_core::hankel::{hankel_full, hankel_trunc, v_matrix, CofactorOracle};
use qhankel_core::identities::{
    d_closed, r1_closed, r_condensation, r_def, u_sequence, v_closed, v_det, RTable, Route,
};
use qhankel_core::qpascal::{conjecture_check, u_via_triangle};
use qhankel_core::{det_fraction_free, DetEngine, Error, IntPoly, PolyMatrix, PolySeries, QTriangle};

#[test]
fn checked_engine_agrees_with_closed_form() {
    let engine = DetEngine::Checked(CofactorOracle::default());
    for m in -2..=3i64 {
        for n in 0..=6usize {
            assert_eq!(engine.det(&hankel_full(m, n)).unwrap(), d_closed(m, n), "m={m} n={n}");
        }
    }
}

#[test]
fn oracle_bound_applies_to_cofactor_only() {
    let oracle = CofactorOracle::new(3);
    let m = hankel_full(0, 4);
    assert!(matches!(
        DetEngine::Cofactor(oracle).det(&m),
        Err(Error::OracleSizeExceeded { size: 4, bound: 3 })
    ));
    // above the bound the checked engine falls back to elimination alone
    assert_eq!(DetEngine::Checked(oracle).det(&m).unwrap(), d_closed(0, 4));
}

#[test]
fn determinant_free_route_matches_ratio() {
    let u = u_sequence(20);
    let table = RTable::new();
    for m in 0..=3usize {
        for n in 0..=4usize {
            let stepped = r_condensation(m, n, &u, &table).unwrap();
            assert_eq!(stepped, r_def(m, n).unwrap(), "r_{m},{n}");
        }
    }
    assert!(table.routes(1, 3).contains(&Route::Condensation));
    table.insert(1, 3, Route::ClosedForm, r1_closed(3)).unwrap();
    assert!(table.is_verified(1, 3));
    assert!(table.insert(1, 3, Route::SumFormula, IntPoly::one()).is_err());
}

#[test]
fn v_closed_matches_both_determinant_paths() {
    for k in 1..=3usize {
        for n in 0..=3usize {
            let via_builder = det_fraction_free(&v_matrix(k, n + k).unwrap());
            let via_trunc = v_det(k as i64, n + k, &DetEngine::FractionFree).unwrap();
            assert_eq!(via_builder, via_trunc);
            assert_eq!(v_closed(k, n).unwrap(), via_builder);
        }
    }
}

#[test]
fn triangle_and_series_inversion_agree() {
    let tri = QTriangle::new();
    let u = u_sequence(11);
    for n in 1..=10 {
        assert_eq!(u_via_triangle(n, &tri).unwrap(), u.u(n as i64));
    }
    for n in 0..=7u32 {
        for k in 0..=n {
            assert!(conjecture_check(n, k, &tri));
        }
    }
}

#[test]
fn truncated_and_full_differ_only_for_negative_m() {
    for n in 1..=5 {
        assert_eq!(hankel_trunc(0, n), hankel_full(0, n));
        assert_ne!(hankel_trunc(-1, n), hankel_full(-1, n));
    }
}

#[test]
fn json_round_trips() {
    let m = hankel_full(-2, 3);
    let text = serde_json::to_string(&m).unwrap();
    let back: PolyMatrix = serde_json::from_str(&text).unwrap();
    assert_eq!(back, m);
    let p: IntPoly = "-1 + 2*q - q^3".parse().unwrap();
    let back: IntPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back, p);
}

#[test]
fn series_inversion_needs_unit_constant() {
    let s = PolySeries::new(vec![IntPoly::constant(3), IntPoly::one()], 4);
    assert!(matches!(s.invert(), Err(Error::NonUnitConstantTerm(_))));
}
