//! Verification suites. Each suite turns a family of identities into a list
//! of [`Case`]s; a suite passes iff none of them fails.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use qhankel_core::hankel::{
    adjugate_inverse_check, hankel_full, hankel_trunc, v_matrix, vandermonde_q_matrix, CofactorOracle, DetEngine,
    PolyMatrix,
};
use qhankel_core::identities::{
    andrews_wimp_pair, condensation_check_d, condensation_check_v, d_closed, detect_size_convention, r1_closed,
    r1_rec, r1_sum, r2_rec, r2_sum, r_def_with, r_step, rm1_via_u, theta_series, u_sequence, v2_sign_exponent,
    v_closed, v_via_u_hankel, vandermonde_q, SizeConvention,
};
use qhankel_core::qcore::{binom2, q_factorial};
use qhankel_core::qpascal::{
    coefficient_sequence, conjecture_check, f_power_coefficients, triangle_rows, u_via_triangle,
};
use qhankel_core::{BigInt, Degree, IntPoly, PolySeries, QTriangle, RTable, Route};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::CliError;
use crate::oeis::A114604;
use crate::report::{Case, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Eq4,
    Thm1,
    Thm2,
    Thm3,
    Condensation,
    AndrewsWimp,
    Appendix,
    Conjecture,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 8] = [
        Suite::Eq4,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Condensation,
        Suite::AndrewsWimp,
        Suite::Appendix,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eq4 => "eq4",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Condensation => "condensation",
            Suite::AndrewsWimp => "andrews-wimp",
            Suite::Appendix => "appendix",
            Suite::Conjecture => "conjecture",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::INDIVIDUAL.iter().map(|s| s.name()).chain(["all"]).collect();
                CliError::Usage(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

/// Sweep bounds. `None` means the suite's own default range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SuiteParams {
    pub max_n: Option<usize>,
    pub max_m: Option<usize>,
    pub oracle: CofactorOracle,
}

impl SuiteParams {
    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn m(&self, default: usize) -> usize {
        self.max_m.unwrap_or(default)
    }

    fn engine(&self) -> DetEngine {
        DetEngine::Checked(self.oracle)
    }
}

pub fn run(suite: Suite, params: &SuiteParams) -> VerifyReport {
    let start = Instant::now();
    if suite == Suite::All {
        let reports: Vec<VerifyReport> = Suite::INDIVIDUAL.par_iter().map(|s| run(*s, params)).collect();
        let mut merged = VerifyReport::merge("all", reports);
        merged.elapsed = start.elapsed();
        return merged;
    }
    let cases = match suite {
        Suite::Eq4 => eq4(params),
        Suite::Thm1 => thm1(params),
        Suite::Thm2 => thm2(params),
        Suite::Thm3 => thm3(params),
        Suite::Condensation => condensation(params),
        Suite::AndrewsWimp => andrews_wimp(params),
        Suite::Appendix => appendix(params),
        Suite::Conjecture => conjecture(params),
        Suite::All => unreachable!(),
    };
    VerifyReport::new(suite.name(), cases, start.elapsed())
}

/// Turns an engine error into a failing case.
fn attempt(case: Case, f: impl FnOnce(Case) -> qhankel_core::Result<Case>) -> Case {
    let fallback = case.clone();
    f(case).unwrap_or_else(|e| fallback.fail(e.to_string()))
}

fn d_closed_cases(m: i64, n: usize, params: &SuiteParams) -> Vec<Case> {
    let case = Case::new("closed-vs-cofactor", &[("m", m), ("n", n as i64)]);
    let matrix = hankel_full(m, n);
    if !params.oracle.accepts(&matrix) {
        return vec![case.skip(format!("size {n} above oracle bound {}", params.oracle.bound))];
    }
    vec![attempt(case, |c| Ok(c.equal(&d_closed(m, n), &params.engine().det(&matrix)?)))]
}

fn eq4(params: &SuiteParams) -> Vec<Case> {
    let max_m = params.m(4) as i64;
    let max_n = params.n(7);
    let grid: Vec<(i64, usize)> = (-max_m..=max_m).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect();
    let mut cases: Vec<Case> = grid
        .par_iter()
        .flat_map_iter(|&(m, n)| d_closed_cases(m, n, params))
        .collect();
    for n in 0..=max_n {
        let case = Case::new("vandermonde", &[("n", n as i64)]);
        let matrix = vandermonde_q_matrix(n);
        cases.push(if params.oracle.accepts(&matrix) {
            attempt(case, |c| Ok(c.equal(&vandermonde_q(n), &params.engine().det(&matrix)?)))
        } else {
            case.skip(format!("size {n} above oracle bound {}", params.oracle.bound))
        });
    }
    // D_{-1,n+2} and d_{-1,n+2} differ only in entry (0,0)
    for n in 0..=max_n.min(6) {
        let case = Case::new("laplace-edge", &[("n", n as i64)]);
        cases.push(attempt(case, |c| {
            let e = params.engine();
            let lhs = e.det(&hankel_trunc(-1, n + 2))?;
            let rhs = e.det(&hankel_full(-1, n + 2))? - e.det(&hankel_full(1, n + 1))?.shift_up(1);
            Ok(c.equal(&lhs, &rhs))
        }));
    }
    cases
}


fn thm1(params: &SuiteParams) -> Vec<Case> {
    let max_n = params.n(8);
    let mut cases: Vec<Case> = (0..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = [("n", n as i64)];
            let closed = r1_closed(n);
            let mut out = vec![
                Case::new("closed-vs-sum", &p).equal(&closed, &r1_sum(n)),
                Case::new("closed-vs-rec", &p).equal(&closed, &r1_rec(n)),
                attempt(Case::new("closed-vs-det", &p), |c| {
                    Ok(c.equal(&closed, &r_def_with(1, n, &params.engine())?))
                }),
                Case::new("degree", &p).holds(closed.degree() == Degree::Finite(n * (n + 3) / 2), || {
                    format!("degree {}, expected {}", closed.degree(), n * (n + 3) / 2)
                }),
            ];
            if let Some(&v) = A114604.get(n) {
                let got = closed.eval_i64(2);
                out.push(Case::new("a114604", &p).holds(got == v.into(), || format!("r_1,{n}(2) = {got}, expected {v}")));
            }
            out
        })
        .collect();
    for n in 1..=max_n.max(10) {
        let tail = IntPoly::from_i64s(&[-1, 1]).pow(n as u32) * q_factorial(n);
        let expected = n * (n + 1) / 2;
        cases.push(
            Case::new("tail-degree", &[("n", n as i64)]).holds(
                tail.degree() == Degree::Finite(expected) && expected < n * (n + 3) / 2,
                || format!("deg (q-1)^n [n]! = {}", tail.degree()),
            ),
        );
    }
    cases
}

fn thm2(params: &SuiteParams) -> Vec<Case> {
    (0..=params.n(6))
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = [("n", n as i64)];
            let rec = r2_rec(n);
            vec![
                attempt(Case::new("rec-vs-sum", &p), |c| Ok(c.equal(&rec, &r2_sum(n)?))),
                attempt(Case::new("rec-vs-det", &p), |c| Ok(c.equal(&rec, &r_def_with(2, n, &params.engine())?))),
                Case::new("degree", &p).holds(rec.degree() == Degree::Finite(n * (n + 4)), || {
                    format!("degree {}, expected {}", rec.degree(), n * (n + 4))
                }),
            ]
        })
        .collect()
}

const R_N1_LISTED: [&str; 4] = [
    "1",
    "-1 + q + q^2",
    "1 - 2*q - q^2 + q^3 + q^4 + q^5",
    "-1 + 3*q - 3*q^3 - q^4 - q^5 + q^6 + q^7 + q^8 + q^9",
];

const U_LISTED: [&str; 7] = [
    "1",
    "-1",
    "1 - q",
    "-1 + 2*q - q^3",
    "1 - 3*q + q^2 + 2*q^3 - q^6",
    "-1 + 4*q - 3*q^2 - 3*q^3 + 2*q^4 + 2*q^6 - q^10",
    "1 - 5*q + 6*q^2 + 3*q^3 - 6*q^4 - 2*q^6 + 2*q^7 + 2*q^10 - q^15",
];

fn parse(s: &str) -> IntPoly {
    s.parse().expect("embedded polynomial literal")
}

fn thm3(params: &SuiteParams) -> Vec<Case> {
    let max_m = params.m(7);
    let max_v2 = params.n(9);
    let u = u_sequence(max_m.max(max_v2).max(12) + 3);
    let engine = params.engine();
    let mut cases = Vec::new();

    for m in 0..=max_m {
        let case = Case::new("r_m1-via-u", &[("m", m as i64)]);
        cases.push(attempt(case, |c| Ok(c.equal(&rm1_via_u(m, &u)?, &r_def_with(m, 1, &engine)?))));
    }
    for (m, listed) in R_N1_LISTED.iter().enumerate() {
        let case = Case::new("listed-r_m1", &[("m", m as i64)]);
        cases.push(attempt(case, |c| Ok(c.equal(&rm1_via_u(m, &u)?, &parse(listed)))));
    }
    for (n, listed) in U_LISTED.iter().enumerate() {
        cases.push(Case::new("listed-u", &[("n", n as i64)]).equal(&u.u(n as i64), &parse(listed)));
    }

    for n in 2..=max_v2.min(8) {
        let v = v_matrix(1, n + 1).expect("1 <= n + 1");
        let inverse = PolyMatrix::from_fn(n + 1, |i, j| u.u(n as i64 - (i + j) as i64));
        cases.push(
            Case::new("v1-inverse", &[("n", n as i64)])
                .holds(adjugate_inverse_check(&v, &inverse), || "V_{1,n+1} * (u(n-i-j)) != I".into()),
        );
    }

    // sign of det V_{2,n} relative to u(n), grouped by n mod 4
    let mut sign_by_residue: [Option<i64>; 4] = [None; 4];
    let mut law_ok = true;
    for n in 2..=max_v2 {
        let p = [("n", n as i64)];
        let det = match engine.det(&v_matrix(2, n).expect("2 <= n")) {
            Ok(d) => d,
            Err(e) => {
                cases.push(Case::new("v2-abs", &p).fail(e.to_string()));
                law_ok = false;
                continue;
            }
        };
        let un = u.u(n as i64);
        cases.push(Case::new("v2-abs", &p).equal(&det.abs_coeffs(), &un.abs_coeffs()));
        let sign = if det == un {
            1
        } else if det == -&un {
            -1
        } else {
            0
        };
        let frozen = if v2_sign_exponent(n) % 2 == 0 { 1 } else { -1 };
        cases.push(Case::new("v2-sign", &p).holds(sign == frozen, || format!("observed sign {sign}, frozen {frozen}")));
        let slot = &mut sign_by_residue[n % 4];
        match slot {
            Some(s) if *s != sign => law_ok = false,
            _ => *slot = Some(sign),
        }
    }
    let pattern: Vec<String> = sign_by_residue
        .iter()
        .map(|s| match s {
            Some(1) => "+".into(),
            Some(-1) => "-".into(),
            _ => "?".into(),
        })
        .collect();
    cases.push(
        Case::new("v2-sign-law", &[])
            .holds(law_ok, || "sign is not a function of n mod 4".into())
            .note(format!("sign of v_2,n / u(n) by n mod 4 = 0,1,2,3: {}", pattern.join(""))),
    );

    for k in 1..=3usize {
        for n in 0..=4usize {
            let p = [("k", k as i64), ("n", n as i64)];
            let direct = engine.det(&v_matrix(k, n + k).expect("k <= n + k"));
            cases.push(attempt(Case::new("v-closed", &p), |c| Ok(c.equal(&v_closed(k, n)?, &direct.clone()?))));
        }
    }
    cases
}

fn condensation(params: &SuiteParams) -> Vec<Case> {
    let max_n = params.n(5);
    let engine = params.engine();
    let mut cases: Vec<Case> = Vec::new();

    let d_grid: Vec<(i64, usize)> = (-3..=1).flat_map(|m| (1..=max_n).map(move |n| (m, n))).collect();
    cases.par_extend(d_grid.par_iter().map(|&(m, n)| {
        attempt(Case::new("d-condensation", &[("m", m), ("n", n as i64)]), |c| {
            Ok(c.residual(&condensation_check_d(m, n, &engine)?))
        })
    }));
    let v_grid: Vec<(usize, usize)> = (1..=3).flat_map(|k| (1..=max_n).map(move |n| (k, n))).collect();
    cases.par_extend(v_grid.par_iter().map(|&(k, n)| {
        attempt(Case::new("v-condensation", &[("k", k as i64), ("n", n as i64)]), |c| {
            Ok(c.residual(&condensation_check_v(k, n, &engine)?))
        })
    }));

    // r_{m,n} for m <= max_m + 2, n <= max_n - 1 by determinant ratio, then
    // every r_{m,n} with n >= 2 rebuilt by the condensation step
    let max_m = params.m(3);
    let table = RTable::new();
    let cells: Vec<(usize, usize)> = (0..=max_m + 2).flat_map(|m| (0..=max_n).map(move |n| (m, n))).collect();
    let fill_errors: Vec<Case> = cells
        .par_iter()
        .filter(|&&(m, n)| m <= max_m || n < max_n)
        .filter_map(|&(m, n)| {
            let value = r_def_with(m, n, &engine).and_then(|r| table.insert(m, n, Route::DeterminantRatio, r));
            value
                .err()
                .map(|e| Case::new("r-step-fill", &[("m", m as i64), ("n", n as i64)]).fail(e.to_string()))
        })
        .collect();
    cases.extend(fill_errors);
    for m in 0..=max_m {
        for n in 2..=max_n {
            let case = Case::new("r-step", &[("m", m as i64), ("n", n as i64)]);
            cases.push(attempt(case, |c| {
                let stepped = r_step(m, n, &table)?;
                let reference = table.require(m, n)?;
                let c = c.equal(&stepped, &reference);
                table.insert(m, n, Route::Condensation, stepped)?;
                Ok(c)
            }));
        }
    }
    cases
}

/// A series with constant term 1 and small random polynomial coefficients.
fn random_series(seed: u64, order: usize) -> PolySeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    PolySeries::from_fn(order, |n| {
        if n == 0 {
            IntPoly::one()
        } else {
            let len = rng.gen_range(0..=3);
            let coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-4..=4)).collect();
            IntPoly::from_i64s(&coeffs)
        }
    })
}

fn andrews_wimp(params: &SuiteParams) -> Vec<Case> {
    let max_m = params.m(2);
    let max_n = params.n(3).max(1);
    let order = 2 * (max_m + max_n) + 4;
    let series = [
        ("theta", theta_series(order)),
        ("random-a", random_series(0x5eed_0001, order)),
        ("random-b", random_series(0x5eed_0002, order)),
    ];
    let grid: Vec<(usize, usize)> = (0..=max_m).flat_map(|m| (1..=max_n).map(move |n| (m, n))).collect();
    let mut cases = Vec::new();

    let all_cases = series.iter().flat_map(|(_, s)| grid.iter().map(move |&(m, n)| (s, m, n)));
    let detected = detect_size_convention(all_cases);
    cases.push(match &detected {
        Ok(Some(SizeConvention::Inclusive)) => Case::new("size-convention", &[]).note("left matrix has size N+M+1"),
        Ok(other) => Case::new("size-convention", &[]).fail(format!("detected {other:?}")),
        Err(e) => Case::new("size-convention", &[]).fail(e.to_string()),
    });

    for (idx, (name, s)) in series.iter().enumerate() {
        for &(m, n) in &grid {
            let case = Case::new(&format!("lemma-{name}"), &[("series", idx as i64), ("M", m as i64), ("N", n as i64)]);
            cases.push(attempt(case, |c| {
                let r = andrews_wimp_pair(s, m, n, SizeConvention::Inclusive)?;
                Ok(c.equal(&r.lhs, &r.rhs))
            }));
        }
    }

    let u = u_sequence(2 * (max_m + max_n) + 8);
    let engine = params.engine();
    for k in 1..=max_n {
        for n in 0..=max_m + 2 {
            let case = Case::new("v-via-u", &[("k", k as i64), ("n", n as i64)]);
            cases.push(attempt(case, |c| {
                let direct = engine.det(&v_matrix(k, n + k).expect("k <= n + k"))?;
                Ok(c.equal(&v_via_u_hankel(k, n, &u), &direct))
            }));
        }
    }
    cases
}

const TRIANGLE_LISTED: [[&str; 6]; 6] = [
    ["q", "0", "0", "0", "0", "0"],
    ["q^2", "q^3", "0", "0", "0", "0"],
    ["q^3", "2*q^4", "q^6", "0", "0", "0"],
    ["q^4", "3*q^5", "q^6 + 2*q^7", "q^10", "0", "0"],
    ["q^5", "4*q^6", "3*q^7 + 3*q^8", "2*q^9 + 2*q^11", "q^15", "0"],
    ["q^6", "5*q^7", "6*q^8 + 4*q^9", "q^9 + 6*q^10 + 3*q^12", "q^12 + 2*q^13 + 2*q^16", "q^21"],
];

fn appendix(params: &SuiteParams) -> Vec<Case> {
    let max_n = params.n(12);
    let tri = QTriangle::new();
    let mut cases = Vec::new();

    let rows = triangle_rows(&tri, 6);
    for (n, row) in TRIANGLE_LISTED.iter().enumerate() {
        for (k, listed) in row.iter().enumerate() {
            cases.push(Case::new("triangle-table", &[("n", n as i64), ("k", k as i64)]).equal(&rows[n][k], &parse(listed)));
        }
    }

    for k in 0..=5usize {
        let series = f_power_coefficients(k, max_n + 1);
        for (n, coeff) in series.coeffs().iter().enumerate() {
            let case = Case::new("power-identity", &[("k", k as i64), ("n", n as i64)]);
            cases.push(if n < k {
                case.residual(coeff)
            } else {
                case.equal(&coeff.shift_up(n), &tri.entry(n as i64 - 1, n - k))
            });
        }
    }

    let u = u_sequence(max_n + 1);
    for n in 1..=max_n {
        let case = Case::new("u-via-triangle", &[("n", n as i64)]);
        cases.push(attempt(case, |c| Ok(c.equal(&u_via_triangle(n, &tri)?, &u.u(n as i64)))));
    }
    for n in 0..=max_n {
        let un = u.u(n as i64);
        let expected = Degree::Finite(binom2(n as i64) as usize);
        cases.push(
            Case::new("u-degree", &[("n", n as i64)])
                .holds(un.degree() == expected, || format!("degree {}, expected {expected}", un.degree())),
        );
        if n > 0 {
            let conv: IntPoly = (0..=n)
                .map(|j| u.u((n - j) as i64).shift_up(binom2(j as i64) as usize))
                .sum();
            cases.push(Case::new("u-convolution", &[("n", n as i64)]).residual(&conv));
        }
    }
    let seq = coefficient_sequence(&tri, 4);
    let expected: Vec<BigInt> = [1, 1, 1, 1, 2, 1, 1, 3, 1, 2, 1].into_iter().map(BigInt::from).collect();
    cases.push(Case::new("a260533-prefix", &[]).holds(seq == expected, || {
        seq.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }));
    cases
}

fn conjecture(params: &SuiteParams) -> Vec<Case> {
    let max_n = params.n(10) as u32;
    let tri = QTriangle::new();
    let grid: Vec<(u32, u32)> = (0..=max_n).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    let mut cases: Vec<Case> = grid
        .par_iter()
        .map(|&(n, k)| {
            Case::new("partition-sum", &[("n", i64::from(n)), ("k", i64::from(k))])
                .holds(conjecture_check(n, k, &tri), || format!("<{n} {k}> = {}", tri.entry(i64::from(n), k as usize)))
        })
        .collect();
    let e53 = tri.entry(5, 3);
    cases.push(
        Case::new("q9-vs-q3", &[])
            .holds(e53.coeff(9) == 1.into() && e53.coeff(3) == 0.into(), || format!("<5 3> = {e53}"))
            .note("recursion gives <5 3> = q^9 + 6*q^10 + 3*q^12; no q^3 term occurs"),
    );
    cases
}
