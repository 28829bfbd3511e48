//! `compute`-style commands: evaluate one object (or a sweep over `n`) and
//! render it deterministically.

use clap::ValueEnum;
use qhankel_core::hankel::{hankel_full, hankel_trunc, v_matrix, DetEngine, PolyMatrix};
use qhankel_core::identities::{
    d_closed, r1_closed, r1_rec, r1_sum, r2_rec, r2_sum, r_condensation, r_def, u_sequence, v_closed,
};
use qhankel_core::qpascal::{partition_weight, partitions_first_part, render_triangle_text, triangle_rows, u_via_triangle};
use qhankel_core::{det_fraction_free, BigInt, IntPoly, QTriangle, RTable};
use serde::Serialize;
use serde_json::json;

use crate::cache::{key, ResultCache};
use crate::config::{Format, Object, RunConfig};
use crate::error::CliError;

/// Computation route for an object. Not every route applies to every object.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeRoute {
    /// Ratio or value of Hankel determinants.
    Det,
    /// Closed product formula.
    Closed,
    /// Sum formula.
    Sum,
    /// Recurrence in n.
    Rec,
    /// Through the series inversion u(n, q).
    ViaU,
    /// Condensation step without determinants.
    Step,
    /// Series inversion (u only).
    Series,
    /// Alternating row sums of the q-Pascal triangle (u only).
    Triangle,
}

/// One computed polynomial with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub object: Object,
    pub m: Option<i64>,
    pub n: i64,
    pub poly: IntPoly,
}

fn unsupported(object: Object, route: ComputeRoute) -> CliError {
    let name = route.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    CliError::Usage(format!("route {name:?} is not available for {}", object.name()))
}

fn cached(
    cache: &mut Option<ResultCache>,
    object: &str,
    m: i64,
    n: i64,
    f: impl FnOnce() -> Result<IntPoly, CliError>,
) -> Result<IntPoly, CliError> {
    let k = key(object, m, n);
    if let Some(hit) = cache.as_ref().and_then(|c| c.get(&k)) {
        return Ok(hit.clone());
    }
    let value = f()?;
    if let Some(c) = cache.as_mut() {
        c.put(k, value.clone())?;
    }
    Ok(value)
}

fn nonneg(v: i64, flag: &str) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("--{flag} must be nonnegative, got {v}")))
}

fn compute_one(
    object: Object,
    route: Option<ComputeRoute>,
    cfg: &RunConfig,
    n: i64,
    cache: &mut Option<ResultCache>,
) -> Result<Row, CliError> {
    use ComputeRoute as R;
    let (m, poly) = match object {
        Object::R => {
            let m = cfg.require_nonneg(cfg.m, "m")?;
            let n = nonneg(n, "n")?;
            let poly = match route.unwrap_or(R::Det) {
                R::Det => cached(cache, "r", m as i64, n as i64, || Ok(r_def(m, n)?))?,
                R::Closed if m == 1 => r1_closed(n),
                R::Sum if m == 1 => r1_sum(n),
                R::Sum if m == 2 => r2_sum(n)?,
                R::Rec if m == 1 => r1_rec(n),
                R::Rec if m == 2 => r2_rec(n),
                R::ViaU if n == 1 => qhankel_core::identities::rm1_via_u(m, &u_sequence(m + 3))?,
                R::Step => r_condensation(m, n, &u_sequence(m + 2 * n + 3), &RTable::new())?,
                other => {
                    return Err(CliError::Usage(format!(
                        "route {:?} is not available for r with m={m}, n={n}",
                        other.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
                    )))
                }
            };
            (Some(m as i64), poly)
        }
        Object::U => {
            let n = nonneg(n, "n")?;
            let poly = match route.unwrap_or(R::Series) {
                R::Series => u_sequence(n + 1).u(n as i64),
                R::Triangle if n == 0 => IntPoly::one(),
                R::Triangle => u_via_triangle(n, &QTriangle::new())?,
                other => return Err(unsupported(object, other)),
            };
            (None, poly)
        }
        Object::D => {
            let m = cfg.require(cfg.m, "m")?;
            let n = nonneg(n, "n")?;
            let poly = match route.unwrap_or(R::Closed) {
                R::Closed => d_closed(m, n),
                R::Det => cached(cache, "d", m, n as i64, || Ok(det_fraction_free(&hankel_full(m, n))))?,
                other => return Err(unsupported(object, other)),
            };
            (Some(m), poly)
        }
        Object::V => {
            // v_{k,n} = det V_{k,n}
            let k = cfg.require_nonneg(cfg.k, "k")?;
            let size = nonneg(n, "n")?;
            if k < 1 || k > size {
                return Err(CliError::Usage(format!("v needs 1 <= k <= n, got k={k}, n={size}")));
            }
            let poly = match route.unwrap_or(R::Det) {
                R::Det => cached(cache, "v", k as i64, size as i64, || {
                    Ok(DetEngine::FractionFree.det(&v_matrix(k, size)?)?)
                })?,
                R::Closed => v_closed(k, size - k)?,
                R::ViaU => qhankel_core::identities::v_via_u_hankel(k, size - k, &u_sequence(size + k + 2)),
                other => return Err(unsupported(object, other)),
            };
            (Some(k as i64), poly)
        }
        Object::Triangle => {
            let row = cfg.require(Some(n), "n")?;
            if row < -1 {
                return Err(CliError::Usage(format!("triangle rows start at -1, got {row}")));
            }
            let k = cfg.require_nonneg(cfg.k, "k")?;
            if let Some(r) = route {
                return Err(unsupported(object, r));
            }
            (Some(row), QTriangle::new().entry(row, k))
        }
    };
    let (m, n) = match object {
        // report triangle entries as (n, k)
        Object::Triangle => (m, cfg.k.unwrap_or_default()),
        _ => (m, n),
    };
    Ok(Row { object, m, n, poly })
}

/// Computes `object` at `cfg.n`, or at every `n` from `cfg.n` through `to`.
pub fn cmd_compute(
    object: Object,
    route: Option<ComputeRoute>,
    to: Option<i64>,
    cfg: &RunConfig,
) -> Result<String, CliError> {
    let start = cfg.require(cfg.n, "n")?;
    let end = to.unwrap_or(start);
    if end < start {
        return Err(CliError::Usage(format!("--to {end} is below --n {start}")));
    }
    let mut cache = cfg.cache_path.as_deref().map(ResultCache::open);
    let rows = (start..=end)
        .map(|n| compute_one(object, route, cfg, n, &mut cache))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(render_rows(&rows, cfg.q0, cfg.format, to.is_some()))
}

fn param_labels(object: Object) -> (&'static str, &'static str) {
    match object {
        Object::V => ("k", "n"),
        Object::Triangle => ("n", "k"),
        _ => ("m", "n"),
    }
}

#[derive(Serialize)]
struct JsonRow<'a> {
    object: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    n: i64,
    degree: Option<usize>,
    text: String,
    coeffs: &'a IntPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<i64>,
}

/// Text: the polynomial (or its value at `q0`), one row per line, labelled
/// when more than one row is shown. JSON: an object, or an array for a
/// sweep. CSV: `m,n,degree,value_at_2,poly`.
pub fn render_rows(rows: &[Row], q0: Option<i64>, format: Format, sweep: bool) -> String {
    let value_at = |p: &IntPoly, q: i64| p.eval(&BigInt::from(q)).to_string();
    match format {
        Format::Text => {
            let mut out = String::new();
            for row in rows {
                if sweep {
                    let (a, b) = param_labels(row.object);
                    match row.m {
                        Some(m) => out.push_str(&format!("{a}={m} {b}={}: ", row.n)),
                        None => out.push_str(&format!("n={}: ", row.n)),
                    }
                }
                match q0 {
                    Some(q) => out.push_str(&value_at(&row.poly, q)),
                    None => out.push_str(&row.poly.to_string()),
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let items: Vec<JsonRow> = rows
                .iter()
                .map(|row| JsonRow {
                    object: row.object.name(),
                    m: row.m,
                    n: row.n,
                    degree: row.poly.degree().finite(),
                    text: row.poly.to_string(),
                    coeffs: &row.poly,
                    value: q0.map(|q| value_at(&row.poly, q)),
                    q: q0,
                })
                .collect();
            let mut s = if sweep {
                serde_json::to_string_pretty(&items)
            } else {
                serde_json::to_string_pretty(&items[0])
            }
            .expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["m", "n", "degree", "value_at_2", "poly"]).expect("in-memory csv");
            for row in rows {
                w.write_record([
                    row.m.map(|m| m.to_string()).unwrap_or_default(),
                    row.n.to_string(),
                    row.poly.degree().to_string(),
                    value_at(&row.poly, 2),
                    row.poly.to_string(),
                ])
                .expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
        }
    }
}

/// Which Hankel family the `matrix` command builds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    /// d_{m,n}: full entry convention.
    #[value(name = "d")]
    Full,
    /// D_{m,n}: negative indices set to zero.
    #[value(name = "D")]
    Trunc,
    /// V_{k,n}.
    #[value(name = "V")]
    V,
}

pub fn cmd_matrix(kind: MatrixKind, cfg: &RunConfig) -> Result<String, CliError> {
    let n = cfg.require_nonneg(cfg.n, "n")?;
    let matrix: PolyMatrix = match kind {
        MatrixKind::Full => hankel_full(cfg.require(cfg.m, "m")?, n),
        MatrixKind::Trunc => hankel_trunc(cfg.require(cfg.m, "m")?, n),
        MatrixKind::V => {
            let k = cfg.require_nonneg(cfg.k, "k")?;
            v_matrix(k, n).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    Ok(match cfg.format {
        Format::Json => {
            let mut s = serde_json::to_string(&matrix).expect("matrix serializes");
            s.push('\n');
            s
        }
        Format::Text | Format::Csv => {
            let cells: Vec<Vec<String>> = matrix.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            let sep = if cfg.format == Format::Csv { "," } else { "  " };
            let widths: Vec<usize> = (0..n)
                .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &cells {
                let line: Vec<String> = if cfg.format == Format::Csv {
                    row.clone()
                } else {
                    row.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect()
                };
                out.push_str(line.join(sep).trim_end());
                out.push('\n');
            }
            out
        }
    })
}

pub fn cmd_triangle_rows(rows: usize, cfg: &RunConfig) -> String {
    let tri = QTriangle::new();
    match cfg.format {
        Format::Text => render_triangle_text(&tri, rows),
        Format::Json => {
            let mut s = serde_json::to_string(&json!({ "rows": triangle_rows(&tri, rows) })).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let rows: Vec<Row> = (0..rows as i64)
                .flat_map(|n| (0..=n).map(move |k| (n, k)))
                .map(|(n, k)| Row {
                    object: Object::Triangle,
                    m: Some(n),
                    n: k,
                    poly: tri.entry(n, k as usize),
                })
                .collect();
            render_rows(&rows, None, Format::Csv, true)
        }
    }
}

pub fn cmd_partitions(cfg: &RunConfig) -> Result<String, CliError> {
    let n = cfg.require_nonneg(cfg.n, "n")?;
    let k = cfg.require_nonneg(cfg.k, "k")?;
    let (n, k) = (
        u32::try_from(n).map_err(|_| CliError::Usage("--n too large".into()))?,
        u32::try_from(k).map_err(|_| CliError::Usage("--k too large".into()))?,
    );
    let parts = partitions_first_part(n, k);
    Ok(match cfg.format {
        Format::Text => parts.iter().map(|p| format!("{p}  {}\n", partition_weight(p))).collect(),
        Format::Json => {
            let items: Vec<_> = parts
                .iter()
                .map(|p| json!({ "parts": p.parts(), "weight": partition_weight(p) }))
                .collect();
            let mut s = serde_json::to_string_pretty(&json!({ "n": n, "k": k, "partitions": items }))
                .expect("partitions serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["parts", "weight"]).expect("in-memory csv");
            for p in &parts {
                w.write_record([p.to_string(), partition_weight(p).to_string()]).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(m: Option<i64>, n: i64) -> RunConfig {
        RunConfig {
            m,
            n: Some(n),
            ..RunConfig::default()
        }
    }

    #[test]
    fn r_text_and_value() {
        assert_eq!(cmd_compute(Object::R, None, None, &cfg(Some(1), 1)).unwrap(), "-1 + q + q^2\n");
        let mut c = cfg(Some(1), 3);
        c.q0 = Some(2);
        assert_eq!(cmd_compute(Object::R, None, None, &c).unwrap(), "709\n");
        assert_eq!(cmd_compute(Object::U, None, None, &cfg(None, 2)).unwrap(), "1 - q\n");
    }

    #[test]
    fn every_r_route_agrees() {
        let c = cfg(Some(1), 1);
        let expected = "-1 + q + q^2\n";
        for route in [
            ComputeRoute::Det,
            ComputeRoute::Closed,
            ComputeRoute::Sum,
            ComputeRoute::Rec,
            ComputeRoute::ViaU,
            ComputeRoute::Step,
        ] {
            assert_eq!(cmd_compute(Object::R, Some(route), None, &c).unwrap(), expected, "{route:?}");
        }
        assert!(matches!(
            cmd_compute(Object::R, Some(ComputeRoute::Closed), None, &cfg(Some(3), 1)),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn missing_flags_are_usage_errors() {
        let c = RunConfig::default();
        assert!(matches!(cmd_compute(Object::R, None, None, &c), Err(CliError::Usage(_))));
        assert!(matches!(cmd_compute(Object::R, None, None, &cfg(None, 1)), Err(CliError::Usage(_))));
        assert!(matches!(cmd_compute(Object::R, None, None, &cfg(Some(-1), 1)), Err(CliError::Usage(_))));
    }

    #[test]
    fn csv_columns() {
        let mut c = cfg(Some(1), 0);
        c.format = Format::Csv;
        let out = cmd_compute(Object::R, None, Some(2), &c).unwrap();
        assert_eq!(
            out,
            "m,n,degree,value_at_2,poly\n1,0,0,1,1\n1,1,2,5,-1 + q + q^2\n1,2,5,43,1 - q - q^2 + q^4 + q^5\n"
        );
    }

    #[test]
    fn json_round_trips_through_canonical_text() {
        let mut c = cfg(None, 6);
        c.format = Format::Json;
        let out = cmd_compute(Object::U, None, None, &c).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let coeffs: IntPoly = serde_json::from_value(v["coeffs"].clone()).unwrap();
        let text: IntPoly = v["text"].as_str().unwrap().parse().unwrap();
        assert_eq!(coeffs, text);
        assert_eq!(v["degree"], 15);
    }

    #[test]
    fn matrix_json() {
        let mut c = cfg(Some(0), 2);
        c.format = Format::Json;
        assert_eq!(
            cmd_matrix(MatrixKind::Full, &c).unwrap(),
            "{\"n\":2,\"entries\":[[[\"1\"],[\"1\"]],[[\"1\"],[\"0\",\"1\"]]]}\n"
        );
        let mut v = RunConfig {
            k: Some(1),
            n: Some(4),
            ..RunConfig::default()
        };
        v.format = Format::Text;
        let text = cmd_matrix(MatrixKind::V, &v).unwrap();
        assert_eq!(text.lines().next().unwrap(), "0  0  0  1");
    }

    #[test]
    fn partitions_listing() {
        let c = RunConfig {
            n: Some(6),
            k: Some(3),
            ..RunConfig::default()
        };
        assert_eq!(cmd_partitions(&c).unwrap(), "3,3  q^9\n3,2,1  6*q^10\n3,1,1,1  3*q^12\n");
    }

    #[test]
    fn triangle_and_v_objects() {
        let c = RunConfig {
            n: Some(5),
            k: Some(3),
            ..RunConfig::default()
        };
        assert_eq!(cmd_compute(Object::Triangle, None, None, &c).unwrap(), "q^9 + 6*q^10 + 3*q^12\n");
        let v = RunConfig {
            n: Some(4),
            k: Some(2),
            ..RunConfig::default()
        };
        let det = cmd_compute(Object::V, None, None, &v).unwrap();
        for route in [ComputeRoute::Closed, ComputeRoute::ViaU] {
            assert_eq!(cmd_compute(Object::V, Some(route), None, &v).unwrap(), det);
        }
    }
}
