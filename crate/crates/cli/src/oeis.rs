//! Cross-check of r_{1,n}(2) against OEIS A114604, either against embedded
//! constants or against a b-file fetched over HTTP (or read from disk).

use std::path::Path;
use std::time::{Duration, Instant};

use qhankel_core::BigInt;
use qhankel_core::identities::r1_closed;

use crate::error::CliError;
use crate::report::{Case, VerifyReport};

pub const SEQUENCE_ID: &str = "A114604";
pub const OEIS_URL_ENV: &str = "QHANKEL_OEIS_URL";
pub const DEFAULT_BASE_URL: &str = "https://oeis.org";

/// r_{1,n}(2) for n = 0..=7.
pub const A114604: [u64; 8] = [1, 5, 43, 709, 23003, 1481957, 190305691, 48796386661];

/// Terms checked against the polynomial itself before trusting the integer
/// recurrence for the rest.
const POLY_CROSS_CHECK: usize = 6;

/// r_{1,n}(2) for n in `0..count`, from the recurrence
/// r_{1,n} = q^{n+1} r_{1,n-1} + (q-1)^n [n]! evaluated at q = 2,
/// where [j] = 2^j - 1.
pub fn r1_at_two(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut fact = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for n in 0..count {
        if n > 0 {
            fact *= (BigInt::from(1) << n) - 1;
            prev = (BigInt::from(1) << (n + 1)) * &prev + &fact;
        }
        out.push(prev.clone());
    }
    out
}

fn cross_checked(count: usize) -> Result<Vec<BigInt>, CliError> {
    let values = r1_at_two(count);
    for (n, v) in values.iter().enumerate().take(POLY_CROSS_CHECK) {
        let poly = r1_closed(n).eval_i64(2);
        if &poly != v {
            return Err(CliError::Core(qhankel_core::Error::Parse(format!(
                "integer recurrence disagrees with r_1,{n}(2): {v} vs {poly}"
            ))));
        }
    }
    Ok(values)
}

fn term_case(n: usize, got: &BigInt, expected: &BigInt) -> Case {
    Case::new("term", &[("n", n as i64)]).holds(got == expected, || format!("r_1,{n}(2) = {got}, b-file has {expected}"))
}

/// Compares the embedded constants (at most `max_n + 1` of them).
pub fn check_embedded(max_n: Option<usize>) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let count = max_n.map_or(A114604.len(), |m| (m + 1).min(A114604.len()));
    let ours = cross_checked(count)?;
    let cases = A114604[..count]
        .iter()
        .enumerate()
        .map(|(n, &v)| term_case(n, &ours[n], &BigInt::from(v)))
        .collect();
    Ok(VerifyReport::new("oeis-embedded", cases, start.elapsed()))
}

/// One parsed line of a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BLine {
    Term(usize, BigInt),
    Bad { line: usize, text: String },
}

/// Parses `index value` lines; blank lines and `#` comments are skipped.
pub fn parse_bfile(text: &str) -> Vec<BLine> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                return None;
            }
            let mut fields = line.split_whitespace();
            let parsed = match (fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), None) => a.parse::<usize>().ok().zip(b.parse::<BigInt>().ok()),
                _ => None,
            };
            Some(match parsed {
                Some((n, v)) => BLine::Term(n, v),
                None => BLine::Bad {
                    line: i + 1,
                    text: line.to_string(),
                },
            })
        })
        .collect()
}

/// Compares every parsed term with index `<= max_n` (default: all of them).
pub fn check_bfile(text: &str, max_n: Option<usize>) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let lines = parse_bfile(text);
    let in_range = |n: usize| max_n.is_none_or(|m| n <= m);
    let top = lines
        .iter()
        .filter_map(|l| match l {
            BLine::Term(n, _) if in_range(*n) => Some(*n),
            _ => None,
        })
        .max();
    let ours = cross_checked(top.map_or(0, |t| t + 1))?;
    let mut cases: Vec<Case> = lines
        .iter()
        .filter_map(|l| match l {
            BLine::Term(n, v) if in_range(*n) => Some(term_case(*n, &ours[*n], v)),
            BLine::Term(..) => None,
            BLine::Bad { line, text } => {
                Some(Case::new("parse", &[("line", *line as i64)]).fail(format!("unparseable b-file line {text:?}")))
            }
        })
        .collect();
    if top.is_none() {
        cases.push(Case::new("terms", &[]).fail("b-file contains no usable terms"));
    }
    Ok(VerifyReport::new("oeis-bfile", cases, start.elapsed()))
}

/// `--base-url` wins over the environment, which wins over oeis.org.
pub fn resolve_base_url(flag: Option<&str>) -> String {
    flag.map(str::to_string)
        .or_else(|| std::env::var(OEIS_URL_ENV).ok().filter(|v| !v.is_empty()))
        .unwrap_or_else(|| DEFAULT_BASE_URL.to_string())
}

pub fn bfile_url(base: &str) -> String {
    format!("{}/{SEQUENCE_ID}/b{}.txt", base.trim_end_matches('/'), &SEQUENCE_ID[1..])
}

pub fn fetch_bfile(base: &str) -> Result<String, CliError> {
    let url = bfile_url(base);
    let agent: ureq::Agent = ureq::Agent::config_builder()
        .timeout_global(Some(Duration::from_secs(20)))
        .build()
        .into();
    let mut response = agent
        .get(&url)
        .call()
        .map_err(|e| CliError::Network(format!("GET {url}: {e}")))?;
    response
        .body_mut()
        .read_to_string()
        .map_err(|e| CliError::Network(format!("reading {url}: {e}")))
}

pub fn check_bfile_path(path: &Path, max_n: Option<usize>) -> Result<VerifyReport, CliError> {
    check_bfile(&std::fs::read_to_string(path)?, max_n)
}

pub fn check_online(base: &str, max_n: Option<usize>) -> Result<VerifyReport, CliError> {
    check_bfile(&fetch_bfile(base)?, max_n)
}
