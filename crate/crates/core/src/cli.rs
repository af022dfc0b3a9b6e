//! Command implementations behind the `bchcover` binary.
//!
//! Every command renders to a `String` so the output can be tested
//! byte-for-byte; `main.rs` only parses arguments and prints.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::bch::build_bch;
use crate::bounds::{classify_parameters, johnson_binary_floor, johnson_general_floor, CoverageReport};
use crate::combinations::ball_size;
use crate::decode::{bounded_decode, list_decode, ml_decode, DecodeResult};
use crate::error::{Error, Result};
use crate::linear_code::{LinearCode, Word};
use crate::manifest::{Manifest, ManifestRow};
use crate::radius::{covering_radius_with, RadiusOptions, RadiusResult};

/// Candidate patterns a default (not long-running) radius search may visit.
pub const DESK_BUDGET: u128 = 300_000_000;

pub const TABLE1_HEADER: &str = "n,k,d,t,R,tau_general,tau_binary,perfect,a_covered,strict,comment";

/// Highest stratum whose cumulative search cost stays within `budget`.
pub fn budget_weight_cap(n: usize, budget: u128) -> usize {
    (0..=n).take_while(|&w| ball_size(n, w) <= budget).last().unwrap_or(0)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table1Options {
    pub max_n: usize,
    pub long_running: bool,
    pub jobs: usize,
    pub checkpoint_dir: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub manifest: ManifestRow,
    pub report: CoverageReport,
    pub d_exact: bool,
    /// Weight cap that stopped the radius search, when it was skipped.
    pub radius_skipped_at: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Table1Output {
    pub rows: Vec<Table1Row>,
    pub mismatches: Vec<String>,
}

impl Table1Output {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(TABLE1_HEADER);
        out.push('\n');
        for row in &self.rows {
            let r = &row.report;
            let radius = r.radius.map_or("skipped".to_string(), |v| v.to_string());
            let mut comment = row.manifest.comment.clone();
            if !row.d_exact {
                if !comment.is_empty() {
                    comment.push(' ');
                }
                comment.push_str("[d designed]");
            }
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.n,
                r.k,
                r.d,
                r.t,
                radius,
                r.tau_general,
                r.tau_binary,
                r.is_perfect,
                r.is_a_covered,
                r.strictly_covered,
                csv_field(&comment)
            );
        }
        out
    }
}

fn checkpoint_file(dir: Option<&Path>, code: &LinearCode) -> Option<PathBuf> {
    dir.map(|d| d.join(format!("radius-{}-{}.json", code.n(), code.k())))
}

/// Rebuilds every manifest row with `n <= max_n` and compares it with the
/// reference values.
pub fn table1(opts: &Table1Options) -> Result<Table1Output> {
    let manifest = Manifest::table1();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for m in manifest.rows.iter().filter(|r| r.n <= opts.max_n) {
        let (code, _) = build_bch(m.n, m.delta)?;
        let label = format!("[{},{},{}]", m.n, m.expected_k, m.expected_d);
        let dist = code.known_min_distance().expect("set by build_bch");
        let cap = if opts.long_running {
            m.n
        } else {
            budget_weight_cap(m.n, DESK_BUDGET)
        };
        let options = RadiusOptions {
            weight_cap: Some(cap),
            jobs: opts.jobs,
            checkpoint: checkpoint_file(opts.checkpoint_dir.as_deref(), &code),
        };
        let (radius, skipped) = match covering_radius_with(&code, &options) {
            Ok(res) => (Some(res.radius), None),
            Err(Error::WeightCapExceeded { cap, .. }) => (None, Some(cap)),
            Err(e) => return Err(e),
        };
        let report = classify_parameters(code.n(), code.k(), dist.value, radius)?;

        let mut check = |column: &str, got: usize, want: usize| {
            if got != want {
                mismatches.push(format!("{label} {column}: computed {got}, expected {want}"));
            }
        };
        check("k", code.k(), m.expected_k);
        check("d", dist.value, m.expected_d);
        if let Some(r) = radius {
            check("R", r, m.expected_radius);
        }
        check("tau", report.tau_binary, m.expected_tau);

        rows.push(Table1Row {
            manifest: m.clone(),
            report,
            d_exact: dist.is_exact(),
            radius_skipped_at: skipped,
        });
    }
    Ok(Table1Output { rows, mismatches })
}

/// `d,tau_general,tau_binary` for `d = 1 ..= n/2`.
pub fn johnson_table(n: usize) -> Result<String> {
    let mut out = String::from("d,tau_general,tau_binary\n");
    for d in 1..=n / 2 {
        let g = johnson_general_floor(n, d)?;
        let b = johnson_binary_floor(n, d)?;
        let _ = writeln!(out, "{d},{g},{b}");
    }
    Ok(out)
}

/// Normalized curves `τ/n` against `δ = d/n` on `steps` evenly spaced points
/// of `[0, 1/2]`, for plotting.
pub fn johnson_curve(steps: usize) -> Result<String> {
    if steps < 2 {
        return Err(Error::Parse("johnson curve needs at least 2 steps".into()));
    }
    let mut out = String::from("delta,tau_general_over_n,tau_binary_over_n\n");
    for i in 0..steps {
        let x = 0.5 * i as f64 / (steps - 1) as f64;
        let general = 1.0 - (1.0 - x).sqrt();
        let binary = 0.5 * (1.0 - (1.0 - 2.0 * x).max(0.0).sqrt());
        let _ = writeln!(out, "{x:.6},{general:.6},{binary:.6}");
    }
    Ok(out)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn render_radius(code: &LinearCode, res: &RadiusResult) -> String {
    format!(
        "code = {}\nR = {}\ncoset_count_by_weight = {}\ndeepest_syndrome = {}\n",
        code.label(),
        res.radius,
        join(&res.coset_count_by_weight),
        res.deepest_syndrome
    )
}

pub fn radius_report(n: usize, delta: usize, jobs: usize, checkpoint: Option<PathBuf>) -> Result<String> {
    let (code, _) = build_bch(n, delta)?;
    let res = covering_radius_with(
        &code,
        &RadiusOptions {
            weight_cap: None,
            jobs,
            checkpoint,
        },
    )?;
    Ok(render_radius(&code, &res))
}

/// Full classification of one BCH code, including its covering radius.
pub fn classify_report(n: usize, delta: usize, jobs: usize) -> Result<(String, CoverageReport)> {
    let (code, _) = build_bch(n, delta)?;
    let res = covering_radius_with(
        &code,
        &RadiusOptions {
            weight_cap: None,
            jobs,
            checkpoint: None,
        },
    )?;
    let d = code.known_min_distance().expect("set by build_bch");
    let mut report = classify_parameters(code.n(), code.k(), d.value, Some(res.radius))?;
    if !d.is_exact() {
        report.comment.push_str("; d is the designed distance");
    }
    let mut text = format!("{report}\n");
    let _ = writeln!(text, "{TABLE1_HEADER}");
    let _ = writeln!(
        text,
        "{},{},{},{},{},{},{},{},{},{},{}",
        report.n,
        report.k,
        report.d,
        report.t,
        res.radius,
        report.tau_general,
        report.tau_binary,
        report.is_perfect,
        report.is_a_covered,
        report.strictly_covered,
        csv_field(&report.comment)
    );
    Ok((text, report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeMode {
    Ml,
    List,
    Bounded,
}

impl FromStr for DecodeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ml" => Ok(Self::Ml),
            "list" => Ok(Self::List),
            "bounded" => Ok(Self::Bounded),
            other => Err(Error::Parse(format!("unknown decode mode {other:?}"))),
        }
    }
}

pub fn render_decode(mode: &str, res: &DecodeResult) -> String {
    let mut out = format!(
        "# mode={mode} radius_used={} exhausted={} count={}\ncodeword,distance\n",
        res.radius_used,
        res.exhausted,
        res.len()
    );
    for (c, d) in &res.entries {
        let _ = writeln!(out, "{c},{d}");
    }
    out
}

pub fn decode_report(n: usize, delta: usize, word: &str, mode: DecodeMode, tau: Option<usize>) -> Result<String> {
    let (code, _) = build_bch(n, delta)?;
    let v: Word = word.parse()?;
    let (name, res) = match mode {
        DecodeMode::Ml => ("ml", ml_decode(&code, &v)?),
        DecodeMode::List => {
            let tau = tau.ok_or_else(|| Error::Parse("list mode needs --tau".into()))?;
            ("list", list_decode(&code, &v, tau)?)
        }
        DecodeMode::Bounded => ("bounded", bounded_decode(&code, &v)?),
    };
    Ok(render_decode(name, &res))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_caps() {
        assert_eq!(budget_weight_cap(31, DESK_BUDGET), 11);
        assert_eq!(budget_weight_cap(63, DESK_BUDGET), 6);
        assert_eq!(budget_weight_cap(7, DESK_BUDGET), 7);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("RM(1,4)*"), "\"RM(1,4)*\"");
        assert_eq!(csv_field("Hamming"), "Hamming");
    }

    #[test]
    fn johnson_rows() {
        let t = johnson_table(31).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[1], "1,0,0");
        assert!(johnson_curve(1).is_err());
        assert_eq!(johnson_curve(3).unwrap().lines().count(), 4);
    }

    #[test]
    fn decode_modes() {
        let out = decode_report(7, 3, "1101000", DecodeMode::Ml, None).unwrap();
        assert!(out.contains("1101000,0"));
        assert!(decode_report(7, 3, "1101000", DecodeMode::List, None).is_err());
        assert!("fast".parse::<DecodeMode>().is_err());
    }
}
