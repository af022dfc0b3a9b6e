//! Reference data for the BCH coverage table.
//!
//! Each row pins the designed distance used to build the code, because the
//! table lists true minimum distances: the length-17 code is built with
//! `δ = 3` and has true distance 5, the length-23 code with `δ = 5` and has
//! true distance 7.

use crate::error::{Error, Result};

const TABLE1_CSV: &str = include_str!("../data/table1.csv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestRow {
    pub n: usize,
    pub delta: usize,
    pub expected_k: usize,
    pub expected_d: usize,
    pub expected_radius: usize,
    pub expected_tau: usize,
    pub comment: String,
}

#[derive(Clone, Debug)]
pub struct Manifest {
    pub rows: Vec<ManifestRow>,
}

impl Manifest {
    /// The built-in table of sixteen BCH codes.
    pub fn table1() -> Self {
        Self::parse(TABLE1_CSV).expect("bundled manifest is well formed")
    }

    /// Parses `n,delta,k,d,R,tau,comment` lines after a header. The comment
    /// is everything after the sixth comma.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate().skip(1) {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.splitn(7, ',').collect();
            if fields.len() != 7 {
                return Err(Error::Parse(format!("manifest line {}: expected 7 fields", lineno + 1)));
            }
            let num = |i: usize| -> Result<usize> {
                fields[i]
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("manifest line {}: {e}", lineno + 1)))
            };
            rows.push(ManifestRow {
                n: num(0)?,
                delta: num(1)?,
                expected_k: num(2)?,
                expected_d: num(3)?,
                expected_radius: num(4)?,
                expected_tau: num(5)?,
                comment: fields[6].trim().to_string(),
            });
        }
        Ok(Self { rows })
    }

    pub fn find(&self, n: usize, k: usize) -> Option<&ManifestRow> {
        self.rows.iter().find(|r| r.n == n && r.expected_k == k)
    }
}
