//! List-decoding radii and the perfect / A-covered classification.
//!
//! Every radius here is the floor of an irrational number that can sit very
//! close to an integer, so none of them is computed in floating point. Each
//! floor is the largest integer satisfying a polynomial inequality with
//! integer coefficients, evaluated in `i128`:
//!
//! * binary Johnson, `(n/2)(1 - sqrt(1 - 2d/n))`: largest `τ <= n/2` with
//!   `(n - 2τ)^2 >= n(n - 2d)`;
//! * general Johnson, `n(1 - sqrt(1 - d/n))`: largest `τ <= n` with
//!   `(n - τ)^2 >= n(n - d)`;
//! * the relaxed radius `εt + (1-ε)(n - sqrt(n(n-2d)))/2` with `ε = p/q`:
//!   largest `τ` with `(q-p)·sqrt(n(n-2d)) <= 2pt + (q-p)n - 2qτ`, squared
//!   once the right-hand side is known to be nonnegative.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::linear_code::LinearCode;

/// `⌊(n/2)(1 - sqrt(1 - 2d/n))⌋`, defined for `1 <= d <= n/2`.
pub fn johnson_binary_floor(n: usize, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::BoundDomain { n, d });
    }
    if 2 * d > n {
        return Err(Error::JohnsonUndefined { n, d });
    }
    let (ni, di) = (n as i128, d as i128);
    let rhs = ni * (ni - 2 * di);
    Ok(largest_satisfying(n / 2, |tau| {
        let lhs = ni - 2 * tau as i128;
        lhs * lhs >= rhs
    }))
}

/// `⌊n(1 - sqrt(1 - d/n))⌋`, defined for `1 <= d <= n`.
pub fn johnson_general_floor(n: usize, d: usize) -> Result<usize> {
    if d == 0 || d > n {
        return Err(Error::BoundDomain { n, d });
    }
    let (ni, di) = (n as i128, d as i128);
    let rhs = ni * (ni - di);
    Ok(largest_satisfying(n, |tau| {
        let lhs = ni - tau as i128;
        lhs * lhs >= rhs
    }))
}

/// Largest `τ` in `0..=max` for a predicate that holds at 0 and is
/// monotone decreasing.
fn largest_satisfying(max: usize, holds: impl Fn(usize) -> bool) -> usize {
    debug_assert!(holds(0));
    let (mut lo, mut hi) = (0, max);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Decoding radius and multiplicity of the relaxed list decoder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WuRadius {
    pub tau: usize,
    /// `⌊1/ε⌋`.
    pub multiplicity: u64,
}

impl WuRadius {
    /// The nominal operation count `n^2 · m^4`, reported for reference only.
    pub fn nominal_cost(&self, n: usize) -> u128 {
        (n as u128).pow(2) * (self.multiplicity as u128).pow(4)
    }
}

/// `⌊εt + (1-ε)(n - n·sqrt(1 - 2d/n))/2⌋` with multiplicity `⌊1/ε⌋`.
pub fn tau_wu(n: usize, d: usize, epsilon: Ratio<u64>) -> Result<WuRadius> {
    if *epsilon.numer() == 0 || epsilon > Ratio::from_integer(1) {
        return Err(Error::Epsilon(epsilon.to_string()));
    }
    if d == 0 {
        return Err(Error::BoundDomain { n, d });
    }
    if 2 * d > n {
        return Err(Error::JohnsonUndefined { n, d });
    }
    let (p, q) = (*epsilon.numer() as i128, *epsilon.denom() as i128);
    let (ni, di) = (n as i128, d as i128);
    let t = (di - 1) / 2;
    let disc = ni * (ni - 2 * di);
    let tau = largest_satisfying(n, |tau| {
        let rhs = 2 * p * t + (q - p) * ni - 2 * q * tau as i128;
        rhs >= 0 && (q - p) * (q - p) * disc <= rhs * rhs
    });
    Ok(WuRadius {
        tau,
        multiplicity: (epsilon.denom() / epsilon.numer()),
    })
}

/// One row of the coverage table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// `⌊(d-1)/2⌋`.
    pub t: usize,
    pub radius: Option<usize>,
    pub tau_general: usize,
    pub tau_binary: usize,
    /// Set when `2d > n` and `tau_binary` is the saturated value `⌊n/2⌋`.
    pub tau_binary_saturated: bool,
    pub is_perfect: bool,
    /// `R <= tau_binary`.
    pub is_a_covered: bool,
    /// `R < tau_binary`.
    pub strictly_covered: bool,
    pub comment: String,
}

/// Classifies a code from its stored exact minimum distance and (optional)
/// covering radius.
pub fn classify(code: &LinearCode) -> Result<CoverageReport> {
    let d = code
        .known_min_distance()
        .filter(|d| d.is_exact())
        .ok_or(Error::InsufficientData("exact minimum distance unknown"))?;
    classify_parameters(code.n(), code.k(), d.value, code.covering_radius())
}

/// Classification from bare parameters, for callers that take `d` from
/// somewhere other than the code (such as a designed distance known to be
/// tight).
pub fn classify_parameters(n: usize, k: usize, d: usize, radius: Option<usize>) -> Result<CoverageReport> {
    let t = d.saturating_sub(1) / 2;
    let tau_general = johnson_general_floor(n, d)?;
    let (tau_binary, saturated) = match johnson_binary_floor(n, d) {
        Ok(tau) => (tau, false),
        Err(Error::JohnsonUndefined { .. }) => (n / 2, true),
        Err(e) => return Err(e),
    };
    let is_perfect = radius == Some(t);
    let is_a_covered = radius.is_some_and(|r| r <= tau_binary);
    let strictly_covered = radius.is_some_and(|r| r < tau_binary);

    let mut notes = Vec::new();
    match radius {
        None => notes.push("R unknown".to_string()),
        Some(r) => {
            if is_perfect {
                notes.push("perfect".into());
            } else if r == t + 1 {
                notes.push("quasi-perfect".into());
            }
            if strictly_covered {
                notes.push("A-covered, R < tau_binary".into());
            } else if is_a_covered {
                notes.push("A-covered, R = tau_binary".into());
            } else {
                notes.push("not covered".into());
            }
        }
    }
    if saturated {
        notes.push("binary Johnson undefined (2d > n), saturated at n/2".into());
    }
    Ok(CoverageReport {
        n,
        k,
        d,
        t,
        radius,
        tau_general,
        tau_binary,
        tau_binary_saturated: saturated,
        is_perfect,
        is_a_covered,
        strictly_covered,
        comment: notes.join("; "),
    })
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.radius.map_or("unknown".to_string(), |r| r.to_string());
        writeln!(f, "code         = [{},{},{}]", self.n, self.k, self.d)?;
        writeln!(f, "t            = {}", self.t)?;
        writeln!(f, "R            = {r}")?;
        writeln!(f, "tau_general  = {}", self.tau_general)?;
        writeln!(f, "tau_binary   = {}", self.tau_binary)?;
        writeln!(f, "perfect      = {}", self.is_perfect)?;
        writeln!(f, "a_covered    = {}", self.is_a_covered)?;
        writeln!(f, "strict       = {}", self.strictly_covered)?;
        write!(f, "comment      = {}", self.comment)
    }
}
