//! Binary BCH codes, exact covering radii, Johnson-type list-decoding radii,
//! and exact list / maximum-likelihood decoding.
//!
//! A code whose covering radius does not exceed the decoding radius of some
//! polynomial-time list decoder can be maximum-likelihood decoded in
//! polynomial time: every received word has a nearest codeword inside the
//! list. This crate builds narrow-sense BCH codes ([`bch`]), computes their
//! covering radii exactly ([`radius`]), evaluates the general and binary
//! Johnson radii and the relaxed radius with multiplicity ([`bounds`]), and
//! checks the resulting classification by decoding ([`decode`]).
//!
//! ```
//! use bchcover::bch::build_bch;
//! use bchcover::bounds::classify;
//! use bchcover::radius::covering_radius;
//!
//! let (golay, _) = build_bch(23, 5)?;
//! let r = covering_radius(&golay, 23)?.radius;
//! let report = classify(&golay.with_covering_radius(r))?;
//! assert_eq!((report.k, report.d, r, report.tau_binary), (12, 7, 3, 4));
//! assert!(report.is_perfect && report.strictly_covered);
//! # Ok::<(), bchcover::Error>(())
//! ```

pub mod bch;
pub mod bounds;
pub mod cli;
pub mod combinations;
pub mod decode;
pub mod error;
pub mod gf2m;
pub mod linear_code;
pub mod manifest;
pub mod radius;

pub use error::{Error, Result};
pub use linear_code::{LinearCode, Syndrome, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/bch.md")]
    mod bch {}
    #[doc = include_str!("../../../book/src/covering-radius.md")]
    mod covering_radius {}
    #[doc = include_str!("../../../book/src/johnson.md")]
    mod johnson {}
    #[doc = include_str!("../../../book/src/decoding.md")]
    mod decoding {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
