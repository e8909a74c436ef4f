//! Exact combinatorics of `Z^d`-graded local cohomology of affine semigroup
//! rings `C[NA]`, and of rank-jumping parameters of the simplicial
//! A-hypergeometric systems attached to `A`.
//!
//! The pipeline runs bottom-up:
//!
//! - [`lattice`]: Smith normal form, integer solving, quotients, cosets.
//! - [`cone`]: validation of `A`, the face lattice of `NA`, incidence signs,
//!   normalized volume.
//! - [`semigroup`]: membership in `NA + Zτ` and the invariants `E_τ(β)`.
//! - [`cohomology`]: the cocomplex `∇(β)` and the cohomology of the degree-β
//!   piece of the local cohomology complex.
//! - [`analysis`]: box scans, slab inference, the rank-jump criterion and the
//!   comparison of the two resulting sets.
//! - [`cli`]: the `rankjump` command-line surface.
//!
//! ```
//! use rankjump::{analysis::Analyzer, fixtures};
//!
//! let analyzer = Analyzer::from_rows(&fixtures::f3()).unwrap();
//! let report = analyzer.cohomology(&[1, 2]).unwrap();
//! assert_eq!(report.dims, vec![0, 1, 0]);
//! assert!(analyzer.is_rank_jumping(&[1, 2]).unwrap().is_some());
//! ```

pub mod analysis;
pub mod cli;
pub mod cohomology;
pub mod cone;
pub mod error;
pub mod fixtures;
pub mod lattice;
pub mod oracle;
pub mod semigroup;

pub use error::{Error, Result};
