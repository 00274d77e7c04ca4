//! Exact arithmetic for SU(N) representations in stable families
//! D(lambda, tau), where the Dynkin label vector keeps a fixed block at each
//! end and a growing zero gap in between as N grows. The crate computes
//! dimensions and second-order Casimir eigenvalues as exact (Laurent)
//! polynomials in N and verifies the N <-> -N duality identities relating a
//! family to its swapped or transposed partner, as polynomial identities
//! rather than sampled equalities.
//!
//! Everything is exact: big-integer hook/content products, rational
//! interpolation over integer nodes, and canonical Laurent polynomials. No
//! floating point is involved anywhere.
//!
//! The `examples/` directory is the best starting point; each example is a
//! runnable tour of one capability (`cargo run --example dimensions`, etc.).
//! A small `negn` binary exposes the same operations as subcommands.

pub mod checks;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod render;
pub mod stable;

pub use checks::{
    check_classic, check_constant_term, check_prop1, check_prop2, check_z2, random_corpus,
    CheckReport, Identity, Subject,
};
pub use diagram::{partitions_of, partitions_up_to, RunDecomposition, YoungDiagram};
pub use error::{Error, Result};
pub use invariants::{
    casimir_cross_term, casimir_direct, casimir_formula, dim_degree_bound, dim_hook,
    dim_polynomial, dim_stable, dim_weyl_oracle,
};
pub use poly::{interpolate, LaurentPoly, Rational};
pub use stable::{
    labels_to_young, young_to_labels_cols, young_to_labels_rows, DynkinLabels, StableRep,
};
