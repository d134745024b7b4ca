//! Exact computation of the `S3 × sl2` structure of
//! `A(3,d) = k[x1,x2,x3]/(x1^d, x2^d, x3^d)`.
//!
//! The lowering operator `E` commutes with the `S3` action permuting the
//! variables, so `Ker(E) ∩ A_j` splits into trivial, sign and standard
//! components. This crate counts them by several independent routes and
//! writes down explicit, certified basis polynomials.

pub mod algebra;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod multiplicity;
pub mod partitions;
pub mod s3;
pub mod sl2;

pub use algebra::{
    apply_e, apply_f, apply_h, monomial_basis, AlgebraParams, Monomial, QuotientPolynomial,
};
pub use error::{Error, Result};
pub use kernel::{
    basis, basis_summary, build_c, echelon_certify, kernel_dim_bruteforce, sign_basis,
    standard_basis, standard_system, trivial_basis, BasisElement, BasisReport, BasisSummary,
    Certificate, CoefficientMatrix, EchelonReport, RepType, StandardPair, StandardSystem,
};
pub use multiplicity::{
    by_closed_form, by_partitions, by_recursion, cross_validate, cross_validate_with, max_degree,
    mult_total, validate_cell, Cell, CrossValidateOptions, Method, MultiplicityTable,
    MultiplicityTriple,
};
pub use partitions::{Partition, PartitionClass, Staircase};
pub use s3::{apply_permutation, character_multiplicities, orbit_sum, signed_orbit, PermutationS3};
pub use sl2::{
    clebsch_gordan, hilbert, lefschetz_check, sl2_decompose, HilbertVector, LefschetzReport,
    Sl2Decomposition,
};
