//! Exact computation of restricted partition functions, double (two-row)
//! vector partition functions and Gaussian polynomial coefficients.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! Each fast route (chamber-wise convolutions, column elimination, Bernoulli
//! polynomials of higher order) has a brute-force counterpart in the same
//! module so results can be cross-checked; [`verify`] bundles those checks.

pub mod error;
pub mod exactnum;
pub mod gausspoly;
pub mod partition;
pub mod verify;
pub mod vpf;

pub use error::{Error, Result};
pub use exactnum::{Integer, Polynomial, QuasiPolynomial, Rational, TruncatedSeries};
pub use gausspoly::{
    closed_max, closed_p3, closed_p4, eulerian_a, eulerian_b, gauss_chamber, gauss_coeff,
    gauss_oracle, leading_term, max_coeff, poly_part_gauss, poly_part_max, term_w,
    BivariatePolynomial, EulerianTable, GaussEngine, LeadingTerm, MaxPolyPart, Parity,
};
pub use partition::{
    bernoulli_higher, bernoulli_numbers, bernoulli_poly_higher, closed_form, convolve,
    partition_dp, polynomial_part, prefix_sum, signed_partition, ClosedForm, GeneratorSet,
    PartitionTable,
};
pub use vpf::{
    cayley_reduce, chamber_walls, slack_reduce, vpf_cayley, vpf_cayley_literal, vpf_oracle,
    ChamberWall, DoubleSystem, EqualitySystem, InequalitySystem, ReductionTerm, SystemFile,
};
