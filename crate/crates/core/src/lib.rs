//! Poisson brackets, leader sets and the elimination algorithm on symmetric
//! algebras of graded Lie algebras, with exactly verifiable certificates.

pub mod dicksonian;
pub mod elimination;
pub mod error;
pub mod expr_io;
pub mod lie;
pub mod poly;

pub use dicksonian::MembershipReport;
pub use elimination::{
    full_reduce, partial_reduce, verify_certificate, GeneratorSequence, ReductionCertificate,
};
pub use error::{Error, Result};
pub use expr_io::{parse_poly, print_poly};
pub use lie::{AlgebraSpec, BasisElement, Family, LieElement, MultiIndex, Sl2Root};
pub use poly::{
    compare_rank, d_leader, d_lie, d_op, poisson_bracket, DTuple, Monomial, Polynomial, RankInfo,
    Sign,
};

/// Exact rational scalars.
pub type Scalar = num_rational::BigRational;

pub(crate) fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}
