//! Sparse polynomials of the symmetric algebra S(𝔤), the induced Poisson
//! bracket, ranks and the operators `D_t`.

mod dop;
mod monomial;
mod polynomial;
mod rank;

pub use dop::{d_leader, d_lie, d_op, DTuple};
pub use monomial::Monomial;
pub use polynomial::{poisson_bracket, Polynomial};
pub use rank::{compare_rank, RankInfo, Sign};
