//! Graded Lie algebras: bases, gradings, orders and structure constants.

mod algebra;
mod basis;
mod bracket;
mod element;
mod multi_index;
pub mod special;

pub use algebra::{AlgebraSpec, Family};
pub use basis::{BasisElement, Sl2Root};
pub use element::LieElement;
pub use multi_index::MultiIndex;
