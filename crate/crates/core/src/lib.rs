//! Exact Schur and Weyl functors on free modules of small rank.
//!
//! Elements of `V^{⊗n}`, `Sym^λ V`, `Sym_λ V` and `Λ^{λ'} V` are sparse
//! linear combinations of tableaux over ℤ, ℚ or ℤ/n. On top of these the
//! crate builds polytabloids and Garnir relations, copolytabloids, dual
//! Garnir and dual snake relations, a certified straightening algorithm, and
//! checks of the exact sequences and the duality between the two sides.

pub mod cli;
pub mod coeffs;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod places;
pub mod powers;
pub mod render;
pub mod report;
pub mod schur;
pub mod tableaux;
pub mod weyl;

pub use coeffs::{LinComb, Ring, Scalar};
pub use error::{Error, Result};
pub use places::{Cell, CellSet, PlacePermutation};
pub use powers::{ColumnTabloidElement, RowTabloidElement, SymLowerElement, TensorElement};
pub use tableaux::{OrderVerdict, Partition, Tableau, TableauClass};
