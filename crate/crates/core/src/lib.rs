//! Combinatorics of the type AII Littlewood-Richardson map.
//!
//! The crate builds the forward map `T ↦ (P, Q)` on semistandard tableaux
//! over `[2n]` by iterating the successor operation, the relabeling
//! bijection between recording tableaux and Littlewood-Richardson-Sundaram
//! tableaux, the orthogonal-transpose symmetry on the latter, and an
//! expansion map that inverts the forward map one successor at a time.
//! [`enumeration`] contains exhaustive generators and a verification
//! harness that checks all of these against each other on small shapes.

pub mod enumeration;
pub mod error;
pub mod expansion;
pub mod insertion;
pub mod lr_map;
pub mod reduction;
pub mod shapes;
pub mod sundaram;
pub mod tableau;

pub use error::{Error, Result};
pub use insertion::Column;
pub use shapes::{Cell, Partition, SkewShape};
pub use tableau::SkewTableau;
