//! Exact combinatorics for hook components of rectangular diagonal-harmonics
//! characters: Laurent polynomials, tableaux, staircase paths, formal Schur
//! expansions, closed character formulas and path-level Pieri maps.

pub mod characters;
pub mod error;
pub mod fixtures;
pub mod qanalog;
pub mod paths;
pub mod pierimaps;
pub mod qpoly;
pub mod schur;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
pub use paths::{LatticePath, Step};
pub use qpoly::{LaurentPoly, Monomial, Var};
pub use schur::{SchurExpansion, ShapeClass};
pub use shapes::{Partition, StdTableau};
