//! Exact symbolic computations around decorations on geometric crystals of
//! classical groups: generalized minors of factorized elements, Nakajima
//! monomial crystals, Kashiwara-Nakashima columns, spin triangles, and the
//! ultra-discretization of the decorated geometric crystal on the big cell.
//!
//! All arithmetic is exact (arbitrary-precision rationals); every closed
//! formula implemented here is verified against an independent
//! matrix-representation oracle in the test suites.

pub mod geom;
pub mod laurent;
pub mod minors;
pub mod monomial;
pub mod rep;
pub mod report;
pub mod root_data;
pub mod tableaux;
pub mod trop;
pub mod verify;

pub use laurent::{LaurentPoly, RationalFunction, Var, VarKind};
pub use root_data::{Family, LieType};
