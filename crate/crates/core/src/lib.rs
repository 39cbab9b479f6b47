//! Exact re-execution of the numerical case analysis showing that a smooth
//! conic bundle in P^4 has degree 4 or 5.
//!
//! The crate is layered bottom-up:
//!
//! * [`numeric`]: exact rationals, integer square roots, integer roots of
//!   monic quadratics;
//! * [`invariants`]: the relations among `d`, `delta`, `g` and `pi`;
//! * [`bounds`]: Castelnuovo, Harris-type and Gruson-Peskine genus bounds;
//! * [`degree_bound`]: the hypersurface case split giving `d <= 42`;
//! * [`lattice`]: intersection numbers and adjunction on `span(H, f)`;
//! * [`cases`]: the exhaustive enumerations for every geometric branch;
//! * [`certify`]: the assembled certificate and its serializations.

pub mod bounds;
pub mod cases;
pub mod certify;
pub mod degree_bound;
pub mod error;
pub mod invariants;
pub mod lattice;
pub mod numeric;

pub use error::{Error, Result};
pub use numeric::Rational;
