//! Combinatorics of tropical compactifications over exact rationals.
//!
//! * [`polycore`]: rationals, polynomials, ideals, Laurent polynomials.
//! * [`groebner`]: reduced Gröbner bases under weight-refined orders,
//!   initial ideals, monomial containment, Gröbner cones.
//! * [`polyhedra`]: exact simplex with certificates, cones and fans.
//! * [`matroidlab`]: regular subdivisions of hypersimplices, matroids,
//!   face maps and octahedron splits.
//! * [`grasstrop`]: Plücker ideals, Plücker valuations, tree space and the
//!   refinement checker relating initial ideals to matroid subdivisions.

pub mod error;
pub mod grasstrop;
pub mod groebner;
pub mod matroidlab;
pub mod polycore;
pub mod polyhedra;

pub use error::{Error, Result};
