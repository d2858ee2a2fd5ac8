//! Exact arithmetic: rationals, monomials, polynomials, ideals, weight
//! vectors and univariate Laurent polynomials.
//!
//! Initial forms follow the **minimum convention**: `in_w(f)` collects the
//! terms of `f` whose `w`-weight is smallest. This matches reading the
//! valuation of a Laurent series as its lowest exponent. Software using the
//! max convention corresponds to `in_{-w}` here.

mod ideal;
mod laurent;
mod monomial;
mod polynomial;
mod rational;
pub mod text;
mod weight;

pub use ideal::{GeneratorJson, Ideal, IdealJson, PolynomialJson, Ring, TermJson};
pub use laurent::{valuation, LaurentPoly};
pub use monomial::{weight, Monomial};
pub use polynomial::{initial_form, Polynomial};
pub use rational::Rational;
pub use weight::WeightVector;
