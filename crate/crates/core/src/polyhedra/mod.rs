//! Exact linear programming, cone dimension, extreme rays and sample-based
//! fan support checks.

mod fan;
pub mod linalg;
mod lp;

pub use fan::{cone_dim, extreme_rays, support_contains, Fan, FanJson, SampleReport, SupportReport};
pub use lp::{lp_solve, verify, Constraint, LinearProgram, LpOutcome, Relation, Sense};
