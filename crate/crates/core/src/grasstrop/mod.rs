//! Plücker ideals, Plücker valuations of Laurent matrices, tree space for
//! `r = 2`, and the refinement checker.

mod pluecker;
mod realize;
mod refine;
mod sample;
mod suites;
mod tree;

pub use pluecker::{octahedron_count, pluecker_ideal, three_term, PlueckerRing, MAX_PLUECKER_VARS};
pub use realize::{pluecker_valuation, LaurentMatrix, LaurentMatrixJson};
pub use refine::{apply_descent, check_refinement, constrained_descent, DescentStep, RefinementCertificate};
pub use sample::{
    random_gauge, random_laurent_matrix, random_lift, random_realizable_point, random_refinement_pair, REFINEMENT_SCALE,
};
pub use suites::{
    lineality_report, membership_equiv_report, realizability_report, refinement_corpus_report, trial_rng,
    Counterexample, SuiteReport,
};
pub use tree::{dressian_ok, four_point_ok, tree_from_point, PhyloTree, PhyloTreeJson, TreeEdge};
