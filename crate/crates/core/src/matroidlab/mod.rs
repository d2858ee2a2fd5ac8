//! Hypersimplex combinatorics: regular subdivisions from lifting functions,
//! matroid recognition, coarsening, face maps and octahedron splits.

mod face;
mod matroid;
mod octahedron;
mod subdivision;
mod subset;

pub use face::{face_bases, face_restrict, face_shape, face_subdivision};
pub use matroid::{is_matroid, more_constrained, Matroid};
pub use octahedron::{
    all_octahedra, octahedron_class, octahedron_values, pair_sums, values_of, Octahedron, OctahedronClass, PAIRS,
};
pub use subdivision::{
    coarsens, is_matroid_decomposition, strictly_refines, subdivide, subdivide_certified, CertifiedCell,
    MatroidSubdivision, SubdivisionJson,
};
pub use subset::{all_subsets, binomial, BasisSubset, Hypersimplex, LiftFunction, LiftFunctionJson};
