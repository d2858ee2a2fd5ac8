use crate::error::{Error, Result};
use crate::polycore::Rational;
use crate::polyhedra::linalg::rank;

use super::matroid::Matroid;
use super::subdivision::MatroidSubdivision;
use super::subset::{BasisSubset, Hypersimplex, LiftFunction};

/// The facet `x_{i0} = value` of `Δ(r, n)`, as a hypersimplex on the
/// relabelled ground set `{1..n-1}`: `Δ(r-1, n-1)` for `value = 1` and
/// `Δ(r, n-1)` for `value = 0`.
pub fn face_shape(shape: Hypersimplex, i0: usize, value: u8) -> Result<Hypersimplex> {
    if i0 == 0 || i0 > shape.n {
        return Err(Error::Argument(format!("face index {i0} outside 1..={}", shape.n)));
    }
    let r = match value {
        1 => shape.r - 1,
        0 => shape.r,
        v => return Err(Error::Argument(format!("face value must be 0 or 1, got {v}"))),
    };
    if r == 0 || r >= shape.n - 1 {
        return Err(Error::EmptyFace(format!("x_{i0} = {value} on Δ({}, {}) is a single vertex", shape.r, shape.n)));
    }
    Hypersimplex::new(r, shape.n - 1)
}

/// Maps a vertex on the facet to the facet's own labels, or `None` if it
/// is off the facet.
fn to_face(v: &BasisSubset, i0: usize, value: u8) -> Option<BasisSubset> {
    if v.contains(i0) != (value == 1) {
        return None;
    }
    let members = v.members().iter().filter(|&&m| m != i0).map(|&m| if m > i0 { m - 1 } else { m }).collect();
    Some(BasisSubset::new(members, v.n() - 1).expect("relabelled subset is valid"))
}

/// Restriction of `ω` to the facet `x_{i0} = value`, relabelled so the
/// remaining indices are `1..n-1` in their original order.
pub fn face_restrict(w: &LiftFunction, i0: usize, value: u8) -> Result<LiftFunction> {
    let shape = face_shape(w.shape(), i0, value)?;
    let mut values = vec![Rational::zero(); shape.num_vertices()];
    for (v, val) in w.iter() {
        if let Some(f) = to_face(&v, i0, value) {
            values[f.rank()] = val.clone();
        }
    }
    LiftFunction::new(shape, values)
}

/// Bases of `M` on the facet `x_{i0} = value`: the contraction of `i0`
/// for `value = 1`, the deletion for `value = 0`.
pub fn face_bases(m: &Matroid, i0: usize, value: u8) -> Result<Vec<BasisSubset>> {
    face_shape(m.shape(), i0, value)?;
    Ok(m.bases().iter().filter_map(|b| to_face(b, i0, value)).collect())
}

/// Restriction of a subdivision to a facet: the intersections of cells
/// with the facet that are full-dimensional there.
pub fn face_subdivision(s: &MatroidSubdivision, i0: usize, value: u8) -> Result<MatroidSubdivision> {
    let shape = face_shape(s.shape(), i0, value)?;
    let mut cells = Vec::new();
    for c in s.cells() {
        let f: Vec<BasisSubset> = c.iter().filter_map(|v| to_face(v, i0, value)).collect();
        let rows: Vec<Vec<Rational>> =
            f.iter().map(|v| v.indicator().into_iter().map(|x| Rational::from_int(x as i64)).collect()).collect();
        if !f.is_empty() && rank(&rows) == shape.n {
            cells.push(f);
        }
    }
    MatroidSubdivision::new(shape, cells)
}
