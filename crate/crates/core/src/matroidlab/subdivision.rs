use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{Rational, WeightVector};
use crate::polyhedra::linalg::{dot, rank};
use crate::polyhedra::{extreme_rays, lp_solve, LinearProgram, LpOutcome, Relation, Sense};

use super::matroid::is_matroid;
use super::subset::{BasisSubset, Hypersimplex, LiftFunction};

/// A subdivision of `Δ(r, n)` into cells, each a sorted list of vertices.
/// Cells are kept sorted, so equal subdivisions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatroidSubdivision {
    shape: Hypersimplex,
    cells: Vec<Vec<BasisSubset>>,
}

impl MatroidSubdivision {
    pub fn new(shape: Hypersimplex, cells: Vec<Vec<BasisSubset>>) -> Result<Self> {
        let mut cells: Vec<Vec<BasisSubset>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort();
                c.dedup();
                c
            })
            .collect();
        for c in &cells {
            if c.is_empty() {
                return Err(Error::Format("empty cell".into()));
            }
            for v in c {
                if v.r() != shape.r || v.n() != shape.n {
                    return Err(Error::Format(format!("vertex {v} is not a vertex of Δ({}, {})", shape.r, shape.n)));
                }
            }
        }
        cells.sort();
        cells.dedup();
        Ok(MatroidSubdivision { shape, cells })
    }

    /// The single-cell subdivision.
    pub fn trivial(shape: Hypersimplex) -> Self {
        MatroidSubdivision { shape, cells: vec![shape.vertices()] }
    }

    pub fn shape(&self) -> Hypersimplex {
        self.shape
    }

    pub fn cells(&self) -> &[Vec<BasisSubset>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Every vertex of the hypersimplex lies in some cell.
    pub fn covers(&self) -> bool {
        let seen: BTreeSet<&BasisSubset> = self.cells.iter().flatten().collect();
        seen.len() == self.shape.num_vertices()
    }
}

/// Subdivision JSON `{cells: [[subset]]}` with `r, n` alongside.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubdivisionJson {
    pub r: usize,
    pub n: usize,
    pub cells: Vec<Vec<Vec<usize>>>,
}

impl SubdivisionJson {
    pub fn from_subdivision(s: &MatroidSubdivision) -> Self {
        SubdivisionJson {
            r: s.shape.r,
            n: s.shape.n,
            cells: s.cells.iter().map(|c| c.iter().map(|v| v.members().to_vec()).collect()).collect(),
        }
    }

    pub fn to_subdivision(&self) -> Result<MatroidSubdivision> {
        let shape = Hypersimplex::new(self.r, self.n)?;
        let cells = self
            .cells
            .iter()
            .map(|c| c.iter().map(|v| shape.subset(v.clone())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        MatroidSubdivision::new(shape, cells)
    }
}

fn indicator(v: &BasisSubset) -> Vec<Rational> {
    v.indicator().into_iter().map(|x| Rational::from_int(x as i64)).collect()
}

/// A cell together with the affine functional `α` (linear, since
/// `Σ x_i = r` on the hypersimplex) certifying it: `α(e_I) = ω(I)` on the
/// cell and `α(e_I) < ω(I)` off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedCell {
    pub vertices: Vec<BasisSubset>,
    pub functional: Vec<Rational>,
}

/// Regular subdivision of `Δ(r, n)` induced by `ω` (lower faces of the
/// lifted polytope), with one certificate per cell.
///
/// Cells are the vertices of `{a ∈ Q^n : e_I · a <= ω(I) for all I}`. The
/// search starts at the LP optimum in the barycenter direction and walks
/// the edges of that polyhedron; an edge from a vertex leaves along an
/// extreme ray of its tangent cone and stops at the first constraint it
/// meets, which is the neighbouring cell across a shared facet.
pub fn subdivide_certified(w: &LiftFunction) -> Result<Vec<CertifiedCell>> {
    let shape = w.shape();
    let n = shape.n;
    let verts = shape.vertices();
    let rows: Vec<Vec<Rational>> = verts.iter().map(indicator).collect();
    let mut lp = LinearProgram::new(n, Sense::Maximize, WeightVector::new(vec![Rational::one(); n]));
    for (row, v) in rows.iter().zip(w.values()) {
        lp.push(row.clone(), Relation::Le, v.clone());
    }
    let start = match lp_solve(&lp)? {
        LpOutcome::Optimal { point, .. } => point,
        other => return Err(Error::Lp(format!("barycenter program did not reach an optimum: {other:?}"))),
    };
    let tight =
        |a: &[Rational]| -> Vec<usize> { (0..rows.len()).filter(|&k| dot(&rows[k], a) == w.values()[k]).collect() };

    let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut out = Vec::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(a) = queue.pop_front() {
        let s = tight(&a);
        let srows: Vec<Vec<Rational>> = s.iter().map(|&k| rows[k].clone()).collect();
        if rank(&srows) != n {
            return Err(Error::Inconsistency(format!("point {a:?} is not a vertex of the lifting polyhedron")));
        }
        for d in extreme_rays(&srows, n)? {
            let mut step: Option<Rational> = None;
            for k in 0..rows.len() {
                let rate = dot(&rows[k], &d);
                if !rate.is_positive() {
                    continue;
                }
                let t = &(&w.values()[k] - &dot(&rows[k], &a)) / &rate;
                if step.as_ref().is_none_or(|s| t < *s) {
                    step = Some(t);
                }
            }
            if let Some(t) = step {
                let next: Vec<Rational> = a.iter().zip(&d).map(|(x, y)| x + &(&t * y)).collect();
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        out.push(CertifiedCell { vertices: s.iter().map(|&k| verts[k].clone()).collect(), functional: a });
    }
    out.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    Ok(out)
}

/// The cells of the regular subdivision induced by `ω`. Matroid-ness of the
/// cells is not asserted; see [`is_matroid_decomposition`].
pub fn subdivide(w: &LiftFunction) -> Result<MatroidSubdivision> {
    let cells = subdivide_certified(w)?.into_iter().map(|c| c.vertices).collect();
    MatroidSubdivision::new(w.shape(), cells)
}

/// Every cell satisfies the basis-exchange axiom.
pub fn is_matroid_decomposition(s: &MatroidSubdivision) -> bool {
    s.cells.iter().all(|c| is_matroid(c).unwrap_or(false))
}

/// Every cell of `fine` lies in some cell of `coarse`. Subdivisions of
/// different hypersimplices never coarsen each other.
pub fn coarsens(fine: &MatroidSubdivision, coarse: &MatroidSubdivision) -> bool {
    if fine.shape != coarse.shape {
        return false;
    }
    let coarse_sets: Vec<BTreeSet<&BasisSubset>> = coarse.cells.iter().map(|c| c.iter().collect()).collect();
    fine.cells.iter().all(|c| coarse_sets.iter().any(|big| c.iter().all(|v| big.contains(v))))
}

/// `fine` strictly refines `coarse`: it coarsens to it and differs from it.
pub fn strictly_refines(fine: &MatroidSubdivision, coarse: &MatroidSubdivision) -> bool {
    coarsens(fine, coarse) && fine != coarse
}
