use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{ideal_equal, initial_basis_is_tropical, initial_ideal_basis};
use crate::matroidlab::{
    all_octahedra, face_bases, more_constrained, octahedron_class, strictly_refines, subdivide, values_of, BasisSubset,
    Hypersimplex, LiftFunction, Matroid, OctahedronClass,
};

use super::pluecker::{pluecker_ideal, three_term, PlueckerRing};

/// An octahedron whose split class differs between the two points, with the
/// initial forms of its three-term relation under each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementCertificate {
    #[serde(rename = "I")]
    pub i: [usize; 4],
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub class_fine: OctahedronClass,
    pub class_coarse: OctahedronClass,
    pub initial_fine: String,
    pub initial_coarse: String,
}

fn check_shape(w: &LiftFunction, shape: Hypersimplex, what: &str) -> Result<()> {
    if w.shape() != shape {
        return Err(Error::Argument(format!(
            "{what} lives on Δ({}, {}), expected Δ({}, {})",
            w.r(),
            w.n(),
            shape.r,
            shape.n
        )));
    }
    Ok(())
}

/// Certifies that the subdivision of `fine` strictly refines that of
/// `coarse` by exhibiting an octahedron whose split changes, and checks that
/// the two initial ideals of the Plücker ideal differ.
pub fn check_refinement(
    fine: &LiftFunction,
    coarse: &LiftFunction,
    r: usize,
    n: usize,
) -> Result<RefinementCertificate> {
    let shape = Hypersimplex::new(r, n)?;
    check_shape(fine, shape, "fine point")?;
    check_shape(coarse, shape, "coarse point")?;
    let ring = PlueckerRing::new(r, n)?;
    let ideal = pluecker_ideal(r, n)?;
    let (_, in_fine) = initial_ideal_basis(&ideal, &fine.to_weight())?;
    let (_, in_coarse) = initial_ideal_basis(&ideal, &coarse.to_weight())?;
    if !initial_basis_is_tropical(&in_fine)? {
        return Err(Error::Precondition("fine point is not in the tropical Grassmannian".into()));
    }
    if !initial_basis_is_tropical(&in_coarse)? {
        return Err(Error::Precondition("coarse point is not in the tropical Grassmannian".into()));
    }
    if !strictly_refines(&subdivide(fine)?, &subdivide(coarse)?) {
        return Err(Error::Precondition("fine subdivision does not strictly refine the coarse one".into()));
    }
    let classify = |w: &LiftFunction, oct: &crate::matroidlab::Octahedron| -> Result<OctahedronClass> {
        values_of(w, oct).and_then(|v| octahedron_class(&v)).map_err(|e| Error::Inconsistency(e.to_string()))
    };
    for oct in all_octahedra(r, n) {
        let cf = classify(fine, &oct)?;
        let cc = classify(coarse, &oct)?;
        if cf == cc {
            continue;
        }
        let rel = three_term(&ring, &oct.i, &oct.j)?;
        let inf = rel.initial_form(&fine.to_weight())?;
        let inc = rel.initial_form(&coarse.to_weight())?;
        if inf == inc {
            return Err(Error::Inconsistency(format!("split changes on {oct} but the initial forms agree")));
        }
        if ideal_equal(&in_fine.to_ideal()?, &in_coarse.to_ideal()?)? {
            return Err(Error::Inconsistency(format!("split changes on {oct} but the initial ideals agree")));
        }
        return Ok(RefinementCertificate {
            i: oct.i,
            j: oct.j.clone(),
            class_fine: cf,
            class_coarse: cc,
            initial_fine: ring.ring().format(&inf),
            initial_coarse: ring.ring().format(&inc),
        });
    }
    Err(Error::NoCertificate(format!("no octahedron of Δ({r}, {n}) changes its split")))
}

/// One facet step `x_{i0} = value`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentStep {
    pub i0: usize,
    pub value: u8,
}

fn set_string(bases: &[BasisSubset]) -> String {
    let parts: Vec<String> = bases.iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn descend(
    small: &[BasisSubset],
    big: &[BasisSubset],
    shape: Hypersimplex,
    path: &mut Vec<DescentStep>,
) -> Result<bool> {
    if shape.r == 2 && shape.n == 4 {
        return Ok(true);
    }
    let m_small = Matroid::new(small.to_vec())?;
    let m_big = Matroid::new(big.to_vec())?;
    for i0 in 1..=shape.n {
        for value in [0u8, 1] {
            let allowed = if value == 1 { shape.r > 2 } else { shape.n - shape.r > 2 };
            if !allowed {
                continue;
            }
            let s = face_bases(&m_small, i0, value)?;
            let b = face_bases(&m_big, i0, value)?;
            if s.is_empty() || s.len() >= b.len() {
                continue;
            }
            let face = Matroid::new(s.clone())?;
            if !face.is_connected()? {
                continue;
            }
            path.push(DescentStep { i0, value });
            let next = Hypersimplex::new(if value == 1 { shape.r - 1 } else { shape.r }, shape.n - 1)?;
            if descend(&s, &b, next, path)? {
                return Ok(true);
            }
            path.pop();
        }
    }
    Ok(false)
}

/// A sequence of facet steps taking `Δ(r, n)` to `Δ(2, 4)` along which the
/// face of `m` stays connected and strictly inside the face of `m2`.
pub fn constrained_descent(m: &Matroid, m2: &Matroid) -> Result<Vec<DescentStep>> {
    if !more_constrained(m, m2) {
        return Err(Error::Precondition("bases(M) must be a proper subset of bases(M') on the same shape".into()));
    }
    if !m.is_connected()? || !m2.is_connected()? {
        return Err(Error::Precondition("both matroids must be connected".into()));
    }
    let shape = m.shape();
    if shape.r < 2 || shape.n - shape.r < 2 {
        return Err(Error::Precondition(format!("Δ({}, {}) has no Δ(2, 4) face", shape.r, shape.n)));
    }
    let small: Vec<BasisSubset> = m.bases().iter().cloned().collect();
    let big: Vec<BasisSubset> = m2.bases().iter().cloned().collect();
    let mut path = Vec::new();
    if descend(&small, &big, shape, &mut path)? {
        Ok(path)
    } else {
        Err(Error::NoDescent { stuck: format!("M = {} inside M' = {}", set_string(&small), set_string(&big)) })
    }
}

/// Applies a descent path and returns the two `Δ(2, 4)` faces.
pub fn apply_descent(m: &Matroid, m2: &Matroid, path: &[DescentStep]) -> Result<(Matroid, Matroid)> {
    let (mut a, mut b) = (m.clone(), m2.clone());
    for step in path {
        a = Matroid::new(face_bases(&a, step.i0, step.value)?)?;
        b = Matroid::new(face_bases(&b, step.i0, step.value)?)?;
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroidlab::MatroidSubdivision;

    fn lift(r: usize, n: usize, v: &[i64]) -> LiftFunction {
        LiftFunction::from_ints(Hypersimplex::new(r, n).unwrap(), v).unwrap()
    }

    #[test]
    fn quartet_certificate() {
        let fine = lift(2, 4, &[0, 0, 1, 1, 0, 0]);
        let coarse = lift(2, 4, &[0; 6]);
        let c = check_refinement(&fine, &coarse, 2, 4).unwrap();
        assert_eq!(c.i, [1, 2, 3, 4]);
        assert_eq!(c.class_fine, OctahedronClass::SplitC);
        assert_eq!(c.class_coarse, OctahedronClass::NoSplit);
        assert_eq!(c.initial_coarse, "p12*p34 - p13*p24 + p14*p23");
        assert_eq!(c.initial_fine, "p12*p34 - p13*p24");
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(j["I"], serde_json::json!([1, 2, 3, 4]));
        assert_eq!(j["class_fine"], "SplitC");
    }

    #[test]
    fn preconditions() {
        let coarse = lift(2, 4, &[0; 6]);
        let split = lift(2, 4, &[0, 0, 1, 1, 0, 0]);
        // same subdivision on both sides
        assert!(matches!(check_refinement(&split, &split, 2, 4), Err(Error::Precondition(_))));
        // reversed roles
        assert!(matches!(check_refinement(&coarse, &split, 2, 4), Err(Error::Precondition(_))));
        // not tropical
        let bad = lift(2, 4, &[0, -1, 0, 0, 0, 0]);
        assert!(matches!(check_refinement(&bad, &coarse, 2, 4), Err(Error::Precondition(_))));
        assert!(matches!(check_refinement(&split, &coarse, 2, 5), Err(Error::Argument(_))));
    }

    #[test]
    fn certificate_on_d36() {
        // split of Δ(3,6) from the hyperplane x1 + x2 + x3 = 2 (a realizable point)
        let shape = Hypersimplex::new(3, 6).unwrap();
        let vals: Vec<i64> = shape
            .vertices()
            .iter()
            .map(|s| {
                let k = s.members().iter().filter(|&&m| m <= 3).count() as i64;
                (k - 1).max(0)
            })
            .collect();
        let fine = LiftFunction::from_ints(shape, &vals).unwrap();
        let coarse = LiftFunction::zero(shape);
        let c = check_refinement(&fine, &coarse, 3, 6).unwrap();
        assert_eq!(c.class_coarse, OctahedronClass::NoSplit);
        assert_ne!(c.class_fine, OctahedronClass::NoSplit);
    }

    fn cell_matroid(s: &MatroidSubdivision, k: usize) -> Matroid {
        Matroid::new(s.cells()[k].clone()).unwrap()
    }

    #[test]
    fn descent_on_d25() {
        // one split {4,5} | {1,2,3}
        let shape = Hypersimplex::new(2, 5).unwrap();
        let w = LiftFunction::from_sparse(shape, &[(vec![4, 5], crate::polycore::Rational::one())]).unwrap();
        let s = subdivide(&w).unwrap();
        assert_eq!(s.len(), 2);
        let u = Matroid::uniform(2, 5).unwrap();
        for k in 0..2 {
            let m = cell_matroid(&s, k);
            let path = constrained_descent(&m, &u).unwrap();
            assert_eq!(path.len(), 1);
            assert_eq!(path[0].value, 0);
            let (a, b) = apply_descent(&m, &u, &path).unwrap();
            assert!(more_constrained(&a, &b));
            assert!(a.is_connected().unwrap());
        }
    }

    #[test]
    fn descent_on_d36() {
        let shape = Hypersimplex::new(3, 6).unwrap();
        let vals: Vec<i64> = shape
            .vertices()
            .iter()
            .map(|s| (s.members().iter().filter(|&&m| m <= 3).count() as i64 - 1).max(0))
            .collect();
        let s = subdivide(&LiftFunction::from_ints(shape, &vals).unwrap()).unwrap();
        let u = Matroid::uniform(3, 6).unwrap();
        for k in 0..s.len() {
            let m = cell_matroid(&s, k);
            let path = constrained_descent(&m, &u).unwrap();
            assert_eq!(path.len(), 2);
            assert_eq!(path.iter().filter(|p| p.value == 1).count(), 1);
            let (a, b) = apply_descent(&m, &u, &path).unwrap();
            assert_eq!(a.shape(), Hypersimplex::new(2, 4).unwrap());
            assert!(more_constrained(&a, &b));
        }
    }

    #[test]
    fn certificate_on_d25_picks_the_new_split() {
        let shape = Hypersimplex::new(2, 5).unwrap();
        let one = crate::polycore::Rational::one();
        let fine = LiftFunction::from_sparse(shape, &[(vec![1, 2], one.clone()), (vec![4, 5], one.clone())]).unwrap();
        let coarse = LiftFunction::from_sparse(shape, &[(vec![1, 2], one)]).unwrap();
        let c = check_refinement(&fine, &coarse, 2, 5).unwrap();
        assert_eq!(c.i, [1, 3, 4, 5]);
        assert_eq!(c.class_coarse, OctahedronClass::NoSplit);
        assert_eq!(c.class_fine, OctahedronClass::SplitA);
    }

    #[test]
    fn descent_on_d35() {
        let shape = Hypersimplex::new(3, 5).unwrap();
        // split along x4 + x5 = 1
        let one = crate::polycore::Rational::one();
        let raised: Vec<(Vec<usize>, _)> = (1..=3).map(|i| (vec![i, 4, 5], one.clone())).collect();
        let w = LiftFunction::from_sparse(shape, &raised).unwrap();
        let s = subdivide(&w).unwrap();
        assert_eq!(s.len(), 2);
        let u = Matroid::uniform(3, 5).unwrap();
        for k in 0..2 {
            let m = cell_matroid(&s, k);
            let path = constrained_descent(&m, &u).unwrap();
            assert_eq!(path.len(), 1);
            assert_eq!(path[0].value, 1);
            let (a, b) = apply_descent(&m, &u, &path).unwrap();
            assert!(more_constrained(&a, &b));
        }
    }

    #[test]
    fn descent_preconditions() {
        let u = Matroid::uniform(2, 4).unwrap();
        assert!(matches!(constrained_descent(&u, &u), Err(Error::Precondition(_))));
        let coloop = Matroid::from_lists(2, 4, &[&[1, 2], &[1, 3], &[1, 4]]).unwrap();
        assert!(matches!(constrained_descent(&coloop, &u), Err(Error::Precondition(_))));
        let pyramid = Matroid::from_lists(2, 4, &[&[1, 2], &[1, 3], &[2, 4], &[3, 4], &[1, 4]]).unwrap();
        assert!(constrained_descent(&pyramid, &u).unwrap().is_empty());
    }
}
