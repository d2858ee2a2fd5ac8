use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::matroidlab::{all_subsets, binomial, BasisSubset, Hypersimplex};
use crate::polycore::{Ideal, Monomial, Polynomial, Rational, Ring};

/// Largest number of Plücker coordinates accepted.
pub const MAX_PLUECKER_VARS: usize = 70;

/// The polynomial ring on the Plücker coordinates `Δ_I` of `Gr(r, n)`,
/// variables in lexicographic subset order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerRing {
    shape: Hypersimplex,
    subsets: Vec<BasisSubset>,
    ring: Ring,
}

impl PlueckerRing {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        let shape = Hypersimplex::new(r, n)?;
        if shape.num_vertices() > MAX_PLUECKER_VARS {
            return Err(Error::Scale(format!(
                "Gr({r},{n}) has {} Plücker coordinates, limit is {MAX_PLUECKER_VARS}",
                shape.num_vertices()
            )));
        }
        let subsets = shape.vertices();
        let ring = Ring::new(subsets.iter().map(|s| {
            if n >= 10 {
                format!("p_{}", s.members().iter().map(|m| m.to_string()).collect::<Vec<_>>().join("_"))
            } else {
                format!("p{s}")
            }
        }));
        Ok(PlueckerRing { shape, subsets, ring })
    }

    pub fn shape(&self) -> Hypersimplex {
        self.shape
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.subsets.len()
    }

    pub fn subsets(&self) -> &[BasisSubset] {
        &self.subsets
    }

    /// Variable index of a (sorted) subset.
    pub fn index(&self, s: &BasisSubset) -> usize {
        s.rank()
    }

    /// `Δ_{indices}` for an arbitrary index sequence: zero when an index
    /// repeats, otherwise the sign of the sorting permutation times the
    /// sorted coordinate.
    fn signed_coordinate(&self, indices: &[usize]) -> Option<(i64, usize)> {
        let mut v = indices.to_vec();
        let mut sign = 1;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let s = BasisSubset::new(v, self.shape.n).ok()?;
        Some((sign, s.rank()))
    }

    fn quadratic(&self, terms: &[(i64, usize, usize)]) -> Polynomial {
        let n = self.nvars();
        let mut p = Polynomial::zero(n);
        for &(c, a, b) in terms {
            let mut e = vec![0u32; n];
            e[a] += 1;
            e[b] += 1;
            p = &p + &Polynomial::term(Monomial::new(e), Rational::from_int(c));
        }
        p
    }

    /// The relation `Σ_k (-1)^k Δ_{left ∪ j_k} Δ_{right ∖ j_k}` for an
    /// `(r-1)`-sequence `left` and an `(r+1)`-sequence `right`.
    fn exchange_relation(&self, left: &[usize], right: &[usize]) -> Polynomial {
        let mut terms = Vec::new();
        for k in 0..right.len() {
            let mut a: Vec<usize> = left.to_vec();
            a.push(right[k]);
            let b: Vec<usize> = right.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &x)| x).collect();
            if let (Some((sa, ia)), Some((sb, ib))) = (self.signed_coordinate(&a), self.signed_coordinate(&b)) {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                terms.push((sign * sa * sb, ia, ib));
            }
        }
        self.quadratic(&terms)
    }
}

/// Scales so that the graded-lex largest coefficient is positive, for
/// deduplication up to sign.
fn normalize_sign(p: Polynomial) -> Polynomial {
    match p.leading_term() {
        Some((_, c)) if c.is_negative() => -&p,
        _ => p,
    }
}

/// The ideal of the cone over `Gr(r, n)` generated by the quadratic
/// exchange (Plücker) relations over all index choices.
pub fn pluecker_ideal(r: usize, n: usize) -> Result<Ideal> {
    if r < 2 {
        return Err(Error::Argument(format!("Plücker relations need r >= 2, got {r}")));
    }
    let pr = PlueckerRing::new(r, n)?;
    let mut seen = HashSet::new();
    let mut gens = Vec::new();
    for left in all_subsets(r - 1, n) {
        for right in all_subsets(r + 1, n) {
            let rel = pr.exchange_relation(left.members(), right.members());
            if rel.is_zero() {
                continue;
            }
            let rel = normalize_sign(rel);
            if seen.insert(rel.clone()) {
                gens.push(rel);
            }
        }
    }
    Ideal::new(pr.ring().clone(), gens)
}

fn check_octahedron(n: usize, r: usize, i: &[usize], j: &[usize]) -> Result<()> {
    if i.len() != 4 {
        return Err(Error::Argument(format!("I must have 4 elements, got {i:?}")));
    }
    if j.len() + 2 != r {
        return Err(Error::Argument(format!("J must have r - 2 = {} elements, got {j:?}", r as i64 - 2)));
    }
    let mut all: Vec<usize> = i.iter().chain(j).copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Argument(format!("I = {i:?} and J = {j:?} must be disjoint sets")));
    }
    if all.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Argument(format!("indices must lie in 1..={n}")));
    }
    Ok(())
}

/// `Δ_{12J}Δ_{34J} − Δ_{13J}Δ_{24J} + Δ_{14J}Δ_{23J}`, where `1 < 2 < 3 < 4`
/// are the sorted elements of `I`.
pub fn three_term(ring: &PlueckerRing, i: &[usize], j: &[usize]) -> Result<Polynomial> {
    let shape = ring.shape();
    check_octahedron(shape.n, shape.r, i, j)?;
    let mut ii = i.to_vec();
    ii.sort_unstable();
    let idx = |a: usize, b: usize| -> Result<usize> {
        let mut m = j.to_vec();
        m.push(ii[a]);
        m.push(ii[b]);
        Ok(shape.subset(m)?.rank())
    };
    Ok(ring.quadratic(&[(1, idx(0, 1)?, idx(2, 3)?), (-1, idx(0, 2)?, idx(1, 3)?), (1, idx(0, 3)?, idx(1, 2)?)]))
}

/// Number of `(I, J)` octahedra in `Δ(r, n)`.
pub fn octahedron_count(r: usize, n: usize) -> usize {
    binomial(n, 4) * binomial(n - 4, r - 2)
}
