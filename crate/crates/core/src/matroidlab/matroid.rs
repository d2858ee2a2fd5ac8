use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::ConeH;
use crate::polycore::{Rational, WeightVector};
use crate::polyhedra::cone_dim;

use super::subset::{BasisSubset, Hypersimplex};

fn common_shape(bases: &[BasisSubset]) -> Result<Hypersimplex> {
    let first = bases.first().ok_or_else(|| Error::Format("empty basis set".into()))?;
    let shape = Hypersimplex::new(first.r(), first.n())?;
    for b in bases {
        if b.r() != shape.r || b.n() != shape.n {
            return Err(Error::Format(format!(
                "subset {b} of {{1..{}}} does not match rank {} on {{1..{}}}",
                b.n(),
                shape.r,
                shape.n
            )));
        }
    }
    Ok(shape)
}

fn exchange_holds(set: &BTreeSet<BasisSubset>) -> bool {
    for a in set {
        for b in set {
            for &x in a.members() {
                if b.contains(x) {
                    continue;
                }
                let ok = b.members().iter().filter(|y| !a.contains(**y)).any(|&y| {
                    let mut m: Vec<usize> = a.members().iter().copied().filter(|&z| z != x).collect();
                    m.push(y);
                    set.contains(&BasisSubset::new(m, a.n()).expect("valid exchange"))
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Basis-exchange test: for all bases `A, B` and `a ∈ A∖B` some `b ∈ B∖A`
/// makes `A − a + b` a basis.
pub fn is_matroid(bases: &[BasisSubset]) -> Result<bool> {
    common_shape(bases)?;
    Ok(exchange_holds(&bases.iter().cloned().collect()))
}

/// A matroid on `{1..n}` given by its bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    shape: Hypersimplex,
    bases: BTreeSet<BasisSubset>,
}

impl Matroid {
    pub fn new(bases: Vec<BasisSubset>) -> Result<Self> {
        let shape = common_shape(&bases)?;
        let bases: BTreeSet<BasisSubset> = bases.into_iter().collect();
        if !exchange_holds(&bases) {
            return Err(Error::Format("basis exchange axiom fails".into()));
        }
        Ok(Matroid { shape, bases })
    }

    pub fn from_lists(r: usize, n: usize, lists: &[&[usize]]) -> Result<Self> {
        let shape = Hypersimplex::new(r, n)?;
        Self::new(lists.iter().map(|l| shape.subset(l.to_vec())).collect::<Result<_>>()?)
    }

    /// `U(r, n)`: every `r`-subset is a basis.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        let shape = Hypersimplex::new(r, n)?;
        Ok(Matroid { shape, bases: shape.vertices().into_iter().collect() })
    }

    pub fn shape(&self) -> Hypersimplex {
        self.shape
    }

    pub fn bases(&self) -> &BTreeSet<BasisSubset> {
        &self.bases
    }

    /// The matroid polytope is full-dimensional in `Δ(r, n)` exactly when
    /// the indicator vectors of the bases span `Q^n`, i.e. the cone cut out
    /// by `e_I · x = 0` is the origin.
    pub fn is_connected(&self) -> Result<bool> {
        let n = self.shape.n;
        let eqs = self
            .bases
            .iter()
            .map(|b| WeightVector::new(b.indicator().into_iter().map(|v| Rational::from_int(v as i64)).collect()))
            .collect();
        Ok(cone_dim(&ConeH::new(n, eqs, Vec::new())?)? == 0)
    }
}

/// `M` is more constrained than `M'`: same shape and `bases(M) ⊊ bases(M')`.
pub fn more_constrained(m: &Matroid, m2: &Matroid) -> bool {
    m.shape == m2.shape && m.bases.len() < m2.bases.len() && m.bases.is_subset(&m2.bases)
}
