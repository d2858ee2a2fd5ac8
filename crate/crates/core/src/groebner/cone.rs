use serde::{Deserialize, Serialize};

use crate::error::{check_len, Result};
use crate::polycore::{Ideal, Rational, WeightVector};

use super::initial_ideal_basis;

/// A closed polyhedral cone `{x : e·x = 0 for e in equalities, a·x <= 0 for
/// a in inequalities}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeH {
    pub dim: usize,
    pub equalities: Vec<WeightVector>,
    pub inequalities: Vec<WeightVector>,
}

impl ConeH {
    pub fn new(dim: usize, equalities: Vec<WeightVector>, inequalities: Vec<WeightVector>) -> Result<Self> {
        for row in equalities.iter().chain(&inequalities) {
            check_len(dim, row.len())?;
        }
        Ok(ConeH { dim, equalities, inequalities })
    }

    /// The whole space.
    pub fn full(dim: usize) -> Self {
        ConeH { dim, equalities: Vec::new(), inequalities: Vec::new() }
    }

    pub fn contains(&self, w: &WeightVector) -> Result<bool> {
        cone_contains(self, w)
    }

    /// Same as [`ConeH::contains`] but requires every inequality to be strict.
    pub fn contains_strictly(&self, w: &WeightVector) -> Result<bool> {
        check_len(self.dim, w.len())?;
        Ok(self.equalities.iter().all(|e| e.dot(w).is_zero())
            && self.inequalities.iter().all(|a| a.dot(w).is_negative()))
    }
}

/// Exact evaluation of all equalities and inequalities at `w`.
pub fn cone_contains(c: &ConeH, w: &WeightVector) -> Result<bool> {
    check_len(c.dim, w.len())?;
    Ok(c.equalities.iter().all(|e| e.dot(w).is_zero()) && c.inequalities.iter().all(|a| !a.dot(w).is_positive()))
}

fn push_unique(rows: &mut Vec<WeightVector>, row: WeightVector) {
    if !row.is_zero() && !rows.contains(&row) {
        rows.push(row);
    }
}

/// The closed Gröbner cone of `ideal` around `w`.
///
/// For every element `g` of the reduced basis under the `w`-refined order,
/// the exponents in `in_w(g)` must keep equal weight, and no exponent
/// outside `in_w(g)` may weigh less than them.
pub fn groebner_cone(ideal: &Ideal, w: &WeightVector) -> Result<ConeH> {
    let n = ideal.nvars();
    let (gb, _) = initial_ideal_basis(ideal, w)?;
    let mut equalities = Vec::new();
    let mut inequalities = Vec::new();
    for g in gb.elements() {
        let ing = g.initial_form(w)?;
        let initial: Vec<_> = ing.terms().map(|(m, _)| m.clone()).collect();
        let base = &initial[0];
        let diff = |a: &crate::polycore::Monomial, b: &crate::polycore::Monomial| {
            WeightVector::new(
                a.exps().iter().zip(b.exps()).map(|(x, y)| Rational::from_int(*x as i64 - *y as i64)).collect(),
            )
        };
        for a in &initial[1..] {
            push_unique(&mut equalities, diff(a, base));
        }
        for (b, _) in g.terms() {
            if ing.coeff(b).is_zero() {
                push_unique(&mut inequalities, diff(base, b));
            }
        }
    }
    ConeH::new(n, equalities, inequalities)
}

/// Cone JSON `{equalities: [[rat]], inequalities: [[rat]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeJson {
    pub equalities: Vec<Vec<Rational>>,
    pub inequalities: Vec<Vec<Rational>>,
}

impl ConeJson {
    pub fn from_cone(c: &ConeH) -> Self {
        ConeJson {
            equalities: c.equalities.iter().map(|r| r.entries().to_vec()).collect(),
            inequalities: c.inequalities.iter().map(|r| r.entries().to_vec()).collect(),
        }
    }

    pub fn to_cone(&self, dim: usize) -> Result<ConeH> {
        ConeH::new(
            dim,
            self.equalities.iter().cloned().map(WeightVector::new).collect(),
            self.inequalities.iter().cloned().map(WeightVector::new).collect(),
        )
    }
}
