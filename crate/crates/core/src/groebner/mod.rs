//! Reduced Gröbner bases under weight-refined orders, initial ideals, ideal
//! equality, monomial containment and Gröbner cones.

mod cone;
pub(crate) mod engine;
mod order;
mod saturation;

pub use cone::{cone_contains, groebner_cone, ConeH, ConeJson};
pub use order::{TermOrder, TieBreak};
pub use saturation::{contains_monomial, contains_monomial_rabinowitsch, saturate_by_variable};

use crate::error::{check_len, Error, Result};
use crate::polycore::{Ideal, Polynomial, Ring, WeightVector};

use engine::{buchberger, reduce_full, s_poly, SPoly};
use order::CompiledOrder;

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Elements sorted by decreasing leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        Ideal::new(self.ring.clone(), self.elements.clone())
    }

    fn compiled(&self) -> CompiledOrder {
        CompiledOrder::compile(&self.order, self.ring.nvars()).expect("order compiled at construction")
    }

    /// Normal form of `f` with respect to this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_len(self.ring.nvars(), f.nvars())?;
        let ord = self.compiled();
        let basis: Vec<SPoly> = self.elements.iter().map(|g| SPoly::from_poly(g, &ord)).collect();
        let refs: Vec<&SPoly> = basis.iter().collect();
        Ok(reduce_full(&SPoly::from_poly(f, &ord), &refs).to_poly(self.ring.nvars()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let ord = self.compiled();
        let basis: Vec<SPoly> = self.elements.iter().map(|g| SPoly::from_poly(g, &ord)).collect();
        let refs: Vec<&SPoly> = basis.iter().collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if !reduce_full(&s_poly(&basis[i], &basis[j], &ord), &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Leading monomials in the order of [`GroebnerBasis::elements`].
    pub fn leading_monomials(&self) -> Vec<crate::polycore::Monomial> {
        let ord = self.compiled();
        self.elements
            .iter()
            .map(|g| {
                let s = SPoly::from_poly(g, &ord);
                crate::polycore::Monomial::new(s.lm().exps.iter().map(|&e| e as u32).collect())
            })
            .collect()
    }
}

fn check_exponents(ideal: &Ideal) -> Result<()> {
    for g in ideal.generators() {
        if g.terms().any(|(m, _)| m.exps().iter().any(|&e| e > 4096)) {
            return Err(Error::Scale("exponent too large".into()));
        }
    }
    Ok(())
}

/// The unique reduced Gröbner basis of `ideal` under `ord`.
///
/// Weighted orders require a homogeneous ideal: for those, comparing
/// weights first is a term order on each degree component.
pub fn reduced_gb(ideal: &Ideal, ord: &TermOrder) -> Result<GroebnerBasis> {
    let n = ideal.nvars();
    let compiled = CompiledOrder::compile(ord, n)?;
    if compiled.weight.is_some() && !ideal.is_homogeneous() {
        return Err(Error::Unsupported("weight orders require a homogeneous ideal".into()));
    }
    check_exponents(ideal)?;
    let gens = ideal.generators().iter().map(|g| SPoly::from_poly(g, &compiled)).collect();
    let basis = buchberger(gens, &compiled);
    Ok(GroebnerBasis {
        ring: ideal.ring().clone(),
        elements: basis.iter().map(|p| p.to_poly(n)).collect(),
        order: ord.clone(),
        reduced: true,
    })
}

/// Reduced basis under the weight-refined order; its initial forms generate
/// the initial ideal and form a grevlex Gröbner basis of it.
pub fn initial_ideal_basis(ideal: &Ideal, w: &WeightVector) -> Result<(GroebnerBasis, GroebnerBasis)> {
    if !ideal.is_homogeneous() {
        return Err(Error::Unsupported("initial ideals require a homogeneous ideal".into()));
    }
    check_len(ideal.nvars(), w.len())?;
    let gb = reduced_gb(ideal, &TermOrder::weighted(w.clone()))?;
    let initials = gb.elements.iter().map(|g| g.initial_form(w)).collect::<Result<Vec<_>>>()?;
    let in_gb = GroebnerBasis { ring: gb.ring.clone(), elements: initials, order: TermOrder::grevlex(), reduced: true };
    Ok((gb, in_gb))
}

/// The initial ideal `in_w(I)` (minimum convention).
pub fn initial_ideal(ideal: &Ideal, w: &WeightVector) -> Result<Ideal> {
    initial_ideal_basis(ideal, w)?.1.to_ideal()
}

/// Equality of ideals via their reduced grevlex bases.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        check_len(a.nvars(), b.nvars())?;
    }
    let ga = reduced_gb(a, &TermOrder::grevlex())?;
    let gb = reduced_gb(b, &TermOrder::grevlex())?;
    Ok(ga.elements == gb.elements)
}

/// `w` lies in the tropical variety iff `in_w(I)` contains no monomial.
pub fn in_tropical_variety(ideal: &Ideal, w: &WeightVector) -> Result<bool> {
    let (_, in_gb) = initial_ideal_basis(ideal, w)?;
    initial_basis_is_tropical(&in_gb)
}

/// Tropical test on an already computed initial-ideal basis.
pub fn initial_basis_is_tropical(in_gb: &GroebnerBasis) -> Result<bool> {
    if in_gb.elements.iter().any(Polynomial::is_monomial) {
        return Ok(false);
    }
    Ok(!contains_monomial(&in_gb.to_ideal()?)?)
}
