//! Monomial containment via saturation by the product of all variables.

use crate::error::{Error, Result};
use crate::polycore::{Ideal, Monomial, Polynomial, Rational};

use super::engine::{buchberger, SPoly};
use super::order::{CompiledOrder, TermOrder};

fn grevlex() -> CompiledOrder {
    CompiledOrder::compile(&TermOrder::grevlex(), 0).expect("grevlex compiles")
}

/// Divides out the largest power of the last variable.
fn strip_last(p: &Polynomial) -> Polynomial {
    let n = p.nvars();
    let k = p.terms().map(|(m, _)| m.exps()[n - 1]).min().unwrap_or(0);
    if k == 0 {
        return p.clone();
    }
    let mut shift = vec![0; n];
    shift[n - 1] = k;
    let d = Monomial::new(shift);
    Polynomial::from_terms(n, p.terms().map(|(m, c)| (d.quotient(m).expect("divisible"), c.clone())))
        .expect("same ring")
}

/// Generators of `I : x_var^∞` for homogeneous `gens`.
///
/// Uses the grevlex basis with `x_var` last: dividing every element by the
/// highest power of `x_var` it is divisible by yields a basis of the
/// saturation.
fn saturate_gens(gens: &[Polynomial], var: usize) -> Vec<Polynomial> {
    let n = gens[0].nvars();
    // swap var <-> last
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(var, n - 1);
    let ord = grevlex();
    let permuted: Vec<SPoly> = gens.iter().map(|g| SPoly::from_poly(&g.permute_vars(&perm), &ord)).collect();
    let gb = buchberger(permuted, &ord);
    gb.iter().map(|g| strip_last(&g.to_poly(n)).permute_vars(&perm)).collect()
}

/// The saturation `I : x_var^∞` of a homogeneous ideal.
pub fn saturate_by_variable(ideal: &Ideal, var: usize) -> Result<Ideal> {
    if !ideal.is_homogeneous() {
        return Err(Error::Unsupported("saturation by a variable requires a homogeneous ideal".into()));
    }
    if var >= ideal.nvars() {
        return Err(Error::Argument(format!("variable index {var} out of range")));
    }
    Ideal::new(ideal.ring().clone(), saturate_gens(ideal.generators(), var))
}

/// True iff the ideal contains a monomial, i.e. `I : (x_1 ⋯ x_N)^∞ = (1)`.
///
/// Homogeneous ideals are saturated one variable at a time, each step a
/// single grevlex basis with that variable last; the product saturation is
/// the composite of the single-variable ones. Any other ideal goes through
/// [`contains_monomial_rabinowitsch`].
pub fn contains_monomial(ideal: &Ideal) -> Result<bool> {
    if !ideal.is_homogeneous() {
        return contains_monomial_rabinowitsch(ideal);
    }
    let mut gens: Vec<Polynomial> = ideal.generators().to_vec();
    for var in (0..ideal.nvars()).rev() {
        if gens.iter().any(|g| g.is_monomial()) {
            return Ok(true);
        }
        gens = saturate_gens(&gens, var);
    }
    Ok(gens.iter().any(|g| g.is_monomial()))
}

/// Monomial containment through one Gröbner basis computation: adjoin an
/// auxiliary variable `u` and the generator `1 - u·x_1⋯x_N`; the ideal
/// contains a monomial iff the extended ideal is the unit ideal.
pub fn contains_monomial_rabinowitsch(ideal: &Ideal) -> Result<bool> {
    let n = ideal.nvars();
    let mut gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.extend_vars(1)).collect();
    let u_times_all = Monomial::new(vec![1u32; n + 1]);
    let aux =
        Polynomial::from_terms(n + 1, [(Monomial::one(n + 1), Rational::one()), (u_times_all, -Rational::one())])?;
    gens.push(aux);
    let ord = grevlex();
    let spolys: Vec<SPoly> = gens.iter().map(|g| SPoly::from_poly(g, &ord)).collect();
    let gb = buchberger(spolys, &ord);
    Ok(gb.len() == 1 && gb[0].lm().is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::Ring;

    fn ideal(vars: &[&str], gens: &[&str]) -> Ideal {
        Ideal::parse(Ring::new(vars.iter().copied()), gens).unwrap()
    }

    #[test]
    fn contains_monomial_examples() {
        let xy = ["x", "y"];
        for (gens, expected) in [(&["x"][..], true), (&["x+y"][..], false), (&["x+y", "x-y"][..], true)] {
            let i = ideal(&xy, gens);
            assert_eq!(contains_monomial(&i).unwrap(), expected, "{gens:?}");
            assert_eq!(contains_monomial_rabinowitsch(&i).unwrap(), expected, "{gens:?}");
        }
    }

    #[test]
    fn hidden_monomial_is_found() {
        // (x^2 - x*y, x*y - y^2) = (x - y)·(x, y), whose saturation is (x - y).
        let i = ideal(&["x", "y"], &["x^2 - x*y", "x*y - y^2"]);
        assert!(!contains_monomial(&i).unwrap());
        // (x^2 + y^2, x*y): x^3 = x(x^2 + y^2) - y(x*y) is a monomial.
        let i = ideal(&["x", "y"], &["x^2 + y^2", "x*y"]);
        assert!(contains_monomial(&i).unwrap());
        let i = ideal(&["x", "y", "z"], &["x^2 - y*z", "y^2 - x*z"]);
        assert!(!contains_monomial(&i).unwrap());
        assert!(!contains_monomial_rabinowitsch(&i).unwrap());
    }

    #[test]
    fn saturation_by_variable() {
        let i = ideal(&["x", "y"], &["x^2 - x*y", "x*y - y^2"]);
        let s = saturate_by_variable(&i, 0).unwrap();
        let expected = ideal(&["x", "y"], &["x - y"]);
        assert!(crate::groebner::ideal_equal(&s, &expected).unwrap());
    }

    #[test]
    fn inhomogeneous_falls_back() {
        let i = ideal(&["x", "y"], &["x*y - 1"]);
        assert!(!contains_monomial(&i).unwrap());
        let i = ideal(&["x", "y"], &["x*y - 1", "x"]);
        assert!(contains_monomial(&i).unwrap());
    }
}
