use rand::Rng;

use crate::error::{Error, Result};
use crate::matroidlab::{strictly_refines, subdivide, Hypersimplex, LiftFunction};
use crate::polycore::{LaurentPoly, Rational};

use super::realize::{pluecker_valuation, LaurentMatrix};

/// Attempts per sample before giving up on general position.
const MAX_ATTEMPTS: usize = 200;

fn nonzero_coeff<R: Rng>(rng: &mut R) -> Rational {
    let c = rng.gen_range(1..=9);
    Rational::from_int(if rng.gen_bool(0.5) { c } else { -c })
}

/// An `r × n` matrix with entries `c · u^e`, `c` a nonzero integer in
/// `[-9, 9]` and `e` uniform in `exps`.
pub fn random_laurent_matrix<R: Rng>(
    r: usize,
    n: usize,
    exps: std::ops::RangeInclusive<i64>,
    rng: &mut R,
) -> Result<LaurentMatrix> {
    let entries = (0..r)
        .map(|_| (0..n).map(|_| LaurentPoly::monomial(nonzero_coeff(rng), rng.gen_range(exps.clone()))).collect())
        .collect();
    LaurentMatrix::new(entries)
}

/// Plücker valuation of a random matrix in general position.
pub fn random_realizable_point<R: Rng>(
    r: usize,
    n: usize,
    exps: std::ops::RangeInclusive<i64>,
    rng: &mut R,
) -> Result<LiftFunction> {
    for _ in 0..MAX_ATTEMPTS {
        let l = random_laurent_matrix(r, n, exps.clone(), rng)?;
        match pluecker_valuation(&l) {
            Ok(w) => return Ok(w),
            Err(Error::NotGeneral { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Scale(format!("no matrix in general position after {MAX_ATTEMPTS} attempts")))
}

/// Integer lift function with entries uniform in `range`.
pub fn random_lift<R: Rng>(shape: Hypersimplex, range: std::ops::RangeInclusive<i64>, rng: &mut R) -> LiftFunction {
    let vals: Vec<i64> = (0..shape.num_vertices()).map(|_| rng.gen_range(range.clone())).collect();
    LiftFunction::from_ints(shape, &vals).expect("one value per vertex")
}

/// Random integer gauge `λ ∈ [-5, 5]^n`.
pub fn random_gauge<R: Rng>(n: usize, rng: &mut R) -> Vec<Rational> {
    (0..n).map(|_| Rational::from_int(rng.gen_range(-5..=5))).collect()
}

/// Scale separating the coarse and fine exponents of a refinement pair.
pub const REFINEMENT_SCALE: i64 = 10;

/// A pair of realizable points `(fine, coarse)`: the coarse matrix has
/// entries `c · u^e` and the fine one `c · u^{N e + f}` with small
/// perturbations `f`. Returns `None` unless the fine subdivision strictly
/// refines the coarse one.
pub fn random_refinement_pair<R: Rng>(r: usize, n: usize, rng: &mut R) -> Result<Option<(LiftFunction, LiftFunction)>> {
    let mut coarse_rows = Vec::with_capacity(r);
    let mut fine_rows = Vec::with_capacity(r);
    for _ in 0..r {
        let mut crow = Vec::with_capacity(n);
        let mut frow = Vec::with_capacity(n);
        for _ in 0..n {
            let c = nonzero_coeff(rng);
            let e = rng.gen_range(0..=2);
            let f = rng.gen_range(0..=2);
            crow.push(LaurentPoly::monomial(c.clone(), e));
            frow.push(LaurentPoly::monomial(c, REFINEMENT_SCALE * e + f));
        }
        coarse_rows.push(crow);
        fine_rows.push(frow);
    }
    let coarse = match pluecker_valuation(&LaurentMatrix::new(coarse_rows)?) {
        Ok(w) => w,
        Err(Error::NotGeneral { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let fine = match pluecker_valuation(&LaurentMatrix::new(fine_rows)?) {
        Ok(w) => w,
        Err(Error::NotGeneral { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    if strictly_refines(&subdivide(&fine)?, &subdivide(&coarse)?) {
        Ok(Some((fine, coarse)))
    } else {
        Ok(None)
    }
}
