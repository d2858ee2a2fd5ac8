use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroidlab::{Hypersimplex, LiftFunction};
use crate::polycore::{LaurentPoly, Rational};

/// An `r × n` matrix over Laurent polynomials in `t`, `r < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    r: usize,
    n: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn new(entries: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = entries.len();
        let n = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::Format("matrix rows have different lengths".into()));
        }
        Hypersimplex::new(r, n)?;
        Ok(LaurentMatrix { r, n, entries })
    }

    /// A matrix of constants.
    pub fn from_rationals(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::new(rows.into_iter().map(|row| row.into_iter().map(LaurentPoly::constant).collect()).collect())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    /// The maximal minor on the given 0-based columns, by cofactor expansion
    /// along the first row.
    pub fn minor(&self, cols: &[usize]) -> LaurentPoly {
        self.cofactor_det(0, cols)
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        if cols.len() == 1 {
            return self.entries[row][cols[0]].clone();
        }
        let mut acc = LaurentPoly::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = &self.entries[row][c];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect();
            let term = a * &self.cofactor_det(row + 1, &rest);
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
}

/// Matrix JSON `{r, n, entries: [[laurent]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LaurentMatrixJson {
    pub r: usize,
    pub n: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrixJson {
    pub fn from_matrix(m: &LaurentMatrix) -> Self {
        LaurentMatrixJson { r: m.r, n: m.n, entries: m.entries.clone() }
    }

    pub fn to_matrix(&self) -> Result<LaurentMatrix> {
        let m = LaurentMatrix::new(self.entries.clone())?;
        if m.r != self.r || m.n != self.n {
            return Err(Error::Format(format!("declared shape {}x{} but entries are {}x{}", self.r, self.n, m.r, m.n)));
        }
        Ok(m)
    }
}

/// `ω(I)` = valuation of the maximal minor of `L` on the columns `I`.
pub fn pluecker_valuation(l: &LaurentMatrix) -> Result<LiftFunction> {
    let shape = Hypersimplex::new(l.r, l.n)?;
    let mut values = Vec::with_capacity(shape.num_vertices());
    for s in shape.vertices() {
        let cols: Vec<usize> = s.members().iter().map(|m| m - 1).collect();
        let d = l.minor(&cols);
        match d.valuation() {
            Ok(v) => values.push(Rational::from_int(v)),
            Err(_) => return Err(Error::NotGeneral { subset: s.members().to_vec() }),
        }
    }
    LiftFunction::new(shape, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(Rational::from_int(c), e)
    }

    fn c(v: i64) -> LaurentPoly {
        t(v, 0)
    }

    // Leibniz formula over all permutations: independent of the cofactor code.
    fn leibniz(m: &LaurentMatrix, cols: &[usize]) -> LaurentPoly {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut acc = LaurentPoly::zero();
        for p in perms(cols.len()) {
            let inv =
                (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            let mut term = LaurentPoly::constant(Rational::one());
            for (row, &k) in p.iter().enumerate() {
                term = &term * m.entry(row, cols[k]);
            }
            acc = if inv % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn constant_generic_matrix_has_zero_valuation() {
        let m = LaurentMatrix::new(vec![vec![c(1), c(0), c(1), c(1)], vec![c(0), c(1), c(2), c(3)]]).unwrap();
        let w = pluecker_valuation(&m).unwrap();
        assert!(w.values().iter().all(Rational::is_zero));
    }

    #[test]
    fn hand_example() {
        let m = LaurentMatrix::new(vec![vec![c(1), c(0), c(1), c(1)], vec![c(0), c(1), c(1), t(1, 1)]]).unwrap();
        assert_eq!(m.minor(&[0, 3]), t(1, 1));
        assert_eq!(m.minor(&[2, 3]), &t(1, 1) - &c(1));
        let w = pluecker_valuation(&m).unwrap();
        assert_eq!(w.values(), LiftFunction::from_ints(w.shape(), &[0, 0, 1, 0, 0, 0]).unwrap().values());
    }

    #[test]
    fn repeated_column_is_not_general() {
        let m = LaurentMatrix::new(vec![vec![c(1), c(1), c(1)], vec![c(2), c(2), t(1, 1)]]).unwrap();
        assert_eq!(pluecker_valuation(&m), Err(Error::NotGeneral { subset: vec![1, 2] }));
    }

    #[test]
    fn cofactor_matches_leibniz() {
        let m = LaurentMatrix::new(vec![
            vec![t(2, -1), c(3), t(-1, 2), c(1), t(5, 1)],
            vec![c(1), &t(1, 1) + &c(2), c(0), t(-4, 0), t(1, -2)],
            vec![t(7, 3), c(-1), &t(1, 2) - &t(1, -1), c(2), c(1)],
        ])
        .unwrap();
        for s in crate::matroidlab::all_subsets(3, 5) {
            let cols: Vec<usize> = s.members().iter().map(|x| x - 1).collect();
            assert_eq!(m.minor(&cols), leibniz(&m, &cols));
        }
    }

    #[test]
    fn json_roundtrip() {
        let m = LaurentMatrix::new(vec![vec![c(1), c(0), t(2, -1)], vec![c(0), c(1), t(1, 1)]]).unwrap();
        let s = serde_json::to_string(&LaurentMatrixJson::from_matrix(&m)).unwrap();
        let back: LaurentMatrixJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_matrix().unwrap(), m);
        let bad = r#"{"r":2,"n":4,"entries":[[[{"exp":0,"coeff":1}]]]}"#;
        let j: LaurentMatrixJson = serde_json::from_str(bad).unwrap();
        assert!(j.to_matrix().is_err());
    }
}
