//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use tropcomp::matroidlab::{all_subsets, BasisSubset, LiftFunction};
use tropcomp::polycore::{Ideal, Monomial, Polynomial, Rational};
use tropcomp::polyhedra::linalg::{inverse, rank};

type Row = BTreeMap<Vec<u32>, Rational>;

fn to_row(p: &Polynomial) -> Row {
    p.terms().map(|(m, c)| (m.exps().to_vec(), c.clone())).collect()
}

/// Reduces `row` against the echelon basis keyed by leading exponent.
fn reduce(basis: &BTreeMap<Vec<u32>, Row>, mut row: Row) -> Row {
    loop {
        let Some((lead, c)) = row.iter().next_back().map(|(k, v)| (k.clone(), v.clone())) else { return row };
        let Some(b) = basis.get(&lead) else { return row };
        let f = &c / &b[&lead];
        for (k, v) in b {
            let e = row.entry(k.clone()).or_default();
            *e = &*e - &(&f * v);
            if e.is_zero() {
                row.remove(k);
            }
        }
    }
}

fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    let mut frontier = out.clone();
    for _ in 0..deg {
        let mut next = BTreeSet::new();
        for m in &frontier {
            for i in 0..nvars {
                next.insert(m.mul(&Monomial::var(nvars, i)).exps().to_vec());
            }
        }
        frontier = next.into_iter().map(Monomial::new).collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Does `(x_1 ⋯ x_N)^k` lie in the span of `{x^a g : deg(x^a g) ≤ bound}`
/// for some `k ≤ kmax`? Any monomial in `I` of degree `d` forces
/// `(x_1 ⋯ x_N)^d ∈ I`, so this finds every low-degree witness.
pub fn monomial_oracle(ideal: &Ideal, kmax: u32, slack: u32) -> bool {
    let n = ideal.nvars();
    let bound = n as u32 * kmax + slack;
    let mut basis: BTreeMap<Vec<u32>, Row> = BTreeMap::new();
    for g in ideal.generators() {
        let dg = g.total_degree().unwrap();
        if dg > bound {
            continue;
        }
        for m in monomials_up_to(n, bound - dg) {
            let row = reduce(&basis, to_row(&g.mul_monomial(&m)));
            if let Some(lead) = row.keys().next_back().cloned() {
                basis.insert(lead, row);
            }
        }
    }
    (1..=kmax).any(|k| {
        let m = Polynomial::term(Monomial::new(vec![k; n]), Rational::one());
        reduce(&basis, to_row(&m)).is_empty()
    })
}

pub fn corpus() -> Vec<(Vec<&'static str>, Vec<&'static str>)> {
    let xyz = vec!["x", "y", "z"];
    let xy = vec!["x", "y"];
    vec![
        (xyz.clone(), vec!["x*y - z^2"]),
        (xyz.clone(), vec!["x^2", "y - z"]),
        (xyz.clone(), vec!["x*y", "x - y"]),
        (xyz.clone(), vec!["x^2 - y*z", "y^2 - x*z"]),
        (xyz.clone(), vec!["x + y + z"]),
        (xyz.clone(), vec!["x*y - y*z", "x*z - y*z"]),
        (xyz.clone(), vec!["x^2 - y^2", "y^2 - z^2", "x*y"]),
        (xyz.clone(), vec!["x^3 - y^2*z", "x*y*z - z^3"]),
        (xyz.clone(), vec!["x^2*y^2 - z^4"]),
        (xyz.clone(), vec!["x + y", "y + z", "x + z"]),
        (xyz.clone(), vec!["x*y - 1"]),
        (xyz.clone(), vec!["x^2 - x", "y - 1"]),
        (xyz.clone(), vec!["x*y - z", "y - 1"]),
        (xyz.clone(), vec!["x*y - x", "x*y - y"]),
        (xyz.clone(), vec!["x^2 + y^2 + z^2 - 1"]),
        (xy.clone(), vec!["x^2 - y", "x*y - 1"]),
        (xy.clone(), vec!["x^2*y - x", "x*y^2 + y"]),
        (xy.clone(), vec!["x^4 - y^4", "x^3*y + x*y^3"]),
        (vec!["x"], vec!["x^2 - 1"]),
        (vec!["x"], vec!["x^3 - x^2"]),
    ]
}

/// All cells of the regular subdivision: every affinely independent
/// `n`-subset of vertices determines a unique affine functional; those
/// lying weakly below `ω` everywhere span a cell, namely their tight set.
pub fn brute_force_cells(w: &LiftFunction) -> BTreeSet<Vec<BasisSubset>> {
    let n = w.n();
    let verts = w.shape().vertices();
    let ind = |s: &BasisSubset| -> Vec<Rational> {
        s.indicator().into_iter().map(|v| Rational::from_int(v as i64)).collect()
    };
    let mut cells = BTreeSet::new();
    for pick in all_subsets(n, verts.len()) {
        let chosen: Vec<&BasisSubset> = pick.members().iter().map(|&k| &verts[k - 1]).collect();
        let rows: Vec<Vec<Rational>> = chosen.iter().map(|s| ind(s)).collect();
        if rank(&rows) < n {
            continue;
        }
        let inv = inverse(&rows).unwrap();
        let rhs: Vec<Rational> = chosen.iter().map(|s| w.value(s).clone()).collect();
        let a: Vec<Rational> = (0..n).map(|i| (0..n).map(|k| &inv[i][k] * &rhs[k]).sum()).collect();
        let slack = |s: &BasisSubset| -> Rational {
            let dot: Rational = ind(s).iter().zip(&a).map(|(x, y)| x * y).sum();
            w.value(s) - &dot
        };
        if verts.iter().all(|s| !slack(s).is_negative()) {
            cells.insert(verts.iter().filter(|s| slack(s).is_zero()).cloned().collect());
        }
    }
    cells
}
