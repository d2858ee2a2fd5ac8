//! Two-phase primal simplex over exact rationals with Bland's rule.
//!
//! Variables are free. Every outcome carries a certificate that is checked
//! exactly before it is returned: a dual solution for optimal programs, a
//! Farkas combination for infeasible ones and an improving ray for
//! unbounded ones.

use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::polycore::{Rational, WeightVector};

use super::linalg::dot;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    #[default]
    Maximize,
    Minimize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint { coeffs, relation, rhs }
    }

    fn holds(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Optimize `objective · x` over free `x ∈ Q^nvars` subject to the
/// constraints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearProgram {
    pub nvars: usize,
    #[serde(default)]
    pub sense: Sense,
    pub objective: WeightVector,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(nvars: usize, sense: Sense, objective: WeightVector) -> Self {
        LinearProgram { nvars, sense, objective, constraints: Vec::new() }
    }

    /// Pure feasibility problem (zero objective).
    pub fn feasibility(nvars: usize) -> Self {
        Self::new(nvars, Sense::Maximize, WeightVector::zero(nvars))
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
    }

    pub fn validate(&self) -> Result<()> {
        check_len(self.nvars, self.objective.len())?;
        for c in &self.constraints {
            check_len(self.nvars, c.coeffs.len())?;
        }
        Ok(())
    }

    fn max_objective(&self) -> Vec<Rational> {
        match self.sense {
            Sense::Maximize => self.objective.entries().to_vec(),
            Sense::Minimize => self.objective.entries().iter().map(|c| -c).collect(),
        }
    }
}

/// Result of [`lp_solve`].
///
/// `dual` is a multiplier per constraint with `Σ dual_i a_i = objective` and
/// `Σ dual_i b_i = value`. For maximization `dual_i >= 0` on `<=` rows and
/// `dual_i <= 0` on `>=` rows; minimization flips both signs.
///
/// `farkas` satisfies `Σ y_i a_i = 0` and `Σ y_i b_i < 0` with `y_i >= 0` on
/// `<=` rows and `y_i <= 0` on `>=` rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational, dual: Vec<Rational> },
    Infeasible { farkas: Vec<Rational> },
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Some(point),
            LpOutcome::Infeasible { .. } => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip().expect("nonzero pivot");
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let f = self.rows[i][c].clone();
                for j in 0..=self.ncols {
                    if !self.rows[r][j].is_zero() {
                        let d = &f * &self.rows[r][j];
                        self.rows[i][j] -= &d;
                    }
                }
            }
        }
        self.basis[r] = c;
    }

    /// `c_B B^{-1} A_j - c_j` for column `j`.
    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut z = -&cost[j];
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                z += &(&cost[b] * &self.rows[i][j]);
            }
        }
        z
    }

    /// `c_B B^{-1}` read off the columns that started as the identity.
    fn multipliers(&self, cost: &[Rational], identity_start: usize) -> Vec<Rational> {
        (0..self.rows.len())
            .map(|k| self.basis.iter().enumerate().map(|(i, &b)| &cost[b] * &self.rows[i][identity_start + k]).sum())
            .collect()
    }

    /// Runs Bland's rule over columns `< allowed`. Returns the unbounded
    /// entering column, if any.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> Option<usize> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.reduced_cost(cost, j).is_negative()) else {
                return None;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Some(enter),
            }
        }
    }

    fn values(&self) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.ncols];
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs(i).clone();
        }
        x
    }
}

/// Solves the program exactly and verifies the returned certificate.
pub fn lp_solve(p: &LinearProgram) -> Result<LpOutcome> {
    p.validate()?;
    let n = p.nvars;
    let m = p.constraints.len();
    // Column layout: x+ (n), x- (n), one slack per inequality, m artificials.
    let mut slack_of = vec![None; m];
    let mut nslack = 0;
    for (i, c) in p.constraints.iter().enumerate() {
        if c.relation != Relation::Eq {
            slack_of[i] = Some(2 * n + nslack);
            nslack += 1;
        }
    }
    let art = 2 * n + nslack;
    let ncols = art + m;
    let mut flip = vec![false; m];
    let mut rows = Vec::with_capacity(m);
    for (i, c) in p.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols + 1];
        for j in 0..n {
            row[j] = c.coeffs[j].clone();
            row[n + j] = -&c.coeffs[j];
        }
        if let Some(s) = slack_of[i] {
            row[s] = if c.relation == Relation::Le { Rational::one() } else { -Rational::one() };
        }
        row[ncols] = c.rhs.clone();
        if c.rhs.is_negative() {
            flip[i] = true;
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[art + i] = Rational::one();
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (art..art + m).collect(), ncols };

    let mut cost1 = vec![Rational::zero(); ncols];
    for c in &mut cost1[art..] {
        *c = -Rational::one();
    }
    t.optimize(&cost1, art);
    let phase1: Rational = t.basis.iter().enumerate().filter(|(_, &b)| b >= art).map(|(i, _)| t.rhs(i).clone()).sum();
    let unflip = |u: Vec<Rational>| -> Vec<Rational> {
        u.into_iter().zip(&flip).map(|(v, &f)| if f { -v } else { v }).collect()
    };
    if phase1.is_positive() {
        let u = t.multipliers(&cost1, art);
        let out = LpOutcome::Infeasible { farkas: unflip(u) };
        verify(p, &out)?;
        return Ok(out);
    }
    // Drive zero-level artificials out of the basis where possible.
    for i in 0..m {
        if t.basis[i] >= art {
            if let Some(j) = (0..art).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, j);
            }
        }
    }

    let c = p.max_objective();
    let mut cost2 = vec![Rational::zero(); ncols];
    for j in 0..n {
        cost2[j] = c[j].clone();
        cost2[n + j] = -&c[j];
    }
    let to_x = |v: &[Rational]| -> Vec<Rational> { (0..n).map(|j| &v[j] - &v[n + j]).collect() };
    let out = match t.optimize(&cost2, art) {
        Some(enter) => {
            let mut d = vec![Rational::zero(); ncols];
            d[enter] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                d[b] = -&t.rows[i][enter];
            }
            LpOutcome::Unbounded { point: to_x(&t.values()), ray: to_x(&d) }
        }
        None => {
            let point = to_x(&t.values());
            let value = dot(p.objective.entries(), &point);
            let mut dual = unflip(t.multipliers(&cost2, art));
            if p.sense == Sense::Minimize {
                dual = dual.into_iter().map(|v| -v).collect();
            }
            LpOutcome::Optimal { point, value, dual }
        }
    };
    verify(p, &out)?;
    Ok(out)
}

/// Exact check of an outcome's certificate against the program.
pub fn verify(p: &LinearProgram, out: &LpOutcome) -> Result<()> {
    let n = p.nvars;
    let fail = |what: &str| Err(Error::Lp(format!("certificate check failed: {what}")));
    let combo = |y: &[Rational]| -> Vec<Rational> {
        (0..n).map(|j| p.constraints.iter().zip(y).map(|(c, yi)| yi * &c.coeffs[j]).sum()).collect()
    };
    let signs_ok = |y: &[Rational], flip: bool| {
        p.constraints.iter().zip(y).all(|(c, yi)| {
            let s = if flip { -yi.clone() } else { yi.clone() };
            match c.relation {
                Relation::Le => !s.is_negative(),
                Relation::Ge => !s.is_positive(),
                Relation::Eq => true,
            }
        })
    };
    match out {
        LpOutcome::Optimal { point, value, dual } => {
            if point.len() != n || dual.len() != p.constraints.len() {
                return fail("shape");
            }
            if !p.constraints.iter().all(|c| c.holds(point)) {
                return fail("primal infeasible point");
            }
            if dot(p.objective.entries(), point) != *value {
                return fail("objective value");
            }
            if !signs_ok(dual, p.sense == Sense::Minimize) {
                return fail("dual signs");
            }
            if combo(dual) != p.objective.entries() {
                return fail("dual feasibility");
            }
            let dual_value: Rational = p.constraints.iter().zip(dual).map(|(c, y)| y * &c.rhs).sum();
            if dual_value != *value {
                return fail("duality gap");
            }
        }
        LpOutcome::Infeasible { farkas } => {
            if farkas.len() != p.constraints.len() || !signs_ok(farkas, false) {
                return fail("Farkas signs");
            }
            if combo(farkas).iter().any(|v| !v.is_zero()) {
                return fail("Farkas combination");
            }
            let rhs: Rational = p.constraints.iter().zip(farkas).map(|(c, y)| y * &c.rhs).sum();
            if !rhs.is_negative() {
                return fail("Farkas right-hand side");
            }
        }
        LpOutcome::Unbounded { point, ray } => {
            if !p.constraints.iter().all(|c| c.holds(point)) {
                return fail("unbounded base point");
            }
            let c = p.max_objective();
            if !dot(&c, ray).is_positive() {
                return fail("ray does not improve");
            }
            for cons in &p.constraints {
                let a = dot(&cons.coeffs, ray);
                let ok = match cons.relation {
                    Relation::Le => !a.is_positive(),
                    Relation::Eq => a.is_zero(),
                    Relation::Ge => !a.is_negative(),
                };
                if !ok {
                    return fail("ray leaves the feasible region");
                }
            }
        }
    }
    Ok(())
}
