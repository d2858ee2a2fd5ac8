use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::{Rational, WeightVector};

/// A sorted `r`-subset of `{1..n}`, the vertex `e_I` of `Δ(r, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSubset {
    members: Vec<usize>,
    n: usize,
}

impl BasisSubset {
    /// Validates and sorts the members.
    pub fn new(mut members: Vec<usize>, n: usize) -> Result<Self> {
        members.sort_unstable();
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Format(format!("repeated element in subset {members:?}")));
        }
        if members.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::Format(format!("subset {members:?} not contained in 1..={n}")));
        }
        Ok(BasisSubset { members, n })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn r(&self) -> usize {
        self.members.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Indicator vector `e_I` as 0/1 entries.
    pub fn indicator(&self) -> Vec<u8> {
        let mut v = vec![0; self.n];
        for &i in &self.members {
            v[i - 1] = 1;
        }
        v
    }

    /// Position of this subset in the lexicographic enumeration of all
    /// `r`-subsets of `{1..n}`.
    pub fn rank(&self) -> usize {
        let r = self.r();
        let mut idx = 0;
        let mut prev = 0;
        for (k, &m) in self.members.iter().enumerate() {
            for skipped in prev + 1..m {
                idx += binomial(self.n - skipped, r - k - 1);
            }
            prev = m;
        }
        idx
    }
}

impl fmt::Display for BasisSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n >= 10 { "," } else { "" };
        let s: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `r`-subsets of `{1..n}` in lexicographic order.
pub fn all_subsets(r: usize, n: usize) -> Vec<BasisSubset> {
    let mut out = Vec::with_capacity(binomial(n, r));
    let mut cur: Vec<usize> = (1..=r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(BasisSubset { members: cur.clone(), n });
        // advance
        let mut k = r;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < n - (r - 1 - k) {
                cur[k] += 1;
                for j in k + 1..r {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The hypersimplex `Δ(r, n)`, identified with its vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypersimplex {
    pub r: usize,
    pub n: usize,
}

impl Hypersimplex {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::Argument(format!("hypersimplex needs 0 < r < n, got r={r}, n={n}")));
        }
        Ok(Hypersimplex { r, n })
    }

    pub fn num_vertices(&self) -> usize {
        binomial(self.n, self.r)
    }

    pub fn vertices(&self) -> Vec<BasisSubset> {
        all_subsets(self.r, self.n)
    }

    pub fn subset(&self, members: Vec<usize>) -> Result<BasisSubset> {
        let s = BasisSubset::new(members, self.n)?;
        if s.r() != self.r {
            return Err(Error::Format(format!("subset {s} has size {} but r = {}", s.r(), self.r)));
        }
        Ok(s)
    }
}

/// A lifting function `ω` on the vertices of `Δ(r, n)`, stored in
/// lexicographic vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiftFunction {
    shape: Hypersimplex,
    values: Vec<Rational>,
}

impl LiftFunction {
    pub fn new(shape: Hypersimplex, values: Vec<Rational>) -> Result<Self> {
        if values.len() != shape.num_vertices() {
            return Err(Error::Format(format!(
                "lift function on Δ({}, {}) needs {} values, got {}",
                shape.r,
                shape.n,
                shape.num_vertices(),
                values.len()
            )));
        }
        Ok(LiftFunction { shape, values })
    }

    pub fn zero(shape: Hypersimplex) -> Self {
        LiftFunction { shape, values: vec![Rational::zero(); shape.num_vertices()] }
    }

    pub fn from_ints(shape: Hypersimplex, values: &[i64]) -> Result<Self> {
        Self::new(shape, values.iter().map(|&v| Rational::from_int(v)).collect())
    }

    /// Builds from `(subset, value)` pairs; unlisted vertices get 0.
    pub fn from_sparse(shape: Hypersimplex, entries: &[(Vec<usize>, Rational)]) -> Result<Self> {
        let mut f = Self::zero(shape);
        for (s, v) in entries {
            let s = shape.subset(s.clone())?;
            f.values[s.rank()] = v.clone();
        }
        Ok(f)
    }

    pub fn shape(&self) -> Hypersimplex {
        self.shape
    }

    pub fn r(&self) -> usize {
        self.shape.r
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, s: &BasisSubset) -> &Rational {
        &self.values[s.rank()]
    }

    /// Value at the subset given by its members (any order).
    pub fn value_at(&self, members: &[usize]) -> Result<&Rational> {
        let s = self.shape.subset(members.to_vec())?;
        Ok(&self.values[s.rank()])
    }

    pub fn iter(&self) -> impl Iterator<Item = (BasisSubset, &Rational)> + '_ {
        self.shape.vertices().into_iter().zip(self.values.iter())
    }

    /// The same values as a weight vector on the Plücker variables.
    pub fn to_weight(&self) -> WeightVector {
        WeightVector::new(self.values.clone())
    }

    pub fn from_weight(shape: Hypersimplex, w: &WeightVector) -> Result<Self> {
        Self::new(shape, w.entries().to_vec())
    }

    pub fn add(&self, other: &LiftFunction) -> Result<LiftFunction> {
        if self.shape != other.shape {
            return Err(Error::Argument("lift functions on different hypersimplices".into()));
        }
        Ok(LiftFunction {
            shape: self.shape,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    /// Adds `Σ_{i ∈ I} λ_i` to every vertex `I` (a lineality direction).
    pub fn add_gauge(&self, lambda: &[Rational]) -> Result<LiftFunction> {
        if lambda.len() != self.n() {
            return Err(Error::Dimension { expected: self.n(), found: lambda.len() });
        }
        let values = self
            .iter()
            .map(|(s, v)| {
                let mut v = v.clone();
                for &i in s.members() {
                    v += &lambda[i - 1];
                }
                v
            })
            .collect();
        Ok(LiftFunction { shape: self.shape, values })
    }

    pub fn max_abs(&self) -> Rational {
        self.values.iter().map(Rational::abs).max().unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct LiftEntryJson {
    subset: Vec<usize>,
    value: Rational,
}

/// Lift function JSON `{r, n, values: [{subset, value}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftFunctionJson {
    r: usize,
    n: usize,
    values: Vec<LiftEntryJson>,
}

impl LiftFunctionJson {
    pub fn from_lift(f: &LiftFunction) -> Self {
        LiftFunctionJson {
            r: f.r(),
            n: f.n(),
            values: f.iter().map(|(s, v)| LiftEntryJson { subset: s.members().to_vec(), value: v.clone() }).collect(),
        }
    }

    /// Every vertex must appear exactly once.
    pub fn to_lift(&self) -> Result<LiftFunction> {
        let shape = Hypersimplex::new(self.r, self.n)?;
        if self.values.len() != shape.num_vertices() {
            return Err(Error::Format(format!(
                "expected {} vertex values for Δ({}, {}), got {}",
                shape.num_vertices(),
                self.r,
                self.n,
                self.values.len()
            )));
        }
        let mut seen = vec![false; shape.num_vertices()];
        let mut values = vec![Rational::zero(); shape.num_vertices()];
        for e in &self.values {
            let s = shape.subset(e.subset.clone())?;
            let k = s.rank();
            if seen[k] {
                return Err(Error::Format(format!("vertex {s} listed twice")));
            }
            seen[k] = true;
            values[k] = e.value.clone();
        }
        LiftFunction::new(shape, values)
    }
}
