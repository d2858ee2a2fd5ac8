use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycore::Rational;

use super::subset::{all_subsets, LiftFunction};

/// The octahedron `Δ(2,4)` inside `Δ(r, n)` spanned by the vertices
/// `{a, b} ∪ J` for pairs `{a, b}` of the 4-set `I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Octahedron {
    #[serde(rename = "I")]
    pub i: [usize; 4],
    #[serde(rename = "J")]
    pub j: Vec<usize>,
}

/// Pair order used for the six values: 12, 13, 14, 23, 24, 34 (positions
/// within the sorted `I`).
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

impl Octahedron {
    pub fn new(i: &[usize], j: &[usize], r: usize, n: usize) -> Result<Self> {
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
        let mut ii = [i[0], i[1], i[2], i[3]];
        ii.sort_unstable();
        let mut jj = j.to_vec();
        jj.sort_unstable();
        Ok(Octahedron { i: ii, j: jj })
    }

    /// The vertex `{i_a, i_b} ∪ J`.
    pub fn vertex(&self, a: usize, b: usize) -> Vec<usize> {
        let mut m = self.j.clone();
        m.push(self.i[a]);
        m.push(self.i[b]);
        m.sort_unstable();
        m
    }
}

impl fmt::Display for Octahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={:?} J={:?}", self.i, self.j)
    }
}

/// All `(I, J)` octahedra of `Δ(r, n)`, `I` outer and `J` inner in
/// lexicographic order.
pub fn all_octahedra(r: usize, n: usize) -> Vec<Octahedron> {
    let mut out = Vec::new();
    if r < 2 || n < r + 2 {
        return out;
    }
    for i in all_subsets(4, n) {
        let rest: Vec<usize> = (1..=n).filter(|x| !i.contains(*x)).collect();
        for j in all_subsets(r - 2, rest.len()) {
            let jj: Vec<usize> = j.members().iter().map(|&k| rest[k - 1]).collect();
            let m = i.members();
            out.push(Octahedron { i: [m[0], m[1], m[2], m[3]], j: jj });
        }
    }
    out
}

/// `ω({i_a, i_b} ∪ J)` for the six pairs, in [`PAIRS`] order.
pub fn octahedron_values(w: &LiftFunction, i: &[usize], j: &[usize]) -> Result<[Rational; 6]> {
    let oct = Octahedron::new(i, j, w.r(), w.n())?;
    values_of(w, &oct)
}

pub fn values_of(w: &LiftFunction, oct: &Octahedron) -> Result<[Rational; 6]> {
    let get = |k: usize| -> Result<Rational> {
        let (a, b) = PAIRS[k];
        Ok(w.value_at(&oct.vertex(a, b))?.clone())
    };
    Ok([get(0)?, get(1)?, get(2)?, get(3)?, get(4)?, get(5)?])
}

/// How the octahedron is subdivided. The split names the pair sum that is
/// strictly largest: `SplitA` for `ω12+ω34`, `SplitB` for `ω13+ω24`,
/// `SplitC` for `ω14+ω23`. That sum's two vertices are the apexes of the
/// two pyramids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OctahedronClass {
    SplitA,
    SplitB,
    SplitC,
    NoSplit,
}

impl fmt::Display for OctahedronClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OctahedronClass::SplitA => "SplitA",
            OctahedronClass::SplitB => "SplitB",
            OctahedronClass::SplitC => "SplitC",
            OctahedronClass::NoSplit => "NoSplit",
        };
        f.write_str(s)
    }
}

/// The three pair sums `(ω12+ω34, ω13+ω24, ω14+ω23)`.
pub fn pair_sums(v: &[Rational; 6]) -> [Rational; 3] {
    [&v[0] + &v[5], &v[1] + &v[4], &v[2] + &v[3]]
}

/// Classifies the octahedron; a minimum attained only once is a
/// [`Error::NotTropical`].
pub fn octahedron_class(v: &[Rational; 6]) -> Result<OctahedronClass> {
    let s = pair_sums(v);
    let min = s.iter().min().expect("three sums");
    let at_min = s.iter().filter(|x| *x == min).count();
    match at_min {
        3 => Ok(OctahedronClass::NoSplit),
        2 => {
            let k = s.iter().position(|x| x != min).expect("one sum above the minimum");
            Ok([OctahedronClass::SplitA, OctahedronClass::SplitB, OctahedronClass::SplitC][k])
        }
        _ => Err(Error::NotTropical(format!("pair sums {}, {}, {} attain their minimum once", s[0], s[1], s[2]))),
    }
}
