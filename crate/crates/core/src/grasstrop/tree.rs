use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroidlab::{all_octahedra, octahedron_class, values_of, Hypersimplex, LiftFunction};
use crate::polycore::Rational;

/// Every octahedron of `Δ(r, n)` has its minimum pair sum attained at least
/// twice (the three-term tropical Plücker relations).
pub fn dressian_ok(w: &LiftFunction) -> bool {
    all_octahedra(w.r(), w.n()).iter().all(|oct| values_of(w, oct).and_then(|v| octahedron_class(&v)).is_ok())
}

/// The four-point condition on `Δ(2, n)`.
pub fn four_point_ok(w: &LiftFunction) -> Result<bool> {
    if w.r() != 2 {
        return Err(Error::Argument(format!("four-point condition needs r = 2, got r = {}", w.r())));
    }
    Ok(dressian_ok(w))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TreeEdge {
    pub u: usize,
    pub v: usize,
    pub length: Rational,
}

/// An unrooted tree with leaves `1..=n` and internal vertices numbered from
/// `n + 1`. Internal edges have positive length; leaf edges may have any
/// rational length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhyloTree {
    leaves: usize,
    edges: Vec<TreeEdge>,
}

/// Tree JSON `{leaves, edges: [{u, v, length}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhyloTreeJson {
    pub leaves: usize,
    pub edges: Vec<TreeEdge>,
}

impl PhyloTree {
    pub fn new(leaves: usize, edges: Vec<TreeEdge>) -> Result<Self> {
        if leaves < 3 {
            return Err(Error::Format(format!("a tree needs at least 3 leaves, got {leaves}")));
        }
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &edges {
            if e.u == 0 || e.v == 0 || e.u == e.v {
                return Err(Error::Format(format!("bad edge {}-{}", e.u, e.v)));
            }
            *deg.entry(e.u).or_default() += 1;
            *deg.entry(e.v).or_default() += 1;
        }
        let nodes = deg.len();
        if edges.len() + 1 != nodes {
            return Err(Error::Format("edges do not form a tree".into()));
        }
        for leaf in 1..=leaves {
            if deg.get(&leaf) != Some(&1) {
                return Err(Error::Format(format!("leaf {leaf} must have degree 1")));
            }
        }
        for (&v, &d) in &deg {
            if v > leaves && d < 3 {
                return Err(Error::Format(format!("internal vertex {v} has degree {d}")));
            }
            if v <= leaves && d != 1 {
                return Err(Error::Format(format!("leaf {v} must have degree 1")));
            }
        }
        let t = PhyloTree { leaves, edges };
        for e in t.internal_edges() {
            if !e.length.is_positive() {
                return Err(Error::Format(format!("internal edge {}-{} has length {}", e.u, e.v, e.length)));
            }
        }
        if !t.connected() {
            return Err(Error::Format("edges do not form a tree".into()));
        }
        Ok(t)
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    fn is_leaf(&self, v: usize) -> bool {
        v <= self.leaves
    }

    pub fn internal_edges(&self) -> impl Iterator<Item = &TreeEdge> + '_ {
        self.edges.iter().filter(|e| !self.is_leaf(e.u) && !self.is_leaf(e.v))
    }

    fn adjacency(&self) -> BTreeMap<usize, Vec<(usize, &Rational)>> {
        let mut adj: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for e in &self.edges {
            adj.entry(e.u).or_default().push((e.v, &e.length));
            adj.entry(e.v).or_default().push((e.u, &e.length));
        }
        adj
    }

    fn connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([1usize]);
        let mut stack = vec![1usize];
        while let Some(x) = stack.pop() {
            for &(y, _) in adj.get(&x).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == adj.len()
    }

    /// Distances from `from` to every vertex.
    fn distances(&self, from: usize) -> BTreeMap<usize, Rational> {
        let adj = self.adjacency();
        let mut dist = BTreeMap::from([(from, Rational::zero())]);
        let mut stack = vec![from];
        while let Some(x) = stack.pop() {
            let dx = dist[&x].clone();
            for &(y, len) in &adj[&x] {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(y) {
                    e.insert(&dx + len);
                    stack.push(y);
                }
            }
        }
        dist
    }

    pub fn path_length(&self, i: usize, j: usize) -> Rational {
        self.distances(i).remove(&j).unwrap_or_default()
    }

    /// The point `ω̃({i, j}) = −d(i, j)` on `Δ(2, n)`.
    pub fn induced_point(&self) -> LiftFunction {
        let shape = Hypersimplex::new(2, self.leaves).expect("at least 3 leaves");
        let dists: Vec<BTreeMap<usize, Rational>> = (1..=self.leaves).map(|i| self.distances(i)).collect();
        let values = shape.vertices().iter().map(|s| -&dists[s.members()[0] - 1][&s.members()[1]]).collect();
        LiftFunction::new(shape, values).expect("one value per pair")
    }

    /// The leaf bipartition of every internal edge, as the side not
    /// containing leaf 1, with the edge length.
    pub fn splits(&self) -> BTreeMap<BTreeSet<usize>, Rational> {
        let mut out = BTreeMap::new();
        for e in self.internal_edges() {
            let side = self.side(e.v, e.u);
            let side = if side.contains(&1) { (1..=self.leaves).filter(|x| !side.contains(x)).collect() } else { side };
            out.insert(side, e.length.clone());
        }
        out
    }

    /// Leaves reachable from `start` without passing through `blocked`.
    fn side(&self, start: usize, blocked: usize) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start, blocked]);
        let mut stack = vec![start];
        let mut leaves = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if self.is_leaf(x) {
                leaves.insert(x);
            }
            for &(y, _) in &adj[&x] {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        leaves
    }

    /// The set of splits, ignoring lengths.
    pub fn topology(&self) -> BTreeSet<BTreeSet<usize>> {
        self.splits().into_keys().collect()
    }

    /// Every internal vertex has degree 3.
    pub fn is_trivalent(&self) -> bool {
        self.internal_edges().count() + 3 == self.leaves
    }
}

impl PhyloTreeJson {
    pub fn from_tree(t: &PhyloTree) -> Self {
        PhyloTreeJson { leaves: t.leaves, edges: t.edges.clone() }
    }

    pub fn to_tree(&self) -> Result<PhyloTree> {
        PhyloTree::new(self.leaves, self.edges.clone())
    }
}

/// Tree whose induced point agrees with `ω` up to adding `f(i) + f(j)`.
///
/// Cherry picking on `d(i, j) = C − ω({i, j})` with `C = 1 + max|ω|`: a pair
/// is joined when it sits on the small side of every quartet containing it.
/// Zero-length internal edges are contracted afterwards.
pub fn tree_from_point(w: &LiftFunction) -> Result<PhyloTree> {
    if !four_point_ok(w)? {
        return Err(Error::NotTropical("four-point condition fails".into()));
    }
    let n = w.n();
    let c = &Rational::one() + &w.max_abs();
    let mut d: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for (s, v) in w.iter() {
        d.insert((s.members()[0], s.members()[1]), &c - v);
    }
    let get = |d: &BTreeMap<(usize, usize), Rational>, a: usize, b: usize| -> Rational {
        if a == b {
            Rational::zero()
        } else {
            d[&(a.min(b), a.max(b))].clone()
        }
    };
    let mut active: Vec<usize> = (1..=n).collect();
    let mut next = n + 1;
    let mut edges: Vec<TreeEdge> = Vec::new();
    while active.len() > 3 {
        let mut pick = None;
        'search: for x in 0..active.len() {
            for y in x + 1..active.len() {
                let (i, j) = (active[x], active[y]);
                let others: Vec<usize> = active.iter().copied().filter(|&k| k != i && k != j).collect();
                let ok = others.iter().enumerate().all(|(a, &k)| {
                    others[a + 1..].iter().all(|&l| {
                        let s = &get(&d, i, j) + &get(&d, k, l);
                        s <= &get(&d, i, k) + &get(&d, j, l) && s <= &get(&d, i, l) + &get(&d, j, k)
                    })
                });
                if ok {
                    pick = Some((i, j));
                    break 'search;
                }
            }
        }
        let (i, j) = pick.ok_or_else(|| Error::Inconsistency("no cherry found".into()))?;
        let u = next;
        next += 1;
        let k0 = active.iter().copied().find(|&k| k != i && k != j).expect("more than three nodes");
        let dij = get(&d, i, j);
        let li = &(&(&dij + &get(&d, i, k0)) - &get(&d, j, k0)) / &Rational::from_int(2);
        let lj = &dij - &li;
        edges.push(TreeEdge { u: i, v: u, length: li });
        edges.push(TreeEdge { u: j, v: u, length: lj });
        for &k in &active {
            if k != i && k != j {
                let duk = &(&(&get(&d, i, k) + &get(&d, j, k)) - &dij) / &Rational::from_int(2);
                d.insert((k.min(u), k.max(u)), duk);
            }
        }
        active.retain(|&k| k != i && k != j);
        active.push(u);
    }
    let (a, b, cc) = (active[0], active[1], active[2]);
    let center = next;
    let two = Rational::from_int(2);
    let la = &(&(&get(&d, a, b) + &get(&d, a, cc)) - &get(&d, b, cc)) / &two;
    let lb = &get(&d, a, b) - &la;
    let lc = &get(&d, a, cc) - &la;
    edges.push(TreeEdge { u: a, v: center, length: la });
    edges.push(TreeEdge { u: b, v: center, length: lb });
    edges.push(TreeEdge { u: cc, v: center, length: lc });

    let edges = contract(n, edges)?;
    let tree = PhyloTree::new(n, edges)?;
    // The construction is exact; check it anyway.
    let induced = tree.induced_point();
    for (s, v) in w.iter() {
        if &(induced.value(&s) + &c) != v {
            return Err(Error::Inconsistency(format!("reconstructed tree misses pair {s}")));
        }
    }
    Ok(tree)
}

/// Contracts internal edges of length zero, renumbers internal vertices
/// from `n + 1` and orients every edge from its smaller endpoint.
fn contract(n: usize, edges: Vec<TreeEdge>) -> Result<Vec<TreeEdge>> {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    fn find(parent: &BTreeMap<usize, usize>, mut x: usize) -> usize {
        while let Some(&p) = parent.get(&x) {
            x = p;
        }
        x
    }
    let mut kept = Vec::new();
    for e in edges {
        let internal = e.u > n && e.v > n;
        if internal && e.length.is_negative() {
            return Err(Error::Inconsistency(format!("negative internal edge {}-{}", e.u, e.v)));
        }
        if internal && e.length.is_zero() {
            let (a, b) = (find(&parent, e.u), find(&parent, e.v));
            if a != b {
                parent.insert(a.max(b), a.min(b));
            }
        } else {
            kept.push(e);
        }
    }
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out: Vec<TreeEdge> = Vec::new();
    let mut fresh = n + 1;
    let mut label = |x: usize, relabel: &mut BTreeMap<usize, usize>| -> usize {
        if x <= n {
            return x;
        }
        let root = find(&parent, x);
        *relabel.entry(root).or_insert_with(|| {
            let v = fresh;
            fresh += 1;
            v
        })
    };
    // Label in leaf order so output does not depend on join order.
    kept.sort_by_key(|e| (e.u.min(e.v), e.u.max(e.v)));
    for e in kept {
        let (a, b) = (label(e.u, &mut relabel), label(e.v, &mut relabel));
        out.push(TreeEdge { u: a.min(b), v: a.max(b), length: e.length });
    }
    out.sort();
    Ok(out)
}
