//! Buchberger's algorithm on polynomials stored as term vectors sorted by a
//! compiled term order.

use std::cmp::Ordering;

use crate::polycore::{Monomial, Polynomial, Rational};

use super::order::{cmp_mono, CompiledOrder, Mono};

pub(crate) type Term = (Mono, Rational);

/// Terms in strictly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SPoly {
    pub terms: Vec<Term>,
}

impl SPoly {
    pub fn from_poly(p: &Polynomial, ord: &CompiledOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| {
                let exps: Box<[u16]> = m.exps().iter().map(|&e| e as u16).collect();
                (Mono::new(exps, ord), c.clone())
            })
            .collect();
        terms.sort_by(|a, b| cmp_mono(&b.0, &a.0));
        SPoly { terms }
    }

    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| (Monomial::new(m.exps.iter().map(|&e| e as u32).collect()), c.clone())),
        )
        .expect("consistent variable count")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().recip().expect("nonzero leading coefficient");
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }
}

/// `f - c * m * g`, where the terms of `f` before `start` are untouched.
fn sub_mul(f: &[Term], start: usize, c: &Rational, m: &Mono, g: &SPoly) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.terms.len());
    out.extend_from_slice(&f[..start]);
    let mut i = start;
    let mut gi = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    while i < f.len() {
        let Some((gm, _)) = gi.peek() else { break };
        match cmp_mono(&f[i].0, gm) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -gc));
            }
            Ordering::Equal => {
                let (gm, gc) = gi.next().unwrap();
                let v = &f[i].1 - &gc;
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    for (gm, gc) in gi {
        out.push((gm, -gc));
    }
    out
}

fn find_reducer<'a>(m: &Mono, basis: &[&'a SPoly]) -> Option<&'a SPoly> {
    basis.iter().find(|g| g.lm().divides(m)).copied()
}

/// Fully reduces `f` modulo `basis` (leading and tail terms).
pub(crate) fn reduce_full(f: &SPoly, basis: &[&SPoly]) -> SPoly {
    let mut terms = f.terms.clone();
    let mut pos = 0;
    while pos < terms.len() {
        match find_reducer(&terms[pos].0, basis) {
            Some(g) => {
                let q = g.lm().quotient_of(&terms[pos].0);
                let c = &terms[pos].1 / g.lc();
                terms = sub_mul(&terms, pos, &c, &q, g);
            }
            None => pos += 1,
        }
    }
    SPoly { terms }
}

pub(crate) fn s_poly(f: &SPoly, g: &SPoly, ord: &CompiledOrder) -> SPoly {
    let l = f.lm().lcm(g.lm(), ord);
    let mf = f.lm().quotient_of(&l);
    let mg = g.lm().quotient_of(&l);
    let fpart: Vec<Term> = f.terms.iter().map(|(m, c)| (m.mul(&mf), c / f.lc())).collect();
    let cg = Rational::one() / g.lc().clone();
    let terms = sub_mul(&fpart, 0, &cg, &mg, g);
    SPoly { terms }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    sugar: u32,
}

fn pair_key(p: &Pair) -> (u32, u32) {
    (p.sugar, p.lcm.deg)
}

struct Basis {
    polys: Vec<SPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Basis {
    fn active_refs(&self) -> Vec<&SPoly> {
        self.polys.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect()
    }

    /// Gebauer–Möller update after appending `h`.
    fn insert(&mut self, h: SPoly, sugar: u32, ord: &CompiledOrder) {
        let hi = self.polys.len();
        let hlm = h.lm().clone();
        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for (gi, g) in self.polys.iter().enumerate() {
            if !self.active[gi] {
                continue;
            }
            let lcm = hlm.lcm(g.lm(), ord);
            let s = (sugar + (lcm.deg - hlm.deg)).max(self.sugar[gi] + (lcm.deg - g.lm().deg));
            let coprime = hlm.coprime(g.lm());
            cands.push((Pair { i: gi, j: hi, lcm, sugar: s }, coprime));
        }
        // Chain criterion among the new pairs.
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (p, coprime) = &cands[idx];
            if *coprime {
                kept.push(cands[idx].clone());
                continue;
            }
            let dominated = cands
                .iter()
                .enumerate()
                .any(|(k, (q, _))| k != idx && q.lcm.divides(&p.lcm) && (q.lcm != p.lcm || k < idx));
            if !dominated {
                kept.push(cands[idx].clone());
            }
        }
        // Product criterion: coprime pairs need no reduction. Also collapse
        // remaining pairs with equal lcm to one representative.
        let mut new_pairs: Vec<Pair> = Vec::new();
        for (p, coprime) in kept {
            if coprime {
                continue;
            }
            if new_pairs.iter().any(|q| q.lcm == p.lcm) {
                continue;
            }
            new_pairs.push(p);
        }
        // Chain criterion for old pairs.
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && hlm.lcm(self.polys[p.i].lm(), ord) != p.lcm
                && hlm.lcm(self.polys[p.j].lm(), ord) != p.lcm)
        });
        self.pairs.extend(new_pairs);
        for (gi, g) in self.polys.iter().enumerate() {
            if self.active[gi] && hlm.divides(g.lm()) {
                self.active[gi] = false;
            }
        }
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for (k, p) in self.pairs.iter().enumerate() {
            let (a, b) = (pair_key(p), pair_key(&self.pairs[best]));
            if a < b || (a == b && cmp_mono(&p.lcm, &self.pairs[best].lcm) == Ordering::Less) {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

fn sugar_of(p: &SPoly) -> u32 {
    p.terms.iter().map(|t| t.0.deg).max().unwrap_or(0)
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all nonzero),
/// sorted by decreasing leading monomial. Every element is monic.
pub(crate) fn buchberger(gens: Vec<SPoly>, ord: &CompiledOrder) -> Vec<SPoly> {
    let mut basis = Basis { polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut gens: Vec<SPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    gens.sort_by(|a, b| a.lm().deg.cmp(&b.lm().deg).then_with(|| cmp_mono(a.lm(), b.lm())));
    for g in gens {
        let s = sugar_of(&g);
        let mut h = reduce_full(&g, &basis.active_refs());
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return vec![h];
        }
        basis.insert(h, s, ord);
    }
    while let Some(p) = basis.pop_pair() {
        let s = s_poly(&basis.polys[p.i], &basis.polys[p.j], ord);
        let mut h = reduce_full(&s, &basis.active_refs());
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return vec![h];
        }
        basis.insert(h, p.sugar, ord);
    }
    let minimal: Vec<SPoly> = basis.polys.into_iter().zip(basis.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    interreduce(minimal)
}

/// Tail-reduces a minimal basis into the reduced basis.
pub(crate) fn interreduce(mut minimal: Vec<SPoly>) -> Vec<SPoly> {
    minimal.sort_by(|a, b| cmp_mono(b.lm(), a.lm()));
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SPoly> = minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
        let head = SPoly { terms: vec![minimal[k].terms[0].clone()] };
        let tail = SPoly { terms: minimal[k].terms[1..].to_vec() };
        let tail = reduce_full(&tail, &others);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        let mut p = SPoly { terms };
        p.make_monic();
        out.push(p);
    }
    out
}
