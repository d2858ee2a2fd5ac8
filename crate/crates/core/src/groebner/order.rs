use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::polycore::WeightVector;

/// Tie-breaking order applied after the weight comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TieBreak {
    #[default]
    GRevLex,
}

/// A monomial order: optional weight comparison followed by graded reverse
/// lexicographic tie-breaking.
///
/// With a weight `w`, monomials of **smaller** `w`-weight are larger in the
/// order, so the leading form of a homogeneous polynomial is its minimal
/// weight initial form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub weight: Option<WeightVector>,
    pub tie_break: TieBreak,
}

impl TermOrder {
    pub fn grevlex() -> Self {
        TermOrder { weight: None, tie_break: TieBreak::GRevLex }
    }

    pub fn weighted(w: WeightVector) -> Self {
        TermOrder { weight: Some(w), tie_break: TieBreak::GRevLex }
    }
}

/// A term order with integer weights, ready for fast comparisons.
#[derive(Clone, Debug)]
pub(crate) struct CompiledOrder {
    pub weight: Option<Vec<i64>>,
}

impl CompiledOrder {
    pub fn compile(ord: &TermOrder, nvars: usize) -> Result<Self> {
        let weight = match &ord.weight {
            None => None,
            Some(w) => {
                check_len(nvars, w.len())?;
                // Positive rescaling does not change the order.
                let mut lcm = BigInt::one();
                for e in w.entries() {
                    lcm = lcm.lcm(&e.denom());
                }
                let mut ints = Vec::with_capacity(nvars);
                for e in w.entries() {
                    let v = e.numer() * (&lcm / e.denom());
                    let v = v
                        .to_i64()
                        .filter(|v| v.unsigned_abs() < (1 << 40))
                        .ok_or_else(|| Error::Scale("weight vector entries too large".into()))?;
                    ints.push(v);
                }
                if ints.iter().all(|&v| v == 0) {
                    None
                } else {
                    Some(ints)
                }
            }
        };
        Ok(CompiledOrder { weight })
    }

    pub fn weight_of(&self, exps: &[u16]) -> i64 {
        match &self.weight {
            None => 0,
            Some(w) => exps.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum(),
        }
    }
}

/// A monomial with cached degree, weight and support mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Mono {
    pub exps: Box<[u16]>,
    pub deg: u32,
    pub wt: i64,
    pub mask: u64,
}

impl Mono {
    pub fn new(exps: Box<[u16]>, ord: &CompiledOrder) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        let wt = ord.weight_of(&exps);
        let mask = mask_of(&exps);
        Mono { exps, deg, wt, mask }
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let exps: Box<[u16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Mono { exps, deg: self.deg + other.deg, wt: self.wt + other.wt, mask: self.mask | other.mask }
    }

    #[inline]
    pub fn divides(&self, other: &Mono) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Mono) -> Mono {
        let exps: Box<[u16]> = other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect();
        let mask = mask_of(&exps);
        Mono { exps, deg: other.deg - self.deg, wt: other.wt - self.wt, mask }
    }

    pub fn lcm(&self, other: &Mono, ord: &CompiledOrder) -> Mono {
        let exps: Box<[u16]> = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        Mono::new(exps, ord)
    }

    pub fn coprime(&self, other: &Mono) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

fn mask_of(exps: &[u16]) -> u64 {
    let mut m = 0u64;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

/// `Greater` means `a` is larger in the term order.
#[inline]
pub(crate) fn cmp_mono(a: &Mono, b: &Mono) -> Ordering {
    b.wt.cmp(&a.wt).then_with(|| a.deg.cmp(&b.deg)).then_with(|| {
        for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}
