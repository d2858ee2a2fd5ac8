use serde::{Deserialize, Serialize};

use crate::polycore::Rational;

/// A rational weight vector on the variables of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector {
    entries: Vec<Rational>,
}

impl WeightVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        WeightVector { entries }
    }

    pub fn zero(len: usize) -> Self {
        WeightVector { entries: vec![Rational::zero(); len] }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        WeightVector { entries: values.iter().map(|&v| Rational::from_int(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> WeightVector {
        WeightVector { entries: self.entries.iter().map(|e| e * s).collect() }
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        WeightVector { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn dot(&self, other: &WeightVector) -> Rational {
        self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).sum()
    }
}

impl From<Vec<Rational>> for WeightVector {
    fn from(entries: Vec<Rational>) -> Self {
        WeightVector { entries }
    }
}
