use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::polycore::text::{format_polynomial, parse_polynomial};
use crate::polycore::{Monomial, Polynomial, Rational};

/// Variable names of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Ring { vars: vars.into_iter().map(Into::into).collect() }
    }

    /// Ring with variables `x1, ..., xn`.
    pub fn numbered(n: usize) -> Self {
        Ring::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        parse_polynomial(src, &self.vars)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        format_polynomial(p, &self.vars)
    }
}

/// An ideal given by a nonempty list of nonzero generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::UndefinedInput("ideal needs at least one generator".into()));
        }
        for g in &generators {
            check_len(ring.nvars(), g.nvars())?;
            if g.is_zero() {
                return Err(Error::UndefinedInput("zero generator".into()));
            }
        }
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal { ring, generators, homogeneous })
    }

    pub fn parse(ring: Ring, gens: &[&str]) -> Result<Self> {
        let generators = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, generators)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
}

/// `{coeff, exps}` entry of the polynomial JSON schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Rational,
    pub exps: Vec<u32>,
}

/// Polynomial JSON schema `{vars, terms: [{coeff, exps}]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn from_polynomial(p: &Polynomial, vars: Option<&[String]>) -> Self {
        PolynomialJson {
            vars: vars.map(<[String]>::to_vec),
            terms: p.terms().rev().map(|(m, c)| TermJson { coeff: c.clone(), exps: m.exps().to_vec() }).collect(),
        }
    }

    pub fn to_polynomial(&self, nvars: usize) -> Result<Polynomial> {
        if let Some(v) = &self.vars {
            check_len(nvars, v.len())?;
        }
        for t in &self.terms {
            if t.coeff.is_zero() {
                return Err(Error::Format("zero coefficient in polynomial JSON".into()));
            }
        }
        Polynomial::from_terms(nvars, self.terms.iter().map(|t| (Monomial::new(t.exps.clone()), t.coeff.clone())))
    }
}

/// A generator in ideal JSON: either the term schema or a text polynomial.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorJson {
    Terms(PolynomialJson),
    Text(String),
}

/// Ideal JSON schema `{ring: {vars}, generators: [poly]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: Ring,
    pub generators: Vec<GeneratorJson>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &Ideal) -> Self {
        IdealJson {
            ring: ideal.ring.clone(),
            generators: ideal
                .generators
                .iter()
                .map(|g| GeneratorJson::Terms(PolynomialJson::from_polynomial(g, None)))
                .collect(),
        }
    }

    /// Same as [`IdealJson::from_ideal`] but with generators in text form.
    pub fn from_ideal_text(ideal: &Ideal) -> Self {
        IdealJson {
            ring: ideal.ring.clone(),
            generators: ideal.generators.iter().map(|g| GeneratorJson::Text(ideal.ring.format(g))).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        let n = self.ring.nvars();
        let gens = self
            .generators
            .iter()
            .map(|g| match g {
                GeneratorJson::Terms(p) => p.to_polynomial(n),
                GeneratorJson::Text(s) => self.ring.parse(s),
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.clone(), gens)
    }
}
