use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::in_tropical_variety;
use crate::matroidlab::{
    all_octahedra, is_matroid_decomposition, octahedron_class, subdivide, values_of, Hypersimplex, LiftFunction,
    LiftFunctionJson,
};

use super::pluecker::pluecker_ideal;
use super::refine::check_refinement;
use super::sample::{random_gauge, random_lift, random_realizable_point, random_refinement_pair};
use super::tree::four_point_ok;

/// A trial that broke the property under test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub point: LiftFunctionJson,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub r: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub stats: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Independent generator for trial `k` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

enum Outcome {
    Pass(Vec<&'static str>),
    Fail(LiftFunction, String),
}

fn run(
    suite: &str,
    shape: Hypersimplex,
    trials: usize,
    seed: u64,
    f: impl Fn(usize) -> Result<Outcome> + Sync,
) -> Result<SuiteReport> {
    let outcomes: Vec<Result<Outcome>> = (0..trials).into_par_iter().map(&f).collect();
    let mut report = SuiteReport {
        suite: suite.to_string(),
        r: shape.r,
        n: shape.n,
        trials,
        seed,
        passed: 0,
        failed: 0,
        stats: BTreeMap::new(),
        counterexamples: Vec::new(),
    };
    for (trial, o) in outcomes.into_iter().enumerate() {
        match o? {
            Outcome::Pass(tags) => {
                report.passed += 1;
                for t in tags {
                    *report.stats.entry(t.to_string()).or_default() += 1;
                }
            }
            Outcome::Fail(w, detail) => {
                report.failed += 1;
                report.counterexamples.push(Counterexample { trial, point: LiftFunctionJson::from_lift(&w), detail });
            }
        }
    }
    Ok(report)
}

/// Compares ideal-theoretic membership in `TGr(2, n)` with the four-point
/// condition on random integer points in `[-5, 5]`.
pub fn membership_equiv_report(n: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    let shape = Hypersimplex::new(2, n)?;
    let ideal = pluecker_ideal(2, n)?;
    run("membership-equiv", shape, trials, seed, |k| {
        let w = random_lift(shape, -5..=5, &mut trial_rng(seed, k));
        let by_ideal = in_tropical_variety(&ideal, &w.to_weight())?;
        let by_quartets = four_point_ok(&w)?;
        Ok(if by_ideal == by_quartets {
            Outcome::Pass(vec![if by_ideal { "tropical" } else { "not_tropical" }])
        } else {
            Outcome::Fail(w, format!("ideal test says {by_ideal}, four-point condition says {by_quartets}"))
        })
    })
}

/// Plücker valuations of random Laurent matrices are tropical and induce
/// matroid subdivisions.
pub fn realizability_report(r: usize, n: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    let shape = Hypersimplex::new(r, n)?;
    let ideal = pluecker_ideal(r, n)?;
    run("realizability", shape, trials, seed, |k| {
        let w = random_realizable_point(r, n, -3..=3, &mut trial_rng(seed, k))?;
        if !in_tropical_variety(&ideal, &w.to_weight())? {
            return Ok(Outcome::Fail(w, "valuation is not in the tropical Grassmannian".into()));
        }
        let s = subdivide(&w)?;
        if !is_matroid_decomposition(&s) {
            return Ok(Outcome::Fail(w, "induced subdivision has a non-matroid cell".into()));
        }
        if r == 2 && !four_point_ok(&w)? {
            return Ok(Outcome::Fail(w, "valuation fails the four-point condition".into()));
        }
        Ok(Outcome::Pass(vec![if s.len() == 1 { "trivial_subdivision" } else { "proper_subdivision" }]))
    })
}

fn classes(w: &LiftFunction) -> Vec<Option<crate::matroidlab::OctahedronClass>> {
    all_octahedra(w.r(), w.n()).iter().map(|o| values_of(w, o).and_then(|v| octahedron_class(&v)).ok()).collect()
}

/// Adding `Σ λ_i x_i` changes neither tropical membership, nor the
/// subdivision, nor any octahedron class. Even trials use realizable
/// points, odd trials random points in `[-5, 5]`.
pub fn lineality_report(r: usize, n: usize, trials: usize, seed: u64) -> Result<SuiteReport> {
    let shape = Hypersimplex::new(r, n)?;
    let ideal = pluecker_ideal(r, n)?;
    run("lineality", shape, trials, seed, |k| {
        let mut rng = trial_rng(seed, k);
        let w = if k % 2 == 0 {
            random_realizable_point(r, n, -3..=3, &mut rng)?
        } else {
            random_lift(shape, -5..=5, &mut rng)
        };
        let shifted = w.add_gauge(&random_gauge(n, &mut rng))?;
        let t0 = in_tropical_variety(&ideal, &w.to_weight())?;
        let t1 = in_tropical_variety(&ideal, &shifted.to_weight())?;
        if t0 != t1 {
            return Ok(Outcome::Fail(w, format!("membership changed from {t0} to {t1}")));
        }
        if subdivide(&w)? != subdivide(&shifted)? {
            return Ok(Outcome::Fail(w, "subdivision changed".into()));
        }
        if classes(&w) != classes(&shifted) {
            return Ok(Outcome::Fail(w, "an octahedron class changed".into()));
        }
        Ok(Outcome::Pass(vec![if t0 { "tropical" } else { "not_tropical" }]))
    })
}

/// Runs the refinement checker on `pairs` strict refinement pairs of
/// realizable points. Candidates are drawn in batches so the accepted pairs
/// depend only on the seed.
pub fn refinement_corpus_report(r: usize, n: usize, pairs: usize, seed: u64) -> Result<SuiteReport> {
    let shape = Hypersimplex::new(r, n)?;
    let limit = pairs.saturating_mul(200).max(200);
    let batch = 64;
    let mut accepted: Vec<(LiftFunction, LiftFunction)> = Vec::with_capacity(pairs);
    let mut next = 0;
    while accepted.len() < pairs && next < limit {
        let found: Vec<Option<(LiftFunction, LiftFunction)>> = (next..next + batch)
            .into_par_iter()
            .map(|k| random_refinement_pair(r, n, &mut trial_rng(seed, k)))
            .collect::<Result<_>>()?;
        accepted.extend(found.into_iter().flatten().take(pairs - accepted.len()));
        next += batch;
    }
    if accepted.len() < pairs {
        return Err(Error::Scale(format!("only {} refinement pairs found in {next} candidates", accepted.len())));
    }
    let mut report = run("refinement-corpus", shape, pairs, seed, |k| {
        let (fine, coarse) = &accepted[k];
        match check_refinement(fine, coarse, r, n) {
            Ok(_) => Ok(Outcome::Pass(vec!["certified"])),
            Err(e @ (Error::NoCertificate(_) | Error::Inconsistency(_) | Error::Precondition(_))) => {
                Ok(Outcome::Fail(fine.clone(), e.to_string()))
            }
            Err(e) => Err(e),
        }
    })?;
    report.stats.insert("candidates".into(), next);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_are_deterministic() {
        let a = lineality_report(2, 4, 8, 11).unwrap();
        let b = lineality_report(2, 4, 8, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.ok());
    }

    #[test]
    fn small_runs_pass() {
        assert!(membership_equiv_report(4, 30, 1).unwrap().ok());
        assert!(realizability_report(2, 5, 10, 2).unwrap().ok());
        let r = refinement_corpus_report(2, 5, 3, 4).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.passed, 3);
    }
}
