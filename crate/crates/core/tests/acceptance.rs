//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use common::{corpus, monomial_oracle};
use tropcomp::grasstrop::{
    lineality_report, membership_equiv_report, pluecker_ideal, random_realizable_point, realizability_report,
    refinement_corpus_report, tree_from_point, trial_rng, SuiteReport,
};
use tropcomp::groebner::{contains_monomial, in_tropical_variety, initial_ideal_basis, reduced_gb, TermOrder};
use tropcomp::matroidlab::{
    all_octahedra, is_matroid, octahedron_class, octahedron_values, subdivide, values_of, Hypersimplex, LiftFunction,
    Matroid, OctahedronClass,
};
use tropcomp::polycore::{Ideal, Rational, Ring, WeightVector};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite_ok(r: &SuiteReport) -> Result<(), String> {
    ensure(r.ok(), || {
        let first = r.counterexamples.first().map(|c| c.detail.clone()).unwrap_or_default();
        format!("{} on Δ({}, {}): {} failures, first: {first}", r.suite, r.r, r.n, r.failed)
    })
}

/// Gr(2,4) trichotomy over every integer ω in [-2, 2]^6.
fn criterion_1() -> Outcome {
    let ideal = pluecker_ideal(2, 4).map_err(|e| e.to_string())?;
    let shape = Hypersimplex::new(2, 4).unwrap();
    let points: Vec<Vec<i64>> = (0..5usize.pow(6))
        .map(|mut k| {
            (0..6)
                .map(|_| {
                    let v = (k % 5) as i64 - 2;
                    k /= 5;
                    v
                })
                .collect()
        })
        .collect();
    let results: Vec<Result<Option<OctahedronClass>, String>> = points
        .par_iter()
        .map(|v| {
            let w = LiftFunction::from_ints(shape, v).map_err(|e| e.to_string())?;
            let class = octahedron_values(&w, &[1, 2, 3, 4], &[]).and_then(|x| octahedron_class(&x)).ok();
            let trop = in_tropical_variety(&ideal, &w.to_weight()).map_err(|e| e.to_string())?;
            ensure(trop == class.is_some(), || format!("ω = {v:?}: tropical {trop}, class {class:?}"))?;
            Ok(class)
        })
        .collect();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for r in results {
        let key = r?.map_or("NotTropical".to_string(), |c| c.to_string());
        *seen.entry(key).or_default() += 1;
    }
    ensure(seen.len() == 5, || format!("outcomes {seen:?}"))?;
    Ok(format!("{} points, outcomes {seen:?}", points.len()))
}

/// Two-pyramid subdivision of Δ(2,4).
fn criterion_2() -> Outcome {
    let shape = Hypersimplex::new(2, 4).unwrap();
    let w = LiftFunction::from_ints(shape, &[0, 0, 1, 1, 0, 0]).unwrap();
    let s = subdivide(&w).map_err(|e| e.to_string())?;
    let expected: BTreeSet<Vec<Vec<usize>>> = [
        vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 4], vec![3, 4]],
        vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![2, 4], vec![3, 4]],
    ]
    .into_iter()
    .collect();
    let got: BTreeSet<Vec<Vec<usize>>> =
        s.cells().iter().map(|c| c.iter().map(|b| b.members().to_vec()).collect()).collect();
    ensure(got == expected, || format!("cells {got:?}"))?;
    for c in s.cells() {
        ensure(is_matroid(c).unwrap_or(false), || format!("cell {c:?} is not a matroid"))?;
        Matroid::new(c.clone()).map_err(|e| e.to_string())?;
    }
    Ok("cells {12,13,14,24,34} and {12,13,23,24,34}".into())
}

/// Tree topologies of Gr(2,5) from seeded realizable points.
fn criterion_3() -> Outcome {
    const SAMPLES: usize = 10_000;
    let seed = 3;
    let bound = Rational::from_int(4);
    let points: Vec<Option<LiftFunction>> = (0..SAMPLES)
        .into_par_iter()
        .map(|k| {
            let w = random_realizable_point(2, 5, -2..=2, &mut trial_rng(seed, k)).ok()?;
            w.values().iter().all(|v| v.abs() <= bound).then_some(w)
        })
        .collect();
    let mut by_pattern: BTreeMap<Vec<OctahedronClass>, BTreeSet<BTreeSet<usize>>> = BTreeMap::new();
    let mut used = 0;
    for w in points.into_iter().flatten() {
        used += 1;
        let pattern: Vec<OctahedronClass> = all_octahedra(2, 5)
            .iter()
            .map(|o| values_of(&w, o).and_then(|v| octahedron_class(&v)))
            .collect::<Result<_, _>>()
            .map_err(|e| format!("realizable point fails four-point condition: {e}"))?;
        let tree = tree_from_point(&w).map_err(|e| e.to_string())?;
        let topology = tree.topology();
        if let Some(prev) = by_pattern.insert(pattern.clone(), topology.clone()) {
            ensure(prev == topology, || format!("pattern {pattern:?} maps to two topologies"))?;
        }
    }
    ensure(used >= SAMPLES / 2, || format!("only {used} of {SAMPLES} samples usable"))?;
    let trivalent = by_pattern.values().filter(|t| t.len() == 2).count();
    let one_edge = by_pattern.values().filter(|t| t.len() == 1).count();
    ensure(trivalent == 15 && one_edge == 10, || {
        format!("{trivalent} trivalent topologies, {one_edge} one-split classes from {used} samples")
    })?;
    Ok(format!("{used} samples: 15 trivalent topologies, 10 one-split classes"))
}

fn criterion_4() -> Outcome {
    for n in [4, 5, 6] {
        let r = membership_equiv_report(n, 500, 40 + n as u64).map_err(|e| e.to_string())?;
        suite_ok(&r)?;
    }
    Ok("n = 4, 5, 6 with 500 trials each: zero discrepancies".into())
}

fn criterion_5() -> Outcome {
    for (r, n) in [(2, 5), (2, 6), (3, 5), (3, 6)] {
        let rep = realizability_report(r, n, 200, 50).map_err(|e| e.to_string())?;
        suite_ok(&rep)?;
    }
    Ok("200 matrices for each of (2,5), (2,6), (3,5), (3,6)".into())
}

fn criterion_6() -> Outcome {
    let mut parts = Vec::new();
    for (r, n) in [(2, 5), (2, 6), (3, 6)] {
        let rep = refinement_corpus_report(r, n, 100, 60).map_err(|e| e.to_string())?;
        suite_ok(&rep)?;
        ensure(rep.stats.get("certified") == Some(&100), || format!("{:?}", rep.stats))?;
        parts.push(format!("({r},{n}) 100/100"));
    }
    Ok(format!("certificates: {}", parts.join(", ")))
}

fn criterion_7() -> Outcome {
    for (r, n) in [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)] {
        let rep = lineality_report(r, n, 100, 70).map_err(|e| e.to_string())?;
        suite_ok(&rep)?;
    }
    Ok("100 trials for each of (2,4), (2,5), (2,6), (3,5), (3,6)".into())
}

fn criterion_8() -> Outcome {
    let mut bases = 0;
    let mut check = |ideal: &Ideal, ord: TermOrder| -> Result<(), String> {
        let gb = reduced_gb(ideal, &ord).map_err(|e| e.to_string())?;
        ensure(gb.verify_s_pairs(), || format!("S-pair check fails for {:?}", ideal.ring()))?;
        bases += 1;
        Ok(())
    };
    for (r, n) in [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)] {
        let ideal = pluecker_ideal(r, n).map_err(|e| e.to_string())?;
        check(&ideal, TermOrder::grevlex())?;
        let mut rng = trial_rng(80, r * 10 + n);
        let w = tropcomp::grasstrop::random_lift(Hypersimplex::new(r, n).unwrap(), -3..=3, &mut rng);
        check(&ideal, TermOrder::weighted(w.to_weight()))?;
        let (_, in_gb) = initial_ideal_basis(&ideal, &w.to_weight()).map_err(|e| e.to_string())?;
        ensure(in_gb.verify_s_pairs(), || format!("initial basis of Gr({r},{n}) fails the S-pair check"))?;
    }
    for (vars, gens) in corpus() {
        let ideal = Ideal::parse(Ring::new(vars.clone()), &gens).map_err(|e| e.to_string())?;
        check(&ideal, TermOrder::grevlex())?;
        if ideal.is_homogeneous() {
            check(&ideal, TermOrder::weighted(WeightVector::from_ints(&vec![1; vars.len()])))?;
        }
        let got = contains_monomial(&ideal).map_err(|e| e.to_string())?;
        let expected = monomial_oracle(&ideal, 4, 2);
        ensure(got == expected, || format!("{gens:?}: contains_monomial {got}, oracle {expected}"))?;
    }
    Ok(format!("{bases} reduced bases pass the S-pair check; 20 containment oracles agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("1 Gr(2,4) trichotomy", Duration::from_secs(10), criterion_1),
        ("2 two-pyramid subdivision", Duration::from_secs(1), criterion_2),
        ("3 tree-space counts for Gr(2,5)", Duration::from_secs(120), criterion_3),
        ("4 membership equivalence", Duration::from_secs(600), criterion_4),
        ("5 realizability", Duration::from_secs(900), criterion_5),
        ("6 refinement corpus", Duration::from_secs(1800), criterion_6),
        ("7 lineality invariance", Duration::from_secs(300), criterion_7),
        ("8 Gröbner self-checks", Duration::from_secs(60), criterion_8),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{msg}; took {elapsed:.2?}, limit {limit:?}")),
            o => o,
        };
        match outcome {
            Ok(msg) => println!("criterion {name}: PASS ({elapsed:.2?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({elapsed:.2?}) {msg}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 8 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
