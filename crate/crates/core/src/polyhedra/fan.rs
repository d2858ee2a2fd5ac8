use serde::{Deserialize, Serialize};

use crate::error::{check_len, Error, Result};
use crate::groebner::{ConeH, ConeJson};
use crate::polycore::{Rational, WeightVector};

use super::linalg::{dot, inverse, normalize, rank};
use super::lp::{lp_solve, LinearProgram, LpOutcome, Relation, Sense};

/// Dimension of the cone: ambient dimension minus the rank of its implicit
/// equalities. An inequality `a·x <= 0` is implicit when `a·x < 0` is
/// infeasible on the cone.
pub fn cone_dim(c: &ConeH) -> Result<usize> {
    let mut eqs: Vec<Vec<Rational>> = c.equalities.iter().map(|e| e.entries().to_vec()).collect();
    for a in &c.inequalities {
        check_len(c.dim, a.len())?;
        let neg: Vec<Rational> = a.entries().iter().map(|v| -v).collect();
        let mut p = LinearProgram::new(c.dim, Sense::Maximize, WeightVector::new(neg.clone()));
        for e in &c.equalities {
            p.push(e.entries().to_vec(), Relation::Eq, Rational::zero());
        }
        for b in &c.inequalities {
            p.push(b.entries().to_vec(), Relation::Le, Rational::zero());
        }
        p.push(neg, Relation::Le, Rational::one());
        match lp_solve(&p)? {
            LpOutcome::Optimal { value, .. } if value.is_zero() => eqs.push(a.entries().to_vec()),
            LpOutcome::Optimal { .. } => {}
            other => return Err(Error::Lp(format!("bounded cone program returned {other:?}"))),
        }
    }
    Ok(c.dim - rank(&eqs))
}

/// Extreme rays of the pointed cone `{d : a·d <= 0 for a in rows}` by the
/// double description method. Rays are scaled so the first nonzero entry
/// has absolute value one.
pub fn extreme_rays(rows: &[Vec<Rational>], dim: usize) -> Result<Vec<Vec<Rational>>> {
    for r in rows {
        check_len(dim, r.len())?;
    }
    // Start from `dim` independent rows: a simplicial cone.
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<Vec<Rational>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut trial = basis_rows.clone();
        trial.push(r.clone());
        if rank(&trial) == trial.len() {
            basis_rows = trial;
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        }
    }
    if chosen.len() < dim {
        return Err(Error::Argument("cone is not pointed".into()));
    }
    let inv = inverse(&basis_rows).expect("independent rows");
    // Column k of -B^{-1} is tight on every chosen row except row k.
    let mut rays: Vec<(Vec<Rational>, Vec<usize>)> = (0..dim)
        .map(|k| {
            let mut v: Vec<Rational> = (0..dim).map(|i| -&inv[i][k]).collect();
            normalize(&mut v);
            let zeros = chosen.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &i)| i).collect();
            (v, zeros)
        })
        .collect();
    for (i, a) in rows.iter().enumerate() {
        if chosen.contains(&i) {
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|(v, _)| dot(a, v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        if pos.is_empty() {
            for (k, (_, z)) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    z.push(i);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        let mut next: Vec<(Vec<Rational>, Vec<usize>)> = Vec::new();
        for &p in &pos {
            for &m in &neg {
                let common: Vec<usize> = rays[p].1.iter().filter(|x| rays[m].1.contains(x)).copied().collect();
                // Combinatorial adjacency: no third ray is tight on all of `common`.
                if common.len() + 2 < dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&k| k != p && k != m)
                    .all(|k| !common.iter().all(|x| rays[k].1.contains(x)));
                if !adjacent {
                    continue;
                }
                let mut v: Vec<Rational> =
                    (0..dim).map(|j| &(&vals[p] * &rays[m].0[j]) - &(&vals[m] * &rays[p].0[j])).collect();
                normalize(&mut v);
                let mut z = common;
                z.push(i);
                next.push((v, z));
            }
        }
        for (k, (v, z)) in rays.iter().enumerate() {
            if vals[k].is_negative() {
                next.push((v.clone(), z.clone()));
            } else if vals[k].is_zero() {
                let mut z = z.clone();
                z.push(i);
                next.push((v.clone(), z));
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<Rational>> = rays.into_iter().map(|(v, _)| v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// A finite collection of cones in a common ambient space. Face
/// compatibility between cones is not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    cones: Vec<ConeH>,
}

impl Fan {
    pub fn new(dim: usize, cones: Vec<ConeH>) -> Result<Self> {
        for c in &cones {
            check_len(dim, c.dim)?;
        }
        Ok(Fan { dim, cones })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &[ConeH] {
        &self.cones
    }

    pub fn push(&mut self, c: ConeH) -> Result<()> {
        check_len(self.dim, c.dim)?;
        self.cones.push(c);
        Ok(())
    }
}

/// Fan JSON `{dim, cones: [cone]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanJson {
    pub dim: usize,
    pub cones: Vec<ConeJson>,
}

impl FanJson {
    pub fn from_fan(f: &Fan) -> Self {
        FanJson { dim: f.dim, cones: f.cones.iter().map(ConeJson::from_cone).collect() }
    }

    pub fn to_fan(&self) -> Result<Fan> {
        Fan::new(self.dim, self.cones.iter().map(|c| c.to_cone(self.dim)).collect::<Result<_>>()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub sample: WeightVector,
    pub contained: bool,
    pub witness_cone_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub contained: bool,
    pub samples: Vec<SampleReport>,
}

/// For each sample, the first cone of `fan` containing it.
pub fn support_contains(fan: &Fan, samples: &[WeightVector]) -> Result<SupportReport> {
    if samples.is_empty() {
        return Err(Error::Argument("support check needs at least one sample".into()));
    }
    let mut reports = Vec::with_capacity(samples.len());
    for s in samples {
        check_len(fan.dim, s.len())?;
        let mut witness = None;
        for (k, c) in fan.cones.iter().enumerate() {
            if c.contains(s)? {
                witness = Some(k);
                break;
            }
        }
        reports.push(SampleReport { sample: s.clone(), contained: witness.is_some(), witness_cone_index: witness });
    }
    Ok(SupportReport { contained: reports.iter().all(|r| r.contained), samples: reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> WeightVector {
        WeightVector::from_ints(v)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    // Gr(2,4) variable order 12,13,14,23,24,34; s1 = w12+w34, s2 = w13+w24, s3 = w14+w23.
    fn split_cone(k: usize) -> ConeH {
        let s = [w(&[1, 0, 0, 0, 0, 1]), w(&[0, 1, 0, 0, 1, 0]), w(&[0, 0, 1, 1, 0, 0])];
        let (a, b) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let eq = s[a].add(&s[b].scale(&Rational::from_int(-1)));
        let ineq = s[a].add(&s[k].scale(&Rational::from_int(-1)));
        ConeH::new(6, vec![eq], vec![ineq]).unwrap()
    }

    #[test]
    fn full_space_contains_everything() {
        let f = Fan::new(3, vec![ConeH::full(3)]).unwrap();
        let r = support_contains(&f, &[w(&[1, -2, 3]), w(&[0, 0, 0])]).unwrap();
        assert!(r.contained);
        assert!(r.samples.iter().all(|s| s.witness_cone_index == Some(0)));
    }

    #[test]
    fn split_cones() {
        let single = Fan::new(6, vec![split_cone(2)]).unwrap();
        let r = support_contains(&single, &[w(&[1, 0, 0, 0, 0, 1])]).unwrap();
        assert!(!r.contained);
        assert_eq!(r.samples[0].witness_cone_index, None);

        let all = Fan::new(6, vec![split_cone(0), split_cone(1), split_cone(2)]).unwrap();
        let reps = [w(&[1, 0, 0, 0, 0, 1]), w(&[0, 1, 0, 0, 1, 0]), w(&[0, 0, 1, 1, 0, 0]), w(&[0; 6])];
        let r = support_contains(&all, &reps).unwrap();
        assert!(r.contained);
        assert_eq!(r.samples[0].witness_cone_index, Some(0));
        assert_eq!(r.samples[2].witness_cone_index, Some(2));
    }

    #[test]
    fn empty_samples_and_dimension_errors() {
        let f = Fan::new(2, vec![ConeH::full(2)]).unwrap();
        assert!(support_contains(&f, &[]).is_err());
        assert!(matches!(support_contains(&f, &[w(&[1])]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn monotone_under_adding_cones() {
        let mut f = Fan::new(6, vec![split_cone(2)]).unwrap();
        let samples = [w(&[0, 0, 3, 1, 0, 0]), w(&[5, 0, 0, 0, 0, 0])];
        let before = support_contains(&f, &samples).unwrap();
        f.push(split_cone(0)).unwrap();
        let after = support_contains(&f, &samples).unwrap();
        for (a, b) in before.samples.iter().zip(&after.samples) {
            assert!(!a.contained || b.contained);
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(cone_dim(&ConeH::full(4)).unwrap(), 4);
        assert_eq!(cone_dim(&split_cone(2)).unwrap(), 5);
        // x <= 0 and -x <= 0 forces x = 0
        let c = ConeH::new(2, vec![], vec![w(&[1, 0]), w(&[-1, 0])]).unwrap();
        assert_eq!(cone_dim(&c).unwrap(), 1);
        let c = ConeH::new(3, vec![w(&[1, 1, 1])], vec![w(&[1, 0, 0]), w(&[0, 1, 0]), w(&[0, 0, 1])]).unwrap();
        assert_eq!(cone_dim(&c).unwrap(), 0);
    }

    #[test]
    fn rays_of_simple_cones() {
        // orthant -x <= 0: rays are unit vectors
        let rows = vec![qs(&[-1, 0]), qs(&[0, -1])];
        assert_eq!(extreme_rays(&rows, 2).unwrap(), vec![qs(&[0, 1]), qs(&[1, 0])]);
        // square pyramid: -z<=0 plus four sides |x|,|y| <= z
        let rows = vec![qs(&[1, 0, -1]), qs(&[-1, 0, -1]), qs(&[0, 1, -1]), qs(&[0, -1, -1])];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(rows.iter().filter(|a| dot(a, r).is_zero()).count(), 2);
            assert!(rows.iter().all(|a| !dot(a, r).is_positive()));
        }
        assert!(extreme_rays(&[qs(&[1, 0])], 2).is_err());
    }
}
