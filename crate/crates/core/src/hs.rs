//! Standard harmony search.
//!
//! Each new harmony is composed coordinate by coordinate: with probability
//! `hmcr` the value is copied from a randomly chosen memory member (and then
//! pitch-adjusted with probability `par`), otherwise it is drawn uniformly in
//! the box. The new harmony replaces the worst member if strictly better.

use serde::{Deserialize, Serialize};

use crate::benchmarks::Problem;
use crate::optim::{argmin, clip_to_bounds, seeded_run, Algorithm, Candidate, Optimizer, RunRecord, POPULATION_SIZE};
use crate::rng::RandomStream;
use crate::{Error, Result};

/// Pitch bandwidth, either absolute or as a fraction of each coordinate's
/// range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Bandwidth {
    Absolute(f64),
    RangeFraction(f64),
}

impl Bandwidth {
    pub fn per_coordinate(&self, problem: &Problem) -> Vec<f64> {
        match *self {
            Bandwidth::Absolute(b) => vec![b; problem.n],
            Bandwidth::RangeFraction(f) => {
                problem.lower.iter().zip(&problem.upper).map(|(lo, hi)| f * (hi - lo)).collect()
            }
        }
    }

    fn value(&self) -> f64 {
        match *self {
            Bandwidth::Absolute(b) | Bandwidth::RangeFraction(b) => b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct HsParams {
    /// Harmony memory size.
    pub hms: usize,
    /// Memory considering rate.
    pub hmcr: f64,
    /// Pitch adjusting rate.
    pub par: f64,
    pub bw: Bandwidth,
}

impl Default for HsParams {
    fn default() -> Self {
        HsParams { hms: POPULATION_SIZE, hmcr: 0.9, par: 0.3, bw: Bandwidth::RangeFraction(0.01) }
    }
}

impl HsParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(format!("hs: {m}")));
        if self.hms == 0 {
            return bad("hms must be at least 1");
        }
        if !(0.0..=1.0).contains(&self.hmcr) || !(0.0..=1.0).contains(&self.par) {
            return bad("hmcr and par must lie in [0, 1]");
        }
        if !(self.bw.value() > 0.0) {
            return bad("bandwidth must be positive");
        }
        Ok(())
    }
}

/// Fixed-size memory with a tracked worst member.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonyMemory {
    members: Vec<Candidate>,
    worst: usize,
}

impl HarmonyMemory {
    pub fn new(members: Vec<Candidate>) -> Self {
        assert!(!members.is_empty(), "harmony memory must be nonempty");
        let worst = worst_index(&members);
        HarmonyMemory { members, worst }
    }

    pub fn members(&self) -> &[Candidate] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn worst(&self) -> &Candidate {
        &self.members[self.worst]
    }

    pub fn best(&self) -> &Candidate {
        &self.members[argmin(&self.members)]
    }

    /// Replaces the worst member if `c` is strictly better.
    pub fn offer(&mut self, c: Candidate) -> bool {
        if c.value < self.members[self.worst].value {
            self.members[self.worst] = c;
            self.worst = worst_index(&self.members);
            true
        } else {
            false
        }
    }
}

fn worst_index(members: &[Candidate]) -> usize {
    let mut w = 0;
    for (i, c) in members.iter().enumerate().skip(1) {
        if c.value > members[w].value {
            w = i;
        }
    }
    w
}

/// `value + (2r - 1) bw` for a given `r` in `[0, 1]`.
pub fn pitch_step(value: f64, bw: f64, r: f64) -> f64 {
    value + (2.0 * r - 1.0) * bw
}

pub fn pitch_adjust(value: f64, bw: f64, rng: &mut RandomStream) -> f64 {
    pitch_step(value, bw, rng.uniform())
}

/// Composes one new harmony. `bw` holds the per-coordinate bandwidth.
pub fn improvise(memory: &HarmonyMemory, params: &HsParams, bw: &[f64], problem: &Problem, rng: &mut RandomStream) -> Vec<f64> {
    let x = (0..problem.n)
        .map(|j| {
            if rng.uniform() < params.hmcr {
                let donor = rng.index(memory.len());
                let v = memory.members[donor].x[j];
                if rng.uniform() < params.par {
                    pitch_adjust(v, bw[j], rng)
                } else {
                    v
                }
            } else {
                rng.between(problem.lower[j], problem.upper[j])
            }
        })
        .collect();
    clip_to_bounds(x, problem)
}

/// Memory from the shared initial population, then one improvisation per
/// evaluation until the budget is spent.
pub fn hs_run(problem: &Problem, params: &HsParams, max_evals: u64, seed: u64) -> Result<RunRecord> {
    params.validate()?;
    let bw = params.bw.per_coordinate(problem);
    seeded_run(Algorithm::Hs, problem, max_evals, seed, params.hms, |eval, initial, rng| {
        let mut memory = HarmonyMemory::new(initial.to_vec());
        while !eval.is_exhausted() {
            let x = improvise(&memory, params, &bw, problem, rng);
            let Some(c) = eval.evaluate(x) else { break };
            memory.offer(c);
        }
    })
}

impl Optimizer for HsParams {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Hs
    }

    fn run(&self, problem: &Problem, max_evals: u64, seed: u64) -> Result<RunRecord> {
        hs_run(problem, self, max_evals, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::ProblemId;
    use crate::optim::Evaluator;

    fn memory_of(problem: &Problem, points: &[Vec<f64>]) -> HarmonyMemory {
        let mut e = Evaluator::new(problem, 1_000);
        HarmonyMemory::new(points.iter().map(|x| e.evaluate(x.clone()).unwrap()).collect())
    }

    #[test]
    fn pitch_examples() {
        assert_eq!(pitch_step(0.0, 0.01, 0.5), 0.0);
        assert!((pitch_step(1.0, 0.01, 1.0) - 1.01).abs() < 1e-15);
        let mut r = RandomStream::new(0);
        for _ in 0..10_000 {
            assert!((pitch_adjust(3.0, 0.2, &mut r) - 3.0).abs() <= 0.2);
        }
    }

    #[test]
    fn forced_memory_copy() {
        let p = Problem::new(ProblemId::Sphere, 3).unwrap();
        let mem = memory_of(&p, &[vec![1.0, -2.0, 0.5]]);
        let params = HsParams { hms: 1, hmcr: 1.0, par: 0.0, ..Default::default() };
        let bw = params.bw.per_coordinate(&p);
        let mut r = RandomStream::new(9);
        for _ in 0..100 {
            assert_eq!(improvise(&mem, &params, &bw, &p, &mut r), vec![1.0, -2.0, 0.5]);
        }
    }

    #[test]
    fn forced_random_composition() {
        let p = Problem::new(ProblemId::Sphere, 2).unwrap();
        let mem = memory_of(&p, &[vec![1.0, 1.0]]);
        let params = HsParams { hms: 1, hmcr: 0.0, ..Default::default() };
        let bw = params.bw.per_coordinate(&p);
        let mut r = RandomStream::new(9);
        let pts: Vec<_> = (0..200).map(|_| improvise(&mem, &params, &bw, &p, &mut r)).collect();
        assert!(pts.iter().all(|x| p.contains(x) && x[0] != 1.0));
        let mean0 = pts.iter().map(|x| x[0]).sum::<f64>() / 200.0;
        assert!(mean0.abs() < 0.6);
    }

    #[test]
    fn forced_pitch_stays_within_bandwidth() {
        let p = Problem::new(ProblemId::Sphere, 2).unwrap();
        let mem = memory_of(&p, &[vec![1.0, -1.0]]);
        let params = HsParams { hms: 1, hmcr: 1.0, par: 1.0, bw: Bandwidth::Absolute(0.05) };
        let bw = params.bw.per_coordinate(&p);
        let mut r = RandomStream::new(1);
        for _ in 0..1000 {
            let x = improvise(&mem, &params, &bw, &p, &mut r);
            assert!((x[0] - 1.0).abs() <= 0.05 && (x[1] + 1.0).abs() <= 0.05);
        }
    }

    #[test]
    fn worst_replacement() {
        let p = Problem::new(ProblemId::Sphere, 1).unwrap();
        let mut mem = memory_of(&p, &[vec![1.0], vec![3.0], vec![2.0]]);
        assert_eq!(mem.worst().value, 9.0);
        let mut e = Evaluator::new(&p, 10);
        assert!(!mem.offer(e.evaluate(vec![3.0]).unwrap()));
        assert!(mem.offer(e.evaluate(vec![0.5]).unwrap()));
        assert_eq!(mem.len(), 3);
        assert_eq!(mem.worst().value, 4.0);
        assert_eq!(mem.best().value, 0.25);
    }

    #[test]
    fn range_bandwidth() {
        let p = Problem::new(ProblemId::Branin, 2).unwrap();
        let bw = Bandwidth::RangeFraction(0.01).per_coordinate(&p);
        assert_eq!(bw, vec![0.15, 0.15]);
    }

    #[test]
    fn run_spends_budget_exactly() {
        let p = Problem::benchmark(ProblemId::Beale);
        let rec = hs_run(&p, &HsParams::default(), 1234, 3).unwrap();
        assert_eq!(rec.evals_used, 1234);
        assert!(rec.trace.windows(2).all(|w| w[1].best <= w[0].best));
    }

    #[test]
    fn invalid_params() {
        assert!(HsParams { hmcr: 1.5, ..Default::default() }.validate().is_err());
        assert!(HsParams { bw: Bandwidth::Absolute(0.0), ..Default::default() }.validate().is_err());
        assert!(HsParams { hms: 0, ..Default::default() }.validate().is_err());
    }
}
