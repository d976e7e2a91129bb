//! Standard artificial bee colony.
//!
//! A cycle has three phases. Employed bees try one neighbourhood move per
//! food source, onlookers pick sources by roulette over standardized fitness
//! and try one move each, and a scout replaces the single most stagnant
//! source once its trial counter reaches `limit`.

use serde::{Deserialize, Serialize};

use crate::benchmarks::Problem;
use crate::optim::{clip_to_bounds, seeded_run, Algorithm, Candidate, Evaluator, Optimizer, RunRecord, POPULATION_SIZE};
use crate::rng::RandomStream;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AbcParams {
    /// Number of food sources.
    pub sn: usize,
    /// Trials without improvement before a source is abandoned.
    pub limit: u32,
}

impl Default for AbcParams {
    fn default() -> Self {
        AbcParams { sn: POPULATION_SIZE, limit: 100 }
    }
}

impl AbcParams {
    pub fn validate(&self) -> Result<()> {
        if self.sn < 2 {
            return Err(Error::InvalidParameter("abc: sn must be at least 2".into()));
        }
        if self.limit == 0 {
            return Err(Error::InvalidParameter("abc: limit must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FoodSource {
    pub position: Candidate,
    pub trials: u32,
}

impl FoodSource {
    pub fn new(position: Candidate) -> Self {
        FoodSource { position, trials: 0 }
    }
}

/// Standardized fitness: `1 / (1 + v)` for `v >= 0`, else `1 + |v|`.
pub fn fitness_of(value: f64) -> f64 {
    if value >= 0.0 {
        1.0 / (1.0 + value)
    } else {
        1.0 + value.abs()
    }
}

pub fn selection_probabilities(sources: &[FoodSource]) -> Vec<f64> {
    let fits: Vec<f64> = sources.iter().map(|s| fitness_of(s.position.value)).collect();
    let total: f64 = fits.iter().sum();
    fits.into_iter().map(|f| f / total).collect()
}

/// Cumulative-probability wheel; `r` uniform on `[0, 1)`.
pub fn roulette(probabilities: &[f64], r: f64) -> usize {
    let mut acc = 0.0;
    for (i, p) in probabilities.iter().enumerate() {
        acc += p;
        if r < acc {
            return i;
        }
    }
    // rounding left the total just under 1
    probabilities.len() - 1
}

/// `x_i` with coordinate `j` replaced by `x_ij + phi (x_ij - x_kj)`.
pub fn neighbor_step(x_i: &[f64], x_k: &[f64], j: usize, phi: f64) -> Vec<f64> {
    let mut v = x_i.to_vec();
    v[j] = x_i[j] + phi * (x_i[j] - x_k[j]);
    v
}

/// Random neighbourhood move for source `i`: dimension `j`, partner `k != i`
/// and `phi` in `[-1, 1)` are drawn in that order. Result is clipped.
pub fn neighbor_move(sources: &[FoodSource], i: usize, problem: &Problem, rng: &mut RandomStream) -> Vec<f64> {
    assert!(sources.len() >= 2, "a neighbourhood move needs two sources");
    let j = rng.index(problem.n);
    let mut k = rng.index(sources.len() - 1);
    if k >= i {
        k += 1;
    }
    let phi = rng.symmetric();
    clip_to_bounds(neighbor_step(&sources[i].position.x, &sources[k].position.x, j, phi), problem)
}

#[derive(Debug)]
struct Colony {
    sources: Vec<FoodSource>,
}

impl Colony {
    /// Tries one move on source `i`. False once the budget is spent.
    fn exploit(&mut self, i: usize, eval: &mut Evaluator<'_>, rng: &mut RandomStream) -> bool {
        let v = neighbor_move(&self.sources, i, eval.problem(), rng);
        let Some(c) = eval.evaluate(v) else { return false };
        let src = &mut self.sources[i];
        if c.value < src.position.value {
            src.position = c;
            src.trials = 0;
        } else {
            src.trials += 1;
        }
        true
    }

    /// Replaces the most stagnant source if it reached `limit`. False once the
    /// budget is spent.
    fn scout(&mut self, limit: u32, eval: &mut Evaluator<'_>, rng: &mut RandomStream) -> bool {
        let mut worst = 0;
        for (i, s) in self.sources.iter().enumerate().skip(1) {
            if s.trials > self.sources[worst].trials {
                worst = i;
            }
        }
        if self.sources[worst].trials < limit {
            return true;
        }
        let problem = eval.problem();
        let x: Vec<f64> = problem.lower.iter().zip(&problem.upper).map(|(&lo, &hi)| rng.between(lo, hi)).collect();
        match eval.evaluate(x) {
            Some(c) => {
                self.sources[worst] = FoodSource::new(c);
                true
            }
            None => false,
        }
    }

    fn cycle(&mut self, params: &AbcParams, eval: &mut Evaluator<'_>, rng: &mut RandomStream) -> bool {
        for i in 0..self.sources.len() {
            if !self.exploit(i, eval, rng) {
                return false;
            }
        }
        let probs = selection_probabilities(&self.sources);
        for _ in 0..self.sources.len() {
            let i = roulette(&probs, rng.uniform());
            if !self.exploit(i, eval, rng) {
                return false;
            }
        }
        self.scout(params.limit, eval, rng)
    }
}

/// Food sources from the shared initial population, then employed, onlooker
/// and scout phases until the budget is spent. The record tracks the best
/// point ever evaluated, so scout replacement never loses it.
pub fn abc_run(problem: &Problem, params: &AbcParams, max_evals: u64, seed: u64) -> Result<RunRecord> {
    params.validate()?;
    seeded_run(Algorithm::Abc, problem, max_evals, seed, params.sn, |eval, initial, rng| {
        let mut colony = Colony { sources: initial.iter().cloned().map(FoodSource::new).collect() };
        while colony.cycle(params, eval, rng) {}
    })
}

impl Optimizer for AbcParams {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Abc
    }

    fn run(&self, problem: &Problem, max_evals: u64, seed: u64) -> Result<RunRecord> {
        abc_run(problem, self, max_evals, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::ProblemId;
    use approx::assert_abs_diff_eq;

    fn src(x: Vec<f64>, value: f64) -> FoodSource {
        FoodSource::new(Candidate { x, value })
    }

    #[test]
    fn fitness_examples() {
        assert_eq!(fitness_of(0.0), 1.0);
        assert_eq!(fitness_of(1.0), 0.5);
        assert_abs_diff_eq!(fitness_of(-3.86), 4.86, epsilon = 1e-12);
        assert!(fitness_of(1e300) > 0.0);
    }

    #[test]
    fn probability_examples() {
        let p = selection_probabilities(&[src(vec![0.0], 0.0), src(vec![1.0], 1.0)]);
        assert_abs_diff_eq!(p[0], 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p[1], 1.0 / 3.0, epsilon = 1e-15);
        let eq = selection_probabilities(&vec![src(vec![0.0], 2.5); 4]);
        assert!(eq.iter().all(|&q| (q - 0.25).abs() < 1e-15));
        assert_eq!(selection_probabilities(&[src(vec![0.0], 7.0)]), vec![1.0]);
    }

    #[test]
    fn roulette_edges() {
        let p = [0.2, 0.3, 0.5];
        assert_eq!(roulette(&p, 0.0), 0);
        assert_eq!(roulette(&p, 0.19), 0);
        assert_eq!(roulette(&p, 0.2), 1);
        assert_eq!(roulette(&p, 0.99), 2);
        assert_eq!(roulette(&[0.5, 0.4999999999], 0.99999999999), 1);
    }

    #[test]
    fn neighbor_examples() {
        let p = Problem::new(ProblemId::Sphere, 3).unwrap();
        let same = vec![src(vec![1.0, 2.0, 3.0], 14.0); 3];
        let mut r = RandomStream::new(0);
        for i in 0..3 {
            assert_eq!(neighbor_move(&same, i, &p, &mut r), vec![1.0, 2.0, 3.0]);
        }
        assert_eq!(neighbor_step(&[1.0, 2.0], &[0.0, 0.0], 1, 0.0), vec![1.0, 2.0]);
        assert_eq!(neighbor_step(&[1.0, 2.0], &[0.0, 1.0], 1, 0.5), vec![1.0, 2.5]);
        let mixed = vec![src(vec![1.0, 2.0, 3.0], 0.0), src(vec![-1.0, 0.5, 2.0], 0.0)];
        for _ in 0..200 {
            let v = neighbor_move(&mixed, 0, &p, &mut r);
            assert!(v.iter().zip(&mixed[0].position.x).filter(|(a, b)| a != b).count() <= 1);
        }
    }

    #[test]
    fn partner_never_self() {
        let p = Problem::new(ProblemId::Sphere, 1).unwrap();
        // only the partner differs, so any change proves k != i
        let sources = vec![src(vec![1.0], 1.0), src(vec![2.0], 4.0), src(vec![3.0], 9.0)];
        let mut r = RandomStream::new(4);
        for i in 0..3 {
            let mut seen = std::collections::BTreeSet::new();
            for _ in 0..300 {
                let j = rng_partner(&sources, i, &p, &mut r);
                assert_ne!(j, i);
                seen.insert(j);
            }
            assert_eq!(seen.len(), 2);
        }
    }

    fn rng_partner(sources: &[FoodSource], i: usize, p: &Problem, r: &mut RandomStream) -> usize {
        let mut probe = r.clone();
        let _ = neighbor_move(sources, i, p, r);
        probe.index(p.n);
        let k = probe.index(sources.len() - 1);
        if k >= i {
            k + 1
        } else {
            k
        }
    }

    #[test]
    fn scout_replaces_only_at_limit() {
        let p = Problem::new(ProblemId::Sphere, 2).unwrap();
        let mut e = Evaluator::new(&p, 100);
        let mut r = RandomStream::new(0);
        let mut colony = Colony { sources: vec![src(vec![1.0, 1.0], 2.0), src(vec![2.0, 2.0], 8.0)] };
        colony.sources[1].trials = 4;
        assert!(colony.scout(5, &mut e, &mut r));
        assert_eq!(e.budget().used(), 0);
        colony.sources[1].trials = 5;
        colony.sources[0].trials = 5;
        assert!(colony.scout(5, &mut e, &mut r));
        assert_eq!(e.budget().used(), 1);
        // first of the tied sources is replaced, the other keeps its counter
        assert_eq!(colony.sources[0].trials, 0);
        assert_eq!(colony.sources[1].trials, 5);
    }

    #[test]
    fn run_spends_budget_exactly() {
        let p = Problem::benchmark(ProblemId::Booth);
        for budget in [10, 15, 31, 999] {
            let rec = abc_run(&p, &AbcParams::default(), budget, 2).unwrap();
            assert_eq!(rec.evals_used, budget);
        }
    }

    #[test]
    fn invalid_params() {
        assert!(AbcParams { sn: 1, ..Default::default() }.validate().is_err());
        assert!(AbcParams { limit: 0, ..Default::default() }.validate().is_err());
    }
}
