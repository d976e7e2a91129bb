//! Individual-based state transition algorithm.
//!
//! A single incumbent state is moved by three sampling operators
//! (expansion, rotation, axesion). Each operator draws `se` candidates
//! around the incumbent; the best one replaces it only if strictly better,
//! and every such improvement is followed by a translation round along the
//! improving direction. The rotation factor decays by `fc` each iteration
//! and restarts at `alpha_max` once it drops below `alpha_min`.

use serde::{Deserialize, Serialize};

use crate::benchmarks::Problem;
use crate::optim::{argmin, clip_to_bounds, greedy_accept, seeded_run, Algorithm, Candidate, Evaluator, Optimizer, RunRecord, POPULATION_SIZE};
use crate::rng::RandomStream;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StaParams {
    /// Rotation factor at the start of each period.
    pub alpha_max: f64,
    /// Period ends once the rotation factor falls below this.
    pub alpha_min: f64,
    /// Divisor applied to the rotation factor after every iteration.
    pub fc: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    /// Candidates sampled per operator application.
    pub se: usize,
}

impl Default for StaParams {
    fn default() -> Self {
        StaParams {
            alpha_max: 1.0,
            alpha_min: 1e-4,
            fc: 2.0,
            beta: 1.0,
            gamma: 1.0,
            delta: 1.0,
            se: POPULATION_SIZE,
        }
    }
}

impl StaParams {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParameter(format!("sta: {m}")));
        if !(self.alpha_min > 0.0 && self.alpha_max >= self.alpha_min) {
            return bad("need alpha_max >= alpha_min > 0");
        }
        if !(self.fc > 1.0) {
            return bad("fc must exceed 1");
        }
        if !(self.beta > 0.0 && self.gamma > 0.0 && self.delta > 0.0) {
            return bad("beta, gamma and delta must be positive");
        }
        if self.se == 0 {
            return bad("se must be at least 1");
        }
        Ok(())
    }

    /// The rotation factor used by each successive iteration.
    pub fn alpha_schedule(&self) -> impl Iterator<Item = f64> + '_ {
        let mut alpha = self.alpha_max;
        std::iter::repeat_with(move || {
            if alpha < self.alpha_min {
                alpha = self.alpha_max;
            }
            let current = alpha;
            alpha /= self.fc;
            current
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    Expansion,
    Rotation,
    Axesion,
}

impl Operator {
    /// Order applied within one iteration.
    pub const SCHEDULE: [Operator; 3] = [Operator::Expansion, Operator::Rotation, Operator::Axesion];
}

#[derive(Debug, Clone, PartialEq)]
pub struct StaState {
    pub best: Candidate,
    pub previous_best: Candidate,
    pub alpha: f64,
}

impl StaState {
    pub fn new(start: Candidate, alpha: f64) -> Self {
        StaState { previous_best: start.clone(), best: start, alpha }
    }

    fn advance(&mut self, next: Candidate) {
        self.previous_best = std::mem::replace(&mut self.best, next);
    }
}

/// `x + alpha / (n |x|) * R x` with `R` drawn row-major from `[-1, 1)`.
/// Returns `x` unchanged at the origin.
pub fn rotate(x: &[f64], alpha: f64, rng: &mut RandomStream) -> Vec<f64> {
    let norm = l2(x);
    if norm == 0.0 {
        return x.to_vec();
    }
    let scale = alpha / (x.len() as f64 * norm);
    let rx: Vec<f64> = (0..x.len())
        .map(|_| x.iter().map(|xj| rng.symmetric() * xj).sum())
        .collect();
    x.iter().zip(rx).map(|(xi, ri)| xi + scale * ri).collect()
}

/// `x_new + beta * r_t * (x_new - x_old) / |x_new - x_old|`, `r_t` uniform on
/// `[0, 1)`. Returns `x_new` if the two points coincide (no draw is made).
pub fn translate(x_new: &[f64], x_old: &[f64], beta: f64, rng: &mut RandomStream) -> Vec<f64> {
    if x_new == x_old {
        return x_new.to_vec();
    }
    let r = rng.uniform();
    translate_with(x_new, x_old, beta, r)
}

pub fn translate_with(x_new: &[f64], x_old: &[f64], beta: f64, r: f64) -> Vec<f64> {
    let diff: Vec<f64> = x_new.iter().zip(x_old).map(|(a, b)| a - b).collect();
    let norm = l2(&diff);
    if norm == 0.0 {
        return x_new.to_vec();
    }
    let step = beta * r / norm;
    x_new.iter().zip(diff).map(|(a, d)| a + step * d).collect()
}

/// `x_i (1 + gamma g_i)` with independent standard normal `g_i`.
pub fn expand(x: &[f64], gamma: f64, rng: &mut RandomStream) -> Vec<f64> {
    let g: Vec<f64> = (0..x.len()).map(|_| rng.normal()).collect();
    expand_with(x, gamma, &g)
}

pub fn expand_with(x: &[f64], gamma: f64, g: &[f64]) -> Vec<f64> {
    x.iter().zip(g).map(|(xi, gi)| xi + gamma * gi * xi).collect()
}

/// Expansion along one uniformly chosen axis. For `n == 1` no index is drawn,
/// so the draw sequence matches [`expand`].
pub fn axesion(x: &[f64], delta: f64, rng: &mut RandomStream) -> Vec<f64> {
    let j = if x.len() == 1 { 0 } else { rng.index(x.len()) };
    let g = rng.normal();
    let mut out = x.to_vec();
    out[j] = x[j] + delta * g * x[j];
    out
}

fn l2(v: &[f64]) -> f64 {
    v.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn sample(op: Operator, x: &[f64], alpha: f64, params: &StaParams, rng: &mut RandomStream) -> Vec<f64> {
    match op {
        Operator::Expansion => expand(x, params.gamma, rng),
        Operator::Rotation => rotate(x, alpha, rng),
        Operator::Axesion => axesion(x, params.delta, rng),
    }
}

/// Draws up to `se` candidates from `generate`, stopping early if the budget
/// runs out, and returns the best of them.
fn best_of_batch<F>(se: usize, problem: &Problem, eval: &mut Evaluator<'_>, mut generate: F) -> Option<Candidate>
where
    F: FnMut() -> Vec<f64>,
{
    let mut best: Option<Candidate> = None;
    for _ in 0..se {
        let x = clip_to_bounds(generate(), problem);
        let Some(c) = eval.evaluate(x) else { break };
        best = Some(match best {
            None => c,
            Some(b) => greedy_accept(b, c),
        });
    }
    best
}

/// One application of `op` to the incumbent, followed by a translation
/// round if it improved.
pub fn operator_round(
    state: &mut StaState,
    op: Operator,
    params: &StaParams,
    eval: &mut Evaluator<'_>,
    rng: &mut RandomStream,
) {
    let problem = eval.problem();
    let center = state.best.x.clone();
    let alpha = state.alpha;
    let Some(found) = best_of_batch(params.se, problem, eval, || sample(op, &center, alpha, params, rng)) else {
        return;
    };
    if found.value < state.best.value {
        state.advance(found);
        translation_round(state, params, eval, rng);
    }
}

fn translation_round(state: &mut StaState, params: &StaParams, eval: &mut Evaluator<'_>, rng: &mut RandomStream) {
    if state.best.x == state.previous_best.x {
        return;
    }
    let problem = eval.problem();
    let (new, old) = (state.best.x.clone(), state.previous_best.x.clone());
    if let Some(found) = best_of_batch(params.se, problem, eval, || translate(&new, &old, params.beta, rng)) {
        if found.value < state.best.value {
            state.advance(found);
        }
    }
}

/// Runs one full search: best of the shared initial population, then
/// iterations of expansion, rotation and axesion rounds until the budget is
/// spent.
pub fn sta_run(problem: &Problem, params: &StaParams, max_evals: u64, seed: u64) -> Result<RunRecord> {
    params.validate()?;
    seeded_run(Algorithm::Sta, problem, max_evals, seed, POPULATION_SIZE, |eval, initial, rng| {
        let start = initial[argmin(initial)].clone();
        let mut state = StaState::new(start, params.alpha_max);
        for alpha in params.alpha_schedule() {
            if eval.is_exhausted() {
                break;
            }
            state.alpha = alpha;
            for op in Operator::SCHEDULE {
                operator_round(&mut state, op, params, eval, rng);
            }
        }
    })
}

impl Optimizer for StaParams {
    fn algorithm(&self) -> Algorithm {
        Algorithm::Sta
    }

    fn run(&self, problem: &Problem, max_evals: u64, seed: u64) -> Result<RunRecord> {
        sta_run(problem, self, max_evals, seed)
    }
}
