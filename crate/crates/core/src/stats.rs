//! Summary statistics and the two-sample Wilcoxon rank-sum test.
//!
//! The test uses the normal approximation with average ranks for ties, the
//! tie-corrected variance and a 0.5 continuity correction. The direction of
//! a significant difference is decided by the sample medians, then means.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use statrs::function::erf::erfc;

use crate::{Error, Result};

/// Significance level used for the comparison symbols.
pub const SIGNIFICANCE: f64 = 0.05;

/// Final objective values, one per run.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample(Vec<f64>);

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::SampleTooSmall { needed: 1, got: 0 });
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample);
        }
        Ok(Sample(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    pub fn median(&self) -> f64 {
        let mut v = self.0.clone();
        v.sort_by(f64::total_cmp);
        let m = v.len() / 2;
        if v.len() % 2 == 1 {
            v[m]
        } else {
            0.5 * (v[m - 1] + v[m])
        }
    }
}

/// Mean and sample standard deviation (divisor `len - 1`).
pub fn mean_std(sample: &Sample) -> Result<(f64, f64)> {
    if sample.len() < 2 {
        return Err(Error::SampleTooSmall { needed: 2, got: sample.len() });
    }
    let mean = sample.mean();
    let ss: f64 = sample.0.iter().map(|v| (v - mean).powi(2)).sum();
    Ok((mean, (ss / (sample.len() - 1) as f64).sqrt()))
}

/// How a competitor compares with the reference algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    /// Competitor significantly better.
    Plus,
    /// Competitor significantly worse.
    Minus,
    /// No significant difference.
    Approx,
}

impl Symbol {
    pub fn flipped(self) -> Symbol {
        match self {
            Symbol::Plus => Symbol::Minus,
            Symbol::Minus => Symbol::Plus,
            Symbol::Approx => Symbol::Approx,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symbol::Plus => "+",
            Symbol::Minus => "-",
            Symbol::Approx => "~",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestOutcome {
    pub p_value: f64,
    pub symbol: Symbol,
    /// Rank sum of the reference sample.
    pub rank_sum: f64,
    pub z: f64,
}

/// Average ranks (1-based) of `values`, ties sharing the mean of their
/// positions.
pub fn midranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + 1 + end) as f64 / 2.0;
        for &k in &order[start..end] {
            ranks[k] = rank;
        }
        start = end;
    }
    ranks
}

/// Rank-sum test of `competitor` against `reference` at [`SIGNIFICANCE`].
pub fn ranksum(reference: &Sample, competitor: &Sample) -> Result<TestOutcome> {
    ranksum_at(reference, competitor, SIGNIFICANCE)
}

pub fn ranksum_at(reference: &Sample, competitor: &Sample, alpha: f64) -> Result<TestOutcome> {
    for s in [reference, competitor] {
        if s.len() < 2 {
            return Err(Error::SampleTooSmall { needed: 2, got: s.len() });
        }
    }
    let (na, nb) = (reference.len() as f64, competitor.len() as f64);
    let pooled: Vec<f64> = reference.0.iter().chain(&competitor.0).copied().collect();
    let n = pooled.len() as f64;
    let ranks = midranks(&pooled);
    let w: f64 = ranks[..reference.len()].iter().sum();

    let tie_term: f64 = tie_groups(&pooled).map(|t| t * t * t - t).sum();
    let var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if var <= 0.0 {
        // every pooled value is identical
        return Ok(TestOutcome { p_value: 1.0, symbol: Symbol::Approx, rank_sum: w, z: 0.0 });
    }
    let dev = w - na * (n + 1.0) / 2.0;
    let z = dev.signum() * (dev.abs() - 0.5).max(0.0) / var.sqrt();
    let p_value = erfc(z.abs() / std::f64::consts::SQRT_2).min(1.0);

    let symbol = if p_value < alpha {
        match location_order(competitor, reference) {
            Ordering::Greater => Symbol::Minus,
            Ordering::Less => Symbol::Plus,
            Ordering::Equal => Symbol::Approx,
        }
    } else {
        Symbol::Approx
    };
    Ok(TestOutcome { p_value, symbol, rank_sum: w, z })
}

/// Medians first, means on a median tie.
fn location_order(a: &Sample, b: &Sample) -> Ordering {
    match a.median().total_cmp(&b.median()) {
        Ordering::Equal => a.mean().total_cmp(&b.mean()),
        o => o,
    }
}

fn tie_groups(values: &[f64]) -> impl Iterator<Item = f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mut groups = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i + 1;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        groups.push((j - i) as f64);
        i = j;
    }
    groups.into_iter()
}
