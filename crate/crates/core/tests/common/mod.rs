//! Test-only oracles, independent of the library code paths they check.
#![allow(dead_code)]

/// Exact two-sided rank-sum p-value by enumerating every assignment of the
/// pooled (mid)ranks to the first sample.
pub fn exact_ranksum_p(a: &[f64], b: &[f64]) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let n = pooled.len();
    // midranks by brute force: 1 + #smaller + (#equal - 1) / 2
    let ranks: Vec<f64> = pooled
        .iter()
        .map(|v| {
            let less = pooled.iter().filter(|w| *w < v).count() as f64;
            let eq = pooled.iter().filter(|w| *w == v).count() as f64;
            1.0 + less + (eq - 1.0) / 2.0
        })
        .collect();
    let na = a.len();
    let mean = na as f64 * (n as f64 + 1.0) / 2.0;
    let observed = (ranks[..na].iter().sum::<f64>() - mean).abs();
    let (mut hits, mut total) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != na {
            continue;
        }
        total += 1;
        let w: f64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| ranks[i]).sum();
        if (w - mean).abs() >= observed - 1e-9 {
            hits += 1;
        }
    }
    hits as f64 / total as f64
}

/// Sample standard deviation by the two-pass textbook formula.
pub fn sample_std(v: &[f64]) -> f64 {
    let m = v.iter().sum::<f64>() / v.len() as f64;
    (v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() - 1) as f64).sqrt()
}
