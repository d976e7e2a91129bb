//! Descriptive statistics and the rank-sum comparison symbols.
//!
//!     cargo run --example rank_sum

use stabench::stats::{mean_std, ranksum, Sample};

fn main() -> stabench::Result<()> {
    let sta = Sample::new((0..20).map(|i| 1e-11 * (1.0 + i as f64 / 20.0)).collect())?;
    let abc = Sample::new((0..20).map(|i| 3e-11 * (1.0 + i as f64 / 7.0)).collect())?;
    let hs = Sample::new((0..20).map(|i| 0.14 + 0.01 * (i % 5) as f64).collect())?;

    for (name, s) in [("STA", &sta), ("ABC", &abc), ("HS", &hs)] {
        let (mean, std) = mean_std(s)?;
        println!("{name:<4} {mean:.3e} ± {std:.3e}");
    }
    for (name, s) in [("ABC", &abc), ("HS", &hs)] {
        let t = ranksum(&sta, s)?;
        println!("{name} vs STA: p = {:.3e}, symbol {}", t.p_value, t.symbol);
    }

    let tied = Sample::new(vec![0.0; 20])?;
    println!("0 ± 0 vs 0 ± 0: {}", ranksum(&tied, &tied)?.symbol);
    Ok(())
}
