//! The 27 benchmark functions f1..f27 with their boxes, default dimensions
//! and constants.
//!
//! Formulas are implemented as they are conventionally printed for this
//! suite, including the Levy variant whose last term sits outside the sum,
//! the four-term Powell block with `(x2 - x3)^4`, and the Shekel `C` matrix.
//! The six-hump camel function (Hump) has a minimum of about -1.0316; the
//! comparison tables report it shifted by [`HUMP_SHIFT`] so that its minimum
//! is about 4.65e-8, which [`Problem::benchmark`] applies.

use std::f64::consts::{E, PI};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Offset added to the Hump objective in the benchmark configuration.
pub const HUMP_SHIFT: f64 = 1.0316285;

pub const HARTMANN_A: [f64; 4] = [1.0, 1.2, 3.0, 3.2];
pub const HARTMANN_ALPHA: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
pub const HARTMANN_P: [[f64; 3]; 4] = [
    [0.6890, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.0381, 0.5743, 0.8828],
];

pub const SHEKEL_BETA: [f64; 10] = [0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5];
/// Rows are coordinates, columns are the ten Shekel centres.
pub const SHEKEL_C: [[f64; 10]; 4] = [
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 5.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 5.0, 1.0, 2.0, 3.6],
    [4.0, 1.0, 8.0, 6.0, 3.0, 2.0, 3.0, 8.0, 6.0, 7.0],
    [4.0, 1.0, 8.0, 6.0, 7.0, 9.0, 3.0, 1.0, 2.0, 3.6],
];

pub const POWER_SUM_B: [f64; 4] = [8.0, 18.0, 44.0, 114.0];
pub const PERM_BETA: f64 = 0.5;
pub const MICHALEWICZ_M: i32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProblemId {
    Ackley,
    Beale,
    Bohachevsky,
    Booth,
    Branin,
    Colville,
    DixonPrice,
    Easom,
    GoldsteinPrice,
    Griewank,
    Hartmann3,
    Hump,
    Levy,
    Matyas,
    Michalewicz,
    Perm,
    Powell,
    PowerSum,
    Rastrigin,
    Rosenbrock,
    Schwefel,
    Shekel,
    Shubert,
    Sphere,
    SumSquares,
    Trid,
    Zakharov,
}

impl ProblemId {
    /// All 27 functions in f1..f27 order.
    pub const ALL: [ProblemId; 27] = [
        ProblemId::Ackley,
        ProblemId::Beale,
        ProblemId::Bohachevsky,
        ProblemId::Booth,
        ProblemId::Branin,
        ProblemId::Colville,
        ProblemId::DixonPrice,
        ProblemId::Easom,
        ProblemId::GoldsteinPrice,
        ProblemId::Griewank,
        ProblemId::Hartmann3,
        ProblemId::Hump,
        ProblemId::Levy,
        ProblemId::Matyas,
        ProblemId::Michalewicz,
        ProblemId::Perm,
        ProblemId::Powell,
        ProblemId::PowerSum,
        ProblemId::Rastrigin,
        ProblemId::Rosenbrock,
        ProblemId::Schwefel,
        ProblemId::Shekel,
        ProblemId::Shubert,
        ProblemId::Sphere,
        ProblemId::SumSquares,
        ProblemId::Trid,
        ProblemId::Zakharov,
    ];

    /// 1-based index in the f1..f27 numbering.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// Short label such as `f14`.
    pub fn label(self) -> String {
        format!("f{}", self.number())
    }

    pub fn name(self) -> &'static str {
        match self {
            ProblemId::Ackley => "Ackley",
            ProblemId::Beale => "Beale",
            ProblemId::Bohachevsky => "Bohachevsky",
            ProblemId::Booth => "Booth",
            ProblemId::Branin => "Branin",
            ProblemId::Colville => "Colville",
            ProblemId::DixonPrice => "DixonPrice",
            ProblemId::Easom => "Easom",
            ProblemId::GoldsteinPrice => "GoldsteinPrice",
            ProblemId::Griewank => "Griewank",
            ProblemId::Hartmann3 => "Hartmann3",
            ProblemId::Hump => "Hump",
            ProblemId::Levy => "Levy",
            ProblemId::Matyas => "Matyas",
            ProblemId::Michalewicz => "Michalewicz",
            ProblemId::Perm => "Perm",
            ProblemId::Powell => "Powell",
            ProblemId::PowerSum => "PowerSum",
            ProblemId::Rastrigin => "Rastrigin",
            ProblemId::Rosenbrock => "Rosenbrock",
            ProblemId::Schwefel => "Schwefel",
            ProblemId::Shekel => "Shekel",
            ProblemId::Shubert => "Shubert",
            ProblemId::Sphere => "Sphere",
            ProblemId::SumSquares => "SumSquares",
            ProblemId::Trid => "Trid",
            ProblemId::Zakharov => "Zakharov",
        }
    }

    /// Dimension used in the comparison table.
    pub fn default_dimension(self) -> usize {
        use ProblemId::*;
        match self {
            Hartmann3 => 3,
            Colville | Perm | PowerSum | Shekel => 4,
            Trid => 10,
            SumSquares => 20,
            Powell => 24,
            DixonPrice => 25,
            Levy | Sphere => 30,
            _ => 2,
        }
    }

    /// Checks that `n` is structurally valid for this function family.
    pub fn check_dimension(self, n: usize) -> Result<()> {
        use ProblemId::*;
        let fail = |reason| Err(Error::InvalidDimension { problem: self, n, reason });
        match self {
            Beale | Bohachevsky | Booth | Branin | Easom | GoldsteinPrice | Hump | Matyas
            | Michalewicz | Shubert => {
                if n != 2 {
                    return fail("two-dimensional function");
                }
            }
            Hartmann3 => {
                if n != 3 {
                    return fail("three-dimensional function");
                }
            }
            Colville | Perm | PowerSum | Shekel => {
                if n != 4 {
                    return fail("four-dimensional function");
                }
            }
            Powell => {
                if n == 0 || n % 4 != 0 {
                    return fail("dimension must be a positive multiple of 4");
                }
            }
            Rosenbrock => {
                if n < 2 {
                    return fail("needs at least two coordinates");
                }
            }
            _ => {
                if n == 0 {
                    return fail("dimension must be positive");
                }
            }
        }
        Ok(())
    }

    /// Per-coordinate box for dimension `n`.
    pub fn bounds(self, n: usize) -> (Vec<f64>, Vec<f64>) {
        use ProblemId::*;
        if self == Branin {
            return (vec![-5.0, 0.0], vec![10.0, 15.0]);
        }
        let (lo, hi) = match self {
            Ackley => (-15.0, 30.0),
            Beale => (-4.5, 4.5),
            Bohachevsky => (-100.0, 100.0),
            Booth | Colville | DixonPrice | Levy | Matyas | Shubert | SumSquares => (-10.0, 10.0),
            Easom => (-100.0, 100.0),
            GoldsteinPrice => (-2.0, 2.0),
            Griewank => (-600.0, 600.0),
            Hartmann3 => (0.0, 1.0),
            Hump => (-5.0, 5.0),
            Michalewicz => (0.0, PI),
            Perm => (-(n as f64), n as f64),
            Powell | PowerSum => (-4.0, 5.0),
            Rastrigin | Sphere => (-5.12, 5.12),
            Rosenbrock | Zakharov => (-5.0, 10.0),
            Schwefel => (-500.0, 500.0),
            Shekel => (0.0, 10.0),
            Trid => {
                let r = (n * n) as f64;
                (-r, r)
            }
            Branin => unreachable!(),
        };
        (vec![lo; n], vec![hi; n])
    }

    /// Known global minimum value at the default dimension, unshifted.
    pub fn optimum_value(self) -> f64 {
        use ProblemId::*;
        match self {
            Branin => 0.397_887_357_729_738,
            Easom => -1.0,
            GoldsteinPrice => 3.0,
            Hartmann3 => -3.862_777_512_537_6,
            Hump => -1.031_628_453_489_878,
            Michalewicz => -1.801_303_410_098_553,
            Schwefel => 2.545_513_245_877_4e-5,
            Shekel => -10.536_409_816_692,
            Shubert => -186.730_908_831_024,
            Trid => -210.0,
            _ => 0.0,
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    /// Accepts `f7`, `7`, or a case-insensitive name such as `dixonprice`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let digits = t.strip_prefix(['f', 'F']).unwrap_or(t);
        if let Ok(k) = digits.parse::<usize>() {
            if (1..=27).contains(&k) {
                return Ok(ProblemId::ALL[k - 1]);
            }
        }
        let key: String = t
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        ProblemId::ALL
            .into_iter()
            .find(|id| id.name().to_ascii_lowercase() == key)
            .or(match key.as_str() {
                "hartmann" => Some(ProblemId::Hartmann3),
                "michalewics" => Some(ProblemId::Michalewicz),
                "schweffel" => Some(ProblemId::Schwefel),
                "camel" | "sixhumpcamel" => Some(ProblemId::Hump),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownProblem(s.to_string()))
    }
}

/// A benchmark instance: function, dimension and box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Problem {
    pub id: ProblemId,
    pub n: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Best known objective value; reporting only.
    pub reference_value: Option<f64>,
    /// Constant added to every evaluation.
    pub offset: f64,
}

impl Problem {
    /// The function exactly as written, in dimension `n`.
    pub fn new(id: ProblemId, n: usize) -> Result<Self> {
        id.check_dimension(n)?;
        let (lower, upper) = id.bounds(n);
        let reference_value = match id {
            ProblemId::Trid => Some(-((n * (n + 4) * (n - 1)) as f64) / 6.0),
            ProblemId::Schwefel if n != 2 => None,
            _ => Some(id.optimum_value()),
        };
        Ok(Problem { id, n, lower, upper, reference_value, offset: 0.0 })
    }

    /// The instance used in the comparison table: default dimension, and
    /// Hump shifted by [`HUMP_SHIFT`].
    pub fn benchmark(id: ProblemId) -> Self {
        let p = Problem::new(id, id.default_dimension()).expect("default dimension is valid");
        if id == ProblemId::Hump {
            p.shifted(HUMP_SHIFT)
        } else {
            p
        }
    }

    /// Adds `offset` to the objective (and to the reference value).
    pub fn shifted(mut self, offset: f64) -> Self {
        self.offset += offset;
        self.reference_value = self.reference_value.map(|v| v + offset);
        self
    }

    pub fn bounds(&self) -> (&[f64], &[f64]) {
        (&self.lower, &self.upper)
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: x.len() });
        }
        Ok(self.objective(x))
    }

    /// Unchecked evaluation; `x.len()` must equal `n`.
    pub(crate) fn objective(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.n);
        raw_value(self.id, x) + self.offset
    }

    /// Projects `x` onto the box in place.
    pub fn clip(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.n
            && x.iter().zip(&self.lower).zip(&self.upper).all(|((v, lo), hi)| lo <= v && v <= hi)
    }
}

fn raw_value(id: ProblemId, x: &[f64]) -> f64 {
    use ProblemId::*;
    match id {
        Ackley => ackley(x),
        Beale => {
            let (a, b) = (x[0], x[1]);
            (1.5 - a + a * b).powi(2)
                + (2.25 - a + a * b * b).powi(2)
                + (2.625 - a + a * b.powi(3)).powi(2)
        }
        Bohachevsky => {
            let (a, b) = (x[0], x[1]);
            a * a + 2.0 * b * b - 0.3 * (3.0 * PI * a).cos() - 0.4 * (4.0 * PI * b).cos() + 0.7
        }
        Booth => (x[0] + 2.0 * x[1] - 7.0).powi(2) + (2.0 * x[0] + x[1] - 5.0).powi(2),
        Branin => {
            let (a, b) = (x[0], x[1]);
            (b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0).powi(2)
                + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos()
                + 10.0
        }
        Colville => {
            let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
            100.0 * (a * a - b).powi(2)
                + (a - 1.0).powi(2)
                + (c - 1.0).powi(2)
                + 90.0 * (c * c - d).powi(2)
                + 10.1 * ((b - 1.0).powi(2) + (d - 1.0).powi(2))
                + 19.8 * (b - 1.0) * (d - 1.0)
        }
        DixonPrice => {
            let tail: f64 = x
                .windows(2)
                .enumerate()
                .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
                .sum();
            (x[0] - 1.0).powi(2) + tail
        }
        Easom => {
            let (a, b) = (x[0], x[1]);
            -a.cos() * b.cos() * (-(a - PI).powi(2) - (b - PI).powi(2)).exp()
        }
        GoldsteinPrice => {
            let (a, b) = (x[0], x[1]);
            let first = 1.0
                + (a + b + 1.0).powi(2)
                    * (19.0 - 14.0 * a + 13.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
            let second = 30.0
                + (2.0 * a - 3.0 * b).powi(2)
                    * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
            first * second
        }
        Griewank => {
            let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
            let prod: f64 = x
                .iter()
                .enumerate()
                .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).abs().cos())
                .product();
            sum - prod + 1.0
        }
        Hartmann3 => -(0..4)
            .map(|i| {
                let inner: f64 = (0..3)
                    .map(|j| HARTMANN_ALPHA[i][j] * (x[j] - HARTMANN_P[i][j]).powi(2))
                    .sum();
                HARTMANN_A[i] * (-inner).exp()
            })
            .sum::<f64>(),
        Hump => {
            let (a, b) = (x[0], x[1]);
            4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
        }
        Levy => levy(x),
        Matyas => 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1],
        Michalewicz => -x
            .iter()
            .enumerate()
            .map(|(i, v)| v.sin() * ((i + 1) as f64 * v * v / PI).sin().powi(2 * MICHALEWICZ_M))
            .sum::<f64>(),
        Perm => {
            let n = x.len();
            (1..=n as i32)
                .map(|k| {
                    x.iter()
                        .enumerate()
                        .map(|(i, v)| {
                            let idx = (i + 1) as f64;
                            (idx.powi(k) + PERM_BETA) * ((v / idx).powi(k) - 1.0)
                        })
                        .sum::<f64>()
                        .powi(2)
                })
                .sum()
        }
        Powell => x
            .chunks_exact(4)
            .map(|q| {
                (q[0] + 10.0 * q[1]).powi(2)
                    + 5.0 * (q[2] - q[3]).powi(2)
                    + (q[1] - q[2]).powi(4)
                    + 10.0 * (q[0] - q[3]).powi(4)
            })
            .sum(),
        PowerSum => (1..=x.len() as i32)
            .map(|k| (x.iter().map(|v| v.powi(k)).sum::<f64>() - POWER_SUM_B[k as usize - 1]).powi(2))
            .sum(),
        Rastrigin => x.iter().map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0).sum(),
        Rosenbrock => x
            .windows(2)
            .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
            .sum(),
        Schwefel => {
            418.9829 * x.len() as f64 - x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>()
        }
        Shekel => -(0..10)
            .map(|j| {
                let d: f64 = (0..4).map(|i| (x[i] - SHEKEL_C[i][j]).powi(2)).sum();
                1.0 / (d + SHEKEL_BETA[j])
            })
            .sum::<f64>(),
        Shubert => {
            let s = |v: f64| -> f64 {
                (1..=5).map(|i| i as f64 * ((i + 1) as f64 * v + i as f64).cos()).sum()
            };
            s(x[0]) * s(x[1])
        }
        Sphere => x.iter().map(|v| v * v).sum(),
        SumSquares => x.iter().enumerate().map(|(i, v)| (i + 1) as f64 * v * v).sum(),
        Trid => {
            x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>()
                - x.windows(2).map(|w| w[1] * w[0]).sum::<f64>()
        }
        Zakharov => {
            let s: f64 = x.iter().enumerate().map(|(i, v)| 0.5 * (i + 1) as f64 * v).sum();
            x.iter().map(|v| v * v).sum::<f64>() + s.powi(2) + s.powi(4)
        }
    }
}

fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

fn levy(x: &[f64]) -> f64 {
    let y = |v: f64| 1.0 + (v - 1.0) / 4.0;
    let last = y(x[x.len() - 1]);
    let head = (PI * y(x[0])).sin().powi(2);
    let body: f64 = x[..x.len() - 1]
        .iter()
        .map(|&v| {
            let yi = y(v);
            (yi - 1.0).powi(2) * (1.0 + 10.0 * (PI * yi + 1.0).sin().powi(2))
        })
        .sum();
    head + body + (last - 1.0).powi(2) * (1.0 + 10.0 * (PI * last).sin().powi(2))
}

/// Points where each function attains its known minimum at the default
/// dimension (unshifted). Used by the `check` command.
pub fn known_minimizers() -> Vec<(ProblemId, Vec<f64>)> {
    use ProblemId::*;
    let mut out = Vec::new();
    for id in ProblemId::ALL {
        let n = id.default_dimension();
        let x = match id {
            Ackley | Bohachevsky | Griewank | Matyas | Powell | Rastrigin | Sphere
            | SumSquares | Zakharov => vec![0.0; n],
            Beale => vec![3.0, 0.5],
            Booth => vec![1.0, 3.0],
            Branin => vec![PI, 2.275],
            Colville | Levy | Rosenbrock => vec![1.0; n],
            Easom => vec![PI, PI],
            GoldsteinPrice => vec![0.0, -1.0],
            Perm => (1..=n).map(|i| i as f64).collect(),
            PowerSum => vec![1.0, 2.0, 2.0, 3.0],
            Trid => (1..=n).map(|i| (i * (n + 1 - i)) as f64).collect(),
            // dimension-specific and irrational minimizers are located numerically
            DixonPrice => (1..=n)
                .map(|i| 2f64.powf(-(2f64.powi(i as i32) - 2.0) / 2f64.powi(i as i32)))
                .collect(),
            Hartmann3 | Hump | Michalewicz | Schwefel | Shekel | Shubert => continue,
        };
        out.push((id, x));
    }
    out
}

/// Catalog as comma-separated text: one line per problem with its
/// dimension, box and reference value. Non-uniform boxes list every
/// coordinate separated by `;`.
pub fn catalog_manifest(problems: &[Problem]) -> String {
    let join = |v: &[f64]| -> String {
        if v.windows(2).all(|w| w[0] == w[1]) {
            format!("{}", v[0])
        } else {
            v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(";")
        }
    };
    let mut s = String::from("function,name,n,lower,upper,reference_value\n");
    for p in problems {
        let reference = p.reference_value.map(|v| format!("{v:e}")).unwrap_or_default();
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.id.label(),
            p.id.name(),
            p.n,
            join(&p.lower),
            join(&p.upper),
            reference
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn eval(id: ProblemId, x: &[f64]) -> f64 {
        Problem::new(id, x.len()).unwrap().evaluate(x).unwrap()
    }

    #[test]
    fn twenty_seven_functions_in_order() {
        assert_eq!(ProblemId::ALL.len(), 27);
        for (i, id) in ProblemId::ALL.iter().enumerate() {
            assert_eq!(id.number(), i + 1);
            assert_eq!(id.label().parse::<ProblemId>().unwrap(), *id);
            assert_eq!(id.name().parse::<ProblemId>().unwrap(), *id);
            let p = Problem::benchmark(*id);
            assert!(p.lower.iter().zip(&p.upper).all(|(l, u)| l < u));
        }
    }

    #[test]
    fn default_dimensions() {
        assert_eq!(ProblemId::DixonPrice.default_dimension(), 25);
        assert_eq!(ProblemId::Hartmann3.default_dimension(), 3);
        assert_eq!(ProblemId::Levy.default_dimension(), 30);
        assert_eq!(ProblemId::Powell.default_dimension(), 24);
        assert_eq!(ProblemId::SumSquares.default_dimension(), 20);
        assert_eq!(ProblemId::Trid.default_dimension(), 10);
        let twos = ProblemId::ALL.iter().filter(|p| p.default_dimension() == 2).count();
        assert_eq!(twos, 16);
    }

    #[test]
    fn spot_values() {
        assert_eq!(eval(ProblemId::Sphere, &[0.0; 30]), 0.0);
        assert_abs_diff_eq!(eval(ProblemId::Easom, &[PI, PI]), -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(eval(ProblemId::GoldsteinPrice, &[0.0, -1.0]), 3.0, epsilon = 1e-12);
        assert_eq!(eval(ProblemId::Booth, &[1.0, 3.0]), 0.0);
        assert_eq!(eval(ProblemId::Beale, &[3.0, 0.5]), 0.0);
    }

    #[test]
    fn bounds_rules() {
        let b = Problem::new(ProblemId::Branin, 2).unwrap();
        assert_eq!(b.bounds(), (&[-5.0, 0.0][..], &[10.0, 15.0][..]));
        let t = Problem::new(ProblemId::Trid, 10).unwrap();
        assert!(t.lower.iter().all(|&v| v == -100.0) && t.upper.iter().all(|&v| v == 100.0));
        let s = Problem::new(ProblemId::Sphere, 3).unwrap();
        assert_eq!(s.lower, vec![-5.12; 3]);
        let p = Problem::new(ProblemId::Perm, 4).unwrap();
        assert_eq!((p.lower[0], p.upper[0]), (-4.0, 4.0));
    }

    #[test]
    fn reference_values() {
        assert_eq!(Problem::benchmark(ProblemId::Trid).reference_value, Some(-210.0));
        let m = Problem::benchmark(ProblemId::Michalewicz).reference_value.unwrap();
        assert_abs_diff_eq!(m, -1.8013, epsilon = 1e-4);
        let h = Problem::benchmark(ProblemId::Hump).reference_value.unwrap();
        assert_abs_diff_eq!(h, 4.65e-8, epsilon = 1e-9);
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(
            Problem::new(ProblemId::Powell, 6),
            Err(Error::InvalidDimension { .. })
        ));
        assert!(Problem::new(ProblemId::Matyas, 3).is_err());
        assert!(Problem::new(ProblemId::Hartmann3, 2).is_err());
        assert!(Problem::new(ProblemId::PowerSum, 5).is_err());
        assert!(Problem::new(ProblemId::Sphere, 0).is_err());
        let p = Problem::new(ProblemId::Sphere, 3).unwrap();
        assert!(matches!(
            p.evaluate(&[1.0, 2.0]),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn minimizers_hit_reference_values() {
        for (id, x) in known_minimizers() {
            let p = Problem::new(id, x.len()).unwrap();
            let v = p.evaluate(&x).unwrap();
            assert_abs_diff_eq!(v, p.reference_value.unwrap(), epsilon = 1e-6);
        }
    }

    #[test]
    fn shifted_hump_minimum() {
        let p = Problem::benchmark(ProblemId::Hump);
        let v = p.evaluate(&[0.089_842_02, -0.712_656_4]).unwrap();
        assert_abs_diff_eq!(v, 4.651e-8, epsilon = 1e-10);
    }

    #[test]
    fn schwefel_residual_at_minimizer() {
        let v = eval(ProblemId::Schwefel, &[420.968_746_7, 420.968_746_7]);
        assert_abs_diff_eq!(v, 2.5455e-5, epsilon = 1e-8);
    }

    #[test]
    fn manifest_lists_every_problem() {
        let all: Vec<_> = ProblemId::ALL.into_iter().map(Problem::benchmark).collect();
        let text = catalog_manifest(&all);
        assert_eq!(text.lines().count(), 28);
        assert!(text.contains("f5,Branin,2,-5;0,10;15,"));
        assert!(text.contains("f26,Trid,10,-100,100,-2.1e2"));
    }
}
