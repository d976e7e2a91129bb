use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::abc::AbcParams;
use crate::benchmarks::ProblemId;
use crate::hs::HsParams;
use crate::optim::Algorithm;
use crate::sta::StaParams;
use crate::{Error, Result};

/// Preset run counts and budget scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// 20 runs at full budgets.
    Desk,
    /// 5 runs at a tenth of the budgets.
    Smoke,
}

impl std::str::FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "desk" => Ok(Profile::Desk),
            "smoke" => Ok(Profile::Smoke),
            _ => Err(Error::Config(format!("unknown profile `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub problems: Vec<ProblemId>,
    pub algorithms: Vec<Algorithm>,
    pub runs: usize,
    /// Run `r` of every algorithm uses seed `base_seed + r`.
    pub base_seed: u64,
    /// Fixed evaluation budget for every problem, replacing the
    /// dimension-based default.
    pub budget_override: Option<u64>,
    /// Default budgets are divided by this (rounded up).
    pub budget_divisor: u64,
    /// Non-default dimensions, by problem.
    pub dimensions: BTreeMap<ProblemId, usize>,
    pub sta: StaParams,
    pub hs: HsParams,
    pub abc: AbcParams,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub out_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig::profile(Profile::Desk)
    }
}

impl ExperimentConfig {
    pub fn profile(profile: Profile) -> Self {
        let (runs, budget_divisor) = match profile {
            Profile::Desk => (20, 1),
            Profile::Smoke => (5, 10),
        };
        ExperimentConfig {
            problems: ProblemId::ALL.to_vec(),
            algorithms: Algorithm::ALL.to_vec(),
            runs,
            base_seed: 0,
            budget_override: None,
            budget_divisor,
            dimensions: BTreeMap::new(),
            sta: StaParams::default(),
            hs: HsParams::default(),
            abc: AbcParams::default(),
            jobs: 0,
            out_dir: PathBuf::from("results"),
        }
    }

    pub fn seed_for_run(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.problems.is_empty() || self.algorithms.is_empty() {
            return Err(Error::Config("need at least one problem and one algorithm".into()));
        }
        if self.budget_divisor == 0 || self.budget_override == Some(0) {
            return Err(Error::Config("budgets must be positive".into()));
        }
        self.sta.validate()?;
        self.hs.validate()?;
        self.abc.validate()
    }

    /// Applies the keys present in a TOML config file on top of `self`.
    pub fn merge_toml(mut self, text: &str) -> Result<Self> {
        let file: ConfigFile = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        if let Some(p) = file.profile {
            let base = ExperimentConfig::profile(p);
            self.runs = base.runs;
            self.budget_divisor = base.budget_divisor;
        }
        if let Some(ps) = file.problems {
            self.problems = ps.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        }
        if let Some(algs) = file.algorithms {
            self.algorithms = algs.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        }
        if let Some(r) = file.runs {
            self.runs = r;
        }
        if let Some(s) = file.seed {
            self.base_seed = s;
        }
        if file.budget.is_some() {
            self.budget_override = file.budget;
        }
        if let Some(j) = file.jobs {
            self.jobs = j;
        }
        if let Some(o) = file.out {
            self.out_dir = o;
        }
        for (k, n) in file.dimensions {
            self.dimensions.insert(k.parse()?, n);
        }
        if let Some(p) = file.sta {
            self.sta = p;
        }
        if let Some(p) = file.hs {
            self.hs = p;
        }
        if let Some(p) = file.abc {
            self.abc = p;
        }
        Ok(self)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
        ExperimentConfig::default().merge_toml(&text)
    }
}

/// On-disk layout: top-level keys plus `[dimensions]`, `[sta]`, `[hs]` and
/// `[abc]` sections.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    profile: Option<Profile>,
    problems: Option<Vec<String>>,
    algorithms: Option<Vec<String>>,
    runs: Option<usize>,
    seed: Option<u64>,
    budget: Option<u64>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    #[serde(default)]
    dimensions: BTreeMap<String, usize>,
    sta: Option<StaParams>,
    hs: Option<HsParams>,
    abc: Option<AbcParams>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hs::Bandwidth;

    #[test]
    fn profiles() {
        let d = ExperimentConfig::profile(Profile::Desk);
        assert_eq!((d.runs, d.budget_divisor, d.problems.len()), (20, 1, 27));
        let s = ExperimentConfig::profile(Profile::Smoke);
        assert_eq!((s.runs, s.budget_divisor), (5, 10));
        assert_eq!(d.seed_for_run(3), 3);
    }

    #[test]
    fn toml_merge() {
        let text = r#"
            profile = "smoke"
            problems = ["f14", "sphere"]
            algorithms = ["sta", "hs"]
            seed = 100
            jobs = 2

            [dimensions]
            sphere = 5

            [sta]
            se = 4

            [hs]
            hmcr = 0.95
            bw = { absolute = 0.5 }

            [abc]
            limit = 50
        "#;
        let c = ExperimentConfig::default().merge_toml(text).unwrap();
        assert_eq!(c.problems, vec![ProblemId::Matyas, ProblemId::Sphere]);
        assert_eq!(c.algorithms, vec![Algorithm::Sta, Algorithm::Hs]);
        assert_eq!((c.runs, c.budget_divisor, c.base_seed, c.jobs), (5, 10, 100, 2));
        assert_eq!(c.dimensions[&ProblemId::Sphere], 5);
        assert_eq!(c.sta.se, 4);
        assert_eq!(c.sta.fc, 2.0);
        assert_eq!(c.hs.bw, Bandwidth::Absolute(0.5));
        assert_eq!(c.hs.par, 0.3);
        assert_eq!(c.abc.limit, 50);
        c.validate().unwrap();
    }

    #[test]
    fn bad_configs() {
        assert!(ExperimentConfig::default().merge_toml("colour = 1").is_err());
        assert!(ExperimentConfig::default().merge_toml("problems = [\"f99\"]").is_err());
        assert!(ExperimentConfig::default().merge_toml("[sta]\nrho = 1").is_err());
        let c = ExperimentConfig { runs: 0, ..Default::default() };
        assert!(c.validate().is_err());
    }
}
