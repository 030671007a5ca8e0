//! Randomized solver for the size-k decision problem on single-colored
//! instances: repeatedly map the colors onto `[k]` uniformly at random and
//! run the subset DP on the k-color instance. A size-k set survives one
//! recoloring with probability k!/k^k, so ceil(|ln eps| * k^k / k!) trials
//! push the miss probability below eps. Any witness found on a recolored
//! instance is valid for the original coloring, since distinct new colors
//! imply distinct old colors; false positives are impossible.

use crate::colored::ColoredIntervalGraph;
use crate::dp::solve_dp_q_witness;
use crate::error::{CoreError, Result};
use crate::solution::{check_colorful_independent, Solution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Trial configuration. `seed` pins the whole run; each trial draws its
/// recoloring from an independent stream keyed by (seed, trial index), so
/// results do not depend on execution order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CcConfig {
    pub k: u64,
    pub epsilon: f64,
    pub seed: u64,
    pub max_trials_override: Option<u64>,
}

impl CcConfig {
    pub fn new(k: u64, epsilon: f64, seed: u64) -> Self {
        CcConfig {
            k,
            epsilon,
            seed,
            max_trials_override: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.k < 1 {
            return Err(CoreError::InvalidParams("k must be at least 1".into()));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(CoreError::InvalidParams(
                "epsilon must lie strictly between 0 and 1".into(),
            ));
        }
        Ok(())
    }
}

/// Number of recoloring trials needed for error probability `epsilon`:
/// ceil(|ln eps| * k^k / k!), evaluated in log space, at least 1.
pub fn trials_needed(k: u64, epsilon: f64) -> u64 {
    assert!(k >= 1 && epsilon > 0.0 && epsilon < 1.0);
    let kf = k as f64;
    let ln_k_fact: f64 = (2..=k).map(|i| (i as f64).ln()).sum();
    let t = (-epsilon.ln()) * (kf * kf.ln() - ln_k_fact).exp();
    if t >= u64::MAX as f64 {
        return u64::MAX;
    }
    (t.ceil() as u64).max(1)
}

/// Applies a color mapping to a single-colored instance. `delta[g]` is the
/// new color of old color `g`; the result is renumbered on construction,
/// so its color count is the number of distinct mapped colors.
pub fn recolor(g: &ColoredIntervalGraph, delta: &[u32]) -> Result<ColoredIntervalGraph> {
    if !g.is_jisp() {
        return Err(CoreError::RequiresSingletonColors { op: "color coding" });
    }
    if delta.len() != g.gamma() as usize {
        return Err(CoreError::BadRecoloring {
            expected: g.gamma() as usize,
            got: delta.len(),
        });
    }
    if g.is_empty() {
        return Ok(ColoredIntervalGraph::empty());
    }
    let intervals = (0..g.n()).map(|v| g.interval(v)).collect();
    let colors = (0..g.n())
        .map(|v| vec![delta[g.color_list(v)[0] as usize]])
        .collect();
    let weights = g.weights().to_vec();
    let (out, _) = ColoredIntervalGraph::new(intervals, colors, weights)?;
    Ok(out)
}

/// Runs the randomized search. Returns a size-k colorful independent set
/// of the original instance, or `None` after all trials fail.
pub fn solve_cc(g: &ColoredIntervalGraph, cfg: &CcConfig) -> Result<Option<Solution>> {
    cfg.validate()?;
    require_jisp_unit(g)?;
    if g.is_empty() {
        return Ok(None);
    }
    let trials = cfg
        .max_trials_override
        .unwrap_or_else(|| trials_needed(cfg.k, cfg.epsilon));
    let gamma = g.gamma() as usize;
    for trial in 0..trials {
        let mut rng = trial_rng(cfg.seed, trial);
        let delta: Vec<u32> = (0..gamma)
            .map(|_| rng.gen_range(0..cfg.k as u32))
            .collect();
        if let Some(sol) = run_trial(g, &delta, cfg.k)? {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

/// Deterministic fallback: tries every mapping of the colors onto `[k]`.
/// Only sensible for small color counts; rejects more than 12.
pub fn solve_cc_exhaustive(g: &ColoredIntervalGraph, k: u64) -> Result<Option<Solution>> {
    require_jisp_unit(g)?;
    if k < 1 {
        return Err(CoreError::InvalidParams("k must be at least 1".into()));
    }
    if g.gamma() > 12 {
        return Err(CoreError::InvalidParams(format!(
            "exhaustive recoloring supports at most 12 colors, got {}",
            g.gamma()
        )));
    }
    if g.is_empty() {
        return Ok(None);
    }
    let gamma = g.gamma() as usize;
    let mut delta = vec![0u32; gamma];
    loop {
        if let Some(sol) = run_trial(g, &delta, k)? {
            return Ok(Some(sol));
        }
        // next mapping in mixed-radix order
        let mut i = 0;
        loop {
            if i == gamma {
                return Ok(None);
            }
            delta[i] += 1;
            if delta[i] < k as u32 {
                break;
            }
            delta[i] = 0;
            i += 1;
        }
    }
}

fn require_jisp_unit(g: &ColoredIntervalGraph) -> Result<()> {
    if !g.is_jisp() {
        return Err(CoreError::RequiresSingletonColors { op: "color coding" });
    }
    if !g.is_unit_weight() {
        return Err(CoreError::RequiresUnitWeights { op: "color coding" });
    }
    Ok(())
}

fn run_trial(g: &ColoredIntervalGraph, delta: &[u32], k: u64) -> Result<Option<Solution>> {
    let recolored = recolor(g, delta)?;
    // fewer distinct colors than k can never host a size-k colorful set
    if (recolored.gamma() as u64) < k {
        return Ok(None);
    }
    let sol = solve_dp_q_witness(&recolored)?;
    if sol.value < k {
        return Ok(None);
    }
    let vertices: Vec<usize> = sol.vertices[..k as usize].to_vec();
    debug_assert!(check_colorful_independent(g, &vertices).is_ok());
    Ok(Some(Solution::new(vertices, k)))
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&trial.to_le_bytes());
    key[16] = 0xc5;
    ChaCha8Rng::from_seed(key)
}
