use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{predict, BettiTable};
use crate::error::Result;
use crate::ff::PrimeField;
use crate::hilbert::{cardinality, family_hvector, FamilyParams, HVector};

use super::koszul::CoordinateRing;
use super::points::{sample_points_on_surface, sample_surface};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialOptions {
    /// Surfaces drawn per attempt before giving up on the Hilbert function.
    pub max_surfaces: usize,
    pub record_timings: bool,
}

impl Default for TrialOptions {
    fn default() -> Self {
        Self {
            max_surfaces: 5,
            record_timings: false,
        }
    }
}

/// Outcome of one seeded trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub trial: usize,
    pub params: FamilyParams,
    pub p: u64,
    pub master_seed: u64,
    pub cardinality: i64,
    pub predicted: BettiTable,
    pub observed: Option<BettiTable>,
    pub observed_hvec: Option<HVector>,
    pub hilbert_match: bool,
    pub betti_match: bool,
    pub surfaces_drawn: usize,
    /// The first sample disagreed with the prediction and was redrawn once.
    pub resampled: bool,
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// RNG for trial `index`: the master seed selects the generator and the
/// index selects an independent stream, so trials can run in any order.
pub fn trial_rng(master_seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index as u64);
    rng
}

struct Attempt {
    observed: Option<BettiTable>,
    observed_hvec: Option<HVector>,
    hilbert_match: bool,
    surfaces: usize,
    error: Option<String>,
}

fn attempt(
    params: FamilyParams,
    field: PrimeField,
    expected: &HVector,
    rng: &mut ChaCha8Rng,
    opts: TrialOptions,
) -> Attempt {
    let n = cardinality(params) as usize;
    let window = params.e as usize + 4;
    let mut out = Attempt {
        observed: None,
        observed_hvec: None,
        hilbert_match: false,
        surfaces: 0,
        error: None,
    };
    for k in 0..opts.max_surfaces.max(1) {
        out.surfaces += 1;
        let surface = sample_surface(field, rng);
        let ps = match sample_points_on_surface(&surface, n, field, rng) {
            Ok(ps) => ps,
            Err(e) => {
                out.error = Some(e.to_string());
                continue;
            }
        };
        let ring = match CoordinateRing::new(&ps, window) {
            Ok(r) => r,
            Err(e) => {
                out.error = Some(e.to_string());
                continue;
            }
        };
        out.observed_hvec = ring.hvector();
        out.hilbert_match = out.observed_hvec.as_ref() == Some(expected);
        if !out.hilbert_match && k + 1 < opts.max_surfaces {
            continue;
        }
        match ring.betti() {
            Ok(t) => {
                out.observed = Some(t);
                out.error = None;
            }
            Err(e) => out.error = Some(e.to_string()),
        }
        break;
    }
    out
}

/// Runs trial `index` of a batch.
pub fn run_trial(
    params: FamilyParams,
    field: PrimeField,
    master_seed: u64,
    index: usize,
    opts: TrialOptions,
) -> Result<TrialReport> {
    let start = Instant::now();
    let predicted = predict(params)?;
    let expected = family_hvector(params);
    let mut rng = trial_rng(master_seed, index);
    let mut a = attempt(params, field, &expected, &mut rng, opts);
    let mut surfaces = a.surfaces;
    let mut resampled = false;
    if a.observed.as_ref() != Some(&predicted) {
        resampled = true;
        a = attempt(params, field, &expected, &mut rng, opts);
        surfaces += a.surfaces;
    }
    Ok(TrialReport {
        trial: index,
        params,
        p: field.modulus(),
        master_seed,
        cardinality: cardinality(params),
        betti_match: a.observed.as_ref() == Some(&predicted),
        predicted,
        observed: a.observed,
        observed_hvec: a.observed_hvec,
        hilbert_match: a.hilbert_match,
        surfaces_drawn: surfaces,
        resampled,
        error: a.error,
        elapsed_ms: opts
            .record_timings
            .then(|| start.elapsed().as_millis() as u64),
    })
}

/// Runs `trials` independent trials in parallel, reports sorted by index.
pub fn run_trials(
    params: FamilyParams,
    field: PrimeField,
    trials: usize,
    master_seed: u64,
    opts: TrialOptions,
) -> Result<Vec<TrialReport>> {
    // fail fast on parameters without a prediction
    predict(params)?;
    let mut reports = (0..trials)
        .into_par_iter()
        .map(|k| run_trial(params, field, master_seed, k, opts))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by_key(|r| r.trial);
    Ok(reports)
}

/// Pass/fail summary of a batch: at most a tenth of the trials (rounded up)
/// may disagree with the prediction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub params: FamilyParams,
    pub trials: usize,
    pub matches: usize,
    pub required: usize,
    pub resampled: usize,
    pub passed: bool,
}

impl BatchSummary {
    pub fn from_reports(params: FamilyParams, reports: &[TrialReport]) -> Self {
        let trials = reports.len();
        let matches = reports.iter().filter(|r| r.betti_match).count();
        let required = trials - trials.div_ceil(10);
        Self {
            params,
            trials,
            matches,
            required,
            resampled: reports.iter().filter(|r| r.resampled).count(),
            passed: trials > 0 && matches >= required,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::hilbert_from_table;

    fn gf() -> PrimeField {
        PrimeField::new(32003).unwrap()
    }

    #[test]
    fn low_degree_family_matches() {
        let params = FamilyParams::new(4, 2, 3).unwrap();
        let reports = run_trials(params, gf(), 3, 7, TrialOptions::default()).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert!(r.betti_match && r.hilbert_match, "{r:?}");
            let obs = r.observed.as_ref().unwrap();
            assert_eq!(
                &hilbert_from_table(obs).unwrap(),
                r.observed_hvec.as_ref().unwrap()
            );
            assert!(r.elapsed_ms.is_none());
        }
        assert!(BatchSummary::from_reports(params, &reports).passed);
    }

    #[test]
    fn reproducible() {
        let params = FamilyParams::new(4, 3, 5).unwrap();
        let a = run_trials(params, gf(), 2, 42, TrialOptions::default()).unwrap();
        let b = run_trials(params, gf(), 2, 42, TrialOptions::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            run_trial(params, gf(), 42, 1, TrialOptions::default()).unwrap(),
            a[1]
        );
    }

    #[test]
    fn timings_are_optional_in_json() {
        let params = FamilyParams::new(4, 1, 2).unwrap();
        let plain = run_trial(params, gf(), 1, 0, TrialOptions::default()).unwrap();
        let text = serde_json::to_string(&plain).unwrap();
        assert!(!text.contains("elapsed_ms"));
        let timed = TrialOptions {
            record_timings: true,
            ..TrialOptions::default()
        };
        let r = run_trial(params, gf(), 1, 0, timed).unwrap();
        assert!(serde_json::to_string(&r).unwrap().contains("elapsed_ms"));
        let back: TrialReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, plain);
    }

    #[test]
    fn threshold() {
        let params = FamilyParams::new(4, 2, 1).unwrap();
        let r = run_trial(params, gf(), 0, 0, TrialOptions::default()).unwrap();
        let mut reports = vec![r; 10];
        assert_eq!(BatchSummary::from_reports(params, &reports).required, 9);
        reports[0].betti_match = false;
        assert!(BatchSummary::from_reports(params, &reports).passed);
        reports[1].betti_match = false;
        assert!(!BatchSummary::from_reports(params, &reports).passed);
    }
}
