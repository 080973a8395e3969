//! Bootstrap linear shrinkage: estimate a uniform shrinkage factor from
//! bootstrap resamples, apply it with an intercept refit, and compare MLE
//! against MLE plus shrinkage over simulated development samples.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::AcceptanceInterval;
use crate::error::{Error, Result};
use crate::montecarlo::{
    find_n_expected, find_n_prap, simulate_performance_paired, summarize, FitMethod, Measure,
    PerformanceSummary, SimulationConfig,
};
use crate::rng::{stream_rng, StreamStage};
use crate::stats::{fit_calibration, fit_logistic, Dataset, FittedLogistic, RowMatrix};

/// Abort when more than this fraction of bootstrap resamples fail to fit.
const MAX_BOOTSTRAP_FAILURE_FRACTION: f64 = 0.2;

/// A uniformly shrunk logistic model with its refitted intercept.
#[derive(Debug, Clone, Serialize)]
pub struct ShrunkModel {
    pub lsf: f64,
    pub intercept: f64,
    pub slopes: Vec<f64>,
    pub base: FittedLogistic,
    pub bootstraps_used: usize,
    pub bootstrap_failures: usize,
    max_abs_score: f64,
}

impl ShrunkModel {
    /// View the shrunk model as a plain fitted logistic model.
    pub fn to_logistic(&self) -> FittedLogistic {
        FittedLogistic {
            intercept: self.intercept,
            slopes: self.slopes.clone(),
            converged: true,
            iterations: self.base.iterations,
            max_abs_score: self.max_abs_score,
        }
    }
}

fn bootstrap_slope(data: &Dataset, seed: u64, k: u64) -> Result<f64> {
    let n = data.n();
    let p = data.n_predictors();
    let mut rng = stream_rng(seed, k, StreamStage::Bootstrap);

    // resample with replacement; one redraw if a single outcome class came up
    let mut resample = |rng: &mut rand_chacha::ChaCha8Rng| -> (Vec<u8>, Vec<f64>) {
        let mut y = Vec::with_capacity(n);
        let mut x = Vec::with_capacity(n * p);
        for _ in 0..n {
            let i = rng.random_range(0..n);
            y.push(data.outcomes[i]);
            x.extend_from_slice(data.covariates.row(i));
        }
        (y, x)
    };
    let (mut y, mut x) = resample(&mut rng);
    let one_class = |y: &[u8]| y.iter().all(|&v| v == 0) || y.iter().all(|&v| v == 1);
    if one_class(&y) {
        (y, x) = resample(&mut rng);
    }

    let boot = Dataset::new(y, RowMatrix::new(x, n, p)?, None)?;
    let fit = fit_logistic(&boot, None, false)?;
    // calibration slope of the bootstrap model on the original sample
    let lp = fit.linear_predictor(data);
    Ok(fit_calibration(&data.outcomes, &lp)?.slope)
}

/// Bootstrap LSF with the resample counts: (factor, used, failed).
pub fn bootstrap_lsf_counted(
    data: &Dataset,
    b: usize,
    seed: u64,
    workers: usize,
) -> Result<(f64, usize, usize)> {
    if b < 50 {
        return Err(Error::InvalidInput(format!(
            "need at least 50 bootstrap resamples, got {b}"
        )));
    }
    let run = || -> Vec<Result<f64>> {
        (0..b as u64)
            .into_par_iter()
            .map(|k| bootstrap_slope(data, seed, k))
            .collect()
    };
    let slopes = if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(run)
    };

    let mut sum = 0.0;
    let mut used = 0usize;
    let mut failed = 0usize;
    for s in slopes {
        match s {
            Ok(v) => {
                sum += v;
                used += 1;
            }
            Err(e) if e.is_replicate_failure() => failed += 1,
            Err(e) => return Err(e),
        }
    }
    if (failed as f64) > MAX_BOOTSTRAP_FAILURE_FRACTION * b as f64 {
        return Err(Error::ExcessiveFailures(format!(
            "{failed} of {b} bootstrap resamples failed to fit"
        )));
    }
    Ok((sum / used as f64, used, failed))
}

/// Linear shrinkage factor estimated from `b` bootstrap resamples: each
/// resample is refitted and its calibration slope measured on the original
/// sample; the factor is the mean of those slopes. Deterministic for fixed
/// (data, b, seed) and any worker count.
pub fn bootstrap_lsf(data: &Dataset, b: usize, seed: u64) -> Result<f64> {
    bootstrap_lsf_counted(data, b, seed, 0).map(|(lsf, _, _)| lsf)
}

/// Multiply the slopes by `lsf` and re-estimate the intercept by a
/// one-parameter fit with the shrunk linear predictor as offset, so the mean
/// predicted probability on the training data equals the event rate.
pub fn apply_lsf(base: &FittedLogistic, lsf: f64, data: &Dataset) -> Result<ShrunkModel> {
    if !(lsf >= 0.0) || !lsf.is_finite() {
        return Err(Error::InvalidInput(format!(
            "shrinkage factor must be finite and non-negative, got {lsf}"
        )));
    }
    let slopes: Vec<f64> = base.slopes.iter().map(|s| s * lsf).collect();
    let offset: Vec<f64> = (0..data.n())
        .map(|i| {
            data.covariates
                .row(i)
                .iter()
                .zip(&slopes)
                .map(|(x, s)| x * s)
                .sum()
        })
        .collect();
    let refit = fit_logistic(data, Some(&offset), true)?;
    Ok(ShrunkModel {
        lsf,
        intercept: refit.intercept,
        slopes,
        base: base.clone(),
        bootstraps_used: 0,
        bootstrap_failures: 0,
        max_abs_score: refit.max_abs_score,
    })
}

/// Bootstrap the shrinkage factor and apply it in one step, keeping the
/// resample counts on the result.
pub fn fit_shrunk(data: &Dataset, b: usize, seed: u64) -> Result<ShrunkModel> {
    let base = fit_logistic(data, None, false)?;
    let (lsf, used, failed) = bootstrap_lsf_counted(data, b, seed, 0)?;
    let mut model = apply_lsf(&base, lsf, data)?;
    model.bootstraps_used = used;
    model.bootstrap_failures = failed;
    Ok(model)
}

/// Which sample-size calculation a comparison row belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SizeLabel {
    /// Target mean calibration slope 0.9.
    Standard,
    /// Target PrAP 0.8.
    New,
}

/// One row of the shrinkage comparison: a (size, fit method) cell with the
/// calibration-slope summary.
#[derive(Debug, Clone, Serialize)]
pub struct ShrinkageRow {
    pub size: SizeLabel,
    pub n: usize,
    pub method: FitMethod,
    pub cal_slope: PerformanceSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShrinkageComparison {
    pub rows: Vec<ShrinkageRow>,
}

/// Run the MLE vs MLE+LSF comparison at explicitly given sample sizes,
/// sharing training and validation data across methods within each replicate.
pub fn shrinkage_experiment_at(
    spec: &crate::dgm::TrueModelSpec,
    config: &SimulationConfig,
    interval: AcceptanceInterval,
    n_standard: usize,
    n_new: usize,
) -> Result<ShrinkageComparison> {
    let mut rows = Vec::with_capacity(4);
    for (label, n) in [(SizeLabel::Standard, n_standard), (SizeLabel::New, n_new)] {
        let (mle, lsf) = simulate_performance_paired(spec, n, config)?;
        rows.push(ShrinkageRow {
            size: label,
            n,
            method: FitMethod::Mle,
            cal_slope: summarize(&mle, Measure::CalSlope, interval)?,
        });
        rows.push(ShrinkageRow {
            size: label,
            n,
            method: FitMethod::MleLsf,
            cal_slope: summarize(&lsf, Measure::CalSlope, interval)?,
        });
    }
    Ok(ShrinkageComparison { rows })
}

/// Compare MLE with MLE plus post-estimation shrinkage at the two calculated
/// sample sizes (mean slope 0.9 and PrAP 0.8).
pub fn shrinkage_experiment(
    spec: &crate::dgm::TrueModelSpec,
    config: &SimulationConfig,
    interval: AcceptanceInterval,
) -> Result<ShrinkageComparison> {
    let search_config = SimulationConfig {
        fit_method: FitMethod::Mle,
        ..*config
    };
    let n_standard = find_n_expected(spec, 0.9, &search_config)?.n;
    let n_new = find_n_prap(spec, interval, 0.8, &search_config)?.n;
    shrinkage_experiment_at(spec, config, interval, n_standard, n_new)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::{expit, logit};
    use approx::assert_abs_diff_eq;

    fn toy_data(n: usize) -> Dataset {
        let mut state = 0xABCDEF0123456789u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut x = Vec::with_capacity(2 * n);
        let mut y = Vec::with_capacity(n);
        for _ in 0..n {
            let x1 = next() * 2.0 - 1.0;
            let x2 = next() * 2.0 - 1.0;
            x.push(x1);
            x.push(x2);
            y.push(u8::from(next() < expit(-1.0 + 0.8 * x1 - 0.5 * x2)));
        }
        Dataset::new(y, RowMatrix::new(x, n, 2).unwrap(), None).unwrap()
    }

    #[test]
    fn identity_factor_keeps_slopes_and_event_rate() {
        let data = toy_data(400);
        let base = fit_logistic(&data, None, false).unwrap();
        let shrunk = apply_lsf(&base, 1.0, &data).unwrap();
        assert_eq!(shrunk.slopes, base.slopes);
        let mean_prob = shrunk
            .to_logistic()
            .linear_predictor(&data)
            .iter()
            .map(|&e| expit(e))
            .sum::<f64>()
            / data.n() as f64;
        assert_abs_diff_eq!(mean_prob, data.event_rate(), epsilon = 1e-8);
        assert_abs_diff_eq!(shrunk.intercept, base.intercept, epsilon = 1e-6);
    }

    #[test]
    fn zero_factor_collapses_to_null_model() {
        let data = toy_data(300);
        let base = fit_logistic(&data, None, false).unwrap();
        let shrunk = apply_lsf(&base, 0.0, &data).unwrap();
        assert!(shrunk.slopes.iter().all(|&s| s == 0.0));
        assert_abs_diff_eq!(shrunk.intercept, logit(data.event_rate()), epsilon = 1e-9);
    }

    #[test]
    fn shrinkage_preserves_slope_ratios() {
        let data = toy_data(400);
        let base = fit_logistic(&data, None, false).unwrap();
        let shrunk = apply_lsf(&base, 0.83, &data).unwrap();
        assert_abs_diff_eq!(
            shrunk.slopes[0] / shrunk.slopes[1],
            base.slopes[0] / base.slopes[1],
            epsilon = 1e-12
        );
        // intercept refit keeps the event-rate identity at any factor
        let mean_prob = shrunk
            .to_logistic()
            .linear_predictor(&data)
            .iter()
            .map(|&e| expit(e))
            .sum::<f64>()
            / data.n() as f64;
        assert_abs_diff_eq!(mean_prob, data.event_rate(), epsilon = 1e-8);
    }

    #[test]
    fn bootstrap_lsf_is_deterministic_and_worker_independent() {
        let data = toy_data(250);
        let a = bootstrap_lsf(&data, 60, 11).unwrap();
        let b = bootstrap_lsf(&data, 60, 11).unwrap();
        assert_eq!(a, b);
        let (c, used, _) = bootstrap_lsf_counted(&data, 60, 11, 1).unwrap();
        let (d, _, _) = bootstrap_lsf_counted(&data, 60, 11, 2).unwrap();
        assert_eq!(c, d);
        assert_eq!(a, c);
        assert!(used > 0);
        let e = bootstrap_lsf(&data, 60, 12).unwrap();
        assert_ne!(a, e);
    }

    #[test]
    fn too_few_bootstraps_rejected() {
        let data = toy_data(100);
        assert!(matches!(
            bootstrap_lsf(&data, 10, 1),
            Err(Error::InvalidInput(_))
        ));
    }
}
