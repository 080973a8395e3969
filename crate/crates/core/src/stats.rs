//! Deterministic statistical primitives: logistic model fitting via
//! iteratively reweighted least squares, calibration fitting, and the
//! performance measures computed on validation data.

use nalgebra::{Cholesky, DMatrix, DVector};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::normal::{expit, logit};

/// Hard cap on IRLS iterations.
const MAX_ITER: usize = 50;
/// Convergence: relative deviance change below this and ...
const DEVIANCE_TOL: f64 = 1e-10;
/// ... max absolute score below this.
const SCORE_TOL: f64 = 1e-8;
/// Any |coefficient| beyond this at the iteration cap is treated as
/// separation; logits beyond +-20 are numerically saturated.
const SEPARATION_BOUND: f64 = 20.0;

/// Row-major numeric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RowMatrix {
    data: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl RowMatrix {
    pub fn new(data: Vec<f64>, rows: usize, cols: usize) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch(format!(
                "matrix data has {} values, expected {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Self { data, rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    fn column_is_constant(&self, j: usize) -> bool {
        if self.rows < 2 {
            return true;
        }
        let first = self.data[j];
        (1..self.rows).all(|i| self.data[i * self.cols + j] == first)
    }
}

/// One sample of binary outcomes with covariates; `true_probs` is known only
/// for simulated data.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub outcomes: Vec<u8>,
    pub covariates: RowMatrix,
    pub true_probs: Option<Vec<f64>>,
}

impl Dataset {
    pub fn new(
        outcomes: Vec<u8>,
        covariates: RowMatrix,
        true_probs: Option<Vec<f64>>,
    ) -> Result<Self> {
        let n = outcomes.len();
        if n == 0 || covariates.cols() == 0 {
            return Err(Error::InvalidInput(
                "dataset requires n >= 1 and p >= 1".into(),
            ));
        }
        if covariates.rows() != n {
            return Err(Error::LengthMismatch(format!(
                "{} outcomes but {} covariate rows",
                n,
                covariates.rows()
            )));
        }
        if let Some(tp) = &true_probs {
            if tp.len() != n {
                return Err(Error::LengthMismatch(format!(
                    "{} outcomes but {} true probabilities",
                    n,
                    tp.len()
                )));
            }
            if tp.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
                return Err(Error::InvalidInput(
                    "true probabilities must lie in (0,1)".into(),
                ));
            }
        }
        if outcomes.iter().any(|&y| y > 1) {
            return Err(Error::InvalidInput("outcomes must be 0 or 1".into()));
        }
        Ok(Self {
            outcomes,
            covariates,
            true_probs,
        })
    }

    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    pub fn n_predictors(&self) -> usize {
        self.covariates.cols()
    }

    pub fn event_rate(&self) -> f64 {
        self.outcomes.iter().map(|&y| y as f64).sum::<f64>() / self.n() as f64
    }
}

/// Maximum-likelihood logistic fit.
#[derive(Debug, Clone, Serialize)]
pub struct FittedLogistic {
    pub intercept: f64,
    pub slopes: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    pub max_abs_score: f64,
}

impl FittedLogistic {
    /// Linear predictor for one covariate row.
    #[inline]
    pub fn linear_predictor_row(&self, row: &[f64]) -> f64 {
        self.intercept
            + self
                .slopes
                .iter()
                .zip(row)
                .map(|(b, x)| b * x)
                .sum::<f64>()
    }

    /// Linear predictor over all rows of a dataset.
    pub fn linear_predictor(&self, data: &Dataset) -> Vec<f64> {
        (0..data.n())
            .map(|i| self.linear_predictor_row(data.covariates.row(i)))
            .collect()
    }
}

/// Two-parameter logistic recalibration fit (intercept and slope on a
/// supplied linear predictor).
#[derive(Debug, Clone, Serialize)]
pub struct CalibrationFit {
    pub intercept: f64,
    pub slope: f64,
    pub slope_se: f64,
}

/// Performance measures from one train/validate pass.
#[derive(Debug, Clone, Serialize)]
pub struct MeasureSet {
    pub cal_slope: f64,
    pub cal_in_large: f64,
    pub c_stat: f64,
    pub brier: f64,
    pub mape: Option<f64>,
}

/// Full IRLS output, including the information matrix at the solution.
/// The covariance of the coefficient estimates is the inverse of `info`.
pub(crate) struct IrlsFit {
    pub coefficients: Vec<f64>,
    pub info: DMatrix<f64>,
    pub iterations: usize,
    pub max_abs_score: f64,
}

fn check_outcomes(outcomes: &[u8]) -> Result<()> {
    if outcomes.is_empty() {
        return Err(Error::InvalidInput("empty outcome vector".into()));
    }
    let events: usize = outcomes.iter().map(|&y| y as usize).sum();
    if events == 0 || events == outcomes.len() {
        return Err(Error::DegenerateOutcome(format!(
            "{} events out of {} observations",
            events,
            outcomes.len()
        )));
    }
    Ok(())
}

/// IRLS for a logistic model with design [1 | columns], optional offset.
/// `fill_row` writes the k covariate values of row i into the buffer.
pub(crate) fn irls<F>(
    n: usize,
    k: usize,
    fill_row: F,
    outcomes: &[u8],
    offset: Option<&[f64]>,
) -> Result<IrlsFit>
where
    F: Fn(usize, &mut [f64]),
{
    let dim = k + 1;
    let rate = outcomes.iter().map(|&y| y as f64).sum::<f64>() / n as f64;
    let mut beta = vec![0.0; dim];
    beta[0] = logit(rate);

    let mut xrow = vec![0.0; dim];
    xrow[0] = 1.0;

    let eta_of = |beta: &[f64], xrow: &mut [f64], i: usize| -> f64 {
        fill_row(i, &mut xrow[1..]);
        let mut eta = offset.map_or(0.0, |o| o[i]);
        for (b, x) in beta.iter().zip(xrow.iter()) {
            eta += b * x;
        }
        eta
    };

    let deviance_of = |beta: &[f64], xrow: &mut [f64]| -> f64 {
        let mut dev = 0.0;
        for i in 0..n {
            let mu = expit(eta_of(beta, xrow, i));
            dev -= 2.0
                * if outcomes[i] == 1 {
                    mu.ln()
                } else {
                    (1.0 - mu).ln()
                };
        }
        dev
    };

    let mut deviance = deviance_of(&beta, &mut xrow);
    let mut info = DMatrix::<f64>::zeros(dim, dim);
    let mut max_abs_score = f64::INFINITY;

    for iter in 1..=MAX_ITER {
        // score and weighted cross-products at the current beta
        let mut score = vec![0.0; dim];
        info.fill(0.0);
        let mut rhs = vec![0.0; dim];
        for i in 0..n {
            let eta = eta_of(&beta, &mut xrow, i);
            let mu = expit(eta);
            let w = (mu * (1.0 - mu)).max(1e-10);
            let resid = outcomes[i] as f64 - mu;
            let wz = w * (eta - offset.map_or(0.0, |o| o[i])) + resid;
            for a in 0..dim {
                score[a] += xrow[a] * resid;
                rhs[a] += xrow[a] * wz;
                for b in 0..=a {
                    info[(a, b)] += xrow[a] * w * xrow[b];
                }
            }
        }
        for a in 0..dim {
            for b in 0..a {
                info[(b, a)] = info[(a, b)];
            }
        }
        max_abs_score = score.iter().fold(0.0f64, |m, s| m.max(s.abs()));

        let chol = Cholesky::new(info.clone()).ok_or_else(|| {
            Error::NonConvergence("singular information matrix".into())
        })?;
        let mut proposal = chol.solve(&DVector::from_column_slice(&rhs));

        // step-halving towards the current beta on deviance increase
        let mut new_dev = f64::INFINITY;
        for _ in 0..30 {
            let cand: Vec<f64> = proposal.iter().copied().collect();
            new_dev = deviance_of(&cand, &mut xrow);
            if new_dev <= deviance + 1e-12 {
                break;
            }
            for (p, b) in proposal.iter_mut().zip(beta.iter()) {
                *p = 0.5 * (*p + b);
            }
        }
        let rel_change = (deviance - new_dev).abs() / deviance.abs().max(1.0);
        beta = proposal.iter().copied().collect();
        deviance = new_dev;

        if iter > 1 && rel_change < DEVIANCE_TOL && max_abs_score < SCORE_TOL {
            return Ok(IrlsFit {
                coefficients: beta,
                info,
                iterations: iter,
                max_abs_score,
            });
        }
    }

    if beta.iter().any(|b| b.abs() > SEPARATION_BOUND) {
        Err(Error::NonConvergence(format!(
            "coefficients exceeded {SEPARATION_BOUND} at the iteration cap (separation)"
        )))
    } else {
        Err(Error::NonConvergence(format!(
            "no convergence in {MAX_ITER} iterations (max |score| {max_abs_score:.2e})"
        )))
    }
}

/// Fit a logistic regression by maximum likelihood.
///
/// With `fixed_slopes` set, only the intercept is estimated; the covariate
/// contribution must then be carried entirely by `offset` (used for the
/// shrinkage intercept refit and calibration-in-the-large).
pub fn fit_logistic(
    data: &Dataset,
    offset: Option<&[f64]>,
    fixed_slopes: bool,
) -> Result<FittedLogistic> {
    check_outcomes(&data.outcomes)?;
    let n = data.n();
    if let Some(o) = offset {
        if o.len() != n {
            return Err(Error::LengthMismatch(format!(
                "offset length {} but n {}",
                o.len(),
                n
            )));
        }
    }

    let fit = if fixed_slopes {
        irls(n, 0, |_, _| {}, &data.outcomes, offset)?
    } else {
        for j in 0..data.n_predictors() {
            if data.covariates.column_is_constant(j) {
                return Err(Error::ConstantPredictor(format!("covariate column {j}")));
            }
        }
        let cov = &data.covariates;
        irls(
            n,
            cov.cols(),
            |i, buf| buf.copy_from_slice(cov.row(i)),
            &data.outcomes,
            offset,
        )?
    };

    Ok(FittedLogistic {
        intercept: fit.coefficients[0],
        slopes: fit.coefficients[1..].to_vec(),
        converged: true,
        iterations: fit.iterations,
        max_abs_score: fit.max_abs_score,
    })
}

pub(crate) fn fit_logistic_with_info(data: &Dataset) -> Result<(FittedLogistic, DMatrix<f64>)> {
    check_outcomes(&data.outcomes)?;
    for j in 0..data.n_predictors() {
        if data.covariates.column_is_constant(j) {
            return Err(Error::ConstantPredictor(format!("covariate column {j}")));
        }
    }
    let cov = &data.covariates;
    let fit = irls(
        data.n(),
        cov.cols(),
        |i, buf| buf.copy_from_slice(cov.row(i)),
        &data.outcomes,
        None,
    )?;
    Ok((
        FittedLogistic {
            intercept: fit.coefficients[0],
            slopes: fit.coefficients[1..].to_vec(),
            converged: true,
            iterations: fit.iterations,
            max_abs_score: fit.max_abs_score,
        },
        fit.info,
    ))
}

/// Fit the calibration model: outcomes regressed on a model's linear
/// predictor with freely estimated intercept and slope.
pub fn fit_calibration(outcomes: &[u8], linear_predictor: &[f64]) -> Result<CalibrationFit> {
    check_outcomes(outcomes)?;
    if outcomes.len() != linear_predictor.len() {
        return Err(Error::LengthMismatch(format!(
            "{} outcomes but {} linear predictor values",
            outcomes.len(),
            linear_predictor.len()
        )));
    }
    let first = linear_predictor[0];
    if linear_predictor.iter().all(|&v| v == first) {
        return Err(Error::ConstantPredictor("linear predictor".into()));
    }

    let fit = irls(
        outcomes.len(),
        1,
        |i, buf| buf[0] = linear_predictor[i],
        outcomes,
        None,
    )?;
    let cov = fit
        .info
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::NonConvergence("singular information matrix".into()))?;
    Ok(CalibrationFit {
        intercept: fit.coefficients[0],
        slope: fit.coefficients[1],
        slope_se: cov[(1, 1)].sqrt(),
    })
}

/// Calibration-in-the-large: intercept of a logistic fit with the linear
/// predictor as a fixed offset (slope pinned at 1); 0 is the optimal value.
pub fn calibration_in_large(outcomes: &[u8], linear_predictor: &[f64]) -> Result<f64> {
    check_outcomes(outcomes)?;
    if outcomes.len() != linear_predictor.len() {
        return Err(Error::LengthMismatch(format!(
            "{} outcomes but {} linear predictor values",
            outcomes.len(),
            linear_predictor.len()
        )));
    }
    let fit = irls(outcomes.len(), 0, |_, _| {}, outcomes, Some(linear_predictor))?;
    Ok(fit.coefficients[0])
}

/// Mann-Whitney concordance (C-statistic) with ties counted as 1/2,
/// computed from midranks in O(n log n).
pub fn concordance(outcomes: &[u8], scores: &[f64]) -> Result<f64> {
    check_outcomes(outcomes)?;
    if outcomes.len() != scores.len() {
        return Err(Error::LengthMismatch(format!(
            "{} outcomes but {} scores",
            outcomes.len(),
            scores.len()
        )));
    }
    if scores.iter().any(|s| s.is_nan()) {
        return Err(Error::InvalidInput("scores contain NaN".into()));
    }
    let n = scores.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| scores[a].partial_cmp(&scores[b]).unwrap());

    let mut rank_sum_events = 0.0;
    let mut n_events = 0usize;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && scores[idx[j + 1]] == scores[idx[i]] {
            j += 1;
        }
        // midrank of the tie group covering sorted positions i..=j (1-based)
        let midrank = (i + 1 + j + 1) as f64 / 2.0;
        for &orig in &idx[i..=j] {
            if outcomes[orig] == 1 {
                rank_sum_events += midrank;
                n_events += 1;
            }
        }
        i = j + 1;
    }
    let n1 = n_events as f64;
    let n0 = (n - n_events) as f64;
    let u = rank_sum_events - n1 * (n1 + 1.0) / 2.0;
    Ok(u / (n1 * n0))
}

/// Brier score: mean squared difference between outcome and predicted
/// probability.
pub fn brier(outcomes: &[u8], probs: &[f64]) -> Result<f64> {
    if outcomes.len() != probs.len() {
        return Err(Error::LengthMismatch(format!(
            "{} outcomes but {} probabilities",
            outcomes.len(),
            probs.len()
        )));
    }
    if probs.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
        return Err(Error::DomainError("probabilities must lie in [0,1]".into()));
    }
    let n = outcomes.len() as f64;
    Ok(outcomes
        .iter()
        .zip(probs)
        .map(|(&y, &p)| (y as f64 - p).powi(2))
        .sum::<f64>()
        / n)
}

/// Mean absolute prediction error against known true probabilities.
pub fn mape(true_probs: &[f64], probs: &[f64]) -> Result<f64> {
    if true_probs.len() != probs.len() {
        return Err(Error::LengthMismatch(format!(
            "{} true probabilities but {} predictions",
            true_probs.len(),
            probs.len()
        )));
    }
    if true_probs
        .iter()
        .chain(probs)
        .any(|&p| !(0.0..=1.0).contains(&p))
    {
        return Err(Error::DomainError("probabilities must lie in [0,1]".into()));
    }
    let n = true_probs.len() as f64;
    Ok(true_probs
        .iter()
        .zip(probs)
        .map(|(&t, &p)| (t - p).abs())
        .sum::<f64>()
        / n)
}

/// All performance measures for one model on one validation dataset;
/// `mape` is present exactly when the validation data carry true
/// probabilities.
pub fn measure_all(validation: &Dataset, model: &FittedLogistic) -> Result<MeasureSet> {
    if model.slopes.len() != validation.n_predictors() {
        return Err(Error::LengthMismatch(format!(
            "model has {} slopes but validation data {} covariates",
            model.slopes.len(),
            validation.n_predictors()
        )));
    }
    let lp = model.linear_predictor(validation);
    let probs: Vec<f64> = lp.iter().map(|&e| expit(e)).collect();
    let cal = fit_calibration(&validation.outcomes, &lp)?;
    Ok(MeasureSet {
        cal_slope: cal.slope,
        cal_in_large: calibration_in_large(&validation.outcomes, &lp)?,
        c_stat: concordance(&validation.outcomes, &lp)?,
        brier: brier(&validation.outcomes, &probs)?,
        mape: match &validation.true_probs {
            Some(tp) => Some(mape(tp, &probs)?),
            None => None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn dataset(y: Vec<u8>, x: Vec<f64>, p: usize) -> Dataset {
        let n = y.len();
        Dataset::new(y, RowMatrix::new(x, n, p).unwrap(), None).unwrap()
    }

    #[test]
    fn intercept_only_fit_recovers_logit_of_rate() {
        let y = vec![1, 0, 0, 0, 1, 0, 0, 0];
        let x = vec![0.5; 8];
        let data = dataset(y, x, 1);
        let fit = fit_logistic(&data, None, true).unwrap();
        assert_abs_diff_eq!(fit.intercept, logit(0.25), epsilon = 1e-9);
        assert!(fit.slopes.is_empty());
    }

    #[test]
    fn perfect_separation_is_reported() {
        let data = dataset(vec![0, 0, 1, 1], vec![-1.0, -1.0, 1.0, 1.0], 1);
        match fit_logistic(&data, None, false) {
            Err(Error::NonConvergence(_)) => {}
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }

    #[test]
    fn degenerate_outcomes_are_rejected() {
        let data = dataset(vec![1, 1, 1, 1], vec![0.3, -0.1, 1.2, 0.4], 1);
        assert!(matches!(
            fit_logistic(&data, None, false),
            Err(Error::DegenerateOutcome(_))
        ));
    }

    #[test]
    fn constant_column_is_rejected() {
        let data = dataset(vec![0, 1, 0, 1], vec![2.0, 2.0, 2.0, 2.0], 1);
        assert!(matches!(
            fit_logistic(&data, None, false),
            Err(Error::ConstantPredictor(_))
        ));
    }

    #[test]
    fn score_equations_hold_at_solution() {
        // deterministic pseudo-random instance
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let n = 300;
        let mut x = Vec::with_capacity(2 * n);
        let mut y = Vec::with_capacity(n);
        for _ in 0..n {
            let x1 = next() * 2.0 - 1.0;
            let x2 = next() * 2.0 - 1.0;
            x.push(x1);
            x.push(x2);
            let p = expit(-0.5 + x1 - 0.7 * x2);
            y.push(u8::from(next() < p));
        }
        let data = dataset(y, x, 2);
        let fit = fit_logistic(&data, None, false).unwrap();
        assert!(fit.max_abs_score < 1e-8);
        // intercept score equation: mean fitted prob equals event rate
        let mean_fit = fit
            .linear_predictor(&data)
            .iter()
            .map(|&e| expit(e))
            .sum::<f64>()
            / n as f64;
        assert_abs_diff_eq!(mean_fit, data.event_rate(), epsilon = 1e-10);
    }

    #[test]
    fn calibration_slope_scales_inversely_with_predictor_scale() {
        let lp: Vec<f64> = (0..400).map(|i| (i as f64 - 200.0) / 60.0).collect();
        let y: Vec<u8> = lp
            .iter()
            .enumerate()
            .map(|(i, &e)| u8::from(((i * 2654435761) % 1000) as f64 / 1000.0 < expit(e)))
            .collect();
        let base = fit_calibration(&y, &lp).unwrap();
        let doubled: Vec<f64> = lp.iter().map(|&e| 2.0 * e).collect();
        let half = fit_calibration(&y, &doubled).unwrap();
        assert_abs_diff_eq!(half.slope, base.slope / 2.0, epsilon = 1e-8);
        // affine shift moves only the intercept
        let shifted: Vec<f64> = lp.iter().map(|&e| e + 3.0).collect();
        let sh = fit_calibration(&y, &shifted).unwrap();
        assert_abs_diff_eq!(sh.slope, base.slope, epsilon = 1e-8);
        assert_abs_diff_eq!(sh.intercept, base.intercept - 3.0 * base.slope, epsilon = 1e-6);
    }

    #[test]
    fn calibration_in_large_matches_newton_oracle() {
        let lp = [0.2, -1.0, 0.5, -0.3, 1.4, -2.0, 0.0, 0.9];
        let y = [1u8, 0, 1, 0, 1, 0, 0, 1];
        let got = calibration_in_large(&y, &lp).unwrap();
        // scalar Newton on f(a) = sum(y - expit(a + lp))
        let mut a = 0.0f64;
        for _ in 0..60 {
            let mut f = 0.0;
            let mut fp = 0.0;
            for (yi, li) in y.iter().zip(lp.iter()) {
                let m = expit(a + li);
                f += *yi as f64 - m;
                fp -= m * (1.0 - m);
            }
            a -= f / fp;
        }
        assert_abs_diff_eq!(got, a, epsilon = 1e-8);
    }

    #[test]
    fn concordance_trivial_cases() {
        let y = [0u8, 0, 1, 1];
        assert_abs_diff_eq!(
            concordance(&y, &[0.1, 0.2, 0.8, 0.9]).unwrap(),
            1.0,
            epsilon = 0.0
        );
        assert_abs_diff_eq!(
            concordance(&y, &[0.5, 0.5, 0.5, 0.5]).unwrap(),
            0.5,
            epsilon = 0.0
        );
    }

    fn concordance_bruteforce(outcomes: &[u8], scores: &[f64]) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for i in 0..outcomes.len() {
            for j in 0..outcomes.len() {
                if outcomes[i] == 1 && outcomes[j] == 0 {
                    den += 1.0;
                    if scores[i] > scores[j] {
                        num += 1.0;
                    } else if scores[i] == scores[j] {
                        num += 0.5;
                    }
                }
            }
        }
        num / den
    }

    #[test]
    fn concordance_matches_pairwise_bruteforce() {
        let mut state = 123456789u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let n = 200;
        let y: Vec<u8> = (0..n).map(|_| u8::from(next() < 0.3)).collect();
        // quantised scores so ties actually occur
        let s: Vec<f64> = (0..n).map(|_| (next() * 20.0).round() / 20.0).collect();
        let fast = concordance(&y, &s).unwrap();
        let slow = concordance_bruteforce(&y, &s);
        assert_eq!(fast, slow);
    }

    #[test]
    fn brier_and_mape_arithmetic() {
        assert_abs_diff_eq!(
            brier(&[1, 0], &[0.8, 0.3]).unwrap(),
            0.065,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(brier(&[1, 0, 1], &[1.0, 0.0, 1.0]).unwrap(), 0.0);
        assert_abs_diff_eq!(brier(&[1, 0, 1, 0], &[0.5; 4]).unwrap(), 0.25);
        assert_abs_diff_eq!(
            mape(&[0.1, 0.3], &[0.2, 0.1]).unwrap(),
            0.15,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(mape(&[0.4, 0.6], &[0.4, 0.6]).unwrap(), 0.0);
        assert!(matches!(
            brier(&[1, 0], &[0.5]),
            Err(Error::LengthMismatch(_))
        ));
        assert!(matches!(
            mape(&[0.5], &[0.5, 0.5]),
            Err(Error::LengthMismatch(_))
        ));
    }
}
