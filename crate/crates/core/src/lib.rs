//! Development-sample size calculations for binary-outcome risk prediction
//! models.
//!
//! The crate calibrates an assumed true logistic model to a target
//! (prevalence, C-statistic), then sizes the development sample so that
//! either the expected calibration slope or the probability of acceptable
//! calibration (PrAP) meets a target — via closed-form calculations
//! ([`analytic`]) or a seeded, parallel simulation framework
//! ([`montecarlo`]). Bootstrap linear shrinkage as a post-fit correction
//! lives in [`shrinkage`].

pub mod analytic;
pub mod dgm;
pub mod error;
pub mod gauss;
pub mod montecarlo;
pub mod normal;
pub mod rng;
pub mod shrinkage;
pub mod stats;

pub use analytic::{
    analytic_n_for_expected, analytic_n_for_prap, expected_slope_at_n, n_for_expected_slope,
    prap_normal, slope_variance, AcceptanceInterval, AdjustmentMode, AnalyticResult,
};
pub use dgm::{
    adjusted_c, calibrate_linear_predictor, cox_snell_r2, generate_dataset, DgmDerived,
    LinearPredictorParams, TrueModelSpec, CALIBRATION_TOL, DEFAULT_MC_SIZE,
};
pub use error::{Error, Result};
pub use montecarlo::{
    build_coefficient_reference, draw_coefficients_fast, find_n_expected, find_n_prap,
    simulate_performance, simulate_performance_paired, summarize, CoefficientReference, FitMethod,
    Measure, PerformanceDistribution, PerformanceSummary, SampleSizeSearchResult,
    SimulationConfig,
};
pub use shrinkage::{
    apply_lsf, bootstrap_lsf, fit_shrunk, shrinkage_experiment, shrinkage_experiment_at,
    ShrinkageComparison, ShrinkageRow, ShrunkModel, SizeLabel,
};
pub use stats::{
    brier, calibration_in_large, concordance, fit_calibration, fit_logistic, mape, measure_all,
    CalibrationFit, Dataset, FittedLogistic, MeasureSet, RowMatrix,
};
