use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty ranking domain")]
    EmptyRankingDomain,
    #[error("ranking value for arm {0} is missing or not a number")]
    BadRankingValue(usize),
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("target count not below feasible count (m = {m}, |A_f| = {feasible})")]
    TargetCountNotBelowFeasible { m: usize, feasible: usize },
    #[error("degenerate instance requires tolerance: {0}")]
    DegenerateInstance(String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("unknown arm id {0}")]
    UnknownArm(usize),
    #[error("harmonic number index must be at least 1")]
    HarmonicIndex,
    #[error("budget below arm count (horizon = {horizon}, arms = {arms})")]
    BudgetBelowArmCount { horizon: u64, arms: usize },
    #[error("schedule built for {schedule} arms but instance has {instance}")]
    ScheduleMismatch { schedule: usize, instance: usize },
    #[error("horizon too small: {0}")]
    HorizonTooSmall(String),
    #[error("gap undefined: {feasible} feasible arms for m_k = {m_k}")]
    GapUndefined { feasible: usize, m_k: usize },
    #[error("vacuous bound: {0}")]
    VacuousBound(String),
    #[error("degenerate ranking gap: {0}")]
    DegenerateRankingGap(String),
    #[error("ranking bound requires a successful run")]
    RankingNeedsSuccess,
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

impl Error {
    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
