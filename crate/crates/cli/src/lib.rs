//! Reports, suite runners and built-in certificate data for the `tricox`
//! command line.

pub mod report;
pub mod suites;

pub use report::{Report, StepRecord};

/// Thread count from `TRICOX_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("TRICOX_THREADS").ok()?.trim().parse().ok().filter(|&n| n > 0)
}
