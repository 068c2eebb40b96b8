//! Verification engine, report formats and command line for `qfib-core`.

pub mod cli;
pub mod engine;
pub mod report;

pub use engine::{
    scan_conjecture, verify_all, verify_claim, verify_instance, BoundProfile, EngineOptions,
    VerificationReport,
};
