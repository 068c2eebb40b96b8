//! Parallel sweeps over claim instances.
//!
//! Instances are split into contiguous chunks; each chunk gets its own
//! [`Workspace`] so recurrences only walk forward inside a chunk. Failures are
//! gathered in instance order, so reports do not depend on scheduling.

use std::time::{Duration, Instant};

use qfib_core::verify::{self, SweepOptions};
use qfib_core::{ClaimId, Error, Failure, Outcome, Params, Workspace};
use rayon::prelude::*;

#[derive(Clone, Debug, Default)]
pub struct EngineOptions {
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    /// Lift the per-claim soft bound.
    pub allow_override: bool,
    pub sweep: SweepOptions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundProfile {
    Quick,
    Full,
}

impl BoundProfile {
    pub fn bound(self, claim: ClaimId) -> u64 {
        match self {
            BoundProfile::Quick => claim.quick_bound(),
            BoundProfile::Full => claim.full_bound(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub outcome: Outcome,
    pub bound: u64,
    pub elapsed: Duration,
    pub notes: Vec<&'static str>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome.failures.is_empty()
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn check_all(claim: ClaimId, instances: &[Params], jobs: usize) -> Vec<Failure> {
    let pool = pool(jobs);
    let workers = pool.current_num_threads().max(1);
    if workers == 1 {
        let mut ws = Workspace::new();
        return instances
            .iter()
            .filter_map(|p| verify::check(claim, p, &mut ws).err())
            .collect();
    }
    let chunk = instances.len().div_ceil(workers * 4).max(1);
    pool.install(|| {
        instances
            .par_chunks(chunk)
            .map(|slice| {
                let mut ws = Workspace::new();
                slice
                    .iter()
                    .filter_map(|p| verify::check(claim, p, &mut ws).err())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

/// Sweeps `claim` up to `bound`.
pub fn verify_claim(
    claim: ClaimId,
    bound: u64,
    opts: &EngineOptions,
) -> Result<VerificationReport, Error> {
    claim.check_bound(bound, opts.allow_override)?;
    let start = Instant::now();
    let instances = claim.instances(bound, &opts.sweep);
    let failures = check_all(claim, &instances, opts.jobs);
    let outcome = Outcome::from_failures(
        claim,
        claim.range(bound, &opts.sweep),
        instances.len(),
        failures,
    );
    Ok(VerificationReport {
        outcome,
        bound,
        elapsed: start.elapsed(),
        notes: claim.notes().to_vec(),
    })
}

/// Conjecture scan: `f(6n)` or `f_r(6n)` for `6n <= max_6n`, `r <= max_r`.
pub fn scan_conjecture(
    claim: ClaimId,
    max_6n: u64,
    max_r: u32,
    opts: &EngineOptions,
) -> Result<VerificationReport, Error> {
    if !claim.is_conjecture() {
        return Err(Error::Unsupported(format!("{claim} is not a conjecture")));
    }
    let opts = EngineOptions {
        sweep: SweepOptions { max_r },
        ..opts.clone()
    };
    verify_claim(claim, max_6n, &opts)
}

/// Re-runs a single instance, e.g. one taken from a report's `rerun` field.
pub fn verify_instance(claim: ClaimId, params: &Params) -> VerificationReport {
    let start = Instant::now();
    let failures: Vec<Failure> = verify::check(claim, params, &mut Workspace::new())
        .err()
        .into_iter()
        .collect();
    let outcome = Outcome::from_failures(claim, format!("single instance {params}"), 1, failures);
    VerificationReport {
        outcome,
        bound: 0,
        elapsed: start.elapsed(),
        notes: claim.notes().to_vec(),
    }
}

/// Every registered claim at the profile's bounds, in registry order.
pub fn verify_all(
    profile: BoundProfile,
    opts: &EngineOptions,
) -> Result<Vec<VerificationReport>, Error> {
    ClaimId::ALL
        .iter()
        .map(|&c| verify_claim(c, profile.bound(c), opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use qfib_core::Status;

    #[test]
    fn parallel_and_serial_agree() {
        let serial = EngineOptions {
            jobs: 1,
            ..Default::default()
        };
        let parallel = EngineOptions {
            jobs: 3,
            ..Default::default()
        };
        for claim in [ClaimId::Lemma1_1, ClaimId::Cor1_2, ClaimId::Thm2_1] {
            let a = verify_claim(claim, 40, &serial).unwrap();
            let b = verify_claim(claim, 40, &parallel).unwrap();
            assert_eq!(a.outcome, b.outcome, "{claim}");
        }
    }

    #[test]
    fn soft_limit_needs_override() {
        let opts = EngineOptions::default();
        assert!(matches!(
            verify_claim(ClaimId::Cassini1_9, 100_000, &opts),
            Err(Error::BoundTooLarge { .. })
        ));
    }

    #[test]
    fn scan_rejects_theorems() {
        assert!(scan_conjecture(ClaimId::Thm1_1, 60, 0, &EngineOptions::default()).is_err());
        let r = scan_conjecture(ClaimId::Conj3_2, 24, 1, &EngineOptions::default()).unwrap();
        assert_eq!(r.outcome.status, Status::Supported);
        assert_eq!(r.outcome.instances_checked, 8);
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn single_instance() {
        let p = Params::parse_for(ClaimId::Thm2_1, "k=1,m=2").unwrap();
        let r = verify_instance(ClaimId::Thm2_1, &p);
        assert!(r.passed());
        assert_eq!(r.outcome.instances_checked, 1);
    }
}
