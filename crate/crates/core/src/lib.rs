//! Exact arithmetic for q-Fibonacci polynomials.
//!
//! Everything here is pure and allocation-only (`no_std` + `alloc`): dense
//! integer polynomials, q-integers, Gaussian binomials, cyclotomic
//! polynomials and the residue rings `Z[q]/(Phi_n)`, the Schur-Carlitz and
//! Cigler q-Fibonacci families, the Rogers-Ramanujan polynomial sums, and a
//! registry of divisibility claims with one exact checker per claim.
//!
//! Timing, parallel fan-out, report serialization and the command line live
//! in the `qfib` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod poly;
pub mod qcore;
pub mod qfib;
pub mod residue;
pub mod rr;
pub mod verify;

pub use error::{Error, ParseError};
pub use poly::IntPoly;
pub use qcore::{
    binomial_row, cyclo_spectrum, cyclotomic, q_binom, q_int, CyclotomicTable, PascalRows,
};
pub use qfib::{cassini, fib, fib_sum, int_fib, matrix_product, vp, FamilyId, FibCache, FibMatrix};
pub use residue::{QuotientRing, Residue};
pub use verify::{ClaimId, Failure, Outcome, Params, Status, Value, Workspace};

pub use num_bigint::{BigInt, BigUint};

pub type Result<T, E = Error> = core::result::Result<T, E>;
