//! Command-line front end for the certifier: polynomial generation, single
//! certificates, family sweeps, the reference suite and the corpus.

pub mod family;
pub mod suite;
pub mod sweep;

pub use family::{generate, Family, Params, UsageError, MAX_BOXES, MAX_N};
pub use suite::{paper_suite, SuiteCheck, SuiteReport};
pub use sweep::{check, run_sweep, CheckOutcome, Mode, SweepFailure, SweepReport, SweepSpec};
