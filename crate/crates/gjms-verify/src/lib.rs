//! Verification harness over the operator library: named suites evaluate
//! identities, transform equivalences, and inequality margins on parameter
//! grids and emit deterministic reports plus CSV tables.

pub mod grid;
pub mod report;
pub mod suites;

pub use grid::{GridScale, GridSpec};
pub use report::{Case, CheckKind, Summary, ToleranceConfig, VerificationReport};
pub use suites::{list_suites, run_suite, SuiteConfig};
