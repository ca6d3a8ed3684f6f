//! Classification harness and instance checks.

pub mod checks;
pub mod enumerate;
pub mod report;
pub mod suite;

pub use checks::*;
pub use enumerate::{classify, enumerate_dissecting, equivalent_triples, find_witness, Classification, PairOutcome, Witness};
pub use report::{TripleRecord, VerificationReport};
pub use suite::{classification_reports, paper_suite, signature_reports, MAX_SUITE_N};
