//! Desk-scale verification campaigns: instance enumeration, exact bound
//! arithmetic, and machine-readable pass/fail reports.

pub mod bounds;
pub mod campaigns;
pub mod enumerate;
pub mod report;

pub use bounds::{bounds_scan, check_power_inequality, theorem_bounds, BoundSummary, PowerInequalityReport};
pub use campaigns::{
    check_neighborhood_dichotomy, verify_clique_dichotomy, verify_colex_plateau,
    verify_compression_monotone, verify_frankl_furedi, verify_motzkin_straus, CorpusSpec,
    NeighborhoodDiagnostic,
};
pub use enumerate::{canonical_signature, enumerate_graphs, is_canonical_representative};
pub use report::{Campaign, Summary, VerificationRecord};

/// splitmix64: derives a per-instance solver seed from the campaign seed so
/// reports are independent of worker count and iteration order.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9e3779b97f4a7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
