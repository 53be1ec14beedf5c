//! Canonical forms, isomorph-free generation and exhaustive scans.

mod canon;
mod generate;
mod scan;

pub use canon::{canonical_form, canonical_labeling, isomorphism, CanonicalForm, MAX_CANON_ORDER};
pub use generate::{dedup_stream, enumerate_forms, enumerate_graphs, MAX_GENERATED_ORDER};
pub use scan::{scan, scan_graphs, LinearInN, ScanFilter, ScanOptions, ScanPredicate, ScanResult};
