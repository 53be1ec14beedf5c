//! Certifying predicates for the Nordhaus–Gaddum bounds, the supporting
//! eigenvalue lemmas, and exact replays of the proof algebra.

mod checks;
mod decide;
mod families;
mod lemmas;
mod proofs;
mod report;

pub use checks::{
    check, check_lemma210, check_lemma26, check_lemma27, check_lemma28, check_lemma29, check_problem12,
    check_regular_bound, check_thm12, check_thm13, check_thm14, check_thm15, check_thm16, BoundId, NgOptions,
};
pub use decide::{interval_sign, Checker, Decision, GraphSpectra, PairSpectra};
pub use families::{
    bipartite_catalogue, connected_upper_families, disconnected_complement_families, lower_bound_families,
    match_family, member_by_name, regular_extremal_families, FamilyMatch, FamilyMember,
};
pub use lemmas::LemmaResult;
pub use proofs::{proof_check_thm12, proof_check_thm15, ProofReport, ProofStep, QuadNumber, FACTOR_CHECK_ORDER};
pub use report::{write_csv, write_json_lines, BoundReport, ExtremalCertificate, Relation, Verdict, CSV_HEADER};
