//! Constructive duality: the greedy weighted-domination certificate, convex
//! decomposition of block-bounded vectors into partial transversals, and the
//! dual-rounding certificate for partitioned graphs.

mod certificate;
mod decompose;
mod greedy;

pub use certificate::{
    build_domination_certificate, normalize_unit_mass, parse_certificate_json, verify_certificate,
    verify_raw, CertificateAudit, CertificateViolation, ColumnMass, DominationCertificate,
    NormalizedMass,
};
pub use decompose::{decompose_box_product, ConvexDecomposition};
pub use greedy::{greedy_alpha_ge_gamma, GreedyCertificate, GreedyViolation};
