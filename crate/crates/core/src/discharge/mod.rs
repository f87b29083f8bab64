//! Charges, face classes, the rules and the claim/lemma audit.

mod audit;
mod faces;
mod rules;

pub use audit::{
    audit, face_allowance, AuditError, AuditReport, Claim, ClaimViolation, HighBoundViolation, Lemma, LemmaViolation,
};
pub use faces::{
    classify_face, classify_faces, sponsor_instances, sponsor_relation, FaceClass, FaceClassification, SponsorInstance,
    SponsorKind,
};
pub use rules::{
    apply_rules, apply_rules_with, initial_charges, Charge, ChargeLedger, Discharging, Element, R5Tag, Rule, Transfer,
    Witness, DEFAULT_T,
};
