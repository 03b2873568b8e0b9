//! Partial and full reduction modulo a generator sequence, with
//! certificates that can be checked by plain expansion.

mod certificate;
mod reduce;

pub use certificate::{verify_certificate, CertificateTerm, Multiplier, ReductionCertificate};
pub use reduce::{
    full_reduce, full_reduce_with, is_partially_reduced, is_reduced, is_reduced_sequence,
    partial_reduce, partial_reduce_with, GeneratorSequence, ReduceOptions, DEFAULT_MAX_STEPS,
};
