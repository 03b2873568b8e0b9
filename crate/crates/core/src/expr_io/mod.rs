//! Text grammar for polynomials and basis elements, and JSON documents for
//! certificates and reports.

mod json;
mod parse;

pub use json::{
    cert_from_json, cert_to_json, cert_to_value, report_to_json, report_to_value, FORMAT_VERSION,
};
pub use parse::{parse_basis, parse_pairs, parse_poly, print_poly};
