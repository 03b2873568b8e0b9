use serde::{Deserialize, Serialize};
use serde_json::error::Category;

use super::parse::{parse_basis, parse_poly};
use crate::dicksonian::MembershipReport;
use crate::elimination::{CertificateTerm, Multiplier, ReductionCertificate};
use crate::error::{Error, Result};
use crate::lie::AlgebraSpec;
use crate::poly::DTuple;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertDoc {
    format: u32,
    algebra: String,
    generators: Vec<String>,
    input: String,
    remainder: String,
    multipliers: Vec<MultDoc>,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultDoc {
    generator: usize,
    initial_exp: u32,
    sep_plus_exp: u32,
    sep_minus_exp: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: String,
    generator: usize,
    tuple: Option<Vec<String>>,
}

fn from_serde(e: serde_json::Error) -> Error {
    match e.classify() {
        Category::Data => Error::Schema(e.to_string()),
        _ => Error::Json(e.to_string()),
    }
}

fn cert_doc(c: &ReductionCertificate) -> CertDoc {
    CertDoc {
        format: FORMAT_VERSION,
        algebra: c.algebra.to_string(),
        generators: c.generators.iter().map(|f| f.to_string()).collect(),
        input: c.input.to_string(),
        remainder: c.remainder.to_string(),
        multipliers: c
            .multipliers
            .iter()
            .enumerate()
            .map(|(k, m)| MultDoc {
                generator: k,
                initial_exp: m.initial_exp,
                sep_plus_exp: m.sep_plus_exp,
                sep_minus_exp: m.sep_minus_exp,
            })
            .collect(),
        terms: c
            .terms
            .iter()
            .map(|t| TermDoc {
                coeff: t.coeff.to_string(),
                generator: t.generator,
                tuple: t
                    .tuple
                    .as_ref()
                    .map(|tu| tu.entries().iter().map(|b| b.to_string()).collect()),
            })
            .collect(),
    }
}

pub fn cert_to_value(c: &ReductionCertificate) -> serde_json::Value {
    serde_json::to_value(cert_doc(c)).expect("certificate documents serialize")
}

pub fn cert_to_json(c: &ReductionCertificate) -> String {
    serde_json::to_string_pretty(&cert_doc(c)).expect("certificate documents serialize")
}

pub fn cert_from_json(s: &str) -> Result<ReductionCertificate> {
    let doc: CertDoc = serde_json::from_str(s).map_err(from_serde)?;
    if doc.format != FORMAT_VERSION {
        return Err(Error::Schema(format!("unsupported format {}", doc.format)));
    }
    let alg: AlgebraSpec = doc
        .algebra
        .parse()
        .map_err(|e: Error| Error::Schema(e.to_string()))?;
    let poly = |s: &str| parse_poly(alg, s);
    let generators = doc
        .generators
        .iter()
        .map(|s| poly(s))
        .collect::<Result<Vec<_>>>()?;
    let mut multipliers = vec![Multiplier::default(); generators.len()];
    let mut seen = vec![false; generators.len()];
    for m in &doc.multipliers {
        if m.generator >= generators.len() || seen[m.generator] {
            return Err(Error::Schema(format!(
                "bad multiplier generator {}",
                m.generator
            )));
        }
        seen[m.generator] = true;
        multipliers[m.generator] = Multiplier {
            initial_exp: m.initial_exp,
            sep_plus_exp: m.sep_plus_exp,
            sep_minus_exp: m.sep_minus_exp,
        };
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.generator >= generators.len() {
            return Err(Error::Schema(format!(
                "term generator {} out of range",
                t.generator
            )));
        }
        let tuple = match &t.tuple {
            None => None,
            Some(entries) => {
                let entries = entries
                    .iter()
                    .map(|s| parse_basis(alg, s))
                    .collect::<Result<Vec<_>>>()?;
                Some(DTuple::infer(alg, entries)?)
            }
        };
        terms.push(CertificateTerm {
            coeff: poly(&t.coeff)?,
            generator: t.generator,
            tuple,
        });
    }
    Ok(ReductionCertificate {
        algebra: alg,
        generators,
        input: poly(&doc.input)?,
        remainder: poly(&doc.remainder)?,
        multipliers,
        terms,
    })
}

pub fn report_to_value(r: &MembershipReport) -> serde_json::Value {
    serde_json::json!({
        "verdict": r.verdict,
        "witness": r.witness.as_ref().map(|t| {
            t.entries().iter().map(|b| b.to_string()).collect::<Vec<_>>()
        }),
        "failing_pair": r.failing_pair.map(|(i, j)| [i, j]),
        "exceptions": r.exceptions.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

pub fn report_to_json(r: &MembershipReport) -> String {
    serde_json::to_string_pretty(&report_to_value(r)).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::{partial_reduce, verify_certificate, GeneratorSequence};

    fn e4_cert() -> ReductionCertificate {
        let w = AlgebraSpec::witt_positive();
        let l = GeneratorSequence::new(w, vec![parse_poly(w, "e[1]^2").unwrap()]).unwrap();
        partial_reduce(w, &parse_poly(w, "e[4]").unwrap(), &l)
            .unwrap()
            .1
    }

    #[test]
    fn round_trip() {
        let c = e4_cert();
        let s = cert_to_json(&c);
        let back = cert_from_json(&s).unwrap();
        assert_eq!(back, c);
        assert!(verify_certificate(back.algebra, &back));
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["format"], 1);
        assert_eq!(v["terms"][0]["coeff"], "1/2");
        assert_eq!(v["terms"][0]["tuple"][0], "e[3]");
    }

    #[test]
    fn empty_certificate() {
        let w = AlgebraSpec::witt_positive();
        let g = parse_poly(w, "e[2]").unwrap();
        let c = ReductionCertificate::identity(&g, &[parse_poly(w, "e[1]^2").unwrap()]);
        let v = cert_to_value(&c);
        assert_eq!(v["terms"], serde_json::json!([]));
        assert_eq!(cert_from_json(&cert_to_json(&c)).unwrap(), c);
    }

    #[test]
    fn schema_and_syntax_errors() {
        let mut v = cert_to_value(&e4_cert());
        v.as_object_mut().unwrap().remove("remainder");
        assert!(matches!(
            cert_from_json(&v.to_string()),
            Err(Error::Schema(_))
        ));
        assert!(matches!(
            cert_from_json("{\"format\": 1,"),
            Err(Error::Json(_))
        ));
        let mut v = cert_to_value(&e4_cert());
        v["format"] = 2.into();
        assert!(matches!(
            cert_from_json(&v.to_string()),
            Err(Error::Schema(_))
        ));
    }
}
