use poisson_elim::dicksonian::{
    check_cofinite_window, check_dagger, check_leading_dicksonian, l_member_with_limit,
    search_leading_dicksonian, verify_claimed_subset, LemmaTag,
};
use poisson_elim::elimination::{
    full_reduce_with, is_partially_reduced, is_reduced, is_reduced_sequence, partial_reduce_with,
    verify_certificate, GeneratorSequence, ReduceOptions,
};
use poisson_elim::expr_io::{cert_to_value, parse_basis, parse_pairs, parse_poly, report_to_value};
use poisson_elim::{
    d_op, poisson_bracket, AlgebraSpec, DTuple, Error, MembershipReport, Polynomial, Sign,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Cli, Command};

pub struct Reply {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonTermination { .. } | Error::Internal(_) | Error::DegreeGapTooLarge { .. } => {
                3
            }
            _ => 2,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        message: msg.into(),
        code: 2,
    }
}

fn value(text: String, json: Value) -> Reply {
    Reply {
        text,
        json,
        code: 0,
    }
}

fn verdict(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn report(r: &MembershipReport) -> Reply {
    let mut lines = vec![format!("verdict: {}", r.verdict)];
    if let Some(w) = &r.witness {
        lines.push(format!("witness: {w}"));
    }
    if let Some((i, j)) = r.failing_pair {
        lines.push(format!("failing pair: ({i}, {j})"));
    }
    if !r.exceptions.is_empty() {
        let ex: Vec<String> = r.exceptions.iter().map(|b| b.to_string()).collect();
        lines.push(format!("exceptions: [{}]", ex.join(", ")));
    }
    if !r.notes.is_empty() {
        lines.push(format!("notes: {}", r.notes));
    }
    Reply {
        text: lines.join("\n"),
        json: report_to_value(r),
        code: verdict(r.verdict),
    }
}

fn window(w: &[i64]) -> Result<(i64, i64), Failure> {
    match w {
        [lo, hi] if lo <= hi => Ok((*lo, *hi)),
        _ => Err(usage("--window expects LO HI with LO <= HI")),
    }
}

fn polys(alg: AlgebraSpec, src: &[String]) -> Result<Vec<Polynomial>, Failure> {
    src.iter()
        .map(|s| parse_poly(alg, s).map_err(Failure::from))
        .collect()
}

pub fn run(cli: &Cli) -> Result<Reply, Failure> {
    let alg = cli.alg.ok_or_else(|| usage("--alg is required"))?;
    let opts = ReduceOptions {
        max_steps: cli.max_steps,
        max_gap: cli.max_degree_gap,
    };
    let poly = |s: &str| parse_poly(alg, s).map_err(Failure::from);
    let basis = |s: &str| parse_basis(alg, s).map_err(Failure::from);
    Ok(match &cli.command {
        Command::Bracket { a, b } => {
            let r = alg.bracket_basis(&basis(a)?, &basis(b)?)?;
            value(r.to_string(), json!({ "result": r.to_string() }))
        }
        Command::Pbracket { f, g } => {
            let r = poisson_bracket(&poly(f)?, &poly(g)?)?;
            value(r.to_string(), json!({ "result": r.to_string() }))
        }
        Command::Dop { f, tuple } => {
            let entries = tuple
                .iter()
                .map(|s| basis(s))
                .collect::<Result<Vec<_>, _>>()?;
            let t = DTuple::infer(alg, entries)?;
            let r = d_op(&poly(f)?, &t)?;
            value(
                r.to_string(),
                json!({ "tuple": t.to_string(), "result": r.to_string() }),
            )
        }
        Command::Leaders { f } => leaders(&poly(f)?)?,
        Command::Reduce { partial, g, by } => {
            let lambda = GeneratorSequence::new(alg, polys(alg, by)?)?;
            let g = poly(g)?;
            let (rem, cert) = if *partial {
                partial_reduce_with(alg, &g, &lambda, opts)?
            } else {
                full_reduce_with(alg, &g, &lambda, opts)?
            };
            if !verify_certificate(alg, &cert) {
                return Err(Failure {
                    message: format!("certificate failed verification: {cert}"),
                    code: 3,
                });
            }
            let text = format!("remainder: {rem}\nidentity: {cert}\nverified: true");
            value(text, cert_to_value(&cert))
        }
        Command::CheckReduced { g, by } => {
            let lambda = GeneratorSequence::new(alg, polys(alg, by)?)?;
            let g = poly(g)?;
            let partial = is_partially_reduced(alg, &g, &lambda)?;
            let full = is_reduced(alg, &g, &lambda)?;
            Reply {
                text: format!("partially reduced: {partial}\nreduced: {full}"),
                json: json!({ "partially_reduced": partial, "reduced": full }),
                code: verdict(full),
            }
        }
        Command::CheckReducedSeq { gens } => {
            let lambda = GeneratorSequence::new(alg, polys(alg, gens)?)?;
            let ok = is_reduced_sequence(alg, &lambda)?;
            Reply {
                text: format!("reduced sequence: {ok}"),
                json: json!({ "verdict": ok }),
                code: verdict(ok),
            }
        }
        Command::LMember { m, t, minus } => {
            let sign = if *minus { Sign::Minus } else { Sign::Plus };
            report(&l_member_with_limit(
                alg,
                &basis(m)?,
                &basis(t)?,
                sign,
                cli.max_degree_gap,
            )?)
        }
        Command::CheckDicksonian { pairs } => {
            report(&check_leading_dicksonian(alg, &parse_pairs(alg, pairs)?)?)
        }
        Command::SearchDicksonian {
            degree_bound,
            length_bound,
        } => {
            let s = search_leading_dicksonian(alg, *degree_bound, *length_bound)?;
            let shown: Vec<String> = s.iter().map(|(m, n)| format!("({m}, {n})")).collect();
            let text = format!("length: {}\nsequence: {}", s.len(), shown.join(" "));
            value(text, json!({ "length": s.len(), "sequence": shown }))
        }
        Command::VerifyLemma { lemma, bound } => {
            let tag: LemmaTag = lemma.parse()?;
            report(&verify_claimed_subset(alg, tag, *bound)?)
        }
        Command::CheckDagger { window: w } => {
            let (lo, hi) = window(w)?;
            report(&check_dagger(alg, lo, hi)?)
        }
        Command::CheckCofinite { m, window: w } => {
            let (lo, hi) = window(w)?;
            report(&check_cofinite_window(alg, &basis(m)?, lo, hi)?)
        }
        Command::JacobiTest {
            window: w,
            samples,
            seed,
        } => {
            let (lo, hi) = window(w)?;
            jacobi_test(alg, lo, hi, *samples, *seed)?
        }
    })
}

fn leaders(f: &Polynomial) -> Result<Reply, Failure> {
    let mut lines = Vec::new();
    let mut doc = serde_json::Map::new();
    for (name, sign) in [("upper", Sign::Plus), ("lower", Sign::Minus)] {
        let rank = f.rank(sign)?;
        let initial = f.initial(sign)?.to_string();
        let separant = f.separant(sign)?.to_string();
        lines.push(format!("{name} leader: {}", rank.leader));
        lines.push(format!("{name} degree: {}", rank.degree));
        lines.push(format!("{name} initial: {initial}"));
        lines.push(format!("{name} separant: {separant}"));
        lines.push(format!("{name} rank: {rank}"));
        doc.insert(
            name.into(),
            json!({
                "leader": rank.leader.to_string(),
                "degree": rank.degree,
                "initial": initial,
                "separant": separant,
            }),
        );
    }
    Ok(value(lines.join("\n"), Value::Object(doc)))
}

fn jacobi_test(
    alg: AlgebraSpec,
    lo: i64,
    hi: i64,
    samples: usize,
    seed: u64,
) -> Result<Reply, Failure> {
    let elems = alg.enumerate_window(lo, hi);
    if elems.is_empty() {
        return Err(usage(format!(
            "no basis elements of {alg} in degrees {lo}..={hi}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for _ in 0..samples {
        let [a, b, c] = [0; 3].map(|_| &elems[rng.random_range(0..elems.len())]);
        let ab = alg.bracket_basis(a, b)?;
        let ba = alg.bracket_basis(b, a)?;
        if !(&ab + &ba).is_zero() {
            failure = Some(format!("antisymmetry fails for ({a}, {b})"));
            break;
        }
        let res = alg.jacobi_residual(a, b, c)?;
        if !res.is_zero() {
            failure = Some(format!("Jacobi residual of ({a}, {b}, {c}) is {res}"));
            break;
        }
    }
    let r = match failure {
        None => MembershipReport::pass(format!(
            "{samples} triples from {} elements in degrees {lo}..={hi}, seed {seed}",
            elems.len()
        )),
        Some(msg) => MembershipReport::fail(msg),
    };
    Ok(report(&r))
}
