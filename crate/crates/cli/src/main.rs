mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poisson_elim::AlgebraSpec;

#[derive(Parser, Debug)]
#[command(
    name = "pelim",
    version,
    about = "Poisson elimination and leader-set calculus"
)]
pub struct Cli {
    /// Algebra, e.g. witt+, witt, w1, virasoro, cartan-w:3, special-s:2,
    /// hamiltonian:4, contact:3, loop-sl2, example-d.
    #[arg(long, global = true, value_parser = parse_alg)]
    pub alg: Option<AlgebraSpec>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest degree gap searched when deciding L± membership.
    #[arg(long, global = true, default_value_t = poisson_elim::dicksonian::DEFAULT_MAX_GAP)]
    pub max_degree_gap: i64,

    /// Rewrite step limit for the elimination algorithm.
    #[arg(long, global = true, default_value_t = poisson_elim::elimination::DEFAULT_MAX_STEPS)]
    pub max_steps: usize,

    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lie bracket of two basis elements.
    Bracket { a: String, b: String },
    /// Poisson bracket of two polynomials.
    Pbracket {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Iterated Poisson bracket {{f, M1}, M2}, ...
    Dop {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(required = true)]
        tuple: Vec<String>,
    },
    /// Leaders, degrees, initials, separants and ranks of a polynomial.
    Leaders {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Reduce G modulo the generator sequence.
    Reduce {
        #[arg(long)]
        partial: bool,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, required = true, num_args = 1..)]
        by: Vec<String>,
    },
    /// Report whether G is partially reduced and reduced modulo the generators.
    CheckReduced {
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, required = true, num_args = 1..)]
        by: Vec<String>,
    },
    /// Is the generator sequence reduced?
    CheckReducedSeq {
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// Decide T ∈ L+(M), or L-(M) with --minus.
    LMember {
        m: String,
        t: String,
        #[arg(long)]
        minus: bool,
    },
    /// Check a sequence written as "(M1,N1) (M2,N2) ...".
    CheckDicksonian { pairs: String },
    /// Greedy search for a long leading Dicksonian sequence.
    SearchDicksonian {
        #[arg(long)]
        degree_bound: i64,
        #[arg(long)]
        length_bound: usize,
    },
    /// Check a claimed Dicksonian subset on a bounded box of multi-indices.
    VerifyLemma {
        #[arg(value_parser = ["W_i", "W_ii", "S_i", "S_ii", "H_1", "H_2", "K_1", "K_2"])]
        lemma: String,
        #[arg(long)]
        bound: u32,
    },
    /// Check both structural hypotheses on a degree window.
    CheckDagger {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Vec<i64>,
    },
    /// Check that L+(M) and L-(M) are cofinite on a degree window.
    CheckCofinite {
        m: String,
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Vec<i64>,
    },
    /// Antisymmetry and Jacobi on seeded random basis triples.
    JacobiTest {
        #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_negative_numbers = true)]
        window: Vec<i64>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_alg(s: &str) -> Result<AlgebraSpec, String> {
    s.parse().map_err(|e: poisson_elim::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(reply) => {
            let mut out = std::io::stdout().lock();
            let body = match cli.format {
                Format::Text => reply.text,
                Format::Json => {
                    serde_json::to_string_pretty(&reply.json).expect("json values serialize")
                }
            };
            let _ = writeln!(out, "{body}");
            ExitCode::from(reply.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
