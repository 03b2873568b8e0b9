mod common;

use common::{random_poly, small_entries};
use poisson_elim::{
    d_op, parse_poly, partial_reduce, poisson_bracket, print_poly, verify_certificate, AlgebraSpec,
    BasisElement, DTuple, GeneratorSequence, Polynomial, Sign,
};
use proptest::prelude::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ALGEBRAS: [&str; 8] = [
    "witt+",
    "witt",
    "virasoro",
    "w1",
    "loop-sl2",
    "example-d",
    "cartan-w:2",
    "hamiltonian:2",
];

fn setup(name: &str, seed: u64) -> (AlgebraSpec, Vec<BasisElement>, ChaCha8Rng) {
    let alg: AlgebraSpec = name.parse().unwrap();
    let vars = alg
        .enumerate_window(-3, 3)
        .into_iter()
        .filter(|b| small_entries(b, 2))
        .collect();
    (alg, vars, ChaCha8Rng::seed_from_u64(seed))
}

fn algebra() -> impl Strategy<Value = &'static str> {
    proptest::sample::select(&ALGEBRAS[..])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric(name in algebra(), seed in any::<u64>()) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 3, 2);
        let g = random_poly(&mut rng, alg, &vars, 3, 2);
        let fg = poisson_bracket(&f, &g).unwrap();
        let gf = poisson_bracket(&g, &f).unwrap();
        prop_assert_eq!(fg, -&gf);
    }

    #[test]
    fn leibniz_rule(name in algebra(), seed in any::<u64>()) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 3, 2);
        let g = random_poly(&mut rng, alg, &vars, 3, 2);
        let h = random_poly(&mut rng, alg, &vars, 3, 2);
        let lhs = poisson_bracket(&(&f * &g), &h).unwrap();
        let rhs = &(&f * &poisson_bracket(&g, &h).unwrap())
            + &(&g * &poisson_bracket(&f, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn poisson_jacobi(name in algebra(), seed in any::<u64>()) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 2, 2);
        let g = random_poly(&mut rng, alg, &vars, 2, 2);
        let h = random_poly(&mut rng, alg, &vars, 2, 2);
        let pb = |a: &Polynomial, b: &Polynomial| poisson_bracket(a, b).unwrap();
        let sum = &(&pb(&pb(&f, &g), &h) + &pb(&pb(&g, &h), &f)) + &pb(&pb(&h, &f), &g);
        prop_assert!(sum.is_zero(), "{}", sum);
    }

    #[test]
    fn d_op_is_an_iterated_bracket(name in algebra(), seed in any::<u64>(), len in 1usize..4) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 3, 2);
        let sign = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let pool: Vec<BasisElement> = vars
            .iter()
            .filter(|b| match sign {
                Sign::Plus => b.degree() > 0,
                Sign::Minus => b.degree() < 0,
            })
            .cloned()
            .collect();
        prop_assume!(!pool.is_empty());
        let entries: Vec<BasisElement> =
            (0..len).map(|_| pool.choose(&mut rng).unwrap().clone()).collect();
        let t = DTuple::new(alg, entries.clone(), sign).unwrap();
        let folded = entries.iter().fold(f.clone(), |acc, b| {
            poisson_bracket(&acc, &Polynomial::var(alg, b.clone()).unwrap()).unwrap()
        });
        prop_assert_eq!(d_op(&f, &t).unwrap(), folded);
    }

    #[test]
    fn bracket_respects_the_grading(name in algebra(), seed in any::<u64>()) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 1, 3);
        let g = random_poly(&mut rng, alg, &vars, 1, 3);
        let fg = poisson_bracket(&f, &g).unwrap();
        if !fg.is_zero() {
            let w = f.homogeneous_weight().unwrap() + g.homogeneous_weight().unwrap();
            prop_assert_eq!(fg.homogeneous_weight(), Some(w));
        }
    }

    #[test]
    fn print_parse_round_trip(name in algebra(), seed in any::<u64>()) {
        let (alg, vars, mut rng) = setup(name, seed);
        let f = random_poly(&mut rng, alg, &vars, 6, 4);
        let text = print_poly(alg, &f);
        prop_assert_eq!(parse_poly(alg, &text).unwrap(), f);
    }

    #[test]
    fn partial_reduction_certificates_verify(seed in any::<u64>()) {
        let alg = AlgebraSpec::witt_positive();
        let vars: Vec<BasisElement> = (1..=4).map(BasisElement::E).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_poly(&mut rng, alg, &vars, 2, 2);
        let g = random_poly(&mut rng, alg, &vars, 3, 3);
        let l = GeneratorSequence::new(alg, vec![f]).unwrap();
        let (rem, cert) = partial_reduce(alg, &g, &l).unwrap();
        prop_assert_eq!(&cert.remainder, &rem);
        prop_assert!(verify_certificate(alg, &cert), "{}", cert);
    }
}
