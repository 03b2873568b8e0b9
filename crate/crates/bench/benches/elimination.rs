use criterion::{criterion_group, criterion_main, Criterion};
use poisson_elim::dicksonian::{l_condition_holds, l_member_with_limit, tuple_space};
use poisson_elim::{
    full_reduce, parse_poly, partial_reduce, poisson_bracket, AlgebraSpec, BasisElement,
    GeneratorSequence, MultiIndex, Sign,
};
use std::hint::black_box;

fn brackets(c: &mut Criterion) {
    let w3 = AlgebraSpec::cartan_w(3).unwrap();
    let window = w3.enumerate_window(-1, 2);
    c.bench_function("bracket_basis cartan-w:3 window", |b| {
        b.iter(|| {
            for x in &window {
                for y in &window {
                    black_box(w3.bracket_basis(x, y).unwrap());
                }
            }
        })
    });
    let witt = AlgebraSpec::witt();
    let f = parse_poly(witt, "e[-2]^2*e[3] + 3*e[-1]*e[1]^2 - e[4]").unwrap();
    let g = parse_poly(witt, "e[2]*e[-3] - 1/2*e[1]^3 + e[-1]^2").unwrap();
    c.bench_function("poisson_bracket witt", |b| {
        b.iter(|| black_box(poisson_bracket(&f, &g).unwrap()))
    });
}

fn membership(c: &mut Criterion) {
    let h = AlgebraSpec::hamiltonian(2).unwrap();
    let m = BasisElement::DH(MultiIndex::new(vec![1, 2]));
    let targets = h.enumerate_window(2, 4);
    c.bench_function("l_member hamiltonian:2 cached", |b| {
        b.iter(|| {
            for t in &targets {
                black_box(l_member_with_limit(h, &m, t, Sign::Plus, 24).unwrap());
            }
        })
    });
    let witt = AlgebraSpec::witt();
    let tuples = tuple_space(witt, 3, Sign::Plus).unwrap();
    c.bench_function("l_condition_holds witt gap 3", |b| {
        b.iter(|| {
            for n in -4..=4 {
                for t in &tuples {
                    black_box(l_condition_holds(witt, &BasisElement::E(n), t).ok());
                }
            }
        })
    });
}

fn reduction(c: &mut Criterion) {
    let w = AlgebraSpec::witt_positive();
    let l = GeneratorSequence::new(w, vec![parse_poly(w, "e[1]^2 + e[2]").unwrap()]).unwrap();
    let g = parse_poly(w, "e[3]^2*e[5] - 2*e[4]*e[1]^3 + e[6]").unwrap();
    c.bench_function("partial_reduce witt+", |b| {
        b.iter(|| black_box(partial_reduce(w, &g, &l).unwrap()))
    });
    c.bench_function("full_reduce witt+", |b| {
        b.iter(|| black_box(full_reduce(w, &g, &l).unwrap()))
    });
}

criterion_group!(benches, brackets, membership, reduction);
criterion_main!(benches);
