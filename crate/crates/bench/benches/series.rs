use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plethyra::coeffring::LaurentPoly;
use plethyra::equivariant::lefschetz_zeta;
use plethyra::genfun::{char_series, char_series_via_exp, macdonald_series, SpaceDescriptor};
use plethyra::verify::sample;

fn space(p: &str) -> SpaceDescriptor {
    SpaceDescriptor::new("X", p.parse::<LaurentPoly>().unwrap())
}

fn character_series(c: &mut Criterion) {
    let surface = space("1+2*z^2+z^4");
    let mut group = c.benchmark_group("char_series");
    for n in [4, 6, 8] {
        group.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| char_series(black_box(&surface), n))
        });
        group.bench_with_input(BenchmarkId::new("via_exp", n), &n, |b, &n| {
            b.iter(|| char_series_via_exp(black_box(&surface), n))
        });
    }
    group.finish();
}

fn specialized(c: &mut Criterion) {
    let curve = space("1-4*z+z^2");
    c.bench_function("macdonald_genus2_N24", |b| b.iter(|| macdonald_series(black_box(&curve), 24)));
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let s = sample::series(&mut rng, 8, 0);
    c.bench_function("plethystic_exp_N8", |b| b.iter(|| black_box(&s).plethystic_exp().unwrap()));
}

fn zeta(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let g = sample::endomorphism(&mut rng);
    c.bench_function("lefschetz_zeta_N12", |b| b.iter(|| lefschetz_zeta(black_box(&g), 12, true).unwrap()));
}

criterion_group!(benches, character_series, specialized, zeta);
criterion_main!(benches);
