//! Sequential versus rayon sweep over random g-comtrace instances: class
//! enumeration plus gso-structure construction per instance.

use std::hint::black_box;

use comtrace::alphabet::GAlphabet;
use comtrace::congruence::{self, DEFAULT_CLASS_CAP};
use comtrace::gen;
use comtrace::gsostruct;
use comtrace::par;
use comtrace::stepseq::StepSeq;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn instances(count: u64) -> Vec<(GAlphabet, StepSeq)> {
    (0..count)
        .map(|i| {
            let mut r = gen::rng(0xbe4c, i);
            let a = gen::alphabet(&mut r, 4, true);
            let s = gen::stepseq(&mut r, &a, 3);
            (a, s)
        })
        .collect()
}

fn work((a, s): &(GAlphabet, StepSeq)) -> usize {
    let class = congruence::enumerate_class(a, s, DEFAULT_CLASS_CAP).unwrap();
    let g = gsostruct::gso_of_stepseq(a, s).unwrap();
    class.len() + g.cmt.len()
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    for count in [256u64, 2048] {
        let items = instances(count);
        group.bench_with_input(BenchmarkId::new("sequential", count), &items, |b, items| {
            b.iter(|| black_box(par::map_seq(items, work)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("rayon", count), &items, |b, items| {
            b.iter(|| black_box(par::map_par(items, work)))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
