//! Seeded random instances for sweeps, tests, and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{GAlphabet, Step};
use crate::relorder::Relation;
use crate::stepseq::StepSeq;

/// Deterministic generator for instance `i` of a sweep seeded with `seed`.
pub fn rng(seed: u64, i: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i)
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// Random alphabet over `n ≤ 26` events named `a, b, …`. Each unordered
/// pair is independently unrelated, synchronous, serializable one way or
/// both ways, or (when `with_inl`) interleaved.
pub fn alphabet(r: &mut impl Rng, n: usize, with_inl: bool) -> GAlphabet {
    let (mut sim, mut ser, mut inl) = (vec![0u64; n], vec![0u64; n], vec![0u64; n]);
    for i in 0..n {
        for j in i + 1..n {
            let kinds = if with_inl { 6 } else { 5 };
            match r.random_range(0..kinds) {
                0 => {}
                1 => {
                    sim[i] |= 1 << j;
                    sim[j] |= 1 << i;
                }
                2 | 3 => {
                    sim[i] |= 1 << j;
                    sim[j] |= 1 << i;
                    let (a, b) = if r.random_bool(0.5) { (i, j) } else { (j, i) };
                    ser[a] |= 1 << b;
                    if r.random_bool(0.4) {
                        ser[b] |= 1 << a;
                    }
                }
                4 => {
                    sim[i] |= 1 << j;
                    sim[j] |= 1 << i;
                    ser[i] |= 1 << j;
                    ser[j] |= 1 << i;
                }
                _ => {
                    inl[i] |= 1 << j;
                    inl[j] |= 1 << i;
                }
            }
        }
    }
    GAlphabet::from_rows(names(n), sim, ser, inl).expect("generated alphabet is valid")
}

/// Random step: events visited in random order, each kept with probability
/// one half when it stays a clique; never empty.
pub fn step(r: &mut impl Rng, alph: &GAlphabet) -> Step {
    let mut evs: Vec<usize> = (0..alph.len()).collect();
    evs.shuffle(r);
    let mut s = Step::singleton(evs[0]);
    for &e in &evs[1..] {
        if r.random_bool(0.5) && s.is_subset(alph.sim_row(e)) {
            s = s.union(Step::singleton(e));
        }
    }
    s
}

/// Random step sequence of exactly `len` steps.
pub fn stepseq(r: &mut impl Rng, alph: &GAlphabet, len: usize) -> StepSeq {
    (0..len).map(|_| step(r, alph)).collect()
}

/// Random relation with edge probability `p`.
pub fn relation(r: &mut impl Rng, n: usize, p: f64) -> Relation {
    let mut rel = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if r.random_bool(p) {
                rel.insert(a, b);
            }
        }
    }
    rel
}

/// Random irreflexive relation with edge probability `p`.
pub fn irreflexive_relation(r: &mut impl Rng, n: usize, p: f64) -> Relation {
    relation(r, n, p).minus(&Relation::identity(n))
}

/// Random ordered set partition of `0..n`, as layer masks.
pub fn ordered_partition(r: &mut impl Rng, n: usize) -> Vec<u64> {
    let k = if n == 0 { 0 } else { r.random_range(1..=n) };
    let mut layers = vec![0u64; k];
    for i in 0..n {
        layers[r.random_range(0..k)] |= 1 << i;
    }
    layers.retain(|&l| l != 0);
    layers
}
