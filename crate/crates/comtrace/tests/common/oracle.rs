//! Brute-force oracles written directly from the definitions, independent
//! of the library's search strategies.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use comtrace::alphabet::{GAlphabet, Step};
use comtrace::relorder::Relation;
use comtrace::stepseq::{self, Carrier, StepSeq};
use rand::seq::SliceRandom;
use rand::Rng;

/// Nonempty `sim`-cliques by plain subset enumeration.
pub fn cliques(a: &GAlphabet) -> BTreeSet<Step> {
    let n = a.len();
    (1u64..(1 << n))
        .map(Step)
        .filter(|s| s.iter().all(|x| s.iter().all(|y| x == y || a.sim(x, y))))
        .collect()
}

fn ser_all(a: &GAlphabet, b: Step, c: Step) -> bool {
    b.iter().all(|x| c.iter().all(|y| a.ser(x, y)))
}

fn inl_all(a: &GAlphabet, b: Step, c: Step) -> bool {
    b.iter().all(|x| c.iter().all(|y| a.inl(x, y)))
}

/// `t ≈ u`: `t = wAz`, `u = wBCz` with `A = B ⊎ C`, `B × C ⊆ ser`; or
/// `t = wABz`, `u = wBAz` with `A × B ⊆ inl`.
pub fn one_step(a: &GAlphabet, t: &[Step], u: &[Step]) -> bool {
    if u.len() == t.len() + 1 {
        for i in 0..t.len() {
            if t[..i] == u[..i] && t[i + 1..] == u[i + 2..] {
                let (b, c, x) = (u[i], u[i + 1], t[i]);
                if b.inter(c).is_empty() && b.union(c) == x && ser_all(a, b, c) {
                    return true;
                }
            }
        }
    }
    if u.len() == t.len() && t.len() >= 2 {
        for i in 0..t.len() - 1 {
            if t[..i] == u[..i]
                && t[i + 2..] == u[i + 2..]
                && t[i] == u[i + 1]
                && t[i + 1] == u[i]
                && inl_all(a, t[i], t[i + 1])
            {
                return true;
            }
        }
    }
    false
}

/// Every step sequence over the clique universe with the given event counts.
pub fn sequences_with_counts(a: &GAlphabet, counts: &[usize]) -> Vec<StepSeq> {
    let steps: Vec<Step> = cliques(a).into_iter().collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut left = counts.to_vec();
    fn rec(steps: &[Step], left: &mut Vec<usize>, cur: &mut StepSeq, out: &mut Vec<StepSeq>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for &s in steps {
            if s.iter().all(|e| left[e] > 0) {
                s.iter().for_each(|e| left[e] -= 1);
                cur.push(s);
                rec(steps, left, cur, out);
                cur.pop();
                s.iter().for_each(|e| left[e] += 1);
            }
        }
    }
    rec(&steps, &mut left, &mut cur, &mut out);
    out
}

/// The class of `s` as the connected component of `(≈ ∪ ≈⁻¹)` among all
/// sequences with the same event counts.
pub fn class(a: &GAlphabet, s: &[Step]) -> BTreeSet<StepSeq> {
    let all = sequences_with_counts(a, &stepseq::counts(s, a.len()));
    let mut seen = vec![false; all.len()];
    let start = all.iter().position(|x| x == s).expect("s is among its count class");
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(i) = q.pop_front() {
        for j in 0..all.len() {
            if !seen[j] && (one_step(a, &all[i], &all[j]) || one_step(a, &all[j], &all[i])) {
                seen[j] = true;
                q.push_back(j);
            }
        }
    }
    all.into_iter().zip(seen).filter(|(_, k)| *k).map(|(x, _)| x).collect()
}

/// Every ordered set partition of `0..n`, as layer masks.
pub fn ordered_partitions(n: usize) -> Vec<Vec<u64>> {
    fn rec(rem: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let mut sub = rem;
        while sub != 0 {
            cur.push(sub);
            rec(rem & !sub, cur, out);
            cur.pop();
            sub = (sub - 1) & rem;
        }
    }
    let mut out = Vec::new();
    rec((1u64 << n) - 1, &mut Vec::new(), &mut out);
    out
}

/// `◁` of a layer list, by positions.
pub fn order_of_layers(n: usize, layers: &[u64]) -> Relation {
    let pos = positions(n, layers);
    let mut r = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if pos[a] < pos[b] {
                r.insert(a, b);
            }
        }
    }
    r
}

pub fn positions(n: usize, layers: &[u64]) -> Vec<usize> {
    let mut pos = vec![0; n];
    for (i, &l) in layers.iter().enumerate() {
        for (a, p) in pos.iter_mut().enumerate() {
            if l >> a & 1 == 1 {
                *p = i;
            }
        }
    }
    pos
}

/// Stratified extensions of `(≺, ⊏)` by filtering all ordered partitions.
pub fn so_extensions(n: usize, prec: &Relation, wc: &Relation) -> BTreeSet<Vec<u64>> {
    ordered_partitions(n)
        .into_iter()
        .filter(|l| {
            let p = positions(n, l);
            prec.pairs().iter().all(|&(a, b)| p[a] < p[b]) && wc.pairs().iter().all(|&(a, b)| p[a] <= p[b])
        })
        .collect()
}

/// Stratified extensions of `(<>, ⊏)` by filtering all ordered partitions.
pub fn gso_extensions(n: usize, cmt: &Relation, wc: &Relation) -> BTreeSet<Vec<u64>> {
    ordered_partitions(n)
        .into_iter()
        .filter(|l| {
            let p = positions(n, l);
            cmt.pairs().iter().all(|&(a, b)| p[a] != p[b]) && wc.pairs().iter().all(|&(a, b)| p[a] <= p[b])
        })
        .collect()
}

/// Layer lists of the members of a class over the carrier of `s`.
pub fn member_layers(a: &GAlphabet, s: &[Step], members: &[StepSeq]) -> BTreeSet<Vec<u64>> {
    let carrier = stepseq::enumerate_occurrences(a, s).unwrap().carrier;
    members.iter().map(|m| stepseq::enumerate_on(&carrier, m).layers).collect()
}

/// Occurrence alphabet of `s`: one event per point of `Σ_s`, relations
/// lifted through labels.
pub fn occurrence_alphabet(a: &GAlphabet, carrier: &Carrier) -> GAlphabet {
    let n = carrier.len();
    let lift = |f: &dyn Fn(usize, usize) -> bool| -> Vec<u64> {
        (0..n)
            .map(|i| (0..n).filter(|&j| f(carrier.label(i), carrier.label(j))).fold(0u64, |m, j| m | 1 << j))
            .collect()
    };
    let names = (0..n).map(|i| carrier.point_name(i).replace('.', "_")).collect();
    GAlphabet::from_rows(names, lift(&|x, y| a.sim(x, y)), lift(&|x, y| a.ser(x, y)), lift(&|x, y| a.inl(x, y)))
        .expect("lifted alphabet is valid")
}

/// A random step sequence with the same event counts as `s`.
pub fn shuffle_counts(r: &mut impl Rng, a: &GAlphabet, s: &[Step]) -> StepSeq {
    let mut evs: Vec<usize> = s.iter().flat_map(|x| x.iter()).collect();
    evs.shuffle(r);
    let mut out: StepSeq = Vec::new();
    for e in evs {
        match out.last_mut() {
            Some(last) if !last.contains(e) && last.is_subset(a.sim_row(e)) && r.random_bool(0.5) => {
                *last = last.union(Step::singleton(e));
            }
            _ => out.push(Step::singleton(e)),
        }
    }
    out
}

/// Every partial order on `n` labelled points.
pub fn posets(n: usize) -> Vec<Relation> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    (0u64..(1 << slots.len()))
        .map(|bits| Relation::from_pairs(n, slots.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &p)| p)))
        .filter(|r| r.is_transitive() && r.inter(&r.inverse()).is_empty())
        .collect()
}
