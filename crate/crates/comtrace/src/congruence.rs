//! The rewriting relation generated by step split/join over `ser` and
//! adjacent swaps over `inl`, equivalence classes, and class composition.

use std::collections::{HashSet, VecDeque};

use crate::alphabet::{GAlphabet, Step};
use crate::error::{Error, Result};
use crate::stepseq::{self, StepSeq};

/// Default cap on materialized class size.
pub const DEFAULT_CLASS_CAP: usize = 100_000;

/// A materialized (g-)comtrace: every member of one equivalence class,
/// ordered by rendered text.
#[derive(Debug, Clone)]
pub struct ClassSet {
    members: Vec<StepSeq>,
    rendered: Vec<String>,
    index: HashSet<StepSeq>,
}

impl PartialEq for ClassSet {
    fn eq(&self, o: &Self) -> bool {
        self.rendered == o.rendered
    }
}

impl Eq for ClassSet {}

impl ClassSet {
    /// Builds a class from its members; order and duplicates are normalized.
    pub fn from_members(alph: &GAlphabet, members: impl IntoIterator<Item = StepSeq>) -> Self {
        let index: HashSet<StepSeq> = members.into_iter().collect();
        let mut pairs: Vec<(String, StepSeq)> = index.iter().map(|m| (stepseq::render(alph, m), m.clone())).collect();
        pairs.sort();
        let (rendered, members) = pairs.into_iter().unzip();
        ClassSet { members, rendered, index }
    }

    pub fn members(&self) -> &[StepSeq] {
        &self.members
    }

    pub fn rendered(&self) -> &[String] {
        &self.rendered
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &[Step]) -> bool {
        self.index.contains(s)
    }

    /// Lexicographically least rendered member.
    pub fn representative(&self) -> &str {
        &self.rendered[0]
    }
}

/// Every `t` with `s ≈ t` or `t ≈ s`, sorted and without duplicates.
pub fn rewrite_neighbors(alph: &GAlphabet, s: &[Step]) -> Vec<StepSeq> {
    let mut out = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for b in a.subsets() {
            let c = a.minus(b);
            if c.is_empty() || !alph.ser_product(b, c) {
                continue;
            }
            let mut t = Vec::with_capacity(s.len() + 1);
            t.extend_from_slice(&s[..i]);
            t.push(b);
            t.push(c);
            t.extend_from_slice(&s[i + 1..]);
            out.push(t);
        }
    }
    for i in 0..s.len().saturating_sub(1) {
        let (b, c) = (s[i], s[i + 1]);
        if alph.ser_product(b, c) {
            let mut t = Vec::with_capacity(s.len() - 1);
            t.extend_from_slice(&s[..i]);
            t.push(b.union(c));
            t.extend_from_slice(&s[i + 2..]);
            out.push(t);
        }
        if alph.inl_product(b, c) {
            let mut t = s.to_vec();
            t.swap(i, i + 1);
            out.push(t);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Breadth-first closure of [`rewrite_neighbors`] from `s`.
pub fn enumerate_class(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<ClassSet> {
    let seen = closure(alph, s, cap, |_| false)?.0;
    Ok(ClassSet::from_members(alph, seen))
}

fn closure(
    alph: &GAlphabet,
    s: &[Step],
    cap: usize,
    stop: impl Fn(&StepSeq) -> bool,
) -> Result<(HashSet<StepSeq>, bool)> {
    let mut seen: HashSet<StepSeq> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(s.to_vec());
    queue.push_back(s.to_vec());
    if stop(&s.to_vec()) {
        return Ok((seen, true));
    }
    while let Some(cur) = queue.pop_front() {
        for t in rewrite_neighbors(alph, &cur) {
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return Err(Error::ClassCapExceeded(cap));
                }
                if stop(&t) {
                    seen.insert(t);
                    return Ok((seen, true));
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    Ok((seen, false))
}

/// `s ≡ t`. Differing weights or event counts answer `false` at once; for
/// `inl = ∅` canonical forms are compared, otherwise the class of `s` is
/// searched for `t`.
pub fn equivalent(alph: &GAlphabet, s: &[Step], t: &[Step], cap: usize) -> Result<bool> {
    if stepseq::counts(s, alph.len()) != stepseq::counts(t, alph.len()) {
        return Ok(false);
    }
    if alph.inl_is_empty() {
        return Ok(crate::canonical::canonicalize(alph, s)? == crate::canonical::canonicalize(alph, t)?);
    }
    equivalent_search(alph, s, t, cap)
}

/// `s ≡ t` by class search only.
pub fn equivalent_search(alph: &GAlphabet, s: &[Step], t: &[Step], cap: usize) -> Result<bool> {
    if stepseq::counts(s, alph.len()) != stepseq::counts(t, alph.len()) {
        return Ok(false);
    }
    Ok(closure(alph, s, cap, |x| x.as_slice() == t)?.1)
}

/// `[s] ⊛ [t] = [st]`.
pub fn compose_classes(alph: &GAlphabet, s: &[Step], t: &[Step], cap: usize) -> Result<ClassSet> {
    let mut st = s.to_vec();
    st.extend_from_slice(t);
    enumerate_class(alph, &st, cap)
}
