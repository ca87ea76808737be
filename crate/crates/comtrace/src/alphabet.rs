//! Trace, comtrace and g-comtrace alphabets, steps, and derived relations.
//!
//! Events are indexed `0..n`; the index order is the total order `<E` used by
//! the step order. By default it is the lexicographic order on names.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of events; steps are stored as 64-bit masks.
pub const MAX_EVENTS: usize = 64;

/// Default cap on the number of steps materialized by [`GAlphabet::steps_universe`].
pub const DEFAULT_UNIVERSE_CAP: usize = 1 << 16;

/// A set of events stored as a bitmask over event indices.
///
/// A `Step` is only meaningful as a step of an alphabet when it is nonempty
/// and a clique of `sim`; see [`GAlphabet::is_step`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Step(pub u64);

impl Step {
    pub const EMPTY: Step = Step(0);

    pub fn singleton(e: usize) -> Step {
        Step(1 << e)
    }

    pub fn from_events<I: IntoIterator<Item = usize>>(it: I) -> Step {
        Step(it.into_iter().fold(0, |m, e| m | (1 << e)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn union(self, o: Step) -> Step {
        Step(self.0 | o.0)
    }

    pub fn inter(self, o: Step) -> Step {
        Step(self.0 & o.0)
    }

    pub fn minus(self, o: Step) -> Step {
        Step(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Step) -> bool {
        self.0 & !o.0 == 0
    }

    /// Least event under `<E`, if any.
    pub fn least(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing `<E` order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(e)
            }
        })
    }

    /// All nonempty subsets of `self`, including `self`.
    pub fn subsets(self) -> impl Iterator<Item = Step> {
        let full = self.0;
        let mut sub = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let cur = sub;
            if sub == 0 {
                done = true;
                return None;
            }
            sub = (sub - 1) & full;
            if sub == 0 {
                done = true;
            }
            Some(Step(cur))
        })
    }
}

impl fmt::Debug for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Kind of alphabet, from most to least specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphabetKind {
    /// `inl = ∅` and `sim = ser` (a lifted trace alphabet).
    Trace,
    /// `inl = ∅`.
    Comtrace,
    /// General g-comtrace alphabet.
    GComtrace,
}

/// Unvalidated alphabet description, as read from a file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawAlphabet {
    pub events: Vec<String>,
    pub sim: Vec<(String, String)>,
    pub ser: Vec<(String, String)>,
    pub inl: Vec<(String, String)>,
}

/// A validated g-comtrace alphabet `(E, sim, ser, inl)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GAlphabet {
    names: Vec<String>,
    sim: Vec<u64>,
    ser: Vec<u64>,
    inl: Vec<u64>,
}

impl fmt::Debug for GAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GAlphabet {{ events: {:?}", self.names)?;
        for (tag, rel) in [("sim", &self.sim), ("ser", &self.ser), ("inl", &self.inl)] {
            write!(f, ", {tag}: {}", self.render_pairs(rel))?;
        }
        write!(f, " }}")
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Validates a raw description. Events are ordered lexicographically by name;
/// `sim` and `inl` pairs are symmetrized, `ser` is taken as written.
pub fn validate_alphabet(raw: &RawAlphabet) -> Result<GAlphabet> {
    let mut names = raw.events.clone();
    names.sort();
    build(names, raw)
}

/// Like [`validate_alphabet`], but `<E` is given explicitly by `order`,
/// which must list every event exactly once.
pub fn validate_alphabet_with_order(raw: &RawAlphabet, order: &[String]) -> Result<GAlphabet> {
    let mut a = raw.events.clone();
    let mut b = order.to_vec();
    a.sort();
    b.sort();
    if a != b {
        return Err(Error::Parse(format!(
            "order {:?} is not a permutation of the events {:?}",
            order, a
        )));
    }
    build(order.to_vec(), raw)
}

fn build(names: Vec<String>, raw: &RawAlphabet) -> Result<GAlphabet> {
    if names.len() > MAX_EVENTS {
        return Err(Error::CarrierTooLarge { size: names.len(), cap: MAX_EVENTS });
    }
    for (i, n) in names.iter().enumerate() {
        if !valid_name(n) {
            return Err(Error::Parse(format!("invalid event name {n:?}")));
        }
        if names[..i].contains(n) {
            return Err(Error::Parse(format!("duplicate event {n}")));
        }
    }
    let idx = |s: &str| {
        names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| Error::UnknownEvent(s.to_string()))
    };
    let n = names.len();
    let mut rels = [vec![0u64; n], vec![0u64; n], vec![0u64; n]];
    for (k, pairs) in [&raw.sim, &raw.ser, &raw.inl].into_iter().enumerate() {
        for (x, y) in pairs {
            let (i, j) = (idx(x)?, idx(y)?);
            rels[k][i] |= 1 << j;
            if k != 1 {
                rels[k][j] |= 1 << i;
            }
        }
    }
    let [sim, ser, inl] = rels;
    GAlphabet::from_rows(names, sim, ser, inl)
}

impl GAlphabet {
    /// Builds an alphabet from adjacency rows over event indices; `sim` and
    /// `inl` must already be symmetric. Events keep the given order as `<E`.
    pub fn from_rows(names: Vec<String>, sim: Vec<u64>, ser: Vec<u64>, inl: Vec<u64>) -> Result<Self> {
        let n = names.len();
        if n > MAX_EVENTS {
            return Err(Error::CarrierTooLarge { size: n, cap: MAX_EVENTS });
        }
        assert!(sim.len() == n && ser.len() == n && inl.len() == n);
        let a = GAlphabet { names, sim, ser, inl };
        for i in 0..n {
            for rel in [&a.sim, &a.ser, &a.inl] {
                if rel[i] >> i & 1 == 1 {
                    return Err(Error::ReflexivePair(a.names[i].clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let (sym_sim, sym_inl) = (a.sim(i, j) != a.sim(j, i), a.inl(i, j) != a.inl(j, i));
                if sym_sim || sym_inl {
                    return Err(Error::Parse(format!(
                        "asymmetric {} pair ({},{})",
                        if sym_sim { "sim" } else { "inl" },
                        a.names[i],
                        a.names[j]
                    )));
                }
                if a.sim(i, j) && a.inl(i, j) {
                    return Err(Error::SimInlOverlap(a.names[i].clone(), a.names[j].clone()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if a.ser(i, j) && !a.sim(i, j) {
                    return Err(Error::SerNotInSim(a.names[i].clone(), a.names[j].clone()));
                }
            }
        }
        Ok(a)
    }

    /// Returns the same alphabet with `<E` replaced by `order`.
    pub fn reordered(&self, order: &[String]) -> Result<GAlphabet> {
        validate_alphabet_with_order(&self.to_raw(), order)
    }

    /// Description that validates back to `self` (up to event order).
    pub fn to_raw(&self) -> RawAlphabet {
        let pairs = |rel: &Vec<u64>, sym: bool| {
            let mut v = Vec::new();
            for (i, row) in rel.iter().enumerate() {
                for j in 0..self.len() {
                    if row >> j & 1 == 1 && (!sym || i < j) {
                        v.push((self.names[i].clone(), self.names[j].clone()));
                    }
                }
            }
            v
        };
        RawAlphabet {
            events: self.names.clone(),
            sim: pairs(&self.sim, true),
            ser: pairs(&self.ser, false),
            inl: pairs(&self.inl, true),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: usize) -> &str {
        &self.names[e]
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownEvent(name.to_string()))
    }

    /// All events as a step-shaped mask.
    pub fn all(&self) -> Step {
        Step(if self.len() == 64 { u64::MAX } else { (1u64 << self.len()) - 1 })
    }

    pub fn sim(&self, a: usize, b: usize) -> bool {
        self.sim[a] >> b & 1 == 1
    }

    pub fn ser(&self, a: usize, b: usize) -> bool {
        self.ser[a] >> b & 1 == 1
    }

    pub fn inl(&self, a: usize, b: usize) -> bool {
        self.inl[a] >> b & 1 == 1
    }

    pub fn sim_row(&self, a: usize) -> Step {
        Step(self.sim[a])
    }

    pub fn ser_row(&self, a: usize) -> Step {
        Step(self.ser[a])
    }

    pub fn inl_row(&self, a: usize) -> Step {
        Step(self.inl[a])
    }

    /// `B × C ⊆ ser`.
    pub fn ser_product(&self, b: Step, c: Step) -> bool {
        b.iter().all(|x| c.is_subset(self.ser_row(x)))
    }

    /// `B × C ⊆ inl`.
    pub fn inl_product(&self, b: Step, c: Step) -> bool {
        b.iter().all(|x| c.is_subset(self.inl_row(x)))
    }

    pub fn kind(&self) -> AlphabetKind {
        if self.inl.iter().any(|&r| r != 0) {
            AlphabetKind::GComtrace
        } else if self.sim == self.ser {
            AlphabetKind::Trace
        } else {
            AlphabetKind::Comtrace
        }
    }

    pub fn inl_is_empty(&self) -> bool {
        self.kind() != AlphabetKind::GComtrace
    }

    /// Nonempty clique of `sim`, without materializing the universe.
    pub fn is_step(&self, a: Step) -> bool {
        !a.is_empty() && a.is_subset(self.all()) && a.iter().all(|e| a.minus(Step::singleton(e)).is_subset(self.sim_row(e)))
    }

    /// All steps, sorted by size and then by member list.
    pub fn steps_universe(&self, cap: usize) -> Result<Vec<Step>> {
        let mut out = Vec::new();
        self.cliques(Step::EMPTY, self.all(), cap, &|_| Step(u64::MAX), &mut out)?;
        sort_steps(&mut out);
        Ok(out)
    }

    fn cliques(
        &self,
        cur: Step,
        cand: Step,
        cap: usize,
        keep: &dyn Fn(usize) -> Step,
        out: &mut Vec<Step>,
    ) -> Result<()> {
        for e in cand.iter() {
            let next = cur.union(Step::singleton(e));
            if out.len() >= cap {
                return Err(Error::UniverseTooLarge(cap));
            }
            out.push(next);
            let higher = Step(cand.0 & u64::MAX.checked_shl(e as u32 + 1).unwrap_or(0));
            let rest = higher.inter(self.sim_row(e)).inter(keep(e));
            self.cliques(next, rest, cap, keep, out)?;
        }
        Ok(())
    }

    /// `ind = ser ∩ ser⁻¹` as adjacency rows.
    pub fn ind(&self) -> Vec<u64> {
        (0..self.len())
            .map(|a| (0..self.len()).filter(|&b| self.ser(a, b) && self.ser(b, a)).fold(0, |m, b| m | 1 << b))
            .collect()
    }

    /// `syn = sim \ (ser ∪ ser⁻¹)` as adjacency rows.
    pub fn syn(&self) -> Vec<u64> {
        (0..self.len())
            .map(|a| {
                (0..self.len())
                    .filter(|&b| self.sim(a, b) && !self.ser(a, b) && !self.ser(b, a))
                    .fold(0, |m, b| m | 1 << b)
            })
            .collect()
    }

    /// Nonempty steps whose distinct members are pairwise in `syn`.
    pub fn syn_steps(&self, cap: usize) -> Result<Vec<Step>> {
        let syn = self.syn();
        let mut out = Vec::new();
        self.cliques(Step::EMPTY, self.all(), cap, &|e| Step(syn[e]), &mut out)?;
        sort_steps(&mut out);
        Ok(out)
    }

    /// Renders an adjacency relation as `(a,b) (c,d)`.
    pub fn render_pairs(&self, rel: &[u64]) -> String {
        let mut parts = Vec::new();
        for (i, row) in rel.iter().enumerate() {
            for j in 0..self.len() {
                if row >> j & 1 == 1 {
                    parts.push(format!("({},{})", self.names[i], self.names[j]));
                }
            }
        }
        parts.join(" ")
    }

    pub fn sim_rows(&self) -> &[u64] {
        &self.sim
    }

    pub fn ser_rows(&self) -> &[u64] {
        &self.ser
    }

    pub fn inl_rows(&self) -> &[u64] {
        &self.inl
    }
}

/// Sorts by size, then by the member list under `<E`.
pub fn sort_steps(v: &mut [Step]) {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
}

/// The lifted trace alphabet `(E, ind, ind, ∅)`.
pub fn lift_trace_alphabet(events: &[String], ind: &[(String, String)]) -> Result<GAlphabet> {
    let raw = RawAlphabet {
        events: events.to_vec(),
        sim: ind.to_vec(),
        ser: ind.iter().flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())]).collect(),
        inl: vec![],
    };
    validate_alphabet(&raw)
}
