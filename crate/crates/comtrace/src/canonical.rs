//! Forward dependency and comtrace canonical form, GMC and MC predicates,
//! the step and lexicographic orders, g-canonical form, and trace Foata form.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::alphabet::{AlphabetKind, GAlphabet, Step};
use crate::congruence::{self, ClassSet};
use crate::error::{Error, Result};
use crate::stepseq::StepSeq;

/// Step order `<st`: larger steps first, then the least differing event.
pub fn step_cmp(a: Step, b: Step) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    match b.len().cmp(&a.len()) {
        Ordering::Equal => a.minus(b).least().cmp(&b.minus(a).least()),
        o => o,
    }
}

/// Lexicographic lift `<lex` of `<st`; a proper prefix precedes its extensions.
pub fn lex_cmp(x: &[Step], y: &[Step]) -> Ordering {
    for (&a, &b) in x.iter().zip(y) {
        match step_cmp(a, b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    x.len().cmp(&y.len())
}

/// Comparison mode for [`compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareMode {
    Step,
    Lex,
}

/// `<st` on single steps (`s` and `t` must then have length one) or `<lex`.
pub fn compare(s: &[Step], t: &[Step], mode: CompareMode) -> Ordering {
    match mode {
        CompareMode::Step => {
            assert!(s.len() == 1 && t.len() == 1, "step comparison takes single steps");
            step_cmp(s[0], t[0])
        }
        CompareMode::Lex => lex_cmp(s, t),
    }
}

fn require_comtrace(alph: &GAlphabet) -> Result<()> {
    if alph.inl_is_empty() {
        Ok(())
    } else {
        Err(Error::InlNotEmpty)
    }
}

/// Certifying sub-step `C ⊆ B` with `A × C ⊆ ser` and `C × (B \ C) ⊆ ser`;
/// the `<st`-least one (largest, then least by `<E`) is returned.
pub fn forward_dependent(alph: &GAlphabet, a: Step, b: Step) -> Result<Option<Step>> {
    require_comtrace(alph)?;
    Ok(fd_witness(alph, a, b))
}

fn fd_witness(alph: &GAlphabet, a: Step, b: Step) -> Option<Step> {
    b.subsets()
        .filter(|&c| alph.ser_product(a, c) && alph.ser_product(c, b.minus(c)))
        .min_by(|&x, &y| step_cmp(x, y))
}

/// No adjacent pair is forward dependent.
pub fn is_canonical(alph: &GAlphabet, s: &[Step]) -> Result<bool> {
    require_comtrace(alph)?;
    Ok(s.windows(2).all(|w| fd_witness(alph, w[0], w[1]).is_none()))
}

/// The canonical member of `[s]` by local rewriting: the witness of the
/// leftmost forward-dependent pair moves into the earlier step.
pub fn canonicalize(alph: &GAlphabet, s: &[Step]) -> Result<StepSeq> {
    require_comtrace(alph)?;
    let mut v = s.to_vec();
    'outer: loop {
        for i in 0..v.len().saturating_sub(1) {
            if let Some(c) = fd_witness(alph, v[i], v[i + 1]) {
                v[i] = v[i].union(c);
                v[i + 1] = v[i + 1].minus(c);
                if v[i + 1].is_empty() {
                    v.remove(i + 1);
                }
                continue 'outer;
            }
        }
        return Ok(v);
    }
}

/// Canonical members of the materialized class (exactly one by theory).
pub fn canonical_by_filter(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<Vec<StepSeq>> {
    require_comtrace(alph)?;
    let class = congruence::enumerate_class(alph, s, cap)?;
    Ok(class.members().iter().filter(|m| is_canonical(alph, m).unwrap_or(false)).cloned().collect())
}

/// `<lex`-least member of `[s]`.
pub fn g_canonical(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<StepSeq> {
    let class = congruence::enumerate_class(alph, s, cap)?;
    Ok(lex_min(&class))
}

/// `<lex`-least member of a class.
pub fn lex_min(class: &ClassSet) -> StepSeq {
    class.members().iter().min_by(|x, y| lex_cmp(x, y)).cloned().unwrap_or_default()
}

/// `s` is the `<lex`-least member of its class.
pub fn is_g_canonical(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<bool> {
    Ok(g_canonical(alph, s, cap)? == s)
}

struct ClassInfo {
    members: Vec<StepSeq>,
    max_first: usize,
    min_len: usize,
}

/// Memoized class facts used by the GMC and MC predicates.
pub struct ClassOracle<'a> {
    alph: &'a GAlphabet,
    cap: usize,
    of: HashMap<StepSeq, usize>,
    infos: Vec<ClassInfo>,
}

impl<'a> ClassOracle<'a> {
    pub fn new(alph: &'a GAlphabet, cap: usize) -> Self {
        ClassOracle { alph, cap, of: HashMap::new(), infos: Vec::new() }
    }

    fn info(&mut self, s: &[Step]) -> Result<usize> {
        if let Some(&i) = self.of.get(s) {
            return Ok(i);
        }
        let class = congruence::enumerate_class(self.alph, s, self.cap)?;
        let id = self.infos.len();
        let members = class.members().to_vec();
        let max_first = members.iter().map(|m| m.first().map_or(0, |x| x.len())).max().unwrap_or(0);
        let min_len = members.iter().map(|m| m.len()).min().unwrap_or(0);
        for m in &members {
            self.of.insert(m.clone(), id);
        }
        self.infos.push(ClassInfo { members, max_first, min_len });
        Ok(id)
    }

    /// `A_i` is maximally concurrent in `x` (0-based `i`).
    pub fn maximally_concurrent_at(&mut self, x: &[Step], i: usize) -> Result<bool> {
        let id = self.info(&x[i..])?;
        Ok(x[i].len() >= self.infos[id].max_first)
    }

    /// `mc(x)`: least 1-based index whose step is maximally concurrent in `x`.
    pub fn mc(&mut self, x: &[Step]) -> Result<usize> {
        for i in 0..x.len() {
            if self.maximally_concurrent_at(x, i)? {
                return Ok(i + 1);
            }
        }
        Ok(x.len())
    }

    /// Every suffix starts with a step of maximal size within its class.
    pub fn is_gmc(&mut self, s: &[Step]) -> Result<bool> {
        for i in 0..s.len() {
            if !self.maximally_concurrent_at(s, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Length-minimal in its class, and for every suffix `u_i` and every
    /// `w ≡ u_i` of equal length, `mc(u_i) ≤ mc(w)`.
    pub fn is_mc(&mut self, s: &[Step]) -> Result<bool> {
        let id = self.info(s)?;
        if s.len() > self.infos[id].min_len {
            return Ok(false);
        }
        for i in 0..s.len() {
            let u = &s[i..];
            let mu = self.mc(u)?;
            let cid = self.info(u)?;
            let same_len: Vec<StepSeq> = self.infos[cid].members.iter().filter(|w| w.len() == u.len()).cloned().collect();
            for w in same_len {
                if mu > self.mc(&w)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// GMC form, by class enumeration of every suffix.
pub fn is_gmc(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<bool> {
    ClassOracle::new(alph, cap).is_gmc(s)
}

/// MC form, by class enumeration.
pub fn is_mc(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<bool> {
    ClassOracle::new(alph, cap).is_mc(s)
}

/// Maximal fully commutative decomposition of a trace word and derived forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoataForm {
    /// `x₁…x_k`, each block a factor of the input.
    pub blocks: Vec<Vec<usize>>,
    /// Each block sorted by `<E`, concatenated.
    pub foata: Vec<usize>,
    /// `st(x₁)…st(x_k)`.
    pub max_steps: StepSeq,
}

fn require_trace(alph: &GAlphabet) -> Result<()> {
    if alph.kind() == AlphabetKind::Trace {
        Ok(())
    } else {
        Err(Error::NotTraceAlphabet)
    }
}

/// Greedy maximal decomposition, Foata form and `x^{max}` of a word over a
/// lifted trace alphabet (`ind = sim = ser`).
pub fn foata_trace(alph: &GAlphabet, word: &[usize]) -> Result<FoataForm> {
    require_trace(alph)?;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &e in word {
        match blocks.last_mut() {
            Some(b) if b.iter().all(|&x| alph.ser(x, e)) => b.push(e),
            _ => blocks.push(vec![e]),
        }
    }
    let foata = blocks
        .iter()
        .flat_map(|b| {
            let mut s = b.clone();
            s.sort();
            s
        })
        .collect();
    let max_steps = blocks.iter().map(|b| Step::from_events(b.iter().copied())).collect();
    Ok(FoataForm { blocks, foata, max_steps })
}

/// Trace GMC form: in the maximal decomposition every event of a block
/// depends on some event of the previous block (`(a,b) ∉ ind`).
pub fn is_trace_gmc(alph: &GAlphabet, word: &[usize]) -> Result<bool> {
    let f = foata_trace(alph, word)?;
    Ok(f.blocks.windows(2).all(|w| w[1].iter().all(|&a| w[0].iter().any(|&b| !alph.ser(a, b)))))
}

/// Members of the trace class of `word`: the singleton-step members of the
/// comtrace class of its lifting.
pub fn trace_class(alph: &GAlphabet, word: &[usize], cap: usize) -> Result<Vec<Vec<usize>>> {
    require_trace(alph)?;
    let class = congruence::enumerate_class(alph, &crate::stepseq::lift_word(word), cap)?;
    let mut out: Vec<Vec<usize>> = class
        .members()
        .iter()
        .filter(|m| m.iter().all(|x| x.len() == 1))
        .map(|m| m.iter().map(|x| x.least().unwrap()).collect())
        .collect();
    out.sort();
    Ok(out)
}
