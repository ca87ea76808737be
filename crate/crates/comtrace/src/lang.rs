//! Finite step-sequence languages and (g-)comtrace languages: lifting,
//! flattening, concatenation, union, bounded Kleene star, prefix closure,
//! and the Priority example.

use std::collections::BTreeSet;

use crate::alphabet::{validate_alphabet, GAlphabet, RawAlphabet, Step};
use crate::congruence;
use crate::error::{Error, Result};
use crate::stepseq::StepSeq;

/// Default cap on the size of a materialized language.
pub const DEFAULT_LANGUAGE_CAP: usize = 100_000;

/// A finite set of step sequences.
pub type Language = BTreeSet<StepSeq>;

/// A finite set of classes, each stored as its sorted member list.
pub type GcLanguage = BTreeSet<Vec<StepSeq>>;

fn check(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        Err(Error::BoundExceeded(cap))
    } else {
        Ok(())
    }
}

fn class_key(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<Vec<StepSeq>> {
    let mut m = congruence::enumerate_class(alph, s, cap)?.members().to_vec();
    m.sort();
    Ok(m)
}

/// `[L] = {[u] | u ∈ L}`.
pub fn lift(alph: &GAlphabet, l: &Language, cap: usize) -> Result<GcLanguage> {
    let mut out = GcLanguage::new();
    let mut covered: BTreeSet<&StepSeq> = BTreeSet::new();
    for u in l {
        if covered.contains(u) {
            continue;
        }
        let k = class_key(alph, u, cap)?;
        for m in &k {
            if let Some(x) = l.get(m) {
                covered.insert(x);
            }
        }
        out.insert(k);
    }
    Ok(out)
}

/// `∪𝓛`.
pub fn flatten(ll: &GcLanguage) -> Language {
    ll.iter().flatten().cloned().collect()
}

/// `L₁L₂`.
pub fn concat(l1: &Language, l2: &Language, cap: usize) -> Result<Language> {
    let mut out = Language::new();
    for x in l1 {
        for y in l2 {
            let mut z = x.clone();
            z.extend_from_slice(y);
            out.insert(z);
            check(out.len(), cap)?;
        }
    }
    Ok(out)
}

/// `𝓛₁𝓛₂ = {x ⊛ y}`.
pub fn concat_classes(alph: &GAlphabet, a: &GcLanguage, b: &GcLanguage, cap: usize) -> Result<GcLanguage> {
    let mut out = GcLanguage::new();
    for x in a {
        for y in b {
            let mut z = x[0].clone();
            z.extend_from_slice(&y[0]);
            out.insert(class_key(alph, &z, cap)?);
            check(out.len(), cap)?;
        }
    }
    Ok(out)
}

/// `L₁ ∪ L₂`.
pub fn union(l1: &Language, l2: &Language) -> Language {
    l1.union(l2).cloned().collect()
}

/// `𝓛₁ ∪ 𝓛₂`.
pub fn union_classes(a: &GcLanguage, b: &GcLanguage) -> GcLanguage {
    a.union(b).cloned().collect()
}

/// `∪_{n ≤ bound} Lⁿ`.
pub fn star(l: &Language, bound: usize, cap: usize) -> Result<Language> {
    let mut out: Language = [Vec::new()].into();
    let mut power: Language = [Vec::new()].into();
    for _ in 0..bound {
        power = concat(&power, l, cap)?;
        out.extend(power.iter().cloned());
        check(out.len(), cap)?;
    }
    Ok(out)
}

/// `∪_{n ≤ bound} 𝓛ⁿ`.
pub fn star_classes(alph: &GAlphabet, ll: &GcLanguage, bound: usize, cap: usize) -> Result<GcLanguage> {
    let unit: GcLanguage = [vec![Vec::new()]].into();
    let mut out = unit.clone();
    let mut power = unit;
    for _ in 0..bound {
        power = concat_classes(alph, &power, ll, cap)?;
        out.extend(power.iter().cloned());
        check(out.len(), cap)?;
    }
    Ok(out)
}

/// Every prefix (by whole steps) of every member, including `λ`.
pub fn prefix_closure(l: &Language) -> Language {
    l.iter().flat_map(|u| (0..=u.len()).map(move |k| u[..k].to_vec())).collect()
}

/// Priority alphabet `({a,b,c}, sim = {a~c}, ser = {(c,a)}, inl = ∅)`.
pub fn priority_alphabet() -> GAlphabet {
    let raw = RawAlphabet {
        events: vec!["a".into(), "b".into(), "c".into()],
        sim: vec![("a".into(), "c".into())],
        ser: vec![("c".into(), "a".into())],
        inl: vec![],
    };
    validate_alphabet(&raw).expect("fixed alphabet is valid")
}

/// Members of `Pref(({c}* ∪ {a}{b} ∪ {a,c}{b})*)` of length at most `bound`,
/// over [`priority_alphabet`].
pub fn priority_language(bound: usize) -> Language {
    let (a, b, c) = (Step::singleton(0), Step::singleton(1), Step::singleton(2));
    let factors: [StepSeq; 3] = [vec![c], vec![a, b], vec![a.union(c), b]];
    let mut words: Language = [Vec::new()].into();
    let mut frontier = vec![Vec::new()];
    while let Some(w) = frontier.pop() {
        for f in &factors {
            let mut z: StepSeq = w.clone();
            z.extend_from_slice(f);
            if z.len() <= bound + 1 && words.insert(z.clone()) {
                frontier.push(z);
            }
        }
    }
    prefix_closure(&words).into_iter().filter(|u| u.len() <= bound).collect()
}
