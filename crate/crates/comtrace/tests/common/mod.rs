//! Shared fixtures and helpers for integration tests.
#![allow(dead_code)]

pub mod oracle;

use comtrace::alphabet::{validate_alphabet, GAlphabet};
use comtrace::congruence::ClassSet;
use comtrace::format::parse_alphabet;
use comtrace::stepseq::{self, StepSeq};

pub const CAP: usize = 100_000;

pub fn alph(text: &str) -> GAlphabet {
    validate_alphabet(&parse_alphabet(text).unwrap()).unwrap()
}

pub const TH1: &str = "events: a b c\nsim: (b,c)\nser: (b,c)\n";
pub const TH2: &str = "events: a b c d e\nsim: (a,b) (a,c) (a,d)\nser: (a,b) (b,a) (a,c)\n";
pub const TH3: &str = "events: a b c\nsim: (a,c) (b,c)\nser: (a,c) (c,a) (b,c) (c,b)\ninl: (a,b)\n";
pub const TH4: &str = "events: a b c d\nsim: (a,b) (a,d) (b,c)\nser: (a,b) (b,a) (b,c)\n";
pub const TH5: &str = "events: a b c d\nsim: (a,b) (a,d) (b,c)\nser: (a,b) (b,a) (b,c)\ninl: (a,c)\n";
pub const TH6: &str = "events: a b c\nsim: (a,c)\nser: (a,c) (c,a)\ninl: (a,b)\n";
pub const TH7: &str = "events: a b c d e\n\
    sim: (b,c) (b,d) (b,e) (c,d) (c,e) (d,e)\n\
    ser: (b,c) (c,b) (b,d) (d,b) (b,e) (e,b) (c,d) (d,c) (c,e) (e,c) (d,e) (e,d)\n\
    inl: (a,b) (a,d) (a,e)\n";
pub const TH8: &str = "events: a b c\nsim: (a,c)\nser: (c,a)\n";
/// Lifted trace alphabet with `ind = {b~c}`.
pub const TRACE_BC: &str = "events: a b c\nsim: (b,c)\nser: (b,c) (c,b)\n";

/// Alphabet of the figure so-structure on `{a,…,e}`.
pub const FIG_SO: &str = "events: a b c d e\nsim: (a,b) (b,c) (d,e)\nser: (a,b) (b,a) (b,c)\n";
/// Alphabet of the figure gso-structure on `{a,…,e}`.
pub const FIG_GSO: &str = "events: a b c d e\nsim: (a,b) (b,c) (d,e)\nser: (a,b) (b,a) (b,c)\ninl: (a,c)\n";

pub fn seq(a: &GAlphabet, text: &str) -> StepSeq {
    stepseq::parse(a, text).unwrap()
}

pub fn show(a: &GAlphabet, s: &[comtrace::Step]) -> String {
    stepseq::render(a, s)
}

/// Rendered members, sorted.
pub fn rendered(c: &ClassSet) -> Vec<String> {
    let mut v = c.rendered().to_vec();
    v.sort();
    v
}

pub fn sorted(v: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

/// Named fixture instances `(name, alphabet, step sequence)`.
pub fn fixtures() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("th1", TH1, "{a}{b,c}"),
        ("th2-x1", TH2, "{a,b}{c}{a}"),
        ("th2-x2", TH2, "{e}{a,d}{a,c}"),
        ("th2-x3", TH2, "{a,b}{c}{a}{e}{a,d}{a,c}"),
        ("th3", TH3, "{a,c}{b}"),
        ("th4", TH4, "{a,b}{c}{a,d}"),
        ("th5", TH5, "{a,b}{c}{a,d}"),
        ("th6", TH6, "{b}{a,c}"),
        ("th7", TH7, "{a}{b,c,d,e}"),
        ("th8", TH8, "{a,c}{b}"),
        ("trace", TRACE_BC, "{a}{b}{c}{b}{c}{a}"),
        ("fig-so", FIG_SO, "{a,b}{c}{d,e}"),
        ("fig-gso", FIG_GSO, "{a,b}{c}{d,e}"),
    ]
}

/// Fixtures over alphabets with `inl = ∅`.
pub fn comtrace_fixtures() -> Vec<(&'static str, &'static str, &'static str)> {
    fixtures().into_iter().filter(|(_, a, _)| alph(a).inl_is_empty()).collect()
}
