//! Line-oriented text formats for alphabets and relational structures, and
//! text/DOT rendering of structures.
//!
//! Alphabet file: `events: a b c`, `sim: (b,c)`, `ser: (b,c)`, `inl: (a,b)`.
//! Structure file: `carrier: a b c` plus any of `r1:`, `r2:`, `prec:`,
//! `wc:`, `cmt:`. `#` starts a comment; missing relation lines mean `∅`.

use std::collections::BTreeMap;

use crate::alphabet::RawAlphabet;
use crate::error::{Error, Result};
use crate::relorder::Relation;
use crate::stepseq::Carrier;

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn split_key(n: usize, line: &str) -> Result<(&str, &str)> {
    line.split_once(':')
        .map(|(k, v)| (k.trim(), v.trim()))
        .ok_or_else(|| Error::Parse(format!("line {n}: expected 'key: value'")))
}

/// Parses `(a,b) (c,d)`.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let end = body.find(')').ok_or_else(|| Error::Parse(format!("unclosed pair in {text:?}")))?;
        let (a, b) = body[..end]
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected 'x,y' in ({})", &body[..end])))?;
        out.push((a.trim().to_string(), b.trim().to_string()));
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

/// Parses an alphabet file into an unvalidated description.
pub fn parse_alphabet(text: &str) -> Result<RawAlphabet> {
    let mut raw = RawAlphabet::default();
    let mut saw_events = false;
    for (n, line) in lines(text) {
        let (k, v) = split_key(n, line)?;
        match k {
            "events" => {
                saw_events = true;
                raw.events.extend(v.split_whitespace().map(String::from));
            }
            "sim" => raw.sim.extend(parse_pairs(v)?),
            "ser" => raw.ser.extend(parse_pairs(v)?),
            "inl" => raw.inl.extend(parse_pairs(v)?),
            _ => return Err(Error::Parse(format!("line {n}: unknown key {k:?}"))),
        }
    }
    if !saw_events {
        return Err(Error::Parse("missing 'events:' line".into()));
    }
    Ok(raw)
}

/// A structure file: carrier names and named relation sections.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawStructure {
    pub carrier: Vec<String>,
    pub sections: BTreeMap<String, Vec<(String, String)>>,
}

const SECTIONS: [&str; 5] = ["r1", "r2", "prec", "wc", "cmt"];

fn valid_point(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

/// Parses a structure file.
pub fn parse_structure(text: &str) -> Result<RawStructure> {
    let mut raw = RawStructure::default();
    let mut saw_carrier = false;
    for (n, line) in lines(text) {
        let (k, v) = split_key(n, line)?;
        if k == "carrier" {
            saw_carrier = true;
            raw.carrier.extend(v.split_whitespace().map(String::from));
        } else if SECTIONS.contains(&k) {
            raw.sections.entry(k.to_string()).or_default().extend(parse_pairs(v)?);
        } else {
            return Err(Error::Parse(format!("line {n}: unknown key {k:?}")));
        }
    }
    if !saw_carrier {
        return Err(Error::Parse("missing 'carrier:' line".into()));
    }
    for (i, p) in raw.carrier.iter().enumerate() {
        if !valid_point(p) {
            return Err(Error::Parse(format!("invalid carrier point {p:?}")));
        }
        if raw.carrier[..i].contains(p) {
            return Err(Error::Parse(format!("duplicate carrier point {p}")));
        }
    }
    Ok(raw)
}

impl RawStructure {
    /// Event-valued carrier, sorted by name or in the given `order`.
    pub fn carrier(&self, order: Option<&[String]>) -> Result<Carrier> {
        let mut names = self.carrier.clone();
        names.sort();
        if let Some(o) = order {
            let mut sorted = o.to_vec();
            sorted.sort();
            if sorted != names {
                return Err(Error::Parse(format!("order {o:?} is not a permutation of the carrier")));
            }
            names = o.to_vec();
        }
        Ok(Carrier::of_events(names))
    }

    pub fn has(&self, section: &str) -> bool {
        self.sections.contains_key(section)
    }

    /// Relation of a section over `carrier`; empty when absent.
    pub fn relation(&self, carrier: &Carrier, section: &str) -> Result<Relation> {
        let idx = |s: &str| carrier.find_name(s).ok_or_else(|| Error::UnknownEvent(s.to_string()));
        let mut r = Relation::empty(carrier.len());
        for (a, b) in self.sections.get(section).map(Vec::as_slice).unwrap_or(&[]) {
            r.insert(idx(a)?, idx(b)?);
        }
        Ok(r)
    }
}

/// `(a,b) (c,d)` over carrier point names, row-major.
pub fn render_relation(carrier: &Carrier, r: &Relation) -> String {
    r.pairs()
        .iter()
        .map(|&(a, b)| format!("({},{})", carrier.point_name(a), carrier.point_name(b)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Structure-file text for the given named relations.
pub fn render_structure(carrier: &Carrier, rels: &[(&str, &Relation)]) -> String {
    let names: Vec<String> = (0..carrier.len()).map(|i| carrier.point_name(i)).collect();
    let mut out = format!("carrier: {}\n", names.join(" "));
    for (k, r) in rels {
        let body = render_relation(carrier, r);
        if body.is_empty() {
            out.push_str(&format!("{k}:\n"));
        } else {
            out.push_str(&format!("{k}: {body}\n"));
        }
    }
    out
}

/// Edges of `r` not implied by two-step paths (Hasse diagram of an order).
pub fn transitive_reduction(r: &Relation) -> Relation {
    r.minus(&r.compose(r))
}

/// DOT line style for one relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotStyle {
    /// Directed, solid (`≺`).
    Solid,
    /// Undirected, solid (`<>`); each pair drawn once.
    SolidUndirected,
    /// Directed, dashed (`⊏`).
    Dashed,
}

/// One DOT graph per relation.
pub fn render_dot(carrier: &Carrier, rels: &[(&str, &Relation, DotStyle)]) -> String {
    let mut out = String::new();
    for (name, r, style) in rels {
        let (kw, arrow) = if *style == DotStyle::SolidUndirected { ("graph", "--") } else { ("digraph", "->") };
        out.push_str(&format!("{kw} {name} {{\n"));
        if *style == DotStyle::Dashed {
            out.push_str("  edge [style=dashed];\n");
        }
        for i in 0..carrier.len() {
            out.push_str(&format!("  \"{}\";\n", carrier.point_name(i)));
        }
        for (a, b) in r.pairs() {
            if *style == DotStyle::SolidUndirected && a > b {
                continue;
            }
            out.push_str(&format!("  \"{}\" {arrow} \"{}\";\n", carrier.point_name(a), carrier.point_name(b)));
        }
        out.push_str("}\n");
    }
    out
}
