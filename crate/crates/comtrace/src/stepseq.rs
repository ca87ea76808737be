//! Step sequences, enumerated occurrences, cancellation and projection, and
//! the correspondence with finite stratified orders.

use crate::alphabet::{GAlphabet, Step};
use crate::error::{Error, Result};
use crate::relorder::{self, Relation, MAX_POINTS};

/// A finite sequence of steps; the empty sequence is `λ`.
pub type StepSeq = Vec<Step>;

/// Which end a cancellation works from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `{a,b}` with members in `<E` order.
pub fn render_step(alph: &GAlphabet, s: Step) -> String {
    let names: Vec<&str> = s.iter().map(|e| alph.name(e)).collect();
    format!("{{{}}}", names.join(","))
}

/// `{a,b}{c}`, or `lambda` for the empty sequence.
pub fn render(alph: &GAlphabet, s: &[Step]) -> String {
    if s.is_empty() {
        "lambda".to_string()
    } else {
        s.iter().map(|&x| render_step(alph, x)).collect()
    }
}

/// Parses `lambda | step+` with `step := "{" event ("," event)* "}"`.
pub fn parse(alph: &GAlphabet, text: &str) -> Result<StepSeq> {
    let t = text.trim();
    if t == "lambda" || t == "λ" || t.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('{')
            .ok_or_else(|| Error::Parse(format!("expected '{{' at {rest:?}")))?;
        let end = body.find('}').ok_or_else(|| Error::Parse(format!("unclosed step in {text:?}")))?;
        let mut step = Step::EMPTY;
        for name in body[..end].split(',') {
            let e = alph.index(name.trim())?;
            if step.contains(e) {
                return Err(Error::Parse(format!("event {} repeated in a step", name.trim())));
            }
            step = step.union(Step::singleton(e));
        }
        if !alph.is_step(step) {
            return Err(Error::InvalidStep(render_step(alph, step)));
        }
        out.push(step);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

/// Parses a word of events: whitespace-separated names, or one character per
/// event when the text has no whitespace.
pub fn parse_word(alph: &GAlphabet, text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    if t.contains(char::is_whitespace) {
        t.split_whitespace().map(|n| alph.index(n)).collect()
    } else {
        t.chars().map(|c| alph.index(&c.to_string())).collect()
    }
}

/// `x ↦ x^{}`: each event becomes a singleton step.
pub fn lift_word(word: &[usize]) -> StepSeq {
    word.iter().map(|&e| Step::singleton(e)).collect()
}

/// `Σ|Aᵢ|`.
pub fn weight(s: &[Step]) -> usize {
    s.iter().map(|x| x.len()).sum()
}

/// `|s|_e` for every event index `e < n`.
pub fn counts(s: &[Step], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for x in s {
        for e in x.iter() {
            c[e] += 1;
        }
    }
    c
}

/// Removes the rightmost (or leftmost) occurrence of `a`, dropping a step
/// that becomes empty. Identity when `a` does not occur.
pub fn cancel(s: &[Step], a: usize, side: Side) -> StepSeq {
    let mut v = s.to_vec();
    let pos = match side {
        Side::Right => v.iter().rposition(|x| x.contains(a)),
        Side::Left => v.iter().position(|x| x.contains(a)),
    };
    if let Some(i) = pos {
        v[i] = v[i].minus(Step::singleton(a));
        if v[i].is_empty() {
            v.remove(i);
        }
    }
    v
}

/// `s ÷ {a₁,…,a_k}`, applied event by event.
pub fn cancel_set(s: &[Step], a: Step, side: Side) -> StepSeq {
    a.iter().fold(s.to_vec(), |acc, e| cancel(&acc, e, side))
}

/// `s ÷ A₁…A_k`, applied step by step in sequence order.
pub fn cancel_seq(s: &[Step], x: &[Step], side: Side) -> StepSeq {
    x.iter().fold(s.to_vec(), |acc, &a| cancel_set(&acc, a, side))
}

/// `π_D`: intersect every step with `d`, dropping empty steps.
pub fn project(s: &[Step], d: Step) -> StepSeq {
    s.iter().map(|x| x.inter(d)).filter(|x| !x.is_empty()).collect()
}

/// A carrier of points labelled by events.
///
/// Occurrence-valued carriers hold `e^(k)` points sorted by `(e, k)`;
/// event-valued carriers hold each event once.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    events: Vec<String>,
    points: Vec<(usize, u32)>,
    occurrences: bool,
}

impl Carrier {
    /// One point per event, labelled by itself.
    pub fn of_events(events: Vec<String>) -> Self {
        let points = (0..events.len()).map(|e| (e, 1)).collect();
        Carrier { events, points, occurrences: false }
    }

    /// Occurrence points `e^(1..=counts[e])`.
    pub fn of_counts(events: Vec<String>, counts: &[usize]) -> Result<Self> {
        let points: Vec<(usize, u32)> =
            counts.iter().enumerate().flat_map(|(e, &c)| (1..=c as u32).map(move |k| (e, k))).collect();
        if points.len() > MAX_POINTS {
            return Err(Error::CarrierTooLarge { size: points.len(), cap: MAX_POINTS });
        }
        Ok(Carrier { events, points, occurrences: true })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn events(&self) -> &[String] {
        &self.events
    }

    pub fn is_occurrence_valued(&self) -> bool {
        self.occurrences
    }

    /// `l(α)` as an event index.
    pub fn label(&self, i: usize) -> usize {
        self.points[i].0
    }

    /// Occurrence number of point `i` (1 for event-valued carriers).
    pub fn occurrence(&self, i: usize) -> u32 {
        self.points[i].1
    }

    /// `a.1` for occurrences, `a` for events.
    pub fn point_name(&self, i: usize) -> String {
        let (e, k) = self.points[i];
        if self.occurrences {
            format!("{}.{}", self.events[e], k)
        } else {
            self.events[e].clone()
        }
    }

    pub fn find(&self, e: usize, k: u32) -> Option<usize> {
        self.points.iter().position(|&p| p == (e, k))
    }

    /// Point index by rendered name.
    pub fn find_name(&self, name: &str) -> Option<usize> {
        (0..self.len()).find(|&i| self.point_name(i) == name)
    }

    /// `l[Y]` for a point mask.
    pub fn label_step(&self, pts: u64) -> Step {
        (0..self.len()).filter(|&i| pts >> i & 1 == 1).fold(Step::EMPTY, |s, i| s.union(Step::singleton(self.label(i))))
    }

    /// Replaces point masks by their label steps.
    pub fn relabel(&self, layers: &[u64]) -> StepSeq {
        layers.iter().map(|&l| self.label_step(l)).collect()
    }
}

/// An enumerated step sequence: steps as point masks over `Σ_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated {
    pub carrier: Carrier,
    /// Step `i` as a mask over carrier points.
    pub layers: Vec<u64>,
    /// 1-based step index of each point.
    pub pos: Vec<usize>,
}

impl Enumerated {
    /// `{a.1,b.1}{b.2,c.1}`.
    pub fn render(&self) -> String {
        if self.layers.is_empty() {
            return "lambda".into();
        }
        self.layers
            .iter()
            .map(|&l| {
                let names: Vec<String> =
                    (0..self.carrier.len()).filter(|&i| l >> i & 1 == 1).map(|i| self.carrier.point_name(i)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect()
    }
}

/// Builds `s̄`: the `k`-th occurrence of `e` lies in the step holding the
/// `k`-th `e` of `s`.
pub fn enumerate_occurrences(alph: &GAlphabet, s: &[Step]) -> Result<Enumerated> {
    let carrier = Carrier::of_counts(alph.names().to_vec(), &counts(s, alph.len()))?;
    Ok(enumerate_on(&carrier, s))
}

/// Enumerates `s` over a carrier already known to match its counts.
pub fn enumerate_on(carrier: &Carrier, s: &[Step]) -> Enumerated {
    let n_ev = carrier.events().len();
    let mut base = vec![0usize; n_ev + 1];
    for i in 0..carrier.len() {
        base[carrier.label(i) + 1] += 1;
    }
    for e in 0..n_ev {
        base[e + 1] += base[e];
    }
    let mut seen = vec![0usize; n_ev];
    let mut layers = Vec::with_capacity(s.len());
    let mut pos = vec![0; carrier.len()];
    for (i, x) in s.iter().enumerate() {
        let mut l = 0u64;
        for e in x.iter() {
            let p = base[e] + seen[e];
            seen[e] += 1;
            debug_assert!(p < base[e + 1], "sequence does not match carrier");
            l |= 1 << p;
            pos[p] = i + 1;
        }
        layers.push(l);
    }
    Enumerated { carrier: carrier.clone(), layers, pos }
}

/// `◁_s`: `α ◁ β` iff `pos(α) < pos(β)`.
pub fn order_of(en: &Enumerated) -> Relation {
    relorder::from_layers(en.carrier.len(), &en.layers)
}

/// `Ω_◁`: the `≃`-classes of a stratified order, as point masks.
pub fn sequence_of(o: &Relation) -> Result<Vec<u64>> {
    relorder::layers(o)
}
