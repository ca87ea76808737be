//! Generalized stratified order structures: axioms, the invariant relations
//! of a step sequence, `G^{s}` and `G_s`, extensions, the semican
//! construction of the g-canonical form, the reverse direction to
//! g-comtraces, and serializability decompositions of single steps.

use std::cmp::Ordering;

use crate::alphabet::{GAlphabet, Step};
use crate::canonical::step_cmp;
use crate::congruence::{self, ClassSet};
use crate::error::{Error, Result};
use crate::relorder::{self, LayerConstraints, RelStructure, Relation};
use crate::sostruct::{self, SoStructure};
use crate::stepseq::{self, Carrier, StepSeq};

/// Default cap on `|mins_≺(X)|` in [`semican`].
pub const DEFAULT_MINS_CAP: usize = 20;

/// `(X, <>, ⊏)` with `S_G = (X, <> ∩ ⊏, ⊏)` a so-structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsoStructure {
    pub carrier: Carrier,
    /// `<>`, "non-simultaneously".
    pub cmt: Relation,
    /// `⊏`, "not later than".
    pub wc: Relation,
}

impl GsoStructure {
    /// `≺_G = <> ∩ ⊏`.
    pub fn prec(&self) -> Relation {
        self.cmt.inter(&self.wc)
    }

    /// `S_G`.
    pub fn induced_so(&self) -> SoStructure {
        SoStructure { carrier: self.carrier.clone(), prec: self.prec(), wc: self.wc.clone() }
    }
}

/// Checks `⊏` irreflexive, `<>` symmetric and irreflexive, and `S_G` valid.
pub fn validate_gso(carrier: Carrier, cmt: Relation, wc: Relation) -> Result<GsoStructure> {
    let n = carrier.len();
    assert!(cmt.size() == n && wc.size() == n, "relations do not match the carrier");
    let name = |i: usize| carrier.point_name(i);
    for a in 0..n {
        if wc.contains(a, a) {
            return Err(Error::AxiomViolation { axiom: "wc irreflexive".into(), witness: format!("({})", name(a)) });
        }
        if cmt.contains(a, a) {
            return Err(Error::AxiomViolation { axiom: "cmt irreflexive".into(), witness: format!("({})", name(a)) });
        }
    }
    for (a, b) in cmt.pairs() {
        if !cmt.contains(b, a) {
            return Err(Error::AxiomViolation {
                axiom: "cmt symmetric".into(),
                witness: format!("({},{})", name(a), name(b)),
            });
        }
    }
    let prec = cmt.inter(&wc);
    match sostruct::validate_so(carrier.clone(), prec, wc.clone()) {
        Ok(_) => Ok(GsoStructure { carrier, cmt, wc }),
        Err(Error::AxiomViolation { axiom, witness }) => {
            Err(Error::AxiomViolation { axiom: format!("induced so-structure {axiom}"), witness })
        }
        Err(e) => Err(e),
    }
}

/// `(<>_s, ⊏_s, ≺_s)` over `Σ_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantTriple {
    pub carrier: Carrier,
    pub cmt: Relation,
    pub wc: Relation,
    pub prec: Relation,
}

/// The invariant relations of `s`, term by term:
///
/// * `α <>_s β` iff `(l(α), l(β)) ∈ inl`;
/// * `α ⊏_s β` iff `α ◁_s⌢ β` and `(l(β), l(α)) ∉ ser ∪ inl`;
/// * `α ≺_s β` iff `α ◁_s β` and one of
///   `(l(α), l(β)) ∉ ser ∪ inl`,
///   `(α, β) ∈ <>_s ∩ ((⊏_s*)^⋒ ∘ (<>_s)^C ∘ (⊏_s*)^⋒)`,
///   `(l(α), l(β)) ∈ ser` and some `δ ◁_s γ` with `(l(δ), l(γ)) ∉ ser`,
///   `α ⊏_s* δ ⊏_s* β` and `α ⊏_s* γ ⊏_s* β`.
pub fn invariant_relations(alph: &GAlphabet, s: &[Step]) -> Result<InvariantTriple> {
    let en = stepseq::enumerate_occurrences(alph, s)?;
    let c = &en.carrier;
    let n = c.len();
    let lab = |i: usize| c.label(i);
    let ser_or_inl = |x: usize, y: usize| alph.ser(x, y) || alph.inl(x, y);
    let order = stepseq::order_of(&en);
    let weak = order.weak();

    let mut cmt = Relation::empty(n);
    let mut wc = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if alph.inl(lab(a), lab(b)) {
                cmt.insert(a, b);
            }
            if weak.contains(a, b) && !ser_or_inl(lab(b), lab(a)) {
                wc.insert(a, b);
            }
        }
    }

    let wc_star = wc.reflexive_transitive();
    let q = wc_star.symmetric_intersection();
    let middle = cmt.inter(&q.compose(&cmt.complement()).compose(&q));

    let mut prec = Relation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if !order.contains(a, b) {
                continue;
            }
            let first = !ser_or_inl(lab(a), lab(b));
            let second = middle.contains(a, b);
            let third = alph.ser(lab(a), lab(b))
                && order.pairs().into_iter().any(|(d, g)| {
                    !alph.ser(lab(d), lab(g))
                        && wc_star.contains(a, d)
                        && wc_star.contains(d, b)
                        && wc_star.contains(a, g)
                        && wc_star.contains(g, b)
                });
            if first || second || third {
                prec.insert(a, b);
            }
        }
    }
    Ok(InvariantTriple { carrier: en.carrier, cmt, wc, prec })
}

/// `G^{s} = (Σ_s, ≺_s ∪ <>_s, ≺_s ∪ ⊏_s)^⋈`, validated.
pub fn gso_of_stepseq(alph: &GAlphabet, s: &[Step]) -> Result<GsoStructure> {
    let t = invariant_relations(alph, s)?;
    let g = relorder::bowtie_closure(&RelStructure::new(t.prec.union(&t.cmt), t.prec.union(&t.wc)));
    validate_gso(t.carrier, g.r1, g.r2)
}

/// `G_s = (Σ_s, ∩ ◁_u^sym, ∩ ◁_u⌢)` over the materialized class.
pub fn gso_of_class(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<GsoStructure> {
    let class = congruence::enumerate_class(alph, s, cap)?;
    gso_of_members(alph, s, &class)
}

/// `G_s` over an already materialized class of `s`.
pub fn gso_of_members(alph: &GAlphabet, s: &[Step], class: &ClassSet) -> Result<GsoStructure> {
    let carrier = stepseq::enumerate_occurrences(alph, s)?.carrier;
    let n = carrier.len();
    let (mut cmt, mut wc) = (Relation::full(n), Relation::full(n));
    for m in class.members() {
        let o = stepseq::order_of(&stepseq::enumerate_on(&carrier, m));
        cmt = cmt.inter(&o.symmetric_closure());
        wc = wc.inter(&o.weak());
    }
    validate_gso(carrier, cmt, wc)
}

/// Stratified extensions as layer lists: `α <> β ⟹ α ◁^sym β`,
/// `α ⊏ β ⟹ α ◁⌢ β`.
pub fn extension_layers(g: &GsoStructure, cap: usize) -> Result<Vec<Vec<u64>>> {
    let c = LayerConstraints { not_after: g.wc.clone(), apart: g.cmt.clone(), ..LayerConstraints::free(g.carrier.len()) };
    relorder::constrained_layerings(&c, cap)
}

/// `ext(G)` as relations.
pub fn extensions_gso(g: &GsoStructure, cap: usize) -> Result<Vec<Relation>> {
    let n = g.carrier.len();
    Ok(extension_layers(g, cap)?.iter().map(|l| relorder::from_layers(n, l)).collect())
}

/// `(sim_G, ser_G, inl_G)` over carrier points.
pub fn relations_of_gso(g: &GsoStructure) -> (Relation, Relation, Relation) {
    let n = g.carrier.len();
    let sim = g.cmt.union(&Relation::identity(n)).complement();
    let ser = sim.minus(&g.wc.inverse());
    let inl = g.cmt.minus(&g.wc.symmetric_closure());
    (sim, ser, inl)
}

/// `Θ_G = (X, sim_G, ser_G, inl_G)` with carrier points as events.
pub fn alphabet_of_gso(g: &GsoStructure) -> Result<GAlphabet> {
    let (sim, ser, inl) = relations_of_gso(g);
    let names = (0..g.carrier.len()).map(|i| g.carrier.point_name(i)).collect();
    GAlphabet::from_rows(names, sim.rows().to_vec(), ser.rows().to_vec(), inl.rows().to_vec())
}

/// `G^{◁} = (X, (◁ \ ser_G)^sym ∪ inl_G, ◁⌢ \ (ser_G⁻¹ ∪ inl_G))`.
pub fn gso_of_order(g: &GsoStructure, order: &Relation) -> (Relation, Relation) {
    let (_, ser, inl) = relations_of_gso(g);
    let cmt = order.minus(&ser).symmetric_closure().union(&inl);
    let wc = order.weak().minus(&ser.inverse().union(&inl));
    (cmt, wc)
}

/// `GCT(G) = {Ω_◁ | ◁ ∈ ext(G)}` as a class over `Θ_G`.
///
/// Fails with `AxiomViolation` if the set differs from the class of one of
/// its members or if some `G^{◁}` differs from `G`.
pub fn gcomtrace_of_gso(g: &GsoStructure, cap: usize) -> Result<(GAlphabet, ClassSet)> {
    let theta = alphabet_of_gso(g)?;
    let n = g.carrier.len();
    let exts = extension_layers(g, cap)?;
    for l in &exts {
        let (c, w) = gso_of_order(g, &relorder::from_layers(n, l));
        if c != g.cmt || w != g.wc {
            return Err(Error::AxiomViolation { axiom: "G^◁ = G".into(), witness: format!("{l:?}") });
        }
    }
    let seqs: Vec<StepSeq> = exts.iter().map(|l| l.iter().map(|&m| Step(m)).collect()).collect();
    let gct = ClassSet::from_members(&theta, seqs.clone());
    if let Some(first) = seqs.first() {
        if congruence::enumerate_class(&theta, first, congruence::DEFAULT_CLASS_CAP)? != gct {
            return Err(Error::AxiomViolation {
                axiom: "GCT(G) is a g-comtrace".into(),
                witness: gct.representative().into(),
            });
        }
    }
    Ok((theta, gct))
}

/// The g-canonical representative read off `G = G^{s}`: at each stage the
/// `<st`-least label image `l[Y]` over `Y ∈ Z(X)`, where `Y ⊆ mins_≺(X)` is
/// nonempty, `<>`-free, and no `β ∈ X \ Y` has `β ⊏ α` for `α ∈ Y`.
/// Event order `<E` is the index order of `g.carrier.events()`.
pub fn semican(g: &GsoStructure, mins_cap: usize) -> Result<StepSeq> {
    let n = g.carrier.len();
    let prec = g.prec();
    let prec_in = prec.inverse();
    let wc_in = g.wc.inverse();
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    while remaining != 0 {
        let mins: Vec<usize> = (0..n).filter(|&a| remaining >> a & 1 == 1 && prec_in.row(a) & remaining == 0).collect();
        if mins.len() > mins_cap {
            return Err(Error::CarrierTooLarge { size: mins.len(), cap: mins_cap });
        }
        let mut best: Option<(Step, u64)> = None;
        for bits in 1u64..(1u64 << mins.len()) {
            let y = mins.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).fold(0u64, |m, (_, &a)| m | 1 << a);
            let admissible = mins.iter().filter(|&&a| y >> a & 1 == 1).all(|&a| {
                g.cmt.row(a) & y == 0 && wc_in.row(a) & remaining & !y == 0
            });
            if !admissible {
                continue;
            }
            let step = g.carrier.label_step(y);
            if best.is_none_or(|(b, _)| step_cmp(step, b) == Ordering::Less) {
                best = Some((step, y));
            }
        }
        let (step, y) = best.ok_or_else(|| {
            let names: Vec<String> = (0..n).filter(|&i| remaining >> i & 1 == 1).map(|i| g.carrier.point_name(i)).collect();
            Error::EmptyZ(format!("{{{}}}", names.join(",")))
        })?;
        out.push(step);
        remaining &= !y;
    }
    Ok(out)
}

/// Serializability decomposition of a step around one of its events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Serializability {
    /// Least `B ∋ a` with `A ≡ (A \ B) B` (or `A`), non-serializable to the left of `a`.
    pub left: Step,
    /// Least `C ∋ a` with `A ≡ C (A \ C)` (or `A`), non-serializable to the right of `a`.
    pub right: Step,
    /// Non-serializable `D ∋ a` with `A ≡ x D y`.
    pub core: Step,
    /// `x` in `A ≡ x D y`.
    pub prefix: StepSeq,
    /// `y` in `A ≡ x D y`.
    pub suffix: StepSeq,
}

/// Least `D ∋ a` with `(A \ D) × D ⊆ ser`, `A \ D ≠ ∅`; `A` if none.
pub fn left_part(alph: &GAlphabet, a_step: Step, a: usize) -> Step {
    a_step
        .subsets()
        .filter(|&d| d.contains(a) && d != a_step && alph.ser_product(a_step.minus(d), d))
        .min_by_key(|d| d.len())
        .unwrap_or(a_step)
}

/// Least `C ∋ a` with `C × (A \ C) ⊆ ser`, `A \ C ≠ ∅`; `A` if none.
pub fn right_part(alph: &GAlphabet, a_step: Step, a: usize) -> Step {
    a_step
        .subsets()
        .filter(|&c| c.contains(a) && c != a_step && alph.ser_product(c, a_step.minus(c)))
        .min_by_key(|c| c.len())
        .unwrap_or(a_step)
}

/// No split `A = B ∪ C` into nonempty parts with `B × C ⊆ ser`.
pub fn is_non_serializable(alph: &GAlphabet, a_step: Step) -> bool {
    a_step.subsets().all(|b| b == a_step || !alph.ser_product(b, a_step.minus(b)))
}

/// Left part, right part, and non-serializable core of `A` around `a`.
pub fn step_serializability(alph: &GAlphabet, a_step: Step, a: usize) -> Serializability {
    assert!(a_step.contains(a), "event not in step");
    let left = left_part(alph, a_step, a);
    let right = right_part(alph, a_step, a);
    let (mut prefix, mut suffix) = (Vec::new(), Vec::new());
    let mut core = a_step;
    loop {
        let l = left_part(alph, core, a);
        if l != core {
            prefix.push(core.minus(l));
            core = l;
            continue;
        }
        let r = right_part(alph, core, a);
        if r != core {
            suffix.insert(0, core.minus(r));
            core = r;
            continue;
        }
        break;
    }
    Serializability { left, right, core, prefix, suffix }
}
