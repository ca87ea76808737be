//! Stratified order structures: axioms, construction from step sequences and
//! comtraces, stratified extensions, and comtraces read back from a structure.

use crate::alphabet::{GAlphabet, Step};
use crate::congruence::{self, ClassSet};
use crate::error::{Error, Result};
use crate::relorder::{self, LayerConstraints, RelStructure, Relation};
use crate::stepseq::{self, Carrier, Enumerated};

/// `(X, ≺, ⊏)` satisfying S1–S4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoStructure {
    pub carrier: Carrier,
    /// `≺`, "earlier than".
    pub prec: Relation,
    /// `⊏`, "not later than".
    pub wc: Relation,
}

fn violation(axiom: &str, carrier: &Carrier, pts: &[usize]) -> Error {
    let names: Vec<String> = pts.iter().map(|&i| carrier.point_name(i)).collect();
    Error::AxiomViolation { axiom: axiom.to_string(), witness: format!("({})", names.join(",")) }
}

/// Checks S1–S4 and returns the first violation with a witness.
pub fn validate_so(carrier: Carrier, prec: Relation, wc: Relation) -> Result<SoStructure> {
    let n = carrier.len();
    assert!(prec.size() == n && wc.size() == n, "relations do not match the carrier");
    for a in 0..n {
        if wc.contains(a, a) {
            return Err(violation("S1", &carrier, &[a]));
        }
    }
    for (a, b) in prec.pairs() {
        if !wc.contains(a, b) {
            return Err(violation("S2", &carrier, &[a, b]));
        }
    }
    for (a, b) in wc.pairs() {
        for c in 0..n {
            if wc.contains(b, c) && a != c && !wc.contains(a, c) {
                return Err(violation("S3", &carrier, &[a, b, c]));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = (wc.contains(a, b) && prec.contains(b, c)) || (prec.contains(a, b) && wc.contains(b, c));
                if lhs && !prec.contains(a, c) {
                    return Err(violation("S4", &carrier, &[a, b, c]));
                }
            }
        }
    }
    Ok(SoStructure { carrier, prec, wc })
}

fn require_comtrace(alph: &GAlphabet) -> Result<()> {
    if alph.inl_is_empty() {
        Ok(())
    } else {
        Err(Error::InlNotEmpty)
    }
}

/// Local invariants `≺_u` and `⊏_u` of an enumerated step sequence.
pub fn local_invariants(alph: &GAlphabet, en: &Enumerated) -> RelStructure {
    let n = en.carrier.len();
    let (mut prec, mut wc) = (Relation::empty(n), Relation::empty(n));
    for a in 0..n {
        for b in 0..n {
            let (la, lb) = (en.carrier.label(a), en.carrier.label(b));
            if en.pos[a] < en.pos[b] && !alph.ser(la, lb) {
                prec.insert(a, b);
            }
            if a != b && en.pos[a] <= en.pos[b] && !alph.ser(lb, la) {
                wc.insert(a, b);
            }
        }
    }
    RelStructure::new(prec, wc)
}

/// `S^{u} = (Σ_u, ≺_u, ⊏_u)^◊`, validated.
pub fn so_of_stepseq(alph: &GAlphabet, s: &[Step]) -> Result<SoStructure> {
    require_comtrace(alph)?;
    let en = stepseq::enumerate_occurrences(alph, s)?;
    let d = relorder::diamond_closure(&local_invariants(alph, &en));
    validate_so(en.carrier, d.r1, d.r2)
}

/// `(∩ ◁_x, ∩ ◁_x⌢)` over the members of a class, on the carrier of `s`.
pub fn intersect_orders(alph: &GAlphabet, s: &[Step], class: &ClassSet) -> Result<(Carrier, Relation, Relation)> {
    let carrier = stepseq::enumerate_occurrences(alph, s)?.carrier;
    let n = carrier.len();
    let (mut strict, mut weak) = (Relation::full(n), Relation::full(n));
    for m in class.members() {
        let o = stepseq::order_of(&stepseq::enumerate_on(&carrier, m));
        weak = weak.inter(&o.weak());
        strict = strict.inter(&o);
    }
    Ok((carrier, strict, weak))
}

/// `S_{[u]} = (Σ_u, ∩ ◁_x, ∩ ◁_x⌢)` over the materialized class.
pub fn so_of_class(alph: &GAlphabet, s: &[Step], cap: usize) -> Result<SoStructure> {
    require_comtrace(alph)?;
    let class = congruence::enumerate_class(alph, s, cap)?;
    let (carrier, prec, wc) = intersect_orders(alph, s, &class)?;
    validate_so(carrier, prec, wc)
}

/// Stratified extensions as layer lists: `α ≺ β ⟹ α ◁ β`, `α ⊏ β ⟹ α ◁⌢ β`.
pub fn extension_layers(s: &SoStructure, cap: usize) -> Result<Vec<Vec<u64>>> {
    let c = LayerConstraints { before: s.prec.clone(), not_after: s.wc.clone(), ..LayerConstraints::free(s.carrier.len()) };
    relorder::constrained_layerings(&c, cap)
}

/// `ext(S)` as relations.
pub fn extensions_so(s: &SoStructure, cap: usize) -> Result<Vec<Relation>> {
    let n = s.carrier.len();
    Ok(extension_layers(s, cap)?.iter().map(|l| relorder::from_layers(n, l)).collect())
}

/// `ser_S` over carrier points: `a ⌢_≺ b ∧ ¬(b ⊏ a)`.
pub fn ser_of_so(s: &SoStructure) -> Relation {
    s.prec.incomparable().minus(&s.wc.inverse())
}

/// `Θ_S = (X, sim_S, ser_S)` with carrier points as events, in carrier order.
pub fn alphabet_of_so(s: &SoStructure) -> Result<GAlphabet> {
    let n = s.carrier.len();
    let names = (0..n).map(|i| s.carrier.point_name(i)).collect();
    let sim = s.prec.incomparable();
    let ser = ser_of_so(s);
    GAlphabet::from_rows(names, sim.rows().to_vec(), ser.rows().to_vec(), vec![0; n])
}

/// `S^{◁} = (X, ◁ \ ser_S, ◁⌢ \ ser_S⁻¹)`.
pub fn so_of_order(s: &SoStructure, order: &Relation) -> (Relation, Relation) {
    let ser = ser_of_so(s);
    (order.minus(&ser), order.weak().minus(&ser.inverse()))
}

/// `CT(S) = {Ω_◁ | ◁ ∈ ext(S)}` as a class over `Θ_S`.
///
/// Fails with `AxiomViolation` if the set differs from the class of one of
/// its members or if some `S^{◁}` differs from `S`.
pub fn comtrace_of_so(s: &SoStructure, cap: usize) -> Result<(GAlphabet, ClassSet)> {
    let theta = alphabet_of_so(s)?;
    let n = s.carrier.len();
    let exts = extension_layers(s, cap)?;
    for l in &exts {
        let (p, w) = so_of_order(s, &relorder::from_layers(n, l));
        if p != s.prec || w != s.wc {
            return Err(Error::AxiomViolation { axiom: "S^◁ = S".into(), witness: format!("{l:?}") });
        }
    }
    let seqs: Vec<Vec<Step>> = exts.iter().map(|l| l.iter().map(|&m| Step(m)).collect()).collect();
    let ct = ClassSet::from_members(&theta, seqs.clone());
    if let Some(first) = seqs.first() {
        if congruence::enumerate_class(&theta, first, congruence::DEFAULT_CLASS_CAP)? != ct {
            return Err(Error::AxiomViolation { axiom: "CT(S) is a comtrace".into(), witness: ct.representative().into() });
        }
    }
    Ok((theta, ct))
}

/// Witness `(a,b)` against π3: `a ◁ b` and `b ◁ a` in some orders but `a`
/// and `b` simultaneous in none.
pub fn pi3_witness(orders: &[Relation]) -> Option<(usize, usize)> {
    let n = orders.first()?.size();
    for a in 0..n {
        for b in 0..n {
            let ab = orders.iter().any(|o| o.contains(a, b));
            let ba = orders.iter().any(|o| o.contains(b, a));
            let sim = orders.iter().any(|o| a != b && !o.contains(a, b) && !o.contains(b, a));
            if ab && ba && !sim {
                return Some((a, b));
            }
        }
    }
    None
}

/// π3 holds for the family.
pub fn pi3_check(orders: &[Relation]) -> bool {
    pi3_witness(orders).is_none()
}
