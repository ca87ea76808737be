//! Finite binary relations over an indexed carrier `0..n` (n ≤ 64), order
//! classification, extension enumeration, and the ◊ and ⋈ closures.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum carrier size supported by the dense representation.
pub const MAX_POINTS: usize = 64;

/// Default carrier cap for extension enumeration.
pub const DEFAULT_EXTENSION_CAP: usize = 8;

/// A binary relation stored as one bit row per carrier point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation[{}]{:?}", self.n, self.pairs())
    }
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "carrier too large for dense relation");
        Relation { n, rows: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.rows[i] = 1 << i;
        }
        r
    }

    /// `X × X`.
    pub fn full(n: usize) -> Self {
        Relation { n, rows: vec![mask(n); n] }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut r = Self::empty(n);
        for (a, b) in pairs {
            r.insert(a, b);
        }
        r
    }

    pub fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        assert_eq!(rows.len(), n);
        assert!(rows.iter().all(|r| r & !mask(n) == 0));
        Relation { n, rows }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, a: usize) -> u64 {
        self.rows[a]
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n);
        self.rows[a] |= 1 << b;
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.rows[a] &= !(1 << b);
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.contains(a, b) {
                    v.push((a, b));
                }
            }
        }
        v
    }

    fn zip(&self, o: &Relation, f: impl Fn(u64, u64) -> u64) -> Relation {
        assert_eq!(self.n, o.n, "relations over different carriers");
        Relation { n: self.n, rows: self.rows.iter().zip(&o.rows).map(|(&a, &b)| f(a, b)).collect() }
    }

    pub fn union(&self, o: &Relation) -> Relation {
        self.zip(o, |a, b| a | b)
    }

    pub fn inter(&self, o: &Relation) -> Relation {
        self.zip(o, |a, b| a & b)
    }

    pub fn minus(&self, o: &Relation) -> Relation {
        self.zip(o, |a, b| a & !b)
    }

    pub fn is_subset(&self, o: &Relation) -> bool {
        self.rows.iter().zip(&o.rows).all(|(&a, &b)| a & !b == 0)
    }

    pub fn inverse(&self) -> Relation {
        let mut r = Relation::empty(self.n);
        for (a, b) in self.pairs() {
            r.insert(b, a);
        }
        r
    }

    /// `self ∘ o = {(a,c) | a self b, b o c}`.
    pub fn compose(&self, o: &Relation) -> Relation {
        assert_eq!(self.n, o.n);
        let rows = (0..self.n)
            .map(|a| {
                let mut acc = 0;
                let mut m = self.rows[a];
                while m != 0 {
                    let b = m.trailing_zeros() as usize;
                    m &= m - 1;
                    acc |= o.rows[b];
                }
                acc
            })
            .collect();
        Relation { n: self.n, rows }
    }

    /// `R⁺`.
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..self.n {
            for i in 0..self.n {
                if rows[i] >> k & 1 == 1 {
                    rows[i] |= rows[k];
                }
            }
        }
        Relation { n: self.n, rows }
    }

    /// `R*`.
    pub fn reflexive_transitive(&self) -> Relation {
        self.transitive_closure().union(&Relation::identity(self.n))
    }

    /// `R^sym = R ∪ R⁻¹`.
    pub fn symmetric_closure(&self) -> Relation {
        self.union(&self.inverse())
    }

    /// `R^⋒ = R ∩ R⁻¹`.
    pub fn symmetric_intersection(&self) -> Relation {
        self.inter(&self.inverse())
    }

    /// `R^C = (X × X) \ R`; contains the identity wherever `R` is irreflexive.
    pub fn complement(&self) -> Relation {
        Relation::full(self.n).minus(self)
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.n).all(|a| !self.contains(a, a))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverse()
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subset(self)
    }

    /// `⌢_R`: distinct and unrelated in either direction.
    pub fn incomparable(&self) -> Relation {
        self.symmetric_closure().union(&Relation::identity(self.n)).complement()
    }

    /// `R⌢ = R ∪ ⌢_R`.
    pub fn weak(&self) -> Relation {
        self.union(&self.incomparable())
    }

    /// `≃_R = ⌢_R ∪ id`.
    pub fn simeq(&self) -> Relation {
        self.incomparable().union(&Relation::identity(self.n))
    }

    pub fn restrict_rows(&self, keep: u64) -> Relation {
        Relation {
            n: self.n,
            rows: self.rows.iter().enumerate().map(|(i, &r)| if keep >> i & 1 == 1 { r & keep } else { 0 }).collect(),
        }
    }
}

/// Order classification, from weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OrderClass {
    NotOrder,
    Partial,
    Stratified,
    Total,
}

/// Checks irreflexivity and transitivity, then transitivity of `≃`, then
/// emptiness of `⌢`.
pub fn classify_order(r: &Relation) -> OrderClass {
    if !r.is_irreflexive() || !r.is_transitive() {
        OrderClass::NotOrder
    } else if !r.simeq().is_transitive() {
        OrderClass::Partial
    } else if !r.incomparable().is_empty() {
        OrderClass::Stratified
    } else {
        OrderClass::Total
    }
}

/// `≃`-classes of a stratified order in increasing order.
pub fn layers(r: &Relation) -> Result<Vec<u64>> {
    if classify_order(r) < OrderClass::Stratified {
        return Err(Error::NotStratified(format!("{:?}", r.pairs())));
    }
    let n = r.size();
    let mut remaining = mask(n);
    let mut out = Vec::new();
    while remaining != 0 {
        let mut layer = 0u64;
        for b in 0..n {
            if remaining >> b & 1 == 1 && (0..n).all(|a| !(remaining >> a & 1 == 1 && r.contains(a, b))) {
                layer |= 1 << b;
            }
        }
        out.push(layer);
        remaining &= !layer;
    }
    Ok(out)
}

/// The stratified order whose `≃`-classes are `layers`, in order.
pub fn from_layers(n: usize, layers: &[u64]) -> Relation {
    let mut r = Relation::empty(n);
    let mut before = 0u64;
    for &l in layers.iter().rev() {
        for a in 0..n {
            if l >> a & 1 == 1 {
                r.rows[a] = before;
            }
        }
        before |= l;
    }
    r
}

/// Constraints for layered enumeration of stratified orders.
#[derive(Debug, Clone)]
pub struct LayerConstraints {
    /// `(a,b)` forces `a` strictly before `b`.
    pub before: Relation,
    /// `(a,b)` forces `a` not after `b`.
    pub not_after: Relation,
    /// `(a,b)` forbids `a` and `b` in the same layer.
    pub apart: Relation,
    /// Layers of size one only.
    pub total: bool,
}

impl LayerConstraints {
    pub fn free(n: usize) -> Self {
        LayerConstraints {
            before: Relation::empty(n),
            not_after: Relation::empty(n),
            apart: Relation::empty(n),
            total: false,
        }
    }
}

/// Every stratified order (as a layer list) satisfying `c`.
pub fn constrained_layerings(c: &LayerConstraints, cap: usize) -> Result<Vec<Vec<u64>>> {
    let n = c.before.size();
    if n > cap {
        return Err(Error::CarrierTooLarge { size: n, cap });
    }
    let before_in = c.before.inverse();
    let not_after_in = c.not_after.inverse();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    layer_rec(c, &before_in, &not_after_in, mask(n), &mut stack, &mut out);
    Ok(out)
}

fn layer_rec(
    c: &LayerConstraints,
    before_in: &Relation,
    not_after_in: &Relation,
    remaining: u64,
    stack: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    let avail = (0..c.before.size())
        .filter(|&x| remaining >> x & 1 == 1 && before_in.row(x) & remaining == 0)
        .fold(0u64, |m, x| m | 1 << x);
    let mut sub = avail;
    while sub != 0 {
        let layer = sub;
        sub = (sub - 1) & avail;
        if c.total && layer.count_ones() != 1 {
            continue;
        }
        let ok = (0..c.before.size()).filter(|&x| layer >> x & 1 == 1).all(|x| {
            not_after_in.row(x) & remaining & !layer == 0 && c.apart.row(x) & layer == 0
        });
        if ok {
            stack.push(layer);
            layer_rec(c, before_in, not_after_in, remaining & !layer, stack, out);
            stack.pop();
        }
    }
}

/// Extension kind for posets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionKind {
    Total,
    Stratified,
}

/// All total or stratified extensions of a partial order.
pub fn extensions(poset: &Relation, kind: ExtensionKind, cap: usize) -> Result<Vec<Relation>> {
    if classify_order(poset) == OrderClass::NotOrder {
        return Err(Error::AxiomViolation { axiom: "partial order".into(), witness: format!("{:?}", poset.pairs()) });
    }
    let n = poset.size();
    let c = LayerConstraints { before: poset.clone(), total: kind == ExtensionKind::Total, ..LayerConstraints::free(n) };
    Ok(constrained_layerings(&c, cap)?.iter().map(|l| from_layers(n, l)).collect())
}

/// Intersection of a nonempty family; `X × X` for an empty one.
pub fn intersect_all<'a, I: IntoIterator<Item = &'a Relation>>(n: usize, it: I) -> Relation {
    it.into_iter().fold(Relation::full(n), |acc, r| acc.inter(r))
}

/// `≺` equals both the intersection of its total extensions and of its
/// stratified extensions.
pub fn szpilrajn_check(poset: &Relation, cap: usize) -> Result<bool> {
    let n = poset.size();
    let tot = extensions(poset, ExtensionKind::Total, cap)?;
    let strat = extensions(poset, ExtensionKind::Stratified, cap)?;
    Ok(intersect_all(n, &tot) == *poset && intersect_all(n, &strat) == *poset)
}

/// A relational structure `(X, R1, R2)` over a shared carrier `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelStructure {
    pub r1: Relation,
    pub r2: Relation,
}

impl RelStructure {
    pub fn new(r1: Relation, r2: Relation) -> Self {
        assert_eq!(r1.size(), r2.size());
        RelStructure { r1, r2 }
    }

    pub fn size(&self) -> usize {
        self.r1.size()
    }

    /// Componentwise inclusion.
    pub fn is_substructure(&self, o: &RelStructure) -> bool {
        self.r1.is_subset(&o.r1) && self.r2.is_subset(&o.r2)
    }
}

/// `(X, R1, R2)^◊ = (X, (R1∪R2)* ∘ R1 ∘ (R1∪R2)*, (R1∪R2)* \ id)`.
pub fn diamond_closure(s: &RelStructure) -> RelStructure {
    let n = s.size();
    let star = s.r1.union(&s.r2).reflexive_transitive();
    let prec = star.compose(&s.r1).compose(&star);
    let wc = star.minus(&Relation::identity(n));
    RelStructure::new(prec, wc)
}

/// The ◊-closure is a so-structure iff its first component is irreflexive.
pub fn diamond_is_so(s: &RelStructure) -> bool {
    diamond_closure(s).r1.is_irreflexive()
}

/// Commutative closure: with `R3 = R1 ∩ R2*` and `(≺, ⊏) = (X, R3, R2)^◊`,
/// returns `(X, ≺^sym ∪ R1, ⊏)`.
pub fn bowtie_closure(s: &RelStructure) -> RelStructure {
    let r3 = s.r1.inter(&s.r2.reflexive_transitive());
    let d = diamond_closure(&RelStructure::new(r3, s.r2.clone()));
    RelStructure::new(d.r1.symmetric_closure().union(&s.r1), d.r2)
}
