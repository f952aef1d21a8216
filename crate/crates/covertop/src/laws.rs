//! Law checkers for covers, with and without an operation.
//!
//! A failed law is a result, not an error: every checker returns a
//! [`LawReport`] carrying the first counterexample found in canonical
//! order (elements by base index, subsets by ascending membership mask,
//! tuples nested outer-to-inner in the order the report lists them).
//! Errors are reserved for size caps and mismatched bases.
//!
//! Laws that quantify only over elements accept bases up to
//! [`caps::ELEMENT_LAWS`]; anything sweeping all subsets is capped at
//! [`caps::SUBSET_LAWS`] so the sweep stays within `u64` masks and desk
//! time. On bases with a partial product (bounded list bases) the
//! quantifier instances that hit an undefined product are skipped:
//! positive verdicts are then sound for the representable fragment only.

use serde::Serialize;

use crate::base::Base;
use crate::caps;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::mask;
use crate::saturation::Cover;
use crate::subset::Subset;

/// Everything the checkers in this module can pass judgement on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Expansive,
    Monotone,
    Idempotent,
    JoinSaturation,
    MeetSaturation,
    Stability,
    Localization,
    Associativity,
    Commutativity,
    Distributivity,
    Weakening,
    Contraction,
    Unit,
    FrameEquality,
    Adjunction,
    WellDefined,
}

impl Law {
    pub fn as_str(self) -> &'static str {
        match self {
            Law::Expansive => "expansive",
            Law::Monotone => "monotone",
            Law::Idempotent => "idempotent",
            Law::JoinSaturation => "join_saturation",
            Law::MeetSaturation => "meet_saturation",
            Law::Stability => "stability",
            Law::Localization => "localization",
            Law::Associativity => "associativity",
            Law::Commutativity => "commutativity",
            Law::Distributivity => "distributivity",
            Law::Weakening => "weakening",
            Law::Contraction => "contraction",
            Law::Unit => "unit",
            Law::FrameEquality => "frame_equality",
            Law::Adjunction => "adjunction",
            Law::WellDefined => "well_defined",
        }
    }
}

impl std::fmt::Display for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Quantifier granularity for laws that exist in both an element-level
/// and a subset-level reading. The two variants are logically equivalent
/// for operations lifted from an element table; tests cross-check that.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Elements,
    Subsets,
}

/// The first counterexample of a failed law, rendered with element
/// names so reports are readable without the base at hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<String>,
    pub subsets: Vec<Vec<String>>,
}

impl Witness {
    pub(crate) fn elems(base: &Base, elems: &[usize]) -> Witness {
        Witness {
            elements: elems.iter().map(|&i| base.name(i).to_string()).collect(),
            subsets: Vec::new(),
        }
    }

    pub(crate) fn mixed(base: &Base, elems: &[usize], subsets: &[&Subset]) -> Witness {
        Witness {
            elements: elems.iter().map(|&i| base.name(i).to_string()).collect(),
            subsets: subsets.iter().map(|s| s.names()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl LawReport {
    pub(crate) fn from_witness(law: Law, witness: Option<Witness>) -> LawReport {
        LawReport {
            law,
            passed: witness.is_none(),
            witness,
        }
    }
}

fn check_bases<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<()> {
    if cover.base() != op.base() {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// Shared machinery for exhaustive subset sweeps: every subset of the
/// base as a `u64` mask, its saturation, and the element products.
pub(crate) struct MaskCtx {
    pub(crate) base: Base,
    pub(crate) n: usize,
    pub(crate) total: usize,
    pub(crate) sat: Vec<u64>,
    pub(crate) prod: Vec<Option<u64>>,
}

impl MaskCtx {
    pub(crate) fn new<C: Cover + ?Sized>(
        cover: &C,
        op: Option<&DeltaOp>,
        what: &'static str,
        cap: usize,
    ) -> Result<MaskCtx> {
        let base = cover.base().clone();
        let n = base.len();
        caps::ensure(what, cap, n)?;
        let total = 1usize << n;
        let mut sat = Vec::with_capacity(total);
        for m in 0..total as u64 {
            let u = Subset::from_words(&base, mask::from_low_word(n, m));
            sat.push(mask::low_word(cover.saturate(&u)?.words()));
        }
        let mut prod = Vec::new();
        if let Some(op) = op {
            if op.base() != &base {
                return Err(Error::BaseMismatch);
            }
            for a in 0..n {
                for b in 0..n {
                    prod.push(op.get(a, b).map(|p| mask::low_word(p.words())));
                }
            }
        }
        Ok(MaskCtx {
            base,
            n,
            total,
            sat,
            prod,
        })
    }

    /// `U ∘ V` as a mask, or `None` when a pair inside the rectangle has
    /// no product.
    pub(crate) fn lift(&self, u: u64, v: u64) -> Option<u64> {
        let mut out = 0u64;
        for a in 0..self.n {
            if u & (1 << a) == 0 {
                continue;
            }
            for b in 0..self.n {
                if v & (1 << b) != 0 {
                    out |= self.prod[a * self.n + b]?;
                }
            }
        }
        Some(out)
    }

    /// `U ◁ V`.
    pub(crate) fn covers(&self, u: u64, v: u64) -> bool {
        u & !self.sat[v as usize] == 0
    }

    pub(crate) fn sat_eq(&self, u: u64, v: u64) -> bool {
        self.sat[u as usize] == self.sat[v as usize]
    }

    pub(crate) fn subset(&self, m: u64) -> Subset {
        Subset::from_words(&self.base, mask::from_low_word(self.n, m))
    }

    pub(crate) fn witness(&self, masks: &[u64]) -> Witness {
        let subsets = masks.iter().map(|&m| self.subset(m)).collect::<Vec<_>>();
        Witness::mixed(&self.base, &[], &subsets.iter().collect::<Vec<_>>())
    }
}

/// Stability: from `U₁ ◁ V₁` and `U₂ ◁ V₂` conclude `U₁∘U₂ ◁ V₁∘V₂`.
/// The element level keeps the premises on single elements, `a ◁ U` and
/// `b ◁ V` entailing `a∘b ◁ U∘V`; both levels quantify subsets, so both
/// run under the subset-sweep cap.
pub fn check_stability<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "stability sweep", caps::SUBSET_LAWS)?;
    let witness = match level {
        Level::Subsets => 'sweep: {
            for u1 in 0..ctx.total as u64 {
                for v1 in 0..ctx.total as u64 {
                    if !ctx.covers(u1, v1) {
                        continue;
                    }
                    for u2 in 0..ctx.total as u64 {
                        for v2 in 0..ctx.total as u64 {
                            if !ctx.covers(u2, v2) {
                                continue;
                            }
                            let (Some(lu), Some(lv)) = (ctx.lift(u1, u2), ctx.lift(v1, v2))
                            else {
                                continue;
                            };
                            if !ctx.covers(lu, lv) {
                                break 'sweep Some(ctx.witness(&[u1, v1, u2, v2]));
                            }
                        }
                    }
                }
            }
            None
        }
        Level::Elements => 'sweep: {
            for a in 0..ctx.n {
                for b in 0..ctx.n {
                    let Some(ab) = ctx.prod[a * ctx.n + b] else {
                        continue;
                    };
                    for u in 0..ctx.total as u64 {
                        if !ctx.covers(1 << a, u) {
                            continue;
                        }
                        for v in 0..ctx.total as u64 {
                            if !ctx.covers(1 << b, v) {
                                continue;
                            }
                            let Some(uv) = ctx.lift(u, v) else { continue };
                            if !ctx.covers(ab, uv) {
                                let w = [ctx.subset(u), ctx.subset(v)];
                                break 'sweep Some(Witness::mixed(
                                    &ctx.base,
                                    &[a, b],
                                    &[&w[0], &w[1]],
                                ));
                            }
                        }
                    }
                }
            }
            None
        }
    };
    Ok(LawReport::from_witness(Law::Stability, witness))
}

/// Localization: `U ◁ V` entails `U∘W ◁ V∘W`. The element level is the
/// inductive-generation rule `a ◁ U ⇒ a∘b ◁ U∘b`.
pub fn check_localization<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "localization sweep", caps::SUBSET_LAWS)?;
    let witness = match level {
        Level::Subsets => 'sweep: {
            for u in 0..ctx.total as u64 {
                for v in 0..ctx.total as u64 {
                    if !ctx.covers(u, v) {
                        continue;
                    }
                    for w in 0..ctx.total as u64 {
                        let (Some(uw), Some(vw)) = (ctx.lift(u, w), ctx.lift(v, w)) else {
                            continue;
                        };
                        if !ctx.covers(uw, vw) {
                            break 'sweep Some(ctx.witness(&[u, v, w]));
                        }
                    }
                }
            }
            None
        }
        Level::Elements => 'sweep: {
            for a in 0..ctx.n {
                for b in 0..ctx.n {
                    let Some(ab) = ctx.prod[a * ctx.n + b] else {
                        continue;
                    };
                    for u in 0..ctx.total as u64 {
                        if !ctx.covers(1 << a, u) {
                            continue;
                        }
                        let Some(ub) = ctx.lift(u, 1 << b) else {
                            continue;
                        };
                        if !ctx.covers(ab, ub) {
                            let w = ctx.subset(u);
                            break 'sweep Some(Witness::mixed(&ctx.base, &[a, b], &[&w]));
                        }
                    }
                }
            }
            None
        }
    };
    Ok(LawReport::from_witness(Law::Localization, witness))
}

/// Associativity up to saturation: `𝒜((U∘V)∘W) = 𝒜(U∘(V∘W))`.
pub fn check_associativity<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let witness = match level {
        Level::Subsets => {
            let ctx = MaskCtx::new(cover, Some(op), "associativity sweep", caps::SUBSET_LAWS)?;
            let mut found = None;
            'sweep: for u in 0..ctx.total as u64 {
                for v in 0..ctx.total as u64 {
                    for w in 0..ctx.total as u64 {
                        let left = ctx.lift(u, v).and_then(|uv| ctx.lift(uv, w));
                        let right = ctx.lift(v, w).and_then(|vw| ctx.lift(u, vw));
                        let (Some(left), Some(right)) = (left, right) else {
                            continue;
                        };
                        if !ctx.sat_eq(left, right) {
                            found = Some(ctx.witness(&[u, v, w]));
                            break 'sweep;
                        }
                    }
                }
            }
            found
        }
        Level::Elements => {
            caps::ensure("element law sweep", caps::ELEMENT_LAWS, cover.base().len())?;
            element_associativity_witness(cover, op)?
        }
    };
    Ok(LawReport::from_witness(Law::Associativity, witness))
}

fn element_associativity_witness<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
) -> Result<Option<Witness>> {
    let base = cover.base();
    let n = base.len();
    for b in 0..n {
        for c in 0..n {
            for d in 0..n {
                let (Some(bc), Some(cd)) = (op.get(b, c), op.get(c, d)) else {
                    continue;
                };
                let sd = Subset::singleton(base, d);
                let sb = Subset::singleton(base, b);
                let (left, lo) = crate::op::lift(op, bc, &sd)?;
                let (right, ro) = crate::op::lift(op, &sb, cd)?;
                if lo || ro {
                    continue;
                }
                if !cover.sat_equal(&left, &right)? {
                    return Ok(Some(Witness::elems(base, &[b, c, d])));
                }
            }
        }
    }
    Ok(None)
}

/// Commutativity up to saturation: `𝒜(U∘V) = 𝒜(V∘U)`.
pub fn check_commutativity<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let witness = match level {
        Level::Subsets => {
            let ctx = MaskCtx::new(cover, Some(op), "commutativity sweep", caps::SUBSET_LAWS)?;
            let mut found = None;
            'sweep: for u in 0..ctx.total as u64 {
                for v in 0..ctx.total as u64 {
                    let (Some(uv), Some(vu)) = (ctx.lift(u, v), ctx.lift(v, u)) else {
                        continue;
                    };
                    if !ctx.sat_eq(uv, vu) {
                        found = Some(ctx.witness(&[u, v]));
                        break 'sweep;
                    }
                }
            }
            found
        }
        Level::Elements => {
            caps::ensure("element law sweep", caps::ELEMENT_LAWS, cover.base().len())?;
            let base = cover.base();
            let mut found = None;
            'sweep: for b in 0..base.len() {
                for c in 0..base.len() {
                    let (Some(bc), Some(cb)) = (op.get(b, c), op.get(c, b)) else {
                        continue;
                    };
                    if !cover.sat_equal(bc, cb)? {
                        found = Some(Witness::elems(base, &[b, c]));
                        break 'sweep;
                    }
                }
            }
            found
        }
    };
    Ok(LawReport::from_witness(Law::Commutativity, witness))
}

/// Distributivity of `∘^𝒜` over `⋁^𝒜` on the saturated-subset lattice:
/// `𝒜(P ∘ 𝒜(Q∪R)) = 𝒜(𝒜(P∘Q) ∪ 𝒜(P∘R))` for saturated `P, Q, R`.
pub fn check_distributivity<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "distributivity sweep", caps::SUBSET_LAWS)?;
    let mut points: Vec<u64> = Vec::new();
    for m in 0..ctx.total {
        let s = ctx.sat[m];
        if !points.contains(&s) {
            points.push(s);
        }
    }
    points.sort_unstable();
    let mut witness = None;
    'sweep: for &p in &points {
        for &q in &points {
            for &r in &points {
                let join = ctx.sat[(q | r) as usize];
                let (Some(left), Some(pq), Some(pr)) =
                    (ctx.lift(p, join), ctx.lift(p, q), ctx.lift(p, r))
                else {
                    continue;
                };
                let right = ctx.sat[pq as usize] | ctx.sat[pr as usize];
                if !ctx.sat_eq(left, right) {
                    witness = Some(ctx.witness(&[p, q, r]));
                    break 'sweep;
                }
            }
        }
    }
    Ok(LawReport::from_witness(Law::Distributivity, witness))
}

/// Weakening: the product refines both factors, `U∘V ◁ U` and `U∘V ◁ V`
/// (on elements: `a∘b ◁ a` and `a∘b ◁ b`).
pub fn check_weakening<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let witness = match level {
        Level::Subsets => {
            let ctx = MaskCtx::new(cover, Some(op), "weakening sweep", caps::SUBSET_LAWS)?;
            let mut found = None;
            'sweep: for u in 0..ctx.total as u64 {
                for v in 0..ctx.total as u64 {
                    let Some(uv) = ctx.lift(u, v) else { continue };
                    if !ctx.covers(uv, u) || !ctx.covers(uv, v) {
                        found = Some(ctx.witness(&[u, v]));
                        break 'sweep;
                    }
                }
            }
            found
        }
        Level::Elements => {
            caps::ensure("element law sweep", caps::ELEMENT_LAWS, cover.base().len())?;
            let base = cover.base();
            let mut found = None;
            'sweep: for b in 0..base.len() {
                for c in 0..base.len() {
                    let Some(bc) = op.get(b, c) else { continue };
                    let down_b = cover.saturate(&Subset::singleton(base, b))?;
                    let down_c = cover.saturate(&Subset::singleton(base, c))?;
                    if !bc.is_subset(&down_b)? || !bc.is_subset(&down_c)? {
                        found = Some(Witness::elems(base, &[b, c]));
                        break 'sweep;
                    }
                }
            }
            found
        }
    };
    Ok(LawReport::from_witness(Law::Weakening, witness))
}

/// Contraction: everything refines its own square, `U ◁ U∘U` (on
/// elements: `a ◁ a∘a`).
pub fn check_contraction<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    let witness = match level {
        Level::Subsets => {
            let ctx = MaskCtx::new(cover, Some(op), "contraction sweep", caps::SUBSET_LAWS)?;
            let mut found = None;
            for u in 0..ctx.total as u64 {
                let Some(uu) = ctx.lift(u, u) else { continue };
                if !ctx.covers(u, uu) {
                    found = Some(ctx.witness(&[u]));
                    break;
                }
            }
            found
        }
        Level::Elements => {
            caps::ensure("element law sweep", caps::ELEMENT_LAWS, cover.base().len())?;
            let base = cover.base();
            let mut found = None;
            for a in 0..base.len() {
                let Some(aa) = op.get(a, a) else { continue };
                if !cover.saturate(aa)?.contains(a) {
                    found = Some(Witness::elems(base, &[a]));
                    break;
                }
            }
            found
        }
    };
    Ok(LawReport::from_witness(Law::Contraction, witness))
}

/// Unit law: `U∘I =_𝒜 U =_𝒜 I∘U` (on elements, with `U` a singleton).
pub fn check_unit<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    unit: &Subset,
    level: Level,
) -> Result<LawReport> {
    check_bases(cover, op)?;
    if unit.base() != cover.base() {
        return Err(Error::BaseMismatch);
    }
    let witness = match level {
        Level::Subsets => {
            let ctx = MaskCtx::new(cover, Some(op), "unit sweep", caps::SUBSET_LAWS)?;
            let i = mask::low_word(unit.words());
            let mut found = None;
            for u in 0..ctx.total as u64 {
                let (Some(ui), Some(iu)) = (ctx.lift(u, i), ctx.lift(i, u)) else {
                    continue;
                };
                if !ctx.sat_eq(ui, u) || !ctx.sat_eq(iu, u) {
                    found = Some(ctx.witness(&[u]));
                    break;
                }
            }
            found
        }
        Level::Elements => {
            caps::ensure("element law sweep", caps::ELEMENT_LAWS, cover.base().len())?;
            let base = cover.base();
            let mut found = None;
            for a in 0..base.len() {
                let sa = Subset::singleton(base, a);
                let (ai, lo) = crate::op::lift(op, &sa, unit)?;
                let (ia, ro) = crate::op::lift(op, unit, &sa)?;
                if lo || ro {
                    continue;
                }
                if !cover.sat_equal(&ai, &sa)? || !cover.sat_equal(&ia, &sa)? {
                    found = Some(Witness::elems(base, &[a]));
                    break;
                }
            }
            found
        }
    };
    Ok(LawReport::from_witness(Law::Unit, witness))
}

/// Frame equality: the product presents the meet, `𝒜(U∘V) = 𝒜U ∩ 𝒜V`.
pub fn check_frame_equality<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "frame equality sweep", caps::SUBSET_LAWS)?;
    let mut witness = None;
    'sweep: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            let Some(uv) = ctx.lift(u, v) else { continue };
            let meet = ctx.sat[u as usize] & ctx.sat[v as usize];
            if ctx.sat[uv as usize] != meet {
                witness = Some(ctx.witness(&[u, v]));
                break 'sweep;
            }
        }
    }
    Ok(LawReport::from_witness(Law::FrameEquality, witness))
}

/// The residuation adjunction: `W∘U ◁ V ⟺ W ◁ U→V`, exhaustively over
/// all subset triples. Triples are visited in `(U, V, W)` order; the
/// witness lists `(W, U, V)` as in the rule.
pub fn check_adjunction<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "adjunction sweep", caps::ADJUNCTION_BASE)?;
    let mut witness = None;
    'sweep: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            let mut imp = 0u64;
            for a in 0..ctx.n {
                if let Some(au) = ctx.lift(1 << a, u) {
                    if ctx.covers(au, v) {
                        imp |= 1 << a;
                    }
                }
            }
            for w in 0..ctx.total as u64 {
                let Some(wu) = ctx.lift(w, u) else { continue };
                let lhs = ctx.covers(wu, v);
                let rhs = ctx.covers(w, imp);
                if lhs != rhs {
                    witness = Some(ctx.witness(&[w, u, v]));
                    break 'sweep;
                }
            }
        }
    }
    Ok(LawReport::from_witness(Law::Adjunction, witness))
}

/// Well-definedness of `∘` on saturated classes: `𝒜(𝒜U ∘ 𝒜V) = 𝒜(U∘V)`.
pub fn check_well_defined<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<LawReport> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "well-definedness sweep", caps::SUBSET_LAWS)?;
    let mut witness = None;
    'sweep: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            let plain = ctx.lift(u, v);
            let saturated = ctx.lift(ctx.sat[u as usize], ctx.sat[v as usize]);
            let (Some(plain), Some(saturated)) = (plain, saturated) else {
                continue;
            };
            if !ctx.sat_eq(plain, saturated) {
                witness = Some(ctx.witness(&[u, v]));
                break 'sweep;
            }
        }
    }
    Ok(LawReport::from_witness(Law::WellDefined, witness))
}

/// The closure-operator laws of saturation itself, plus the lattice
/// identities: joins may saturate their arguments first, and the meet of
/// two saturated subsets is saturated.
pub fn closure_law_suite<C: Cover + ?Sized>(cover: &C) -> Result<Vec<LawReport>> {
    let ctx = MaskCtx::new(cover, None, "closure law sweep", caps::SUBSET_LAWS)?;
    let mut reports = Vec::new();

    let mut witness = None;
    for u in 0..ctx.total as u64 {
        if !ctx.covers(u, u) {
            witness = Some(ctx.witness(&[u]));
            break;
        }
    }
    reports.push(LawReport::from_witness(Law::Expansive, witness));

    let mut witness = None;
    'mono: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            if u & !v == 0 && ctx.sat[u as usize] & !ctx.sat[v as usize] != 0 {
                witness = Some(ctx.witness(&[u, v]));
                break 'mono;
            }
        }
    }
    reports.push(LawReport::from_witness(Law::Monotone, witness));

    let mut witness = None;
    for u in 0..ctx.total as u64 {
        let s = ctx.sat[u as usize];
        if ctx.sat[s as usize] != s {
            witness = Some(ctx.witness(&[u]));
            break;
        }
    }
    reports.push(LawReport::from_witness(Law::Idempotent, witness));

    let mut witness = None;
    'join: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            for w in 0..ctx.total as u64 {
                let pre = ctx.sat[(u | v | w) as usize];
                let post =
                    ctx.sat[(ctx.sat[u as usize] | ctx.sat[v as usize] | ctx.sat[w as usize])
                        as usize];
                if pre != post {
                    witness = Some(ctx.witness(&[u, v, w]));
                    break 'join;
                }
            }
        }
    }
    reports.push(LawReport::from_witness(Law::JoinSaturation, witness));

    let mut witness = None;
    'meet: for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            let meet = ctx.sat[u as usize] & ctx.sat[v as usize];
            if ctx.sat[meet as usize] != meet {
                witness = Some(ctx.witness(&[u, v]));
                break 'meet;
            }
        }
    }
    reports.push(LawReport::from_witness(Law::MeetSaturation, witness));

    Ok(reports)
}

/// The six predicates comparing `𝒜(U∘V)` with `𝒜U ∩ 𝒜V`. The three
/// inclusion-to-weakening readings are equivalent on any cover with a
/// lifted operation; the converse-inclusion column is equivalent to
/// contraction only in the presence of stability, which is why the
/// predicates are reported separately instead of as one law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeetComparison {
    /// `𝒜(U∘V) ⊆ 𝒜U ∩ 𝒜V` for all subset pairs.
    pub left_inclusion: bool,
    /// `U∘V ◁ U` and `U∘V ◁ V` for all subset pairs.
    pub weakening_subsets: bool,
    /// `a∘b ◁ a` and `a∘b ◁ b` for all element pairs.
    pub weakening_elements: bool,
    /// `𝒜U ∩ 𝒜V ⊆ 𝒜(U∘V)` for all subset pairs.
    pub right_inclusion: bool,
    /// `U ◁ U∘U` for all subsets.
    pub contraction_subsets: bool,
    /// `a ◁ a∘a` for all elements.
    pub contraction_elements: bool,
}

pub fn meet_comparison<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<MeetComparison> {
    check_bases(cover, op)?;
    let ctx = MaskCtx::new(cover, Some(op), "meet comparison sweep", caps::MEET_CHAIN_BASE)?;
    let mut cmp = MeetComparison {
        left_inclusion: true,
        weakening_subsets: true,
        weakening_elements: true,
        right_inclusion: true,
        contraction_subsets: true,
        contraction_elements: true,
    };
    for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            let Some(uv) = ctx.lift(u, v) else { continue };
            let meet = ctx.sat[u as usize] & ctx.sat[v as usize];
            cmp.left_inclusion &= ctx.sat[uv as usize] & !meet == 0;
            cmp.weakening_subsets &= ctx.covers(uv, u) && ctx.covers(uv, v);
            cmp.right_inclusion &= meet & !ctx.sat[uv as usize] == 0;
        }
        if let Some(uu) = ctx.lift(u, u) {
            cmp.contraction_subsets &= ctx.covers(u, uu);
        }
    }
    for a in 0..ctx.n {
        for b in 0..ctx.n {
            let Some(ab) = ctx.prod[a * ctx.n + b] else {
                continue;
            };
            cmp.weakening_elements &= ctx.covers(ab, 1 << a) && ctx.covers(ab, 1 << b);
            if a == b {
                cmp.contraction_elements &= ctx.sat[ab as usize] & (1 << a) != 0;
            }
        }
    }
    Ok(cmp)
}

/// Every law that applies to `(cover, op)` at the finest level the size
/// caps allow, in a fixed order. Laws whose sweep would exceed its cap
/// are omitted rather than failed; `unit` is checked only when given.
pub fn law_suite<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    unit: Option<&Subset>,
) -> Result<Vec<LawReport>> {
    check_bases(cover, op)?;
    let n = cover.base().len();
    let subset_sweep = n <= caps::effective(caps::SUBSET_LAWS);
    let element_sweep = n <= caps::effective(caps::ELEMENT_LAWS);
    let level = if subset_sweep {
        Level::Subsets
    } else {
        Level::Elements
    };
    let mut reports = Vec::new();
    if subset_sweep {
        reports.push(check_stability(cover, op, Level::Subsets)?);
        reports.push(check_localization(cover, op, Level::Subsets)?);
    }
    if subset_sweep || element_sweep {
        reports.push(check_associativity(cover, op, level)?);
        reports.push(check_commutativity(cover, op, level)?);
    }
    if subset_sweep {
        reports.push(check_distributivity(cover, op)?);
    }
    if subset_sweep || element_sweep {
        reports.push(check_weakening(cover, op, level)?);
        reports.push(check_contraction(cover, op, level)?);
        if let Some(unit) = unit {
            reports.push(check_unit(cover, op, unit, level)?);
        }
    }
    if subset_sweep {
        reports.push(check_frame_equality(cover, op)?);
        reports.push(check_well_defined(cover, op)?);
    }
    if n <= caps::effective(caps::ADJUNCTION_BASE) {
        reports.push(check_adjunction(cover, op)?);
    }
    Ok(reports)
}
