//! Presentation styles for covers that carry a meet-like operation:
//! by an explicit product table, by the cover's own singleton
//! saturations, by a preorder on the base, or by an associative element
//! operation. The module also provides the finite-subset construction,
//! which equips an arbitrary cover with a semilattice operation at the
//! cost of moving to a powerset base, and the predicates that separate
//! these classes.
//!
//! Sweeps here quantify over all subsets of the base, like the
//! checkers in [`crate::laws`], but admit bases up to
//! [`caps::FORMALITY_SWEEP`] so that powerset bases of small covers
//! stay in range.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::axioms::AxiomSet;
use crate::base::Base;
use crate::caps;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::generation::generate_formal;
use crate::laws::{Law, LawReport, MaskCtx, Witness};
use crate::morphisms::Relation;
use crate::op::down_op;
use crate::saturation::{Cover, GeneratedCover};
use crate::subset::Subset;

/// How a presentation describes its operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Style {
    /// An explicit table `δ(a,b)`.
    Circ,
    /// The meet of singleton saturations, `δ(a,b) = ↓a ∩ ↓b`.
    Lhd,
    /// The meet of down sets of a stored preorder.
    Leq,
    /// A singleton-valued associative element operation.
    Bullet,
}

impl Style {
    pub fn as_str(self) -> &'static str {
        match self {
            Style::Circ => "circ",
            Style::Lhd => "lhd",
            Style::Leq => "leq",
            Style::Bullet => "bullet",
        }
    }
}

impl fmt::Display for Style {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of an exhaustive predicate sweep, with the first
/// counterexample in canonical order when it fails.
#[derive(Debug, Clone, Serialize)]
pub struct PredicateCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl PredicateCheck {
    fn pass() -> PredicateCheck {
        PredicateCheck {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: Witness) -> PredicateCheck {
        PredicateCheck {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Whether every pair of covers of an element meets below it: `a ◁ U`
/// and `a ◁ V` force `a ◁ U↓V`. Covers with this property carry their
/// own meet operation, with no table needed. The sweep is exhaustive
/// over all `(a, U, V)` triples; a failure reports the first one.
pub fn is_lhd_formal<C: Cover + ?Sized>(cover: &C) -> Result<PredicateCheck> {
    let ctx = MaskCtx::new(cover, None, "down-arrow formality sweep", caps::FORMALITY_SWEEP)?;
    let mut down = vec![0u64; ctx.total];
    for m in 1..ctx.total {
        let low = m.trailing_zeros() as usize;
        down[m] = down[m & (m - 1)] | ctx.sat[1 << low];
    }
    for a in 0..ctx.n {
        let bit = 1u64 << a;
        for u in 0..ctx.total as u64 {
            if ctx.sat[u as usize] & bit == 0 {
                continue;
            }
            for v in 0..ctx.total as u64 {
                if ctx.sat[v as usize] & bit == 0 {
                    continue;
                }
                let meet = down[u as usize] & down[v as usize];
                if ctx.sat[meet as usize] & bit == 0 {
                    let witness = Witness::mixed(
                        &ctx.base,
                        &[a],
                        &[&ctx.subset(u), &ctx.subset(v)],
                    );
                    return Ok(PredicateCheck::fail(witness));
                }
            }
        }
    }
    Ok(PredicateCheck::pass())
}

/// Whether every cover of an element refines to at most one of its
/// members: `a ◁ U` forces either `a ◁ ∅` or `a ◁ {u}` for some
/// `u ∈ U`.
pub fn is_unary<C: Cover + ?Sized>(cover: &C) -> Result<PredicateCheck> {
    let ctx = MaskCtx::new(cover, None, "unary cover sweep", caps::FORMALITY_SWEEP)?;
    for a in 0..ctx.n {
        let bit = 1u64 << a;
        if ctx.sat[0] & bit != 0 {
            continue;
        }
        for u in 0..ctx.total as u64 {
            if ctx.sat[u as usize] & bit == 0 {
                continue;
            }
            let mut rest = u;
            let mut refined = false;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if ctx.sat[1 << b] & bit != 0 {
                    refined = true;
                    break;
                }
            }
            if !refined {
                let witness = Witness::mixed(&ctx.base, &[a], &[&ctx.subset(u)]);
                return Ok(PredicateCheck::fail(witness));
            }
        }
    }
    Ok(PredicateCheck::pass())
}

/// Whether every cover of an element refines to a finite subcover. On
/// the finite bases handled here the cover itself is that subcover, so
/// this is constantly true; it exists to mark the boundary where
/// infinite-base variants would diverge.
pub fn is_finitary<C: Cover + ?Sized>(_cover: &C) -> bool {
    true
}

/// The three laws that make a cover with an operation a formal cover —
/// stability, weakening and contraction — checked with element-level
/// quantifiers against all subset pairs. Equivalent to the subset-level
/// readings for lifted operations, but the smaller quantifier space
/// admits larger bases than the sweeps in [`crate::laws`]. Quantifier
/// instances that hit an undefined product are skipped.
pub fn formality_suite<C: Cover + ?Sized>(cover: &C, op: &DeltaOp) -> Result<Vec<LawReport>> {
    let ctx = MaskCtx::new(cover, Some(op), "formality law sweep", caps::FORMALITY_SWEEP)?;
    let mut lift = Vec::with_capacity(ctx.total * ctx.total);
    for u in 0..ctx.total as u64 {
        for v in 0..ctx.total as u64 {
            lift.push(ctx.lift(u, v));
        }
    }

    let mut stability = None;
    'stability: for a in 0..ctx.n {
        for b in 0..ctx.n {
            let product = match ctx.prod[a * ctx.n + b] {
                Some(p) => p,
                None => continue,
            };
            for u in 0..ctx.total as u64 {
                if ctx.sat[u as usize] & (1 << a) == 0 {
                    continue;
                }
                for v in 0..ctx.total as u64 {
                    if ctx.sat[v as usize] & (1 << b) == 0 {
                        continue;
                    }
                    let uv = match lift[u as usize * ctx.total + v as usize] {
                        Some(w) => w,
                        None => continue,
                    };
                    if !ctx.covers(product, uv) {
                        stability = Some(Witness::mixed(
                            &ctx.base,
                            &[a, b],
                            &[&ctx.subset(u), &ctx.subset(v)],
                        ));
                        break 'stability;
                    }
                }
            }
        }
    }

    let mut weakening = None;
    'weakening: for b in 0..ctx.n {
        for c in 0..ctx.n {
            let product = match ctx.prod[b * ctx.n + c] {
                Some(p) => p,
                None => continue,
            };
            if !ctx.covers(product, 1 << b) || !ctx.covers(product, 1 << c) {
                weakening = Some(Witness::elems(&ctx.base, &[b, c]));
                break 'weakening;
            }
        }
    }

    let mut contraction = None;
    for a in 0..ctx.n {
        if let Some(product) = ctx.prod[a * ctx.n + a] {
            if ctx.sat[product as usize] & (1 << a) == 0 {
                contraction = Some(Witness::elems(&ctx.base, &[a]));
                break;
            }
        }
    }

    Ok(vec![
        LawReport::from_witness(Law::Stability, stability),
        LawReport::from_witness(Law::Weakening, weakening),
        LawReport::from_witness(Law::Contraction, contraction),
    ])
}

/// The preorder a cover induces on its base: `a ≤ b` when `a ◁ {b}`.
/// Reflexive pairs are left implicit. Sorted by `(a, b)`.
pub fn induced_preorder<C: Cover + ?Sized>(cover: &C) -> Result<Vec<(usize, usize)>> {
    let base = cover.base();
    let mut pairs = Vec::new();
    for b in 0..base.len() {
        let sat = cover.saturate(&Subset::singleton(base, b))?;
        for a in sat.iter() {
            if a != b {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

fn singleton_table(op: &DeltaOp) -> Result<Vec<usize>> {
    let n = op.base().len();
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let product = op.get(a, b).ok_or(Error::WrongOperationKind(
                "the divisibility preorder needs a total element operation",
            ))?;
            if product.len() != 1 {
                return Err(Error::WrongOperationKind(
                    "the divisibility preorder needs a singleton-valued operation",
                ));
            }
            table.push(product.iter().next().expect("singleton has a member"));
        }
    }
    Ok(table)
}

/// The divisibility preorder of a singleton-valued associative
/// operation: `a ≤ b` when `a = b`, `a = l•b`, `a = b•r` or
/// `a = l•b•r` — equivalently, the least preorder with `a•b ≤ a` and
/// `a•b ≤ b`, computed here as a reachability closure. Reflexive pairs
/// are left implicit; the result is sorted by `(a, b)`.
pub fn m_preorder(op: &DeltaOp) -> Result<Vec<(usize, usize)>> {
    let base = op.base();
    let n = base.len();
    let table = singleton_table(op)?;
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
    }
    for a in 0..n {
        for b in 0..n {
            let p = table[a * n + b];
            leq[p * n + a] = true;
            leq[p * n + b] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            if leq[i * n + k] {
                for j in 0..n {
                    if leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a * n + b] {
                pairs.push((a, b));
            }
        }
    }
    Ok(pairs)
}

/// A cover packaged with the operation that presents its meets and
/// with the data that operation was built from.
pub struct Presentation {
    style: Style,
    cover: Box<dyn Cover + Send + Sync>,
    op: DeltaOp,
    seed: Option<AxiomSet>,
    preorder: Option<Vec<(usize, usize)>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("style", &self.style)
            .field("base", &self.op.base().names())
            .finish_non_exhaustive()
    }
}

impl Presentation {
    pub fn style(&self) -> Style {
        self.style
    }

    pub fn base(&self) -> &Base {
        self.op.base()
    }

    pub fn cover(&self) -> &dyn Cover {
        self.cover.as_ref()
    }

    pub fn op(&self) -> &DeltaOp {
        &self.op
    }

    /// The user axioms the cover was generated from, when it was
    /// generated rather than delegated.
    pub fn seed(&self) -> Option<&AxiomSet> {
        self.seed.as_ref()
    }

    /// The stored preorder pairs of a [`Style::Leq`] presentation.
    pub fn preorder(&self) -> Option<&[(usize, usize)]> {
        self.preorder.as_deref()
    }

    /// Runs [`formality_suite`] on the presentation's own cover and
    /// operation.
    pub fn formality(&self) -> Result<Vec<LawReport>> {
        formality_suite(self.cover.as_ref(), &self.op)
    }
}

/// Generates a formal cover from an explicit product table and wraps
/// it as a presentation.
pub fn as_circ_formal(seed: &AxiomSet, op: &DeltaOp) -> Result<Presentation> {
    let formal = generate_formal(seed, op)?;
    let op = formal.op().clone();
    let seed = formal.seed().clone();
    Ok(Presentation {
        style: Style::Circ,
        op,
        seed: Some(seed),
        preorder: None,
        cover: Box::new(formal),
    })
}

/// Presents an existing cover through its own singleton saturations,
/// `δ(a,b) = ↓a ∩ ↓b`. No new axioms are generated; whether the result
/// satisfies the formal-cover laws is exactly the question
/// [`is_lhd_formal`] answers, so the presentation is built either way
/// and law failures stay data.
pub fn as_lhd_formal(cover: &GeneratedCover) -> Result<Presentation> {
    let op = down_op(cover)?;
    let axioms = cover.axioms().clone();
    Ok(Presentation {
        style: Style::Lhd,
        op,
        seed: Some(axioms.clone()),
        preorder: None,
        cover: Box::new(GeneratedCover::new(axioms)),
    })
}

/// Generates a formal cover whose operation is the meet of down sets
/// of the given preorder pairs (reflexivity implied, transitivity
/// required). After generation, the derived order-lowering rule is
/// re-checked: every stored pair `a ≤ b` must satisfy `a ◁ {b}`.
pub fn as_leq_formal<S: AsRef<str>>(seed: &AxiomSet, pairs: &[(S, S)]) -> Result<Presentation> {
    let base = seed.base();
    let op = DeltaOp::from_preorder(base, pairs)?;
    let formal = generate_formal(seed, &op)?;
    let mut order = Vec::with_capacity(pairs.len());
    for (low, high) in pairs {
        let a = base.require(low.as_ref())?;
        let b = base.require(high.as_ref())?;
        if a != b {
            order.push((a, b));
        }
    }
    order.sort_unstable();
    order.dedup();
    for &(a, b) in &order {
        if !formal.cover().covers(a, &Subset::singleton(base, b))? {
            return Err(Error::Internal(format!(
                "generated cover lost the preorder pair {} <= {}",
                base.name(a),
                base.name(b)
            )));
        }
    }
    let op = formal.op().clone();
    let seed = formal.seed().clone();
    Ok(Presentation {
        style: Style::Leq,
        op,
        seed: Some(seed),
        preorder: Some(order),
        cover: Box::new(formal),
    })
}

/// Generates a formal cover whose operation is a singleton-valued
/// associative multiplication, `δ(a,b) = {a•b}`.
pub fn as_bullet_formal<S: AsRef<str>>(seed: &AxiomSet, rows: &[(S, S, S)]) -> Result<Presentation> {
    let op = DeltaOp::from_semigroup(seed.base(), rows)?;
    let formal = generate_formal(seed, &op)?;
    let op = formal.op().clone();
    let seed = formal.seed().clone();
    Ok(Presentation {
        style: Style::Bullet,
        op,
        seed: Some(seed),
        preorder: None,
        cover: Box::new(formal),
    })
}

/// A cover on the finite subsets of another cover's base, defined by
/// delegation: the pullback of a generator `{a₁,…,aₙ}` is
/// `𝒜{a₁} ∩ … ∩ 𝒜{aₙ}` (the full base for `{}`), and `l ◁ K` holds
/// exactly when the pullback of `l` is covered by the pullback of `K`
/// in the source. There is no axiom set of its own; law checks treat
/// it as a black-box cover function.
pub struct DotCover {
    base: Base,
    source: GeneratedCover,
    columns: Vec<Subset>,
}

impl DotCover {
    fn new(source: &GeneratedCover) -> Result<DotCover> {
        caps::ensure(
            "finite-subset construction",
            caps::DOT_SOURCE,
            source.base().len(),
        )?;
        let atoms = source.base();
        let base = Base::powerset(atoms)?;
        let mut singles = Vec::with_capacity(atoms.len());
        for a in 0..atoms.len() {
            singles.push(source.saturate(&Subset::singleton(atoms, a))?);
        }
        let mut columns = Vec::with_capacity(base.len());
        for l in 0..base.len() {
            let mut mask = base.powerset_mask(l)?;
            let mut column = Subset::full(atoms);
            while mask != 0 {
                let a = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                column = column.intersect(&singles[a])?;
            }
            columns.push(column);
        }
        Ok(DotCover {
            base,
            source: GeneratedCover::new(source.axioms().clone()),
            columns,
        })
    }

    /// The cover the construction delegates to.
    pub fn source(&self) -> &GeneratedCover {
        &self.source
    }

    /// The pullback of a single generator into the source base.
    pub fn pullback(&self, l: usize) -> &Subset {
        &self.columns[l]
    }
}

impl Cover for DotCover {
    fn base(&self) -> &Base {
        &self.base
    }

    fn saturate(&self, u: &Subset) -> Result<Subset> {
        if u.base() != &self.base {
            return Err(Error::BaseMismatch);
        }
        let mut pre = Subset::empty(self.source.base());
        for l in u.iter() {
            pre = pre.union(&self.columns[l])?;
        }
        let sat = self.source.saturate(&pre)?;
        let mut out = Subset::empty(&self.base);
        for (l, column) in self.columns.iter().enumerate() {
            if column.is_subset(&sat)? {
                out.insert(l);
            }
        }
        Ok(out)
    }
}

/// The finite-subset construction: an isomorphic copy of a cover whose
/// base is a semilattice under union.
pub struct DotConstruction {
    /// Union-operation presentation of the finite-subset cover.
    pub presentation: Presentation,
    /// The isomorphism into the construction: relates `b` to `l` when
    /// `b` is covered by every member of `l`.
    pub embed: Relation,
    /// Its inverse: relates `l` to `b` when the pullback of `l` is
    /// covered by `{b}`.
    pub project: Relation,
}

/// Builds the finite-subset construction over a generated cover. The
/// two returned relations compose to the identity on either side up to
/// saturation, and the construction satisfies the formal-cover laws
/// for its union operation exactly when the source satisfies the
/// down-arrow meet condition.
pub fn dot_construction(source: &GeneratedCover) -> Result<DotConstruction> {
    let dot = DotCover::new(source)?;
    let atoms = source.base().clone();
    let base = dot.base.clone();
    let embed = Relation::from_rminus(&atoms, &base, |l| Ok(dot.columns[l].clone()))?;
    let project = Relation::from_rminus(&base, &atoms, |b| {
        let sat = source.saturate(&Subset::singleton(&atoms, b))?;
        let mut out = Subset::empty(&base);
        for (l, column) in dot.columns.iter().enumerate() {
            if column.is_subset(&sat)? {
                out.insert(l);
            }
        }
        Ok(out)
    })?;
    let op = DeltaOp::union_monoid(&base)?;
    let presentation = Presentation {
        style: Style::Bullet,
        op,
        seed: None,
        preorder: None,
        cover: Box::new(dot),
    };
    Ok(DotConstruction {
        presentation,
        embed,
        project,
    })
}
