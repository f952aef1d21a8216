//! Relations between bases and the cover-map checks built on them.
//!
//! A map between covers is an ordinary relation `r ⊆ S × T` judged
//! through the preimage operator `r⁻`: it is a cover map when covering
//! in the target pulls back to covering in the source. Maps are stored
//! as raw relations and never normalized; two relations present the
//! same map exactly when [`maps_equal`] holds, mirroring the fact that
//! maps are really equivalence classes of relations.
//!
//! All checkers return a [`MapCheck`] whose failure, if any, is the
//! first offending instance in canonical order: axioms in declaration
//! order, subsets by ascending membership mask, element pairs row-major.

use serde::Serialize;

use crate::base::Base;
use crate::caps;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::generation::{ConvergentCover, FormalCover};
use crate::mask;
use crate::saturation::{Cover, GeneratedCover};
use crate::subset::Subset;

/// A binary relation between two finite bases, stored column-wise: for
/// each target element `b`, the subset `r⁻b` of source elements related
/// to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    source: Base,
    target: Base,
    cols: Vec<Subset>,
}

impl Relation {
    pub fn empty(source: &Base, target: &Base) -> Relation {
        Relation {
            source: source.clone(),
            target: target.clone(),
            cols: vec![Subset::empty(source); target.len()],
        }
    }

    /// Builds a relation from its preimage columns: `f(b)` is the set of
    /// source elements related to target element `b`.
    pub fn from_rminus<F>(source: &Base, target: &Base, mut f: F) -> Result<Relation>
    where
        F: FnMut(usize) -> Result<Subset>,
    {
        let mut cols = Vec::with_capacity(target.len());
        for b in 0..target.len() {
            let col = f(b)?;
            if col.base() != source {
                return Err(Error::BaseMismatch);
            }
            cols.push(col);
        }
        Ok(Relation {
            source: source.clone(),
            target: target.clone(),
            cols,
        })
    }

    pub fn from_pairs<S: AsRef<str>>(
        source: &Base,
        target: &Base,
        pairs: &[(S, S)],
    ) -> Result<Relation> {
        let mut r = Relation::empty(source, target);
        for (s, t) in pairs {
            let a = source.require(s.as_ref())?;
            let b = target.require(t.as_ref())?;
            r.insert(a, b);
        }
        Ok(r)
    }

    pub fn identity(base: &Base) -> Relation {
        let mut r = Relation::empty(base, base);
        for a in 0..base.len() {
            r.insert(a, a);
        }
        r
    }

    /// Relates every source element to every target element.
    pub fn total(source: &Base, target: &Base) -> Relation {
        Relation {
            source: source.clone(),
            target: target.clone(),
            cols: vec![Subset::full(source); target.len()],
        }
    }

    pub fn source(&self) -> &Base {
        &self.source
    }

    pub fn target(&self) -> &Base {
        &self.target
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.cols[b].insert(a);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.cols[b].contains(a)
    }

    pub fn is_empty(&self) -> bool {
        self.cols.iter().all(Subset::is_empty)
    }

    /// All related pairs as `(source, target)` indices in row-major
    /// order over the source.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.source.len() {
            for b in 0..self.target.len() {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The preimage of a single target element.
    pub fn rminus_elem(&self, b: usize) -> &Subset {
        &self.cols[b]
    }

    /// The preimage operator: `r⁻V = {a | ∃b ∈ V, a r b}`. Distributes
    /// over unions of target subsets by construction.
    pub fn rminus(&self, v: &Subset) -> Result<Subset> {
        if v.base() != &self.target {
            return Err(Error::BaseMismatch);
        }
        let mut out = Subset::empty(&self.source);
        for b in v.iter() {
            out = out.union(&self.cols[b])?;
        }
        Ok(out)
    }

    /// Diagrammatic composition: `self : S → T` followed by
    /// `other : T → W` gives `S → W`, so the composite preimage is
    /// `self⁻ ∘ other⁻`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        if self.target != other.source {
            return Err(Error::BaseMismatch);
        }
        Relation::from_rminus(&self.source, &other.target, |c| {
            self.rminus(other.rminus_elem(c))
        })
    }

    /// The opposite relation `T → S`.
    pub fn transpose(&self) -> Relation {
        let mut r = Relation::empty(&self.target, &self.source);
        for (a, b) in self.pairs() {
            r.insert(b, a);
        }
        r
    }
}

/// How [`is_basic_cover_map`] quantifies over the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapMethod {
    /// Check `r⁻b ◁ r⁻V` for the target's generating axioms `b ◁ V`
    /// only. Sound and complete for inductively generated targets.
    Axioms,
    /// Check every instance `b ◁ V ⇒ r⁻b ◁ r⁻V` over all target
    /// subsets. Capped at [`caps::EXHAUSTIVE_MAP_TARGET`] elements.
    Exhaustive,
}

/// The first condition a relation failed, with enough coordinates to
/// reproduce the check by hand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum MapFailure {
    /// `r⁻b ⋪ r⁻V` for a target axiom `b ◁ V`.
    Axiom { element: String, axiom: String },
    /// `b ◁ V` in the target but `r⁻b ⋪ r⁻V` (exhaustive method).
    Covering { element: String, subset: Vec<String> },
    /// `r⁻(b₁∘b₂) ≠_𝒜 r⁻b₁ ∘ r⁻b₂` for a target element pair.
    Product { left: String, right: String },
    /// `r⁻I_T ≠_𝒜 I_S`.
    Unit,
    /// `r⁻T ≠_𝒜 S`.
    Totality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<MapFailure>,
}

impl MapCheck {
    pub(crate) fn pass() -> MapCheck {
        MapCheck {
            passed: true,
            failure: None,
        }
    }

    pub(crate) fn fail(failure: MapFailure) -> MapCheck {
        MapCheck {
            passed: false,
            failure: Some(failure),
        }
    }
}

fn check_relation_bases<CS, CT>(r: &Relation, source: &CS, target: &CT) -> Result<()>
where
    CS: Cover + ?Sized,
    CT: Cover + ?Sized,
{
    if r.source() != source.base() || r.target() != target.base() {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// Checks `b ◁_T V ⇒ r⁻b ◁_S r⁻V` against the target's axioms only;
/// sound and complete when the target is generated from those axioms.
pub(crate) fn axiom_conditions<CS>(
    r: &Relation,
    source: &CS,
    axioms: &crate::axioms::AxiomSet,
) -> Result<MapCheck>
where
    CS: Cover + ?Sized,
{
    for (b, axiom) in axioms.iter_all() {
        let pre_elem = r.rminus_elem(b);
        let pre_cover = r.rminus(&axiom.cover)?;
        if !source.covers_all(pre_elem, &pre_cover)? {
            return Ok(MapCheck::fail(MapFailure::Axiom {
                element: axioms.base().name(b).to_string(),
                axiom: axiom.id.render(axioms.base()),
            }));
        }
    }
    Ok(MapCheck::pass())
}

/// Whether `r` respects covers, i.e. pulls target covering back to
/// source covering. The two methods agree on generated targets; the
/// exhaustive one also serves as an independent oracle for that fact.
pub fn is_basic_cover_map<CS>(
    r: &Relation,
    source: &CS,
    target: &GeneratedCover,
    method: MapMethod,
) -> Result<MapCheck>
where
    CS: Cover + ?Sized,
{
    check_relation_bases(r, source, target)?;
    match method {
        MapMethod::Axioms => axiom_conditions(r, source, target.axioms()),
        MapMethod::Exhaustive => {
            let n = target.base().len();
            caps::ensure("exhaustive map check", caps::EXHAUSTIVE_MAP_TARGET, n)?;
            for m in 0..1u64 << n {
                let v = Subset::from_words(target.base(), mask::from_low_word(n, m));
                let sat_v = target.saturate(&v)?;
                let pre_v = source.saturate(&r.rminus(&v)?)?;
                for b in sat_v.iter() {
                    if !r.rminus_elem(b).is_subset(&pre_v)? {
                        return Ok(MapCheck::fail(MapFailure::Covering {
                            element: target.base().name(b).to_string(),
                            subset: v.names(),
                        }));
                    }
                }
            }
            Ok(MapCheck::pass())
        }
    }
}

/// `r⁻(b₁ ∘_T b₂) =_𝒜 r⁻b₁ ∘_S r⁻b₂` over all target element pairs.
/// Pairs whose product is undefined on either side (bounded list bases)
/// are skipped.
pub(crate) fn product_conditions<CS>(
    r: &Relation,
    source: &CS,
    source_op: &DeltaOp,
    target_op: &DeltaOp,
) -> Result<MapCheck>
where
    CS: Cover + ?Sized,
{
    let tbase = target_op.base();
    for b1 in 0..tbase.len() {
        for b2 in 0..tbase.len() {
            let Some(prod) = target_op.get(b1, b2) else {
                continue;
            };
            let lhs = r.rminus(prod)?;
            let (rhs, overflow) =
                crate::op::lift(source_op, r.rminus_elem(b1), r.rminus_elem(b2))?;
            if overflow {
                continue;
            }
            if !source.sat_equal(&lhs, &rhs)? {
                return Ok(MapCheck::fail(MapFailure::Product {
                    left: tbase.name(b1).to_string(),
                    right: tbase.name(b2).to_string(),
                }));
            }
        }
    }
    Ok(MapCheck::pass())
}

/// Whether `r` is a convergent cover map: a basic cover map that also
/// satisfies `r⁻(b₁∘b₂) =_𝒜 r⁻b₁ ∘ r⁻b₂` on target element pairs.
pub fn is_convergent_map(
    r: &Relation,
    source: &ConvergentCover,
    target: &ConvergentCover,
) -> Result<MapCheck> {
    check_relation_bases(r, source, target)?;
    let basic = axiom_conditions(r, source, target.cover().axioms())?;
    if !basic.passed {
        return Ok(basic);
    }
    product_conditions(r, source, source.op(), target.op())
}

/// Whether `r` is a unital convergent cover map. Uses the reduction for
/// generated targets: the axiom conditions are needed only for the seed
/// axioms, since the generated commutativity, associativity, unit and
/// localization axioms all pull back once the product and unit
/// conditions hold.
pub fn is_unital_map(
    r: &Relation,
    source: &ConvergentCover,
    target: &ConvergentCover,
) -> Result<MapCheck> {
    check_relation_bases(r, source, target)?;
    let (Some(source_unit), Some(target_unit)) = (source.unit(), target.unit()) else {
        return Err(Error::MissingUnit);
    };
    let basic = axiom_conditions(r, source, target.seed())?;
    if !basic.passed {
        return Ok(basic);
    }
    let products = product_conditions(r, source, source.op(), target.op())?;
    if !products.passed {
        return Ok(products);
    }
    if !source.sat_equal(&r.rminus(target_unit)?, source_unit)? {
        return Ok(MapCheck::fail(MapFailure::Unit));
    }
    Ok(MapCheck::pass())
}

/// Whether `r` is a formal cover map: the seed axiom and product
/// conditions as for unital maps, with totality `r⁻T =_𝒜 S` in place of
/// the unit condition.
pub fn is_formal_map(
    r: &Relation,
    source: &FormalCover,
    target: &FormalCover,
) -> Result<MapCheck> {
    check_relation_bases(r, source, target)?;
    let basic = axiom_conditions(r, source, target.seed())?;
    if !basic.passed {
        return Ok(basic);
    }
    let products = product_conditions(r, source, source.op(), target.op())?;
    if !products.passed {
        return Ok(products);
    }
    let everything = r.rminus(&Subset::full(target.base()))?;
    if !source.sat_equal(&everything, &Subset::full(source.base()))? {
        return Ok(MapCheck::fail(MapFailure::Totality));
    }
    Ok(MapCheck::pass())
}

/// Whether two relations present the same map, i.e. their preimages of
/// every target element agree up to source saturation.
pub fn maps_equal<CS>(r1: &Relation, r2: &Relation, source: &CS) -> Result<bool>
where
    CS: Cover + ?Sized,
{
    Ok(maps_equal_witness(r1, r2, source)?.is_none())
}

/// Like [`maps_equal`], but reports the first target element whose
/// preimages differ.
pub fn maps_equal_witness<CS>(
    r1: &Relation,
    r2: &Relation,
    source: &CS,
) -> Result<Option<usize>>
where
    CS: Cover + ?Sized,
{
    if r1.source() != source.base()
        || r2.source() != source.base()
        || r1.target() != r2.target()
    {
        return Err(Error::BaseMismatch);
    }
    for b in 0..r1.target().len() {
        if !source.sat_equal(r1.rminus_elem(b), r2.rminus_elem(b))? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}
