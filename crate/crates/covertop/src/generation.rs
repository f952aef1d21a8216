//! Generation of covers that respect a product operation. Each stage
//! appends schema instances to the axiom set it receives, so earlier
//! entries keep their positions, and localization snapshots the axioms
//! it is given rather than chasing the ones it adds.
//!
//! On bases with a partial product, a schema instance whose source or
//! target product is undefined is skipped entirely. Emitting a
//! truncated target instead would assert covers the unbounded base
//! does not have.

use crate::axioms::{AxiomId, AxiomSet, UnitRule};
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::op::lift;
use crate::saturation::{Cover, GeneratedCover};
use crate::subset::Subset;

/// Adds commutativity and associativity instances: every element of
/// `b∘c` is covered by `c∘b`, and every element of `(b∘c)∘d` by
/// `b∘(c∘d)`. The opposite rebracketing is derivable from these.
pub fn extend_semigroup_axioms(axioms: &AxiomSet, op: &DeltaOp) -> Result<AxiomSet> {
    let base = axioms.base();
    if op.base() != base {
        return Err(Error::BaseMismatch);
    }
    let mut out = axioms.clone();
    let n = base.len();
    for b in 0..n {
        for c in 0..n {
            let (Some(src), Some(tgt)) = (op.get(b, c), op.get(c, b)) else {
                continue;
            };
            for a in src.iter() {
                out.push_unique(a, AxiomId::Commutativity { b, c }, tgt.clone());
            }
        }
    }
    for b in 0..n {
        for c in 0..n {
            let Some(bc) = op.get(b, c) else { continue };
            for d in 0..n {
                let Some(cd) = op.get(c, d) else { continue };
                let (src, src_overflow) = lift(op, bc, &Subset::singleton(base, d))?;
                let (tgt, tgt_overflow) = lift(op, &Subset::singleton(base, b), cd)?;
                if src_overflow || tgt_overflow {
                    continue;
                }
                for a in src.iter() {
                    out.push_unique(a, AxiomId::Associativity { b, c, d }, tgt.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Adds the unit laws for `unit`: `a ◁ a∘unit`, and every element of
/// `a∘unit` is covered by `{a}`.
pub fn add_unit_axioms(axioms: &AxiomSet, op: &DeltaOp, unit: &Subset) -> Result<AxiomSet> {
    let base = axioms.base();
    if op.base() != base || unit.base() != base {
        return Err(Error::BaseMismatch);
    }
    let mut out = axioms.clone();
    for a in 0..base.len() {
        let (prod, overflow) = lift(op, &Subset::singleton(base, a), unit)?;
        if overflow {
            continue;
        }
        out.push_unique(a, AxiomId::Unit(UnitRule::Expand), prod.clone());
        let single = Subset::singleton(base, a);
        for x in prod.iter() {
            out.push_unique(x, AxiomId::Unit(UnitRule::Collapse(a)), single.clone());
        }
    }
    Ok(out)
}

/// Adds localization instances for every axiom present in the input:
/// if `b ◁ D` is the `j`-th axiom of `b`, then every element of `b∘c`
/// is covered by `D∘c`. The instances this adds are not themselves
/// localized; their localizations are derivable.
pub fn localize(axioms: &AxiomSet, op: &DeltaOp) -> Result<AxiomSet> {
    let base = axioms.base();
    if op.base() != base {
        return Err(Error::BaseMismatch);
    }
    let mut out = axioms.clone();
    let n = base.len();
    for b in 0..n {
        for j in 0..axioms.entries(b).len() {
            for c in 0..n {
                let Some(src) = op.get(b, c) else { continue };
                let cover = &axioms.entries(b)[j].cover;
                let (tgt, overflow) = lift(op, cover, &Subset::singleton(base, c))?;
                if overflow {
                    continue;
                }
                for a in src.iter() {
                    out.push_unique(a, AxiomId::Locax { b, j, c }, tgt.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Adds the frame laws: every element of `b∘c` is covered by `{c}`
/// (the left projection is derivable through commutativity), and every
/// `a` is covered by `a∘a`.
pub fn add_frame_axioms(axioms: &AxiomSet, op: &DeltaOp) -> Result<AxiomSet> {
    let base = axioms.base();
    if op.base() != base {
        return Err(Error::BaseMismatch);
    }
    let mut out = axioms.clone();
    let n = base.len();
    for b in 0..n {
        for c in 0..n {
            let Some(src) = op.get(b, c) else { continue };
            let tgt = Subset::singleton(base, c);
            for a in src.iter() {
                out.push_unique(a, AxiomId::Weakening { b, c }, tgt.clone());
            }
        }
    }
    for a in 0..n {
        let Some(sq) = op.get(a, a) else { continue };
        out.push_unique(a, AxiomId::Contraction, sq.clone());
    }
    Ok(out)
}

/// A cover together with an operation it is stable under, generated so
/// that the lifted product is associative and commutative up to
/// saturation, with an optional unit.
pub struct ConvergentCover {
    cover: GeneratedCover,
    op: DeltaOp,
    unit: Option<Subset>,
    seed: AxiomSet,
}

/// A cover whose lifted product meets saturations:
/// `𝒜(U∘V) = 𝒜U ∩ 𝒜V`.
pub struct FormalCover {
    cover: GeneratedCover,
    op: DeltaOp,
    seed: AxiomSet,
}

/// Generates the least cover validating `seed` that is stable under
/// `op` and makes the lifted product a commutative semigroup up to
/// saturation, with `unit` as unit when given.
pub fn generate_convergent(
    seed: &AxiomSet,
    op: &DeltaOp,
    unit: Option<&Subset>,
) -> Result<ConvergentCover> {
    let mut staged = extend_semigroup_axioms(seed, op)?;
    if let Some(unit) = unit {
        staged = add_unit_axioms(&staged, op, unit)?;
    }
    let staged = localize(&staged, op)?;
    Ok(ConvergentCover {
        cover: GeneratedCover::new(staged),
        op: op.clone(),
        unit: unit.cloned(),
        seed: seed.clone(),
    })
}

/// Generates the least cover validating `seed` whose lifted product
/// meets saturations.
pub fn generate_formal(seed: &AxiomSet, op: &DeltaOp) -> Result<FormalCover> {
    let staged = extend_semigroup_axioms(seed, op)?;
    let staged = localize(&staged, op)?;
    let staged = add_frame_axioms(&staged, op)?;
    Ok(FormalCover {
        cover: GeneratedCover::new(staged),
        op: op.clone(),
        seed: seed.clone(),
    })
}

impl ConvergentCover {
    pub fn cover(&self) -> &GeneratedCover {
        &self.cover
    }

    pub fn op(&self) -> &DeltaOp {
        &self.op
    }

    pub fn unit(&self) -> Option<&Subset> {
        self.unit.as_ref()
    }

    pub fn seed(&self) -> &AxiomSet {
        &self.seed
    }

    /// `U ∘ V` with the overflow flag of the underlying lift.
    pub fn product(&self, u: &Subset, v: &Subset) -> Result<(Subset, bool)> {
        lift(&self.op, u, v)
    }
}

impl Cover for ConvergentCover {
    fn base(&self) -> &crate::base::Base {
        self.cover.base()
    }

    fn saturate(&self, u: &Subset) -> Result<Subset> {
        self.cover.saturate(u)
    }
}

impl FormalCover {
    pub fn cover(&self) -> &GeneratedCover {
        &self.cover
    }

    pub fn op(&self) -> &DeltaOp {
        &self.op
    }

    pub fn seed(&self) -> &AxiomSet {
        &self.seed
    }

    pub fn product(&self, u: &Subset, v: &Subset) -> Result<(Subset, bool)> {
        lift(&self.op, u, v)
    }
}

impl Cover for FormalCover {
    fn base(&self) -> &crate::base::Base {
        self.cover.base()
    }

    fn saturate(&self, u: &Subset) -> Result<Subset> {
        self.cover.saturate(u)
    }
}
