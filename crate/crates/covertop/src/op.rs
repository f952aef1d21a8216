//! Subset-level operations: the lift of a pointwise product to subsets,
//! and the operations that need a cover to express (down sets, the meet
//! of down sets, implication).
//!
//! The lift of a partial product skips undefined pairs and reports that
//! it did so. Callers that need totality must check the flag: treating
//! a skipped pair as an empty product would silently strengthen covers.

use crate::base::Base;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::saturation::Cover;
use crate::subset::Subset;

fn check_base(base: &Base, u: &Subset) -> Result<()> {
    if u.base() != base {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// `U ∘ V`: the union of `δ(a,b)` over `a ∈ U`, `b ∈ V`. The flag is
/// true when some pair had no product and was skipped.
pub fn lift(op: &DeltaOp, u: &Subset, v: &Subset) -> Result<(Subset, bool)> {
    check_base(op.base(), u)?;
    check_base(op.base(), v)?;
    let mut out = Subset::empty(op.base());
    let mut overflow = false;
    for a in u.iter() {
        for b in v.iter() {
            match op.get(a, b) {
                Some(product) => out = out.union(product)?,
                None => overflow = true,
            }
        }
    }
    Ok((out, overflow))
}

/// `U ∘ V` for a product known to be total on the pairs involved.
pub fn lift_total(op: &DeltaOp, u: &Subset, v: &Subset) -> Result<Subset> {
    let (value, overflow) = lift(op, u, v)?;
    if overflow {
        return Err(Error::Internal(
            "product is undefined on a pair of the given subsets".to_string(),
        ));
    }
    Ok(value)
}

/// `↓U = {c | c ◁ {a} for some a ∈ U}`.
pub fn down_set<C: Cover + ?Sized>(cover: &C, u: &Subset) -> Result<Subset> {
    check_base(cover.base(), u)?;
    let mut out = Subset::empty(cover.base());
    for a in u.iter() {
        let sat = cover.saturate(&Subset::singleton(cover.base(), a))?;
        out = out.union(&sat)?;
    }
    Ok(out)
}

/// `U ↓ V = ↓U ∩ ↓V`.
pub fn down_arrow<C: Cover + ?Sized>(cover: &C, u: &Subset, v: &Subset) -> Result<Subset> {
    down_set(cover, u)?.intersect(&down_set(cover, v)?)
}

/// `U → V = {a | {a} ∘ U ◁ V}`. Elements whose product with some
/// member of `U` is undefined are excluded, which keeps the result a
/// sound lower bound on bounded bases.
pub fn implication<C: Cover + ?Sized>(
    cover: &C,
    op: &DeltaOp,
    u: &Subset,
    v: &Subset,
) -> Result<Subset> {
    check_base(cover.base(), u)?;
    check_base(cover.base(), v)?;
    if op.base() != cover.base() {
        return Err(Error::BaseMismatch);
    }
    let sat_v = cover.saturate(v)?;
    let mut out = Subset::empty(cover.base());
    'elems: for a in 0..cover.base().len() {
        let mut product = Subset::empty(cover.base());
        for b in u.iter() {
            match op.get(a, b) {
                Some(p) => product = product.union(p)?,
                None => continue 'elems,
            }
        }
        if product.is_subset(&sat_v)? {
            out.insert(a);
        }
    }
    Ok(out)
}

/// The operation `δ(a,b) = ↓a ∩ ↓b` induced by a cover's singleton
/// saturations.
pub fn down_op<C: Cover + ?Sized>(cover: &C) -> Result<DeltaOp> {
    let base = cover.base().clone();
    let n = base.len();
    let mut downs = Vec::with_capacity(n);
    for a in 0..n {
        downs.push(cover.saturate(&Subset::singleton(&base, a))?);
    }
    let mut entries = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            entries.push(Some(downs[a].intersect(&downs[b])?));
        }
    }
    Ok(DeltaOp::from_fn(&base, |a, b| entries[a * n + b].take()))
}
