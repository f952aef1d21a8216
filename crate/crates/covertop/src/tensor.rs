//! The tensor product of generated covers and its symmetric monoidal
//! structure: the unit cover, the structural isomorphisms with their
//! coherence equations, and the correspondence between subset products
//! and comultiplications `μ : S → S⊗S`.
//!
//! Product bases nest without flattening, so the re-association map α
//! is a real relation between distinct bases and the coherence
//! composites type-check as written. Construction of a tensor cover is
//! linear in the axiom material; only the exhaustive sweeps and
//! coherence composites are size-gated, at [`caps::TENSOR_LATTICE`]
//! total elements.

use serde::Serialize;

use crate::axioms::{AxiomId, AxiomSet};
use crate::base::{Base, BaseKind};
use crate::caps;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::morphisms::{is_basic_cover_map, maps_equal_witness, MapCheck, MapMethod, Relation};
use crate::saturation::{Cover, GeneratedCover};
use crate::subset::Subset;

/// The one-element base underlying the tensor unit.
pub fn unit_base() -> Base {
    Base::atomic(&["*"]).expect("the unit base is well-formed")
}

/// The tensor unit: the cover on `{∗}` generated by no axioms, whose
/// saturation is the identity on `{∅, {∗}}`.
pub fn unit_cover() -> GeneratedCover {
    GeneratedCover::new(AxiomSet::new(&unit_base()))
}

/// `U × V` as a subset of a product base.
pub fn product_subset(product: &Base, u: &Subset, v: &Subset) -> Result<Subset> {
    match product.kind() {
        BaseKind::Product(left, right) if left == u.base() && right == v.base() => {
            let mut out = Subset::empty(product);
            for a in u.iter() {
                for b in v.iter() {
                    out.insert(product.pair_index(a, b)?);
                }
            }
            Ok(out)
        }
        _ => Err(Error::BaseMismatch),
    }
}

/// The generating axioms of a tensor cover: each left axiom `a ◁ C`
/// becomes `(a,b) ◁ C×{b}` for every right element `b`, and each right
/// axiom `b ◁ D` becomes `(a,b) ◁ {a}×D` for every left element `a`.
pub fn tensor_axioms(left: &AxiomSet, right: &AxiomSet) -> Result<AxiomSet> {
    let base = Base::product(left.base(), right.base())?;
    let mut out = AxiomSet::new(&base);
    for (i, (a, ax)) in left.iter_all().enumerate() {
        for b in 0..right.base().len() {
            let elem = base.pair_index(a, b)?;
            let cover = product_subset(&base, &ax.cover, &Subset::singleton(right.base(), b))?;
            out.push(elem, AxiomId::TensorLeft(i), cover);
        }
    }
    for (j, (b, ax)) in right.iter_all().enumerate() {
        for a in 0..left.base().len() {
            let elem = base.pair_index(a, b)?;
            let cover = product_subset(&base, &Subset::singleton(left.base(), a), &ax.cover)?;
            out.push(elem, AxiomId::TensorRight(j), cover);
        }
    }
    Ok(out)
}

/// The tensor of two generated covers: the cover on the product base
/// generated by [`tensor_axioms`], keeping rebuilt copies of the
/// factors for reference.
pub struct TensorCover {
    left: GeneratedCover,
    right: GeneratedCover,
    cover: GeneratedCover,
}

pub fn tensor_cover(left: &GeneratedCover, right: &GeneratedCover) -> Result<TensorCover> {
    let axioms = tensor_axioms(left.axioms(), right.axioms())?;
    Ok(TensorCover {
        left: GeneratedCover::new(left.axioms().clone()),
        right: GeneratedCover::new(right.axioms().clone()),
        cover: GeneratedCover::new(axioms),
    })
}

impl TensorCover {
    pub fn cover(&self) -> &GeneratedCover {
        &self.cover
    }

    pub fn left(&self) -> &GeneratedCover {
        &self.left
    }

    pub fn right(&self) -> &GeneratedCover {
        &self.right
    }
}

impl Cover for TensorCover {
    fn base(&self) -> &Base {
        self.cover.base()
    }

    fn saturate(&self, u: &Subset) -> Result<Subset> {
        self.cover.saturate(u)
    }
}

/// The tensor of two relations: `(a₁,a₂)` is related to `(b₁,b₂)` when
/// `a₁ r₁ b₁` and `a₂ r₂ b₂`, so each preimage column is the exact
/// rectangle `r₁⁻b₁ × r₂⁻b₂`.
pub fn tensor_map(r1: &Relation, r2: &Relation) -> Result<Relation> {
    let source = Base::product(r1.source(), r2.source())?;
    let target = Base::product(r1.target(), r2.target())?;
    Relation::from_rminus(&source, &target, |t| {
        let (b1, b2) = target.pair_of(t)?;
        product_subset(&source, r1.rminus_elem(b1), r2.rminus_elem(b2))
    })
}

/// A structural isomorphism as a pair of mutually inverse relations.
/// All four are graphs of bijections, so the inverse is the transpose.
pub struct Iso {
    pub forward: Relation,
    pub inverse: Relation,
}

impl Iso {
    fn from_forward(forward: Relation) -> Iso {
        let inverse = forward.transpose();
        Iso { forward, inverse }
    }
}

/// The symmetry `γ : S₁⊗S₂ → S₂⊗S₁`, with `γ⁻(a₂,a₁) = {(a₁,a₂)}`.
pub fn gamma_iso(s1: &Base, s2: &Base) -> Result<Iso> {
    let source = Base::product(s1, s2)?;
    let target = Base::product(s2, s1)?;
    let forward = Relation::from_rminus(&source, &target, |t| {
        let (a2, a1) = target.pair_of(t)?;
        Ok(Subset::singleton(&source, source.pair_index(a1, a2)?))
    })?;
    Ok(Iso::from_forward(forward))
}

/// The re-association `α : S₁⊗(S₂⊗S₃) → (S₁⊗S₂)⊗S₃`, with
/// `α⁻((a₁,a₂),a₃) = {(a₁,(a₂,a₃))}`.
pub fn alpha_iso(s1: &Base, s2: &Base, s3: &Base) -> Result<Iso> {
    let s23 = Base::product(s2, s3)?;
    let s12 = Base::product(s1, s2)?;
    let source = Base::product(s1, &s23)?;
    let target = Base::product(&s12, s3)?;
    let forward = Relation::from_rminus(&source, &target, |t| {
        let (pair, a3) = target.pair_of(t)?;
        let (a1, a2) = s12.pair_of(pair)?;
        let inner = s23.pair_index(a2, a3)?;
        Ok(Subset::singleton(&source, source.pair_index(a1, inner)?))
    })?;
    Ok(Iso::from_forward(forward))
}

/// The left unit `λ : E⊗S → S`, with `λ⁻a = {(∗,a)}`.
pub fn lambda_iso(s: &Base) -> Result<Iso> {
    let source = Base::product(&unit_base(), s)?;
    let forward = Relation::from_rminus(&source, s, |a| {
        Ok(Subset::singleton(&source, source.pair_index(0, a)?))
    })?;
    Ok(Iso::from_forward(forward))
}

/// The right unit `ρ : S⊗E → S`, with `ρ⁻a = {(a,∗)}`.
pub fn rho_iso(s: &Base) -> Result<Iso> {
    let source = Base::product(s, &unit_base())?;
    let forward = Relation::from_rminus(&source, s, |a| {
        Ok(Subset::singleton(&source, source.pair_index(a, 0)?))
    })?;
    Ok(Iso::from_forward(forward))
}

/// The coherence equations of the symmetric monoidal structure, in the
/// order they are checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoherenceEquation {
    /// `α·α = (α⊗id)·α·(id⊗α)` on `S₁⊗(S₂⊗(S₃⊗S₄))`.
    Pentagon,
    /// `(ρ⊗id)·α = id⊗λ` on `S₁⊗(E⊗S₂)`.
    Triangle,
    /// `λ_E = ρ_E` on `E⊗E`.
    UnitAgreement,
    /// `γ·γ = id` on `S₁⊗S₂`.
    SymmetryInvolution,
    /// `ρ = λ·γ` on `S₁⊗E`.
    RightUnitViaSymmetry,
    /// `α·γ·α = (γ⊗id)·α·(id⊗γ)` on `S₁⊗(S₂⊗S₃)`.
    Hexagon,
}

/// Outcome of comparing two composite maps out of the same cover; the
/// witness is the target element whose preimages first differ.
#[derive(Debug, Clone, Serialize)]
pub struct DiagramCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn diagram<C: Cover + ?Sized>(lhs: &Relation, rhs: &Relation, source: &C) -> Result<DiagramCheck> {
    let witness = maps_equal_witness(lhs, rhs, source)?;
    Ok(DiagramCheck {
        passed: witness.is_none(),
        witness: witness.map(|b| lhs.target().name(b).to_string()),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CoherenceReport {
    pub equation: CoherenceEquation,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Verifies all six coherence equations on the given covers, comparing
/// each pair of composites as maps. The product of all four base sizes
/// is capped at [`caps::TENSOR_LATTICE`].
pub fn check_coherence(
    s1: &GeneratedCover,
    s2: &GeneratedCover,
    s3: &GeneratedCover,
    s4: &GeneratedCover,
) -> Result<Vec<CoherenceReport>> {
    let total = s1.base().len() * s2.base().len() * s3.base().len() * s4.base().len();
    caps::ensure("coherence check", caps::TENSOR_LATTICE, total)?;
    let (b1, b2, b3, b4) = (s1.base(), s2.base(), s3.base(), s4.base());
    let e = unit_cover();
    let eb = unit_base();
    let mut out = Vec::new();
    let mut push = |equation, check: DiagramCheck| {
        out.push(CoherenceReport {
            equation,
            passed: check.passed,
            witness: check.witness,
        });
    };

    {
        let b34 = Base::product(b3, b4)?;
        let b12 = Base::product(b1, b2)?;
        let b23 = Base::product(b2, b3)?;
        let lhs = alpha_iso(b1, b2, &b34)?
            .forward
            .compose(&alpha_iso(&b12, b3, b4)?.forward)?;
        let rhs = tensor_map(&Relation::identity(b1), &alpha_iso(b2, b3, b4)?.forward)?
            .compose(&alpha_iso(b1, &b23, b4)?.forward)?
            .compose(&tensor_map(
                &alpha_iso(b1, b2, b3)?.forward,
                &Relation::identity(b4),
            )?)?;
        let t34 = tensor_cover(s3, s4)?;
        let t234 = tensor_cover(s2, t34.cover())?;
        let source = tensor_cover(s1, t234.cover())?;
        push(CoherenceEquation::Pentagon, diagram(&lhs, &rhs, &source)?);
    }

    {
        let lhs = alpha_iso(b1, &eb, b2)?.forward.compose(&tensor_map(
            &rho_iso(b1)?.forward,
            &Relation::identity(b2),
        )?)?;
        let rhs = tensor_map(&Relation::identity(b1), &lambda_iso(b2)?.forward)?;
        let te2 = tensor_cover(&e, s2)?;
        let source = tensor_cover(s1, te2.cover())?;
        push(CoherenceEquation::Triangle, diagram(&lhs, &rhs, &source)?);
    }

    {
        let lhs = lambda_iso(&eb)?.forward;
        let rhs = rho_iso(&eb)?.forward;
        let source = tensor_cover(&e, &e)?;
        push(CoherenceEquation::UnitAgreement, diagram(&lhs, &rhs, &source)?);
    }

    {
        let composite = gamma_iso(b1, b2)?
            .forward
            .compose(&gamma_iso(b2, b1)?.forward)?;
        let id = Relation::identity(&Base::product(b1, b2)?);
        let source = tensor_cover(s1, s2)?;
        push(
            CoherenceEquation::SymmetryInvolution,
            diagram(&composite, &id, &source)?,
        );
    }

    {
        let lhs = rho_iso(b1)?.forward;
        let rhs = gamma_iso(b1, &eb)?.forward.compose(&lambda_iso(b1)?.forward)?;
        let source = tensor_cover(s1, &e)?;
        push(
            CoherenceEquation::RightUnitViaSymmetry,
            diagram(&lhs, &rhs, &source)?,
        );
    }

    {
        let b12 = Base::product(b1, b2)?;
        let lhs = alpha_iso(b1, b2, b3)?
            .forward
            .compose(&gamma_iso(&b12, b3)?.forward)?
            .compose(&alpha_iso(b3, b1, b2)?.forward)?;
        let rhs = tensor_map(&Relation::identity(b1), &gamma_iso(b2, b3)?.forward)?
            .compose(&alpha_iso(b1, b3, b2)?.forward)?
            .compose(&tensor_map(
                &gamma_iso(b1, b3)?.forward,
                &Relation::identity(b2),
            )?)?;
        let t23 = tensor_cover(s2, s3)?;
        let source = tensor_cover(s1, t23.cover())?;
        push(CoherenceEquation::Hexagon, diagram(&lhs, &rhs, &source)?);
    }

    Ok(out)
}

/// The comultiplication presented by a pointwise operation:
/// `μ : S → S⊗S` with `c μ (a,b)` exactly when `c ∈ δ(a,b)`. Pairs with
/// no product get an empty column.
pub fn mu_from_circ(op: &DeltaOp) -> Result<Relation> {
    let s = op.base();
    let ss = Base::product(s, s)?;
    Relation::from_rminus(s, &ss, |t| {
        let (a, b) = ss.pair_of(t)?;
        Ok(op
            .get(a, b)
            .cloned()
            .unwrap_or_else(|| Subset::empty(s)))
    })
}

/// Reads a pointwise operation back off a comultiplication:
/// `δ_μ(a,b) = μ⁻(a,b)`. The relation's target must be `S×S` for its
/// source `S`.
pub fn circ_from_mu(mu: &Relation) -> Result<DeltaOp> {
    let s = mu.source();
    match mu.target().kind() {
        BaseKind::Product(left, right) if left == s && right == s => {}
        _ => {
            return Err(Error::WrongOperationKind(
                "a comultiplication's target must be the square of its source",
            ))
        }
    }
    let target = mu.target().clone();
    let mut entries = Vec::with_capacity(s.len() * s.len());
    for a in 0..s.len() {
        for b in 0..s.len() {
            entries.push(Some(mu.rminus_elem(target.pair_index(a, b)?).clone()));
        }
    }
    Ok(DeltaOp::from_fn(s, |a, b| {
        entries[a * s.len() + b].clone()
    }))
}

/// The co-semigroup laws for `(S, μ)`: μ is a basic cover map into
/// `S⊗S`, co-associative through α, and co-commutative through γ.
#[derive(Debug, Clone, Serialize)]
pub struct CosemigroupReport {
    pub comultiplication: MapCheck,
    pub coassociativity: DiagramCheck,
    pub cocommutativity: DiagramCheck,
}

impl CosemigroupReport {
    pub fn passed(&self) -> bool {
        self.comultiplication.passed && self.coassociativity.passed && self.cocommutativity.passed
    }
}

pub fn check_cosemigroup(cover: &GeneratedCover, mu: &Relation) -> Result<CosemigroupReport> {
    let base = cover.base();
    let square = Base::product(base, base)?;
    if mu.source() != base || mu.target() != &square {
        return Err(Error::BaseMismatch);
    }
    let tensored = tensor_cover(cover, cover)?;
    let comultiplication = is_basic_cover_map(mu, cover, tensored.cover(), MapMethod::Axioms)?;

    let id = Relation::identity(base);
    let left_first = mu.compose(&tensor_map(mu, &id)?)?;
    let right_first = mu
        .compose(&tensor_map(&id, mu)?)?
        .compose(&alpha_iso(base, base, base)?.forward)?;
    let coassociativity = diagram(&left_first, &right_first, cover)?;

    let swapped = mu.compose(&gamma_iso(base, base)?.forward)?;
    let cocommutativity = diagram(&swapped, mu, cover)?;

    Ok(CosemigroupReport {
        comultiplication,
        coassociativity,
        cocommutativity,
    })
}

/// A counit `η : S → E` with `η⁻(∗)` a chosen subset, typically the
/// ∘-unit of a unital cover.
pub fn counit_from_unit(base: &Base, unit: &Subset) -> Result<Relation> {
    if unit.base() != base {
        return Err(Error::BaseMismatch);
    }
    Relation::from_rminus(base, &unit_base(), |_| Ok(unit.clone()))
}

/// The co-monoid laws: the co-semigroup laws plus the counit triangles
/// `(η⊗id)·μ = λ⁻¹` and `(id⊗η)·μ = ρ⁻¹`. When no counit is supplied,
/// the total relation `S → E` is used, which is the right default for
/// covers whose whole base is unit-equivalent.
#[derive(Debug, Clone, Serialize)]
pub struct ComonoidReport {
    pub cosemigroup: CosemigroupReport,
    pub counit: MapCheck,
    pub left_counit: DiagramCheck,
    pub right_counit: DiagramCheck,
}

impl ComonoidReport {
    pub fn passed(&self) -> bool {
        self.cosemigroup.passed()
            && self.counit.passed
            && self.left_counit.passed
            && self.right_counit.passed
    }
}

pub fn check_comonoid(
    cover: &GeneratedCover,
    mu: &Relation,
    eta: Option<&Relation>,
) -> Result<ComonoidReport> {
    let base = cover.base();
    let cosemigroup = check_cosemigroup(cover, mu)?;
    let default_eta;
    let eta = match eta {
        Some(eta) => {
            if eta.source() != base || eta.target() != &unit_base() {
                return Err(Error::BaseMismatch);
            }
            eta
        }
        None => {
            default_eta = Relation::total(base, &unit_base());
            &default_eta
        }
    };
    let counit = is_basic_cover_map(eta, cover, &unit_cover(), MapMethod::Axioms)?;

    let id = Relation::identity(base);
    let left = mu.compose(&tensor_map(eta, &id)?)?;
    let left_counit = diagram(&left, &lambda_iso(base)?.inverse, cover)?;
    let right = mu.compose(&tensor_map(&id, eta)?)?;
    let right_counit = diagram(&right, &rho_iso(base)?.inverse, cover)?;

    Ok(ComonoidReport {
        cosemigroup,
        counit,
        left_counit,
        right_counit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generation::{generate_convergent, generate_formal};
    use crate::mask;

    fn chain_cover() -> GeneratedCover {
        let base = Base::atomic(&["z", "o"]).unwrap();
        GeneratedCover::new(AxiomSet::from_user(&base, &[("z", vec!["o"])]).unwrap())
    }

    fn chain_formal() -> crate::generation::FormalCover {
        let base = Base::atomic(&["z", "o"]).unwrap();
        let axioms = AxiomSet::from_user(&base, &[("z", vec!["o"])]).unwrap();
        let op = DeltaOp::from_preorder(&base, &[("z", "o")]).unwrap();
        generate_formal(&axioms, &op).unwrap()
    }

    #[test]
    fn tensor_axioms_have_rectangle_shape() {
        let s_base = Base::atomic(&["a", "b", "c"]).unwrap();
        let s = GeneratedCover::new(
            AxiomSet::from_user(&s_base, &[("a", vec!["b", "c"])]).unwrap(),
        );
        let t_base = Base::atomic(&["p", "q"]).unwrap();
        let t = GeneratedCover::new(AxiomSet::new(&t_base));
        let tensored = tensor_cover(&s, &t).unwrap();
        let axioms = tensored.cover().axioms();
        assert_eq!(axioms.total_len(), 2);
        for (elem, ax) in axioms.iter_all() {
            let (a, b) = tensored.base().pair_of(elem).unwrap();
            assert_eq!(s_base.name(a), "a");
            let expected = product_subset(
                tensored.base(),
                &Subset::from_names(&s_base, &["b", "c"]).unwrap(),
                &Subset::singleton(&t_base, b),
            )
            .unwrap();
            assert_eq!(ax.cover, expected);
            assert!(matches!(ax.id, AxiomId::TensorLeft(0)));
        }
    }

    #[test]
    fn axiom_free_tensor_saturation_is_identity() {
        let base = Base::atomic(&["x", "y"]).unwrap();
        let free = GeneratedCover::new(AxiomSet::new(&base));
        let tensored = tensor_cover(&free, &free).unwrap();
        for m in 0..16u64 {
            let u = Subset::from_words(tensored.base(), mask::from_low_word(4, m));
            assert_eq!(tensored.saturate(&u).unwrap(), u);
        }
    }

    #[test]
    fn corner_of_formal_chain_square_covers_everything() {
        let formal = chain_formal();
        let tensored = tensor_cover(formal.cover(), formal.cover()).unwrap();
        let corner = Subset::from_names(tensored.base(), &["(o,o)"]).unwrap();
        assert_eq!(
            tensored.saturate(&corner).unwrap(),
            Subset::full(tensored.base())
        );
    }

    /// `𝒜U × 𝒜V` and `U × V` saturate identically in the tensor, and
    /// pointwise covering pairs into rectangle covering.
    #[test]
    fn rectangle_saturation_identities() {
        let s = chain_cover();
        let t_base = Base::atomic(&["p", "q", "r"]).unwrap();
        let t = GeneratedCover::new(
            AxiomSet::from_user(&t_base, &[("p", vec!["q"]), ("q", vec!["r"])]).unwrap(),
        );
        let tensored = tensor_cover(&s, &t).unwrap();
        let (ns, nt) = (2usize, 3usize);
        for um in 0..1u64 << ns {
            let u = Subset::from_words(s.base(), mask::from_low_word(ns, um));
            let su = s.saturate(&u).unwrap();
            for vm in 0..1u64 << nt {
                let v = Subset::from_words(t.base(), mask::from_low_word(nt, vm));
                let sv = t.saturate(&v).unwrap();
                let plain = product_subset(tensored.base(), &u, &v).unwrap();
                let saturated = product_subset(tensored.base(), &su, &sv).unwrap();
                assert!(tensored.sat_equal(&plain, &saturated).unwrap());
                for a in su.iter() {
                    for b in sv.iter() {
                        let pair = tensored.base().pair_index(a, b).unwrap();
                        assert!(tensored.covers(pair, &plain).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_map_is_functorial_and_exact_on_rectangles() {
        let base = Base::atomic(&["z", "o"]).unwrap();
        let id = Relation::identity(&base);
        let tensor_id = tensor_map(&id, &id).unwrap();
        assert_eq!(tensor_id, Relation::identity(tensor_id.source()));

        let r = Relation::from_pairs(&base, &base, &[("z", "o"), ("o", "o")]).unwrap();
        let s = Relation::from_pairs(&base, &base, &[("o", "z")]).unwrap();
        let r2 = Relation::from_pairs(&base, &base, &[("z", "z")]).unwrap();
        let s2 = Relation::from_pairs(&base, &base, &[("z", "o"), ("z", "z")]).unwrap();
        let lhs = tensor_map(&r.compose(&r2).unwrap(), &s.compose(&s2).unwrap()).unwrap();
        let rhs = tensor_map(&r, &s)
            .unwrap()
            .compose(&tensor_map(&r2, &s2).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);

        let rs = tensor_map(&r, &s).unwrap();
        for vm in 0..4u64 {
            for wm in 0..4u64 {
                let v = Subset::from_words(&base, mask::from_low_word(2, vm));
                let w = Subset::from_words(&base, mask::from_low_word(2, wm));
                let rect = product_subset(rs.target(), &v, &w).unwrap();
                let expected = product_subset(
                    rs.source(),
                    &r.rminus(&v).unwrap(),
                    &s.rminus(&w).unwrap(),
                )
                .unwrap();
                assert_eq!(rs.rminus(&rect).unwrap(), expected);
            }
        }
    }

    #[test]
    fn structural_maps_are_isomorphisms() {
        let base = Base::atomic(&["z", "o"]).unwrap();
        let chain = chain_cover();

        let gamma = gamma_iso(&base, &base).unwrap();
        let square = tensor_cover(&chain, &chain).unwrap();
        let round = gamma.forward.compose(&gamma.inverse).unwrap();
        assert!(crate::morphisms::maps_equal(
            &round,
            &Relation::identity(round.source()),
            &square
        )
        .unwrap());

        let alpha = alpha_iso(&base, &base, &base).unwrap();
        let round = alpha.forward.compose(&alpha.inverse).unwrap();
        assert_eq!(round, Relation::identity(round.source()));

        let lambda = lambda_iso(&base).unwrap();
        let e = unit_cover();
        let te = tensor_cover(&e, &chain).unwrap();
        let check = is_basic_cover_map(&lambda.forward, &te, &chain, MapMethod::Axioms).unwrap();
        assert!(check.passed);
        let round = lambda.forward.compose(&lambda.inverse).unwrap();
        assert_eq!(round, Relation::identity(round.source()));
    }

    #[test]
    fn coherence_holds_on_chain_covers() {
        let chain = chain_cover();
        let reports = check_coherence(&chain, &chain, &chain, &chain).unwrap();
        assert_eq!(reports.len(), 6);
        for report in reports {
            assert!(report.passed, "{:?} failed: {:?}", report.equation, report.witness);
        }
    }

    #[test]
    fn comultiplication_round_trips_through_the_operation() {
        let formal = chain_formal();
        let mu = mu_from_circ(formal.op()).unwrap();
        let z_o = mu.target().require("(z,o)").unwrap();
        assert_eq!(
            mu.rminus_elem(z_o),
            &Subset::from_names(formal.base(), &["z"]).unwrap()
        );

        let tensored = tensor_cover(formal.cover(), formal.cover()).unwrap();
        let check =
            is_basic_cover_map(&mu, formal.cover(), tensored.cover(), MapMethod::Axioms).unwrap();
        assert!(check.passed);

        let back = circ_from_mu(&mu).unwrap();
        for (a, b, entry) in back.pairs() {
            assert_eq!(entry, formal.op().get(a, b));
        }
        let mu_again = mu_from_circ(&back).unwrap();
        assert_eq!(mu_again, mu);
    }

    #[test]
    fn formal_chain_is_a_cosemigroup_and_comonoid() {
        let formal = chain_formal();
        let mu = mu_from_circ(formal.op()).unwrap();
        let report = check_cosemigroup(formal.cover(), &mu).unwrap();
        assert!(report.passed(), "{report:?}");
        let monoid = check_comonoid(formal.cover(), &mu, None).unwrap();
        assert!(monoid.passed(), "{monoid:?}");
    }

    #[test]
    fn unital_monoid_cover_is_a_comonoid_with_unit_counit() {
        let base = Base::atomic(&["g", "h", "e"]).unwrap();
        let op = DeltaOp::from_monoid(
            &base,
            &[
                ("g", "g", "h"),
                ("g", "h", "h"),
                ("h", "g", "h"),
                ("h", "h", "h"),
                ("g", "e", "g"),
                ("e", "g", "g"),
                ("h", "e", "h"),
                ("e", "h", "h"),
                ("e", "e", "e"),
            ],
            "e",
        )
        .unwrap();
        let unit = Subset::from_names(&base, &["e"]).unwrap();
        let conv = generate_convergent(&AxiomSet::new(&base), &op, Some(&unit)).unwrap();
        let mu = mu_from_circ(conv.op()).unwrap();
        let eta = counit_from_unit(&base, &unit).unwrap();
        let report = check_comonoid(conv.cover(), &mu, Some(&eta)).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn non_associative_operation_fails_coassociativity() {
        let base = Base::atomic(&["x", "y"]).unwrap();
        let cover = GeneratedCover::new(AxiomSet::new(&base));
        let op = DeltaOp::from_table(
            &base,
            &[
                ("x", "x", vec!["y"]),
                ("x", "y", vec!["x"]),
                ("y", "x", vec!["x"]),
                ("y", "y", vec!["x"]),
            ],
        )
        .unwrap();
        let mu = mu_from_circ(&op).unwrap();
        let report = check_cosemigroup(&cover, &mu).unwrap();
        assert!(!report.coassociativity.passed);
        assert!(report.coassociativity.witness.is_some());
    }
}
