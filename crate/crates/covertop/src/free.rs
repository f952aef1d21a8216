//! Free constructions that take a plain basic cover to a formal one in
//! three steps, each universal for the structure it adds.
//!
//! Starting from a basic cover the pipeline builds:
//!
//! * the list construction ([`o_construction`]): a cover over lists of
//!   source elements with concatenation as operation and the empty
//!   list as unit, whose axioms are the source axioms lifted to
//!   singleton lists plus commutativity of concatenation;
//! * the quantale step ([`q_construction`]): the convergent cover
//!   generated from the same base, axioms, operation and unit, which
//!   adds the associativity, unit and localization axioms the input
//!   was missing;
//! * the frame step ([`l_construction`]): the formal cover generated
//!   from the same data, whose weakening and contraction axioms make
//!   the operation present binary meet and collapse the unit to the
//!   whole base.
//!
//! Each step carries a counit relating it back to its input, validated
//! at the input's level of structure, and a factorization
//! ([`factor_through_o`] and friends) that lifts any suitable map into
//! the input through the construction. On finite bases both halves of
//! the universal property are checked computationally on generators.

use std::collections::HashMap;

use crate::axioms::{AxiomId, AxiomSet};
use crate::base::Base;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::generation::{generate_convergent, generate_formal, ConvergentCover, FormalCover};
use crate::laws::{Law, LawReport, Witness};
use crate::morphisms::{
    axiom_conditions, is_basic_cover_map, is_formal_map, is_unital_map, maps_equal,
    product_conditions, MapCheck, MapFailure, MapMethod, Relation,
};
use crate::op;
use crate::saturation::{Cover, GeneratedCover};
use crate::subset::Subset;

/// A basic cover packaged with an operation and a unit subset. The
/// lifted operation distributes over unions by construction; the
/// remaining laws (associativity, commutativity, the unit law) are
/// expected up to saturation and reported by [`CircBasicCover::check_laws`]
/// rather than enforced at construction, so a broken table comes back
/// as data instead of an error.
pub struct CircBasicCover {
    cover: GeneratedCover,
    op: DeltaOp,
    unit: Subset,
}

impl CircBasicCover {
    pub fn new(cover: GeneratedCover, op: DeltaOp, unit: Subset) -> Result<CircBasicCover> {
        if op.base() != cover.base() || unit.base() != cover.base() {
            return Err(Error::BaseMismatch);
        }
        Ok(CircBasicCover { cover, op, unit })
    }

    pub fn cover(&self) -> &GeneratedCover {
        &self.cover
    }

    pub fn base(&self) -> &Base {
        self.cover.base()
    }

    pub fn op(&self) -> &DeltaOp {
        &self.op
    }

    pub fn unit(&self) -> &Subset {
        &self.unit
    }

    /// The lifted product `U∘V` and whether any factor pair fell
    /// outside the operation's table.
    pub fn product(&self, u: &Subset, v: &Subset) -> Result<(Subset, bool)> {
        op::lift(&self.op, u, v)
    }

    /// Element-level sweep of the laws a cover with operation must
    /// satisfy. Distributivity over unions is exact and holds for any
    /// table-lifted operation; it is checked on two-element unions as
    /// a guard. Associativity and commutativity are compared up to
    /// saturation, skipping pairs the table leaves undefined (bounded
    /// list bases). The unit law `a =_𝒜 {a}∘I` must be defined to
    /// hold, so an undefined product there counts as a failure.
    pub fn check_laws(&self) -> Result<Vec<LawReport>> {
        let base = self.base();
        let n = base.len();

        let mut dist = None;
        'dist: for a in 0..n {
            for b in 0..n {
                let pair = Subset::from_indices(base, &[a, b])?;
                for c in 0..n {
                    let sc = Subset::singleton(base, c);
                    let (joint, j_over) = self.product(&pair, &sc)?;
                    let (left, l_over) = self.product(&Subset::singleton(base, a), &sc)?;
                    let (right, r_over) = self.product(&Subset::singleton(base, b), &sc)?;
                    if j_over || l_over || r_over {
                        continue;
                    }
                    if joint != left.union(&right)? {
                        dist = Some(Witness::elems(base, &[a, b, c]));
                        break 'dist;
                    }
                }
            }
        }

        let mut assoc = None;
        'assoc: for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.op.get(a, b) else { continue };
                for c in 0..n {
                    let Some(bc) = self.op.get(b, c) else { continue };
                    let (lhs, l_over) = op::lift(&self.op, ab, &Subset::singleton(base, c))?;
                    let (rhs, r_over) = op::lift(&self.op, &Subset::singleton(base, a), bc)?;
                    if l_over || r_over {
                        continue;
                    }
                    if !self.cover.sat_equal(&lhs, &rhs)? {
                        assoc = Some(Witness::elems(base, &[a, b, c]));
                        break 'assoc;
                    }
                }
            }
        }

        let mut comm = None;
        'comm: for a in 0..n {
            for b in 0..n {
                let (Some(ab), Some(ba)) = (self.op.get(a, b), self.op.get(b, a)) else {
                    continue;
                };
                if !self.cover.sat_equal(ab, ba)? {
                    comm = Some(Witness::elems(base, &[a, b]));
                    break 'comm;
                }
            }
        }

        let mut unit = None;
        for a in 0..n {
            let sa = Subset::singleton(base, a);
            let (prod, overflow) = self.product(&sa, &self.unit)?;
            if overflow || !self.cover.sat_equal(&sa, &prod)? {
                unit = Some(Witness::elems(base, &[a]));
                break;
            }
        }

        Ok(vec![
            LawReport::from_witness(Law::Distributivity, dist),
            LawReport::from_witness(Law::Associativity, assoc),
            LawReport::from_witness(Law::Commutativity, comm),
            LawReport::from_witness(Law::Unit, unit),
        ])
    }
}

/// Conditions for `r` to be a map between covers with operation and
/// unit: every target axiom pulls back to a covering (sufficient when
/// the target is generated from those axioms), products pull back up
/// to source saturation, and the target unit pulls back to the source
/// unit. The source is passed piecewise so that generated and
/// delegated covers can both sit on that side.
pub fn is_circ_basic_map<CS>(
    r: &Relation,
    source: &CS,
    source_op: &DeltaOp,
    source_unit: &Subset,
    target: &CircBasicCover,
) -> Result<MapCheck>
where
    CS: Cover + ?Sized,
{
    if r.source() != source.base() || r.target() != target.base() {
        return Err(Error::BaseMismatch);
    }
    let basic = axiom_conditions(r, source, target.cover().axioms())?;
    if !basic.passed {
        return Ok(basic);
    }
    let products = product_conditions(r, source, source_op, target.op())?;
    if !products.passed {
        return Ok(products);
    }
    if !source.sat_equal(&r.rminus(target.unit())?, source_unit)? {
        return Ok(MapCheck::fail(MapFailure::Unit));
    }
    Ok(MapCheck::pass())
}

/// The list construction: a cover with operation and unit over lists
/// of source elements, together with the counit relating `[a]` back to
/// `a` and the result of validating that counit as a basic cover map.
pub struct OConstruction {
    circ: CircBasicCover,
    counit: Relation,
    counit_check: MapCheck,
    max_len: usize,
}

impl OConstruction {
    pub fn circ(&self) -> &CircBasicCover {
        &self.circ
    }

    pub fn counit(&self) -> &Relation {
        &self.counit
    }

    pub fn counit_check(&self) -> &MapCheck {
        &self.counit_check
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }
}

fn singleton_list(lbase: &Base, item: usize) -> Result<usize> {
    lbase.list_index(&[item])?.ok_or_else(|| {
        Error::Internal("a singleton list fits any admissible length bound".into())
    })
}

/// Builds the free cover with operation over a basic cover. The base
/// becomes lists of source elements up to `max_len`, the operation is
/// concatenation, the unit is the empty list. The axioms are the
/// source axioms lifted to singleton lists plus one commutativity
/// axiom `l•k ◁ {k•l}` per pair of lists whose concatenation stays in
/// bound; associativity and the unit law hold exactly for
/// concatenation, so no axioms are needed for them. Products that
/// would exceed `max_len` are left undefined, which bounds the
/// construction without changing what it proves about lists that fit.
pub fn o_construction(source: &GeneratedCover, max_len: usize) -> Result<OConstruction> {
    if max_len < 2 {
        return Err(Error::TooSmall {
            what: "the list construction bound",
            min: 2,
            got: max_len,
        });
    }
    let atoms = source.base();
    let lbase = Base::lists(atoms, max_len)?;

    let mut axioms = AxiomSet::new(&lbase);
    for a in 0..atoms.len() {
        for (j, axiom) in source.axioms().entries(a).iter().enumerate() {
            let mut cover = Subset::empty(&lbase);
            for u in axiom.cover.iter() {
                cover.insert(singleton_list(&lbase, u)?);
            }
            axioms.push(singleton_list(&lbase, a)?, AxiomId::User(j), cover);
        }
    }

    let mut by_len: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
    for l in 0..lbase.len() {
        by_len[lbase.list_items(l)?.len()].push(l);
    }
    for llen in 0..=max_len {
        for klen in 0..=max_len - llen {
            for &l in &by_len[llen] {
                for &k in &by_len[klen] {
                    let lk = lbase
                        .concat_index(l, k)?
                        .expect("the length bound was checked per bucket");
                    let kl = lbase
                        .concat_index(k, l)?
                        .expect("the swapped concatenation has the same length");
                    if lk == kl {
                        continue;
                    }
                    axioms.push(
                        lk,
                        AxiomId::Commutativity { b: l, c: k },
                        Subset::singleton(&lbase, kl),
                    );
                }
            }
        }
    }

    let cover = GeneratedCover::new(axioms);
    let op = DeltaOp::concatenation(&lbase)?;
    let empty_list = lbase
        .list_index(&[])?
        .ok_or_else(|| Error::Internal("every list base contains the empty list".into()))?;
    let unit = Subset::singleton(&lbase, empty_list);
    let circ = CircBasicCover::new(cover, op, unit)?;

    let counit = Relation::from_rminus(&lbase, atoms, |a| {
        Ok(Subset::singleton(&lbase, singleton_list(&lbase, a)?))
    })?;
    let counit_check = is_basic_cover_map(&counit, circ.cover(), source, MapMethod::Axioms)?;

    Ok(OConstruction {
        circ,
        counit,
        counit_check,
        max_len,
    })
}

/// How a derivation node is justified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationRule {
    /// The element belongs to the goal subset.
    Reflexivity,
    /// An axiom of the element, with one child derivation per element
    /// of the axiom's cover.
    Infinity(AxiomId),
}

/// A finite derivation of `element ◁ goal`. The goal subset is the
/// same throughout a derivation, so it is carried alongside the tree
/// rather than stored in every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTree {
    element: usize,
    rule: DerivationRule,
    children: Vec<DerivationTree>,
}

impl DerivationTree {
    pub fn element(&self) -> usize {
        self.element
    }

    pub fn rule(&self) -> &DerivationRule {
        &self.rule
    }

    pub fn children(&self) -> &[DerivationTree] {
        &self.children
    }

    /// Number of axiom applications along the deepest path.
    pub fn depth(&self) -> usize {
        match self.rule {
            DerivationRule::Reflexivity => 0,
            DerivationRule::Infinity(_) => {
                1 + self
                    .children
                    .iter()
                    .map(DerivationTree::depth)
                    .max()
                    .unwrap_or(0)
            }
        }
    }

    /// Machine-readable form: `{goal: {element, subset}, rule,
    /// axiom?, children}`, with element names rendered against the
    /// base.
    pub fn to_json(&self, base: &Base, goal: &Subset) -> serde_json::Value {
        let rule = match self.rule {
            DerivationRule::Reflexivity => "reflexivity",
            DerivationRule::Infinity(_) => "infinity",
        };
        let mut node = serde_json::json!({
            "goal": {
                "element": base.name(self.element),
                "subset": goal.names(),
            },
            "rule": rule,
            "children": self
                .children
                .iter()
                .map(|c| c.to_json(base, goal))
                .collect::<Vec<_>>(),
        });
        if let DerivationRule::Infinity(id) = &self.rule {
            node["axiom"] = serde_json::Value::String(id.render(base));
        }
        node
    }

    /// Indented proof trace, one node per line, goal stated first.
    pub fn render(&self, base: &Base, goal: &Subset) -> String {
        let mut out = format!(
            "{} <| {{{}}}\n",
            base.name(self.element),
            goal.names().join(", ")
        );
        self.render_into(base, 1, &mut out);
        out
    }

    fn render_into(&self, base: &Base, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match &self.rule {
            DerivationRule::Reflexivity => {
                out.push_str(&format!("{pad}{} by reflexivity\n", base.name(self.element)));
            }
            DerivationRule::Infinity(id) => {
                out.push_str(&format!(
                    "{pad}{} by {}\n",
                    base.name(self.element),
                    id.render(base)
                ));
                for child in &self.children {
                    child.render_into(base, indent + 1, out);
                }
            }
        }
    }
}

/// Searches for a derivation of `element ◁ goal` that nests at most
/// `depth` axiom applications. Reflexivity is tried before any axiom,
/// and an element's axioms are tried in the order the set stores them,
/// so the result is deterministic. `None` is inconclusive: no
/// derivation exists within the bound, which says nothing about the
/// covering itself.
pub fn bounded_derive(
    axioms: &AxiomSet,
    element: usize,
    goal: &Subset,
    depth: usize,
) -> Result<Option<DerivationTree>> {
    if goal.base() != axioms.base() {
        return Err(Error::BaseMismatch);
    }
    if element >= axioms.base().len() {
        return Err(Error::UnknownElement(format!("index {element}")));
    }
    let mut failed: HashMap<usize, usize> = HashMap::new();
    Ok(derive_rec(axioms, element, goal, depth, &mut failed))
}

/// `failed` maps an element to the largest budget already known not to
/// admit a derivation, which keeps the search polynomial on covers
/// whose axioms revisit elements.
fn derive_rec(
    axioms: &AxiomSet,
    element: usize,
    goal: &Subset,
    budget: usize,
    failed: &mut HashMap<usize, usize>,
) -> Option<DerivationTree> {
    if goal.contains(element) {
        return Some(DerivationTree {
            element,
            rule: DerivationRule::Reflexivity,
            children: Vec::new(),
        });
    }
    if budget == 0 || failed.get(&element).is_some_and(|&b| budget <= b) {
        return None;
    }
    'axioms: for axiom in axioms.entries(element) {
        let mut children = Vec::with_capacity(axiom.cover.len());
        for c in axiom.cover.iter() {
            match derive_rec(axioms, c, goal, budget - 1, failed) {
                Some(tree) => children.push(tree),
                None => continue 'axioms,
            }
        }
        return Some(DerivationTree {
            element,
            rule: DerivationRule::Infinity(axiom.id.clone()),
            children,
        });
    }
    let entry = failed.entry(element).or_insert(budget);
    *entry = (*entry).max(budget);
    None
}

/// Replays a derivation against an axiom set and goal, independently
/// of how it was found: reflexivity leaves must sit in the goal, and
/// every infinity node must name an axiom of its element whose cover
/// the children derive, in the cover's element order.
pub fn validate_derivation(
    axioms: &AxiomSet,
    tree: &DerivationTree,
    goal: &Subset,
) -> Result<bool> {
    if goal.base() != axioms.base() {
        return Err(Error::BaseMismatch);
    }
    match &tree.rule {
        DerivationRule::Reflexivity => {
            Ok(tree.children.is_empty() && goal.contains(tree.element))
        }
        DerivationRule::Infinity(id) => {
            let Some(axiom) = axioms
                .entries(tree.element)
                .iter()
                .find(|axiom| axiom.id == *id)
            else {
                return Ok(false);
            };
            if axiom.cover.len() != tree.children.len() {
                return Ok(false);
            }
            for (c, child) in axiom.cover.iter().zip(&tree.children) {
                if child.element != c || !validate_derivation(axioms, child, goal)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// The quantale step: the input's base, axioms, operation and unit
/// rerun through convergent generation, plus the identity counit
/// validated as a map of covers with operation and unit.
pub struct QConstruction {
    convergent: ConvergentCover,
    counit: Relation,
    counit_check: MapCheck,
}

impl QConstruction {
    pub fn convergent(&self) -> &ConvergentCover {
        &self.convergent
    }

    pub fn counit(&self) -> &Relation {
        &self.counit
    }

    pub fn counit_check(&self) -> &MapCheck {
        &self.counit_check
    }
}

pub fn q_construction(input: &CircBasicCover) -> Result<QConstruction> {
    let convergent = generate_convergent(input.cover().axioms(), input.op(), Some(input.unit()))?;
    let counit = Relation::identity(input.base());
    let unit = convergent
        .unit()
        .ok_or(Error::MissingUnit)?
        .clone();
    let counit_check = is_circ_basic_map(&counit, convergent.cover(), convergent.op(), &unit, input)?;
    Ok(QConstruction {
        convergent,
        counit,
        counit_check,
    })
}

/// The frame step: formal generation from the convergent cover's seed
/// axioms and operation. The counit is validated against the full
/// convergent axiom set with the whole base in the source unit's role,
/// so a passing check certifies that the old unit collapses to the
/// top, that the localization axioms stay derivable, and that products
/// are preserved.
pub struct LConstruction {
    formal: FormalCover,
    counit: Relation,
    counit_check: MapCheck,
}

impl LConstruction {
    pub fn formal(&self) -> &FormalCover {
        &self.formal
    }

    pub fn counit(&self) -> &Relation {
        &self.counit
    }

    pub fn counit_check(&self) -> &MapCheck {
        &self.counit_check
    }
}

pub fn l_construction(input: &QConstruction) -> Result<LConstruction> {
    let q = input.convergent();
    let formal = generate_formal(q.seed(), q.op())?;
    let counit = Relation::identity(q.cover().base());
    let target = CircBasicCover::new(
        GeneratedCover::new(q.cover().axioms().clone()),
        q.op().clone(),
        q.unit().ok_or(Error::MissingUnit)?.clone(),
    )?;
    let counit_check = is_circ_basic_map(
        &counit,
        formal.cover(),
        formal.op(),
        &Subset::full(q.cover().base()),
        &target,
    )?;
    Ok(LConstruction {
        formal,
        counit,
        counit_check,
    })
}

/// A map lifted through one construction step: the lifted relation,
/// its validation at the richer level, and whether composing with the
/// counit gives back the original map on generators.
pub struct Factorization {
    pub map: Relation,
    pub check: MapCheck,
    pub triangle: bool,
}

/// Lifts a basic cover map `r` out of a cover with operation `source`
/// through the list construction over `r`'s target: a list goes to the
/// product of the preimages of its entries, the empty list to the
/// source unit. No other assignment is compatible with products and
/// units, so the triangle check against the counit doubles as a
/// uniqueness probe. The source operation must be defined on the
/// products the chains need.
pub fn factor_through_o(
    r: &Relation,
    source: &CircBasicCover,
    o: &OConstruction,
) -> Result<Factorization> {
    if r.source() != source.base() || r.target() != o.counit().target() {
        return Err(Error::BaseMismatch);
    }
    let lbase = o.circ().base();
    let map = Relation::from_rminus(source.base(), lbase, |l| {
        let items = lbase.list_items(l)?;
        let Some((&first, rest)) = items.split_first() else {
            return Ok(source.unit().clone());
        };
        let mut acc = r.rminus_elem(first).clone();
        for &a in rest {
            acc = op::lift_total(source.op(), &acc, r.rminus_elem(a))?;
        }
        Ok(acc)
    })?;
    let check = is_circ_basic_map(&map, source.cover(), source.op(), source.unit(), o.circ())?;
    let composite = map.compose(o.counit())?;
    let triangle = maps_equal(&composite, r, source.cover())?;
    Ok(Factorization {
        map,
        check,
        triangle,
    })
}

/// Passes a map from a unital convergent cover into the quantale step:
/// the relation is unchanged, and what the step adds is that the same
/// relation now validates against the richer target.
pub fn factor_through_q(
    r: &Relation,
    source: &ConvergentCover,
    q: &QConstruction,
) -> Result<Factorization> {
    let check = is_unital_map(r, source, q.convergent())?;
    let composite = r.compose(q.counit())?;
    let triangle = maps_equal(&composite, r, source.cover())?;
    Ok(Factorization {
        map: r.clone(),
        check,
        triangle,
    })
}

/// Passes a map from a formal cover into the frame step, revalidating
/// it as a formal cover map.
pub fn factor_through_l(
    r: &Relation,
    source: &FormalCover,
    l: &LConstruction,
) -> Result<Factorization> {
    let check = is_formal_map(r, source, l.formal())?;
    let composite = r.compose(l.counit())?;
    let triangle = maps_equal(&composite, r, source.cover())?;
    Ok(Factorization {
        map: r.clone(),
        check,
        triangle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws;

    fn named_base(names: &[&str]) -> Base {
        Base::atomic(names).unwrap()
    }

    fn basic_cover(names: &[&str], axioms: &[(&str, &[&str])]) -> GeneratedCover {
        let base = named_base(names);
        let mut set = AxiomSet::new(&base);
        for (k, (elem, cover)) in axioms.iter().enumerate() {
            let indices: Vec<usize> = cover.iter().map(|n| base.index_of(n).unwrap()).collect();
            set.push(
                base.index_of(elem).unwrap(),
                AxiomId::User(k),
                Subset::from_indices(&base, &indices).unwrap(),
            );
        }
        GeneratedCover::new(set)
    }

    fn chain_cover() -> GeneratedCover {
        basic_cover(&["z", "o"], &[("z", &["o"])])
    }

    fn monoid_circ() -> CircBasicCover {
        let base = named_base(&["g", "h", "e"]);
        let rows = [
            ("g", "g", "h"),
            ("g", "h", "h"),
            ("h", "g", "h"),
            ("h", "h", "h"),
            ("g", "e", "g"),
            ("e", "g", "g"),
            ("h", "e", "h"),
            ("e", "h", "h"),
            ("e", "e", "e"),
        ];
        let op = DeltaOp::from_monoid(&base, &rows, "e").unwrap();
        let unit = Subset::singleton(&base, base.index_of("e").unwrap());
        CircBasicCover::new(GeneratedCover::new(AxiomSet::new(&base)), op, unit).unwrap()
    }

    fn list_idx(lbase: &Base, names: &[&str], atoms: &Base) -> usize {
        let items: Vec<usize> = names.iter().map(|n| atoms.index_of(n).unwrap()).collect();
        lbase.list_index(&items).unwrap().unwrap()
    }

    #[test]
    fn monoid_table_satisfies_the_operation_laws() {
        for report in monoid_circ().check_laws().unwrap() {
            assert!(report.passed, "{:?}", report);
        }
    }

    #[test]
    fn list_construction_lifts_axioms_and_commutes() {
        let source = basic_cover(&["a", "b", "c"], &[("a", &["b", "c"])]);
        let o = o_construction(&source, 2).unwrap();
        let lbase = o.circ().base();
        let atoms = source.base();
        assert_eq!(lbase.len(), 13);

        let la = list_idx(lbase, &["a"], atoms);
        let lifted = Subset::from_indices(
            lbase,
            &[list_idx(lbase, &["b"], atoms), list_idx(lbase, &["c"], atoms)],
        )
        .unwrap();
        assert!(o.circ().cover().covers(la, &lifted).unwrap());

        let ab = list_idx(lbase, &["a", "b"], atoms);
        let ba = list_idx(lbase, &["b", "a"], atoms);
        assert!(o
            .circ()
            .cover()
            .covers(ab, &Subset::singleton(lbase, ba))
            .unwrap());

        let (prod, overflow) = o
            .circ()
            .product(&Subset::singleton(lbase, la), o.circ().unit())
            .unwrap();
        assert!(!overflow);
        assert_eq!(prod, Subset::singleton(lbase, la));

        for report in o.circ().check_laws().unwrap() {
            assert!(report.passed, "{:?}", report);
        }
        assert!(o.counit_check().passed, "{:?}", o.counit_check());
    }

    #[test]
    fn list_construction_rejects_tiny_bounds() {
        let source = chain_cover();
        assert!(matches!(
            o_construction(&source, 1),
            Err(Error::TooSmall { min: 2, .. })
        ));
    }

    #[test]
    fn derivations_replay_against_the_axiom_set() {
        let source = basic_cover(&["a", "b", "c"], &[("a", &["b", "c"])]);
        let o = o_construction(&source, 2).unwrap();
        let axioms = o.circ().cover().axioms();
        let lbase = o.circ().base();
        let atoms = source.base();

        let la = list_idx(lbase, &["a"], atoms);
        let lb = list_idx(lbase, &["b"], atoms);
        let lc = list_idx(lbase, &["c"], atoms);
        let goal = Subset::from_indices(lbase, &[lb, lc]).unwrap();

        let leaf = bounded_derive(axioms, lb, &goal, 0).unwrap().unwrap();
        assert_eq!(leaf.rule(), &DerivationRule::Reflexivity);
        assert!(validate_derivation(axioms, &leaf, &goal).unwrap());

        assert!(bounded_derive(axioms, la, &goal, 0).unwrap().is_none());
        let tree = bounded_derive(axioms, la, &goal, 1).unwrap().unwrap();
        assert_eq!(tree.depth(), 1);
        assert_eq!(tree.children().len(), 2);
        assert!(validate_derivation(axioms, &tree, &goal).unwrap());

        let mut tampered = tree.clone();
        tampered.children[0].element = lc;
        tampered.children[1].element = lb;
        assert!(!validate_derivation(axioms, &tampered, &goal).unwrap());

        let json = tree.to_json(lbase, &goal);
        assert_eq!(json["rule"], "infinity");
        assert_eq!(json["goal"]["element"], "a");
        assert_eq!(json["axiom"], "user/0");
        assert_eq!(json["children"].as_array().unwrap().len(), 2);
        assert_eq!(json["children"][0]["rule"], "reflexivity");

        let trace = tree.render(lbase, &goal);
        assert!(trace.starts_with("a <| {b, c}\n"), "{trace}");
        assert!(trace.contains("by user/0"));
        assert!(trace.contains("by reflexivity"));
    }

    #[test]
    fn localized_products_become_derivable_only_after_the_quantale_step() {
        let source = basic_cover(&["a", "b", "c", "x"], &[("a", &["b", "c"])]);
        let o = o_construction(&source, 2).unwrap();
        let lbase = o.circ().base();
        let atoms = source.base();

        let ax = list_idx(lbase, &["a", "x"], atoms);
        let goal = Subset::from_indices(
            lbase,
            &[
                list_idx(lbase, &["b", "x"], atoms),
                list_idx(lbase, &["c", "x"], atoms),
            ],
        )
        .unwrap();

        assert!(bounded_derive(o.circ().cover().axioms(), ax, &goal, 6)
            .unwrap()
            .is_none());
        assert!(!o.circ().cover().covers(ax, &goal).unwrap());

        let q = q_construction(o.circ()).unwrap();
        assert!(q.counit_check().passed, "{:?}", q.counit_check());
        let axioms = q.convergent().cover().axioms();
        let tree = bounded_derive(axioms, ax, &goal, 3)
            .unwrap()
            .expect("localization makes the product covering derivable");
        assert!(tree.depth() <= 3);
        assert!(validate_derivation(axioms, &tree, &goal).unwrap());
        assert!(q.convergent().cover().covers(ax, &goal).unwrap());
    }

    #[test]
    fn quantale_step_keeps_the_monoid_cover_discrete() {
        let q = q_construction(&monoid_circ()).unwrap();
        let base = q.convergent().cover().base().clone();
        for mask in 0..1u64 << base.len() {
            let indices: Vec<usize> = (0..base.len()).filter(|i| mask & (1 << i) != 0).collect();
            let u = Subset::from_indices(&base, &indices).unwrap();
            assert_eq!(q.convergent().cover().saturate(&u).unwrap(), u);
        }
        assert!(q.counit_check().passed, "{:?}", q.counit_check());
    }

    #[test]
    fn frame_step_collapses_the_unit_to_the_top() {
        let q = q_construction(&monoid_circ()).unwrap();
        let l = l_construction(&q).unwrap();
        let base = l.formal().cover().base();
        let g = base.index_of("g").unwrap();
        let h = base.index_of("h").unwrap();
        let e = base.index_of("e").unwrap();

        let sat_h = l
            .formal()
            .cover()
            .saturate(&Subset::singleton(base, h))
            .unwrap();
        assert_eq!(sat_h, Subset::from_indices(base, &[g, h]).unwrap());

        assert!(l
            .formal()
            .cover()
            .sat_equal(&Subset::singleton(base, e), &Subset::full(base))
            .unwrap());
        assert!(l.counit_check().passed, "{:?}", l.counit_check());

        assert!(
            laws::check_frame_equality(l.formal().cover(), l.formal().op())
                .unwrap()
                .passed
        );
        assert!(
            !laws::check_frame_equality(q.convergent().cover(), q.convergent().op())
                .unwrap()
                .passed
        );
        for report in [
            laws::check_weakening(l.formal().cover(), l.formal().op(), laws::Level::Subsets)
                .unwrap(),
            laws::check_contraction(l.formal().cover(), l.formal().op(), laws::Level::Subsets)
                .unwrap(),
            laws::check_stability(l.formal().cover(), l.formal().op(), laws::Level::Subsets)
                .unwrap(),
        ] {
            assert!(report.passed, "{:?}", report);
        }
    }

    #[test]
    fn pipeline_steps_extend_saturation_monotonically() {
        let circ = monoid_circ();
        let q = q_construction(&circ).unwrap();
        let l = l_construction(&q).unwrap();
        let base = circ.base().clone();
        for mask in 0..1u64 << base.len() {
            let indices: Vec<usize> = (0..base.len()).filter(|i| mask & (1 << i) != 0).collect();
            let u = Subset::from_indices(&base, &indices).unwrap();
            let sat_in = circ.cover().saturate(&u).unwrap();
            let sat_q = q.convergent().cover().saturate(&u).unwrap();
            let sat_l = l.formal().cover().saturate(&u).unwrap();
            assert!(sat_in.is_subset(&sat_q).unwrap());
            assert!(sat_q.is_subset(&sat_l).unwrap());
        }

        let o = o_construction(&chain_cover(), 3).unwrap();
        let oq = q_construction(o.circ()).unwrap();
        let ol = l_construction(&oq).unwrap();
        let lbase = o.circ().base();
        assert_eq!(oq.convergent().cover().base(), lbase);
        assert_eq!(ol.formal().cover().base(), lbase);
        for i in 0..lbase.len() {
            let u = Subset::singleton(lbase, i);
            let sat_in = o.circ().cover().saturate(&u).unwrap();
            let sat_q = oq.convergent().cover().saturate(&u).unwrap();
            let sat_l = ol.formal().cover().saturate(&u).unwrap();
            assert!(sat_in.is_subset(&sat_q).unwrap());
            assert!(sat_q.is_subset(&sat_l).unwrap());
        }
    }

    #[test]
    fn maps_factor_through_each_step() {
        let chain = chain_cover();
        let base = chain.base().clone();
        let z = base.index_of("z").unwrap();
        let o_elem = base.index_of("o").unwrap();

        let t_op = DeltaOp::from_preorder(&base, &[("z", "o")]).unwrap();
        let t = CircBasicCover::new(
            basic_cover(&["z", "o"], &[("z", &["o"])]),
            t_op,
            Subset::singleton(&base, o_elem),
        )
        .unwrap();
        for report in t.check_laws().unwrap() {
            assert!(report.passed, "{:?}", report);
        }

        let r = Relation::identity(&base);
        let o = o_construction(&chain, 3).unwrap();
        let lifted = factor_through_o(&r, &t, &o).unwrap();
        assert!(lifted.check.passed, "{:?}", lifted.check);
        assert!(lifted.triangle);

        let lbase = o.circ().base();
        let zo = list_idx(lbase, &["z", "o"], &base);
        assert_eq!(
            lifted.map.rminus_elem(zo),
            &Subset::singleton(&base, z),
            "the preimage of a list is the product of its entry preimages"
        );

        let lz = list_idx(lbase, &["z"], &base);
        let probe = Relation::from_rminus(&base, lbase, |l| {
            if l == lz {
                Ok(Subset::singleton(&base, o_elem))
            } else {
                Ok(lifted.map.rminus_elem(l).clone())
            }
        })
        .unwrap();
        let composite = probe.compose(o.counit()).unwrap();
        assert!(
            !maps_equal(&composite, &r, t.cover()).unwrap(),
            "changing one generator image breaks the triangle"
        );

        let q = q_construction(o.circ()).unwrap();
        let id_lists = Relation::identity(lbase);
        let through_q = factor_through_q(&id_lists, q.convergent(), &q).unwrap();
        assert!(through_q.check.passed, "{:?}", through_q.check);
        assert!(through_q.triangle);

        let l = l_construction(&q).unwrap();
        let through_l = factor_through_l(&id_lists, l.formal(), &l).unwrap();
        assert!(through_l.check.passed, "{:?}", through_l.check);
        assert!(through_l.triangle);
    }

    #[test]
    fn list_and_subset_constructions_present_the_same_frame() {
        let chain = chain_cover();
        let atoms = chain.base();

        let o = o_construction(&chain, 3).unwrap();
        let q = q_construction(o.circ()).unwrap();
        let by_lists = l_construction(&q).unwrap();
        let lbase = o.circ().base();

        let pbase = Base::powerset(atoms).unwrap();
        let mut pax = AxiomSet::new(&pbase);
        for a in 0..atoms.len() {
            for (j, axiom) in chain.axioms().entries(a).iter().enumerate() {
                let mut cover = Subset::empty(&pbase);
                for u in axiom.cover.iter() {
                    cover.insert(pbase.powerset_index(1 << u).unwrap());
                }
                pax.push(
                    pbase.powerset_index(1 << a).unwrap(),
                    AxiomId::User(j),
                    cover,
                );
            }
        }
        let pcirc = CircBasicCover::new(
            GeneratedCover::new(pax),
            DeltaOp::union_monoid(&pbase).unwrap(),
            Subset::singleton(&pbase, pbase.powerset_index(0).unwrap()),
        )
        .unwrap();
        let by_subsets = l_construction(&q_construction(&pcirc).unwrap()).unwrap();

        let shadow = |l: usize| -> usize {
            let mut mask = 0u64;
            for item in lbase.list_items(l).unwrap() {
                mask |= 1 << item;
            }
            pbase.powerset_index(mask).unwrap()
        };

        // Compare the saturations of the generators: the empty list
        // and the singleton lists, whose shadows are the empty and
        // singleton subsets. Longer covering lists are where the list
        // side's length bound truncates derivations (reaching
        // `z.z.z` from `z` needs a length-four intermediate), so they
        // are exactly the pairs on which the two bounded models are
        // allowed to differ.
        for k in 0..lbase.len() {
            if lbase.list_items(k).unwrap().len() > 1 {
                continue;
            }
            for l in 0..lbase.len() {
                let via_lists = by_lists
                    .formal()
                    .cover()
                    .covers(l, &Subset::singleton(lbase, k))
                    .unwrap();
                let via_subsets = by_subsets
                    .formal()
                    .cover()
                    .covers(shadow(l), &Subset::singleton(&pbase, shadow(k)))
                    .unwrap();
                assert_eq!(
                    via_lists,
                    via_subsets,
                    "lists {} and {} disagree with their finite-subset shadows",
                    lbase.name(l),
                    lbase.name(k)
                );
            }
        }
    }
}
