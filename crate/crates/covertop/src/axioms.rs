//! Axiom sets: for each base element, an ordered family of covering
//! subsets. These are the generators that the saturation engine closes
//! under, and the transformations in [`crate::generation`] only ever
//! append to them, so an element's original entries stay a prefix of
//! every derived set.

use crate::base::Base;
use crate::error::Result;
use crate::subset::Subset;

/// Where an axiom came from. User axioms carry their ordinal among the
/// entries declared for that element; schema-generated axioms carry the
/// source coordinates that instantiated them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomId {
    User(usize),
    /// `a` in `b∘c` is covered by `c∘b`.
    Commutativity { b: usize, c: usize },
    /// `a` in `(b∘c)∘d` is covered by `b∘(c∘d)`.
    Associativity { b: usize, c: usize, d: usize },
    /// Unit laws: expansion `a ◁ a∘I`, and collapse `x ◁ {a}` for
    /// `x` in `a∘I`.
    Unit(UnitRule),
    /// `a` in `b∘c` is covered by `D(b,j)∘c`, where `j` indexes the
    /// axiom list of `b` at the stage being localized.
    Locax { b: usize, j: usize, c: usize },
    /// `a` in `b∘c` is covered by `{c}`.
    Weakening { b: usize, c: usize },
    /// `a` is covered by `a∘a`.
    Contraction,
    /// Product axiom from the left factor's axiom at the given position.
    TensorLeft(usize),
    /// Product axiom from the right factor's axiom at the given position.
    TensorRight(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitRule {
    Expand,
    Collapse(usize),
}

impl AxiomId {
    pub fn provenance(&self) -> &'static str {
        match self {
            AxiomId::User(_) => "user",
            AxiomId::Commutativity { .. } => "commutativity",
            AxiomId::Associativity { .. } => "associativity",
            AxiomId::Unit(_) => "unit",
            AxiomId::Locax { .. } => "locax",
            AxiomId::Weakening { .. } => "weakening",
            AxiomId::Contraction => "contraction",
            AxiomId::TensorLeft(_) => "tensor_left",
            AxiomId::TensorRight(_) => "tensor_right",
        }
    }

    /// Stable textual form, with source coordinates rendered as element
    /// names of `base`.
    pub fn render(&self, base: &Base) -> String {
        match self {
            AxiomId::User(k) => format!("user/{k}"),
            AxiomId::Commutativity { b, c } => {
                format!("comm({},{})", base.name(*b), base.name(*c))
            }
            AxiomId::Associativity { b, c, d } => format!(
                "assoc({},{},{})",
                base.name(*b),
                base.name(*c),
                base.name(*d)
            ),
            AxiomId::Unit(UnitRule::Expand) => "unit/expand".to_string(),
            AxiomId::Unit(UnitRule::Collapse(a)) => {
                format!("unit/collapse({})", base.name(*a))
            }
            AxiomId::Locax { b, j, c } => {
                format!("locax({},{},{})", base.name(*b), j, base.name(*c))
            }
            AxiomId::Weakening { b, c } => {
                format!("weak({},{})", base.name(*b), base.name(*c))
            }
            AxiomId::Contraction => "contr".to_string(),
            AxiomId::TensorLeft(i) => format!("tensorL/{i}"),
            AxiomId::TensorRight(j) => format!("tensorR/{j}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Axiom {
    pub id: AxiomId,
    pub cover: Subset,
}

#[derive(Debug, Clone)]
pub struct AxiomSet {
    base: Base,
    entries: Vec<Vec<Axiom>>,
}

impl AxiomSet {
    pub fn new(base: &Base) -> AxiomSet {
        AxiomSet {
            entries: vec![Vec::new(); base.len()],
            base: base.clone(),
        }
    }

    /// Builds a user axiom set from `(element, cover)` pairs given by name.
    /// Ordinals follow declaration order per element.
    pub fn from_user<S: AsRef<str>>(base: &Base, entries: &[(S, Vec<S>)]) -> Result<AxiomSet> {
        let mut out = AxiomSet::new(base);
        for (elem, cover) in entries {
            let a = base.require(elem.as_ref())?;
            let cover = Subset::from_names(base, cover)?;
            let ord = out.entries[a]
                .iter()
                .filter(|ax| matches!(ax.id, AxiomId::User(_)))
                .count();
            out.push(a, AxiomId::User(ord), cover);
        }
        Ok(out)
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn push(&mut self, elem: usize, id: AxiomId, cover: Subset) {
        debug_assert_eq!(cover.base(), &self.base);
        debug_assert!(
            !self.entries[elem].iter().any(|ax| ax.id == id),
            "axiom ids must stay unique per element"
        );
        self.entries[elem].push(Axiom { id, cover });
    }

    /// Pushes unless an axiom with this id already sits at `elem`.
    /// The generation schemata derive an instance's cover from its id,
    /// so regenerating over a set that already contains some instances
    /// must skip them rather than duplicate them.
    pub fn push_unique(&mut self, elem: usize, id: AxiomId, cover: Subset) {
        if self.entries[elem].iter().any(|ax| ax.id == id) {
            return;
        }
        self.push(elem, id, cover);
    }

    pub fn entries(&self, elem: usize) -> &[Axiom] {
        &self.entries[elem]
    }

    pub fn total_len(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    /// All `(element, axiom)` pairs in canonical order.
    pub fn iter_all(&self) -> impl Iterator<Item = (usize, &Axiom)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(a, list)| list.iter().map(move |ax| (a, ax)))
    }
}
