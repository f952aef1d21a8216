//! Finite cover presentations of suplattices, quantales and locales.
//!
//! A base is a finite set of generators; an axiom set attaches covering
//! subsets to generators; saturation closes subsets under the axioms
//! and yields the lattice of formal opens. On top of that sit covers
//! generated to respect a product operation, cover-to-cover maps, the
//! tensor product of covers, and constructions that turn an arbitrary
//! cover into a convergent or formal one.
//!
//! ```
//! use covertop::{AxiomSet, Base, Cover, GeneratedCover, Subset};
//!
//! # fn main() -> covertop::Result<()> {
//! let base = Base::atomic(&["a", "b", "c"])?;
//! let axioms = AxiomSet::from_user(&base, &[("a", vec!["b", "c"])])?;
//! let cover = GeneratedCover::new(axioms);
//! let sat = cover.saturate(&Subset::from_names(cover.base(), &["b", "c"])?)?;
//! assert_eq!(sat.names(), ["a", "b", "c"]);
//! # Ok(())
//! # }
//! ```

pub mod axioms;
pub mod base;
pub mod caps;
pub mod delta;
pub mod error;
pub mod files;
pub mod fixtures;
pub mod free;
pub mod generation;
pub mod laws;
pub mod mask;
pub mod morphisms;
pub mod op;
pub mod presentations;
pub mod saturation;
pub mod subset;
pub mod tensor;

pub use axioms::{Axiom, AxiomId, AxiomSet, UnitRule};
pub use base::{Base, BaseKind};
pub use delta::DeltaOp;
pub use error::{Error, Result};
pub use files::{
    emit_presentation, emit_relation, file_from_parts, load_presentation, parse_goal,
    parse_presentation, parse_relation, parse_subset_arg, relation_to_file, render_lattice_dot,
    resolve_goal, resolve_relation, AxiomEntry, LoadedCover, LoadedPresentation, Mode,
    OperationSpec, PresentationFile, RelationFile,
};
pub use free::{
    bounded_derive, factor_through_l, factor_through_o, factor_through_q, is_circ_basic_map,
    l_construction, o_construction, q_construction, validate_derivation, CircBasicCover,
    DerivationRule, DerivationTree, Factorization, LConstruction, OConstruction, QConstruction,
};
pub use generation::{generate_convergent, generate_formal, ConvergentCover, FormalCover};
pub use laws::{law_suite, Law, LawReport, Level, MeetComparison, Witness};
pub use morphisms::{
    is_basic_cover_map, is_convergent_map, is_formal_map, is_unital_map, maps_equal, MapCheck,
    MapFailure, MapMethod, Relation,
};
pub use presentations::{
    as_bullet_formal, as_circ_formal, as_leq_formal, as_lhd_formal, dot_construction,
    formality_suite, induced_preorder, is_finitary, is_lhd_formal, is_unary, m_preorder,
    DotConstruction, DotCover, Presentation, PredicateCheck, Style,
};
pub use saturation::{sat_lattice, Cover, GeneratedCover, SatLattice};
pub use subset::Subset;
pub use tensor::{tensor_cover, tensor_map, TensorCover};
