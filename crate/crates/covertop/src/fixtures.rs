//! The bundled presentations used across the test suites and shipped
//! as JSON under `fixtures/` at the workspace root. The functions here
//! are the source of truth; a test keeps the files in sync (regenerate
//! with `COVERTOP_WRITE_FIXTURES=1 cargo test -p covertop fixtures`).

use crate::files::{AxiomEntry, Mode, OperationSpec, PresentationFile, RelationFile};

fn strs(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn axiom(elem: &str, cover: &[&str]) -> AxiomEntry {
    AxiomEntry {
        elem: elem.to_string(),
        cover: strs(cover),
    }
}

fn basic(base: &[&str], axioms: Vec<AxiomEntry>) -> PresentationFile {
    PresentationFile {
        base: strs(base),
        axioms,
        operation: None,
        unit: None,
        mode: Mode::Basic,
    }
}

/// Three elements, one axiom `a ◁ {b, c}`.
pub fn abc_basic() -> PresentationFile {
    basic(&["a", "b", "c"], vec![axiom("a", &["b", "c"])])
}

/// Two axioms on the same element, so saturation needs either branch.
pub fn regression_basic() -> PresentationFile {
    basic(
        &["a", "b", "c", "d"],
        vec![axiom("a", &["b", "c"]), axiom("a", &["d"])],
    )
}

/// No axioms at all: saturation is the identity, the lattice is the
/// full powerset.
pub fn discrete_basic() -> PresentationFile {
    basic(&["a", "b", "c"], Vec::new())
}

/// Two elements with `z ◁ {o}`.
pub fn chain_basic() -> PresentationFile {
    basic(&["z", "o"], vec![axiom("z", &["o"])])
}

/// The two-element chain `z ≤ o` as a formal cover; the operation is
/// the meet of down-sets and weakening regenerates `z ◁ {o}`.
pub fn chain_formal() -> PresentationFile {
    PresentationFile {
        base: strs(&["z", "o"]),
        axioms: Vec::new(),
        operation: Some(OperationSpec::Preorder {
            pairs: vec![("z".to_string(), "o".to_string())],
        }),
        unit: None,
        mode: Mode::Formal,
    }
}

/// A three-element join of two incomparable elements under a top:
/// `p ≤ t`, `q ≤ t`. Its saturation lattice has five points.
pub fn preorder_formal() -> PresentationFile {
    PresentationFile {
        base: strs(&["p", "q", "t"]),
        axioms: Vec::new(),
        operation: Some(OperationSpec::Preorder {
            pairs: vec![
                ("p".to_string(), "t".to_string()),
                ("q".to_string(), "t".to_string()),
            ],
        }),
        unit: None,
        mode: Mode::Formal,
    }
}

fn monoid_operation() -> OperationSpec {
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
    OperationSpec::Monoid {
        rows: rows
            .iter()
            .map(|(a, b, c)| (a.to_string(), b.to_string(), c.to_string()))
            .collect(),
        unit: "e".to_string(),
    }
}

/// A commutative three-element monoid (`g·g = h`, `h` absorbing, `e`
/// the unit) generated as a convergent cover. Its saturation is the
/// identity, and weakening fails on it with witness `(g, g)`.
pub fn monoid_convergent() -> PresentationFile {
    PresentationFile {
        base: strs(&["g", "h", "e"]),
        axioms: Vec::new(),
        operation: Some(monoid_operation()),
        unit: Some(strs(&["e"])),
        mode: Mode::Convergent,
    }
}

/// The same monoid generated as a formal cover: contraction makes
/// `g ◁ {h}` derivable and the unit collapses to the whole base.
pub fn monoid_formal() -> PresentationFile {
    PresentationFile {
        base: strs(&["g", "h", "e"]),
        axioms: Vec::new(),
        operation: Some(monoid_operation()),
        unit: Some(strs(&["e"])),
        mode: Mode::Formal,
    }
}

/// Left projection (`u·v = u`) with the `abc` axiom: associative but
/// neither commutative nor unital, so localization does real work.
pub fn projection_convergent() -> PresentationFile {
    let names = ["a", "b", "c"];
    let rows = names
        .iter()
        .flat_map(|u| {
            names
                .iter()
                .map(move |v| (u.to_string(), v.to_string(), vec![u.to_string()]))
        })
        .collect();
    PresentationFile {
        base: strs(&names),
        axioms: vec![axiom("a", &["b", "c"])],
        operation: Some(OperationSpec::Table { rows }),
        unit: None,
        mode: Mode::Convergent,
    }
}

/// The identity relation on the chain base, in the relation file
/// format.
pub fn chain_identity_relation() -> RelationFile {
    RelationFile {
        source: "chain".to_string(),
        target: "chain".to_string(),
        pairs: vec![
            ("z".to_string(), "z".to_string()),
            ("o".to_string(), "o".to_string()),
        ],
    }
}

/// Every bundled presentation, keyed by its file stem under
/// `fixtures/`.
pub fn all() -> Vec<(&'static str, PresentationFile)> {
    vec![
        ("abc_basic", abc_basic()),
        ("regression_basic", regression_basic()),
        ("discrete_basic", discrete_basic()),
        ("chain_basic", chain_basic()),
        ("chain_formal", chain_formal()),
        ("preorder_formal", preorder_formal()),
        ("monoid_convergent", monoid_convergent()),
        ("monoid_formal", monoid_formal()),
        ("projection_convergent", projection_convergent()),
    ]
}
