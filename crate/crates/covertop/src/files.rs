//! The on-disk presentation and relation formats, plus the small
//! argument grammars the command-line surface shares with the fuzz
//! targets. Everything here is JSON with a fixed field order, so
//! identical inputs always serialize to identical bytes.
//!
//! Round trips are defined at the file level: emitting a presentation
//! and parsing it back yields an equal [`PresentationFile`], and the
//! covers loaded from the two agree on every saturation. Base flavor
//! is not preserved (a list base re-parses as an atomic base with the
//! same names), which is why equality of the files, not of the
//! [`Base`] values, is the contract.

use serde::{Deserialize, Serialize};

use crate::axioms::{AxiomId, AxiomSet};
use crate::base::Base;
use crate::delta::DeltaOp;
use crate::error::{Error, Result};
use crate::generation::{generate_convergent, generate_formal, ConvergentCover, FormalCover};
use crate::morphisms::Relation;
use crate::saturation::{GeneratedCover, SatLattice};
use crate::subset::Subset;

/// How a presentation file's cover is to be generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Basic,
    Convergent,
    Formal,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Basic => "basic",
            Mode::Convergent => "convergent",
            Mode::Formal => "formal",
        }
    }
}

/// One axiom row: the covered element and its cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AxiomEntry {
    pub elem: String,
    pub cover: Vec<String>,
}

/// The operation payload of a presentation file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperationSpec {
    /// Explicit `(left, right, product)` rows; pairs without a row
    /// stay undefined, so partial operations round-trip.
    Table { rows: Vec<(String, String, Vec<String>)> },
    /// `a <= b` pairs of a preorder; the operation becomes the meet of
    /// principal down-sets.
    Preorder { pairs: Vec<(String, String)> },
    /// A total `(a, b, a*b)` element table with a two-sided unit.
    Monoid {
        rows: Vec<(String, String, String)>,
        unit: String,
    },
}

/// The JSON presentation format: a base, generating axioms, an
/// optional operation with optional unit subset, and the generation
/// mode. References are validated against the base when loading, not
/// when parsing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub base: Vec<String>,
    #[serde(default)]
    pub axioms: Vec<AxiomEntry>,
    #[serde(default)]
    pub operation: Option<OperationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    pub mode: Mode,
}

/// The JSON relation format. `source` and `target` are free-form
/// labels recorded for the reader; the pairs are resolved against
/// whichever bases the caller supplies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub source: String,
    pub target: String,
    pub pairs: Vec<(String, String)>,
}

pub fn parse_presentation(input: &str) -> Result<PresentationFile> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_relation(input: &str) -> Result<RelationFile> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn emit_presentation(file: &PresentationFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("presentation files always serialize");
    out.push('\n');
    out
}

pub fn emit_relation(file: &RelationFile) -> String {
    let mut out = serde_json::to_string_pretty(file).expect("relation files always serialize");
    out.push('\n');
    out
}

/// The generated cover a presentation file denotes, keeping whichever
/// wrapper carries the mode's extra structure.
pub enum LoadedCover {
    Basic(GeneratedCover),
    Convergent(ConvergentCover),
    Formal(FormalCover),
}

impl LoadedCover {
    /// The underlying generated cover, whatever the mode.
    pub fn generated(&self) -> &GeneratedCover {
        match self {
            LoadedCover::Basic(c) => c,
            LoadedCover::Convergent(c) => c.cover(),
            LoadedCover::Formal(c) => c.cover(),
        }
    }
}

/// A presentation file resolved against its own base: the engine
/// objects plus the seed data they were generated from.
pub struct LoadedPresentation {
    pub base: Base,
    pub seed: AxiomSet,
    pub op: Option<DeltaOp>,
    pub unit: Option<Subset>,
    pub mode: Mode,
    pub cover: LoadedCover,
}

/// Resolves every reference in the file and generates its cover.
/// Convergent and formal modes require an operation; everything else
/// is optional.
pub fn load_presentation(file: &PresentationFile) -> Result<LoadedPresentation> {
    let base = Base::atomic(&file.base)?;

    let mut seed = AxiomSet::new(&base);
    let mut per_elem = vec![0usize; base.len()];
    for entry in &file.axioms {
        let elem = base.require(&entry.elem)?;
        let cover = Subset::from_names(&base, &entry.cover)?;
        seed.push(elem, AxiomId::User(per_elem[elem]), cover);
        per_elem[elem] += 1;
    }

    let op = match &file.operation {
        None => None,
        Some(OperationSpec::Table { rows }) => Some(DeltaOp::from_partial_table(&base, rows)?),
        Some(OperationSpec::Preorder { pairs }) => Some(DeltaOp::from_preorder(&base, pairs)?),
        Some(OperationSpec::Monoid { rows, unit }) => {
            let triples: Vec<(&str, &str, &str)> = rows
                .iter()
                .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
                .collect();
            Some(DeltaOp::from_monoid(&base, &triples, unit)?)
        }
    };

    let unit = match &file.unit {
        Some(names) => Some(Subset::from_names(&base, names)?),
        None => None,
    };

    let cover = match file.mode {
        Mode::Basic => LoadedCover::Basic(GeneratedCover::new(seed.clone())),
        Mode::Convergent => {
            let op = op.as_ref().ok_or(Error::MissingOperation("convergent"))?;
            LoadedCover::Convergent(generate_convergent(&seed, op, unit.as_ref())?)
        }
        Mode::Formal => {
            let op = op.as_ref().ok_or(Error::MissingOperation("formal"))?;
            LoadedCover::Formal(generate_formal(&seed, op)?)
        }
    };

    Ok(LoadedPresentation {
        base,
        seed,
        op,
        unit,
        mode: file.mode,
        cover,
    })
}

/// Writes engine data back into the file format. Operations are
/// emitted as explicit tables (defined rows only, in row-major order),
/// axioms in the set's element-then-position order, subsets in element
/// order — all deterministic, so emission is byte-stable.
pub fn file_from_parts(
    base: &Base,
    axioms: &AxiomSet,
    op: Option<&DeltaOp>,
    unit: Option<&Subset>,
    mode: Mode,
) -> PresentationFile {
    let names: Vec<String> = (0..base.len()).map(|i| base.name(i).to_string()).collect();
    let entries = axioms
        .iter_all()
        .map(|(elem, axiom)| AxiomEntry {
            elem: base.name(elem).to_string(),
            cover: axiom.cover.names(),
        })
        .collect();
    let operation = op.map(|op| OperationSpec::Table {
        rows: op
            .pairs()
            .filter_map(|(a, b, prod)| {
                prod.map(|p| (base.name(a).to_string(), base.name(b).to_string(), p.names()))
            })
            .collect(),
    });
    PresentationFile {
        base: names,
        axioms: entries,
        operation,
        unit: unit.map(Subset::names),
        mode,
    }
}

/// Resolves a relation file's pairs against explicit source and target
/// bases.
pub fn resolve_relation(file: &RelationFile, source: &Base, target: &Base) -> Result<Relation> {
    Relation::from_pairs(source, target, &file.pairs)
}

/// Builds the file form of a relation under the given labels.
pub fn relation_to_file(r: &Relation, source_label: &str, target_label: &str) -> RelationFile {
    let mut pairs = Vec::new();
    for b in 0..r.target().len() {
        for a in r.rminus_elem(b).iter() {
            pairs.push((
                r.source().name(a).to_string(),
                r.target().name(b).to_string(),
            ));
        }
    }
    RelationFile {
        source: source_label.to_string(),
        target: target_label.to_string(),
        pairs,
    }
}

fn parse_name_list(input: &str) -> Result<Vec<String>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|name| {
            let name = name.trim();
            if name.is_empty() {
                Err(Error::Parse(format!("empty name in list `{input}`")))
            } else {
                Ok(name.to_string())
            }
        })
        .collect()
}

/// Parses the goal grammar `element :: member,member,…`. The element
/// is a single base name (list elements are named with dots, like
/// `a.b`, and the empty list is `[]`), and the cover may be empty.
/// Resolution against a base is the caller's job.
pub fn parse_goal(input: &str) -> Result<(String, Vec<String>)> {
    let Some((lhs, rhs)) = input.split_once("::") else {
        return Err(Error::Parse(format!(
            "a goal needs the form `element :: cover`, got `{input}`"
        )));
    };
    let elem = lhs.trim();
    if elem.is_empty() {
        return Err(Error::Parse(format!("missing element before `::` in `{input}`")));
    }
    Ok((elem.to_string(), parse_name_list(rhs)?))
}

/// Parses and resolves a goal in one step.
pub fn resolve_goal(base: &Base, input: &str) -> Result<(usize, Subset)> {
    let (elem, cover) = parse_goal(input)?;
    Ok((base.require(&elem)?, Subset::from_names(base, &cover)?))
}

/// Parses a comma-separated subset argument against a base. The empty
/// string is the empty subset.
pub fn parse_subset_arg(base: &Base, input: &str) -> Result<Subset> {
    Subset::from_names(base, &parse_name_list(input)?)
}

fn point_mask(p: &Subset) -> u64 {
    p.iter().fold(0u64, |mask, i| mask | 1 << i)
}

/// Renders a saturation lattice as a DOT digraph: one node per point,
/// named by the hex value of its membership mask (stable across runs),
/// labeled with its elements; one edge per covering pair of the
/// inclusion order, drawn bottom-up.
pub fn render_lattice_dot(lattice: &SatLattice) -> Result<String> {
    let mut out = String::from("digraph sat_lattice {\n  rankdir=BT;\n");
    for p in lattice.points() {
        out.push_str(&format!(
            "  n{:x} [label=\"{{{}}}\"];\n",
            point_mask(p),
            p.names().join(",")
        ));
    }
    for (i, j) in lattice.hasse_edges()? {
        out.push_str(&format!(
            "  n{:x} -> n{:x};\n",
            point_mask(&lattice.points()[i]),
            point_mask(&lattice.points()[j])
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
