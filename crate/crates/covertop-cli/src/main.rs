//! Command-line frontend for the cover-presentation engine. Reads
//! presentations and relations as JSON, prints JSON reports with a
//! stable field order, and reserves nonzero exits for operational
//! problems: 2 for bad input, 3 for a size cap, 4 for an internal
//! invariant breach. A law that fails to hold is a result, not an
//! error.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covertop::files::{
    emit_presentation, file_from_parts, load_presentation, parse_presentation, parse_relation,
    parse_subset_arg, render_lattice_dot, resolve_goal, resolve_relation, LoadedCover,
    LoadedPresentation, Mode, OperationSpec, PresentationFile,
};
use covertop::free::{bounded_derive, o_construction, q_construction, CircBasicCover};
use covertop::laws::{closure_law_suite, law_suite, LawReport};
use covertop::morphisms::{
    is_basic_cover_map, is_convergent_map, is_formal_map, is_unital_map, maps_equal, MapCheck,
    MapMethod, Relation,
};
use covertop::op::implication;
use covertop::presentations::{as_bullet_formal, as_leq_formal, as_lhd_formal, dot_construction};
use covertop::saturation::{sat_lattice, Cover, GeneratedCover};
use covertop::tensor::tensor_cover;
use covertop::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "covertop", version, about = "Work with finite cover presentations")]
struct Cli {
    /// Upper bound on worker threads for independent sweeps
    /// (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<NonZeroUsize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the saturation of a subset, as base elements separated by
    /// spaces.
    Saturate {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated element names; empty for the empty subset.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// Count the saturated subsets, optionally writing a Hasse diagram
    /// in DOT format.
    Lattice {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check every law that applies to the presentation and report
    /// each verdict with a witness on failure.
    Laws {
        #[arg(long)]
        input: PathBuf,
    },
    /// Validate a relation between two presentations as a cover map.
    Checkmap {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        /// Relation file with `pairs` resolved against the two bases.
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, value_enum, default_value_t = MapLevel::Basic)]
        level: MapLevel,
    },
    /// Tensor two presentations and write the product presentation.
    Tensor {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-present a cover in another operation style and report its
    /// formality laws.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
    },
    /// Apply a free-construction stage and print the resulting
    /// presentation.
    Free {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        apply: Stage,
        /// Longest list tracked by the list stage.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Search for a derivation of a covering goal and print the tree.
    Derive {
        #[arg(long)]
        input: PathBuf,
        /// Goal in the form `element :: member,member`; list elements
        /// use dots (`a.b`) and the empty list is `[]`.
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Compute the implication subset `left -> right`.
    Implication {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MapLevel {
    Basic,
    Convergent,
    Unital,
    Formal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Lhd,
    Leq,
    Bullet,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    #[value(name = "O")]
    Lists,
    #[value(name = "Q")]
    Quantale,
    #[value(name = "L")]
    Locale,
}

enum Failure {
    Engine(Error),
    Io(PathBuf, std::io::Error),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Engine(Error::SizeCap { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Engine(e) => e.fmt(f),
            Failure::Io(path, e) => write!(f, "{}: {e}", path.display()),
            Failure::Input(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(failure)) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            eprintln!("internal error: {msg}");
            ExitCode::from(4)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn load_file(path: &Path) -> Result<(PresentationFile, LoadedPresentation), Failure> {
    let file = parse_presentation(&read(path)?)?;
    let loaded = load_presentation(&file)?;
    Ok((file, loaded))
}

/// Writes to stdout, treating a closed pipe as a normal end of output
/// rather than an error.
fn emit(text: &str) -> Result<(), Failure> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    emit(&text)
}

/// Law verdicts keyed by law name; key order is alphabetical, so the
/// report is byte-stable.
fn law_map(reports: &[LawReport]) -> BTreeMap<String, serde_json::Value> {
    reports
        .iter()
        .map(|r| {
            let mut entry = serde_json::Map::new();
            entry.insert("passed".to_string(), r.passed.into());
            if let Some(witness) = &r.witness {
                entry.insert(
                    "witness".to_string(),
                    serde_json::to_value(witness).expect("witnesses serialize"),
                );
            }
            (r.law.as_str().to_string(), entry.into())
        })
        .collect()
}

fn thread_budget(cli_threads: Option<NonZeroUsize>) -> usize {
    cli_threads
        .or_else(|| std::thread::available_parallelism().ok())
        .map(NonZeroUsize::get)
        .unwrap_or(1)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let threads = thread_budget(cli.threads);
    match cli.command {
        Command::Saturate { input, subset } => {
            let (_, loaded) = load_file(&input)?;
            let u = parse_subset_arg(&loaded.base, &subset)?;
            let saturated = loaded.cover.generated().saturate(&u)?;
            emit(&format!("{}\n", saturated.names().join(" ")))?;
        }
        Command::Lattice { input, dot } => {
            let (_, loaded) = load_file(&input)?;
            let lattice = sat_lattice(loaded.cover.generated())?;
            if let Some(out) = dot {
                write(&out, &render_lattice_dot(&lattice)?)?;
            }
            emit(&format!("{} points\n", lattice.len()))?;
        }
        Command::Laws { input } => {
            let (_, loaded) = load_file(&input)?;
            let cover = loaded.cover.generated();
            let mut reports = if threads > 1 && loaded.op.is_some() {
                let op = loaded.op.as_ref().unwrap();
                let (closure, operation) = std::thread::scope(|s| {
                    let closure = s.spawn(|| closure_law_suite(cover));
                    let operation = s.spawn(|| law_suite(cover, op, loaded.unit.as_ref()));
                    (
                        closure.join().expect("closure sweep"),
                        operation.join().expect("operation sweep"),
                    )
                });
                let mut all = closure?;
                all.extend(operation?);
                all
            } else {
                let mut all = closure_law_suite(cover)?;
                if let Some(op) = loaded.op.as_ref() {
                    all.extend(law_suite(cover, op, loaded.unit.as_ref())?);
                }
                all
            };
            reports.sort_by_key(|r| r.law.as_str());
            print_json(&law_map(&reports))?;
        }
        Command::Checkmap {
            source,
            target,
            relation,
            level,
        } => {
            let (_, src) = load_file(&source)?;
            let (_, tgt) = load_file(&target)?;
            let file = parse_relation(&read(&relation)?)?;
            let r = resolve_relation(&file, &src.base, &tgt.base)?;
            let check = run_checkmap(&r, &src, &tgt, level)?;
            print_json(&check)?;
        }
        Command::Tensor { left, right, out } => {
            let (_, lhs) = load_file(&left)?;
            let (_, rhs) = load_file(&right)?;
            let tensor = tensor_cover(lhs.cover.generated(), rhs.cover.generated())?;
            let file = file_from_parts(
                tensor.cover().base(),
                tensor.cover().axioms(),
                None,
                None,
                Mode::Basic,
            );
            write(&out, &emit_presentation(&file))?;
            #[derive(Serialize)]
            struct TensorReport {
                base: usize,
                axioms: usize,
                out: String,
            }
            print_json(&TensorReport {
                base: tensor.cover().base().len(),
                axioms: tensor.cover().axioms().total_len(),
                out: out.display().to_string(),
            })?;
        }
        Command::Convert { input, to } => run_convert(&input, to)?,
        Command::Free {
            input,
            apply,
            max_len,
        } => run_free(&input, apply, max_len)?,
        Command::Derive { input, goal, depth } => {
            let (_, loaded) = load_file(&input)?;
            let (element, cover) = resolve_goal(&loaded.base, &goal)?;
            let axioms = loaded.cover.generated().axioms();
            let tree = bounded_derive(axioms, element, &cover, depth)?;
            #[derive(Serialize)]
            struct DeriveReport {
                goal: String,
                depth: usize,
                found: bool,
                #[serde(skip_serializing_if = "Option::is_none")]
                tree: Option<serde_json::Value>,
                #[serde(skip_serializing_if = "Option::is_none")]
                trace: Option<String>,
            }
            print_json(&DeriveReport {
                goal,
                depth,
                found: tree.is_some(),
                tree: tree.as_ref().map(|t| t.to_json(&loaded.base, &cover)),
                trace: tree.as_ref().map(|t| t.render(&loaded.base, &cover)),
            })?;
        }
        Command::Implication { input, left, right } => {
            let (_, loaded) = load_file(&input)?;
            let op = loaded.op.as_ref().ok_or(Error::MissingOperation("implication"))?;
            let u = parse_subset_arg(&loaded.base, &left)?;
            let v = parse_subset_arg(&loaded.base, &right)?;
            let result = implication(loaded.cover.generated(), op, &u, &v)?;
            #[derive(Serialize)]
            struct ImplicationReport {
                left: Vec<String>,
                right: Vec<String>,
                implication: Vec<String>,
            }
            print_json(&ImplicationReport {
                left: u.names(),
                right: v.names(),
                implication: result.names(),
            })?;
        }
    }
    Ok(())
}

fn run_checkmap(
    r: &Relation,
    src: &LoadedPresentation,
    tgt: &LoadedPresentation,
    level: MapLevel,
) -> Result<MapCheck, Failure> {
    match level {
        MapLevel::Basic => Ok(is_basic_cover_map(
            r,
            src.cover.generated(),
            tgt.cover.generated(),
            MapMethod::Axioms,
        )?),
        MapLevel::Convergent | MapLevel::Unital => match (&src.cover, &tgt.cover) {
            (LoadedCover::Convergent(sc), LoadedCover::Convergent(tc)) => Ok(match level {
                MapLevel::Unital => is_unital_map(r, sc, tc)?,
                _ => is_convergent_map(r, sc, tc)?,
            }),
            // In a formal presentation the unit is the whole base, so
            // unit preservation coincides with totality and the
            // structured levels collapse into the formal check.
            (LoadedCover::Formal(sf), LoadedCover::Formal(tf)) => Ok(is_formal_map(r, sf, tf)?),
            _ => Err(Failure::Input(
                "convergent and unital checks need both presentations in convergent or formal mode"
                    .to_string(),
            )),
        },
        MapLevel::Formal => {
            let (LoadedCover::Formal(sf), LoadedCover::Formal(tf)) = (&src.cover, &tgt.cover)
            else {
                return Err(Failure::Input(
                    "formal checks need both presentations in formal mode".to_string(),
                ));
            };
            Ok(is_formal_map(r, sf, tf)?)
        }
    }
}

fn run_convert(input: &Path, to: ConvertTarget) -> Result<(), Failure> {
    let (file, loaded) = load_file(input)?;
    #[derive(Serialize)]
    struct ConvertReport {
        style: String,
        laws: BTreeMap<String, serde_json::Value>,
    }
    let presentation = match to {
        ConvertTarget::Lhd => as_lhd_formal(loaded.cover.generated())?,
        ConvertTarget::Leq => {
            let Some(OperationSpec::Preorder { pairs }) = &file.operation else {
                return Err(Failure::Input(
                    "leq conversion needs a preorder operation in the input".to_string(),
                ));
            };
            as_leq_formal(&loaded.seed, pairs)?
        }
        ConvertTarget::Bullet => {
            let Some(OperationSpec::Monoid { rows, .. }) = &file.operation else {
                return Err(Failure::Input(
                    "bullet conversion needs a monoid operation in the input".to_string(),
                ));
            };
            let triple_rows: Vec<(&str, &str, &str)> = rows
                .iter()
                .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
                .collect();
            as_bullet_formal(&loaded.seed, &triple_rows)?
        }
        ConvertTarget::Dot => {
            let cover = loaded.cover.generated();
            let dot = dot_construction(cover)?;
            let round = dot.embed.compose(&dot.project)?;
            let dot_base = dot.project.source().clone();
            let back = dot.project.compose(&dot.embed)?;
            #[derive(Serialize)]
            struct DotReport {
                style: String,
                base: usize,
                embed_then_project_is_identity: bool,
                project_then_embed_is_identity: bool,
            }
            print_json(&DotReport {
                style: "dot".to_string(),
                base: dot_base.len(),
                embed_then_project_is_identity: maps_equal(
                    &round,
                    &Relation::identity(&loaded.base),
                    cover,
                )?,
                project_then_embed_is_identity: maps_equal(
                    &back,
                    &Relation::identity(&dot_base),
                    dot.presentation.cover(),
                )?,
            })?;
            return Ok(());
        }
    };
    print_json(&ConvertReport {
        style: presentation.style().as_str().to_string(),
        laws: law_map(&presentation.formality()?),
    })?;
    Ok(())
}

fn run_free(input: &Path, apply: Stage, max_len: usize) -> Result<(), Failure> {
    let (file, loaded) = load_file(input)?;
    let out = match apply {
        Stage::Lists => {
            let o = o_construction(loaded.cover.generated(), max_len)?;
            file_from_parts(
                o.circ().base(),
                o.circ().cover().axioms(),
                Some(o.circ().op()),
                Some(o.circ().unit()),
                Mode::Basic,
            )
        }
        Stage::Quantale => {
            let op = loaded
                .op
                .clone()
                .ok_or(Error::MissingOperation("the quantale stage"))?;
            let unit = loaded.unit.clone().ok_or_else(|| {
                Failure::Input("the quantale stage needs a unit subset".to_string())
            })?;
            let circ = CircBasicCover::new(
                GeneratedCover::new(loaded.seed.clone()),
                op,
                unit,
            )?;
            q_construction(&circ)?;
            PresentationFile {
                mode: Mode::Convergent,
                ..file
            }
        }
        Stage::Locale => {
            if loaded.op.is_none() {
                return Err(Error::MissingOperation("the locale stage").into());
            }
            PresentationFile {
                mode: Mode::Formal,
                ..file
            }
        }
    };
    load_presentation(&out)?;
    emit(&emit_presentation(&out))?;
    Ok(())
}
