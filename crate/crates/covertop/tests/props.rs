//! Randomized law tests. Each property quantifies over presentations
//! drawn from a small strategy space; counterexamples shrink to the
//! smallest failing presentation.

use covertop::axioms::{AxiomId, AxiomSet};
use covertop::base::Base;
use covertop::files::{
    emit_presentation, parse_presentation, AxiomEntry, Mode, OperationSpec, PresentationFile,
};
use covertop::free::bounded_derive;
use covertop::morphisms::{is_basic_cover_map, MapMethod, Relation};
use covertop::saturation::{oracle_saturate, Cover, GeneratedCover};
use covertop::subset::Subset;
use proptest::prelude::*;

/// A base size plus axiom rows `(element, cover mask)`.
fn presentations() -> impl Strategy<Value = (usize, Vec<(usize, u64)>)> {
    (1usize..=6).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..n, 0..1u64 << n), 0..=2 * n),
        )
    })
}

fn build(n: usize, rows: &[(usize, u64)]) -> GeneratedCover {
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let base = Base::atomic(&names).unwrap();
    let mut axioms = AxiomSet::new(&base);
    let mut per_elem = vec![0usize; n];
    for &(elem, mask) in rows {
        axioms.push(elem, AxiomId::User(per_elem[elem]), subset(&base, mask));
        per_elem[elem] += 1;
    }
    GeneratedCover::new(axioms)
}

fn subset(base: &Base, mask: u64) -> Subset {
    let indices: Vec<usize> = (0..base.len()).filter(|i| mask & (1 << i) != 0).collect();
    Subset::from_indices(base, &indices).unwrap()
}

proptest! {
    #[test]
    fn saturation_is_a_closure_operator((n, rows) in presentations(), u in 0..64u64, v in 0..64u64) {
        let cover = build(n, &rows);
        let base = cover.base();
        let u = subset(base, u & ((1 << n) - 1));
        let v = subset(base, v & ((1 << n) - 1));
        let sat_u = cover.saturate(&u).unwrap();
        let sat_v = cover.saturate(&v).unwrap();

        prop_assert!(u.is_subset(&sat_u).unwrap(), "saturation must be expansive");
        if u.is_subset(&v).unwrap() {
            prop_assert!(sat_u.is_subset(&sat_v).unwrap(), "saturation must be monotone");
        }
        prop_assert_eq!(&cover.saturate(&sat_u).unwrap(), &sat_u, "saturation must be idempotent");

        let union_then = cover.saturate(&u.union(&v).unwrap()).unwrap();
        let saturated_then = cover.saturate(&sat_u.union(&sat_v).unwrap()).unwrap();
        prop_assert_eq!(union_then, saturated_then, "prior saturation must not change joins");
    }

    #[test]
    fn worklist_agrees_with_the_iteration_oracle((n, rows) in presentations(), u in 0..64u64) {
        let cover = build(n, &rows);
        let u = subset(cover.base(), u & ((1 << n) - 1));
        prop_assert_eq!(
            cover.saturate(&u).unwrap(),
            oracle_saturate(cover.axioms(), &u).unwrap()
        );
    }

    #[test]
    fn derivation_search_is_sound_and_complete_at_base_depth(
        (n, rows) in presentations(),
        elem in 0..6usize,
        goal in 0..64u64,
    ) {
        let cover = build(n, &rows);
        let elem = elem % n;
        let goal = subset(cover.base(), goal & ((1 << n) - 1));
        let covered = cover.covers(elem, &goal).unwrap();
        let tree = bounded_derive(cover.axioms(), elem, &goal, n + 1).unwrap();
        prop_assert_eq!(
            covered,
            tree.is_some(),
            "an element enters the saturation in at most one round per base element"
        );
        if let Some(tree) = tree {
            prop_assert!(covertop::free::validate_derivation(cover.axioms(), &tree, &goal).unwrap());
        }
    }

    #[test]
    fn identity_passes_both_map_checks((n, rows) in presentations()) {
        let cover = build(n, &rows);
        let identity = Relation::identity(cover.base());
        let axioms = is_basic_cover_map(&identity, &cover, &cover, MapMethod::Axioms).unwrap();
        let sweep = is_basic_cover_map(&identity, &cover, &cover, MapMethod::Exhaustive).unwrap();
        prop_assert!(axioms.passed);
        prop_assert!(sweep.passed);
    }

    #[test]
    fn presentation_files_round_trip(
        (n, rows) in presentations(),
        table in prop::collection::vec((0..6usize, 0..6usize, 0..64u64), 0..8),
        mode in 0..2usize,
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let base = Base::atomic(&names).unwrap();
        let axioms = rows
            .iter()
            .map(|&(elem, mask)| AxiomEntry {
                elem: names[elem].clone(),
                cover: subset(&base, mask).names(),
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        let table_rows: Vec<(String, String, Vec<String>)> = table
            .iter()
            .filter(|&&(a, b, _)| seen.insert((a % n, b % n)))
            .map(|&(a, b, mask)| {
                (
                    names[a % n].clone(),
                    names[b % n].clone(),
                    subset(&base, mask & ((1 << n) - 1)).names(),
                )
            })
            .collect();
        let file = PresentationFile {
            base: names,
            axioms,
            operation: if mode == 0 && table_rows.is_empty() {
                None
            } else {
                Some(OperationSpec::Table { rows: table_rows })
            },
            unit: None,
            mode: Mode::Basic,
        };
        let emitted = emit_presentation(&file);
        let reparsed = parse_presentation(&emitted).unwrap();
        prop_assert_eq!(&reparsed, &file);
        prop_assert_eq!(emit_presentation(&reparsed), emitted);
    }
}
