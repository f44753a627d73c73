//! First-page totals against the closed forms, for every parity cell.

use eqhom::mapspace::{lens_specs, table_specs, Family, MapSpaceSpec};
use eqhom::series::{expand, table_closed_form};
use eqhom::specseq::{
    build_e1, default_p_min, degeneration_status, leray_dm_pairs, leray_verify,
    possible_differentials, total_poincare, wedge_support_check, Degeneration,
};

const T: usize = 40;

fn check(spec: &MapSpaceSpec) -> Result<(), String> {
    let page = build_e1(spec, default_p_min(spec, T)).map_err(|e| format!("{spec}: {e}"))?;
    let lhs = total_poincare(&page, T).map_err(|e| format!("{spec}: {e}"))?;
    let rhs = expand(&table_closed_form(spec).unwrap(), T).unwrap();
    if lhs != rhs {
        return Err(format!("{spec}: page gives {lhs}, closed form {rhs}"));
    }
    if !wedge_support_check(&page) {
        return Err(format!("{spec}: cell outside the wedge"));
    }
    if degeneration_status(&page) == Degeneration::Unknown {
        return Err(format!(
            "{spec}: undecided degeneration, e.g. {:?}",
            possible_differentials(&page).first()
        ));
    }
    Ok(())
}

#[test]
fn every_table_cell_matches() {
    let failures: Vec<String> = table_specs(9).iter().filter_map(|s| check(s).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_lens_case_matches() {
    let failures: Vec<String> = lens_specs(9, &[2, 3, 4, 6])
        .iter()
        .filter_map(|s| check(s).err())
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn order_two_lens_matches_even_and_odd_maps() {
    for big in (3..=9).step_by(2) {
        for m in (1..big).step_by(2) {
            for based in [false, true] {
                for (s, family) in [(2, Family::Even), (1, Family::Odd)] {
                    let lens = MapSpaceSpec::lens(m, big, 2, s, based).unwrap();
                    let other = MapSpaceSpec::new(family, m, big, based).unwrap();
                    let series = |spec: &MapSpaceSpec| {
                        total_poincare(&build_e1(spec, default_p_min(spec, T)).unwrap(), T).unwrap()
                    };
                    assert_eq!(series(&lens), series(&other), "{lens} vs {other}");
                }
            }
        }
    }
}

#[test]
fn closed_forms_are_nonnegative() {
    for spec in table_specs(12).iter().chain(&lens_specs(11, &[2, 3])) {
        let s = expand(&table_closed_form(spec).unwrap(), 60).unwrap();
        assert!(s.is_nonnegative(), "{spec}: {s}");
    }
}

#[test]
fn leray_pattern_holds_for_every_free_cell() {
    for spec in table_specs(9).into_iter().filter(|s| !s.based) {
        let fiber = table_closed_form(&spec.as_based()).unwrap();
        let total = table_closed_form(&spec).unwrap();
        let pairs = leray_dm_pairs(&spec).unwrap();
        assert_eq!(
            leray_verify(&fiber, spec.target_dim, &pairs, &total, T),
            Ok(true),
            "{spec}"
        );
    }
}
