//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! (run with `--nocapture` to see them) and fails when its criterion fails.

use flagmap::verify::run_criterion;

fn check(id: u8) {
    let result = run_criterion(id).expect("criterion exists");
    println!("{result}");
    assert!(result.passed, "{result}");
}

#[test]
fn criterion_01_reflection_quotients() {
    check(1);
}

#[test]
fn criterion_02_klein_bottle_quotient() {
    check(2);
}

#[test]
fn criterion_03_glide_quotient_series() {
    check(3);
}

#[test]
fn criterion_04_nn2_quotients() {
    check(4);
}

#[test]
fn criterion_05_symmetric_family_group_level() {
    check(5);
}

#[test]
fn criterion_06_flag_and_group_level_agree() {
    check(6);
}

#[test]
fn criterion_07_hypermap_family() {
    check(7);
}

#[test]
fn criterion_08_medial_maps() {
    check(8);
}

#[test]
fn criterion_09_census_laws() {
    check(9);
}

#[test]
fn criterion_10_round_trips() {
    check(10);
}
