mod common;

use common::suites;

const CASES: u32 = 1000;

#[test]
fn field_axioms() {
    suites::field_axioms(CASES).unwrap();
}

#[test]
fn parse_and_render_round_trip() {
    suites::parse_render(CASES).unwrap();
}

#[test]
fn bracket_antisymmetry_jacobi_and_matrix_agreement() {
    suites::bracket_laws(CASES).unwrap();
}

#[test]
fn inner_automorphisms_preserve_the_bracket() {
    suites::automorphism_laws(CASES).unwrap();
}

#[test]
fn classification_is_conjugation_invariant() {
    suites::classify_invariance(CASES).unwrap();
}

#[test]
fn radical_and_levi_structure() {
    suites::structure(CASES).unwrap();
}
