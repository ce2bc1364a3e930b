//! Library answers against the graded linear-algebra oracle on fixtures.

mod common;

use acm_core::deform::syzygies;
use acm_core::gallery::{fixture, fixture_ideal, Fixture, FIXTURE_IDS};
use acm_core::hilbert::hilbert_function;
use acm_core::polyring::{Field, Polynomial};
use common::props::FP;

fn curve_ids() -> Vec<&'static str> {
    FIXTURE_IDS
        .iter()
        .copied()
        .filter(|id| matches!(fixture(id, FP), Ok(Fixture::Curve(_))))
        .collect()
}

#[test]
fn hilbert_functions_of_fixtures() {
    for field in [Field::Rational, FP] {
        for id in curve_ids() {
            let i = fixture_ideal(id, field).unwrap();
            let n = i.ring().nvars();
            for d in 0..=5 {
                assert_eq!(
                    hilbert_function(&i, d).unwrap(),
                    common::hf(field, n, i.generators(), d),
                    "{id} degree {d} over {field}"
                );
            }
        }
    }
}

#[test]
fn groebner_elements_are_members() {
    for id in curve_ids() {
        let i = fixture_ideal(id, FP).unwrap();
        let n = i.ring().nvars();
        for g in i.groebner_basis().generators() {
            assert!(common::member(FP, n, i.generators(), g), "{id}: {g}");
        }
        for g in i.minimal_generators().unwrap() {
            assert!(common::member(FP, n, i.generators(), &g), "{id}: {g}");
        }
    }
}

fn check_syzygies(id: &str, gens: &[Polynomial]) {
    let n = gens[0].ring().nvars();
    let s = syzygies(gens).unwrap();
    assert!(s.annihilates(), "{id}");
    let shifts: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let top = s.degrees.iter().copied().max().unwrap_or(0) + 1;
    for d in 0..=top {
        let kernel = common::syzygy_kernel_dim(FP, n, gens, d);
        assert_eq!(
            common::module_dim(FP, n, &shifts, &s.rows, d),
            kernel,
            "{id}: generation in degree {d}"
        );
        let lower: Vec<_> = s
            .rows
            .iter()
            .zip(&s.degrees)
            .filter(|(_, &e)| e < d)
            .map(|(r, _)| r.clone())
            .collect();
        let minimal = kernel - common::module_dim(FP, n, &shifts, &lower, d);
        let count = s.degrees.iter().filter(|&&e| e == d).count();
        assert_eq!(count, minimal, "{id}: minimal syzygies in degree {d}");
    }
}

#[test]
fn syzygies_of_fixtures() {
    for id in [
        "rn3",
        "rn4",
        "l4",
        "lines2",
        "type2",
        "type3",
        "type4",
        "lemma38:2",
        "p3quartic",
    ] {
        let i = fixture_ideal(id, FP).unwrap();
        check_syzygies(id, &i.minimal_generators().unwrap());
    }
}

#[test]
fn rational_normal_quartic_syzygy_degrees() {
    let i = fixture_ideal("rn4", Field::Rational).unwrap();
    let s = syzygies(&i.minimal_generators().unwrap()).unwrap();
    assert_eq!(s.degree_counts(), [(3, 8)]);
}
