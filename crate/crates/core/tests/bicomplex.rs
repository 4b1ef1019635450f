//! Filtration subspaces, page tables and the parity-graded total complex.

use std::sync::Arc;

use hochhodge::bicomplex::{
    filtration_subspace, first_page_filtration, first_page_hodge, second_filtration_page,
    total_z2_cohomology,
};
use hochhodge::cochain::Cochain;
use hochhodge::hochschild::{cohomology_dims, d, hodge_cohomology_dims};
use hochhodge::{corpus, Rat, RatAlgebra};

fn arc(name: &str) -> Arc<RatAlgebra> {
    Arc::new(corpus::by_name::<Rat>(name).unwrap())
}

#[test]
fn filtration_steps_on_dual_numbers_at_arity_two() {
    let a = arc("dual-numbers");
    // The layers grow from nothing through the first piece to everything.
    assert_eq!(filtration_subspace(&a, 2, 0).unwrap().rows(), 0);
    assert_eq!(filtration_subspace(&a, 2, 1).unwrap().rows(), 6);
    assert_eq!(filtration_subspace(&a, 2, 2).unwrap().rows(), 8);
    // Beyond the arity the filtration is exhausted.
    assert_eq!(filtration_subspace(&a, 2, 5).unwrap().rows(), 8);
    // Arity zero is a single layer.
    assert_eq!(filtration_subspace(&a, 0, 0).unwrap().rows(), 2);
}

#[test]
fn filtration_layers_are_nested_and_stable_under_d() {
    let a = arc("split-pair");
    for n in 1..=3usize {
        for p in 0..n {
            let lower = filtration_subspace(&a, n, p).unwrap();
            let upper = filtration_subspace(&a, n, p + 1).unwrap();
            if lower.rows() > 0 {
                assert_eq!(
                    upper.vstack(&lower).unwrap().rank(),
                    upper.rank(),
                    "layer {p} not inside layer {} at arity {n}",
                    p + 1
                );
            }
            // Each layer is carried into the same layer one arity up.
            let target = filtration_subspace(&a, n + 1, p).unwrap();
            for r in 0..lower.rows() {
                let phi = Cochain::from_coeffs(a.clone(), n, lower.row(r).to_vec()).unwrap();
                let image = d(&phi).unwrap();
                assert!(
                    target.in_row_span(image.coeffs()).unwrap(),
                    "d leaves layer {p} at arity {n}"
                );
            }
        }
    }
}

#[test]
fn page_tables_expose_a_bounded_window() {
    let a = arc("rationals");
    let t = first_page_hodge(&a, 3).unwrap();
    assert_eq!(t.max_total, 3);
    assert_eq!(t.get(0, 0), Some(1));
    assert_eq!(t.get(1, 0), Some(0));
    assert_eq!(t.get(2, 2), None);
    for ((p, q), dim) in &t.entries {
        assert!(p + q <= 3);
        if (*p, *q) != (0, 0) {
            assert_eq!(*dim, 0, "({p},{q})");
        }
    }
}

#[test]
fn both_first_page_routes_agree_everywhere() {
    for (name, algebra) in corpus::all::<Rat>() {
        let algebra = Arc::new(algebra);
        let window = if algebra.dim() <= 2 { 3 } else { 2 };
        let hodge = first_page_hodge(&algebra, window).unwrap();
        let filt = first_page_filtration(&algebra, window).unwrap();
        assert_eq!(hodge, filt, "{name}");
    }
}

#[test]
fn first_page_refines_cohomology() {
    let a = arc("dual-numbers");
    let t = first_page_hodge(&a, 3).unwrap();
    let h = cohomology_dims(&a, 3).unwrap();
    for (n, total) in h.iter().enumerate() {
        let diag: usize = (0..=n).map(|p| t.get(p, n - p).unwrap()).sum();
        assert_eq!(diag, *total, "arity {n}");
    }
    // The same numbers come straight from the bigraded cohomology.
    for n in 0..=3usize {
        let fine = hodge_cohomology_dims(&a, n).unwrap();
        for (p, q, dim) in fine {
            assert_eq!(t.get(p, q), Some(dim), "({p},{q})");
        }
    }
}

#[test]
fn second_page_vanishes_on_the_whole_corpus() {
    for (name, algebra) in corpus::all::<Rat>() {
        let algebra = Arc::new(algebra);
        let window = if algebra.dim() <= 2 { 3 } else { 2 };
        let t = second_filtration_page(&algebra, window).unwrap();
        assert!(!t.entries.is_empty());
        for ((p, q), dim) in &t.entries {
            assert_eq!(*dim, 0, "{name} ({p},{q})");
        }
    }
}

#[test]
fn total_parity_of_the_ground_field() {
    let a = arc("rationals");
    let r = total_z2_cohomology(&a, 4).unwrap();
    assert_eq!((r.even_dim, r.odd_dim), (1, 0));
    assert_eq!(r.window, 4);
    assert_eq!(r.interior_valid_upto, 2);
}

#[test]
fn total_parity_reports_are_well_formed_and_deterministic() {
    let a = arc("dual-numbers");
    let small = total_z2_cohomology(&a, 3).unwrap();
    let large = total_z2_cohomology(&a, 4).unwrap();
    assert_eq!(small.interior_valid_upto, 1);
    assert_eq!(large.interior_valid_upto, 2);
    let again = total_z2_cohomology(&a, 4).unwrap();
    assert_eq!((large.even_dim, large.odd_dim), (again.even_dim, again.odd_dim));
}
