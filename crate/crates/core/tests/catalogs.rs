use std::collections::BTreeSet;
use std::sync::Arc;

use hammock_core::arquiver::build_ar_quiver;
use hammock_core::catalogs::{
    build_catalog, enumerate_subspace_indecomposables, enumerate_subspace_indecomposables_exhaustive, jordan_type,
    pair_label, SUB_LOOP_V,
};
use hammock_core::exactla::{FieldPrime, DEFAULT_PRIME};
use hammock_core::repcore::is_indecomposable;

fn field() -> FieldPrime {
    FieldPrime::new(DEFAULT_PRIME).unwrap()
}

#[test]
fn linear_quivers_have_triangular_counts() {
    for n in 1..=5 {
        let c = build_catalog(&format!("a{n}"), field(), 8).unwrap();
        assert_eq!(c.len(), n * (n + 1) / 2);
        // intervals: every dimension vector is a run of ones
        for o in &c.objects {
            let ones: Vec<usize> = (0..n).filter(|&i| o.rep.dims()[i] == 1).collect();
            assert!(o.rep.dims().iter().all(|&d| d <= 1));
            assert_eq!(ones.last().unwrap() - ones[0] + 1, ones.len());
        }
    }
}

#[test]
fn catalog_objects_are_indecomposable_and_pairwise_distinct() {
    for id in ["e6", "nilp:4", "sub:3"] {
        let c = build_catalog(id, field(), 8).unwrap();
        for (i, o) in c.objects.iter().enumerate() {
            assert!(is_indecomposable(&o.rep).unwrap(), "{id} {}", o.label);
            assert_eq!(c.identify(&o.rep), Some(i));
        }
    }
}

#[test]
fn e6_projectives_and_injectives() {
    let c = build_catalog("e6", field(), 8).unwrap();
    assert_eq!(c.projective_labels().len(), 6);
    assert_eq!(c.injective_labels().len(), 6);
    let p: BTreeSet<&str> = c.projective_labels().into_iter().collect();
    for label in ["110000", "010000", "011110", "000100", "000010", "000011"] {
        assert!(p.contains(label), "{label}");
    }
}

#[test]
fn subspace_counts_for_small_n() {
    // |S(1)| = 2, |S(2)| = 5, |S(3)| = 10, |S(4)| = 20
    for (n, count) in [(1, 2), (2, 5), (3, 10), (4, 20)] {
        let c = build_catalog(&format!("sub:{n}"), field(), 8).unwrap();
        assert_eq!(c.len(), count, "S({n})");
    }
}

#[test]
fn pruned_enumeration_agrees_with_exhaustive() {
    let f = field();
    for n in 2..=3 {
        let a = enumerate_subspace_indecomposables(n, 6, f).unwrap();
        let b = enumerate_subspace_indecomposables_exhaustive(n, 6, f).unwrap();
        let la: BTreeSet<String> = a.objects.iter().map(|o| pair_label(o)).collect();
        let lb: BTreeSet<String> = b.objects.iter().map(|o| pair_label(o)).collect();
        assert_eq!(la, lb);
    }
}

#[test]
fn s4_ambient_modules_fit_the_bound() {
    let c = build_catalog("sub:4", field(), 8).unwrap();
    let largest = c.objects.iter().map(|o| o.rep.dims()[1]).max().unwrap();
    assert_eq!(largest, 6);
    for o in &c.objects {
        let parts = jordan_type(o.rep.map(SUB_LOOP_V));
        assert!(parts.iter().all(|&p| p <= 4));
    }
}

#[test]
fn ar_quivers_satisfy_structural_checks() {
    for id in ["a4", "e6", "nilp:3", "sub:4"] {
        let ar = build_ar_quiver(Arc::new(build_catalog(id, field(), 8).unwrap())).unwrap();
        assert!(ar.structure_violations().is_empty(), "{id}: {:?}", ar.structure_violations());
        assert!(ar.defect_violations().is_empty(), "{id}");
    }
}

#[test]
fn small_prime_gives_same_e6_dimensions() {
    let big = build_catalog("e6", field(), 8).unwrap();
    let small = build_catalog("e6", FieldPrime::new(101).unwrap(), 8).unwrap();
    let dims = |c: &hammock_core::catalogs::CategoryCatalog| -> BTreeSet<Vec<usize>> {
        c.objects.iter().map(|o| o.rep.dims().to_vec()).collect()
    };
    assert_eq!(dims(&big), dims(&small));
}
