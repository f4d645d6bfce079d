use std::sync::Arc;

use hammock_core::arquiver::build_ar_quiver;
use hammock_core::catalogs::build_catalog;
use hammock_core::coklemma::{homology_dims, run_hom_grid_trials, ThreeTermComplex};
use hammock_core::exactla::{FieldPrime, Matrix, Subspace};
use hammock_core::hammock::{classify, HammockFunction, Variance};
use proptest::prelude::*;

const P: u64 = 31;

fn field() -> FieldPrime {
    FieldPrime::new(P).unwrap()
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(0..P, r * c).prop_map(move |data| Matrix::from_data(field(), r, c, data))
    })
}

fn same_rows(max: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (1..=max, 1..=max, 1..=max).prop_flat_map(|(r, c1, c2)| {
        (prop::collection::vec(0..P, r * c1), prop::collection::vec(0..P, r * c2))
            .prop_map(move |(a, b)| (Matrix::from_data(field(), r, c1, a), Matrix::from_data(field(), r, c2, b)))
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in matrix(6)) {
        prop_assert_eq!(m.rank() + m.nullspace().dim(), m.cols());
    }

    #[test]
    fn nullspace_is_killed(m in matrix(6)) {
        for v in m.nullspace().basis() {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn rank_of_transpose(m in matrix(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn quotient_dimension(m in matrix(5)) {
        let s = m.column_space();
        let q = s.quotient_data();
        prop_assert_eq!(q.quotient_dim() + s.dim(), s.ambient_dim());
    }

    #[test]
    fn sum_and_intersection_dimensions((a, b) in same_rows(5)) {
        let (s, t) = (a.column_space(), b.column_space());
        prop_assert_eq!(s.sum(&t).dim() + s.intersection(&t).dim(), s.dim() + t.dim());
    }

    #[test]
    fn composite_is_a_complex(a in matrix(4), seed in prop::collection::vec(0..P, 16)) {
        // d2 ∘ d1 = 0 when d2 vanishes on the image of d1
        let d1 = a;
        let left = d1.column_space();
        let q = left.quotient_data();
        let k = q.quotient_dim();
        let cols: Vec<Vec<u64>> = (0..k).map(|i| (0..2).map(|j| seed[(i * 2 + j) % seed.len()]).collect()).collect();
        let lift = if k == 0 { Matrix::zeros(field(), 2, 0) } else { Matrix::from_columns(field(), 2, &cols) };
        let d2 = lift.mul(&q.projection);
        let c = ThreeTermComplex::new(d1.clone(), d2.clone()).unwrap();
        let (h0, h1, h2) = homology_dims(&c).unwrap();
        prop_assert_eq!(h0, d1.cols() - d1.rank());
        prop_assert_eq!(h1, d1.rows() - d2.rank() - d1.rank());
        prop_assert_eq!(h2, 2 - d2.rank());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classification_commutes_with_relabelling(values in prop::collection::vec(0usize..4, 10), shift in 0usize..10) {
        // classify an arbitrary function on the S(3) quiver, then rotate the
        // values around a relabelling of the vertices and compare
        let ar = build_ar_quiver(Arc::new(build_catalog("sub:3", field(), 8).unwrap())).unwrap();
        prop_assume!(ar.len() == 10);
        let h = HammockFunction { values: values.clone(), variance: Variance::Covariant };
        let r = classify(&h, &ar);
        let perm: Vec<usize> = (0..ar.len()).map(|i| (i + shift) % ar.len()).collect();
        let mut permuted = ar.clone();
        let inv = |i: usize| perm.iter().position(|&p| p == i).unwrap();
        permuted.arrow_mult = (0..ar.len()).map(|x| (0..ar.len()).map(|y| ar.arrow_mult[perm[x]][perm[y]]).collect()).collect();
        permuted.tau = (0..ar.len()).map(|c| ar.tau[perm[c]].map(inv)).collect();
        permuted.meshes = ar.meshes.iter().map(|m| {
            let mut middles: Vec<(usize, usize)> = m.middles.iter().map(|&(b, k)| (inv(b), k)).collect();
            middles.sort();
            hammock_core::arquiver::Mesh { start: m.start.map(inv), middles, end: m.end.map(inv) }
        }).collect();
        let hp = HammockFunction { values: (0..ar.len()).map(|i| values[perm[i]]).collect(), variance: Variance::Covariant };
        let rp = classify(&hp, &permuted);
        let back = |v: &[usize]| { let mut w: Vec<usize> = v.iter().map(|&i| perm[i]).collect(); w.sort(); w };
        prop_assert_eq!(back(&rp.isolated_sources), r.isolated_sources.clone());
        prop_assert_eq!(back(&rp.isolated_sinks), r.isolated_sinks.clone());
        let defects = |rr: &hammock_core::hammock::HammockReport| { let mut d: Vec<i64> = rr.nonadditive.iter().map(|m| m.defect).collect(); d.sort(); d };
        prop_assert_eq!(defects(&rp), defects(&r));
    }
}

#[test]
fn hom_grids_over_a_small_prime() {
    let c = build_catalog("nilp:3", field(), 8).unwrap();
    assert!(run_hom_grid_trials(&c, 5, 100).unwrap().pass());
}

#[test]
fn subspace_span_is_idempotent() {
    let f = field();
    let s = Subspace::span(f, 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
    assert_eq!(s.dim(), 1);
    assert_eq!(Subspace::span(f, 3, s.basis()), s);
}
