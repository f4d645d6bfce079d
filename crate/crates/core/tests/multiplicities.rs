use std::sync::Arc;

use hammock_core::arquiver::build_ar_quiver;
use hammock_core::catalogs::build_catalog;
use hammock_core::coklemma::trial_rng;
use hammock_core::exactla::{FieldPrime, Matrix, DEFAULT_PRIME};
use hammock_core::hammock::multiplicity_via_mesh;
use hammock_core::repcore::{direct_sum, Representation};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_invertible(field: FieldPrime, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..field.p())).collect();
        let m = Matrix::from_data(field, n, n, data);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Same isomorphism class, with a random basis change at every vertex.
fn scramble(rep: &Representation, rng: &mut ChaCha8Rng) -> Representation {
    let f = rep.field();
    let q = rep.quiver().clone();
    let s: Vec<Matrix> = rep.dims().iter().map(|&d| random_invertible(f, d, rng)).collect();
    let maps = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| s[a.target].mul(rep.map(i)).mul(&s[a.source].inverse().unwrap()))
        .collect();
    Representation::new(q, f, rep.dims().to_vec(), maps).unwrap()
}

#[test]
fn mesh_multiplicities_recover_random_sums() {
    let field = FieldPrime::new(DEFAULT_PRIME).unwrap();
    for id in ["e6", "nilp:4", "sub:4"] {
        let ar = build_ar_quiver(Arc::new(build_catalog(id, field, 8).unwrap())).unwrap();
        for trial in 0..100 {
            let mut rng = trial_rng(17, trial);
            let mut counts = vec![0usize; ar.len()];
            let k = rng.gen_range(1..=3);
            let parts: Vec<_> = (0..k)
                .map(|_| {
                    let i = rng.gen_range(0..ar.len());
                    counts[i] += 1;
                    ar.rep(i).clone()
                })
                .collect();
            let m = Arc::new(scramble(&direct_sum(&ar.catalog.quiver, field, &parts), &mut rng));
            for c in 0..ar.len() {
                assert_eq!(multiplicity_via_mesh(c, &m, &ar).unwrap(), counts[c], "{id} trial {trial} at {}", ar.label(c));
            }
            let mut decomposed = vec![0usize; ar.len()];
            for (i, mult) in ar.catalog.decompose(&m).unwrap() {
                decomposed[i] += mult;
            }
            assert_eq!(decomposed, counts, "{id} trial {trial}");
        }
    }
}
