use std::sync::Arc;

use hammock_core::appkit::{check_periodicity_pattern, preset_by_name};
use hammock_core::arquiver::{build_ar_quiver, ARQuiver};
use hammock_core::catalogs::build_catalog;
use hammock_core::exactla::{FieldPrime, DEFAULT_PRIME};
use hammock_core::hammock::classify;
use hammock_core::Error;

fn ar(id: &str) -> ARQuiver {
    let field = FieldPrime::new(DEFAULT_PRIME).unwrap();
    build_ar_quiver(Arc::new(build_catalog(id, field, 8).unwrap())).unwrap()
}

#[test]
fn e6_path_presets_match_their_oracles() {
    let ar = ar("e6");
    for arrow in ["alpha", "beta", "gamma", "delta", "epsilon"] {
        for kind in ["ker", "im", "cok", "ker-dual", "mu-ker", "mu-im", "mu-cok"] {
            let name = format!("{kind}@{arrow}");
            let p = preset_by_name(&ar.catalog, &name).unwrap();
            assert!(p.oracle_mismatches(&ar).unwrap().is_empty(), "{name}");
            assert!(p.verify(&ar).unwrap().1.pass, "{name}");
        }
    }
}

#[test]
fn ker_and_dual_kernel_agree_on_every_arrow() {
    let ar = ar("e6");
    for arrow in ["alpha", "beta", "gamma", "delta", "epsilon"] {
        let a = preset_by_name(&ar.catalog, &format!("ker@{arrow}")).unwrap().hammock(&ar).unwrap();
        let b = preset_by_name(&ar.catalog, &format!("ker-dual@{arrow}")).unwrap().hammock(&ar).unwrap();
        assert_eq!(a.values, b.values, "{arrow}");
    }
}

#[test]
fn homology_on_a3() {
    let ar = ar("a3");
    let p = preset_by_name(&ar.catalog, "homology@a,b").unwrap();
    assert!(p.oracle_mismatches(&ar).unwrap().is_empty());
    assert!(p.verify(&ar).unwrap().1.pass);
}

#[test]
fn intro_cok_alpha_classification() {
    let ar = ar("e6");
    let h = preset_by_name(&ar.catalog, "cok@alpha").unwrap().hammock(&ar).unwrap();
    assert_eq!(h.support().len(), 15);
    let r = classify(&h, &ar);
    let name = |v: &[usize]| v.iter().map(|&i| ar.label(i).to_string()).collect::<Vec<_>>();
    assert_eq!(name(&r.isolated_sources), ["010000"]);
    assert_eq!(name(&r.isolated_sinks), ["011000"]);
    assert_eq!(r.tangents.len(), 1);
    assert_eq!(r.tangents[0].defect, 1);
}

#[test]
fn im_beta_value_two_vertices() {
    let ar = ar("e6");
    let h = preset_by_name(&ar.catalog, "im@beta").unwrap().hammock(&ar).unwrap();
    let mut twos: Vec<&str> = (0..ar.len()).filter(|&i| h.values[i] == 2).map(|i| ar.label(i)).collect();
    twos.sort();
    assert_eq!(twos, ["122110", "122111", "122121", "123121", "123221"]);
}

#[test]
fn subspace_presets_match_jordan_oracles() {
    let ar = ar("sub:4");
    for name in [
        "mult-ambient@1", "mult-ambient@2", "mult-ambient@3", "mult-ambient-alt@4",
        "mult-sub@1", "mult-sub@2", "mult-sub@3", "mult-sub@4",
        "mult-factor@1", "mult-factor@2", "mult-factor@3", "count-sub-summands",
    ] {
        let p = preset_by_name(&ar.catalog, name).unwrap();
        assert!(p.oracle_mismatches(&ar).unwrap().is_empty(), "{name}");
    }
}

#[test]
fn printed_top_ambient_sequence_is_flagged() {
    let ar = ar("sub:4");
    let p = preset_by_name(&ar.catalog, "mult-ambient@4").unwrap();
    assert!(!p.notes.is_empty());
    assert!(!p.oracle_mismatches(&ar).unwrap().is_empty());
}

#[test]
fn factor_preset_rejects_m_equal_n() {
    let ar = ar("sub:4");
    assert!(matches!(preset_by_name(&ar.catalog, "mult-factor@4"), Err(Error::InvalidRange(_))));
}

#[test]
fn periodicity_holds_for_each_m() {
    let ar = ar("sub:4");
    for m in 1..4 {
        let r = check_periodicity_pattern(&ar, m).unwrap();
        assert!(r.pass(), "m={m}: {:?}", r.failures);
        assert_eq!(r.checked, 18);
    }
}

#[test]
fn mu_presets_are_rejected_outside_dynkin() {
    let ar = ar("nilp:3");
    assert!(preset_by_name(&ar.catalog, "mu-ker@e1").is_err());
}
