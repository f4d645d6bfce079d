//! Verification suites run by `hammocks verify`.

use std::sync::Arc;

use hammock_core::appkit::{check_periodicity_pattern, compare_ambient_top, preset_by_name};
use hammock_core::arquiver::{build_ar_quiver, ARQuiver};
use hammock_core::catalogs::build_catalog;
use hammock_core::coklemma::{random_catalog_morphism, run_hom_grid_trials, run_vector_space_trials, trial_rng};
use hammock_core::exactla::FieldPrime;
use hammock_core::hammock::{
    verify_contravariant, verify_covariant, verify_factoring, verify_factoring_dual, LeftExactSeq,
    RightExactSeq,
};
use hammock_core::Result;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Coklemma,
    Factoring,
    Periodicity,
    Presets,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorem1" => Ok(Suite::Theorem1),
            "coklemma" => Ok(Suite::Coklemma),
            "factoring" => Ok(Suite::Factoring),
            "periodicity" => Ok(Suite::Periodicity),
            "presets" => Ok(Suite::Presets),
            _ => Err(format!("unknown suite {s} (theorem1, coklemma, factoring, periodicity, presets)")),
        }
    }
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Coklemma => "coklemma",
            Suite::Factoring => "factoring",
            Suite::Periodicity => "periodicity",
            Suite::Presets => "presets",
        }
    }

    pub fn default_trials(self) -> u64 {
        match self {
            Suite::Theorem1 => 200,
            _ => 500,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect();
        json!({"suite": self.suite.name(), "pass": self.pass(), "checks": checks})
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub field: FieldPrime,
    pub seed: u64,
    pub trials: u64,
    pub dim_bound: usize,
}

fn ar(id: &str, cfg: &SuiteConfig) -> Result<ARQuiver> {
    build_ar_quiver(Arc::new(build_catalog(id, cfg.field, cfg.dim_bound)?))
}

/// Preset names exercised on each catalog.
pub fn preset_names(id: &str) -> Vec<String> {
    match id {
        "e6" => {
            let mut v = Vec::new();
            for a in ["alpha", "beta", "gamma", "delta", "epsilon"] {
                for kind in ["ker", "im", "cok", "ker-dual", "mu-ker", "mu-im", "mu-cok"] {
                    v.push(format!("{kind}@{a}"));
                }
            }
            for e in 1..=6 {
                v.push(format!("mu-ker@e{e}"));
            }
            v.push("mu-cok@2*beta".into());
            v.push("mu-ker@0".into());
            v
        }
        "a3" => ["homology@a,b", "ker@a.b", "im@a.b", "cok@a.b", "ker@a", "cok@b"]
            .map(String::from)
            .to_vec(),
        "sub:4" => {
            let mut v = Vec::new();
            for m in 1..=4 {
                v.push(format!("mult-ambient@{m}"));
                v.push(format!("mult-sub@{m}"));
            }
            for m in 1..=3 {
                v.push(format!("mult-factor@{m}"));
            }
            v.push("mult-ambient-alt@4".into());
            v.push("count-sub-summands".into());
            v
        }
        _ => Vec::new(),
    }
}

fn theorem1(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for id in ["e6", "a3", "sub:4"] {
        let ar = ar(id, cfg)?;
        for name in preset_names(id) {
            let preset = preset_by_name(&ar.catalog, &name)?;
            let (_, verdict) = preset.verify(&ar)?;
            checks.push(Check {
                name: format!("{id} {name}"),
                pass: verdict.pass,
                detail: verdict.to_json(),
            });
        }
    }
    for id in ["e6", "sub:4"] {
        let ar = ar(id, cfg)?;
        let mut violations = Vec::new();
        for t in 0..cfg.trials {
            let mut rng = trial_rng(cfg.seed, t);
            let u = random_catalog_morphism(&ar.catalog, &mut rng, 3);
            let (_, v) = verify_covariant(&RightExactSeq::from_morphism(u, &ar.catalog), &ar)?;
            if !v.pass {
                violations.push(json!({"trial": t, "variance": "covariant", "violations": v.violations}));
            }
            let g = random_catalog_morphism(&ar.catalog, &mut rng, 3);
            let (_, v) = verify_contravariant(&LeftExactSeq::from_morphism(g), &ar)?;
            if !v.pass {
                violations.push(json!({"trial": t, "variance": "contravariant", "violations": v.violations}));
            }
        }
        checks.push(Check {
            name: format!("{id} random sequences"),
            pass: violations.is_empty(),
            detail: json!({"trials": cfg.trials, "failures": violations}),
        });
    }
    Ok(checks)
}

fn coklemma(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for id in ["e6", "nilp:4", "sub:4"] {
        let catalog = build_catalog(id, cfg.field, cfg.dim_bound)?;
        let s = run_hom_grid_trials(&catalog, cfg.seed, cfg.trials)?;
        checks.push(Check {
            name: format!("{id} hom grids"),
            pass: s.pass(),
            detail: s.to_json(),
        });
    }
    let s = run_vector_space_trials(cfg.field, cfg.seed, cfg.trials)?;
    checks.push(Check {
        name: "vector space grids".into(),
        pass: s.pass(),
        detail: s.to_json(),
    });
    Ok(checks)
}

fn factoring(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for id in ["e6", "nilp:4", "sub:4"] {
        let ar = ar(id, cfg)?;
        let mut failures = Vec::new();
        let mut pairs = 0;
        for c in 0..ar.len() {
            if ar.tau[c].is_none() {
                continue;
            }
            let s = ar.ar_sequence(c)?;
            let (right, left) = (RightExactSeq::from_ar(&s), LeftExactSeq::from_ar(&s));
            for m in 0..ar.len() {
                pairs += 1;
                if !verify_factoring(&right, ar.rep(m), &ar)? {
                    failures.push(json!({"end": ar.label(c), "m": ar.label(m), "side": "right"}));
                }
                if !verify_factoring_dual(&left, ar.rep(m), &ar)? {
                    failures.push(json!({"end": ar.label(c), "m": ar.label(m), "side": "left"}));
                }
            }
        }
        checks.push(Check {
            name: format!("{id} factoring pairings"),
            pass: failures.is_empty(),
            detail: json!({"pairs": pairs, "failures": failures}),
        });
    }
    Ok(checks)
}

fn periodicity(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let ar = ar("sub:4", cfg)?;
    let mut checks = Vec::new();
    for m in 1..4 {
        let r = check_periodicity_pattern(&ar, m)?;
        checks.push(Check {
            name: format!("sub:4 multiplicity pattern m={m}"),
            pass: r.pass(),
            detail: json!({"checked": r.checked, "failures": r.failures}),
        });
    }
    Ok(checks)
}

fn presets(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for id in ["e6", "a3", "sub:4"] {
        let ar = ar(id, cfg)?;
        for name in preset_names(id) {
            let preset = preset_by_name(&ar.catalog, &name)?;
            let mismatches = preset.oracle_mismatches(&ar)?;
            let flagged = !preset.notes.is_empty();
            checks.push(Check {
                name: format!("{id} {name}"),
                pass: mismatches.is_empty() || flagged,
                detail: json!({"mismatches": mismatches, "notes": preset.notes, "flagged": flagged && !mismatches.is_empty()}),
            });
        }
        if id == "sub:4" {
            let top = compare_ambient_top(&ar)?;
            checks.push(Check {
                name: "sub:4 mult-ambient@4 printed vs alternative".into(),
                pass: top.printed_matches || top.alternative_matches,
                detail: top.to_json(),
            });
        }
    }
    Ok(checks)
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Theorem1 => theorem1(cfg)?,
        Suite::Coklemma => coklemma(cfg)?,
        Suite::Factoring => factoring(cfg)?,
        Suite::Periodicity => periodicity(cfg)?,
        Suite::Presets => presets(cfg)?,
    };
    Ok(SuiteReport { suite, checks })
}
