//! The Cokernel Complex Lemma on explicit grids of vector spaces, the Hom
//! double diagram of a right and a left exact sequence, and the seeded
//! generators used to exercise both.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::catalogs::CategoryCatalog;
use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix, QuotientData, Subspace};
use crate::hammock::{LeftExactSeq, RightExactSeq};
use crate::repcore::{direct_sum, hom_space, HomSpace, Morphism, Representation};

/// `V₁ -d₁-> V₂ -d₂-> V₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermComplex {
    pub d1: Matrix,
    pub d2: Matrix,
}

impl ThreeTermComplex {
    pub fn new(d1: Matrix, d2: Matrix) -> Result<Self> {
        if d2.cols() != d1.rows() {
            return Err(Error::Shape("d₂ ∘ d₁ does not compose".into()));
        }
        if !d2.mul(&d1).is_zero() {
            return Err(Error::NotAComplex);
        }
        Ok(ThreeTermComplex { d1, d2 })
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d1.cols(), self.d1.rows(), self.d2.rows())
    }
}

/// `(dim Ker d₁, dim Ker d₂ − rank d₁, dim V₃ − rank d₂)`.
pub fn homology_dims(c: &ThreeTermComplex) -> Result<(usize, usize, usize)> {
    if !c.d2.mul(&c.d1).is_zero() {
        return Err(Error::NotAComplex);
    }
    let (v1, v2, v3) = c.dims();
    let r1 = c.d1.rank();
    let r2 = c.d2.rank();
    Ok((v1 - r1, v2 - r2 - r1, v3 - r2))
}

/// The diagram
///
/// ```text
///           A  --α-->  A''
///           |f         |f''
///   B' -β'-> B  --β-->  B''
///   |g'      |g         |g''
///   C' -γ'-> C  --γ-->  C''
/// ```
///
/// with matrices over `F_p`; the spaces are given by their dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactGrid {
    pub field: FieldPrime,
    pub alpha: Matrix,
    pub f: Matrix,
    pub f2: Matrix,
    pub beta1: Matrix,
    pub beta: Matrix,
    pub g1: Matrix,
    pub g: Matrix,
    pub g2: Matrix,
    pub gamma1: Matrix,
    pub gamma: Matrix,
}

fn exact_at(incoming: &Matrix, outgoing: &Matrix) -> bool {
    incoming.column_space() == outgoing.nullspace()
}

fn matrix_json(m: &Matrix) -> Value {
    let rows: Vec<Vec<u64>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "data": rows})
}

impl ExactGrid {
    /// Shape, commutativity and exactness checks.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidGrid(what.to_string()));
        let shapes = [
            (self.alpha.cols(), self.f.cols(), "A"),
            (self.alpha.rows(), self.f2.cols(), "A''"),
            (self.beta1.cols(), self.g1.cols(), "B'"),
            (self.beta1.rows(), self.beta.cols(), "B"),
            (self.f.rows(), self.g.cols(), "B"),
            (self.beta.rows(), self.f2.rows(), "B''"),
            (self.g2.cols(), self.beta.rows(), "B''"),
            (self.g1.rows(), self.gamma1.cols(), "C'"),
            (self.gamma1.rows(), self.g.rows(), "C"),
            (self.gamma.cols(), self.g.rows(), "C"),
            (self.gamma.rows(), self.g2.rows(), "C''"),
        ];
        for (a, b, name) in shapes {
            if a != b {
                return bad(&format!("dimension mismatch at {name}"));
            }
        }
        if self.f2.mul(&self.alpha) != self.beta.mul(&self.f)
            || self.g.mul(&self.beta1) != self.gamma1.mul(&self.g1)
            || self.g2.mul(&self.beta) != self.gamma.mul(&self.g)
        {
            return bad("a square does not commute");
        }
        if !exact_at(&self.beta1, &self.beta) {
            return bad("row B' -> B -> B'' is not exact at B");
        }
        if !exact_at(&self.f, &self.g) {
            return bad("column A -> B -> C is not exact at B");
        }
        if self.gamma1.rank() != self.gamma1.cols() || !exact_at(&self.gamma1, &self.gamma) {
            return bad("row 0 -> C' -> C -> C'' is not exact");
        }
        if self.f2.rank() != self.f2.cols() || !exact_at(&self.f2, &self.g2) {
            return bad("column 0 -> A'' -> B'' -> C'' is not exact");
        }
        Ok(())
    }

    /// `0 -> Cok α -> Cok β -> Cok γ -> 0`.
    pub fn horizontal_complex(&self) -> Result<ThreeTermComplex> {
        let qa = self.alpha.column_space().quotient_data();
        let qb = self.beta.column_space().quotient_data();
        let qc = self.gamma.column_space().quotient_data();
        ThreeTermComplex::new(induced(&self.f2, &qa, &qb), induced(&self.g2, &qb, &qc))
    }

    /// `0 -> Cok g' -> Cok g -> Cok g'' -> 0`.
    pub fn vertical_complex(&self) -> Result<ThreeTermComplex> {
        let q1 = self.g1.column_space().quotient_data();
        let q = self.g.column_space().quotient_data();
        let q2 = self.g2.column_space().quotient_data();
        ThreeTermComplex::new(induced(&self.gamma1, &q1, &q), induced(&self.gamma, &q, &q2))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prime": self.field.p(),
            "alpha": matrix_json(&self.alpha),
            "f": matrix_json(&self.f),
            "f2": matrix_json(&self.f2),
            "beta1": matrix_json(&self.beta1),
            "beta": matrix_json(&self.beta),
            "g1": matrix_json(&self.g1),
            "g": matrix_json(&self.g),
            "g2": matrix_json(&self.g2),
            "gamma1": matrix_json(&self.gamma1),
            "gamma": matrix_json(&self.gamma),
        })
    }
}

fn induced(f: &Matrix, source: &QuotientData, target: &QuotientData) -> Matrix {
    target.projection.mul(f).mul(&source.section)
}

/// Whether the horizontal and vertical cokernel complexes have the same
/// homology dimensions.
pub fn check_cokernel_lemma(grid: &ExactGrid) -> Result<bool> {
    grid.validate()?;
    let h = homology_dims(&grid.horizontal_complex()?)?;
    let v = homology_dims(&grid.vertical_complex()?)?;
    Ok(h == v)
}

/// Matrix of `h ↦ op(h)` from `from` to `to` in hom-space coordinates.
fn hom_map(from: &HomSpace, to: &HomSpace, op: impl Fn(&Morphism) -> Morphism) -> Matrix {
    let columns: Vec<Vec<u64>> = from.basis().iter().map(|b| to.coords(&op(b))).collect();
    Matrix::from_columns(to.subspace().field(), to.dim(), &columns)
}

/// The Hom double diagram of `X -u-> Y -> Z -> 0` and `0 -> A -> B -g-> C`
/// with `A = (Y,A)`, `A'' = (X,A)`, `B' = (Z,B)` and so on.
pub fn hom_double_grid(seq: &RightExactSeq, left: &LeftExactSeq) -> ExactGrid {
    let (x, y, z) = (seq.x(), seq.y(), &seq.z);
    let (a, b, c) = (&left.x, left.y(), left.z());
    let (u, p) = (&seq.u, &seq.proj);
    let (i, g) = (&left.incl, &left.v);
    let ya = hom_space(y, a);
    let xa = hom_space(x, a);
    let zb = hom_space(z, b);
    let yb = hom_space(y, b);
    let xb = hom_space(x, b);
    let zc = hom_space(z, c);
    let yc = hom_space(y, c);
    let xc = hom_space(x, c);
    ExactGrid {
        field: x.field(),
        alpha: hom_map(&ya, &xa, |h| h.after(u)),
        f: hom_map(&ya, &yb, |h| i.after(h)),
        f2: hom_map(&xa, &xb, |h| i.after(h)),
        beta1: hom_map(&zb, &yb, |h| h.after(p)),
        beta: hom_map(&yb, &xb, |h| h.after(u)),
        g1: hom_map(&zb, &zc, |h| g.after(h)),
        g: hom_map(&yb, &yc, |h| g.after(h)),
        g2: hom_map(&xb, &xc, |h| g.after(h)),
        gamma1: hom_map(&zc, &yc, |h| h.after(p)),
        gamma: hom_map(&yc, &xc, |h| h.after(u)),
    }
}

/// The complexes `0 -> Cok(u,A) -> Cok(u,B) -> Cok(u,C) -> 0` and
/// `0 -> Cok(Z,g) -> Cok(Y,g) -> Cok(X,g) -> 0`, with `Z` the cokernel of
/// `u` in the category and `A` the kernel of `g`.
pub fn hom_grid(
    u: &Morphism,
    g: &Morphism,
    catalog: &CategoryCatalog,
) -> Result<(ThreeTermComplex, ThreeTermComplex)> {
    let grid = hom_double_grid(
        &RightExactSeq::from_morphism(u.clone(), catalog),
        &LeftExactSeq::from_morphism(g.clone()),
    );
    Ok((grid.horizontal_complex()?, grid.vertical_complex()?))
}

/// RNG for trial `trial` under `seed`: one ChaCha stream per trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Direct sum of `1..=max_summands` random catalog objects.
pub fn random_object(catalog: &CategoryCatalog, rng: &mut ChaCha8Rng, max_summands: usize) -> Arc<Representation> {
    let k = rng.gen_range(1..=max_summands);
    let parts: Vec<_> = (0..k)
        .map(|_| catalog.rep(rng.gen_range(0..catalog.len())).clone())
        .collect();
    direct_sum(&catalog.quiver, catalog.field, &parts)
}

/// Random element of `Hom(x, y)`; with probability ¼ each basis coefficient
/// is zero, so that degenerate maps also occur.
pub fn random_morphism(x: &Arc<Representation>, y: &Arc<Representation>, rng: &mut ChaCha8Rng) -> Morphism {
    let h = hom_space(x, y);
    let p = x.field().p();
    let coeffs: Vec<u64> = (0..h.dim())
        .map(|_| if rng.gen_bool(0.25) { 0 } else { rng.gen_range(0..p) })
        .collect();
    h.element(&coeffs)
}

/// Random morphism between random sums of catalog objects.
pub fn random_catalog_morphism(catalog: &CategoryCatalog, rng: &mut ChaCha8Rng, max_summands: usize) -> Morphism {
    let x = random_object(catalog, rng, max_summands);
    let y = random_object(catalog, rng, max_summands);
    random_morphism(&x, &y, rng)
}

/// One hom-grid trial; `Err(grid json)` on a counterexample.
pub fn hom_grid_trial(catalog: &CategoryCatalog, seed: u64, trial: u64, max_summands: usize) -> Result<std::result::Result<(), Value>> {
    let mut rng = trial_rng(seed, trial);
    let u = random_catalog_morphism(catalog, &mut rng, max_summands);
    let g = random_catalog_morphism(catalog, &mut rng, max_summands);
    let grid = hom_double_grid(
        &RightExactSeq::from_morphism(u, catalog),
        &LeftExactSeq::from_morphism(g),
    );
    match check_cokernel_lemma(&grid) {
        Ok(true) => Ok(Ok(())),
        Ok(false) => Ok(Err(grid.to_json())),
        Err(Error::InvalidGrid(why)) => Ok(Err(json!({"invalid": why, "grid": grid.to_json()}))),
        Err(e) => Err(e),
    }
}

/// Summary of a batch of trials.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialSummary {
    pub family: String,
    pub trials: u64,
    pub failures: Vec<Value>,
}

impl TrialSummary {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({"family": self.family, "trials": self.trials, "pass": self.pass(), "failures": self.failures})
    }
}

/// `trials` hom-grid trials on random sums of up to three catalog objects.
pub fn run_hom_grid_trials(catalog: &CategoryCatalog, seed: u64, trials: u64) -> Result<TrialSummary> {
    let mut failures = Vec::new();
    for t in 0..trials {
        if let Err(dump) = hom_grid_trial(catalog, seed, t, 3)? {
            failures.push(json!({"trial": t, "grid": dump}));
        }
    }
    Ok(TrialSummary {
        family: catalog.id.clone(),
        trials,
        failures,
    })
}

/// Random grid from short exact data of plain vector spaces: a random map
/// `X -> Y` with its cokernel and a random map `B -> C` with its kernel,
/// combined through `Hom`.
pub fn random_vector_space_grid(field: FieldPrime, rng: &mut ChaCha8Rng, max_dim: usize) -> ExactGrid {
    let quiver = crate::catalogs::linear_quiver(1);
    let space = |d: usize| Arc::new(Representation::new(quiver.clone(), field, vec![d], vec![]).expect("no arrows"));
    let mut dim = || rng.gen_range(0..=max_dim);
    let (dx, dy, db, dc) = (dim(), dim(), dim(), dim());
    let (x, y, b, c) = (space(dx), space(dy), space(db), space(dc));
    let u = random_morphism(&x, &y, rng);
    let g = random_morphism(&b, &c, rng);
    let z_dim = dy - u.component(0).rank();
    let a_dim = db - g.component(0).rank();
    let (z, p) = cokernel_of(&u, space(z_dim));
    let (a, i) = kernel_of(&g, space(a_dim));
    let seq = RightExactSeq { u, z, proj: p };
    let left = LeftExactSeq { v: g, x: a, incl: i };
    hom_double_grid(&seq, &left)
}

fn cokernel_of(u: &Morphism, z: Arc<Representation>) -> (Arc<Representation>, Morphism) {
    let qd = u.component(0).column_space().quotient_data();
    let p = Morphism::new(u.target().clone(), z.clone(), vec![qd.projection]).expect("no arrows");
    (z, p)
}

fn kernel_of(g: &Morphism, a: Arc<Representation>) -> (Arc<Representation>, Morphism) {
    let k: Subspace = g.component(0).nullspace();
    let i = Morphism::new(a.clone(), g.source().clone(), vec![k.basis_matrix()]).expect("no arrows");
    (a, i)
}

/// `trials` grids over plain vector spaces of dimension at most 4.
pub fn run_vector_space_trials(field: FieldPrime, seed: u64, trials: u64) -> Result<TrialSummary> {
    let mut failures = Vec::new();
    for t in 0..trials {
        let mut rng = trial_rng(seed, t);
        let grid = random_vector_space_grid(field, &mut rng, 4);
        match check_cokernel_lemma(&grid) {
            Ok(true) => {}
            Ok(false) => failures.push(json!({"trial": t, "grid": grid.to_json()})),
            Err(Error::InvalidGrid(why)) => failures.push(json!({"trial": t, "invalid": why, "grid": grid.to_json()})),
            Err(e) => return Err(e),
        }
    }
    Ok(TrialSummary {
        family: "vector spaces".into(),
        trials,
        failures,
    })
}
