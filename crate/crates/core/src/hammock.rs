//! Hammock functions of finitely presented functors given by short right
//! exact (covariant) or left exact (contravariant) sequences, their
//! classification on Γ, and checks of the structure theorems.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::arquiver::{ARQuiver, ArSequence, Mesh};
use crate::catalogs::CategoryCatalog;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::repcore::{hom_dim, hom_space, kernel_rep, HomSpace, Morphism, Representation};

/// `X -u-> Y -proj-> Z -> 0`, right exact in the category.
#[derive(Clone, Debug)]
pub struct RightExactSeq {
    pub u: Morphism,
    pub z: Arc<Representation>,
    pub proj: Morphism,
}

impl RightExactSeq {
    /// Completes `u` with its cokernel in the category.
    pub fn from_morphism(u: Morphism, catalog: &CategoryCatalog) -> Self {
        let (z, proj) = catalog.cokernel(&u);
        RightExactSeq { u, z, proj }
    }

    /// Validates `proj ∘ u = 0` and that `proj` induces an isomorphism from
    /// the canonical cokernel onto its target.
    pub fn new(u: Morphism, proj: Morphism, catalog: &CategoryCatalog) -> Result<Self> {
        if u.target().dims() != proj.source().dims() || !proj.after(&u).is_zero() {
            return Err(Error::NotExact("proj ∘ u must vanish".into()));
        }
        let (_, canonical) = catalog.cokernel(&u);
        let components: Vec<Matrix> = (0..proj.components().len())
            .map(|v| {
                let c = canonical.component(v);
                // rows of a section: solve c·s = e_r column by column
                let mut s = Matrix::zeros(c.field(), c.cols(), c.rows());
                for r in 0..c.rows() {
                    let mut e = vec![0u64; c.rows()];
                    e[r] = 1;
                    let x = c.solve(&e).expect("canonical projection is onto");
                    for (i, val) in x.into_iter().enumerate() {
                        s.set(i, r, val);
                    }
                }
                proj.component(v).mul(&s)
            })
            .collect();
        let induced: Vec<Matrix> = components;
        let consistent = (0..induced.len())
            .all(|v| induced[v].mul(canonical.component(v)) == *proj.component(v));
        if !consistent || !induced.iter().all(Matrix::is_invertible) {
            return Err(Error::NotExact("Z is not the cokernel of u".into()));
        }
        let z = proj.target().clone();
        Ok(RightExactSeq { u, z, proj })
    }

    pub fn x(&self) -> &Arc<Representation> {
        self.u.source()
    }

    pub fn y(&self) -> &Arc<Representation> {
        self.u.target()
    }

    pub fn from_ar(seq: &ArSequence) -> Self {
        RightExactSeq {
            u: seq.u.clone(),
            z: seq.v.target().clone(),
            proj: seq.v.clone(),
        }
    }
}

/// `0 -> X -incl-> Y -v-> Z`, left exact.
#[derive(Clone, Debug)]
pub struct LeftExactSeq {
    pub v: Morphism,
    pub x: Arc<Representation>,
    pub incl: Morphism,
}

impl LeftExactSeq {
    pub fn from_morphism(v: Morphism) -> Self {
        let (x, incl) = kernel_rep(&v);
        LeftExactSeq { v, x, incl }
    }

    /// Validates that `incl` is mono with image `Ker v` at every vertex.
    pub fn new(incl: Morphism, v: Morphism) -> Result<Self> {
        if incl.target().dims() != v.source().dims() || !v.after(&incl).is_zero() {
            return Err(Error::NotExact("v ∘ incl must vanish".into()));
        }
        for k in 0..v.components().len() {
            let ker = v.component(k).nullspace();
            let img = incl.component(k).column_space();
            if !incl.is_mono() || ker != img {
                return Err(Error::NotExact("X is not the kernel of v".into()));
            }
        }
        let x = incl.source().clone();
        Ok(LeftExactSeq { v, x, incl })
    }

    pub fn y(&self) -> &Arc<Representation> {
        self.v.source()
    }

    pub fn z(&self) -> &Arc<Representation> {
        self.v.target()
    }

    pub fn from_ar(seq: &ArSequence) -> Self {
        LeftExactSeq {
            v: seq.v.clone(),
            x: seq.u.source().clone(),
            incl: seq.u.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn name(self) -> &'static str {
        match self {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        }
    }
}

/// Values of a hammock function, indexed like the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HammockFunction {
    pub values: Vec<usize>,
    pub variance: Variance,
}

impl HammockFunction {
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i] > 0).collect()
    }

    pub fn value(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn values_json(&self, ar: &ARQuiver) -> Value {
        let map: Map<String, Value> = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| (ar.label(i).to_string(), json!(v)))
            .collect();
        Value::Object(map)
    }
}

/// Rank of precomposition `Hom(Y, M) -> Hom(X, M)`, `b ↦ b ∘ u`.
fn precompose_rank(u: &Morphism, hy: &HomSpace, hx: &HomSpace) -> usize {
    let vectors: Vec<Vec<u64>> = hy
        .basis()
        .iter()
        .map(|b| hx.coords(&b.after(u)))
        .collect();
    Subspace::span(u.source().field(), hx.dim(), &vectors).dim()
}

/// Rank of postcomposition `Hom(A, Y) -> Hom(A, Z)`, `f ↦ v ∘ f`.
fn postcompose_rank(v: &Morphism, ay: &HomSpace, az: &HomSpace) -> usize {
    let vectors: Vec<Vec<u64>> = ay
        .basis()
        .iter()
        .map(|f| az.coords(&v.after(f)))
        .collect();
    Subspace::span(v.source().field(), az.dim(), &vectors).dim()
}

/// `e_*(M) = dim Cok Hom(u, M)` for an arbitrary object `M`, computed by rank
/// and by the defect formula; the two must agree.
pub fn covariant_value(seq: &RightExactSeq, m: &Arc<Representation>, label: &str) -> Result<usize> {
    let hx = hom_space(seq.x(), m);
    let hy = hom_space(seq.y(), m);
    let by_rank = hx.dim() - precompose_rank(&seq.u, &hy, &hx);
    let defect = hx.dim() as i64 - hy.dim() as i64 + hom_dim(&seq.z, m) as i64;
    if by_rank as i64 != defect {
        return Err(Error::InternalMismatch {
            label: label.to_string(),
            rank: by_rank,
            defect,
        });
    }
    Ok(by_rank)
}

/// `e^*(A) = dim Cok Hom(A, v)`, cross-checked against
/// `hom(A,Z) − hom(A,Y) + hom(A,X)`.
pub fn contravariant_value(seq: &LeftExactSeq, a: &Arc<Representation>, label: &str) -> Result<usize> {
    let ay = hom_space(a, seq.y());
    let az = hom_space(a, seq.z());
    let by_rank = az.dim() - postcompose_rank(&seq.v, &ay, &az);
    let defect = az.dim() as i64 - ay.dim() as i64 + hom_dim(a, &seq.x) as i64;
    if by_rank as i64 != defect {
        return Err(Error::InternalMismatch {
            label: label.to_string(),
            rank: by_rank,
            defect,
        });
    }
    Ok(by_rank)
}

pub fn covariant_hammock(seq: &RightExactSeq, ar: &ARQuiver) -> Result<HammockFunction> {
    let values = (0..ar.len())
        .map(|i| covariant_value(seq, ar.rep(i), ar.label(i)))
        .collect::<Result<_>>()?;
    Ok(HammockFunction {
        values,
        variance: Variance::Covariant,
    })
}

pub fn contravariant_hammock(seq: &LeftExactSeq, ar: &ARQuiver) -> Result<HammockFunction> {
    let values = (0..ar.len())
        .map(|i| contravariant_value(seq, ar.rep(i), ar.label(i)))
        .collect::<Result<_>>()?;
    Ok(HammockFunction {
        values,
        variance: Variance::Contravariant,
    })
}

/// A mesh with the defect `Σ e(B_i) − e(A) − e(C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshDefect {
    pub mesh: Mesh,
    pub defect: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HammockReport {
    pub isolated_sources: Vec<usize>,
    pub isolated_sinks: Vec<usize>,
    pub tangents: Vec<MeshDefect>,
    pub nonadditive: Vec<MeshDefect>,
}

impl HammockReport {
    /// Tangent meshes whose end term is present.
    pub fn tangents_with_end(&self) -> Vec<&MeshDefect> {
        self.tangents.iter().filter(|t| t.mesh.end.is_some()).collect()
    }

    pub fn to_json(&self, ar: &ARQuiver) -> Value {
        let labels = |v: &[usize]| -> Vec<Value> { v.iter().map(|&i| json!(ar.label(i))).collect() };
        let meshes = |v: &[MeshDefect]| -> Vec<Value> {
            v.iter()
                .map(|md| {
                    let mut m = ar.mesh_json(&md.mesh);
                    m["defect"] = json!(md.defect);
                    m
                })
                .collect()
        };
        json!({
            "sources": labels(&self.isolated_sources),
            "sinks": labels(&self.isolated_sinks),
            "tangents": meshes(&self.tangents),
            "nonadditive": meshes(&self.nonadditive),
        })
    }
}

pub fn mesh_defect(h: &HammockFunction, mesh: &Mesh) -> i64 {
    let mid: i64 = mesh
        .middles
        .iter()
        .map(|&(b, k)| (k * h.values[b]) as i64)
        .sum();
    mid - mesh.start.map_or(0, |a| h.values[a] as i64) - mesh.end.map_or(0, |c| h.values[c] as i64)
}

/// Sources, sinks, tangents and non-additive meshes; predecessor and
/// successor sums count arrow multiplicities.
pub fn classify(h: &HammockFunction, ar: &ARQuiver) -> HammockReport {
    let n = ar.len();
    let weighted = |list: Vec<(usize, usize)>| -> usize {
        list.into_iter().map(|(b, k)| k * h.values[b]).sum()
    };
    let isolated_sources = (0..n)
        .filter(|&c| h.values[c] > weighted(ar.predecessors(c)))
        .collect();
    let isolated_sinks = (0..n)
        .filter(|&a| h.values[a] > weighted(ar.successors(a)))
        .collect();
    let mut tangents = Vec::new();
    let mut nonadditive = Vec::new();
    for mesh in &ar.meshes {
        let defect = mesh_defect(h, mesh);
        if defect != 0 {
            let md = MeshDefect {
                mesh: mesh.clone(),
                defect,
            };
            if defect > 0 {
                tangents.push(md.clone());
            }
            nonadditive.push(md);
        }
    }
    HammockReport {
        isolated_sources,
        isolated_sinks,
        tangents,
        nonadditive,
    }
}

/// Outcome of checking the four items of the structure theorem.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TheoremVerdict {
    pub pass: bool,
    pub violations: Vec<String>,
}

impl TheoremVerdict {
    pub fn to_json(&self) -> Value {
        json!({"pass": self.pass, "violations": self.violations})
    }
}

/// Catalog indices of the indecomposable summands of `m`.
fn summand_set(ar: &ARQuiver, m: &Arc<Representation>) -> Result<Vec<usize>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    Ok(ar.catalog.decompose(m)?.into_iter().map(|(i, _)| i).collect())
}

/// Items 1–4 of the structure theorem (covariant) or its dual
/// (contravariant), for the hammock of a sequence with terms `x, y, z`.
pub fn verify_theorem_isolated(
    x: &Arc<Representation>,
    y: &Arc<Representation>,
    z: &Arc<Representation>,
    h: &HammockFunction,
    ar: &ARQuiver,
) -> Result<TheoremVerdict> {
    let sx = summand_set(ar, x)?;
    let sy = summand_set(ar, y)?;
    let sz = summand_set(ar, z)?;
    let report = classify(h, ar);
    let mut violations = Vec::new();
    let name = |i: usize| ar.label(i).to_string();
    match h.variance {
        Variance::Covariant => {
            for &c in &report.isolated_sources {
                if !sx.contains(&c) {
                    violations.push(format!("item 1: source {} is not a summand of X", name(c)));
                }
            }
            for &a in &report.isolated_sinks {
                let ok = ar.is_injective(a)
                    || ar.tau_inverse(a).is_some_and(|c| sz.contains(&c));
                if !ok {
                    violations.push(format!("item 2: sink {} is not injective and τ⁻¹ of it is not a summand of Z", name(a)));
                }
            }
            for t in &report.tangents {
                let start_injective = t.mesh.start.is_some_and(|a| ar.is_injective(a));
                let ok = start_injective || t.mesh.end.is_some_and(|c| sy.contains(&c));
                if !ok {
                    violations.push(format!("item 3: tangent {} unexplained", ar.mesh_json(&t.mesh)));
                }
            }
            for mesh in &ar.meshes {
                if let Some(c) = mesh.end {
                    let in_terms = sx.contains(&c) || sy.contains(&c) || sz.contains(&c);
                    if !in_terms && mesh_defect(h, mesh) != 0 {
                        violations.push(format!("item 4: mesh ending at {} is not additive", name(c)));
                    }
                }
            }
        }
        Variance::Contravariant => {
            for &a in &report.isolated_sinks {
                if !sz.contains(&a) {
                    violations.push(format!("item 1: sink {} is not a summand of Z", name(a)));
                }
            }
            for &c in &report.isolated_sources {
                let ok = ar.is_projective(c) || ar.tau[c].is_some_and(|a| sx.contains(&a));
                if !ok {
                    violations.push(format!("item 2: source {} is not projective and τ of it is not a summand of X", name(c)));
                }
            }
            for t in &report.tangents {
                let end_projective = t.mesh.end.is_some_and(|c| ar.is_projective(c));
                let ok = end_projective || t.mesh.start.is_some_and(|a| sy.contains(&a));
                if !ok {
                    violations.push(format!("item 3: tangent {} unexplained", ar.mesh_json(&t.mesh)));
                }
            }
            for mesh in &ar.meshes {
                if let Some(a) = mesh.start {
                    let in_terms = sx.contains(&a) || sy.contains(&a) || sz.contains(&a);
                    if !in_terms && mesh_defect(h, mesh) != 0 {
                        violations.push(format!("item 4: mesh starting at {} is not additive", name(a)));
                    }
                }
            }
        }
    }
    Ok(TheoremVerdict {
        pass: violations.is_empty(),
        violations,
    })
}

/// Hammock and theorem verdict for a right exact sequence.
pub fn verify_covariant(seq: &RightExactSeq, ar: &ARQuiver) -> Result<(HammockFunction, TheoremVerdict)> {
    let h = covariant_hammock(seq, ar)?;
    let verdict = verify_theorem_isolated(seq.x(), seq.y(), &seq.z, &h, ar)?;
    Ok((h, verdict))
}

/// Hammock and dual theorem verdict for a left exact sequence.
pub fn verify_contravariant(seq: &LeftExactSeq, ar: &ARQuiver) -> Result<(HammockFunction, TheoremVerdict)> {
    let h = contravariant_hammock(seq, ar)?;
    let verdict = verify_theorem_isolated(&seq.x, seq.y(), seq.z(), &h, ar)?;
    Ok((h, verdict))
}

/// `Hom(X, M) / (Hom(Y, M) ∘ u)` with projection and section in
/// `Hom(X, M)` coordinates.
struct CokOfPrecompose {
    hx: HomSpace,
    projection: Matrix,
    section: Matrix,
}

impl CokOfPrecompose {
    fn new(u: &Morphism, m: &Arc<Representation>) -> Self {
        let hx = hom_space(u.source(), m);
        let hy = hom_space(u.target(), m);
        let vectors: Vec<Vec<u64>> = hy.basis().iter().map(|b| hx.coords(&b.after(u))).collect();
        let qd = Subspace::span(u.source().field(), hx.dim(), &vectors).quotient_data();
        CokOfPrecompose {
            hx,
            projection: qd.projection,
            section: qd.section,
        }
    }

    fn dim(&self) -> usize {
        self.projection.rows()
    }

    fn lift(&self, j: usize) -> Morphism {
        self.hx.element(&self.section.column(j))
    }

    fn class_of(&self, f: &Morphism) -> Vec<u64> {
        self.projection.mul_vec(&self.hx.coords(f))
    }
}

/// `Hom(M, Z) / (v ∘ Hom(M, Y))` in `Hom(M, Z)` coordinates.
struct CokOfPostcompose {
    hz: HomSpace,
    projection: Matrix,
    section: Matrix,
}

impl CokOfPostcompose {
    fn new(v: &Morphism, m: &Arc<Representation>) -> Self {
        let hz = hom_space(m, v.target());
        let hy = hom_space(m, v.source());
        let vectors: Vec<Vec<u64>> = hy.basis().iter().map(|f| hz.coords(&v.after(f))).collect();
        let qd = Subspace::span(v.source().field(), hz.dim(), &vectors).quotient_data();
        CokOfPostcompose {
            hz,
            projection: qd.projection,
            section: qd.section,
        }
    }

    fn dim(&self) -> usize {
        self.projection.rows()
    }

    fn lift(&self, j: usize) -> Morphism {
        self.hz.element(&self.section.column(j))
    }

    fn class_of(&self, f: &Morphism) -> Vec<u64> {
        self.projection.mul_vec(&self.hz.coords(f))
    }
}

/// Right non-degeneracy of `Hom(M, τZ) × Cok(u, M) -> Cok(u, τZ)` for a
/// non-split short exact sequence `0 -> X -u-> Y -> Z -> 0` with `Z`
/// indecomposable.
pub fn verify_factoring(seq: &RightExactSeq, m: &Arc<Representation>, ar: &ARQuiver) -> Result<bool> {
    if !seq.u.is_mono() {
        return Err(Error::PreconditionViolated("u must be a monomorphism".into()));
    }
    let z = ar
        .catalog
        .identify(&seq.z)
        .ok_or_else(|| Error::PreconditionViolated("Z must be indecomposable".into()))?;
    let tz = ar
        .tau[z]
        .ok_or_else(|| Error::PreconditionViolated("Z must not be projective".into()))?;
    let tau_z = ar.rep(tz);
    let target = CokOfPrecompose::new(&seq.u, tau_z);
    if target.dim() == 0 {
        return Err(Error::PreconditionViolated("the sequence splits".into()));
    }
    let source = CokOfPrecompose::new(&seq.u, m);
    if source.dim() == 0 {
        return Ok(true);
    }
    let g_basis = hom_space(m, tau_z).basis();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in &g_basis {
        let images: Vec<Vec<u64>> = (0..source.dim())
            .map(|j| target.class_of(&g.after(&source.lift(j))))
            .collect();
        for r in 0..target.dim() {
            rows.push(images.iter().map(|col| col[r]).collect());
        }
    }
    let field = m.field();
    let mut pairing = Matrix::zeros(field, rows.len(), source.dim());
    for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            pairing.set(r, c, x);
        }
    }
    Ok(pairing.rank() == source.dim())
}

/// Left non-degeneracy of `Cok(M, v) × Hom(τ⁻¹X, M) -> Cok(τ⁻¹X, v)` for a
/// non-split short exact sequence `0 -> X -> Y -v-> Z -> 0` with `X`
/// indecomposable.
pub fn verify_factoring_dual(seq: &LeftExactSeq, m: &Arc<Representation>, ar: &ARQuiver) -> Result<bool> {
    if !seq.v.is_epi() {
        return Err(Error::PreconditionViolated("v must be an epimorphism".into()));
    }
    let x = ar
        .catalog
        .identify(&seq.x)
        .ok_or_else(|| Error::PreconditionViolated("X must be indecomposable".into()))?;
    let tx = ar
        .tau_inverse(x)
        .ok_or_else(|| Error::PreconditionViolated("X must not be injective".into()))?;
    let tau_inv_x = ar.rep(tx);
    let target = CokOfPostcompose::new(&seq.v, tau_inv_x);
    if target.dim() == 0 {
        return Err(Error::PreconditionViolated("the sequence splits".into()));
    }
    let source = CokOfPostcompose::new(&seq.v, m);
    if source.dim() == 0 {
        return Ok(true);
    }
    let g_basis = hom_space(tau_inv_x, m).basis();
    let field = m.field();
    let mut pairing = Matrix::zeros(field, g_basis.len() * target.dim(), source.dim());
    for (gi, g) in g_basis.iter().enumerate() {
        for j in 0..source.dim() {
            let class = target.class_of(&source.lift(j).after(g));
            for (r, x) in class.into_iter().enumerate() {
                pairing.set(gi * target.dim() + r, j, x);
            }
        }
    }
    Ok(pairing.rank() == source.dim())
}

/// `μ_C(M)` from the mesh ending at `C`:
/// `(hom(M,C) − hom(M,B) + hom(M,τC)) / d_C`, with `τC` replaced by the
/// kernel of the sink map when `C` is projective.
pub fn multiplicity_via_mesh(c: usize, m: &Arc<Representation>, ar: &ARQuiver) -> Result<usize> {
    let mid: i64 = ar
        .predecessors(c)
        .into_iter()
        .map(|(b, k)| (k * hom_dim(m, ar.rep(b))) as i64)
        .sum();
    let left = match ar.tau[c] {
        Some(a) => hom_dim(m, ar.rep(a)) as i64,
        None => hom_dim(m, &ar.sink_kernel(c)?) as i64,
    };
    let numerator = hom_dim(m, ar.rep(c)) as i64 - mid + left;
    let d = ar.endo_top[c];
    if numerator < 0 || numerator % d as i64 != 0 {
        return Err(Error::NonIntegralMultiplicity {
            label: ar.label(c).to_string(),
            numerator,
            denominator: d,
        });
    }
    Ok((numerator / d as i64) as usize)
}

/// Full JSON report: values, classification and theorem verdict.
pub fn report_json(h: &HammockFunction, report: &HammockReport, verdict: &TheoremVerdict, ar: &ARQuiver) -> Value {
    let mut out = report.to_json(ar);
    out["values"] = h.values_json(ar);
    out["variance"] = json!(h.variance.name());
    out["theorem1"] = verdict.to_json();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::build_ar_quiver;
    use crate::catalogs::{e6_quiver, nilpotent_catalog, projective_path_map, build_catalog};
    use crate::exactla::FieldPrime;
    use crate::repcore::direct_sum;

    fn e6() -> ARQuiver {
        build_ar_quiver(Arc::new(build_catalog("e6", FieldPrime::default(), 8).unwrap())).unwrap()
    }

    fn nilp4() -> ARQuiver {
        build_ar_quiver(Arc::new(nilpotent_catalog(4, FieldPrime::default()))).unwrap()
    }

    #[test]
    fn intro_sequence_values() {
        let ar = e6();
        let alpha = projective_path_map(&e6_quiver(), FieldPrime::default(), &[0]).unwrap();
        let seq = RightExactSeq::from_morphism(alpha, &ar.catalog);
        let h = covariant_hammock(&seq, &ar).unwrap();
        assert_eq!(h.value(ar.index_of("010000").unwrap()), 1);
        assert_eq!(h.value(ar.index_of("110000").unwrap()), 0);
        let (_, verdict) = verify_covariant(&seq, &ar).unwrap();
        assert!(verdict.pass, "{:?}", verdict.violations);
    }

    #[test]
    fn ar_sequence_hammocks_have_one_vertex() {
        let ar = nilp4();
        for c in 0..3 {
            let s = ar.ar_sequence(c).unwrap();
            let h = covariant_hammock(&RightExactSeq::from_ar(&s), &ar).unwrap();
            assert_eq!(h.support(), vec![s.start]);
            let h = contravariant_hammock(&LeftExactSeq::from_ar(&s), &ar).unwrap();
            assert_eq!(h.support(), vec![s.end]);
            let r = classify(&h, &ar);
            assert_eq!(r.isolated_sinks, vec![s.end]);
            assert_eq!(r.isolated_sources, vec![s.end]);
        }
    }

    #[test]
    fn identity_sequences_give_zero() {
        let ar = nilp4();
        let id = Morphism::identity(ar.rep(2).clone());
        let h = covariant_hammock(&RightExactSeq::from_morphism(id.clone(), &ar.catalog), &ar).unwrap();
        assert!(h.support().is_empty());
        let h = contravariant_hammock(&LeftExactSeq::from_morphism(id), &ar).unwrap();
        assert!(h.support().is_empty());
        assert_eq!(classify(&h, &ar), HammockReport::default());
    }

    #[test]
    fn factoring_on_nilpotent_ar_sequence() {
        let ar = nilp4();
        let s = RightExactSeq::from_ar(&ar.ar_sequence(1).unwrap());
        for m in 0..4 {
            assert!(verify_factoring(&s, ar.rep(m), &ar).unwrap());
        }
        let d = LeftExactSeq::from_ar(&ar.ar_sequence(1).unwrap());
        for m in 0..4 {
            assert!(verify_factoring_dual(&d, ar.rep(m), &ar).unwrap());
        }
    }

    #[test]
    fn multiplicities_from_meshes() {
        let ar = nilp4();
        let f = FieldPrime::default();
        let m = direct_sum(&ar.catalog.quiver, f, &[ar.rep(2).clone(), ar.rep(1).clone(), ar.rep(0).clone()]);
        assert_eq!(multiplicity_via_mesh(1, &m, &ar).unwrap(), 1);
        assert_eq!(multiplicity_via_mesh(3, &m, &ar).unwrap(), 0);
        let cc = direct_sum(&ar.catalog.quiver, f, &[ar.rep(1).clone(), ar.rep(1).clone()]);
        assert_eq!(multiplicity_via_mesh(1, &cc, &ar).unwrap(), 2);
        assert_eq!(multiplicity_via_mesh(1, ar.rep(1), &ar).unwrap(), 1);
    }

    #[test]
    fn non_exact_input_is_rejected() {
        let ar = nilp4();
        let u = Morphism::identity(ar.rep(1).clone());
        let bogus = Morphism::identity(ar.rep(1).clone());
        assert!(RightExactSeq::new(u, bogus, &ar.catalog).is_err());
    }
}
