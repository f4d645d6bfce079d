//! Auslander-Reiten quivers of finite catalogs: irreducible-map
//! multiplicities from `rad / rad²`, the translation τ by the single-vertex
//! defect test, meshes, and explicit almost split sequences.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::catalogs::CategoryCatalog;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::repcore::{
    direct_sum_with_maps, end_local_data, hom_dim, hom_space, kernel_rep, morphism_from_sum,
    morphism_into_sum, HomSpace, Morphism, Representation,
};

/// Hom spaces between catalog objects together with their radical layers.
#[derive(Clone, Debug)]
pub struct RadicalData {
    /// `hom[x][y]` is `Hom(X, Y)`.
    pub hom: Vec<Vec<HomSpace>>,
    /// Radical elements, flattened in the ambient coordinates of `hom[x][y]`.
    pub rad: Vec<Vec<Vec<Vec<u64>>>>,
    pub rad2: Vec<Vec<Subspace>>,
    pub endo_top: Vec<usize>,
}

impl RadicalData {
    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom[x][y].dim()
    }

    pub fn rad_dim(&self, x: usize, y: usize) -> usize {
        self.rad[x][y].len()
    }

    pub fn rad2_dim(&self, x: usize, y: usize) -> usize {
        self.rad2[x][y].dim()
    }

    pub fn arrow_mult(&self, x: usize, y: usize) -> usize {
        self.rad_dim(x, y) - self.rad2_dim(x, y)
    }

    /// Radical elements `X -> Y` whose classes form a basis of `rad / rad²`.
    pub fn irreducible_maps(&self, x: usize, y: usize) -> Vec<Morphism> {
        let space = &self.hom[x][y];
        let mut acc = self.rad2[x][y].clone();
        let mut out = Vec::new();
        for v in &self.rad[x][y] {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(space.subspace().field(), space.ambient_dim(), &[v.clone()]));
                out.push(space.from_flat(v));
            }
        }
        out
    }
}

/// `rad(X, Y)` and `rad²(X, Y)` for all ordered pairs of catalog objects.
pub fn radical_dims(catalog: &CategoryCatalog) -> Result<RadicalData> {
    let n = catalog.len();
    let reps: Vec<&Arc<Representation>> = catalog.objects.iter().map(|o| &o.rep).collect();
    let hom: Vec<Vec<HomSpace>> = (0..n)
        .map(|x| (0..n).map(|y| hom_space(reps[x], reps[y])).collect())
        .collect();
    let mut endo_top = Vec::with_capacity(n);
    let mut rad: Vec<Vec<Vec<Vec<u64>>>> = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            if x == y {
                let data = end_local_data(reps[x])?;
                endo_top.push(data.top_dim);
                row.push(data.radical_vectors());
            } else {
                row.push(hom[x][y].subspace().basis().to_vec());
            }
        }
        rad.push(row);
    }
    let morphisms: Vec<Vec<Vec<Morphism>>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| rad[x][y].iter().map(|v| hom[x][y].from_flat(v)).collect())
                .collect()
        })
        .collect();
    let mut rad2 = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let space = &hom[x][y];
            let mut products = Vec::new();
            for z in 0..n {
                for f in &morphisms[x][z] {
                    for g in &morphisms[z][y] {
                        let p = g.after(f);
                        if !p.is_zero() {
                            products.push(p.flatten());
                        }
                    }
                }
            }
            row.push(Subspace::span(catalog.field, space.ambient_dim(), &products));
        }
        rad2.push(row);
    }
    Ok(RadicalData {
        hom,
        rad,
        rad2,
        endo_top,
    })
}

/// `start -> ⊕ middles -> end`; `start` is absent for a projective end and
/// `end` is absent for an injective start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mesh {
    pub start: Option<usize>,
    /// `(object index, multiplicity)` in index order.
    pub middles: Vec<(usize, usize)>,
    pub end: Option<usize>,
}

impl Mesh {
    pub fn is_complete(&self) -> bool {
        self.start.is_some() && self.end.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub catalog: Arc<CategoryCatalog>,
    pub radical: RadicalData,
    /// `arrow_mult[x][y] = dim rad(X,Y) / rad²(X,Y)`.
    pub arrow_mult: Vec<Vec<usize>>,
    pub tau: Vec<Option<usize>>,
    pub meshes: Vec<Mesh>,
    pub endo_top: Vec<usize>,
}

impl ARQuiver {
    pub fn len(&self) -> usize {
        self.catalog.len()
    }

    pub fn is_empty(&self) -> bool {
        self.catalog.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.catalog.objects[i].label
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.catalog
            .index_of(label)
            .ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn rep(&self, i: usize) -> &Arc<Representation> {
        self.catalog.rep(i)
    }

    pub fn is_projective(&self, i: usize) -> bool {
        self.catalog.objects[i].projective
    }

    pub fn is_injective(&self, i: usize) -> bool {
        self.catalog.objects[i].injective
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.radical.hom_dim(x, y)
    }

    /// `τ^{-1}`, the inverse translation.
    pub fn tau_inverse(&self, a: usize) -> Option<usize> {
        self.tau.iter().position(|&t| t == Some(a))
    }

    pub fn tau_of(&self, c: usize) -> Result<usize> {
        self.tau[c].ok_or_else(|| Error::TauUndefined(self.label(c).to_string()))
    }

    /// Predecessors `(X, mult)` with an arrow `X -> c`.
    pub fn predecessors(&self, c: usize) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&x| self.arrow_mult[x][c] > 0)
            .map(|x| (x, self.arrow_mult[x][c]))
            .collect()
    }

    /// Successors `(Y, mult)` with an arrow `a -> Y`.
    pub fn successors(&self, a: usize) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&y| self.arrow_mult[a][y] > 0)
            .map(|y| (y, self.arrow_mult[a][y]))
            .collect()
    }

    /// The AR mesh ending at `c`, if `c` is not projective.
    pub fn mesh_ending_at(&self, c: usize) -> Option<&Mesh> {
        self.meshes
            .iter()
            .find(|m| m.end == Some(c) && m.start.is_some())
    }

    /// Defect-identity failures over all AR meshes, covariant and
    /// contravariant; empty when Γ is consistent.
    pub fn defect_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for mesh in self.meshes.iter().filter(|m| m.is_complete()) {
            let (a, c) = (mesh.start.unwrap(), mesh.end.unwrap());
            for m in 0..self.len() {
                let mid: i64 = mesh
                    .middles
                    .iter()
                    .map(|&(b, k)| (k * self.hom_dim(b, m)) as i64)
                    .sum();
                let cov = self.hom_dim(a, m) as i64 - mid + self.hom_dim(c, m) as i64;
                let want = if m == a { self.endo_top[a] as i64 } else { 0 };
                if cov != want {
                    out.push(format!("({}, {}) at {}: {cov} != {want}", self.label(a), self.label(c), self.label(m)));
                }
                let mid: i64 = mesh
                    .middles
                    .iter()
                    .map(|&(b, k)| (k * self.hom_dim(m, b)) as i64)
                    .sum();
                let contra = self.hom_dim(m, c) as i64 - mid + self.hom_dim(m, a) as i64;
                let want = if m == c { self.endo_top[c] as i64 } else { 0 };
                if contra != want {
                    out.push(format!("dual ({}, {}) at {}: {contra} != {want}", self.label(a), self.label(c), self.label(m)));
                }
            }
        }
        out
    }

    /// Structural invariant failures: τ bijective onto non-injectives, mesh
    /// symmetry, additivity of dimension vectors.
    pub fn structure_violations(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for c in 0..n {
            if self.tau[c].is_some() == self.is_projective(c) {
                out.push(format!("tau domain wrong at {}", self.label(c)));
            }
        }
        let mut image: Vec<usize> = self.tau.iter().flatten().copied().collect();
        image.sort_unstable();
        let before = image.len();
        image.dedup();
        if image.len() != before {
            out.push("tau is not injective".into());
        }
        let non_injective: Vec<usize> = (0..n).filter(|&a| !self.is_injective(a)).collect();
        if image != non_injective {
            out.push("tau image differs from the non-injectives".into());
        }
        for y in 0..n {
            if let Some(t) = self.tau[y] {
                for x in 0..n {
                    if self.arrow_mult[x][y] != self.arrow_mult[t][x] {
                        out.push(format!("mesh symmetry fails at {} -> {}", self.label(x), self.label(y)));
                    }
                }
            }
        }
        for mesh in self.meshes.iter().filter(|m| m.is_complete()) {
            let (a, c) = (mesh.start.unwrap(), mesh.end.unwrap());
            let lhs: Vec<usize> = self
                .rep(a)
                .dims()
                .iter()
                .zip(self.rep(c).dims())
                .map(|(x, y)| x + y)
                .collect();
            let mut rhs = vec![0usize; lhs.len()];
            for &(b, k) in &mesh.middles {
                for (r, d) in rhs.iter_mut().zip(self.rep(b).dims()) {
                    *r += k * d;
                }
            }
            if lhs != rhs {
                out.push(format!("mesh ending at {} is not additive", self.label(c)));
            }
        }
        for x in 0..n {
            if self.arrow_mult[x][x] != 0 {
                out.push(format!("loop at {}", self.label(x)));
            }
        }
        out
    }

    /// Source map `A -> ⊕ B^{mult}` built from `rad / rad²` representatives.
    pub fn source_map(&self, a: usize) -> Result<Morphism> {
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for (b, _) in self.successors(a) {
            for f in self.radical.irreducible_maps(a, b) {
                parts.push(self.rep(b).clone());
                maps.push(f);
            }
        }
        if parts.is_empty() {
            return Ok(Morphism::zero(
                self.rep(a).clone(),
                Arc::new(Representation::zero(self.catalog.quiver.clone(), self.catalog.field)),
            ));
        }
        let sum = direct_sum_with_maps(&self.catalog.quiver, self.catalog.field, &parts);
        Ok(morphism_into_sum(&sum, &maps))
    }

    /// Sink map `⊕ B^{mult} -> C` built from `rad / rad²` representatives.
    pub fn sink_map(&self, c: usize) -> Result<Morphism> {
        let mut parts = Vec::new();
        let mut maps = Vec::new();
        for (b, _) in self.predecessors(c) {
            for f in self.radical.irreducible_maps(b, c) {
                parts.push(self.rep(b).clone());
                maps.push(f);
            }
        }
        if parts.is_empty() {
            return Ok(Morphism::zero(
                Arc::new(Representation::zero(self.catalog.quiver.clone(), self.catalog.field)),
                self.rep(c).clone(),
            ));
        }
        let sum = direct_sum_with_maps(&self.catalog.quiver, self.catalog.field, &parts);
        Ok(morphism_from_sum(&sum, &maps))
    }

    /// The almost split sequence `τC -u-> B -v-> C -> 0` ending at `c`, with
    /// `u` the source map of `τC` and `v` its cokernel in the category.
    pub fn ar_sequence(&self, c: usize) -> Result<ArSequence> {
        let a = self.tau_of(c)?;
        let u = self.source_map(a)?;
        let (z, v) = self.catalog.cokernel(&u);
        match self.catalog.identify(&z) {
            Some(i) if i == c => Ok(ArSequence { start: a, end: c, u, v }),
            _ => Err(Error::NotExact(format!(
                "cokernel of the source map at {} is not {}",
                self.label(a),
                self.label(c)
            ))),
        }
    }

    /// Kernel of the sink map into `c` (zero unless the sink map fails to be
    /// mono, as for projectives of `S(n)`).
    pub fn sink_kernel(&self, c: usize) -> Result<Arc<Representation>> {
        Ok(kernel_rep(&self.sink_map(c)?).0)
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = (0..self.len())
            .map(|i| {
                json!({
                    "label": self.label(i),
                    "dims": self.rep(i).dims(),
                    "projective": self.is_projective(i),
                    "injective": self.is_injective(i),
                    "endo_top": self.endo_top[i],
                })
            })
            .collect();
        let mut arrows = Vec::new();
        for x in 0..self.len() {
            for (y, m) in self.successors(x) {
                arrows.push(json!({"from": self.label(x), "to": self.label(y), "mult": m}));
            }
        }
        let tau: serde_json::Map<String, Value> = (0..self.len())
            .filter_map(|c| self.tau[c].map(|a| (self.label(c).to_string(), json!(self.label(a)))))
            .collect();
        let meshes: Vec<Value> = self.meshes.iter().map(|m| self.mesh_json(m)).collect();
        json!({
            "category": self.catalog.id,
            "vertices": vertices,
            "arrows": arrows,
            "tau": tau,
            "meshes": meshes,
        })
    }

    pub fn mesh_json(&self, m: &Mesh) -> Value {
        let middles: Vec<Value> = m
            .middles
            .iter()
            .flat_map(|&(b, k)| std::iter::repeat(json!(self.label(b))).take(k))
            .collect();
        json!({
            "start": m.start.map(|a| self.label(a).to_string()),
            "middles": middles,
            "end": m.end.map(|c| self.label(c).to_string()),
        })
    }
}

/// An almost split sequence `start -u-> middle -v-> end -> 0`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub start: usize,
    pub end: usize,
    pub u: Morphism,
    pub v: Morphism,
}

/// τC: the unique catalog object `A` with
/// `hom(A,M) − hom(B,M) + hom(C,M) = d_A·[M ≅ A]` for every catalog `M`,
/// where `B = ⊕ X^{arrow_mult(X,C)}`.
pub fn compute_tau(
    c: usize,
    catalog: &CategoryCatalog,
    radical: &RadicalData,
    arrow_mult: &[Vec<usize>],
) -> Result<usize> {
    let label = &catalog.objects[c].label;
    if catalog.objects[c].projective {
        return Err(Error::TauUndefined(label.clone()));
    }
    let n = catalog.len();
    let middle: Vec<i64> = (0..n)
        .map(|m| {
            (0..n)
                .map(|x| (arrow_mult[x][c] * radical.hom_dim(x, m)) as i64)
                .sum()
        })
        .collect();
    let passing: Vec<usize> = (0..n)
        .filter(|&a| {
            (0..n).all(|m| {
                let defect =
                    radical.hom_dim(a, m) as i64 - middle[m] + radical.hom_dim(c, m) as i64;
                defect == if m == a { radical.endo_top[a] as i64 } else { 0 }
            })
        })
        .collect();
    match passing.as_slice() {
        [] => Err(Error::TauNotFound(label.clone())),
        [a] => Ok(*a),
        many => Err(Error::TauAmbiguous(
            label.clone(),
            many.iter().map(|&a| catalog.objects[a].label.clone()).collect(),
        )),
    }
}

pub fn build_ar_quiver(catalog: Arc<CategoryCatalog>) -> Result<ARQuiver> {
    let radical = radical_dims(&catalog)?;
    let n = catalog.len();
    let arrow_mult: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| radical.arrow_mult(x, y)).collect())
        .collect();
    let mut tau = vec![None; n];
    for (c, slot) in tau.iter_mut().enumerate() {
        if !catalog.objects[c].projective {
            *slot = Some(compute_tau(c, &catalog, &radical, &arrow_mult)?);
        }
    }
    let middles_into = |c: usize| -> Vec<(usize, usize)> {
        (0..n)
            .filter(|&x| arrow_mult[x][c] > 0)
            .map(|x| (x, arrow_mult[x][c]))
            .collect()
    };
    let mut meshes = Vec::new();
    for c in 0..n {
        meshes.push(Mesh {
            start: tau[c],
            middles: middles_into(c),
            end: Some(c),
        });
    }
    for a in 0..n {
        if catalog.objects[a].injective {
            meshes.push(Mesh {
                start: Some(a),
                middles: (0..n)
                    .filter(|&y| arrow_mult[a][y] > 0)
                    .map(|y| (y, arrow_mult[a][y]))
                    .collect(),
                end: None,
            });
        }
    }
    let endo_top = radical.endo_top.clone();
    Ok(ARQuiver {
        catalog,
        radical,
        arrow_mult,
        tau,
        meshes,
        endo_top,
    })
}

/// `hom(X, M)` for a catalog object and an arbitrary representation.
pub fn hom_from(ar: &ARQuiver, x: usize, m: &Arc<Representation>) -> usize {
    hom_dim(ar.rep(x), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogs::{dynkin_catalog, linear_quiver, nilpotent_catalog};
    use crate::exactla::FieldPrime;

    fn nilp4() -> ARQuiver {
        build_ar_quiver(Arc::new(nilpotent_catalog(4, FieldPrime::default()))).unwrap()
    }

    #[test]
    fn nilpotent_ladder() {
        let ar = nilp4();
        let p = |m: usize| m - 1;
        assert_eq!(ar.arrow_mult[p(3)][p(4)], 1);
        assert_eq!(ar.arrow_mult[p(4)][p(3)], 1);
        assert_eq!(ar.arrow_mult[p(1)][p(3)], 0);
        for m in 1..=3 {
            assert_eq!(ar.tau[p(m)], Some(p(m)));
        }
        assert_eq!(ar.tau[p(4)], None);
        assert!(ar.structure_violations().is_empty());
        assert!(ar.defect_violations().is_empty());
    }

    #[test]
    fn tau_of_projective_is_undefined() {
        let ar = nilp4();
        assert!(matches!(ar.tau_of(3), Err(Error::TauUndefined(_))));
        assert!(matches!(
            compute_tau(3, &ar.catalog, &ar.radical, &ar.arrow_mult),
            Err(Error::TauUndefined(_))
        ));
    }

    #[test]
    fn a2_arrows() {
        let cat = Arc::new(dynkin_catalog(&linear_quiver(2), FieldPrime::default()).unwrap());
        let ar = build_ar_quiver(cat).unwrap();
        let p1 = ar.index_of("11").unwrap();
        let s1 = ar.index_of("10").unwrap();
        let s2 = ar.index_of("01").unwrap();
        assert_eq!(ar.arrow_mult[p1][s1], 1);
        assert_eq!(ar.arrow_mult[s2][p1], 1);
        assert_eq!(ar.tau[s1], Some(s2));
        assert!(ar.structure_violations().is_empty());
    }

    #[test]
    fn nilpotent_ar_sequence_and_sink_kernel() {
        let ar = nilp4();
        let seq = ar.ar_sequence(1).unwrap();
        assert_eq!(seq.u.target().dims(), &[4]);
        assert!(seq.u.is_mono());
        assert!(ar.sink_kernel(3).unwrap().is_zero());
    }
}
