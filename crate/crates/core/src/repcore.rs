//! Quivers with relations, their finite-dimensional representations over
//! `F_p`, morphism spaces, and the Krull-Schmidt machinery (endomorphism
//! radicals, isomorphism tests, decomposition into indecomposables).
//!
//! Conventions: the arrow `a: i -> j` carries a matrix `M_a` of shape
//! `dims[j] x dims[i]`; a path `a_1 a_2 ... a_s` is written left to right and
//! acts as `M_{a_s} ... M_{a_1}`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix, Subspace};

mod json;

pub use json::{morphism_from_json, morphism_to_json, rep_from_json, rep_to_json};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A formal linear combination of parallel paths; each path lists arrow indices
/// in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    /// Registry id such as `e6` or `sub:4`; empty for ad hoc quivers.
    pub name: String,
    pub vertex_count: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl Quiver {
    pub fn new(
        name: impl Into<String>,
        vertex_count: usize,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let q = Quiver {
            name: name.into(),
            vertex_count,
            arrows,
            relations,
        };
        for (i, a) in q.arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(Error::Shape(format!("arrow {} leaves the vertex range", a.id)));
            }
            if q.arrows[..i].iter().any(|b| b.id == a.id) {
                return Err(Error::Shape(format!("duplicate arrow id {}", a.id)));
            }
        }
        for (r, rel) in q.relations.iter().enumerate() {
            let mut ends = None;
            for (_, path) in &rel.terms {
                let e = q
                    .path_ends(path)
                    .ok_or_else(|| Error::BadPath(format!("relation {r} has a broken path")))?;
                if *ends.get_or_insert(e) != e {
                    return Err(Error::BadPath(format!("relation {r} mixes non-parallel paths")));
                }
            }
        }
        Ok(q)
    }

    /// Quiver without relations from `(id, source, target)` triples.
    pub fn from_arrows(name: &str, vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Self {
        let arrows = arrows
            .iter()
            .map(|&(id, s, t)| Arrow {
                id: id.to_string(),
                source: s,
                target: t,
            })
            .collect();
        Quiver::new(name, vertex_count, arrows, Vec::new()).expect("well-formed quiver")
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// `(source, target)` of a nonempty composable path.
    pub fn path_ends(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    /// Parses a dot-separated list of arrow ids, e.g. `alpha` or `a.b`.
    pub fn parse_path(&self, text: &str) -> Result<Vec<usize>> {
        let path: Vec<usize> = text
            .split('.')
            .map(|id| {
                self.arrow_index(id.trim())
                    .ok_or_else(|| Error::BadPath(format!("unknown arrow {id}")))
            })
            .collect::<Result<_>>()?;
        if self.path_ends(&path).is_none() {
            return Err(Error::BadPath(format!("{text} is not composable")));
        }
        Ok(path)
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.vertex_count];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == self.vertex_count
    }

    /// All paths (as arrow index lists) starting at `vertex`, including the
    /// trivial path. Only meaningful for acyclic quivers.
    pub fn paths_from(&self, vertex: usize) -> Vec<(Vec<usize>, usize)> {
        assert!(self.is_acyclic(), "paths_from needs an acyclic quiver");
        let mut out = vec![(Vec::new(), vertex)];
        let mut i = 0;
        while i < out.len() {
            let (path, end) = out[i].clone();
            for (idx, a) in self.arrows.iter().enumerate() {
                if a.source == end {
                    let mut p = path.clone();
                    p.push(idx);
                    out.push((p, a.target));
                }
            }
            i += 1;
        }
        out
    }

    /// All paths ending at `vertex`, with their start vertices.
    pub fn paths_to(&self, vertex: usize) -> Vec<(Vec<usize>, usize)> {
        (0..self.vertex_count)
            .flat_map(|s| self.paths_from(s).into_iter().map(move |(p, e)| (p, s, e)))
            .filter(|&(_, _, e)| e == vertex)
            .map(|(p, s, _)| (p, s))
            .collect()
    }
}

/// Dimension vector of a representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Digit string such as `011110`; entries above 9 are bracketed.
    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|&d| {
                if d < 10 {
                    d.to_string()
                } else {
                    format!("[{d}]")
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    quiver: Arc<Quiver>,
    field: FieldPrime,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    /// Validates shapes and relations.
    pub fn new(
        quiver: Arc<Quiver>,
        field: FieldPrime,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count || maps.len() != quiver.arrows.len() {
            return Err(Error::Shape("dims or maps do not match the quiver".into()));
        }
        for (a, m) in quiver.arrows.iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] || m.field() != field {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.id,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation {
            quiver,
            field,
            dims,
            maps,
        };
        for r in 0..rep.quiver.relations.len() {
            if !rep.evaluate_relation(r).is_zero() {
                return Err(Error::RelationViolated(r));
            }
        }
        Ok(rep)
    }

    pub fn zero(quiver: Arc<Quiver>, field: FieldPrime) -> Self {
        let dims = vec![0; quiver.vertex_count];
        let maps = quiver
            .arrows
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    /// One-dimensional at `vertex`, zero elsewhere. Needs no loop at `vertex`
    /// carrying a nonzero relation-free action, which holds for nilpotent loops.
    pub fn simple(quiver: Arc<Quiver>, field: FieldPrime, vertex: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count];
        dims[vertex] = 1;
        let maps = quiver
            .arrows
            .iter()
            .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
            .collect();
        Representation {
            quiver,
            field,
            dims,
            maps,
        }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector(self.dims.clone())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// `M_path`, the composite along a nonempty path.
    pub fn path_map(&self, path: &[usize]) -> Matrix {
        let (s, _) = self.quiver.path_ends(path).expect("composable path");
        let mut acc = Matrix::identity(self.field, self.dims[s]);
        for &a in path {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    pub fn evaluate_relation(&self, r: usize) -> Matrix {
        let rel = &self.quiver.relations[r];
        let (s, t) = self
            .quiver
            .path_ends(&rel.terms[0].1)
            .expect("validated relation");
        let mut acc = Matrix::zeros(self.field, self.dims[t], self.dims[s]);
        for (c, path) in &rel.terms {
            acc = acc.add(&self.path_map(path).scale(self.field.reduce(*c)));
        }
        acc
    }

    fn same_quiver(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver
    }

    /// Flattened offsets for the component matrices of `Hom(self, target)`.
    fn hom_layout(&self, target: &Representation) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        for v in 0..self.dims.len() {
            offsets.push(acc);
            acc += target.dims[v] * self.dims[v];
        }
        offsets.push(acc);
        offsets
    }
}

/// A morphism of representations, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Arc<Representation>,
    target: Arc<Representation>,
    components: Vec<Matrix>,
}

impl Morphism {
    /// Validates shapes and the intertwining condition.
    pub fn new(
        source: Arc<Representation>,
        target: Arc<Representation>,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        let m = Morphism::new_unchecked(source, target, components)?;
        if !m.is_intertwiner() {
            return Err(Error::Shape("components do not intertwine the arrow maps".into()));
        }
        Ok(m)
    }

    fn new_unchecked(
        source: Arc<Representation>,
        target: Arc<Representation>,
        components: Vec<Matrix>,
    ) -> Result<Self> {
        if !source.same_quiver(&target) || components.len() != source.dims.len() {
            return Err(Error::Shape("morphism between different quivers".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.rows() != target.dims[v] || c.cols() != source.dims[v] {
                return Err(Error::Shape(format!("component {v} has the wrong shape")));
            }
        }
        Ok(Morphism {
            source,
            target,
            components,
        })
    }

    fn is_intertwiner(&self) -> bool {
        self.source.quiver.arrows.iter().enumerate().all(|(i, a)| {
            self.target.maps[i].mul(&self.components[a.source])
                == self.components[a.target].mul(&self.source.maps[i])
        })
    }

    pub fn zero(source: Arc<Representation>, target: Arc<Representation>) -> Self {
        let components = (0..source.dims.len())
            .map(|v| Matrix::zeros(source.field, target.dims[v], source.dims[v]))
            .collect();
        Morphism {
            source,
            target,
            components,
        }
    }

    pub fn identity(rep: Arc<Representation>) -> Self {
        let components = rep
            .dims
            .iter()
            .map(|&d| Matrix::identity(rep.field, d))
            .collect();
        Morphism {
            source: rep.clone(),
            target: rep,
            components,
        }
    }

    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        assert_eq!(first.target.dims, self.source.dims, "composition mismatch");
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g.mul(f))
            .collect();
        Morphism {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components,
        }
    }

    pub fn scale(&self, s: u64) -> Morphism {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn is_mono(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    /// Same components, reinterpreted between representations with identical data.
    pub fn retarget(&self, source: Arc<Representation>, target: Arc<Representation>) -> Morphism {
        assert_eq!(source.dims, self.source.dims);
        assert_eq!(target.dims, self.target.dims);
        Morphism {
            source,
            target,
            components: self.components.clone(),
        }
    }

    /// Block-diagonal matrix acting on the total space.
    pub fn total_matrix(&self) -> Matrix {
        let blocks: Vec<&Matrix> = self.components.iter().collect();
        Matrix::block_diag(self.source.field, &blocks)
    }

    /// Flattened component entries, the ambient coordinates of `Hom(source, target)`.
    pub fn flatten(&self) -> Vec<u64> {
        self.components
            .iter()
            .flat_map(|c| c.data().iter().copied())
            .collect()
    }

    fn unflatten(source: &Arc<Representation>, target: &Arc<Representation>, v: &[u64]) -> Morphism {
        let field = source.field;
        let mut components = Vec::with_capacity(source.dims.len());
        let mut at = 0;
        for (d_src, d_tgt) in source.dims.iter().zip(&target.dims) {
            let len = d_src * d_tgt;
            components.push(Matrix::from_data(field, *d_tgt, *d_src, v[at..at + len].to_vec()));
            at += len;
        }
        Morphism {
            source: source.clone(),
            target: target.clone(),
            components,
        }
    }
}

/// `Hom(source, target)` with its canonical (echelon) basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<Representation>,
    target: Arc<Representation>,
    space: Subspace,
}

impl HomSpace {
    pub fn source(&self) -> &Arc<Representation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Representation> {
        &self.target
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient_dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis_vector(&self, i: usize) -> &[u64] {
        &self.space.basis()[i]
    }

    pub fn basis_morphism(&self, i: usize) -> Morphism {
        Morphism::unflatten(&self.source, &self.target, &self.space.basis()[i])
    }

    pub fn basis(&self) -> Vec<Morphism> {
        (0..self.dim()).map(|i| self.basis_morphism(i)).collect()
    }

    /// Linear combination of basis elements.
    pub fn element(&self, coeffs: &[u64]) -> Morphism {
        let f = self.source.field;
        let mut v = vec![0u64; self.ambient_dim()];
        for (c, b) in coeffs.iter().zip(self.space.basis()) {
            if *c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        Morphism::unflatten(&self.source, &self.target, &v)
    }

    /// Element with the given flattened ambient coordinates.
    pub fn from_flat(&self, v: &[u64]) -> Morphism {
        Morphism::unflatten(&self.source, &self.target, v)
    }

    /// Coordinates of a morphism in the canonical basis.
    pub fn coords(&self, m: &Morphism) -> Vec<u64> {
        self.space
            .coords(&m.flatten())
            .expect("morphism lies in the hom space")
    }
}

/// Canonical basis of `Hom(m, n)`: the solution space of
/// `N_a φ_i = φ_j M_a` for every arrow `a: i -> j`.
pub fn hom_space(m: &Arc<Representation>, n: &Arc<Representation>) -> HomSpace {
    assert!(m.same_quiver(n), "hom between representations of different quivers");
    let f = m.field;
    let offsets = m.hom_layout(n);
    let unknowns = *offsets.last().unwrap();
    let quiver = &m.quiver;
    let eq_count: usize = quiver
        .arrows
        .iter()
        .map(|a| n.dims[a.target] * m.dims[a.source])
        .sum();
    let mut system = Matrix::zeros(f, eq_count, unknowns);
    let mut row0 = 0;
    for (idx, a) in quiver.arrows.iter().enumerate() {
        let (i, j) = (a.source, a.target);
        let (mi, mj, ni, nj) = (m.dims[i], m.dims[j], n.dims[i], n.dims[j]);
        let na = &n.maps[idx];
        let ma = &m.maps[idx];
        // entry (r, c) of N_a φ_i - φ_j M_a, with φ_i of shape ni x mi, φ_j of shape nj x mj
        for r in 0..nj {
            for c in 0..mi {
                let row = row0 + r * mi + c;
                for k in 0..ni {
                    let coef = na.get(r, k);
                    if coef != 0 {
                        let col = offsets[i] + k * mi + c;
                        system.set(row, col, f.add(system.get(row, col), coef));
                    }
                }
                for k in 0..mj {
                    let coef = ma.get(k, c);
                    if coef != 0 {
                        let col = offsets[j] + r * mj + k;
                        system.set(row, col, f.sub(system.get(row, col), coef));
                    }
                }
            }
        }
        row0 += nj * mi;
    }
    HomSpace {
        source: m.clone(),
        target: n.clone(),
        space: system.nullspace(),
    }
}

/// Canonical basis of `Hom(m, n)` as morphisms.
pub fn hom_basis(m: &Arc<Representation>, n: &Arc<Representation>) -> Vec<Morphism> {
    hom_space(m, n).basis()
}

pub fn hom_dim(m: &Arc<Representation>, n: &Arc<Representation>) -> usize {
    hom_space(m, n).dim()
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Arc<Representation>,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(
    quiver: &Arc<Quiver>,
    field: FieldPrime,
    parts: &[Arc<Representation>],
) -> Arc<Representation> {
    direct_sum_with_maps(quiver, field, parts).sum
}

/// Block-diagonal direct sum together with canonical injections and projections.
pub fn direct_sum_with_maps(
    quiver: &Arc<Quiver>,
    field: FieldPrime,
    parts: &[Arc<Representation>],
) -> DirectSum {
    let nv = quiver.vertex_count;
    let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..quiver.arrows.len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
            if blocks.is_empty() {
                Matrix::zeros(field, 0, 0)
            } else {
                Matrix::block_diag(field, &blocks)
            }
        })
        .collect();
    let sum = Arc::new(Representation {
        quiver: quiver.clone(),
        field,
        dims: dims.clone(),
        maps,
    });
    let mut offsets = vec![0usize; nv];
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for part in parts {
        let mut inj = Vec::with_capacity(nv);
        let mut proj = Vec::with_capacity(nv);
        for v in 0..nv {
            let mut i = Matrix::zeros(field, dims[v], part.dims[v]);
            let mut p = Matrix::zeros(field, part.dims[v], dims[v]);
            for k in 0..part.dims[v] {
                i.set(offsets[v] + k, k, 1);
                p.set(k, offsets[v] + k, 1);
            }
            inj.push(i);
            proj.push(p);
            offsets[v] += part.dims[v];
        }
        injections.push(Morphism {
            source: part.clone(),
            target: sum.clone(),
            components: inj,
        });
        projections.push(Morphism {
            source: sum.clone(),
            target: part.clone(),
            components: proj,
        });
    }
    DirectSum {
        sum,
        injections,
        projections,
    }
}

/// `X -> ⊕ B_i` with components `maps[i]: X -> B_i`.
pub fn morphism_into_sum(sum: &DirectSum, maps: &[Morphism]) -> Morphism {
    assert_eq!(maps.len(), sum.injections.len());
    let source = maps
        .first()
        .map(|m| m.source.clone())
        .expect("at least one component");
    let mut acc = Morphism::zero(source, sum.sum.clone());
    for (inj, m) in sum.injections.iter().zip(maps) {
        acc = acc.add(&inj.after(m));
    }
    acc
}

/// `⊕ B_i -> Y` with components `maps[i]: B_i -> Y`.
pub fn morphism_from_sum(sum: &DirectSum, maps: &[Morphism]) -> Morphism {
    assert_eq!(maps.len(), sum.projections.len());
    let target = maps
        .first()
        .map(|m| m.target.clone())
        .expect("at least one component");
    let mut acc = Morphism::zero(sum.sum.clone(), target);
    for (proj, m) in sum.projections.iter().zip(maps) {
        acc = acc.add(&m.after(proj));
    }
    acc
}

/// Subrepresentation given by arrow-stable subspaces at each vertex, with its inclusion.
pub fn subrepresentation(
    m: &Arc<Representation>,
    subspaces: &[Subspace],
) -> Result<(Arc<Representation>, Morphism)> {
    let f = m.field;
    let dims: Vec<usize> = subspaces.iter().map(Subspace::dim).collect();
    let mut maps = Vec::with_capacity(m.maps.len());
    for (idx, a) in m.quiver.arrows.iter().enumerate() {
        let src = &subspaces[a.source];
        let tgt = &subspaces[a.target];
        let mut mat = Matrix::zeros(f, tgt.dim(), src.dim());
        for (c, b) in src.basis().iter().enumerate() {
            let image = m.maps[idx].mul_vec(b);
            let coords = tgt
                .coords(&image)
                .ok_or_else(|| Error::Shape(format!("subspaces are not stable under {}", a.id)))?;
            for (r, x) in coords.into_iter().enumerate() {
                mat.set(r, c, x);
            }
        }
        maps.push(mat);
    }
    let sub = Arc::new(Representation {
        quiver: m.quiver.clone(),
        field: f,
        dims,
        maps,
    });
    let incl = subspaces.iter().map(Subspace::basis_matrix).collect();
    let incl = Morphism::new_unchecked(sub.clone(), m.clone(), incl)?;
    Ok((sub, incl))
}

/// Quotient by arrow-stable subspaces, with the canonical projection.
pub fn quotient_representation(
    m: &Arc<Representation>,
    subspaces: &[Subspace],
) -> (Arc<Representation>, Morphism) {
    let qd: Vec<_> = subspaces.iter().map(Subspace::quotient_data).collect();
    let dims: Vec<usize> = qd.iter().map(|q| q.quotient_dim()).collect();
    let maps = m
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            qd[a.target]
                .projection
                .mul(&m.maps[idx])
                .mul(&qd[a.source].section)
        })
        .collect();
    let z = Arc::new(Representation {
        quiver: m.quiver.clone(),
        field: m.field,
        dims,
        maps,
    });
    let proj = Morphism {
        source: m.clone(),
        target: z.clone(),
        components: qd.into_iter().map(|q| q.projection).collect(),
    };
    (z, proj)
}

/// Image of `u` at every vertex.
pub fn image_subspaces(u: &Morphism) -> Vec<Subspace> {
    u.components.iter().map(Matrix::column_space).collect()
}

/// Cokernel `Y / Im u` with the canonical epimorphism `Y -> Z`.
pub fn cokernel_rep(u: &Morphism) -> (Arc<Representation>, Morphism) {
    quotient_representation(&u.target, &image_subspaces(u))
}

/// Kernel of `v` with the canonical monomorphism.
pub fn kernel_rep(v: &Morphism) -> (Arc<Representation>, Morphism) {
    let ks: Vec<Subspace> = v.components.iter().map(Matrix::nullspace).collect();
    subrepresentation(&v.source, &ks).expect("kernels are arrow-stable")
}

/// Image of `u` as a subrepresentation of its target.
pub fn image_rep(u: &Morphism) -> (Arc<Representation>, Morphism) {
    subrepresentation(&u.target, &image_subspaces(u)).expect("images are arrow-stable")
}

/// Map `Z -> Z'` induced on cokernels by `f: Y -> Y'` (requires `f ∘ Im u ⊆ Im u'`).
pub fn induced_on_cokernels(f: &Morphism, proj: &Morphism, proj2: &Morphism) -> Morphism {
    let sections: Vec<Matrix> = proj
        .components
        .iter()
        .zip(proj.source.dims.iter())
        .map(|(p, _)| right_inverse(p))
        .collect();
    let components = (0..f.components.len())
        .map(|v| proj2.components[v].mul(&f.components[v]).mul(&sections[v]))
        .collect();
    Morphism {
        source: proj.target.clone(),
        target: proj2.target.clone(),
        components,
    }
}

/// A right inverse of a surjective matrix.
fn right_inverse(p: &Matrix) -> Matrix {
    let f = p.field();
    let mut out = Matrix::zeros(f, p.cols(), p.rows());
    for r in 0..p.rows() {
        let mut e = vec![0u64; p.rows()];
        e[r] = 1;
        let x = p.solve(&e).expect("surjective projection");
        for (i, v) in x.into_iter().enumerate() {
            out.set(i, r, v);
        }
    }
    out
}

/// Endomorphism ring data: dimension, radical dimension, and top dimension.
#[derive(Clone, Debug)]
pub struct EndLocalData {
    pub end_dim: usize,
    pub rad_dim: usize,
    pub top_dim: usize,
    pub end_space: HomSpace,
    /// Radical, in coordinates relative to the canonical End basis.
    pub radical: Subspace,
}

impl EndLocalData {
    pub fn is_indecomposable(&self) -> bool {
        self.top_dim == 1
    }

    /// Radical elements as flattened vectors in the ambient Hom coordinates.
    pub fn radical_vectors(&self) -> Vec<Vec<u64>> {
        self.radical
            .basis()
            .iter()
            .map(|c| self.end_space.element(c).flatten())
            .collect()
    }
}

/// Computes `End(M)` and its Jacobson radical as the radical of the trace
/// form `(x, y) -> tr(xy)`.
///
/// The trace form detects the radical only when `p` exceeds both the
/// dimension of `End(M)` and the total dimension of `M`.
pub fn end_local_data(m: &Arc<Representation>) -> Result<EndLocalData> {
    let end_space = hom_space(m, m);
    let end_dim = end_space.dim();
    let p = m.field.p();
    let needed = end_dim.max(m.total_dim());
    if p as usize <= needed {
        return Err(Error::FieldTooSmall { p, needed });
    }
    let f = m.field;
    let mats: Vec<Matrix> = (0..end_dim)
        .map(|i| end_space.basis_morphism(i).total_matrix())
        .collect();
    let mut gram = Matrix::zeros(f, end_dim, end_dim);
    for i in 0..end_dim {
        for j in i..end_dim {
            let t = trace_of_product(&mats[i], &mats[j]);
            gram.set(i, j, t);
            gram.set(j, i, t);
        }
    }
    let radical = gram.nullspace();
    let rad_dim = radical.dim();
    Ok(EndLocalData {
        end_dim,
        rad_dim,
        top_dim: end_dim - rad_dim,
        end_space,
        radical,
    })
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> u64 {
    let f = a.field();
    let n = a.rows();
    let mut t = 0u64;
    for i in 0..n {
        for k in 0..n {
            let x = a.get(i, k);
            if x != 0 {
                t = f.add(t, f.mul(x, b.get(k, i)));
            }
        }
    }
    t
}

pub fn is_indecomposable(m: &Arc<Representation>) -> Result<bool> {
    Ok(end_local_data(m)?.is_indecomposable())
}

/// Isomorphism test for two indecomposables: some composite `g ∘ f` of
/// hom-basis elements is invertible.
pub fn is_isomorphic_indecomposable(m: &Arc<Representation>, n: &Arc<Representation>) -> bool {
    if m.dims != n.dims {
        return false;
    }
    if m.is_zero() {
        return true;
    }
    let there = hom_basis(m, n);
    if there.is_empty() {
        return false;
    }
    let back = hom_basis(n, m);
    there
        .iter()
        .any(|f| back.iter().any(|g| g.after(f).is_iso()))
}

/// General isomorphism test: equal dimension vectors and equal multisets of
/// indecomposable summands.
pub fn is_isomorphic(m: &Arc<Representation>, n: &Arc<Representation>) -> Result<bool> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if is_indecomposable(m)? && is_indecomposable(n)? {
        return Ok(is_isomorphic_indecomposable(m, n));
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (a, ka) in &dm {
        let hit = dn.iter().enumerate().position(|(i, (b, kb))| {
            !used[i] && ka == kb && is_isomorphic_indecomposable(a, b)
        });
        match hit {
            Some(i) => used[i] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Krull-Schmidt decomposition by Fitting splitting, grouped into
/// isomorphism classes with multiplicities (in order of first appearance).
pub fn decompose(m: &Arc<Representation>) -> Result<Vec<(Arc<Representation>, usize)>> {
    let mut factors = Vec::new();
    split_into(m, &mut factors)?;
    let mut grouped: Vec<(Arc<Representation>, usize)> = Vec::new();
    for x in factors {
        match grouped
            .iter_mut()
            .find(|(y, _)| is_isomorphic_indecomposable(&x, y))
        {
            Some(entry) => entry.1 += 1,
            None => grouped.push((x, 1)),
        }
    }
    Ok(grouped)
}

fn split_into(m: &Arc<Representation>, out: &mut Vec<Arc<Representation>>) -> Result<()> {
    if m.is_zero() {
        return Ok(());
    }
    let data = end_local_data(m)?;
    if data.top_dim == 1 {
        out.push(m.clone());
        return Ok(());
    }
    let n = m.total_dim() as u32;
    let basis = data.end_space.basis();
    let singles = basis.iter().cloned();
    let pairs = (0..basis.len())
        .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
        .map(|(i, j)| basis[i].add(&basis[j]));
    for e in singles.chain(pairs) {
        if let Some(split) = fitting_split(m, &e, n) {
            let (image, kernel) = split?;
            split_into(&image, out)?;
            split_into(&kernel, out)?;
            return Ok(());
        }
    }
    Err(Error::DecompositionStuck {
        top_dim: data.top_dim,
    })
}

/// Tries `(e - λ)^N` for each eigenvalue λ of `e`; returns the image and
/// kernel summands of the first proper Fitting projection.
fn fitting_split(
    m: &Arc<Representation>,
    e: &Morphism,
    n: u32,
) -> Option<Result<(Arc<Representation>, Arc<Representation>)>> {
    let total = m.total_dim();
    for lambda in e.total_matrix().eigenvalues() {
        let shifted = e.add(&Morphism::identity(m.clone()).scale(m.field.neg(lambda)));
        let powered = Morphism {
            source: m.clone(),
            target: m.clone(),
            components: shifted.components.iter().map(|c| c.pow(n)).collect(),
        };
        let rank: usize = powered.components.iter().map(Matrix::rank).sum();
        if rank > 0 && rank < total {
            let (img, _) = image_rep(&powered);
            let (ker, _) = kernel_rep(&powered);
            return Some(Ok((img, ker)));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FieldPrime {
        FieldPrime::default()
    }

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::from_arrows("a2", 2, &[("a", 0, 1)]))
    }

    fn loop_quiver(n: usize) -> Arc<Quiver> {
        let q = Quiver::new(
            "nilp",
            1,
            vec![Arrow {
                id: "t".into(),
                source: 0,
                target: 0,
            }],
            vec![Relation {
                terms: vec![(1, vec![0; n])],
            }],
        )
        .unwrap();
        Arc::new(q)
    }

    fn jordan(n: usize, size: usize) -> Arc<Representation> {
        let f = fp();
        let mut t = Matrix::zeros(f, size, size);
        for i in 0..size.saturating_sub(1) {
            t.set(i + 1, i, 1);
        }
        Arc::new(Representation::new(loop_quiver(n), f, vec![size], vec![t]).unwrap())
    }

    fn a2_rep(d0: usize, d1: usize, rows: &[Vec<i64>]) -> Arc<Representation> {
        let f = fp();
        let m = Matrix::from_rows(f, d1, d0, rows);
        Arc::new(Representation::new(a2(), f, vec![d0, d1], vec![m]).unwrap())
    }

    #[test]
    fn simple_has_scalar_endomorphisms() {
        let s = Arc::new(Representation::simple(a2(), fp(), 0));
        assert_eq!(hom_dim(&s, &s), 1);
        let d = end_local_data(&s).unwrap();
        assert_eq!((d.end_dim, d.rad_dim, d.top_dim), (1, 0, 1));
    }

    #[test]
    fn nilpotent_hom_dims_are_minima() {
        for a in 1..=4 {
            for b in 1..=4 {
                assert_eq!(hom_dim(&jordan(4, a), &jordan(4, b)), a.min(b), "P{a} -> P{b}");
            }
        }
    }

    #[test]
    fn end_of_jordan_block() {
        let d = end_local_data(&jordan(4, 3)).unwrap();
        assert_eq!((d.end_dim, d.rad_dim, d.top_dim), (3, 2, 1));
    }

    #[test]
    fn doubled_simple_has_matrix_endomorphisms() {
        let s = Arc::new(Representation::simple(a2(), fp(), 1));
        let ss = direct_sum(&a2(), fp(), &[s.clone(), s.clone()]);
        let d = end_local_data(&ss).unwrap();
        assert_eq!((d.end_dim, d.top_dim), (4, 4));
        let parts = decompose(&ss).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].1, 2);
    }

    #[test]
    fn field_too_small_is_reported() {
        let f = FieldPrime::new(3).unwrap();
        let q = a2();
        let s = Arc::new(Representation::simple(q.clone(), f, 0));
        let big = direct_sum(&q, f, &[s.clone(), s.clone(), s]);
        assert!(matches!(end_local_data(&big), Err(Error::FieldTooSmall { .. })));
    }

    #[test]
    fn cokernel_examples() {
        let y = a2_rep(1, 1, &[vec![1]]);
        let id = Morphism::identity(y.clone());
        let (z, _) = cokernel_rep(&id);
        assert!(z.is_zero());
        let zero = Morphism::zero(y.clone(), y.clone());
        let (z, _) = cokernel_rep(&zero);
        assert!(is_isomorphic(&z, &y).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let y = a2_rep(1, 1, &[vec![1]]);
        let (x, _) = kernel_rep(&Morphism::identity(y.clone()));
        assert!(x.is_zero());
        let (x, incl) = kernel_rep(&Morphism::zero(y.clone(), y.clone()));
        assert!(is_isomorphic(&x, &y).unwrap());
        assert!(incl.is_mono());
    }

    #[test]
    fn decompose_jordan_type_two_one_zero() {
        // T with ranks (2, 1, 0) on a 4-dimensional space: blocks of size 3 and 1
        let f = fp();
        let t = Matrix::from_rows(
            f,
            4,
            4,
            &[
                vec![0, 0, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 0],
            ],
        );
        // conjugate to hide the block structure
        let g = Matrix::from_rows(
            f,
            4,
            4,
            &[
                vec![1, 2, 0, 1],
                vec![0, 1, 3, 0],
                vec![1, 0, 1, 0],
                vec![0, 0, 2, 1],
            ],
        );
        let t = g.mul(&t).mul(&g.inverse().unwrap());
        let v = Arc::new(Representation::new(loop_quiver(4), f, vec![4], vec![t]).unwrap());
        let parts = decompose(&v).unwrap();
        let mut sizes: Vec<usize> = parts.iter().map(|(r, k)| r.total_dim() * 10 + k).collect();
        sizes.sort();
        assert_eq!(sizes, vec![11, 31]);
        assert!(is_isomorphic_indecomposable(
            &parts.iter().find(|(r, _)| r.total_dim() == 3).unwrap().0,
            &jordan(4, 3)
        ));
    }

    #[test]
    fn isomorphism_examples() {
        let m = a2_rep(1, 1, &[vec![1]]);
        assert!(is_isomorphic(&m, &m).unwrap());
        let s = Arc::new(Representation::simple(a2(), fp(), 1));
        assert!(!is_isomorphic(&m, &s).unwrap());
        let scaled = a2_rep(1, 1, &[vec![5]]);
        assert!(is_isomorphic(&m, &scaled).unwrap());
    }

    #[test]
    fn relation_violations_are_rejected() {
        let f = fp();
        let t = Matrix::from_rows(f, 2, 2, &[vec![0, 0], vec![1, 0]]);
        assert!(Representation::new(loop_quiver(2), f, vec![2], vec![t.clone()]).is_ok());
        assert!(matches!(
            Representation::new(loop_quiver(1), f, vec![2], vec![t]),
            Err(Error::RelationViolated(0))
        ));
    }

    #[test]
    fn json_round_trip_is_exact() {
        let m = a2_rep(2, 1, &[vec![3, 10006]]);
        let text = rep_to_json(&m).to_string();
        let q = a2();
        let back = rep_from_json(
            &serde_json::from_str(&text).unwrap(),
            fp(),
            &|id| (id == "a2").then(|| q.clone()),
        )
        .unwrap();
        assert_eq!(back, *m);
        assert_eq!(rep_to_json(&back).to_string(), text);
    }

    #[test]
    fn intertwining_is_checked() {
        let m = a2_rep(1, 1, &[vec![1]]);
        let s = Arc::new(Representation::simple(a2(), fp(), 0));
        let f = fp();
        // S(0) -> M with component 1 at vertex 0 fails to intertwine
        let bad = Morphism::new(
            s.clone(),
            m.clone(),
            vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 0)],
        );
        assert!(bad.is_err());
        let good = Morphism::new(
            m.clone(),
            s,
            vec![Matrix::identity(f, 1), Matrix::zeros(f, 0, 1)],
        );
        assert!(good.is_ok());
    }
}
