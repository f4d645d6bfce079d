//! Concrete categories with their complete lists of indecomposables:
//! Dynkin path algebras, nilpotent operators `N(n)` and invariant subspace
//! pairs `S(n)`.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix, Subspace};
use crate::repcore::{
    cokernel_rep, decompose, end_local_data, is_isomorphic_indecomposable,
    quotient_representation, rep_to_json, Arrow, Morphism, Quiver, Relation, Representation,
};

mod subspace;

pub use subspace::{
    enumerate_subspace_indecomposables, enumerate_subspace_indecomposables_exhaustive, is_picket,
    pair_label, pair_rep, picket, subspace_catalog, subspace_quiver, SubspaceEnumeration,
    ARROW as SUB_ARROW, LOOP_U as SUB_LOOP_U, LOOP_V as SUB_LOOP_V, MAX_SUBSPACE_N,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryKind {
    /// Modules over the path algebra of a Dynkin quiver.
    Dynkin,
    /// `N(n)`: nilpotent operators with `T^n = 0`.
    Nilpotent(usize),
    /// `S(n)`: pairs `(V, U)` of a `k[T]/T^n`-module and a submodule.
    Subspace(usize),
}

#[derive(Clone, Debug)]
pub struct CatalogObject {
    pub label: String,
    pub rep: Arc<Representation>,
    pub projective: bool,
    pub injective: bool,
}

#[derive(Clone, Debug)]
pub struct CategoryCatalog {
    pub id: String,
    pub kind: CategoryKind,
    pub quiver: Arc<Quiver>,
    pub field: FieldPrime,
    pub objects: Vec<CatalogObject>,
}

impl CategoryCatalog {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.objects.iter().map(|o| o.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o.label == label)
    }

    pub fn get(&self, label: &str) -> Result<&CatalogObject> {
        self.objects
            .iter()
            .find(|o| o.label == label)
            .ok_or_else(|| Error::UnknownObject(label.to_string()))
    }

    pub fn rep(&self, i: usize) -> &Arc<Representation> {
        &self.objects[i].rep
    }

    pub fn projective_labels(&self) -> Vec<&str> {
        self.objects
            .iter()
            .filter(|o| o.projective)
            .map(|o| o.label.as_str())
            .collect()
    }

    pub fn injective_labels(&self) -> Vec<&str> {
        self.objects
            .iter()
            .filter(|o| o.injective)
            .map(|o| o.label.as_str())
            .collect()
    }

    /// Index of the catalog object isomorphic to the indecomposable `m`.
    pub fn identify(&self, m: &Arc<Representation>) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.rep.dims() == m.dims() && is_isomorphic_indecomposable(&o.rep, m))
    }

    /// Multiplicities of catalog objects as summands of `m`, sorted by index.
    pub fn decompose(&self, m: &Arc<Representation>) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (part, mult) in decompose(m)? {
            let i = self
                .identify(&part)
                .ok_or_else(|| Error::UnknownObject(format!("summand {}", part.dim_vector().label())))?;
            out.push((i, mult));
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Cokernel inside the category. For `S(n)` the abelian cokernel is
    /// replaced by its largest quotient with injective arrow map.
    pub fn cokernel(&self, u: &Morphism) -> (Arc<Representation>, Morphism) {
        let (z, proj) = cokernel_rep(u);
        match self.kind {
            CategoryKind::Subspace(_) => {
                let arrow = z.map(subspace::ARROW);
                let subs = [arrow.nullspace(), Subspace::zero(self.field, z.dims()[1])];
                let (z2, proj2) = quotient_representation(&z, &subs);
                (z2, proj2.after(&proj))
            }
            _ => (z, proj),
        }
    }

    /// Whether `m` is an object of the category (not just of the ambient
    /// representation category).
    pub fn contains(&self, m: &Representation) -> bool {
        match self.kind {
            CategoryKind::Subspace(_) => {
                let a = m.map(subspace::ARROW);
                a.rank() == a.cols()
            }
            _ => true,
        }
    }

    pub fn to_json(&self) -> Value {
        let objects: Vec<Value> = self
            .objects
            .iter()
            .map(|o| {
                json!({
                    "label": o.label,
                    "projective": o.projective,
                    "injective": o.injective,
                    "rep": rep_to_json(&o.rep),
                })
            })
            .collect();
        json!({
            "category": self.id,
            "prime": self.field.p(),
            "objects": objects,
        })
    }

    /// Checks the catalog invariants: indecomposable, pairwise non-isomorphic,
    /// unique labels.
    pub fn validate(&self) -> Result<()> {
        for (i, o) in self.objects.iter().enumerate() {
            if !end_local_data(&o.rep)?.is_indecomposable() {
                return Err(Error::Shape(format!("{} is decomposable", o.label)));
            }
            for p in &self.objects[..i] {
                if p.label == o.label {
                    return Err(Error::Shape(format!("duplicate label {}", o.label)));
                }
                if p.rep.dims() == o.rep.dims() && is_isomorphic_indecomposable(&p.rep, &o.rep) {
                    return Err(Error::Shape(format!("{} and {} are isomorphic", p.label, o.label)));
                }
            }
        }
        Ok(())
    }
}

/// The shipped E6 orientation: sources 1, 3, 6 and sinks 2, 4, 5.
pub fn e6_quiver() -> Arc<Quiver> {
    Arc::new(Quiver::from_arrows(
        "e6",
        6,
        &[
            ("alpha", 0, 1),
            ("beta", 2, 1),
            ("gamma", 2, 3),
            ("delta", 2, 4),
            ("epsilon", 5, 4),
        ],
    ))
}

/// Linearly oriented `A_n`: `1 -a-> 2 -b-> 3 ...`.
pub fn linear_quiver(n: usize) -> Arc<Quiver> {
    let names: Vec<String> = (0..n.saturating_sub(1))
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let arrows: Vec<(&str, usize, usize)> = names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_str(), i, i + 1))
        .collect();
    Arc::new(Quiver::from_arrows(&format!("a{n}"), n, &arrows))
}

/// One vertex with a loop `t` subject to `t^n = 0`.
pub fn nilpotent_quiver(n: usize) -> Arc<Quiver> {
    let q = Quiver::new(
        format!("nilp:{n}"),
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
    .expect("well-formed loop quiver");
    Arc::new(q)
}

/// Resolves a registry id such as `e6`, `a3`, `nilp:4` or `sub:4`.
pub fn quiver_by_id(id: &str) -> Option<Arc<Quiver>> {
    match parse_category_id(id).ok()? {
        CategoryId::E6 => Some(e6_quiver()),
        CategoryId::Linear(n) => Some(linear_quiver(n)),
        CategoryId::Nilpotent(n) => Some(nilpotent_quiver(n)),
        CategoryId::Subspace(n) => Some(subspace_quiver(n)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryId {
    E6,
    Linear(usize),
    Nilpotent(usize),
    Subspace(usize),
}

pub fn parse_category_id(id: &str) -> Result<CategoryId> {
    let num = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Parse(format!("bad category {id}")))
    };
    if id == "e6" {
        Ok(CategoryId::E6)
    } else if let Some(rest) = id.strip_prefix("nilp:") {
        Ok(CategoryId::Nilpotent(num(rest)?))
    } else if let Some(rest) = id.strip_prefix("sub:") {
        Ok(CategoryId::Subspace(num(rest)?))
    } else if let Some(rest) = id.strip_prefix('a') {
        Ok(CategoryId::Linear(num(rest)?))
    } else {
        Err(Error::Parse(format!("unknown category {id}")))
    }
}

/// Builds a catalog from its registry id.
pub fn build_catalog(id: &str, field: FieldPrime, dim_bound: usize) -> Result<CategoryCatalog> {
    match parse_category_id(id)? {
        CategoryId::E6 => dynkin_catalog(&e6_quiver(), field),
        CategoryId::Linear(n) => dynkin_catalog(&linear_quiver(n), field),
        CategoryId::Nilpotent(n) => Ok(nilpotent_catalog(n, field)),
        CategoryId::Subspace(n) => subspace_catalog(n, dim_bound, field),
    }
}

/// Tits form `q(d) = Σ d_i² − Σ_{a: i→j} d_i d_j`.
pub fn tits_form(quiver: &Quiver, d: &[usize]) -> i64 {
    let sq: i64 = d.iter().map(|&x| (x * x) as i64).sum();
    let mixed: i64 = quiver
        .arrows
        .iter()
        .map(|a| (d[a.source] * d[a.target]) as i64)
        .sum();
    sq - mixed
}

const ROOT_SEARCH_LIMIT: usize = 8;

/// Positive roots by bounded coordinate search, raising the bound until no
/// root touches it.
pub fn positive_roots(quiver: &Quiver) -> Result<Vec<Vec<usize>>> {
    let n = quiver.vertex_count;
    for bound in 1..=ROOT_SEARCH_LIMIT {
        let mut roots = Vec::new();
        let mut d = vec![0usize; n];
        loop {
            // odometer increment
            let mut i = 0;
            while i < n && d[i] == bound {
                d[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            d[i] += 1;
            if tits_form(quiver, &d) == 1 {
                roots.push(d.clone());
            }
        }
        if roots.iter().all(|r| r.iter().all(|&x| x < bound)) {
            roots.sort_by(|a, b| {
                let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
                sa.cmp(&sb).then_with(|| b.cmp(a))
            });
            return Ok(roots);
        }
    }
    Err(Error::NotRepresentationFinite(ROOT_SEARCH_LIMIT))
}

fn is_tree(quiver: &Quiver) -> bool {
    let n = quiver.vertex_count;
    if n == 0 || quiver.arrows.len() + 1 != n || quiver.arrows.iter().any(|a| a.source == a.target) {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in &quiver.arrows {
        let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
        if x == y {
            return false;
        }
        parent[x] = y;
    }
    true
}

fn flipped_at(quiver: &Quiver, k: usize) -> Quiver {
    let mut q = quiver.clone();
    q.name = String::new();
    for a in &mut q.arrows {
        if a.source == k || a.target == k {
            std::mem::swap(&mut a.source, &mut a.target);
        }
    }
    q
}

fn is_sink(quiver: &Quiver, k: usize) -> bool {
    quiver.arrows.iter().all(|a| a.source != k)
}

/// Inverse reflection functor at `k`: `n` lives on a quiver where `k` is a
/// source; the result lives on `target`, where `k` is a sink.
fn reflect_back(n: &Representation, target: &Arc<Quiver>, k: usize) -> Result<Representation> {
    let f = n.field();
    let incident: Vec<usize> = (0..target.arrows.len())
        .filter(|&a| target.arrows[a].target == k)
        .collect();
    let parts: Vec<&Matrix> = incident.iter().map(|&a| n.map(a)).collect();
    let h = Matrix::vstack(f, n.dims()[k], &parts);
    let qd = h.column_space().quotient_data();
    let mut dims = n.dims().to_vec();
    dims[k] = qd.quotient_dim();
    let mut maps = n.maps().to_vec();
    let mut offset = 0;
    for &a in &incident {
        let j = target.arrows[a].source;
        maps[a] = qd.projection.block(0, offset, dims[k], dims[j]);
        offset += dims[j];
    }
    Representation::new(target.clone(), f, dims, maps)
}

/// The indecomposable with dimension vector `root`, built by sink
/// reflections down to a simple and inverse reflections back up.
pub fn indecomposable_for_root(
    quiver: &Arc<Quiver>,
    field: FieldPrime,
    root: &[usize],
) -> Result<Representation> {
    let n = quiver.vertex_count;
    let mut quivers = vec![quiver.clone()];
    let mut seq = Vec::new();
    let mut d: Vec<i64> = root.iter().map(|&x| x as i64).collect();
    let simple_at = |d: &[i64]| {
        (d.iter().sum::<i64>() == 1)
            .then(|| d.iter().position(|&x| x == 1))
            .flatten()
    };
    let k_final = loop {
        if let Some(k) = simple_at(&d) {
            break k;
        }
        if seq.len() > 64 * n {
            return Err(Error::NotRepresentationFinite(root.iter().sum()));
        }
        let cur = quivers.last().unwrap().clone();
        let k = (0..n).find(|&k| is_sink(&cur, k)).expect("acyclic quiver has a sink");
        let nb: i64 = cur
            .arrows
            .iter()
            .filter(|a| a.target == k)
            .map(|a| d[a.source])
            .sum();
        d[k] = nb - d[k];
        if d[k] < 0 {
            return Err(Error::Shape(format!("{root:?} is not a positive root")));
        }
        seq.push(k);
        quivers.push(Arc::new(flipped_at(&cur, k)));
    };
    let mut rep = Representation::simple(quivers.last().unwrap().clone(), field, k_final);
    for t in (0..seq.len()).rev() {
        rep = reflect_back(&rep, &quivers[t], seq[t])?;
    }
    Representation::new(quiver.clone(), field, rep.dims().to_vec(), rep.maps().to_vec())
}

/// Paths from `i`, grouped by end vertex, in enumeration order.
fn paths_by_end(quiver: &Quiver, i: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); quiver.vertex_count];
    for (p, end) in quiver.paths_from(i) {
        out[end].push(p);
    }
    out
}

/// Paths ending at `i`, grouped by start vertex.
fn paths_by_start(quiver: &Quiver, i: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new(); quiver.vertex_count];
    for s in 0..quiver.vertex_count {
        for (p, end) in quiver.paths_from(s) {
            if end == i {
                out[s].push(p);
            }
        }
    }
    out
}

/// `P(i)` with `P(i)_j` spanned by the paths `i -> j`; an arrow appends itself.
pub fn projective_rep(quiver: &Arc<Quiver>, field: FieldPrime, i: usize) -> Arc<Representation> {
    let basis = paths_by_end(quiver, i);
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (c, p) in basis[a.source].iter().enumerate() {
                let mut q = p.clone();
                q.push(idx);
                let r = basis[a.target].iter().position(|x| *x == q).expect("path basis");
                m.set(r, c, 1);
            }
            m
        })
        .collect();
    Arc::new(Representation::new(quiver.clone(), field, dims, maps).expect("projective"))
}

/// `I(i)` with `I(i)_j` dual to the paths `j -> i`; an arrow `a` sends
/// `δ_{a q}` to `δ_q`.
pub fn injective_rep(quiver: &Arc<Quiver>, field: FieldPrime, i: usize) -> Arc<Representation> {
    let basis = paths_by_start(quiver, i);
    let dims: Vec<usize> = basis.iter().map(Vec::len).collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(idx, a)| {
            let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
            for (c, p) in basis[a.source].iter().enumerate() {
                if p.first() == Some(&idx) {
                    let q = &p[1..];
                    let r = basis[a.target].iter().position(|x| x == q).expect("path basis");
                    m.set(r, c, 1);
                }
            }
            m
        })
        .collect();
    Arc::new(Representation::new(quiver.clone(), field, dims, maps).expect("injective"))
}

/// `P(π): P(j) -> P(i)` for a path `π: i -> j`, sending `q` to `π q`.
pub fn projective_path_map(quiver: &Arc<Quiver>, field: FieldPrime, path: &[usize]) -> Result<Morphism> {
    let (i, j) = quiver
        .path_ends(path)
        .ok_or_else(|| Error::BadPath("not composable".into()))?;
    let src = projective_rep(quiver, field, j);
    let tgt = projective_rep(quiver, field, i);
    let bs = paths_by_end(quiver, j);
    let bt = paths_by_end(quiver, i);
    let components = (0..quiver.vertex_count)
        .map(|l| {
            let mut m = Matrix::zeros(field, bt[l].len(), bs[l].len());
            for (c, q) in bs[l].iter().enumerate() {
                let full: Vec<usize> = path.iter().chain(q).copied().collect();
                let r = bt[l].iter().position(|x| *x == full).expect("path basis");
                m.set(r, c, 1);
            }
            m
        })
        .collect();
    Morphism::new(src, tgt, components)
}

/// `I(π): I(j) -> I(i)` for a path `π: i -> j`, sending `δ_q` to the sum of
/// `δ_r` with `r π = q`.
pub fn injective_path_map(quiver: &Arc<Quiver>, field: FieldPrime, path: &[usize]) -> Result<Morphism> {
    let (i, j) = quiver
        .path_ends(path)
        .ok_or_else(|| Error::BadPath("not composable".into()))?;
    let src = injective_rep(quiver, field, j);
    let tgt = injective_rep(quiver, field, i);
    let bs = paths_by_start(quiver, j);
    let bt = paths_by_start(quiver, i);
    let components = (0..quiver.vertex_count)
        .map(|l| {
            let mut m = Matrix::zeros(field, bt[l].len(), bs[l].len());
            for (c, q) in bs[l].iter().enumerate() {
                for (r, x) in bt[l].iter().enumerate() {
                    let composed: Vec<usize> = x.iter().chain(path).copied().collect();
                    if composed == *q {
                        m.set(r, c, 1);
                    }
                }
            }
            m
        })
        .collect();
    Morphism::new(src, tgt, components)
}

/// All indecomposables of a Dynkin quiver, labeled by dimension vector.
pub fn dynkin_catalog(quiver: &Arc<Quiver>, field: FieldPrime) -> Result<CategoryCatalog> {
    if !is_tree(quiver) || !quiver.relations.is_empty() {
        return Err(Error::Shape("dynkin_catalog needs a tree quiver without relations".into()));
    }
    let roots = positive_roots(quiver)?;
    let n = quiver.vertex_count;
    let projectives: Vec<_> = (0..n).map(|i| projective_rep(quiver, field, i)).collect();
    let injectives: Vec<_> = (0..n).map(|i| injective_rep(quiver, field, i)).collect();
    let mut objects = Vec::with_capacity(roots.len());
    for root in &roots {
        let rep = Arc::new(indecomposable_for_root(quiver, field, root)?);
        let matches = |list: &[Arc<Representation>]| {
            list.iter()
                .any(|p| p.dims() == rep.dims() && is_isomorphic_indecomposable(p, &rep))
        };
        objects.push(CatalogObject {
            label: rep.dim_vector().label(),
            projective: matches(&projectives),
            injective: matches(&injectives),
            rep,
        });
    }
    let catalog = CategoryCatalog {
        id: quiver.name.clone(),
        kind: CategoryKind::Dynkin,
        quiver: quiver.clone(),
        field,
        objects,
    };
    catalog.validate()?;
    Ok(catalog)
}

/// Single nilpotent Jordan block of size `m`: `T e_i = e_{i+1}`.
pub fn jordan_block(field: FieldPrime, m: usize) -> Matrix {
    let mut t = Matrix::zeros(field, m, m);
    for i in 1..m {
        t.set(i, i - 1, 1);
    }
    t
}

/// `N(n)` with the blocks `P^1, ..., P^n`.
pub fn nilpotent_catalog(n: usize, field: FieldPrime) -> CategoryCatalog {
    let quiver = nilpotent_quiver(n);
    let objects = (1..=n)
        .map(|m| CatalogObject {
            label: format!("P^{m}"),
            rep: Arc::new(
                Representation::new(quiver.clone(), field, vec![m], vec![jordan_block(field, m)])
                    .expect("Jordan block satisfies T^n = 0"),
            ),
            projective: m == n,
            injective: m == n,
        })
        .collect();
    CategoryCatalog {
        id: quiver.name.clone(),
        kind: CategoryKind::Nilpotent(n),
        quiver,
        field,
        objects,
    }
}

/// `(μ_1, ..., μ_n)`: multiplicity of each Jordan block size, from
/// `μ_m = r_{m−1} − 2 r_m + r_{m+1}` with `r_j = rank T^j`.
pub fn jordan_multiplicities(t: &Matrix, n: usize) -> Vec<usize> {
    let mut ranks = vec![t.rows() as i64];
    let mut power = Matrix::identity(t.field(), t.rows());
    for _ in 0..=n {
        power = power.mul(t);
        ranks.push(power.rank() as i64);
    }
    (1..=n)
        .map(|m| (ranks[m - 1] - 2 * ranks[m] + ranks[m + 1]) as usize)
        .collect()
}

/// Block sizes in decreasing order.
pub fn jordan_type(t: &Matrix) -> Vec<usize> {
    let n = t.rows();
    let mu = jordan_multiplicities(t, n.max(1));
    let mut parts = Vec::new();
    for m in (1..=mu.len()).rev() {
        parts.extend(std::iter::repeat(m).take(mu[m - 1]));
    }
    parts
}

/// `42` for the partition (4, 2); `0` for the empty partition.
pub fn partition_label(parts: &[usize]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts
        .iter()
        .map(|&p| if p < 10 { p.to_string() } else { format!("[{p}]") })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FieldPrime {
        FieldPrime::default()
    }

    #[test]
    fn a1_and_a2_catalogs() {
        let a1 = dynkin_catalog(&linear_quiver(1), fp()).unwrap();
        assert_eq!(a1.labels(), vec!["1"]);
        let a2 = dynkin_catalog(&linear_quiver(2), fp()).unwrap();
        let mut labels = a2.labels();
        labels.sort();
        assert_eq!(labels, vec!["01", "10", "11"]);
        assert_eq!(a2.projective_labels().len(), 2);
        assert_eq!(a2.injective_labels().len(), 2);
    }

    #[test]
    fn e6_has_36_roots() {
        assert_eq!(positive_roots(&e6_quiver()).unwrap().len(), 36);
    }

    #[test]
    fn extended_dynkin_is_rejected() {
        // Kronecker quiver: two arrows 1 -> 2
        let q = Quiver::from_arrows("", 2, &[("x", 0, 1), ("y", 0, 1)]);
        assert!(matches!(positive_roots(&q), Err(Error::NotRepresentationFinite(_))));
    }

    #[test]
    fn projective_and_injective_shapes_on_e6() {
        let q = e6_quiver();
        assert_eq!(projective_rep(&q, fp(), 2).dim_vector().label(), "011110");
        assert_eq!(projective_rep(&q, fp(), 0).dim_vector().label(), "110000");
        assert_eq!(injective_rep(&q, fp(), 1).dim_vector().label(), "111000");
        assert_eq!(injective_rep(&q, fp(), 4).dim_vector().label(), "001011");
    }

    #[test]
    fn path_maps_compose() {
        let q = linear_quiver(3);
        let ab = projective_path_map(&q, fp(), &[0, 1]).unwrap();
        let a = projective_path_map(&q, fp(), &[0]).unwrap();
        let b = projective_path_map(&q, fp(), &[1]).unwrap();
        // P(ab) = P(a) ∘ P(b)
        assert_eq!(a.after(&b).components(), ab.components());
        let ia = injective_path_map(&q, fp(), &[0]).unwrap();
        let ib = injective_path_map(&q, fp(), &[1]).unwrap();
        let iab = injective_path_map(&q, fp(), &[0, 1]).unwrap();
        // I(ab) = I(a) ∘ I(b) as maps I(3) -> I(2) -> I(1)
        assert_eq!(ia.after(&ib).components(), iab.components());
    }

    #[test]
    fn jordan_examples() {
        let f = fp();
        assert_eq!(jordan_multiplicities(&jordan_block(f, 4), 4), vec![0, 0, 0, 1]);
        let t = Matrix::block_diag(f, &[&jordan_block(f, 3), &jordan_block(f, 1)]);
        assert_eq!(jordan_multiplicities(&t, 4), vec![1, 0, 1, 0]);
        assert_eq!(jordan_multiplicities(&Matrix::zeros(f, 0, 0), 4), vec![0; 4]);
        assert_eq!(jordan_type(&t), vec![3, 1]);
        assert_eq!(partition_label(&[4, 2]), "42");
        assert_eq!(partition_label(&[]), "0");
    }

    #[test]
    fn nilpotent_catalog_shape() {
        let c = nilpotent_catalog(4, fp());
        assert_eq!(c.labels(), vec!["P^1", "P^2", "P^3", "P^4"]);
        assert_eq!(c.projective_labels(), vec!["P^4"]);
        assert_eq!(c.injective_labels(), vec!["P^4"]);
        assert_eq!(nilpotent_catalog(1, fp()).len(), 1);
    }

    #[test]
    fn category_ids() {
        assert_eq!(parse_category_id("sub:4").unwrap(), CategoryId::Subspace(4));
        assert_eq!(parse_category_id("a3").unwrap(), CategoryId::Linear(3));
        assert!(parse_category_id("b7").is_err());
        assert!(parse_category_id("nilp:0").is_err());
    }
}
