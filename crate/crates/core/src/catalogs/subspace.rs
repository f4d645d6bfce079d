//! Invariant subspace pairs `S(n)`: pickets and the enumeration of all
//! indecomposables.
//!
//! The enumeration runs over F₂ with bit-packed vectors. For each ambient
//! `V = ⊕ P^{λ_i}` it walks the lattice of `T`-invariant subspaces, discards
//! pairs that split off `P^1_0` or `P^1_1` for trivial reasons, looks for a
//! Fitting splitting in `End(V, U)`, and lifts the survivors to `F_p`, where
//! indecomposability and isomorphism are decided.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::{jordan_block, jordan_type, partition_label, CatalogObject, CategoryCatalog, CategoryKind};
use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix, Subspace};
use crate::repcore::{end_local_data, is_isomorphic_indecomposable, Arrow, Quiver, Relation, Representation};

pub const LOOP_U: usize = 0;
pub const LOOP_V: usize = 1;
pub const ARROW: usize = 2;

/// Vertex 0 carries `U`, vertex 1 carries `V`; loops `tu`, `tv` and the
/// inclusion `a: U -> V` with `tu^n = tv^n = 0` and `tu·a = a·tv`.
pub fn subspace_quiver(n: usize) -> Arc<Quiver> {
    let arrows = vec![
        Arrow {
            id: "tu".into(),
            source: 0,
            target: 0,
        },
        Arrow {
            id: "tv".into(),
            source: 1,
            target: 1,
        },
        Arrow {
            id: "a".into(),
            source: 0,
            target: 1,
        },
    ];
    let relations = vec![
        Relation {
            terms: vec![(1, vec![LOOP_U; n])],
        },
        Relation {
            terms: vec![(1, vec![LOOP_V; n])],
        },
        Relation {
            terms: vec![(1, vec![LOOP_U, ARROW]), (-1, vec![ARROW, LOOP_V])],
        },
    ];
    Arc::new(Quiver::new(format!("sub:{n}"), 2, arrows, relations).expect("well-formed"))
}

/// The pair `(V, U)` for an operator `t_v` on `V` and a `t_v`-invariant subspace.
pub fn pair_rep(n: usize, field: FieldPrime, t_v: &Matrix, u: &Subspace) -> Result<Representation> {
    let incl = u.basis_matrix();
    let s = u.dim();
    let mut t_u = Matrix::zeros(field, s, s);
    for (c, b) in u.basis().iter().enumerate() {
        let image = t_v.mul_vec(b);
        let coords = u
            .coords(&image)
            .ok_or_else(|| Error::Shape("subspace is not invariant".into()))?;
        for (r, x) in coords.into_iter().enumerate() {
            t_u.set(r, c, x);
        }
    }
    Representation::new(
        subspace_quiver(n),
        field,
        vec![s, t_v.rows()],
        vec![t_u, t_v.clone(), incl],
    )
}

/// `P^m_l = (P^m, soc^l P^m)` with `soc^l = T^{m−l} P^m`.
pub fn picket(n: usize, m: usize, l: usize, field: FieldPrime) -> Result<Representation> {
    if l > m || m > n {
        return Err(Error::InvalidPicket { n, m, l });
    }
    let t = jordan_block(field, m);
    let vectors: Vec<Vec<u64>> = (m - l..m)
        .map(|i| {
            let mut v = vec![0u64; m];
            v[i] = 1;
            v
        })
        .collect();
    pair_rep(n, field, &t, &Subspace::span(field, m, &vectors))
}

/// `(λ(V)|λ(U))`, e.g. `(42|31)`.
pub fn pair_label(rep: &Representation) -> String {
    format!(
        "({}|{})",
        partition_label(&jordan_type(rep.map(LOOP_V))),
        partition_label(&jordan_type(rep.map(LOOP_U)))
    )
}

fn lead(x: u128) -> u32 {
    127 - x.leading_zeros()
}

/// Kernel of `c -> Σ c_i images_i` over F₂, as coefficient masks.
fn kernel_combos(images: &[u128]) -> Vec<u128> {
    let mut pivots: Vec<Option<(u128, u128)>> = vec![None; 128];
    let mut kernel = Vec::new();
    for (i, &img) in images.iter().enumerate() {
        let (mut x, mut c) = (img, 1u128 << i);
        loop {
            if x == 0 {
                kernel.push(c);
                break;
            }
            let l = lead(x) as usize;
            match pivots[l] {
                Some((px, pc)) => {
                    x ^= px;
                    c ^= pc;
                }
                None => {
                    pivots[l] = Some((x, c));
                    break;
                }
            }
        }
    }
    kernel
}

/// F₂ subspace in fully reduced echelon form, sorted by decreasing leading bit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct F2Space(Vec<u32>);

impl F2Space {
    fn span(vectors: impl IntoIterator<Item = u32>) -> Self {
        let mut s = F2Space::default();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    fn dim(&self) -> usize {
        self.0.len()
    }

    fn reduce(&self, mut v: u32) -> u32 {
        for &b in &self.0 {
            if v & (1 << (31 - b.leading_zeros())) != 0 {
                v ^= b;
            }
        }
        v
    }

    fn contains(&self, v: u32) -> bool {
        self.reduce(v) == 0
    }

    fn insert(&mut self, v: u32) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let l = 1u32 << (31 - v.leading_zeros());
        for b in &mut self.0 {
            if *b & l != 0 {
                *b ^= v;
            }
        }
        self.0.push(v);
        self.0.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    fn sum(&self, other: &F2Space) -> F2Space {
        let mut s = self.clone();
        for &v in &other.0 {
            s.insert(v);
        }
        s
    }
}

/// A linear map on F₂^d stored by the images of the basis vectors.
type F2Map = Vec<u32>;

fn apply(map: &[u32], mut v: u32) -> u32 {
    let mut out = 0;
    while v != 0 {
        out ^= map[v.trailing_zeros() as usize];
        v &= v - 1;
    }
    out
}

fn compose(a: &[u32], b: &[u32]) -> F2Map {
    b.iter().map(|&x| apply(a, x)).collect()
}

fn f2_rank(cols: &[u32]) -> usize {
    F2Space::span(cols.iter().copied()).dim()
}

/// The ambient module `⊕ P^{λ_i}` over F₂.
struct Ambient {
    parts: Vec<usize>,
    d: usize,
    t: F2Map,
    image_t: F2Space,
    kernel_t: F2Space,
    /// Basis of `End_{k[T]}(V)`: generator `g_i ↦ T^s g_j` for admissible `s`.
    endo: Vec<F2Map>,
    /// Number of `P^1` summands.
    ones: usize,
    prune: bool,
}

impl Ambient {
    fn new(parts: &[usize], prune: bool) -> Self {
        let d: usize = parts.iter().sum();
        let mut offsets = Vec::new();
        let mut acc = 0;
        for &p in parts {
            offsets.push(acc);
            acc += p;
        }
        let mut t = vec![0u32; d];
        for (b, &p) in parts.iter().enumerate() {
            for k in 0..p - 1 {
                t[offsets[b] + k] = 1 << (offsets[b] + k + 1);
            }
        }
        let image_t = F2Space::span(t.iter().copied());
        let kernel_t = F2Space::span(
            parts
                .iter()
                .enumerate()
                .map(|(b, &p)| 1u32 << (offsets[b] + p - 1)),
        );
        let mut endo = Vec::new();
        for (i, &li) in parts.iter().enumerate() {
            for (j, &lj) in parts.iter().enumerate() {
                for s in lj.saturating_sub(li)..lj {
                    let mut map = vec![0u32; d];
                    for k in 0..li {
                        if s + k < lj {
                            map[offsets[i] + k] = 1 << (offsets[j] + s + k);
                        }
                    }
                    endo.push(map);
                }
            }
        }
        Ambient {
            parts: parts.to_vec(),
            d,
            t,
            image_t,
            kernel_t,
            endo,
            ones: parts.iter().filter(|&&p| p == 1).count(),
            prune,
        }
    }

    fn is_single_simple(&self) -> bool {
        self.parts == [1]
    }

    fn exempt(&self) -> bool {
        !self.prune || self.is_single_simple()
    }

    /// An indecomposable pair other than `P^1_0`, `P^1_1` has
    /// `#P^1 ≤ dim TU ≤ dim TV`.
    fn may_carry_indecomposables(&self) -> bool {
        self.exempt() || self.ones <= self.image_t.dim()
    }

    /// Hereditary condition `soc U ⊆ TV` (else `P^1_1` splits off).
    fn socle_condition(&self, u: &F2Space) -> bool {
        if self.exempt() {
            return true;
        }
        let images: Vec<u128> = u.0.iter().map(|&b| apply(&self.t, b) as u128).collect();
        kernel_combos(&images).into_iter().all(|c| {
            let x = u
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| c >> i & 1 == 1)
                .fold(0u32, |acc, (_, &b)| acc ^ b);
            self.image_t.contains(x)
        })
    }

    /// `soc V ⊆ TV + U` (else `P^1_0` splits off) and `#P^1 ≤ dim TU`.
    fn final_conditions(&self, u: &F2Space) -> bool {
        if self.exempt() {
            return true;
        }
        let tv_plus_u = self.image_t.sum(u);
        if !self.kernel_t.0.iter().all(|&k| tv_plus_u.contains(k)) {
            return false;
        }
        let tu = F2Space::span(u.0.iter().map(|&b| apply(&self.t, b)));
        tu.dim() >= self.ones
    }

    /// Invariant subspaces `W + k v` covering `w` (those with `T v ∈ W`).
    fn covers(&self, w: &F2Space) -> Vec<F2Space> {
        let images: Vec<u128> = (0..self.d)
            .map(|i| w.reduce(self.t[i]) as u128)
            .collect();
        let preimage: Vec<u32> = kernel_combos(&images).into_iter().map(|c| c as u32).collect();
        let reps = F2Space::span(preimage.into_iter().map(|v| w.reduce(v)));
        let k = reps.dim();
        (1u32..1 << k)
            .map(|mask| {
                let v = (0..k)
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u32, |acc, i| acc ^ reps.0[i]);
                let mut child = w.clone();
                child.insert(v);
                child
            })
            .collect()
    }

    /// All `T`-invariant subspaces satisfying the hereditary socle condition.
    fn invariant_subspaces(&self) -> Vec<F2Space> {
        let mut seen: HashSet<F2Space> = HashSet::new();
        let mut queue = vec![F2Space::default()];
        seen.insert(F2Space::default());
        let mut out = Vec::new();
        while let Some(w) = queue.pop() {
            if !self.socle_condition(&w) {
                continue;
            }
            for child in self.covers(&w) {
                if seen.insert(child.clone()) {
                    queue.push(child);
                }
            }
            out.push(w);
        }
        out.sort();
        out
    }

    /// Basis of `End(V, U) = {φ ∈ End(V) : φ(U) ⊆ U}`.
    fn pair_endomorphisms(&self, u: &F2Space) -> Vec<F2Map> {
        let d = self.d;
        let residues: Vec<u128> = self
            .endo
            .iter()
            .map(|phi| {
                u.0.iter().enumerate().fold(0u128, |acc, (i, &b)| {
                    acc | (u.reduce(apply(phi, b)) as u128) << (i * d)
                })
            })
            .collect();
        kernel_combos(&residues)
            .into_iter()
            .map(|c| {
                let mut map = vec![0u32; d];
                for (b, phi) in self.endo.iter().enumerate() {
                    if c >> b & 1 == 1 {
                        for (x, y) in map.iter_mut().zip(phi) {
                            *x ^= y;
                        }
                    }
                }
                map
            })
            .collect()
    }

    /// Looks for an element `e` of `End(V, U)` (basis elements and sums of
    /// two) with `e` or `e + 1` having a proper Fitting image.
    fn splits(&self, u: &F2Space) -> bool {
        let basis = self.pair_endomorphisms(u);
        let d = self.d;
        let proper = |e: &F2Map| {
            for shift in [false, true] {
                let mut x = e.clone();
                if shift {
                    for (i, c) in x.iter_mut().enumerate() {
                        *c ^= 1 << i;
                    }
                }
                let mut power: F2Map = (0..d).map(|i| 1u32 << i).collect();
                let mut base = x;
                let mut k = d;
                while k > 0 {
                    if k & 1 == 1 {
                        power = compose(&base, &power);
                    }
                    base = compose(&base, &base);
                    k >>= 1;
                }
                let r = f2_rank(&power);
                if r > 0 && r < d {
                    return true;
                }
            }
            false
        };
        if basis.iter().any(|e| proper(e)) {
            return true;
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let e: F2Map = basis[i].iter().zip(&basis[j]).map(|(a, b)| a ^ b).collect();
                if proper(&e) {
                    return true;
                }
            }
        }
        false
    }

    /// Isomorphism invariants of `(V, U)` used to bucket candidates.
    fn invariants(&self, u: &F2Space, n: usize) -> Vec<usize> {
        let mut key = self.parts.clone();
        key.push(usize::MAX);
        let mut tj_u = u.clone();
        let mut tj_v: F2Space = F2Space::span((0..self.d).map(|i| 1u32 << i));
        let mut ker_j = F2Space::default();
        let mut ker_map: F2Map = (0..self.d).map(|i| 1u32 << i).collect();
        for _ in 0..=n {
            key.push(tj_u.dim());
            let sum = tj_v.sum(u);
            key.push(sum.dim());
            key.push(ker_j.sum(u).dim());
            tj_u = F2Space::span(tj_u.0.iter().map(|&b| apply(&self.t, b)));
            tj_v = F2Space::span(tj_v.0.iter().map(|&b| apply(&self.t, b)));
            ker_map = compose(&self.t, &ker_map);
            let images: Vec<u128> = ker_map.iter().map(|&x| x as u128).collect();
            ker_j = F2Space::span(kernel_combos(&images).into_iter().map(|c| c as u32));
        }
        key
    }

    /// The pair over `F_p` spanned by the 0/1 lifts of the F₂ basis of `U`,
    /// provided the lift keeps the dimension.
    fn lift(&self, u: &F2Space, n: usize, field: FieldPrime) -> Option<Representation> {
        let d = self.d;
        let blocks: Vec<Matrix> = self.parts.iter().map(|&p| jordan_block(field, p)).collect();
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let t = Matrix::block_diag(field, &refs);
        let mut vectors = Vec::new();
        for &b in &u.0 {
            let mut v: Vec<u64> = (0..d).map(|i| (b >> i & 1) as u64).collect();
            for _ in 0..n {
                vectors.push(v.clone());
                v = t.mul_vec(&v);
            }
        }
        let span = Subspace::span(field, d, &vectors);
        if span.dim() != u.dim() {
            return None;
        }
        pair_rep(n, field, &t, &span).ok()
    }
}

/// Partitions with parts at most `max_part` and sum exactly `total`, in
/// decreasing lexicographic order.
fn partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Outcome of an enumeration run, with bookkeeping counters.
#[derive(Clone, Debug)]
pub struct SubspaceEnumeration {
    pub n: usize,
    pub bound: usize,
    /// Indecomposables in order of discovery (increasing `dim V`).
    pub objects: Vec<Arc<Representation>>,
    pub pairs_examined: usize,
    pub candidates: usize,
    pub lift_failures: usize,
}

impl SubspaceEnumeration {
    /// Number of objects with `dim V ≤ bound`.
    pub fn count_up_to(&self, bound: usize) -> usize {
        self.objects.iter().filter(|o| o.dims()[1] <= bound).count()
    }
}

pub const MAX_SUBSPACE_N: usize = 4;
const MAX_AMBIENT_DIM: usize = 11;

/// All indecomposables of `S(n)` with `dim V ≤ bound`, up to isomorphism.
pub fn enumerate_subspace_indecomposables(
    n: usize,
    bound: usize,
    field: FieldPrime,
) -> Result<SubspaceEnumeration> {
    enumerate(n, bound, field, true)
}

/// Same as [`enumerate_subspace_indecomposables`] without the `P^1`
/// pruning; every invariant subspace of every ambient module is examined.
pub fn enumerate_subspace_indecomposables_exhaustive(
    n: usize,
    bound: usize,
    field: FieldPrime,
) -> Result<SubspaceEnumeration> {
    enumerate(n, bound, field, false)
}

fn enumerate(n: usize, bound: usize, field: FieldPrime, prune: bool) -> Result<SubspaceEnumeration> {
    if n == 0 || n > MAX_SUBSPACE_N {
        return Err(Error::InvalidRange(format!(
            "S(n) enumeration supports 1 <= n <= {MAX_SUBSPACE_N}"
        )));
    }
    if bound > MAX_AMBIENT_DIM {
        return Err(Error::InvalidRange(format!(
            "ambient dimension bound above {MAX_AMBIENT_DIM}"
        )));
    }
    let mut result = SubspaceEnumeration {
        n,
        bound,
        objects: Vec::new(),
        pairs_examined: 0,
        candidates: 0,
        lift_failures: 0,
    };
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for total in 1..=bound {
        for parts in partitions(total, n) {
            let v = Ambient::new(&parts, prune);
            if !v.may_carry_indecomposables() {
                continue;
            }
            for u in v.invariant_subspaces() {
                if !v.final_conditions(&u) {
                    continue;
                }
                result.pairs_examined += 1;
                if v.splits(&u) {
                    continue;
                }
                result.candidates += 1;
                let key = v.invariants(&u, n);
                let bucket = buckets.entry(key).or_default();
                let Some(rep) = v.lift(&u, n, field) else {
                    result.lift_failures += 1;
                    continue;
                };
                let rep = Arc::new(rep);
                if bucket
                    .iter()
                    .any(|&i| is_isomorphic_indecomposable(&result.objects[i], &rep))
                {
                    continue;
                }
                if end_local_data(&rep)?.is_indecomposable() {
                    bucket.push(result.objects.len());
                    result.objects.push(rep);
                }
            }
        }
    }
    Ok(result)
}

/// `S(n)` catalog from an enumeration at `bound + 1`, failing with
/// `EnumerationUnstable` if objects appear beyond `bound`.
pub fn subspace_catalog(n: usize, bound: usize, field: FieldPrime) -> Result<CategoryCatalog> {
    let run = enumerate_subspace_indecomposables(n, bound + 1, field)?;
    let (lower, upper) = (run.count_up_to(bound), run.objects.len());
    if lower != upper {
        return Err(Error::EnumerationUnstable {
            bound,
            next: bound + 1,
            lower,
            upper,
        });
    }
    catalog_from_objects(n, field, run.objects)
}

fn catalog_from_objects(
    n: usize,
    field: FieldPrime,
    mut reps: Vec<Arc<Representation>>,
) -> Result<CategoryCatalog> {
    reps.sort_by_cached_key(|r| {
        (
            r.dims()[1],
            r.dims()[0],
            jordan_type(r.map(LOOP_V)),
            jordan_type(r.map(LOOP_U)),
        )
    });
    let top_proj = Arc::new(picket(n, n, 0, field)?);
    let top_full = Arc::new(picket(n, n, n, field)?);
    let mut objects: Vec<CatalogObject> = Vec::with_capacity(reps.len());
    for rep in reps {
        let base = pair_label(&rep);
        let repeats = objects
            .iter()
            .filter(|o| o.label == base || o.label.starts_with(&format!("{base}#")))
            .count();
        let label = if repeats == 0 {
            base
        } else {
            format!("{base}#{}", repeats + 1)
        };
        let pi = [&top_proj, &top_full]
            .iter()
            .any(|p| p.dims() == rep.dims() && is_isomorphic_indecomposable(p, &rep));
        objects.push(CatalogObject {
            label,
            rep,
            projective: pi,
            injective: pi,
        });
    }
    let quiver = subspace_quiver(n);
    let catalog = CategoryCatalog {
        id: quiver.name.clone(),
        kind: CategoryKind::Subspace(n),
        quiver,
        field,
        objects,
    };
    catalog.validate()?;
    Ok(catalog)
}

/// Whether `(V, U)` has cyclic ambient space, i.e. is a picket.
pub fn is_picket(rep: &Representation) -> bool {
    jordan_type(rep.map(LOOP_V)).len() == 1
}
