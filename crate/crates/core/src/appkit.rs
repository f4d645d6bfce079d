//! Ready-made sequences for the functors measured on module and subspace
//! categories, each with a direct measurement to compare against.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::arquiver::ARQuiver;
use crate::catalogs::{
    injective_path_map, jordan_multiplicities, picket, projective_path_map, projective_rep,
    CategoryCatalog, CategoryKind, SUB_ARROW, SUB_LOOP_U, SUB_LOOP_V,
};
use crate::error::{Error, Result};
use crate::exactla::{FieldPrime, Matrix};
use crate::hammock::{
    contravariant_hammock, covariant_hammock, verify_theorem_isolated, HammockFunction, LeftExactSeq,
    RightExactSeq, TheoremVerdict,
};
use crate::repcore::{
    direct_sum_with_maps, induced_on_cokernels, morphism_into_sum, Morphism, Representation,
};

pub type Oracle = Box<dyn Fn(&Representation) -> usize + Send + Sync>;

#[derive(Clone, Debug)]
pub enum PresetSeq {
    Right(RightExactSeq),
    Left(LeftExactSeq),
}

pub struct FunctorPreset {
    pub name: String,
    pub seq: PresetSeq,
    pub oracle: Oracle,
    pub notes: Vec<String>,
}

impl std::fmt::Debug for FunctorPreset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FunctorPreset")
            .field("name", &self.name)
            .field("seq", &self.seq)
            .field("notes", &self.notes)
            .finish()
    }
}

impl FunctorPreset {
    fn right(name: impl Into<String>, seq: RightExactSeq, oracle: Oracle) -> Self {
        FunctorPreset {
            name: name.into(),
            seq: PresetSeq::Right(seq),
            oracle,
            notes: Vec::new(),
        }
    }

    /// `(X, Y, Z)` of the underlying sequence.
    pub fn terms(&self) -> (Arc<Representation>, Arc<Representation>, Arc<Representation>) {
        match &self.seq {
            PresetSeq::Right(s) => (s.x().clone(), s.y().clone(), s.z.clone()),
            PresetSeq::Left(s) => (s.x.clone(), s.y().clone(), s.z().clone()),
        }
    }

    pub fn hammock(&self, ar: &ARQuiver) -> Result<HammockFunction> {
        match &self.seq {
            PresetSeq::Right(s) => covariant_hammock(s, ar),
            PresetSeq::Left(s) => contravariant_hammock(s, ar),
        }
    }

    pub fn verify(&self, ar: &ARQuiver) -> Result<(HammockFunction, TheoremVerdict)> {
        let h = self.hammock(ar)?;
        let (x, y, z) = self.terms();
        let verdict = verify_theorem_isolated(&x, &y, &z, &h, ar)?;
        Ok((h, verdict))
    }

    pub fn oracle_values(&self, ar: &ARQuiver) -> Vec<usize> {
        (0..ar.len()).map(|i| (self.oracle)(ar.rep(i))).collect()
    }

    /// Labels where the hammock and the oracle disagree.
    pub fn oracle_mismatches(&self, ar: &ARQuiver) -> Result<Vec<String>> {
        let h = self.hammock(ar)?;
        Ok((0..ar.len())
            .filter(|&i| h.values[i] != (self.oracle)(ar.rep(i)))
            .map(|i| format!("{}: hammock {} oracle {}", ar.label(i), h.values[i], (self.oracle)(ar.rep(i))))
            .collect())
    }
}

fn require_dynkin(catalog: &CategoryCatalog) -> Result<()> {
    match catalog.kind {
        CategoryKind::Dynkin => Ok(()),
        _ => Err(Error::BadPath(format!("path presets need a Dynkin catalog, not {}", catalog.id))),
    }
}

fn require_subspace(catalog: &CategoryCatalog) -> Result<usize> {
    match catalog.kind {
        CategoryKind::Subspace(n) => Ok(n),
        _ => Err(Error::PreconditionViolated(format!("{} is not a subspace category", catalog.id))),
    }
}

fn zero_rep(catalog: &CategoryCatalog) -> Arc<Representation> {
    Arc::new(Representation::zero(catalog.quiver.clone(), catalog.field))
}

fn kernel_dim(m: &Representation, path: &[usize], start: usize) -> usize {
    m.dims()[start] - m.path_map(path).rank()
}

fn parse_checked_path(catalog: &CategoryCatalog, text: &str) -> Result<(Vec<usize>, usize, usize)> {
    require_dynkin(catalog)?;
    let path = catalog.quiver.parse_path(text)?;
    let (i, j) = catalog.quiver.path_ends(&path).expect("parsed paths compose");
    Ok((path, i, j))
}

/// `P(i)/(π) -> 0 -> 0`, measuring `dim Ker M_π`.
pub fn preset_ker_path(catalog: &CategoryCatalog, text: &str) -> Result<FunctorPreset> {
    let (path, i, _) = parse_checked_path(catalog, text)?;
    let p = projective_path_map(&catalog.quiver, catalog.field, &path)?;
    let (q, _) = catalog.cokernel(&p);
    let u = Morphism::zero(q, zero_rep(catalog));
    let seq = RightExactSeq::from_morphism(u, catalog);
    Ok(FunctorPreset::right(
        format!("ker@{text}"),
        seq,
        Box::new(move |m| kernel_dim(m, &path, i)),
    ))
}

/// `P(i) -> P(i)/(π) -> 0`, measuring `dim Im M_π`.
pub fn preset_im_path(catalog: &CategoryCatalog, text: &str) -> Result<FunctorPreset> {
    let (path, _, _) = parse_checked_path(catalog, text)?;
    let p = projective_path_map(&catalog.quiver, catalog.field, &path)?;
    let (_, proj) = catalog.cokernel(&p);
    let seq = RightExactSeq::from_morphism(proj, catalog);
    Ok(FunctorPreset::right(
        format!("im@{text}"),
        seq,
        Box::new(move |m| m.path_map(&path).rank()),
    ))
}

/// `P(j) -> P(i) -> P(i)/(π) -> 0`, measuring `dim Cok M_π`.
pub fn preset_cok_path(catalog: &CategoryCatalog, text: &str) -> Result<FunctorPreset> {
    let (path, _, j) = parse_checked_path(catalog, text)?;
    let p = projective_path_map(&catalog.quiver, catalog.field, &path)?;
    let seq = RightExactSeq::from_morphism(p, catalog);
    Ok(FunctorPreset::right(
        format!("cok@{text}"),
        seq,
        Box::new(move |m| m.dims()[j] - m.path_map(&path).rank()),
    ))
}

/// `P(j)/(ρ) -> P(i)/(πρ) -> P(i)/(π) -> 0` for `π: i -> j`, `ρ: j -> k`,
/// measuring `dim Ker M_ρ − dim Ker M_{πρ} + dim Ker M_π`.
pub fn preset_homology(catalog: &CategoryCatalog, pi: &str, rho: &str) -> Result<FunctorPreset> {
    let (p, i, j) = parse_checked_path(catalog, pi)?;
    let (r, j2, _) = parse_checked_path(catalog, rho)?;
    if j != j2 {
        return Err(Error::BadPath(format!("{pi} and {rho} are not composable")));
    }
    let pr: Vec<usize> = p.iter().chain(&r).copied().collect();
    let (q, f) = (&catalog.quiver, catalog.field);
    let p_rho = projective_path_map(q, f, &r)?;
    let p_pirho = projective_path_map(q, f, &pr)?;
    let p_pi = projective_path_map(q, f, &p)?;
    let (_, px) = catalog.cokernel(&p_rho);
    let (_, py) = catalog.cokernel(&p_pirho);
    let u = induced_on_cokernels(&p_pi, &px, &py);
    let seq = RightExactSeq::from_morphism(u, catalog);
    Ok(FunctorPreset::right(
        format!("homology@{pi},{rho}"),
        seq,
        Box::new(move |m| kernel_dim(m, &r, j) + kernel_dim(m, &p, i) - kernel_dim(m, &pr, i)),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MuKind {
    Ker,
    Im,
    Cok,
}

/// A linear combination of parallel paths `i -> j`; an empty path stands
/// for the idempotent `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathElement {
    pub terms: Vec<(u64, Vec<usize>)>,
    pub ends: Option<(usize, usize)>,
}

/// Parses `2*alpha + beta.gamma`, `e1` (vertices counted from 1) or `0`.
pub fn parse_element(catalog: &CategoryCatalog, text: &str) -> Result<PathElement> {
    require_dynkin(catalog).map_err(|e| Error::BadElement(e.to_string()))?;
    let field = catalog.field;
    let quiver = &catalog.quiver;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut ends: Option<(usize, usize)> = None;
    for raw in compact.replace('-', "+-").split('+').filter(|t| !t.is_empty()) {
        let (neg, body) = match raw.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, raw),
        };
        let (coef, atom) = match body.split_once('*') {
            Some((c, a)) => (
                c.parse::<i64>()
                    .map_err(|_| Error::BadElement(format!("bad coefficient in {raw}")))?,
                a,
            ),
            None => (1, body),
        };
        let coef = field.reduce(if neg { -coef } else { coef });
        if atom == "0" {
            continue;
        }
        let (path, term_ends) = match atom.strip_prefix('e').and_then(|v| v.parse::<usize>().ok()) {
            Some(v) if quiver.arrow_index(atom).is_none() => {
                if v == 0 || v > quiver.vertex_count {
                    return Err(Error::BadElement(format!("no vertex {v}")));
                }
                (Vec::new(), (v - 1, v - 1))
            }
            _ => {
                let path = quiver
                    .parse_path(atom)
                    .map_err(|e| Error::BadElement(e.to_string()))?;
                let e = quiver.path_ends(&path).expect("parsed paths compose");
                (path, e)
            }
        };
        if ends.is_some_and(|e| e != term_ends) {
            return Err(Error::BadElement(format!("{text}: paths are not parallel")));
        }
        ends = Some(term_ends);
        if coef != 0 {
            terms.push((coef, path));
        }
    }
    if terms.is_empty() {
        ends = None;
    }
    Ok(PathElement { terms, ends })
}

/// Right multiplication by the element on the total space of `m`.
fn element_action(m: &Representation, a: &PathElement) -> Matrix {
    let f = m.field();
    let total = m.total_dim();
    let mut out = Matrix::zeros(f, total, total);
    let Some((i, j)) = a.ends else {
        return out;
    };
    let offset = |v: usize| m.dims()[..v].iter().sum::<usize>();
    let mut block = Matrix::zeros(f, m.dims()[j], m.dims()[i]);
    for (c, path) in &a.terms {
        let pm = if path.is_empty() {
            Matrix::identity(f, m.dims()[i])
        } else {
            m.path_map(path)
        };
        block = block.add(&pm.scale(*c));
    }
    out.paste(offset(j), offset(i), &block);
    out
}

/// Left multiplication by `a` on `R = ⊕ P(v)`.
fn left_multiplication(catalog: &CategoryCatalog, a: &PathElement) -> Result<Morphism> {
    let (q, f) = (&catalog.quiver, catalog.field);
    let parts: Vec<_> = (0..q.vertex_count).map(|v| projective_rep(q, f, v)).collect();
    let r = direct_sum_with_maps(q, f, &parts);
    let Some((i, j)) = a.ends else {
        return Ok(Morphism::zero(r.sum.clone(), r.sum.clone()));
    };
    let mut la = Morphism::zero(parts[j].clone(), parts[i].clone());
    for (c, path) in &a.terms {
        let pm = if path.is_empty() {
            Morphism::identity(parts[i].clone())
        } else {
            projective_path_map(q, f, path)?.retarget(parts[j].clone(), parts[i].clone())
        };
        la = la.add(&pm.scale(*c));
    }
    Ok(r.injections[i].after(&la).after(&r.projections[j]))
}

/// `R/aR -> 0`, `R -> R/aR -> 0` or `R -a-> R -> R/aR -> 0`, measuring
/// kernel, image or cokernel of `m ↦ m a`.
pub fn preset_mu_elem(catalog: &CategoryCatalog, text: &str, kind: MuKind) -> Result<FunctorPreset> {
    let a = parse_element(catalog, text)?;
    let u = left_multiplication(catalog, &a)?;
    let (q, proj) = catalog.cokernel(&u);
    let (name, seq) = match kind {
        MuKind::Ker => ("mu-ker", RightExactSeq::from_morphism(Morphism::zero(q, zero_rep(catalog)), catalog)),
        MuKind::Im => ("mu-im", RightExactSeq::from_morphism(proj, catalog)),
        MuKind::Cok => ("mu-cok", RightExactSeq::from_morphism(u, catalog)),
    };
    let oracle: Oracle = Box::new(move |m| {
        let r = element_action(m, &a).rank();
        match kind {
            MuKind::Im => r,
            MuKind::Ker | MuKind::Cok => m.total_dim() - r,
        }
    });
    Ok(FunctorPreset::right(format!("{name}@{text}"), seq, oracle))
}

/// `e_i ↦ e_{i+1}` from `P^a` to `P^b`.
fn shift_map(field: FieldPrime, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, b, a);
    for i in 0..a {
        if i + 1 < b {
            m.set(i + 1, i, 1);
        }
    }
    m
}

/// `e_i ↦ e_i` from `P^a` to `P^b`, killing `e_i` with `i ≥ b`.
fn truncation_map(field: FieldPrime, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(field, b, a);
    for i in 0..a.min(b) {
        m.set(i, i, 1);
    }
    m
}

/// Morphism of pairs with ambient component `v_map`; the subspace component
/// is its restriction.
pub fn pair_morphism(
    source: &Arc<Representation>,
    target: &Arc<Representation>,
    v_map: &Matrix,
) -> Result<Morphism> {
    let f = source.field();
    let src_incl = source.map(SUB_ARROW);
    let tgt_incl = target.map(SUB_ARROW);
    let restricted = v_map.mul(src_incl);
    let mut u_map = Matrix::zeros(f, target.dims()[0], source.dims()[0]);
    for c in 0..restricted.cols() {
        let x = tgt_incl
            .solve(&restricted.column(c))
            .ok_or_else(|| Error::Shape("ambient map does not preserve the subspaces".into()))?;
        for (r, val) in x.into_iter().enumerate() {
            u_map.set(r, c, val);
        }
    }
    Morphism::new(source.clone(), target.clone(), vec![u_map, v_map.clone()])
}

fn picket_arc(n: usize, m: usize, l: usize, field: FieldPrime) -> Result<Arc<Representation>> {
    Ok(Arc::new(picket(n, m, l, field)?))
}

/// `X -> ⊕ targets` with the given ambient components, omitting zero targets.
fn map_into_sum(
    catalog: &CategoryCatalog,
    x: &Arc<Representation>,
    targets: Vec<(Arc<Representation>, Matrix)>,
) -> Result<Morphism> {
    let targets: Vec<_> = targets.into_iter().filter(|(t, _)| !t.is_zero()).collect();
    let parts: Vec<_> = targets.iter().map(|(t, _)| t.clone()).collect();
    let sum = direct_sum_with_maps(&catalog.quiver, catalog.field, &parts);
    let maps = targets
        .iter()
        .map(|(t, v)| pair_morphism(x, t, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(morphism_into_sum(&sum, &maps))
}

fn check_range(n: usize, m: usize, max: usize) -> Result<()> {
    if m == 0 || m > max {
        return Err(Error::InvalidRange(format!("m = {m} outside 1..={max} for n = {n}")));
    }
    Ok(())
}

fn ambient_oracle(n: usize, m: usize) -> Oracle {
    Box::new(move |rep| jordan_multiplicities(rep.map(SUB_LOOP_V), n)[m - 1])
}

fn sub_oracle(n: usize, m: usize) -> Oracle {
    Box::new(move |rep| jordan_multiplicities(rep.map(SUB_LOOP_U), n)[m - 1])
}

fn factor_oracle(n: usize, m: usize) -> Oracle {
    Box::new(move |rep| jordan_multiplicities(&factor_operator(rep), n)[m - 1])
}

/// `T` on `V/U`.
pub fn factor_operator(rep: &Representation) -> Matrix {
    let qd = rep.map(SUB_ARROW).column_space().quotient_data();
    qd.projection.mul(rep.map(SUB_LOOP_V)).mul(&qd.section)
}

/// `P^m_0 -> P^{m+1}_0 ⊕ P^{m−1}_0` for `m < n`; for `m = n` the sequence
/// `P^n_0 -> P^n_1` as printed, flagged when it disagrees with the oracle.
pub fn preset_mult_ambient(catalog: &CategoryCatalog, m: usize) -> Result<FunctorPreset> {
    let n = require_subspace(catalog)?;
    check_range(n, m, n)?;
    let f = catalog.field;
    let x = picket_arc(n, m, 0, f)?;
    let u = if m < n {
        map_into_sum(
            catalog,
            &x,
            vec![
                (picket_arc(n, m + 1, 0, f)?, shift_map(f, m, m + 1)),
                (picket_arc(n, m - 1, 0, f)?, truncation_map(f, m, m - 1)),
            ],
        )?
    } else {
        pair_morphism(&x, &picket_arc(n, n, 1, f)?, &Matrix::identity(f, n))?
    };
    let seq = RightExactSeq::from_morphism(u, catalog);
    let mut preset = FunctorPreset::right(format!("mult-ambient@{m}"), seq, ambient_oracle(n, m));
    if m == n {
        preset.notes.push(format!("printed sequence P^{n}_0 -> P^{n}_1; compare mult-ambient-alt@{n}"));
    }
    Ok(preset)
}

/// `P^n_0 -> P^{n−1}_0`, the image of the source map `P^n -> P^{n−1}`.
pub fn preset_mult_ambient_alt(catalog: &CategoryCatalog, m: usize) -> Result<FunctorPreset> {
    let n = require_subspace(catalog)?;
    if m != n {
        return Err(Error::InvalidRange(format!("the alternative sequence exists for m = n = {n} only")));
    }
    let f = catalog.field;
    let x = picket_arc(n, n, 0, f)?;
    let u = map_into_sum(catalog, &x, vec![(picket_arc(n, n - 1, 0, f)?, truncation_map(f, n, n - 1))])?;
    let u = if u.target().is_zero() {
        Morphism::zero(x, zero_rep(catalog))
    } else {
        u
    };
    let seq = RightExactSeq::from_morphism(u, catalog);
    Ok(FunctorPreset::right(format!("mult-ambient-alt@{m}"), seq, ambient_oracle(n, m)))
}

/// `P^m_m -> P^{m+1}_{m+1} ⊕ P^{m−1}_{m−1}`, or `P^n_n -> P^{n−1}_{n−1}`.
pub fn preset_mult_sub(catalog: &CategoryCatalog, m: usize) -> Result<FunctorPreset> {
    let n = require_subspace(catalog)?;
    check_range(n, m, n)?;
    let f = catalog.field;
    let x = picket_arc(n, m, m, f)?;
    let mut targets = vec![(picket_arc(n, m - 1, m - 1, f)?, truncation_map(f, m, m - 1))];
    if m < n {
        targets.insert(0, (picket_arc(n, m + 1, m + 1, f)?, shift_map(f, m, m + 1)));
    }
    let u = if targets.iter().all(|(t, _)| t.is_zero()) {
        Morphism::zero(x.clone(), zero_rep(catalog))
    } else {
        map_into_sum(catalog, &x, targets)?
    };
    let seq = RightExactSeq::from_morphism(u, catalog);
    Ok(FunctorPreset::right(format!("mult-sub@{m}"), seq, sub_oracle(n, m)))
}

/// `P^n_{n−m} -> P^n_{n−m−1} ⊕ P^n_{n−m+1}`, the covers of the almost split
/// sequence starting at `P^m`, with ambient components `T` and `1`.
pub fn preset_mult_factor(catalog: &CategoryCatalog, m: usize) -> Result<FunctorPreset> {
    let n = require_subspace(catalog)?;
    if m == n {
        return Err(Error::InvalidRange(format!("no factor sequence for m = n = {n}")));
    }
    check_range(n, m, n - 1)?;
    let f = catalog.field;
    let x = picket_arc(n, n, n - m, f)?;
    let u = map_into_sum(
        catalog,
        &x,
        vec![
            (picket_arc(n, n, n - m - 1, f)?, shift_map(f, n, n)),
            (picket_arc(n, n, n - m + 1, f)?, Matrix::identity(f, n)),
        ],
    )?;
    let seq = RightExactSeq::from_morphism(u, catalog);
    Ok(FunctorPreset::right(format!("mult-factor@{m}"), seq, factor_oracle(n, m)))
}

/// `P^1_1 -> 0 -> 0`, counting the indecomposable summands of `U`.
pub fn preset_count_sub_summands(catalog: &CategoryCatalog) -> Result<FunctorPreset> {
    let n = require_subspace(catalog)?;
    let x = picket_arc(n, 1, 1, catalog.field)?;
    let seq = RightExactSeq::from_morphism(Morphism::zero(x, zero_rep(catalog)), catalog);
    Ok(FunctorPreset::right(
        "count-sub-summands",
        seq,
        Box::new(move |rep| jordan_multiplicities(rep.map(SUB_LOOP_U), n).iter().sum()),
    ))
}

/// `0 -> Ker v -> I(j) -> I(i)` with `v = I(π)` for `π: i -> j`; contravariant,
/// measuring `dim Ker A_π`.
pub fn preset_ker_path_dual(catalog: &CategoryCatalog, text: &str) -> Result<FunctorPreset> {
    let (path, i, _) = parse_checked_path(catalog, text)?;
    let v = injective_path_map(&catalog.quiver, catalog.field, &path)?;
    let seq = LeftExactSeq::from_morphism(v);
    Ok(FunctorPreset {
        name: format!("ker-dual@{text}"),
        seq: PresetSeq::Left(seq),
        oracle: Box::new(move |m| kernel_dim(m, &path, i)),
        notes: Vec::new(),
    })
}

pub const PRESET_NAMES: &[&str] = &[
    "ker@<path>",
    "im@<path>",
    "cok@<path>",
    "homology@<path>,<path>",
    "mu-ker@<elem>",
    "mu-im@<elem>",
    "mu-cok@<elem>",
    "ker-dual@<path>",
    "mult-ambient@<m>",
    "mult-ambient-alt@<m>",
    "mult-sub@<m>",
    "mult-factor@<m>",
    "count-sub-summands",
];

/// Looks up a preset by its registry name, e.g. `cok@alpha` or `mult-sub@3`.
pub fn preset_by_name(catalog: &CategoryCatalog, name: &str) -> Result<FunctorPreset> {
    let (head, arg) = match name.split_once('@') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let need = || arg.ok_or_else(|| Error::Parse(format!("{head} needs an argument after @")));
    let number = || -> Result<usize> {
        need()?
            .parse()
            .map_err(|_| Error::Parse(format!("{name}: expected a number")))
    };
    match head {
        "ker" => preset_ker_path(catalog, need()?),
        "im" => preset_im_path(catalog, need()?),
        "cok" => preset_cok_path(catalog, need()?),
        "ker-dual" => preset_ker_path_dual(catalog, need()?),
        "homology" => {
            let (p, q) = need()?
                .split_once(',')
                .ok_or_else(|| Error::Parse("homology@<path>,<path>".into()))?;
            preset_homology(catalog, p, q)
        }
        "mu-ker" => preset_mu_elem(catalog, need()?, MuKind::Ker),
        "mu-im" => preset_mu_elem(catalog, need()?, MuKind::Im),
        "mu-cok" => preset_mu_elem(catalog, need()?, MuKind::Cok),
        "mult-ambient" => preset_mult_ambient(catalog, number()?),
        "mult-ambient-alt" => preset_mult_ambient_alt(catalog, number()?),
        "mult-sub" => preset_mult_sub(catalog, number()?),
        "mult-factor" => preset_mult_factor(catalog, number()?),
        "count-sub-summands" => preset_count_sub_summands(catalog),
        _ => Err(Error::Parse(format!("unknown functor {name}"))),
    }
}

/// Outcome of the `m = n` ambient comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientTopReport {
    pub printed_matches: bool,
    pub printed_mismatches: Vec<String>,
    pub alternative_matches: bool,
}

impl AmbientTopReport {
    pub fn flagged(&self) -> bool {
        !self.printed_matches
    }

    pub fn to_json(&self) -> Value {
        json!({
            "printed_matches": self.printed_matches,
            "printed_mismatches": self.printed_mismatches,
            "alternative_matches": self.alternative_matches,
        })
    }
}

/// Evaluates the printed `m = n` ambient sequence against the Jordan oracle,
/// together with the alternative from the source map.
pub fn compare_ambient_top(ar: &ARQuiver) -> Result<AmbientTopReport> {
    let n = require_subspace(&ar.catalog)?;
    let printed = preset_mult_ambient(&ar.catalog, n)?.oracle_mismatches(ar)?;
    let alt = preset_mult_ambient_alt(&ar.catalog, n)?.oracle_mismatches(ar)?;
    Ok(AmbientTopReport {
        printed_matches: printed.is_empty(),
        printed_mismatches: printed,
        alternative_matches: alt.is_empty(),
    })
}

/// Jordan multiplicities of `V`, `U` and `V/U`.
pub fn pair_multiplicities(rep: &Representation, n: usize) -> [Vec<usize>; 3] {
    [
        jordan_multiplicities(rep.map(SUB_LOOP_V), n),
        jordan_multiplicities(rep.map(SUB_LOOP_U), n),
        jordan_multiplicities(&factor_operator(rep), n),
    ]
}

/// Whether, along every τ-orbit, a `P^m` summand of `V` at `X` reappears in
/// `U` of `τX`, as `P^{n−m}` in `V/U` of `τ²X`, in `V` of `τ³X`, in `U` of
/// `τ⁴X`, and as `P^m` in `V/U` of `τ⁵X`.
pub fn check_periodicity_pattern(ar: &ARQuiver, m: usize) -> Result<PeriodicityReport> {
    let n = require_subspace(&ar.catalog)?;
    check_range(n, m, n - 1)?;
    let omega = n - m;
    // (position in the orbit, 0 = V / 1 = U / 2 = V/U, block size)
    let pattern = [(0, 0, m), (1, 1, m), (2, 2, omega), (3, 0, omega), (4, 1, omega), (5, 2, m)];
    let mut checked = 0;
    let mut failures = Vec::new();
    for x in 0..ar.len() {
        let mut orbit = vec![x];
        for _ in 0..6 {
            match ar.tau[*orbit.last().expect("nonempty")] {
                Some(t) => orbit.push(t),
                None => break,
            }
        }
        if orbit.len() < 7 {
            continue;
        }
        checked += 1;
        let values: Vec<usize> = pattern
            .iter()
            .map(|&(k, part, size)| pair_multiplicities(ar.rep(orbit[k]), n)[part][size - 1])
            .collect();
        if values.iter().any(|&v| v != values[0]) || orbit[6] != x {
            failures.push(format!("{}: {:?}", ar.label(x), values));
        }
    }
    Ok(PeriodicityReport { checked, failures })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl PeriodicityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arquiver::build_ar_quiver;
    use crate::catalogs::build_catalog;

    fn ar(id: &str) -> ARQuiver {
        build_ar_quiver(Arc::new(build_catalog(id, FieldPrime::default(), 8).unwrap())).unwrap()
    }

    #[test]
    fn element_parsing() {
        let c = build_catalog("e6", FieldPrime::default(), 8).unwrap();
        let a = parse_element(&c, "2*alpha").unwrap();
        assert_eq!(a.ends, Some((0, 1)));
        assert_eq!(parse_element(&c, "e3").unwrap().ends, Some((2, 2)));
        assert_eq!(parse_element(&c, "0").unwrap().terms, vec![]);
        assert!(matches!(parse_element(&c, "alpha+beta"), Err(Error::BadElement(_))));
    }

    #[test]
    fn a3_presets_match_oracles() {
        let ar = ar("a3");
        for name in ["ker@a", "im@b", "cok@a.b", "homology@a,b", "mu-ker@e2", "mu-cok@a", "mu-im@0"] {
            let p = preset_by_name(&ar.catalog, name).unwrap();
            assert!(p.oracle_mismatches(&ar).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn small_subspace_presets() {
        let ar = ar("sub:2");
        for name in ["mult-ambient@1", "mult-sub@1", "mult-sub@2", "mult-factor@1", "count-sub-summands", "mult-ambient-alt@2"] {
            let p = preset_by_name(&ar.catalog, name).unwrap();
            assert!(p.oracle_mismatches(&ar).unwrap().is_empty(), "{name}");
        }
        assert!(matches!(preset_by_name(&ar.catalog, "mult-factor@2"), Err(Error::InvalidRange(_))));
    }

    #[test]
    fn unknown_names_are_rejected() {
        let ar = ar("a2");
        assert!(matches!(preset_by_name(&ar.catalog, "frob@a"), Err(Error::Parse(_))));
        assert!(matches!(preset_by_name(&ar.catalog, "ker@zeta"), Err(Error::BadPath(_))));
        assert!(preset_by_name(&ar.catalog, "mult-sub@1").is_err());
    }
}
