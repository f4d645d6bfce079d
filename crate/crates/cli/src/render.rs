//! Text renderings of an AR quiver, optionally overlaid with a hammock.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write;

use hammock_core::arquiver::ARQuiver;
use hammock_core::hammock::{classify, report_json, HammockFunction, HammockReport, TheoremVerdict};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dot,
    Ascii,
    Tikz,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "ascii" => Ok(Format::Ascii),
            "tikz" => Ok(Format::Tikz),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s} (dot, ascii, tikz, json)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RenderSpec {
    pub format: Format,
    pub overlay: Option<HammockFunction>,
    pub verdict: Option<TheoremVerdict>,
    pub decorations: bool,
}

impl RenderSpec {
    pub fn plain(format: Format) -> Self {
        RenderSpec {
            format,
            overlay: None,
            verdict: None,
            decorations: true,
        }
    }
}

/// Column and row of every vertex: arrows advance one column, so `τ` moves
/// two columns left, and each `τ`-orbit keeps its own row. Each component is
/// laid out breadth first from its first vertex.
pub fn layout(ar: &ARQuiver) -> Vec<(usize, usize)> {
    let n = ar.len();
    let mut x: Vec<Option<i64>> = vec![None; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if x[start].is_some() {
            continue;
        }
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        x[start] = Some(0);
        while let Some(v) = queue.pop_front() {
            let xv = x[v].expect("queued vertices are placed");
            let next = ar
                .successors(v)
                .into_iter()
                .map(|(w, _)| (w, xv + 1))
                .chain(ar.predecessors(v).into_iter().map(|(w, _)| (w, xv - 1)));
            for (w, xw) in next {
                if x[w].is_none() {
                    x[w] = Some(xw);
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        components.push(members);
    }
    let mut columns = vec![0usize; n];
    let mut shift = 0i64;
    for members in &components {
        let min = members.iter().map(|&v| x[v].expect("placed")).min().unwrap_or(0);
        let max = members.iter().map(|&v| x[v].expect("placed")).max().unwrap_or(0);
        for &v in members {
            columns[v] = (x[v].expect("placed") - min + shift) as usize;
        }
        shift += max - min + 2;
    }
    // one row per τ-orbit; a vertex whose orbit row is already taken in its
    // column (possible on cyclic components) drops to the next free row
    let mut orbit = vec![usize::MAX; n];
    let mut orbits = 0;
    for v in 0..n {
        if orbit[v] != usize::MAX {
            continue;
        }
        let mut w = v;
        while let Some(a) = ar.tau[w].filter(|&a| orbit[a] == usize::MAX && a != v) {
            w = a;
        }
        let mut x = Some(w);
        while let Some(y) = x.filter(|&y| orbit[y] == usize::MAX) {
            orbit[y] = orbits;
            x = ar.tau_inverse(y);
        }
        orbits += 1;
    }
    let mut taken: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = vec![(0, 0); n];
    for v in 0..n {
        let mut row = orbit[v];
        while taken.contains_key(&(columns[v], row)) {
            row += 1;
        }
        taken.insert((columns[v], row), v);
        out[v] = (columns[v], row);
    }
    out
}

/// Decoration text per vertex (`source`, `sink`, `tangent +d`).
fn marks(ar: &ARQuiver, report: &HammockReport) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new(); ar.len()];
    for &c in &report.isolated_sources {
        out[c].push("source".to_string());
    }
    for &a in &report.isolated_sinks {
        out[a].push("sink".to_string());
    }
    for t in &report.tangents {
        if t.mesh.start.is_none() || t.mesh.end.is_none() {
            let v = t.mesh.end.or(t.mesh.start).expect("a mesh has an end term");
            out[v].push(format!("tangent +{}", t.defect));
        }
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn render(ar: &ARQuiver, spec: &RenderSpec) -> String {
    match spec.format {
        Format::Dot => render_dot(ar, spec),
        Format::Ascii => render_ascii(ar, spec),
        Format::Tikz => render_tikz(ar, spec),
        Format::Json => render_json(ar, spec),
    }
}

fn report_for(ar: &ARQuiver, spec: &RenderSpec) -> Option<HammockReport> {
    match (&spec.overlay, spec.decorations) {
        (Some(h), true) => Some(classify(h, ar)),
        _ => None,
    }
}

fn render_dot(ar: &ARQuiver, spec: &RenderSpec) -> String {
    let pos = layout(ar);
    let report = report_for(ar, spec);
    let marks = report.as_ref().map(|r| marks(ar, r));
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", escape(&ar.catalog.id)).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    writeln!(s, "  node [shape=box, fontname=\"Helvetica\"];").unwrap();
    for v in 0..ar.len() {
        let mut label = ar.label(v).to_string();
        let mut attrs = Vec::new();
        if let Some(h) = &spec.overlay {
            let value = h.values[v];
            label.push_str(&format!("\\n{value}"));
            if value > 0 {
                attrs.push("style=filled".to_string());
                attrs.push("fillcolor=\"#cfe2f3\"".to_string());
            }
        }
        if let Some(m) = &marks {
            if !m[v].is_empty() {
                attrs.push(format!("xlabel=\"{}\"", m[v].join(", ")));
                attrs.push("color=red".to_string());
                attrs.push("penwidth=2".to_string());
            }
        }
        attrs.insert(0, format!("label=\"{}\"", escape(&label)));
        writeln!(s, "  v{v} [{}];", attrs.join(", ")).unwrap();
    }
    let mut columns: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &(c, _)) in pos.iter().enumerate() {
        columns.entry(c).or_default().push(v);
    }
    for vs in columns.values() {
        let names: Vec<String> = vs.iter().map(|v| format!("v{v}")).collect();
        writeln!(s, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
    }
    for x in 0..ar.len() {
        for (y, m) in ar.successors(x) {
            if m == 1 {
                writeln!(s, "  v{x} -> v{y};").unwrap();
            } else {
                writeln!(s, "  v{x} -> v{y} [label=\"x{m}\"];").unwrap();
            }
        }
    }
    for c in 0..ar.len() {
        if let Some(a) = ar.tau[c] {
            let tangent = report.as_ref().and_then(|r| {
                r.tangents
                    .iter()
                    .find(|t| t.mesh.end == Some(c) && t.mesh.start == Some(a))
            });
            match tangent {
                Some(t) => writeln!(
                    s,
                    "  v{c} -> v{a} [style=dashed, color=red, constraint=false, label=\"tangent +{}\"];",
                    t.defect
                )
                .unwrap(),
                None => writeln!(s, "  v{c} -> v{a} [style=dashed, color=gray, constraint=false];").unwrap(),
            }
        }
    }
    s.push_str("}\n");
    s
}

fn cell(ar: &ARQuiver, spec: &RenderSpec, v: usize) -> String {
    match &spec.overlay {
        Some(h) => format!("{}({})", ar.label(v), h.values[v]),
        None => ar.label(v).to_string(),
    }
}

fn render_ascii(ar: &ARQuiver, spec: &RenderSpec) -> String {
    let pos = layout(ar);
    let cols = pos.iter().map(|p| p.0).max().map_or(0, |c| c + 1);
    let rows = pos.iter().map(|p| p.1).max().map_or(0, |r| r + 1);
    let mut grid = vec![vec![String::new(); cols]; rows];
    for v in 0..ar.len() {
        grid[pos[v].1][pos[v].0] = cell(ar, spec, v);
    }
    let width = (0..ar.len()).map(|v| cell(ar, spec, v).chars().count()).max().unwrap_or(0) + 2;
    let mut s = String::new();
    writeln!(s, "AR quiver of {} ({} vertices)", ar.catalog.id, ar.len()).unwrap();
    for row in grid {
        let line: String = row
            .iter()
            .map(|c| format!("{c:<width$}"))
            .collect::<String>();
        writeln!(s, "{}", line.trim_end()).unwrap();
    }
    if let Some(r) = report_for(ar, spec) {
        let names = |v: &[usize]| v.iter().map(|&i| ar.label(i)).collect::<Vec<_>>().join(" ");
        writeln!(s, "sources: {}", names(&r.isolated_sources)).unwrap();
        writeln!(s, "sinks: {}", names(&r.isolated_sinks)).unwrap();
        for t in &r.tangents {
            writeln!(s, "tangent +{}: {}", t.defect, ar.mesh_json(&t.mesh)).unwrap();
        }
    }
    s
}

fn render_tikz(ar: &ARQuiver, spec: &RenderSpec) -> String {
    let pos = layout(ar);
    let report = report_for(ar, spec);
    let marks = report.as_ref().map(|r| marks(ar, r));
    let mut s = String::new();
    s.push_str("\\begin{tikzpicture}[>=stealth, every node/.style={font=\\scriptsize}]\n");
    for v in 0..ar.len() {
        let (c, r) = pos[v];
        let mut style = String::new();
        if spec.overlay.as_ref().is_some_and(|h| h.values[v] > 0) {
            style.push_str("fill=blue!15");
        }
        if marks.as_ref().is_some_and(|m| !m[v].is_empty()) {
            if !style.is_empty() {
                style.push_str(", ");
            }
            style.push_str("draw=red");
        }
        let text = match &spec.overlay {
            Some(h) => format!("${}$\\\\{}", ar.label(v), h.values[v]),
            None => format!("${}$", ar.label(v)),
        };
        writeln!(
            s,
            "  \\node[align=center, {style}] (v{v}) at ({:.1},{:.1}) {{{text}}};",
            c as f64 * 1.6,
            -(r as f64) * 1.0
        )
        .unwrap();
    }
    for x in 0..ar.len() {
        for (y, m) in ar.successors(x) {
            let label = if m > 1 { format!(" node[midway, above] {{{m}}}") } else { String::new() };
            writeln!(s, "  \\draw[->] (v{x}) --{label} (v{y});").unwrap();
        }
    }
    for c in 0..ar.len() {
        if let Some(a) = ar.tau[c] {
            writeln!(s, "  \\draw[->, dashed, gray] (v{c}) to[bend left=20] (v{a});").unwrap();
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn render_json(ar: &ARQuiver, spec: &RenderSpec) -> String {
    let value: Value = match &spec.overlay {
        Some(h) => {
            let report = classify(h, ar);
            let mut v = report_json(h, &report, spec.verdict.as_ref().unwrap_or(&TheoremVerdict::default()), ar);
            if spec.verdict.is_none() {
                v.as_object_mut().expect("object").remove("theorem1");
            }
            v
        }
        None => ar.to_json(),
    };
    let mut out = serde_json::to_string_pretty(&value).expect("json");
    out.push('\n');
    out
}
