//! Finite acyclic quivers, their path ε-bialgebras, and induced morphisms.
//!
//! Text grammar, one declaration per line, `#` starts a comment:
//!
//! ```text
//! vertex v0
//! arrow phi1 : v0 -> v1
//! ```
//!
//! Morphisms use `vmap <vertex> -> <vertex>` and `amap <arrow> -> <arrow>`.
//! Both also have a JSON form (`{"vertices": [..], "arrows": [{"name", "source",
//! "target"}]}` and `{"vertex_map": {..}, "arrow_map": {..}}`).

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::constructions::twist_by_morphism;
use crate::error::{Error, Result};
use crate::linalg::{rat, Bilinear, Comult, FinSpace, LinMap, Tensor2, Vector};
use crate::structures::{EpsHomBialgebra, Structure, StructureMorphism};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from labels and `(name, source, target)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let mut q = Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
        };
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (n, s, t) in arrows {
            q.add_arrow(n.as_ref(), s.as_ref(), t.as_ref())?;
        }
        Ok(q)
    }

    fn add_vertex(&mut self, label: &str) -> Result<()> {
        if self.vertices.iter().any(|v| v == label) {
            return Err(Error::Duplicate(label.to_string()));
        }
        self.vertices.push(label.to_string());
        Ok(())
    }

    fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<()> {
        if self.arrows.iter().any(|a| a.name == name) {
            return Err(Error::Duplicate(name.to_string()));
        }
        let source = self.vertex_index(source)?;
        let target = self.vertex_index(target)?;
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        Ok(())
    }

    fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::DanglingVertex(label.to_string()))
    }

    fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Vertex labels in topological order, or the cycle error.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut ready: Vec<usize> = (0..n).rev().filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    ready.push(a.target);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|v| !order.contains(v)).expect("some vertex is left");
            return Err(Error::CyclicQuiver(self.vertices[stuck].clone()));
        }
        Ok(order)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} : {} -> {}\n",
                a.name, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        out
    }
}

/// A path: a vertex (length 0) or a composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Vertex(usize),
    Arrows(Vec<usize>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Arrows(a) => a.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self, q: &Quiver) -> usize {
        match self {
            Path::Vertex(v) => *v,
            Path::Arrows(a) => q.arrows[a[0]].source,
        }
    }

    pub fn target(&self, q: &Quiver) -> usize {
        match self {
            Path::Vertex(v) => *v,
            Path::Arrows(a) => q.arrows[*a.last().expect("non-empty")].target,
        }
    }

    /// Basis label: the vertex label, or arrow names joined by `.`.
    pub fn label(&self, q: &Quiver) -> String {
        match self {
            Path::Vertex(v) => q.vertices[*v].clone(),
            Path::Arrows(a) => a
                .iter()
                .map(|&i| q.arrows[i].name.as_str())
                .collect::<Vec<_>>()
                .join("."),
        }
    }

    // Sub-path of arrows `lo..hi`; an empty range is the vertex `at`.
    fn slice(arrows: &[usize], lo: usize, hi: usize, at: usize) -> Path {
        if lo == hi {
            Path::Vertex(at)
        } else {
            Path::Arrows(arrows[lo..hi].to_vec())
        }
    }
}

/// All paths, grouped by length; vertices in declaration order, longer paths
/// ordered lexicographically by arrow names.
pub fn enumerate_paths(q: &Quiver) -> Result<Vec<Path>> {
    q.topological_order()?;
    let mut paths: Vec<Path> = (0..q.vertices.len()).map(Path::Vertex).collect();
    let name_key = |p: &[usize]| -> Vec<String> { p.iter().map(|&i| q.arrows[i].name.clone()).collect() };
    let mut layer: Vec<Vec<usize>> = (0..q.arrows.len()).map(|i| vec![i]).collect();
    while !layer.is_empty() {
        layer.sort_by_key(|p| name_key(p));
        let mut next = Vec::new();
        for p in &layer {
            let end = q.arrows[*p.last().expect("non-empty")].target;
            for (i, a) in q.arrows.iter().enumerate() {
                if a.source == end {
                    let mut longer = p.clone();
                    longer.push(i);
                    next.push(longer);
                }
            }
        }
        paths.extend(layer.drain(..).map(Path::Arrows));
        layer = next;
    }
    Ok(paths)
}

/// Concatenation when the endpoints match.
fn concat(q: &Quiver, p: &Path, r: &Path) -> Option<Path> {
    if p.target(q) != r.source(q) {
        return None;
    }
    Some(match (p, r) {
        (Path::Vertex(_), _) => r.clone(),
        (_, Path::Vertex(_)) => p.clone(),
        (Path::Arrows(a), Path::Arrows(b)) => Path::Arrows(a.iter().chain(b).copied().collect()),
    })
}

/// The path comultiplication as a list of `(left, right)` basis paths.
fn path_coproduct(q: &Quiver, p: &Path) -> Vec<(Path, Path)> {
    let Path::Arrows(a) = p else {
        return Vec::new();
    };
    let l = a.len();
    let s = q.arrows[a[0]].source;
    let t = q.arrows[a[l - 1]].target;
    if l == 1 {
        return vec![(Path::Vertex(s), Path::Vertex(t))];
    }
    let mut terms = vec![
        (Path::Vertex(s), Path::slice(a, 1, l, 0)),
        (Path::slice(a, 0, l - 1, 0), Path::Vertex(t)),
    ];
    for i in 1..=l - 2 {
        terms.push((Path::slice(a, 0, i, 0), Path::slice(a, i + 1, l, 0)));
    }
    terms
}

/// The path ε-bialgebra `(kQ, μ, Δ, Id)` with the basis of [`enumerate_paths`].
pub fn path_bialgebra(q: &Quiver) -> Result<EpsHomBialgebra> {
    let paths = enumerate_paths(q)?;
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = paths.len();
    let space = FinSpace::new(paths.iter().map(|p| p.label(q)))?;
    let mu = Bilinear::from_fn(n, |i, j| match concat(q, &paths[i], &paths[j]) {
        Some(p) => Vector::unit(n, index[&p]),
        None => Vector::zeros(n),
    });
    let delta = Comult::from_fn(n, |k| {
        let mut t = Tensor2::zeros(n);
        for (l, r) in path_coproduct(q, &paths[k]) {
            t.add_at([index[&l], index[&r]], &rat(1));
        }
        t
    });
    EpsHomBialgebra::from_parts(space, mu, delta, LinMap::identity(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverMorphism {
    source: Quiver,
    target: Quiver,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

impl QuiverMorphism {
    pub fn new(
        source: Quiver,
        target: Quiver,
        vertex_map: Vec<usize>,
        arrow_map: Vec<usize>,
    ) -> Result<Self> {
        if vertex_map.len() != source.vertices.len() || arrow_map.len() != source.arrows.len() {
            return Err(Error::Malformed("morphism map sizes do not match the source".into()));
        }
        if let Some(&v) = vertex_map.iter().find(|&&v| v >= target.vertices.len()) {
            return Err(Error::DanglingVertex(format!("#{v}")));
        }
        if let Some(&a) = arrow_map.iter().find(|&&a| a >= target.arrows.len()) {
            return Err(Error::UnknownArrow(format!("#{a}")));
        }
        for i in 0..vertex_map.len() {
            for j in i + 1..vertex_map.len() {
                if vertex_map[i] == vertex_map[j] {
                    return Err(Error::NonInjectiveVertexMap(
                        source.vertices[i].clone(),
                        source.vertices[j].clone(),
                    ));
                }
            }
        }
        for (i, a) in source.arrows.iter().enumerate() {
            let img = &target.arrows[arrow_map[i]];
            if img.source != vertex_map[a.source] || img.target != vertex_map[a.target] {
                return Err(Error::EndpointMismatch {
                    arrow: a.name.clone(),
                    image: img.name.clone(),
                });
            }
        }
        Ok(Self {
            source,
            target,
            vertex_map,
            arrow_map,
        })
    }

    pub fn identity(q: &Quiver) -> Self {
        Self {
            source: q.clone(),
            target: q.clone(),
            vertex_map: (0..q.vertices.len()).collect(),
            arrow_map: (0..q.arrows.len()).collect(),
        }
    }

    pub fn source(&self) -> &Quiver {
        &self.source
    }
    pub fn target(&self) -> &Quiver {
        &self.target
    }
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }
    pub fn arrow_map(&self) -> &[usize] {
        &self.arrow_map
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn is_identity(&self) -> bool {
        self.is_endomorphism()
            && self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
            && self.arrow_map.iter().enumerate().all(|(i, &a)| i == a)
    }

    fn image(&self, p: &Path) -> Path {
        match p {
            Path::Vertex(v) => Path::Vertex(self.vertex_map[*v]),
            Path::Arrows(a) => Path::Arrows(a.iter().map(|&i| self.arrow_map[i]).collect()),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, &v) in self.vertex_map.iter().enumerate() {
            out.push_str(&format!(
                "vmap {} -> {}\n",
                self.source.vertices[i], self.target.vertices[v]
            ));
        }
        for (i, &a) in self.arrow_map.iter().enumerate() {
            out.push_str(&format!(
                "amap {} -> {}\n",
                self.source.arrows[i].name, self.target.arrows[a].name
            ));
        }
        out
    }
}

/// Every vertex-injective, endpoint-preserving map `src → dst`.
pub fn all_morphisms(src: &Quiver, dst: &Quiver) -> Vec<QuiverMorphism> {
    fn injections(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                injections(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut vmaps = Vec::new();
    injections(src.vertices.len(), dst.vertices.len(), &mut Vec::new(), &mut vmaps);
    let mut result = Vec::new();
    for vm in vmaps {
        let choices: Vec<Vec<usize>> = src
            .arrows
            .iter()
            .map(|a| {
                (0..dst.arrows.len())
                    .filter(|&b| {
                        dst.arrows[b].source == vm[a.source] && dst.arrows[b].target == vm[a.target]
                    })
                    .collect()
            })
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pick = vec![0usize; choices.len()];
        loop {
            let am = pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
            result.push(QuiverMorphism {
                source: src.clone(),
                target: dst.clone(),
                vertex_map: vm.clone(),
                arrow_map: am,
            });
            let mut slot = 0;
            while slot < pick.len() {
                pick[slot] += 1;
                if pick[slot] < choices[slot].len() {
                    break;
                }
                pick[slot] = 0;
                slot += 1;
            }
            if slot == pick.len() {
                break;
            }
        }
    }
    result
}

/// The ε-bialgebra morphism `kQ → kQ'` sending each path to its image path.
pub fn induced_morphism(m: &QuiverMorphism) -> Result<StructureMorphism> {
    let src_paths = enumerate_paths(&m.source)?;
    let dst_paths = enumerate_paths(&m.target)?;
    let index: HashMap<&Path, usize> = dst_paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let cols: Vec<Vector> = src_paths
        .iter()
        .map(|p| Vector::unit(dst_paths.len(), index[&m.image(p)]))
        .collect();
    let map = LinMap::from_columns(dst_paths.len(), &cols)?;
    StructureMorphism::new(
        Structure::Bialgebra(path_bialgebra(&m.source)?),
        Structure::Bialgebra(path_bialgebra(&m.target)?),
        map,
    )
}

/// `kQ` twisted along the morphism induced by an endomorphism of `Q`.
pub fn quiver_twist(q: &Quiver, m: &QuiverMorphism) -> Result<EpsHomBialgebra> {
    if m.source != *q || m.target != *q {
        return Err(Error::KindMismatch("quiver twist needs an endomorphism of the quiver".into()));
    }
    let f = induced_morphism(m)?;
    let base = path_bialgebra(q)?;
    twist_by_morphism(&base, f.map(), None)
}

// ---------------------------------------------------------------------------
// Parsing

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Tokens of one line with their 1-based columns, comments removed.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &code[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &code[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (code[..byte].chars().count() + 1, tok))
        .collect()
}

fn expect_shape<'a>(
    toks: &[(usize, &'a str)],
    line: usize,
    line_len: usize,
    shape: &[Option<&str>],
) -> Result<Vec<&'a str>> {
    let mut names = Vec::new();
    for (k, want) in shape.iter().enumerate() {
        let Some(&(col, tok)) = toks.get(k) else {
            let what = want.map_or("a name".to_string(), |w| format!("{w:?}"));
            return Err(syntax(line, line_len + 1, format!("expected {what}")));
        };
        match want {
            Some(w) if tok != *w => {
                return Err(syntax(line, col, format!("expected {w:?}, found {tok:?}")))
            }
            Some(_) => {}
            None => names.push(tok),
        }
    }
    if let Some(&(col, tok)) = toks.get(shape.len()) {
        return Err(syntax(line, col, format!("unexpected {tok:?}")));
    }
    Ok(names)
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowJson>,
}

#[derive(Serialize, Deserialize)]
struct ArrowJson {
    name: String,
    source: String,
    target: String,
}

#[derive(Serialize, Deserialize)]
struct MorphismJson {
    vertex_map: BTreeMap<String, String>,
    #[serde(default)]
    arrow_map: BTreeMap<String, String>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses the text grammar, or the JSON form when the input starts with `{`.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    if text.trim_start().starts_with('{') {
        let doc: QuiverJson = serde_json::from_str(text).map_err(json_error)?;
        let arrows: Vec<(String, String, String)> =
            doc.arrows.into_iter().map(|a| (a.name, a.source, a.target)).collect();
        return Quiver::new(&doc.vertices, &arrows);
    }
    let mut q = Quiver {
        vertices: Vec::new(),
        arrows: Vec::new(),
    };
    // Arrows may mention vertices declared later in the file.
    let mut pending = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let ln = ln + 1;
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else {
            continue;
        };
        let len = line.split('#').next().unwrap_or("").trim_end().chars().count();
        match head {
            "vertex" => {
                let names = expect_shape(&toks, ln, len, &[Some("vertex"), None])?;
                q.add_vertex(names[0])?;
            }
            "arrow" => {
                let names =
                    expect_shape(&toks, ln, len, &[Some("arrow"), None, Some(":"), None, Some("->"), None])?;
                pending.push((names[0], names[1], names[2]));
            }
            other => return Err(syntax(ln, col, format!("unknown declaration {other:?}"))),
        }
    }
    for (n, s, t) in pending {
        q.add_arrow(n, s, t)?;
    }
    Ok(q)
}

pub fn parse_quiver_morphism(text: &str, src: &Quiver, dst: &Quiver) -> Result<QuiverMorphism> {
    let mut vpairs: Vec<(String, String)> = Vec::new();
    let mut apairs: Vec<(String, String)> = Vec::new();
    if text.trim_start().starts_with('{') {
        let doc: MorphismJson = serde_json::from_str(text).map_err(json_error)?;
        vpairs = doc.vertex_map.into_iter().collect();
        apairs = doc.arrow_map.into_iter().collect();
    } else {
        for (ln, line) in text.lines().enumerate() {
            let ln = ln + 1;
            let toks = tokens(line);
            let Some(&(col, head)) = toks.first() else {
                continue;
            };
            let len = line.split('#').next().unwrap_or("").trim_end().chars().count();
            match head {
                "vmap" | "amap" => {
                    let names = expect_shape(&toks, ln, len, &[Some(head), None, Some("->"), None])?;
                    let pair = (names[0].to_string(), names[1].to_string());
                    if head == "vmap" {
                        vpairs.push(pair);
                    } else {
                        apairs.push(pair);
                    }
                }
                other => return Err(syntax(ln, col, format!("unknown declaration {other:?}"))),
            }
        }
    }
    let mut vmap: Vec<Option<usize>> = vec![None; src.vertices.len()];
    for (a, b) in &vpairs {
        let i = src.vertex_index(a)?;
        let j = dst.vertex_index(b)?;
        if vmap[i].replace(j).is_some() {
            return Err(Error::Duplicate(a.clone()));
        }
    }
    let mut amap: Vec<Option<usize>> = vec![None; src.arrows.len()];
    for (a, b) in &apairs {
        let i = src.arrow_index(a)?;
        let j = dst.arrow_index(b)?;
        if amap[i].replace(j).is_some() {
            return Err(Error::Duplicate(a.clone()));
        }
    }
    let vmap = vmap
        .iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| Error::IncompleteMorphism(src.vertices[i].clone())))
        .collect::<Result<Vec<_>>>()?;
    let amap = amap
        .iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::IncompleteMorphism(src.arrows[i].name.clone())))
        .collect::<Result<Vec<_>>>()?;
    QuiverMorphism::new(src.clone(), dst.clone(), vmap, amap)
}
