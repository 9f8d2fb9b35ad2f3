//! JSON structure documents and their human-readable rendering.
//!
//! ```json
//! {
//!   "name": "dual numbers",
//!   "kind": "eps_hom_bialgebra",
//!   "basis": ["1", "x"],
//!   "alpha": [["1", "0"], ["0", "1"]],
//!   "mu": [{"i": 0, "j": 0, "k": 0, "c": "1"}],
//!   "delta": [{"k": 1, "i": 1, "j": 1, "c": "1"}],
//!   "r": [{"i": 0, "j": 1, "c": "1"}]
//! }
//! ```
//!
//! `alpha` is row-major with column `j` holding the image of basis vector `j`;
//! omitting it means the identity. Sparse entries that are omitted are zero.
//! For Hom-Lie kinds `mu` holds the bracket and `delta` the cobracket.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::{
    format_rational, parse_rational, Bilinear, Comult, FinSpace, LinMap, Pretty, Rational,
    Tensor2, Vector,
};
use crate::structures::{
    EpsHomBialgebra, HomAlgebra, HomCoalgebra, HomLieAlgebra, HomLieBialgebra, HomLieCoalgebra,
    Structure,
};

pub const KINDS: [&str; 6] = [
    "hom_algebra",
    "hom_coalgebra",
    "eps_hom_bialgebra",
    "hom_lie_algebra",
    "hom_lie_coalgebra",
    "hom_lie_bialgebra",
];

/// A rational written either as a string (`"-3/2"`) or a JSON integer.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RatLit {
    Text(String),
    Int(i64),
}

impl RatLit {
    fn value(&self) -> Result<Rational> {
        match self {
            RatLit::Text(s) => parse_rational(s),
            RatLit::Int(i) => Ok(crate::linalg::rat(*i)),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MuEntry {
    i: usize,
    j: usize,
    k: usize,
    c: RatLit,
}

#[derive(Debug, Serialize, Deserialize)]
struct DeltaEntry {
    k: usize,
    i: usize,
    j: usize,
    c: RatLit,
}

#[derive(Debug, Serialize, Deserialize)]
struct REntry {
    i: usize,
    j: usize,
    c: RatLit,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    kind: String,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<Vec<RatLit>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu: Option<Vec<MuEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<DeltaEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<Vec<REntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

/// A named structure plus the chain of constructions that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub provenance: Option<String>,
    pub structure: Structure,
}

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

fn check_index(what: &str, i: usize, n: usize) -> Result<()> {
    if i < n {
        Ok(())
    } else {
        Err(doc_err(format!("{what} index {i} out of range for a basis of size {n}")))
    }
}

fn parse_alpha(rows: &Option<Vec<Vec<RatLit>>>, n: usize) -> Result<LinMap> {
    let Some(rows) = rows else {
        return Ok(LinMap::identity(n));
    };
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            operand: "alpha",
            expected: n,
            found: rows.len(),
        });
    }
    let parsed = rows
        .iter()
        .map(|row| row.iter().map(RatLit::value).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_rows(parsed)
}

fn parse_mu(entries: &[MuEntry], n: usize) -> Result<Bilinear> {
    let mut mu = Bilinear::zero(n);
    let mut seen = HashSet::new();
    for e in entries {
        for (what, idx) in [("mu i", e.i), ("mu j", e.j), ("mu k", e.k)] {
            check_index(what, idx, n)?;
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(doc_err(format!("duplicate mu entry ({}, {}, {})", e.i, e.j, e.k)));
        }
        mu.set(e.i, e.j, e.k, e.c.value()?);
    }
    Ok(mu)
}

fn parse_delta(entries: &[DeltaEntry], n: usize) -> Result<Comult> {
    let mut d = Comult::zero(n);
    let mut seen = HashSet::new();
    for e in entries {
        for (what, idx) in [("delta k", e.k), ("delta i", e.i), ("delta j", e.j)] {
            check_index(what, idx, n)?;
        }
        if !seen.insert((e.k, e.i, e.j)) {
            return Err(doc_err(format!("duplicate delta entry ({}, {}, {})", e.k, e.i, e.j)));
        }
        d.set(e.k, e.i, e.j, e.c.value()?);
    }
    Ok(d)
}

fn parse_r_entries(entries: &[REntry], n: usize) -> Result<Tensor2> {
    let mut r = Tensor2::zeros(n);
    let mut seen = HashSet::new();
    for e in entries {
        check_index("r i", e.i, n)?;
        check_index("r j", e.j, n)?;
        if !seen.insert((e.i, e.j)) {
            return Err(doc_err(format!("duplicate r entry ({}, {})", e.i, e.j)));
        }
        r.set([e.i, e.j], e.c.value()?);
    }
    Ok(r)
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

impl Document {
    pub fn new(name: impl Into<String>, structure: Structure) -> Self {
        Self {
            name: name.into(),
            provenance: None,
            structure,
        }
    }

    /// Appends a step to the provenance chain.
    pub fn derive(&self, step: &str, structure: Structure) -> Self {
        let provenance = match &self.provenance {
            Some(p) => format!("{p} → {step}"),
            None => step.to_string(),
        };
        Self {
            name: self.name.clone(),
            provenance: Some(provenance),
            structure,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument = serde_json::from_str(text).map_err(json_err)?;
        let space = FinSpace::new(raw.basis.iter().cloned())?;
        let n = space.dim();
        let alpha = parse_alpha(&raw.alpha, n)?;
        let kind = raw.kind.as_str();
        let (has_mu, has_delta, allows_r) = match kind {
            "hom_algebra" | "hom_lie_algebra" => (true, false, false),
            "hom_coalgebra" | "hom_lie_coalgebra" => (false, true, false),
            "eps_hom_bialgebra" | "hom_lie_bialgebra" => (true, true, true),
            other => {
                return Err(doc_err(format!(
                    "unknown kind {other:?} (expected one of {})",
                    KINDS.join(", ")
                )))
            }
        };
        if !has_mu && raw.mu.is_some() {
            return Err(doc_err(format!("field \"mu\" is not allowed for {kind}")));
        }
        if !has_delta && raw.delta.is_some() {
            return Err(doc_err(format!("field \"delta\" is not allowed for {kind}")));
        }
        if !allows_r && raw.r.is_some() {
            return Err(doc_err(format!("field \"r\" is not allowed for {kind}")));
        }
        let mu = parse_mu(raw.mu.as_deref().unwrap_or_default(), n)?;
        let delta = parse_delta(raw.delta.as_deref().unwrap_or_default(), n)?;
        let r = raw.r.as_deref().map(|e| parse_r_entries(e, n)).transpose()?;
        let structure = match kind {
            "hom_algebra" => Structure::Algebra(HomAlgebra::new(space, mu, alpha)?),
            "hom_coalgebra" => Structure::Coalgebra(HomCoalgebra::new(space, delta, alpha)?),
            "eps_hom_bialgebra" => Structure::Bialgebra(
                EpsHomBialgebra::from_parts(space, mu, delta, alpha)?.with_r(r)?,
            ),
            "hom_lie_algebra" => Structure::LieAlgebra(HomLieAlgebra::new(space, mu, alpha)?),
            "hom_lie_coalgebra" => {
                Structure::LieCoalgebra(HomLieCoalgebra::new(space, delta, alpha)?)
            }
            _ => Structure::LieBialgebra(
                HomLieBialgebra::from_parts(space, mu, delta, alpha)?.with_r(r)?,
            ),
        };
        Ok(Self {
            name: raw.name,
            provenance: raw.provenance,
            structure,
        })
    }

    fn to_raw(&self) -> RawDocument {
        let s = &self.structure;
        let lit = |q: &Rational| RatLit::Text(format_rational(q));
        let alpha = s.alpha();
        let mu = s.product().map(|m| {
            let n = m.dim();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = m.get(i, j, k);
                        if !num_traits::Zero::is_zero(c) {
                            out.push(MuEntry { i, j, k, c: lit(c) });
                        }
                    }
                }
            }
            out
        });
        let delta = s.coproduct().map(|d| {
            let n = d.dim();
            let mut out = Vec::new();
            for k in 0..n {
                for ([i, j], c) in d.image(k).nonzero() {
                    out.push(DeltaEntry { k, i, j, c: lit(c) });
                }
            }
            out
        });
        let r = s.r().map(|r| {
            r.nonzero()
                .map(|([i, j], c)| REntry { i, j, c: lit(c) })
                .collect()
        });
        RawDocument {
            name: self.name.clone(),
            kind: s.kind().to_string(),
            basis: s.space().labels().to_vec(),
            alpha: Some(
                alpha
                    .row_vecs()
                    .iter()
                    .map(|row| row.iter().map(lit).collect())
                    .collect(),
            ),
            mu,
            delta,
            r,
            provenance: self.provenance.clone(),
        }
    }

    /// Pretty-printed JSON with a deterministic entry order.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw()).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self.to_raw()).expect("document serializes")
    }

    /// Readable listing in basis-label notation.
    pub fn to_text(&self) -> String {
        let s = &self.structure;
        let space = s.space();
        let n = space.dim();
        let mut out = String::new();
        let _ = writeln!(out, "name: {}", self.name);
        let _ = writeln!(out, "kind: {}", s.kind());
        if let Some(p) = &self.provenance {
            let _ = writeln!(out, "provenance: {p}");
        }
        let _ = writeln!(out, "basis: {}", space.labels().join(", "));
        for j in 0..n {
            let img = s.alpha().column(j);
            let _ = writeln!(out, "α({}) = {}", space.label(j), pretty_vec(space, &img));
        }
        let lie = matches!(
            s,
            Structure::LieAlgebra(_) | Structure::LieCoalgebra(_) | Structure::LieBialgebra(_)
        );
        if let Some(m) = s.product() {
            for i in 0..n {
                for j in 0..n {
                    let v = m.product_vec(i, j);
                    if v.is_zero() || (lie && i >= j) {
                        continue;
                    }
                    let (a, b) = (space.label(i), space.label(j));
                    let lhs = if lie { format!("[{a},{b}]") } else { format!("μ({a},{b})") };
                    let _ = writeln!(out, "{lhs} = {}", pretty_vec(space, &v));
                }
            }
        }
        if let Some(d) = s.coproduct() {
            let sym = if lie { "δ" } else { "Δ" };
            for k in 0..n {
                let t = d.image(k);
                let _ = writeln!(
                    out,
                    "{sym}({}) = {}",
                    space.label(k),
                    Pretty {
                        space,
                        tensor: &t
                    }
                );
            }
        }
        if let Some(r) = s.r() {
            let _ = writeln!(out, "r = {}", Pretty { space, tensor: r });
        }
        out
    }
}

pub fn pretty_vec(space: &FinSpace, v: &Vector) -> String {
    Pretty { space, tensor: v }.to_string()
}

/// An `r` file: a bare entry list or an object with an `"r"` field.
pub fn parse_r(text: &str, dim: usize) -> Result<Tensor2> {
    let v: Value = serde_json::from_str(text).map_err(json_err)?;
    let list = match v {
        Value::Object(mut o) => o.remove("r").ok_or_else(|| doc_err("missing \"r\" field"))?,
        other => other,
    };
    let entries: Vec<REntry> =
        serde_json::from_value(list).map_err(|e| doc_err(format!("bad r entries: {e}")))?;
    parse_r_entries(&entries, dim)
}

/// A morphism file: `{"map": rows}` or bare rows, column `j` the image of `e_j`.
pub fn parse_map(text: &str, dim: usize) -> Result<LinMap> {
    let v: Value = serde_json::from_str(text).map_err(json_err)?;
    let rows = match v {
        Value::Object(mut o) => o.remove("map").ok_or_else(|| doc_err("missing \"map\" field"))?,
        other => other,
    };
    let rows: Option<Vec<Vec<RatLit>>> = Some(
        serde_json::from_value(rows).map_err(|e| doc_err(format!("bad map rows: {e}")))?,
    );
    parse_alpha(&rows, dim)
}

pub fn r_to_json(r: &Tensor2) -> String {
    let entries: Vec<REntry> = r
        .nonzero()
        .map(|([i, j], c)| REntry {
            i,
            j,
            c: RatLit::Text(format_rational(c)),
        })
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "r": entries })).expect("serializes") + "\n"
}

pub fn map_to_json(f: &LinMap) -> String {
    let rows: Vec<Vec<String>> = f
        .row_vecs()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    serde_json::to_string_pretty(&serde_json::json!({ "map": rows })).expect("serializes") + "\n"
}
