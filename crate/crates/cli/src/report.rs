//! Serializable report bodies. Field order is declaration order, so output is
//! byte-stable for identical inputs.

use coadjoint_core::{
    format_rational, CosetRep, GromovWidthReport, GwCertificate, GwValue, HasseDiagram, Rational,
    Root, Weight, WeylElement,
};
use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize)]
pub struct Report<P: Serialize> {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub payload: P,
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

pub fn rational(q: &Rational) -> String {
    format_rational(q)
}

pub fn weight(w: &Weight) -> Vec<String> {
    w.coords.iter().map(rational).collect()
}

/// Reduced word as `s1 s2 ...`, or `e` for the identity.
pub fn word(w: &WeylElement) -> String {
    w.to_string()
}

pub fn one_based(nodes: impl IntoIterator<Item = usize>) -> Vec<usize> {
    nodes.into_iter().map(|i| i + 1).collect()
}

#[derive(Serialize)]
pub struct RootOut {
    pub label: String,
    pub coeffs: Vec<i64>,
}

impl From<&Root> for RootOut {
    fn from(r: &Root) -> Self {
        RootOut { label: r.to_string(), coeffs: r.coeffs.clone() }
    }
}

#[derive(Serialize)]
pub struct CertificateRow {
    pub node: usize,
    pub c1: i64,
    pub dim_gamma: usize,
    pub gw: Value,
    pub fiber: Option<String>,
}

impl From<&GwCertificate> for CertificateRow {
    fn from(c: &GwCertificate) -> Self {
        CertificateRow {
            node: c.node + 1,
            c1: c.c1,
            dim_gamma: c.dim_gamma,
            gw: match c.gw {
                GwValue::One => json!(1),
                GwValue::Unverified => json!("unverified"),
            },
            fiber: c.fiber_type.map(|t| t.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct AreaOut {
    pub node: usize,
    pub area: String,
}

#[derive(Serialize)]
pub struct WidthPayload {
    pub bound: String,
    pub achieving_root: RootOut,
    pub achieving_coroot: Vec<i64>,
    pub stabilizer: Vec<usize>,
    pub areas: Vec<AreaOut>,
    pub certificates: Vec<CertificateRow>,
    pub lambda: Vec<String>,
    pub dominant_lambda: Vec<String>,
    pub chamber_witness: String,
}

impl From<&GromovWidthReport> for WidthPayload {
    fn from(r: &GromovWidthReport) -> Self {
        WidthPayload {
            bound: rational(&r.bound),
            achieving_root: (&r.achieving_root).into(),
            achieving_coroot: r.achieving_coroot.coeffs.clone(),
            stabilizer: one_based(r.parabolic.nodes().iter().copied()),
            areas: r.areas.iter().map(|(&n, a)| AreaOut { node: n + 1, area: rational(a) }).collect(),
            certificates: r.certificates.values().map(CertificateRow::from).collect(),
            lambda: weight(&r.lambda),
            dominant_lambda: weight(&r.dominant_lambda),
            chamber_witness: word(&r.chamber_witness),
        }
    }
}

#[derive(Serialize)]
pub struct CertifyPayload {
    pub rows: Vec<CertifyRow>,
    pub all_certified: bool,
}

#[derive(Serialize)]
pub struct CertifyRow {
    #[serde(flatten)]
    pub certificate: CertificateRow,
    pub maximum: String,
}

#[derive(Serialize)]
pub struct Vertex {
    pub id: usize,
    pub word: String,
    pub length: usize,
    pub roots: Vec<String>,
}

#[derive(Serialize)]
pub struct HassePayload {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[usize; 2]>,
    pub maximum: usize,
}

impl HassePayload {
    pub fn new(h: &HasseDiagram, roots: &[Vec<Root>]) -> Self {
        HassePayload {
            vertices: h
                .vertices
                .iter()
                .zip(roots)
                .enumerate()
                .map(|(id, (v, rs)): (usize, (&CosetRep, &Vec<Root>))| Vertex {
                    id,
                    word: word(v.elem()),
                    length: v.length(),
                    roots: rs.iter().map(|r| r.to_string()).collect(),
                })
                .collect(),
            edges: h.edges.iter().map(|&(a, b)| [a, b]).collect(),
            maximum: h.maximum,
        }
    }

    /// Graphviz rendering; edges point up the Bruhat order.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = format!("digraph \"{title}\" {{\n  rankdir=BT;\n  node [shape=box];\n");
        for v in &self.vertices {
            let mark = if v.id == self.maximum { ", peripheries=2, style=bold" } else { "" };
            out.push_str(&format!("  v{} [label=\"{}\"{mark}];\n", v.id, v.word));
        }
        for [a, b] in &self.edges {
            out.push_str(&format!("  v{a} -> v{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize)]
pub struct TypeSummary {
    #[serde(rename = "type")]
    pub name: String,
    pub nodes: usize,
    pub certified: usize,
}

#[derive(Serialize)]
pub struct VerifyPayload {
    pub max_rank: usize,
    pub types: Vec<TypeSummary>,
    pub total: usize,
    pub certified: usize,
    pub failures: Vec<String>,
}
