use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::point::EvalPoint;
use crate::combinat::{window_shifts, Composition, Index, ShiftVector};
use crate::error::Result;
use crate::exactalg::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeRule {
    /// Keep an edge iff both directional numerators are nonzero.
    #[default]
    Both,
    /// Keep an edge iff at least one directional numerator is nonzero.
    Either,
}

impl std::str::FromStr for EdgeRule {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "both" => Ok(EdgeRule::Both),
            "either" => Ok(EdgeRule::Either),
            _ => Err(crate::Error::Validation(format!("unknown edge rule {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    /// The shifted index `(i,j)`.
    pub index: Index,
    /// `E_i` numerator at the source point.
    pub e_numerator: String,
    /// `F_i` numerator at the target point.
    pub f_numerator: String,
    pub kept: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentGraph {
    pub rule: EdgeRule,
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdge>,
    /// Vertex indices of each component, sorted.
    pub components: Vec<Vec<usize>>,
}

/// `Π_{b ∈ I^{(row)}} (w(x_a) − w(x_b))`.
fn numerator(w: &EvalPoint, a: Index, row: u32) -> Scalar {
    w.lambda()
        .row(row)
        .into_iter()
        .fold(Scalar::one(), |acc, b| acc.mul(&w.value(a).scalar().sub(&w.value(b).scalar())))
}

pub fn component_graph(v: &EvalPoint, r: i64, rule: EdgeRule) -> Result<ComponentGraph> {
    v.require_regular()?;
    let lambda: &Composition = v.lambda();
    let shifts = window_shifts(lambda, r);
    let pos = |xi: &ShiftVector| shifts.binary_search_by(|s| s.coords(lambda).cmp(&xi.coords(lambda))).ok();
    let mut edges = Vec::new();
    let mut uf = UnionFind::<usize>::new(shifts.len());
    for (s, xi) in shifts.iter().enumerate() {
        let w = v.shifted(xi);
        for a in lambda.shiftable() {
            let next = xi.add(&ShiftVector::unit(a, 1));
            let Some(t) = pos(&next) else { continue };
            let w2 = v.shifted(&next);
            let e = numerator(&w, a, a.row + 1);
            let f = numerator(&w2, a, a.row - 1);
            let kept = match rule {
                EdgeRule::Both => !e.is_zero() && !f.is_zero(),
                EdgeRule::Either => !e.is_zero() || !f.is_zero(),
            };
            if kept {
                uf.union(s, t);
            }
            edges.push(GraphEdge {
                source: s,
                target: t,
                index: a,
                e_numerator: e.to_string(),
                f_numerator: f.to_string(),
                kept,
            });
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for s in 0..shifts.len() {
        groups.entry(uf.find(s)).or_default().push(s);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort();
    Ok(ComponentGraph { rule, vertices: shifts.iter().map(|x| x.render(lambda)).collect(), edges, components })
}

impl ComponentGraph {
    /// Graphviz text with one cluster per component; removed edges are dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph components {\n");
        for (c, members) in self.components.iter().enumerate() {
            out.push_str(&format!("  subgraph cluster_{c} {{\n"));
            for &n in members {
                out.push_str(&format!("    n{n} [label=\"{}\"];\n", self.vertices[n]));
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            let style = if e.kept { "" } else { " [style=dashed]" };
            out.push_str(&format!("  n{} -- n{}{};\n", e.source, e.target, style));
        }
        out.push_str("}\n");
        out
    }
}
