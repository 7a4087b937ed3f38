//! Gauge-invariant ideals `J(H, B)`, their quotient graphs and the ideal lattice.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::graph::{EGraph, Multiplicity, Vertex, VertexSet};
use crate::hereditary::{
    enumerate_saturated_hereditary, fin_inf_unchecked, h_fin_inf, is_hereditary, saturate,
};
use crate::{Error, Result};

/// Names the gauge-invariant ideal generated by `{p_v : v ∈ H}` together with
/// `{p_v − p_{v,H} : v ∈ B}`.
///
/// `H` must be saturated and hereditary and `B ⊆ H^fin_∞`. The zero ideal is
/// `(∅, ∅)` and the whole algebra is `(E⁰, ∅)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealSpec {
    h: VertexSet,
    b: VertexSet,
}

impl IdealSpec {
    /// Validating constructor; `b` is never silently trimmed.
    pub fn new(g: &EGraph, h: VertexSet, b: VertexSet) -> Result<Self> {
        g.check_set(&b)?;
        let fin_inf = h_fin_inf(g, &h)?;
        if !b.is_subset(&fin_inf) {
            return Err(Error::NotInFinInf {
                b: g.display_set(&b),
                fin_inf: g.display_set(&fin_inf),
            });
        }
        Ok(Self { h, b })
    }

    pub(crate) fn new_unchecked(h: VertexSet, b: VertexSet) -> Self {
        Self { h, b }
    }

    pub fn zero() -> Self {
        Self {
            h: VertexSet::new(),
            b: VertexSet::new(),
        }
    }

    pub fn whole(g: &EGraph) -> Self {
        Self {
            h: g.all(),
            b: VertexSet::new(),
        }
    }

    pub fn h(&self) -> &VertexSet {
        &self.h
    }

    pub fn b(&self) -> &VertexSet {
        &self.b
    }

    pub fn validate(&self, g: &EGraph) -> Result<()> {
        Self::new(g, self.h.clone(), self.b.clone()).map(|_| ())
    }

    /// `J{H|B}` with members in graph order.
    pub fn label(&self, g: &EGraph) -> String {
        let inner = |x: &VertexSet| {
            let names: Vec<&str> = x.iter().map(|v| g.name(v)).collect();
            names.join(",")
        };
        format!("J{{{}|{}}}", inner(&self.h), inner(&self.b))
    }
}

/// `I_H` for hereditary `h`, normalised to `(Σ(H), ∅)`.
pub fn ideal_from_hereditary(g: &EGraph, h: &VertexSet) -> Result<IdealSpec> {
    g.check_set(h)?;
    if !is_hereditary(g, h) {
        return Err(Error::NotHereditary(g.display_set(h)));
    }
    Ok(IdealSpec::new_unchecked(saturate(g, h), VertexSet::new()))
}

/// Where a vertex of `E/H` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientVertex {
    Base(Vertex),
    /// The added sink `β(v)` for `v ∈ H^fin_∞`.
    Beta(Vertex),
}

/// A quotient graph together with the origin of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub graph: EGraph,
    pub origin: Vec<QuotientVertex>,
}

pub fn beta_name(name: &str) -> String {
    format!("beta({name})")
}

/// `(E/H) ∖ β(B)`: drop `H`, and add a sink `β(v)` for each `v ∈ H^fin_∞ ∖ B`
/// receiving a copy of every edge into `v`.
fn build_quotient(g: &EGraph, h: &VertexSet, betas: &VertexSet) -> Result<Quotient> {
    let mut origin = Vec::new();
    let mut names = Vec::new();
    let mut index = alloc::vec![usize::MAX; g.vertex_count()];
    let mut beta_index = alloc::vec![usize::MAX; g.vertex_count()];
    for v in g.vertices().filter(|&v| !h.contains(v)) {
        index[v.index()] = names.len();
        names.push(String::from(g.name(v)));
        origin.push(QuotientVertex::Base(v));
    }
    for v in betas.iter() {
        beta_index[v.index()] = names.len();
        names.push(beta_name(g.name(v)));
        origin.push(QuotientVertex::Beta(v));
    }
    let mut edges: Vec<(usize, usize, Multiplicity)> = Vec::new();
    for (s, d, m) in g.edges() {
        if h.contains(s) || h.contains(d) {
            continue;
        }
        edges.push((index[s.index()], index[d.index()], m));
        if betas.contains(d) {
            edges.push((index[s.index()], beta_index[d.index()], m));
        }
    }
    let graph = EGraph::from_parts(names, edges)?;
    Ok(Quotient { graph, origin })
}

pub fn quotient(g: &EGraph, h: &VertexSet) -> Result<Quotient> {
    let fin_inf = h_fin_inf(g, h)?;
    build_quotient(g, h, &fin_inf)
}

/// `E/H` for saturated hereditary `h`.
pub fn quotient_graph(g: &EGraph, h: &VertexSet) -> Result<EGraph> {
    quotient(g, h).map(|q| q.graph)
}

pub fn quotient_spec(g: &EGraph, j: &IdealSpec) -> Result<Quotient> {
    j.validate(g)?;
    let fin_inf = fin_inf_unchecked(g, &j.h);
    build_quotient(g, &j.h, &fin_inf.difference(&j.b))
}

/// `(E/H) ∖ β(B)`, whose algebra is `C*(E)/J(H, B)`.
pub fn quotient_graph_spec(g: &EGraph, j: &IdealSpec) -> Result<EGraph> {
    quotient_spec(g, j).map(|q| q.graph)
}

/// Intersection of a nonempty family: `H = ∩ Hᵢ`,
/// `B = (∩ (Hᵢ ∪ Bᵢ)) ∩ H^fin_∞`.
pub fn meet(g: &EGraph, specs: &[IdealSpec]) -> Result<IdealSpec> {
    let (first, rest) = specs.split_first().ok_or(Error::EmptyMeet)?;
    for j in specs {
        j.validate(g)?;
    }
    let mut h = first.h.clone();
    let mut hb = first.h.union(&first.b);
    for j in rest {
        h = h.intersection(&j.h);
        hb = hb.intersection(&j.h.union(&j.b));
    }
    let b = hb.intersection(&fin_inf_unchecked(g, &h));
    Ok(IdealSpec::new_unchecked(h, b))
}

/// Inclusion `J(H₁, B₁) ⊆ J(H₂, B₂)`: `H₁ ⊆ H₂` and `B₁ ⊆ H₂ ∪ B₂`.
pub fn leq(a: &IdealSpec, b: &IdealSpec) -> bool {
    a.h.is_subset(&b.h) && a.b.iter().all(|v| b.h.contains(v) || b.b.contains(v))
}

/// Every gauge-invariant ideal, ordered by `H` (canonical set order) and then
/// by `B` (canonical set order).
pub fn enumerate_ideals(g: &EGraph, limit: usize) -> Result<Vec<IdealSpec>> {
    let mut out = Vec::new();
    for h in enumerate_saturated_hereditary(g, limit)? {
        let fin_inf = fin_inf_unchecked(g, &h);
        let members = fin_inf.as_slice();
        let mut bs: Vec<VertexSet> = (0..1u64 << members.len())
            .map(|bits| {
                (0..members.len())
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| members[i])
                    .collect()
            })
            .collect();
        bs.sort_by(|x, y| x.canonical_cmp(y));
        out.extend(
            bs.into_iter()
                .map(|b| IdealSpec::new_unchecked(h.clone(), b)),
        );
    }
    Ok(out)
}

/// Least upper bound in the enumerated lattice.
pub fn join(g: &EGraph, a: &IdealSpec, b: &IdealSpec, limit: usize) -> Result<IdealSpec> {
    a.validate(g)?;
    b.validate(g)?;
    let upper: Vec<IdealSpec> = enumerate_ideals(g, limit)?
        .into_iter()
        .filter(|x| leq(a, x) && leq(b, x))
        .collect();
    upper
        .iter()
        .find(|x| upper.iter().all(|y| leq(x, y)))
        .cloned()
        .ok_or(Error::NoJoin)
}

/// Pairs `(i, j)` with `specs[i]` covered by `specs[j]`.
pub fn covering_pairs(specs: &[IdealSpec]) -> Vec<(usize, usize)> {
    let lt = |i: usize, j: usize| i != j && leq(&specs[i], &specs[j]);
    let n = specs.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// DOT digraph of the covering relation, smaller ideals at the bottom.
pub fn hasse_dot(g: &EGraph, specs: &[IdealSpec]) -> String {
    let mut out = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, j) in specs.iter().enumerate() {
        let label = j.label(g).replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for (i, j) in covering_pairs(specs) {
        let _ = writeln!(out, "  n{i} -> n{j};");
    }
    out.push_str("}\n");
    out
}

/// Graph `(H, s⁻¹(H), r, s)` whose algebra is Morita equivalent to `I_H`.
pub fn ideal_graph(g: &EGraph, h: &VertexSet) -> Result<EGraph> {
    g.check_set(h)?;
    if !is_hereditary(g, h) {
        return Err(Error::NotHereditary(g.display_set(h)));
    }
    Ok(g.restrict(h))
}
