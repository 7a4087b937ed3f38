//! Maximal tails, breaking vertices and gauge-invariant primitive ideals.

use alloc::vec::Vec;

use crate::cycles::loops_have_exits_within;
use crate::graph::{EGraph, Vertex, VertexSet};
use crate::hereditary::{
    enumerate_saturated_hereditary, fin_inf_unchecked, hereditary_saturated_closure,
    is_saturated_hereditary,
};
use crate::ideals::{quotient_graph_spec, IdealSpec};
use crate::{Error, Result};

/// Nonempty, complement saturated and hereditary, and downward directed.
pub fn is_maximal_tail(g: &EGraph, m: &VertexSet) -> bool {
    !m.is_empty()
        && g.contains_set(m)
        && is_saturated_hereditary(g, &g.complement(m))
        && g.reachability().is_downward_directed(m)
}

/// All maximal tails in canonical set order.
pub fn maximal_tails(g: &EGraph, limit: usize) -> Result<Vec<VertexSet>> {
    let reach = g.reachability();
    let mut tails: Vec<VertexSet> = enumerate_saturated_hereditary(g, limit)?
        .iter()
        .map(|h| g.complement(h))
        .filter(|m| !m.is_empty() && reach.is_downward_directed(m))
        .collect();
    tails.sort_by(|a, b| a.canonical_cmp(b));
    Ok(tails)
}

/// Edges from `v` whose range can still reach `v`, i.e. lands outside `Ω(v)`.
fn is_breaking(g: &EGraph, v: Vertex) -> bool {
    if !g.is_infinite_emitter(v) {
        return false;
    }
    let omega = g
        .omega(&VertexSet::from_vertices([v]))
        .expect("singleton is nonempty");
    matches!(
        g.out_degree_into(v, |w| !omega.contains(w)),
        crate::Multiplicity::Finite(k) if k > 0
    )
}

/// `BV(E)`.
pub fn breaking_vertices(g: &EGraph) -> VertexSet {
    g.vertices().filter(|&v| is_breaking(g, v)).collect()
}

/// Every loop has an exit and any two vertices reach a common vertex.
pub fn is_primitive_algebra(g: &EGraph) -> bool {
    crate::cycles::condition_l(g) && g.reachability().is_downward_directed(&g.all())
}

/// Every loop has an exit and `ΣH({v}) = E⁰` for every vertex.
pub fn is_simple_algebra(g: &EGraph) -> bool {
    crate::cycles::condition_l(g)
        && g.vertices().all(|v| {
            hereditary_saturated_closure(g, &VertexSet::from_vertices([v])).len()
                == g.vertex_count()
        })
}

/// `J(Ω(M), Ω(M)^fin_∞)` for a maximal tail `m` whose loops have exits in `m`.
pub fn tail_primitive_spec(g: &EGraph, m: &VertexSet) -> Result<IdealSpec> {
    g.check_set(m)?;
    if !is_maximal_tail(g, m) {
        return Err(Error::NotMaximalTail(g.display_set(m)));
    }
    if !loops_have_exits_within(g, m)? {
        return Err(Error::LoopWithoutExit(g.display_set(m)));
    }
    let h = g.complement(m);
    let b = fin_inf_unchecked(g, &h);
    Ok(IdealSpec::new_unchecked(h, b))
}

/// `J(Ω(v), Ω(v)^fin_∞ ∖ {v})` for a breaking vertex `v`.
pub fn bv_primitive_spec(g: &EGraph, v: Vertex) -> Result<IdealSpec> {
    if v.index() >= g.vertex_count() {
        return Err(Error::ForeignVertex(v.index()));
    }
    if !is_breaking(g, v) {
        return Err(Error::NotBreaking(g.name(v).into()));
    }
    let h = g.omega(&VertexSet::from_vertices([v]))?;
    let mut b = fin_inf_unchecked(g, &h);
    b.remove(v);
    Ok(IdealSpec::new_unchecked(h, b))
}

/// Which construction produced a primitive ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimitiveSource {
    Tail(VertexSet),
    BreakingVertex(Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveIdeal {
    pub spec: IdealSpec,
    pub source: PrimitiveSource,
}

/// Tail-type ideals in tail order, then breaking-vertex ideals in vertex order.
pub fn primitive_ideals_with_sources(g: &EGraph, limit: usize) -> Result<Vec<PrimitiveIdeal>> {
    let mut out = Vec::new();
    for m in maximal_tails(g, limit)? {
        if loops_have_exits_within(g, &m)? {
            let h = g.complement(&m);
            let b = fin_inf_unchecked(g, &h);
            out.push(PrimitiveIdeal {
                spec: IdealSpec::new_unchecked(h, b),
                source: PrimitiveSource::Tail(m),
            });
        }
    }
    for v in breaking_vertices(g).iter() {
        out.push(PrimitiveIdeal {
            spec: bv_primitive_spec(g, v)?,
            source: PrimitiveSource::BreakingVertex(v),
        });
    }
    for (i, a) in out.iter().enumerate() {
        if out[..i].iter().any(|b| b.spec == a.spec) {
            return Err(Error::DuplicatePrimitive);
        }
    }
    Ok(out)
}

/// The gauge-invariant primitive ideals.
pub fn gauge_invariant_primitive_ideals(g: &EGraph, limit: usize) -> Result<Vec<IdealSpec>> {
    Ok(primitive_ideals_with_sources(g, limit)?
        .into_iter()
        .map(|p| p.spec)
        .collect())
}

/// Decides primitivity of `J(H, B)` from its quotient graph.
pub fn is_primitive_spec(g: &EGraph, j: &IdealSpec) -> Result<bool> {
    let q = quotient_graph_spec(g, j)?;
    // C*(empty graph) = 0 is not primitive
    Ok(q.vertex_count() > 0 && is_primitive_algebra(&q))
}
