//! Hereditary and saturated vertex sets.

use alloc::vec::Vec;

use crate::graph::{EGraph, Multiplicity, VertexSet};
use crate::{Error, Result, MAX_ENUMERATION_LIMIT};

/// Every edge leaving `h` lands in `h`.
pub fn is_hereditary(g: &EGraph, h: &VertexSet) -> bool {
    h.iter()
        .all(|v| g.successors(v).all(|(w, _)| h.contains(w)))
}

/// No vertex outside `x` with `0 < |s⁻¹(v)| < ∞` sends all its edges into `x`.
pub fn is_saturated(g: &EGraph, x: &VertexSet) -> bool {
    g.vertices()
        .filter(|&v| !x.contains(v) && g.is_finite_emitter(v))
        .all(|v| g.successors(v).any(|(w, _)| !x.contains(w)))
}

pub fn is_saturated_hereditary(g: &EGraph, x: &VertexSet) -> bool {
    is_hereditary(g, x) && is_saturated(g, x)
}

/// `Σ(X)`, the smallest saturated superset of `x`.
pub fn saturate(g: &EGraph, x: &VertexSet) -> VertexSet {
    let mut inside = x.mask(g.vertex_count());
    saturate_mask(g, &mut inside);
    VertexSet::from_mask(&inside)
}

fn saturate_mask(g: &EGraph, inside: &mut [bool]) {
    loop {
        let mut changed = false;
        for v in g.vertices() {
            if !inside[v.index()]
                && g.is_finite_emitter(v)
                && g.successors(v).all(|(w, _)| inside[w.index()])
            {
                inside[v.index()] = true;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

/// `ΣH(X)`: forward closure of `x`, then saturation layers until stable.
pub fn hereditary_saturated_closure(g: &EGraph, x: &VertexSet) -> VertexSet {
    let mut inside = alloc::vec![false; g.vertex_count()];
    for v in x.iter() {
        for w in g.reachable_from(v).iter() {
            inside[w.index()] = true;
        }
    }
    saturate_mask(g, &mut inside);
    VertexSet::from_mask(&inside)
}

/// `H^fin_∞`: vertices outside `h` that emit infinitely many edges in total
/// but finitely many, and at least one, out of `h`.
pub fn h_fin_inf(g: &EGraph, h: &VertexSet) -> Result<VertexSet> {
    g.check_set(h)?;
    if !is_hereditary(g, h) {
        return Err(Error::NotHereditary(g.display_set(h)));
    }
    if !is_saturated(g, h) {
        return Err(Error::NotSaturated(g.display_set(h)));
    }
    Ok(fin_inf_unchecked(g, h))
}

pub(crate) fn fin_inf_unchecked(g: &EGraph, h: &VertexSet) -> VertexSet {
    g.vertices()
        .filter(|&v| !h.contains(v) && g.is_infinite_emitter(v))
        .filter(|&v| {
            matches!(
                g.out_degree_into(v, |w| !h.contains(w)),
                Multiplicity::Finite(k) if k > 0
            )
        })
        .collect()
}

pub(crate) fn check_limit(g: &EGraph, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_ENUMERATION_LIMIT);
    if g.vertex_count() > limit {
        return Err(Error::LimitExceeded {
            vertices: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

/// Bitmask view of a graph with at most 63 vertices.
pub(crate) struct MaskGraph {
    pub n: usize,
    pub succ: Vec<u64>,
    pub finite_emitter: u64,
}

impl MaskGraph {
    pub fn new(g: &EGraph) -> Self {
        let succ = g
            .vertices()
            .map(|v| {
                g.successors(v)
                    .fold(0u64, |acc, (w, _)| acc | 1 << w.index())
            })
            .collect();
        let finite_emitter = g
            .vertices()
            .filter(|&v| g.is_finite_emitter(v))
            .fold(0u64, |acc, v| acc | 1 << v.index());
        Self {
            n: g.vertex_count(),
            succ,
            finite_emitter,
        }
    }

    pub fn is_hereditary(&self, bits: u64) -> bool {
        (0..self.n).all(|v| bits >> v & 1 == 0 || self.succ[v] & !bits == 0)
    }

    pub fn is_saturated(&self, bits: u64) -> bool {
        (0..self.n).all(|v| {
            bits >> v & 1 == 1 || self.finite_emitter >> v & 1 == 0 || self.succ[v] & !bits != 0
        })
    }
}

/// All saturated hereditary sets, smallest first then lexicographic.
///
/// Brute force over all `2^n` subsets; fails with [`Error::LimitExceeded`]
/// when the graph has more than `limit` vertices.
pub fn enumerate_saturated_hereditary(g: &EGraph, limit: usize) -> Result<Vec<VertexSet>> {
    check_limit(g, limit)?;
    let mg = MaskGraph::new(g);
    let mut out: Vec<VertexSet> = (0..1u64 << mg.n)
        .filter(|&bits| mg.is_hereditary(bits) && mg.is_saturated(bits))
        .map(|bits| VertexSet::from_bits(bits, mg.n))
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    Ok(out)
}
