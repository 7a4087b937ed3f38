//! K₀ and K₁ from the vertex matrix.
//!
//! Split `E⁰ = V ∪ W` with `W` the sinks and infinite emitters. With `B` and
//! `C` the `V×V` and `V×W` blocks of the vertex matrix, the map
//! `K(x) = ((1 − Bᵗ)x, −Cᵗx)` on `ℤ^V` has `K₁ ≅ ker K` and `K₀ ≅ coker K`.

mod group;
mod matrix;
mod snf;

pub use group::AbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfResult};

use num_bigint::BigInt;

use crate::graph::{EGraph, VertexSet};
use crate::hereditary::is_hereditary;
use crate::ideals::{quotient_graph_spec, IdealSpec};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    /// Finite emitters, in graph order.
    pub v_list: VertexSet,
    /// Sinks and infinite emitters, in graph order.
    pub w_list: VertexSet,
    pub b: IntMatrix,
    pub c: IntMatrix,
}

pub fn block_split(g: &EGraph) -> BlockSplit {
    let (v_list, w_list): (VertexSet, VertexSet) = (
        g.vertices().filter(|&v| g.is_finite_emitter(v)).collect(),
        g.vertices().filter(|&v| !g.is_finite_emitter(v)).collect(),
    );
    let entry = |s, d| {
        let m = g.mult(s, d);
        // rows are finite emitters, so every entry is finite
        BigInt::from(
            m.finite()
                .expect("finite emitter has finite multiplicities"),
        )
    };
    let mut b = IntMatrix::zeros(v_list.len(), v_list.len());
    let mut c = IntMatrix::zeros(v_list.len(), w_list.len());
    for (i, s) in v_list.iter().enumerate() {
        for (j, d) in v_list.iter().enumerate() {
            b[(i, j)] = entry(s, d);
        }
        for (j, d) in w_list.iter().enumerate() {
            c[(i, j)] = entry(s, d);
        }
    }
    BlockSplit {
        v_list,
        w_list,
        b,
        c,
    }
}

/// `(1 − Bᵗ)` stacked over `−Cᵗ`: a `(|V| + |W|) × |V|` matrix.
pub fn k_map_matrix(g: &EGraph) -> IntMatrix {
    let split = block_split(g);
    let nv = split.v_list.len();
    let nw = split.w_list.len();
    let mut k = IntMatrix::zeros(nv + nw, nv);
    for i in 0..nv {
        for j in 0..nv {
            let delta = BigInt::from(u8::from(i == j));
            k[(i, j)] = delta - &split.b[(j, i)];
        }
    }
    for i in 0..nw {
        for j in 0..nv {
            k[(nv + i, j)] = -split.c[(j, i)].clone();
        }
    }
    k
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KGroups {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
}

pub fn k_groups(g: &EGraph) -> KGroups {
    let k = k_map_matrix(g);
    let snf = smith_normal_form(&k);
    let rank = snf.rank();
    let k0 = AbelianGroup::from_diagonal(
        &snf.d
            .iter()
            .filter(|d| !num_traits::Zero::is_zero(*d))
            .cloned()
            .collect::<alloc::vec::Vec<_>>(),
        k.rows() - rank,
    );
    let k1 = AbelianGroup::free(k.cols() - rank);
    KGroups { k0, k1 }
}

/// K-groups of `I_H` through the Morita-equivalent graph on `H`.
pub fn k_groups_of_ideal(g: &EGraph, h: &VertexSet) -> Result<KGroups> {
    g.check_set(h)?;
    if h.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if !is_hereditary(g, h) {
        return Err(Error::NotHereditary(g.display_set(h)));
    }
    Ok(k_groups(&g.restrict(h)))
}

/// K-groups of `C*(E)/J(H, B)` through `(E/H) ∖ β(B)`.
pub fn k_groups_of_quotient(g: &EGraph, j: &IdealSpec) -> Result<KGroups> {
    j.validate(g)?;
    if j.h().len() == g.vertex_count() {
        return Err(Error::WholeAlgebra);
    }
    Ok(k_groups(&quotient_graph_spec(g, j)?))
}
