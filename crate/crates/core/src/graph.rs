//! Directed multigraphs with multiplicities in ℕ ∪ {∞}.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// Number of edges between an ordered pair of vertices.
///
/// Stored multiplicities are at least 1; a missing pair means no edge. `Inf`
/// absorbs addition and compares above every finite count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(u64),
    Inf,
}

impl Multiplicity {
    pub const ZERO: Multiplicity = Multiplicity::Finite(0);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_inf(self) -> bool {
        self == Self::Inf
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Self::Finite(n) => Some(n),
            Self::Inf => None,
        }
    }

    /// `None` only when two finite counts overflow `u64`.
    pub fn checked_add(self, other: Self) -> Option<Self> {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.checked_add(b).map(Self::Finite),
            _ => Some(Self::Inf),
        }
    }
}

impl From<u64> for Multiplicity {
    fn from(n: u64) -> Self {
        Self::Finite(n)
    }
}

impl PartialOrd for Multiplicity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiplicity {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Finite(a), Self::Finite(b)) => a.cmp(b),
            (Self::Finite(_), Self::Inf) => Ordering::Less,
            (Self::Inf, Self::Finite(_)) => Ordering::Greater,
            (Self::Inf, Self::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(n) => write!(f, "{n}"),
            Self::Inf => f.write_str("inf"),
        }
    }
}

/// Position of a vertex in its graph's declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(pub(crate) usize);

impl Vertex {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A set of vertices kept sorted in graph order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| Vertex(i))
                .collect(),
        )
    }

    pub(crate) fn from_bits(bits: u64, n: usize) -> Self {
        Self((0..n).filter(|i| bits >> i & 1 == 1).map(Vertex).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self::from_vertices(self.iter().chain(other.iter()))
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub(crate) fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter() {
            mask[v.0] = true;
        }
        mask
    }

    /// Canonical listing order: smaller sets first, ties broken
    /// lexicographically on the sorted member indices.
    pub fn canonical_cmp(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

/// Finite directed multigraph.
///
/// Vertices keep their declaration order; edges are stored per source, sorted
/// by target, so every iteration is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EGraph {
    names: Vec<String>,
    lookup: BTreeMap<String, usize>,
    succ: Vec<Vec<(usize, Multiplicity)>>,
    pred: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    edges: Vec<(String, String, Multiplicity)>,
}

impl GraphBuilder {
    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.names.push(name.into());
        self
    }

    pub fn vertices<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.names.extend(names.into_iter().map(Into::into));
        self
    }

    /// Repeated `(src, dst)` pairs are summed.
    pub fn edge(
        mut self,
        src: impl Into<String>,
        dst: impl Into<String>,
        mult: impl Into<Multiplicity>,
    ) -> Self {
        self.edges.push((src.into(), dst.into(), mult.into()));
        self
    }

    pub fn build(self) -> Result<EGraph> {
        let mut lookup = BTreeMap::new();
        for (i, name) in self.names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyVertexId);
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let mut indexed = Vec::with_capacity(self.edges.len());
        for (src, dst, mult) in self.edges {
            let s = *lookup
                .get(&src)
                .ok_or_else(|| Error::UnknownVertex(src.clone()))?;
            let d = *lookup
                .get(&dst)
                .ok_or_else(|| Error::UnknownVertex(dst.clone()))?;
            if mult.is_zero() {
                return Err(Error::ZeroMultiplicity(src, dst));
            }
            indexed.push((s, d, mult));
        }
        EGraph::from_indexed(self.names, lookup, indexed)
    }
}

impl EGraph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    /// Graph on `names` with no edges.
    pub fn edgeless<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::builder().vertices(names).build()
    }

    pub(crate) fn from_parts(
        names: Vec<String>,
        edges: Vec<(usize, usize, Multiplicity)>,
    ) -> Result<Self> {
        let mut lookup = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::NameCollision(name.clone()));
            }
        }
        Self::from_indexed(
            names,
            lookup,
            edges.into_iter().filter(|e| !e.2.is_zero()).collect(),
        )
    }

    fn from_indexed(
        names: Vec<String>,
        lookup: BTreeMap<String, usize>,
        edges: Vec<(usize, usize, Multiplicity)>,
    ) -> Result<Self> {
        let n = names.len();
        let mut rows: Vec<BTreeMap<usize, Multiplicity>> = vec![BTreeMap::new(); n];
        for (s, d, m) in edges {
            let slot = rows[s].entry(d).or_insert(Multiplicity::ZERO);
            *slot = slot
                .checked_add(m)
                .ok_or_else(|| Error::MultiplicityOverflow(names[s].clone()))?;
        }
        let mut pred = vec![Vec::new(); n];
        let mut succ = Vec::with_capacity(n);
        for (s, row) in rows.into_iter().enumerate() {
            let total = row
                .values()
                .try_fold(Multiplicity::ZERO, |acc, &m| acc.checked_add(m));
            if total.is_none() {
                return Err(Error::MultiplicityOverflow(names[s].clone()));
            }
            for &d in row.keys() {
                pred[d].push(s);
            }
            succ.push(row.into_iter().collect());
        }
        Ok(Self {
            names,
            lookup,
            succ,
            pred,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator {
        (0..self.names.len()).map(Vertex)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.lookup
            .get(name)
            .map(|&i| Vertex(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Vertex set from identifiers; fails on the first unknown one.
    pub fn set<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<VertexSet> {
        names.into_iter().map(|n| self.vertex(n)).collect()
    }

    pub fn all(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn complement(&self, x: &VertexSet) -> VertexSet {
        self.vertices().filter(|&v| !x.contains(v)).collect()
    }

    pub fn contains_set(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| v.0 < self.vertex_count())
    }

    pub(crate) fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|v| v.0 >= self.vertex_count()) {
            Some(v) => Err(Error::ForeignVertex(v.0)),
            None => Ok(()),
        }
    }

    /// Renders a set as `{a,b,c}`.
    pub fn display_set(&self, x: &VertexSet) -> String {
        let mut out = String::from("{");
        for (i, v) in x.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            match self.names.get(v.0) {
                Some(name) => out.push_str(name),
                None => out.push_str(&alloc::format!("#{}", v.0)),
            }
        }
        out.push('}');
        out
    }

    pub fn mult(&self, src: Vertex, dst: Vertex) -> Multiplicity {
        let row = &self.succ[src.0];
        match row.binary_search_by_key(&dst.0, |e| e.0) {
            Ok(pos) => row[pos].1,
            Err(_) => Multiplicity::ZERO,
        }
    }

    pub fn successors(&self, v: Vertex) -> impl Iterator<Item = (Vertex, Multiplicity)> + '_ {
        self.succ[v.0].iter().map(|&(w, m)| (Vertex(w), m))
    }

    pub fn predecessors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.pred[v.0].iter().map(|&u| Vertex(u))
    }

    /// All `(src, dst, mult)` triples, lexicographic in vertex order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Multiplicity)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(s, row)| row.iter().map(move |&(d, m)| (Vertex(s), Vertex(d), m)))
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    /// `|s⁻¹(v)|`.
    pub fn out_degree(&self, v: Vertex) -> Multiplicity {
        self.out_degree_into(v, |_| true)
    }

    /// Number of edges from `v` whose range satisfies `keep`.
    pub fn out_degree_into(&self, v: Vertex, keep: impl Fn(Vertex) -> bool) -> Multiplicity {
        self.successors(v)
            .filter(|&(w, _)| keep(w))
            .fold(Multiplicity::ZERO, |acc, (_, m)| {
                // row totals were checked for overflow at construction
                acc.checked_add(m).unwrap_or(Multiplicity::Inf)
            })
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.succ[v.0].is_empty()
    }

    pub fn is_infinite_emitter(&self, v: Vertex) -> bool {
        self.succ[v.0].iter().any(|e| e.1.is_inf())
    }

    /// `0 < |s⁻¹(v)| < ∞`.
    pub fn is_finite_emitter(&self, v: Vertex) -> bool {
        !self.is_sink(v) && !self.is_infinite_emitter(v)
    }

    pub fn is_row_finite(&self) -> bool {
        self.vertices().all(|v| !self.is_infinite_emitter(v))
    }

    /// Every vertex reachable from `v`, including `v` itself.
    pub fn reachable_from(&self, v: Vertex) -> VertexSet {
        VertexSet::from_mask(&self.search(v, |g, x| g.succ[x].iter().map(|e| e.0).collect()))
    }

    /// Every vertex that reaches `v`, including `v` itself.
    pub fn reaching(&self, v: Vertex) -> VertexSet {
        VertexSet::from_mask(&self.search(v, |g, x| g.pred[x].clone()))
    }

    fn search(&self, start: Vertex, next: impl Fn(&Self, usize) -> Vec<usize>) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::new();
        seen[start.0] = true;
        queue.push_back(start.0);
        while let Some(x) = queue.pop_front() {
            for y in next(self, x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Reflexive: every vertex reaches itself along the length-0 path.
    pub fn reaches(&self, v: Vertex, w: Vertex) -> bool {
        v == w || self.reachable_from(v).contains(w)
    }

    pub fn reachability(&self) -> Reachability {
        Reachability::new(self)
    }

    /// `Ω(X)`: vertices outside `X` with no path into `X`.
    pub fn omega(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        if x.is_empty() {
            return Err(Error::EmptyOmega);
        }
        let mut into_x = vec![false; self.vertex_count()];
        for v in x.iter() {
            for u in self.reaching(v).iter() {
                into_x[u.0] = true;
            }
        }
        Ok(self.vertices().filter(|v| !into_x[v.0]).collect())
    }

    /// Induced subgraph on `x`, keeping declaration order.
    pub fn restrict(&self, x: &VertexSet) -> EGraph {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut names = Vec::with_capacity(x.len());
        for v in x.iter() {
            new_index[v.0] = names.len();
            names.push(self.names[v.0].clone());
        }
        let edges = self
            .edges()
            .filter(|(s, d, _)| x.contains(*s) && x.contains(*d))
            .map(|(s, d, m)| (new_index[s.0], new_index[d.0], m))
            .collect();
        EGraph::from_parts(names, edges).expect("restriction of a valid graph is valid")
    }
}

/// Dense reflexive-transitive closure of the edge relation.
#[derive(Clone, Debug)]
pub struct Reachability {
    n: usize,
    table: Vec<bool>,
}

impl Reachability {
    pub fn new(g: &EGraph) -> Self {
        let n = g.vertex_count();
        let mut table = vec![false; n * n];
        for v in g.vertices() {
            for w in g.reachable_from(v).iter() {
                table[v.0 * n + w.0] = true;
            }
        }
        Self { n, table }
    }

    pub fn reaches(&self, v: Vertex, w: Vertex) -> bool {
        self.table[v.0 * self.n + w.0]
    }

    /// Downward directed: any two members of `m` reach a common member.
    pub fn is_downward_directed(&self, m: &VertexSet) -> bool {
        m.iter().all(|v| {
            m.iter()
                .all(|w| m.iter().any(|y| self.reaches(v, y) && self.reaches(w, y)))
        })
    }
}
