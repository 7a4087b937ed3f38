//! Cycle structure: simple cycles, first returns, Condition (K) and loop exits.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EGraph, Multiplicity, Vertex, VertexSet};
use crate::Result;

/// A simple cycle listed from its smallest vertex in graph order.
pub type Cycle = Vec<Vertex>;

/// How many first-return paths a vertex has, saturating at two.
///
/// A first return at `v` is a loop based at `v` that does not pass through
/// `v` in its interior. Parallel edges give distinct paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FirstReturns {
    None,
    One,
    Many,
}

impl FirstReturns {
    fn from_count(n: Multiplicity) -> Self {
        match n {
            Multiplicity::Finite(0) => Self::None,
            Multiplicity::Finite(1) => Self::One,
            _ => Self::Many,
        }
    }
}

/// Saturating path counter in {0, 1, 2+}.
fn cap(m: Multiplicity) -> u8 {
    match m {
        Multiplicity::Finite(n) if n < 2 => n as u8,
        _ => 2,
    }
}

/// Every simple cycle exactly once, rotated to start at its smallest vertex.
///
/// Johnson's circuit search over the subgraph of vertices `≥ s` for each start
/// `s` in turn. Output is ordered by start vertex, then by depth-first order.
pub fn simple_cycles(g: &EGraph) -> Vec<Cycle> {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = g
        .vertices()
        .map(|v| g.successors(v).map(|(w, _)| w.index()).collect())
        .collect();
    let mut search = Johnson {
        adj: &adj,
        blocked: vec![false; n],
        blocked_by: vec![Vec::new(); n],
        stack: Vec::new(),
        out: Vec::new(),
        start: 0,
    };
    for s in 0..n {
        search.start = s;
        for i in s..n {
            search.blocked[i] = false;
            search.blocked_by[i].clear();
        }
        search.circuit(s);
    }
    search.out
}

struct Johnson<'a> {
    adj: &'a [Vec<usize>],
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    stack: Vec<usize>,
    out: Vec<Cycle>,
    start: usize,
}

impl Johnson<'_> {
    fn circuit(&mut self, v: usize) -> bool {
        let mut found = false;
        self.stack.push(v);
        self.blocked[v] = true;
        for &w in &self.adj[v] {
            if w < self.start {
                continue;
            }
            if w == self.start {
                self.out
                    .push(self.stack.iter().map(|&i| Vertex(i)).collect());
                found = true;
            } else if !self.blocked[w] && self.circuit(w) {
                found = true;
            }
        }
        if found {
            self.unblock(v);
        } else {
            for &w in &self.adj[v] {
                if w >= self.start && !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        found
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        while let Some(w) = self.blocked_by[u].pop() {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }
}

/// Counts first returns at `v` (capped at two).
///
/// Let `R` be the vertices other than `v` that sit on some path from `v` back
/// to `v` avoiding `v` in between. If `G[R]` has a cycle there are infinitely
/// many first returns; otherwise `G[R]` is acyclic and the paths are counted
/// in topological order.
pub fn first_returns(g: &EGraph, v: Vertex) -> FirstReturns {
    let n = g.vertex_count();
    let forward = bfs_avoiding(n, v, g.successors(v).map(|(w, _)| w), |x| {
        g.successors(x).map(|(y, _)| y).collect()
    });
    let backward = bfs_avoiding(n, v, g.predecessors(v), |x| g.predecessors(x).collect());
    let inner: Vec<bool> = (0..n).map(|i| forward[i] && backward[i]).collect();

    // Kahn's algorithm on G[R]; leftover vertices mean a cycle.
    let mut indeg = vec![0usize; n];
    for x in g.vertices().filter(|x| inner[x.index()]) {
        for (y, _) in g.successors(x) {
            if inner[y.index()] {
                indeg[y.index()] += 1;
            }
        }
    }
    let mut queue: VecDeque<Vertex> = g
        .vertices()
        .filter(|x| inner[x.index()] && indeg[x.index()] == 0)
        .collect();
    let mut paths = vec![0u8; n];
    for x in g.vertices().filter(|x| inner[x.index()]) {
        paths[x.index()] = cap(g.mult(v, x));
    }
    let mut processed = 0;
    while let Some(x) = queue.pop_front() {
        processed += 1;
        for (y, m) in g.successors(x) {
            if !inner[y.index()] {
                continue;
            }
            let add = paths[x.index()].saturating_mul(cap(m)).min(2);
            paths[y.index()] = (paths[y.index()] + add).min(2);
            indeg[y.index()] -= 1;
            if indeg[y.index()] == 0 {
                queue.push_back(y);
            }
        }
    }
    let inner_count = inner.iter().filter(|&&b| b).count();
    if processed < inner_count {
        return FirstReturns::Many;
    }
    let total = g
        .vertices()
        .filter(|x| inner[x.index()])
        .fold(cap(g.mult(v, v)), |acc, x| {
            (acc + paths[x.index()].saturating_mul(cap(g.mult(x, v))).min(2)).min(2)
        });
    FirstReturns::from_count(Multiplicity::Finite(total as u64))
}

fn bfs_avoiding(
    n: usize,
    avoid: Vertex,
    seeds: impl Iterator<Item = Vertex>,
    next: impl Fn(Vertex) -> Vec<Vertex>,
) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for s in seeds {
        if s != avoid && !seen[s.index()] {
            seen[s.index()] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in next(x) {
            if y != avoid && !seen[y.index()] {
                seen[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

pub fn lies_on_loop(g: &EGraph, v: Vertex) -> bool {
    first_returns(g, v) != FirstReturns::None
}

pub fn has_two_first_returns(g: &EGraph, v: Vertex) -> bool {
    first_returns(g, v) == FirstReturns::Many
}

/// Condition (K): no vertex has exactly one first return.
pub fn condition_k(g: &EGraph) -> bool {
    g.vertices()
        .all(|v| first_returns(g, v) != FirstReturns::One)
}

/// Whether every loop with vertices in `m` has an exit whose range is in `m`.
///
/// A loop without such an exit forces each of its vertices to send exactly
/// one edge into `m`, namely the next loop edge. So the check looks for a
/// cycle in the partial map sending each vertex of `m` with exactly one edge
/// into `m` to the range of that edge.
pub fn loops_have_exits_within(g: &EGraph, m: &VertexSet) -> Result<bool> {
    g.check_set(m)?;
    let n = g.vertex_count();
    let inside = m.mask(n);
    let mut next: Vec<Option<usize>> = vec![None; n];
    for x in m.iter() {
        if g.out_degree_into(x, |y| inside[y.index()]) == Multiplicity::Finite(1) {
            next[x.index()] = g
                .successors(x)
                .find(|(y, _)| inside[y.index()])
                .map(|(y, _)| y.index());
        }
    }
    // 0 = unvisited, 1 = on current walk, 2 = done
    let mut state = vec![0u8; n];
    for start in m.iter().map(Vertex::index) {
        let mut walk = Vec::new();
        let mut cur = Some(start);
        while let Some(x) = cur {
            match state[x] {
                1 => return Ok(false),
                2 => break,
                _ => {}
            }
            state[x] = 1;
            walk.push(x);
            cur = next[x];
        }
        for x in walk {
            state[x] = 2;
        }
    }
    Ok(true)
}

/// Condition (L) on the whole graph.
pub fn condition_l(g: &EGraph) -> bool {
    loops_have_exits_within(g, &g.all()).expect("full vertex set belongs to the graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bridge() -> EGraph {
        EGraph::builder()
            .vertices(["u", "v", "w"])
            .edge("u", "u", 1)
            .edge("u", "v", 1)
            .edge("v", "w", Multiplicity::Inf)
            .edge("w", "w", 1)
            .build()
            .unwrap()
    }

    fn beta_sink() -> EGraph {
        EGraph::builder()
            .vertices(["t", "w", "v", "u", "h"])
            .edge("t", "w", 1)
            .edge("w", "h", Multiplicity::Inf)
            .edge("v", "h", Multiplicity::Inf)
            .edge("v", "v", 1)
            .edge("v", "u", 1)
            .edge("u", "v", 1)
            .build()
            .unwrap()
    }

    fn o2() -> EGraph {
        EGraph::builder()
            .vertex("z")
            .edge("z", "z", 2)
            .build()
            .unwrap()
    }

    fn chain3() -> EGraph {
        EGraph::builder()
            .vertices(["a", "b", "c"])
            .edge("a", "b", 1)
            .edge("b", "c", 1)
            .build()
            .unwrap()
    }

    #[test]
    fn simple_cycle_examples() {
        let g = bridge();
        assert_eq!(simple_cycles(&g), vec![vec![Vertex(0)], vec![Vertex(2)]]);
        assert_eq!(simple_cycles(&o2()), vec![vec![Vertex(0)]]);
        assert!(simple_cycles(&chain3()).is_empty());
    }

    #[test]
    fn first_return_examples() {
        let g = o2();
        assert!(has_two_first_returns(&g, Vertex(0)));
        let g = bridge();
        assert_eq!(first_returns(&g, g.vertex("u").unwrap()), FirstReturns::One);
        assert_eq!(
            first_returns(&g, g.vertex("v").unwrap()),
            FirstReturns::None
        );
        let g = beta_sink();
        assert!(has_two_first_returns(&g, g.vertex("v").unwrap()));
        assert!(has_two_first_returns(&g, g.vertex("u").unwrap()));
    }

    #[test]
    fn condition_k_examples() {
        assert!(!condition_k(&bridge()));
        assert!(condition_k(&beta_sink()));
        assert!(condition_k(&chain3()));
    }

    #[test]
    fn loop_exit_examples() {
        let g = bridge();
        assert!(loops_have_exits_within(&g, &g.set(["u", "v"]).unwrap()).unwrap());
        assert!(!loops_have_exits_within(&g, &g.set(["u"]).unwrap()).unwrap());
        let g = o2();
        assert!(loops_have_exits_within(&g, &g.all()).unwrap());
        let foreign = VertexSet::from_vertices([Vertex(7)]);
        assert!(loops_have_exits_within(&g, &foreign).is_err());
    }

    #[test]
    fn cycle_inside_avoiding_base_gives_many() {
        // v -> a -> v with a self-loop on a: infinitely many first returns at v
        let g = EGraph::builder()
            .vertices(["v", "a"])
            .edge("v", "a", 1)
            .edge("a", "v", 1)
            .edge("a", "a", 1)
            .build()
            .unwrap();
        assert_eq!(first_returns(&g, Vertex(0)), FirstReturns::Many);
        // a has its own loop plus a -> v -> a
        assert_eq!(first_returns(&g, Vertex(1)), FirstReturns::Many);
    }

    #[test]
    fn side_cycle_off_the_return_path_does_not_count() {
        // v -> a -> v, v -> b, b -> b: the loop at b never comes back to v
        let g = EGraph::builder()
            .vertices(["v", "a", "b"])
            .edge("v", "a", 1)
            .edge("a", "v", 1)
            .edge("v", "b", 1)
            .edge("b", "b", 1)
            .build()
            .unwrap();
        assert_eq!(first_returns(&g, Vertex(0)), FirstReturns::One);
    }
}
