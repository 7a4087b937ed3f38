//! Shared fixtures, a seeded random corpus, and brute-force oracles that work
//! on a raw multiplicity table rather than on the library's graph type.
#![allow(dead_code)]

use gia_core::{EGraph, Multiplicity};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const INF: u8 = u8::MAX;

/// Raw `n × n` multiplicity table; `INF` marks infinitely many edges.
#[derive(Clone, Debug)]
pub struct Raw {
    pub names: Vec<String>,
    pub m: Vec<Vec<u8>>,
}

impl Raw {
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn graph(&self) -> EGraph {
        let mut b = EGraph::builder().vertices(self.names.iter().cloned());
        for i in 0..self.n() {
            for j in 0..self.n() {
                match self.m[i][j] {
                    0 => {}
                    INF => b = b.edge(&self.names[i], &self.names[j], Multiplicity::Inf),
                    k => b = b.edge(&self.names[i], &self.names[j], k as u64),
                }
            }
        }
        b.build().unwrap()
    }

    pub fn from_graph(g: &EGraph) -> Self {
        let n = g.vertex_count();
        let mut m = vec![vec![0u8; n]; n];
        for (s, d, k) in g.edges() {
            m[s.index()][d.index()] = match k {
                Multiplicity::Inf => INF,
                Multiplicity::Finite(k) => k.min(200) as u8,
            };
        }
        Self {
            names: g.names().to_vec(),
            m,
        }
    }

    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.m[i][j] != 0
    }

    pub fn infinite_emitter(&self, i: usize) -> bool {
        self.m[i].contains(&INF)
    }

    pub fn sink(&self, i: usize) -> bool {
        self.m[i].iter().all(|&k| k == 0)
    }

    /// Floyd–Warshall, reflexive.
    pub fn reach(&self) -> Vec<Vec<bool>> {
        let n = self.n();
        let mut r: Vec<Vec<bool>> = (0..n)
            .map(|i| (0..n).map(|j| i == j || self.edge(i, j)).collect())
            .collect();
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        r
    }

    pub fn hereditary(&self, set: u64) -> bool {
        (0..self.n()).all(|i| {
            set >> i & 1 == 0 || (0..self.n()).all(|j| !self.edge(i, j) || set >> j & 1 == 1)
        })
    }

    pub fn saturated(&self, set: u64) -> bool {
        (0..self.n()).all(|i| {
            set >> i & 1 == 1
                || self.sink(i)
                || self.infinite_emitter(i)
                || (0..self.n()).any(|j| self.edge(i, j) && set >> j & 1 == 0)
        })
    }

    pub fn saturated_hereditary_sets(&self) -> Vec<u64> {
        (0..1u64 << self.n())
            .filter(|&s| self.hereditary(s) && self.saturated(s))
            .collect()
    }

    /// Number of first-return walks at `v` of length at most `max_len`,
    /// counted with edge multiplicity and capped at 2.
    pub fn first_return_walks(&self, v: usize, max_len: usize) -> u8 {
        fn go(raw: &Raw, v: usize, at: usize, len: usize, max_len: usize) -> u8 {
            if len == max_len {
                return 0;
            }
            let mut total = 0u8;
            for j in 0..raw.n() {
                let k = raw.m[at][j];
                if k == 0 {
                    continue;
                }
                let w = k.min(2);
                let sub = if j == v {
                    1
                } else {
                    go(raw, v, j, len + 1, max_len)
                };
                total = (total + (w * sub).min(2)).min(2);
                if total == 2 {
                    return 2;
                }
            }
            total
        }
        go(self, v, v, 0, max_len)
    }

    /// All simple cycles as vertex sequences starting at their minimum index.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        fn extend(raw: &Raw, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let last = *path.last().unwrap();
            let start = path[0];
            if raw.edge(last, start) {
                out.push(path.clone());
            }
            for j in start + 1..raw.n() {
                if raw.edge(last, j) && !path.contains(&j) {
                    path.push(j);
                    extend(raw, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..self.n() {
            extend(self, &mut vec![s], &mut out);
        }
        out
    }

    pub fn acyclic(&self) -> bool {
        let r = self.reach();
        (0..self.n())
            .all(|i| !self.edge(i, i) && (0..self.n()).all(|j| i == j || !(r[i][j] && r[j][i])))
    }
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// Random graph with `1..=max_n` vertices; each pair gets a multiplicity drawn
/// from `choices`, with probability `density` of being nonzero.
pub fn random_raw(rng: &mut ChaCha8Rng, max_n: usize, choices: &[u8], density: f64) -> Raw {
    let n = rng.gen_range(1..=max_n);
    let m = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if rng.gen_bool(density) {
                        choices[rng.gen_range(0..choices.len())]
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    Raw { names: names(n), m }
}

/// The lattice corpus: 200 graphs on at most 5 vertices, multiplicities in
/// {0, 1, 2, ∞}.
pub fn lattice_corpus() -> Vec<Raw> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    (0..200)
        .map(|_| random_raw(&mut rng, 5, &[0, 1, 2, INF], 0.45))
        .collect()
}

/// Acyclic graphs on at most 6 vertices with multiplicities in {1, 2, ∞}:
/// edges only go from lower to higher index, then vertices are shuffled.
pub fn acyclic_corpus(count: usize) -> Vec<Raw> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=6);
            let mut perm: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            let mut m = vec![vec![0u8; n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.4) {
                        m[perm[i]][perm[j]] = [1, 2, INF][rng.gen_range(0..3)];
                    }
                }
            }
            Raw { names: names(n), m }
        })
        .collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=6);
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect()
}

/// Leibniz expansion; only for the small matrices used in tests.
pub fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut total = BigInt::from(0);
    for p in perms(n) {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::from(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in p.iter().enumerate() {
            term *= &m[i][j];
        }
        total += term;
    }
    total
}

pub mod fixtures {
    use gia_core::{EGraph, Multiplicity::Inf};

    pub fn bridge() -> EGraph {
        EGraph::builder()
            .vertices(["u", "v", "w"])
            .edge("u", "u", 1)
            .edge("u", "v", 1)
            .edge("v", "w", Inf)
            .edge("w", "w", 1)
            .build()
            .unwrap()
    }

    pub fn beta_sink() -> EGraph {
        EGraph::builder()
            .vertices(["t", "w", "v", "u", "h"])
            .edge("t", "w", 1)
            .edge("w", "h", Inf)
            .edge("v", "h", Inf)
            .edge("v", "v", 1)
            .edge("v", "u", 1)
            .edge("u", "v", 1)
            .build()
            .unwrap()
    }

    pub fn truncated() -> EGraph {
        EGraph::builder()
            .vertices(["v", "w", "x1", "x2", "x3"])
            .edge("v", "w", Inf)
            .edge("w", "v", 1)
            .edge("v", "x1", Inf)
            .edge("w", "x1", Inf)
            .edge("x1", "x2", 1)
            .edge("x2", "x3", 1)
            .build()
            .unwrap()
    }

    pub fn chain() -> EGraph {
        EGraph::builder()
            .vertices(["v-2", "v-1", "v0", "v1", "v2", "v3"])
            .edge("v-2", "v-1", 1)
            .edge("v-1", "v0", 1)
            .edge("v0", "v1", Inf)
            .edge("v1", "v2", 1)
            .edge("v2", "v3", 1)
            .build()
            .unwrap()
    }

    pub fn cuntz(n: u64) -> EGraph {
        EGraph::builder()
            .vertex("z")
            .edge("z", "z", n)
            .build()
            .unwrap()
    }

    pub fn dd() -> EGraph {
        EGraph::builder()
            .vertices(["a", "b", "c"])
            .edge("a", "c", 1)
            .edge("b", "c", 1)
            .edge("c", "c", 2)
            .build()
            .unwrap()
    }

    pub fn breaking() -> EGraph {
        EGraph::builder()
            .vertices(["v", "h", "u"])
            .edge("v", "h", Inf)
            .edge("v", "u", 1)
            .edge("u", "v", 1)
            .build()
            .unwrap()
    }

    pub fn edgeless2() -> EGraph {
        EGraph::edgeless(["a", "b"]).unwrap()
    }

    pub fn all() -> Vec<(&'static str, EGraph)> {
        vec![
            ("bridge", bridge()),
            ("beta_sink", beta_sink()),
            ("truncated", truncated()),
            ("chain", chain()),
            ("o2", cuntz(2)),
            ("o3", cuntz(3)),
            ("dd", dd()),
            ("breaking", breaking()),
            ("edgeless2", edgeless2()),
        ]
    }
}
