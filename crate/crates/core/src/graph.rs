//! Simple undirected graphs with ordered edge lists.
//!
//! Vertices are `0..n` internally and `1..=n` in every text format. The
//! position of an edge in [`Graph::edges`] fixes its row in the incidence
//! matrices built from the graph.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::matrix::RatVector;
use crate::rational::int;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A proper two-coloring: `side[i]` is `+1` or `-1`, and adjacent vertices
/// always get opposite signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<i8>,
}

impl Graph {
    /// Builds a graph on `n` vertices from 0-based edges, rejecting loops,
    /// repeated edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {} ({}, {}) outside vertex range 1..={n}",
                    k + 1,
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!(
                    "edge {} is a loop at {}",
                    k + 1,
                    u + 1
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidInput(format!(
                    "edge {} ({}, {}) is repeated",
                    k + 1,
                    u + 1,
                    v + 1
                )));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Cycle `v1 v2 … vn v1`, `n ≥ 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("valid path")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Graph::new(n, edges).expect("valid complete graph")
    }

    /// The graph on `n` vertices whose edge set is selected by `mask` over
    /// the pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::new(n, edges).expect("pair mask yields a simple graph")
    }

    /// Every labeled simple graph on `n ≤ 8` vertices.
    pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        assert!(n <= 8, "too many labeled graphs");
        let pairs = n * n.saturating_sub(1) / 2;
        (0u64..1 << pairs).map(move |mask| Graph::from_pair_mask(n, mask))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree_counts(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Vertex degrees as integer-valued rationals.
    pub fn degrees(&self) -> RatVector {
        self.degree_counts()
            .into_iter()
            .map(|d| int(d as i64))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// A two-coloring of every component, or `None` if some component holds
    /// an odd cycle. Each component's lowest vertex gets `+1`.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut side = vec![0i8; self.n];
        for s in 0..self.n {
            if side[s] != 0 {
                continue;
            }
            side[s] = 1;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if side[v] == 0 {
                        side[v] = -side[u];
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { side })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of the shortest closed walk of odd length through `u`, or
    /// `None` if the component of `u` is bipartite.
    ///
    /// Breadth-first search on the bipartite double cover: the answer is the
    /// distance from `(u, even)` to `(u, odd)`.
    pub fn odd_walk_length(&self, u: usize) -> Option<usize> {
        assert!(u < self.n, "vertex {u} out of range");
        let adj = self.adjacency();
        let mut dist = vec![[usize::MAX; 2]; self.n];
        dist[u][0] = 0;
        let mut queue = VecDeque::from([(u, 0usize)]);
        while let Some((v, p)) = queue.pop_front() {
            let d = dist[v][p];
            if v == u && p == 1 {
                return Some(d);
            }
            for &w in &adj[v] {
                if dist[w][1 - p] == usize::MAX {
                    dist[w][1 - p] = d + 1;
                    queue.push_back((w, 1 - p));
                }
            }
        }
        None
    }

    /// Canonical text form: `n <count>` followed by one 1-based `u v` line
    /// per edge, in edge order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    /// Parses the edge-list format.
    ///
    /// Each non-blank line not starting with `#` is either `n <count>` or an
    /// edge `u v` with 1-based vertex indices. Without a header the vertex
    /// count is the largest index seen.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut declared: Option<usize> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut seen = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::Parse { line, message };
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens[0] == "n" {
                if tokens.len() != 2 {
                    return Err(err("header must be `n <count>`".into()));
                }
                if declared.is_some() {
                    return Err(err("repeated `n` header".into()));
                }
                let count = tokens[1].parse::<usize>().map_err(|_| {
                    err(format!(
                        "vertex count {:?} is not a nonnegative integer",
                        tokens[1]
                    ))
                })?;
                declared = Some(count);
                continue;
            }
            if tokens.len() != 2 {
                return Err(err(format!(
                    "expected two vertex indices, found {} tokens",
                    tokens.len()
                )));
            }
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip(&tokens) {
                let v = tok
                    .parse::<i64>()
                    .map_err(|_| err(format!("{tok:?} is not an integer")))?;
                if v < 1 {
                    return Err(err(format!("vertex index {v} is below 1")));
                }
                *slot = v as usize;
            }
            let [u, v] = ends;
            if u == v {
                return Err(err(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(err(format!("duplicate edge {u} {v}")));
            }
            edges.push((line, u, v));
        }
        let max_index = edges.iter().map(|&(_, u, v)| u.max(v)).max().unwrap_or(0);
        let n = match declared {
            Some(n) => {
                if let Some(&(line, u, v)) = edges.iter().find(|&&(_, u, v)| u.max(v) > n) {
                    return Err(Error::Parse {
                        line,
                        message: format!("edge {u} {v} exceeds declared vertex count {n}"),
                    });
                }
                n
            }
            None => max_index,
        };
        if n == 0 {
            return Err(Error::Parse {
                line: 0,
                message: "no vertices".into(),
            });
        }
        Graph::new(
            n,
            edges.into_iter().map(|(_, u, v)| (u - 1, v - 1)).collect(),
        )
    }
}
