//! Simple undirected graphs on vertices `0..n`.

mod metrics;
mod named;

use std::fmt::Write as _;

pub use metrics::{
    distance3_graph, girth, neighborhood_intersection_profile, report, Girth, GraphReport,
};
pub use named::{
    complete, complete_bipartite, cycle, generalized_petersen, hoffman_singleton, inflate,
    orbit_graph, path, petersen,
};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Adjacency-list graph: symmetric, loop-free, no multi-edges, sorted lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Repeated edges are merged; loops and out-of-range endpoints are errors.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::PointOutOfRange {
                        point: x as u64,
                        v: n,
                    });
                }
            }
            if a == b {
                return Err(Error::ParameterDomain(format!("loop at vertex {a}")));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    /// Builds from per-vertex neighbour sets that are already symmetric.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        debug_assert!(adj.iter().enumerate().all(|(x, l)| l
            .iter()
            .all(|&y| y as usize != x && adj[y as usize].binary_search(&(x as Vertex)).is_ok())));
        Self { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.adj[x as usize]
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.adj[x as usize].len()
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        self.adj[x as usize].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(x, y)` with `x < y` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(x, list)| {
            list.iter()
                .filter(move |&&y| (x as Vertex) < y)
                .map(move |&y| (x as Vertex, y))
        })
    }

    /// The common degree, if every vertex has the same one.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        dist[src as usize] = Some(0);
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x as usize].unwrap();
            for &y in self.neighbors(x) {
                if dist[y as usize].is_none() {
                    dist[y as usize] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s as Vertex];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in self.neighbors(x) {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().len() == 1
    }

    /// Whether the subgraph induced on `vertices` admits a proper 2-colouring.
    pub fn is_bipartite_on(&self, vertices: &[Vertex]) -> bool {
        // 0: outside the subset, 1: unvisited, 2/3: the two colours
        let mut state = vec![0u8; self.n()];
        for &x in vertices {
            state[x as usize] = 1;
        }
        for &s in vertices {
            if state[s as usize] != 1 {
                continue;
            }
            state[s as usize] = 2;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = state[x as usize];
                for &y in self.neighbors(x) {
                    match state[y as usize] {
                        0 => {}
                        1 => {
                            state[y as usize] = 5 - cx;
                            stack.push(y);
                        }
                        cy if cy == cx => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// Text form: `n` on the first line, then one `u v` edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (x, y) in self.edges() {
            let _ = writeln!(out, "{x} {y}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let (_, first) = lines.next().ok_or_else(|| Error::Syntax {
            line: 1,
            message: "missing vertex count".into(),
        })?;
        let n: usize = first.trim().parse().map_err(|_| Error::Syntax {
            line: 1,
            message: format!("`{first}` is not a vertex count"),
        })?;
        let mut edges = Vec::new();
        for (idx, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed: Option<Vec<Vertex>> = fields.iter().map(|f| f.parse().ok()).collect();
            match parsed.as_deref() {
                Some(&[a, b]) => edges.push((a, b)),
                _ => {
                    return Err(Error::Syntax {
                        line: idx + 1,
                        message: format!("expected `u v`, found `{line}`"),
                    })
                }
            }
        }
        Self::from_edges(n, edges)
    }
}
