use std::collections::{BTreeMap, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// Length of a shortest cycle, or [`Girth::Acyclic`] for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Option<usize>", from = "Option<usize>")]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    pub fn cycle_length(self) -> Option<usize> {
        match self {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// Girth at least `g`; forests satisfy every bound.
    pub fn at_least(self, g: usize) -> bool {
        self.cycle_length().is_none_or(|c| c >= g)
    }
}

impl From<Girth> for Option<usize> {
    fn from(g: Girth) -> Self {
        g.cycle_length()
    }
}

impl From<Option<usize>> for Girth {
    fn from(g: Option<usize>) -> Self {
        g.map_or(Girth::Acyclic, Girth::Cycle)
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Shortest cycle through `root`, or a cycle no longer than `bound`, whichever
/// is found first. Only cycles shorter than `bound` matter to the caller.
fn shortest_cycle_from(g: &Graph, root: Vertex, bound: usize) -> usize {
    let n = g.n();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    dist[root as usize] = 0;
    queue.push_back(root);
    let mut best = bound;
    while let Some(x) = queue.pop_front() {
        let dx = dist[x as usize] as usize;
        if 2 * dx + 1 >= best {
            break;
        }
        for &y in g.neighbors(x) {
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dx as u32 + 1;
                parent[y as usize] = x;
                queue.push_back(y);
            } else if parent[x as usize] != y {
                best = best.min(dx + dist[y as usize] as usize + 1);
            }
        }
    }
    best
}

/// Girth by breadth-first search from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let best = (0..g.n() as Vertex)
        .into_par_iter()
        .map(|s| shortest_cycle_from(g, s, usize::MAX))
        .min()
        .unwrap_or(usize::MAX);
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub n: usize,
    /// `None` when the graph is irregular.
    pub regular_degree: Option<usize>,
    pub girth: Girth,
    pub connected: bool,
    pub component_sizes: Vec<usize>,
}

pub fn report(g: &Graph) -> GraphReport {
    let components = g.components();
    GraphReport {
        n: g.n(),
        regular_degree: g.regular_degree(),
        girth: girth(g),
        connected: components.len() <= 1,
        component_sizes: components.iter().map(Vec::len).collect(),
    }
}

/// Vertices within distance two of `x`, excluding `x`, marked in `mark`.
fn mark_ball2(g: &Graph, x: Vertex, mark: &mut [bool]) {
    for &y in g.neighbors(x) {
        mark[y as usize] = true;
        for &z in g.neighbors(y) {
            mark[z as usize] = true;
        }
    }
    mark[x as usize] = false;
}

/// `x ~ y` exactly when `x` and `y` are at distance at least three in `g`.
pub fn distance3_graph(g: &Graph) -> Graph {
    let n = g.n();
    let adj: Vec<Vec<Vertex>> = (0..n as Vertex)
        .into_par_iter()
        .map(|x| {
            let mut near = vec![false; n];
            mark_ball2(g, x, &mut near);
            (0..n as Vertex)
                .filter(|&y| y != x && !near[y as usize])
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// Histogram of `|N(x) ∩ N(y)|` over all unordered pairs of distinct vertices.
pub fn neighborhood_intersection_profile(g: &Graph) -> BTreeMap<usize, usize> {
    let n = g.n();
    let rows: Vec<BTreeMap<usize, usize>> = (0..n as Vertex)
        .into_par_iter()
        .map(|x| {
            // common[y] counts paths x - z - y with y > x
            let mut common = vec![0usize; n];
            for &z in g.neighbors(x) {
                for &y in g.neighbors(z) {
                    if y > x {
                        common[y as usize] += 1;
                    }
                }
            }
            let mut hist = BTreeMap::new();
            for c in &common[x as usize + 1..] {
                *hist.entry(*c).or_insert(0) += 1;
            }
            hist
        })
        .collect();
    let mut out = BTreeMap::new();
    for row in rows {
        for (c, m) in row {
            *out.entry(c).or_insert(0) += m;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::*;

    /// Independent oracle: the shortest cycle through edge (u, v) is one plus
    /// the u-v distance once that edge is removed.
    fn girth_by_edge_removal(g: &Graph) -> Girth {
        let mut best = None::<usize>;
        for (u, v) in g.edges() {
            let rest: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
            let h = Graph::from_edges(g.n(), rest).unwrap();
            if let Some(d) = h.distances_from(u)[v as usize] {
                let len = d as usize + 1;
                best = Some(best.map_or(len, |b: usize| b.min(len)));
            }
        }
        best.into()
    }

    #[test]
    fn small_girths() {
        assert_eq!(girth(&cycle(4)), Girth::Cycle(4));
        assert_eq!(girth(&cycle(7)), Girth::Cycle(7));
        assert_eq!(girth(&path(5)), Girth::Acyclic);
        assert_eq!(girth(&complete(4)), Girth::Cycle(3));
        assert_eq!(girth(&complete_bipartite(3, 3)), Girth::Cycle(4));
        assert_eq!(girth(&petersen()), Girth::Cycle(5));
    }

    #[test]
    fn girth_matches_edge_removal_oracle() {
        let graphs = [
            petersen(),
            generalized_petersen(7).unwrap(),
            generalized_petersen(8).unwrap(),
            complete_bipartite(2, 5),
            cycle(9),
            path(6),
            inflate(&cycle(5), 2),
        ];
        for g in &graphs {
            assert_eq!(girth(g), girth_by_edge_removal(g));
        }
    }

    #[test]
    fn reports() {
        let r = report(&petersen());
        assert_eq!(
            r,
            GraphReport {
                n: 10,
                regular_degree: Some(3),
                girth: Girth::Cycle(5),
                connected: true,
                component_sizes: vec![10],
            }
        );
        let r = report(&complete_bipartite(3, 3));
        assert_eq!(
            (r.n, r.regular_degree, r.girth, r.connected),
            (6, Some(3), Girth::Cycle(4), true)
        );
        let r = report(&path(5));
        assert_eq!((r.regular_degree, r.girth), (None, Girth::Acyclic));
        assert_eq!(serde_json::to_string(&Girth::Acyclic).unwrap(), "null");
        assert_eq!(serde_json::to_string(&Girth::Cycle(5)).unwrap(), "5");
    }

    #[test]
    fn distance3_examples() {
        assert_eq!(distance3_graph(&petersen()).edge_count(), 0);
        let e = distance3_graph(&cycle(6));
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 5)]);
        // brute force over BFS distances
        let g = generalized_petersen(9).unwrap();
        let e = distance3_graph(&g);
        for x in 0..g.n() as Vertex {
            let d = g.distances_from(x);
            for y in 0..g.n() as Vertex {
                let far = x != y && d[y as usize].is_none_or(|d| d >= 3);
                assert_eq!(e.has_edge(x, y), far);
            }
        }
    }

    #[test]
    fn intersection_profiles() {
        let p = neighborhood_intersection_profile(&petersen());
        // 15 adjacent pairs share nothing, 30 pairs at distance two share one
        assert_eq!(p, BTreeMap::from([(0, 15), (1, 30)]));
        let p = neighborhood_intersection_profile(&complete_bipartite(3, 3));
        assert_eq!(p, BTreeMap::from([(0, 9), (3, 6)]));
    }
}
