use std::collections::BTreeSet;

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn cycle(n: usize) -> Graph {
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).map(|i| (i, (i + 1) % n32))).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as Vertex).map(|i| (i - 1, i))).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).flat_map(|a| (a + 1..n32).map(move |b| (a, b))))
        .expect("valid complete graph")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let (a32, b32) = (a as Vertex, b as Vertex);
    Graph::from_edges(
        a + b,
        (0..a32).flat_map(|x| (a32..a32 + b32).map(move |y| (x, y))),
    )
    .expect("valid complete bipartite graph")
}

pub fn petersen() -> Graph {
    generalized_petersen(5).expect("GP(5,2)")
}

/// `GP(n, 2)`: outer cycle `0..n`, spokes `i ~ n+i`, inner edges `n+i ~ n+(i+2 mod n)`.
pub fn generalized_petersen(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(Error::ParameterDomain(format!(
            "GP(n,2) needs n >= 5, got {n}"
        )));
    }
    let n32 = n as Vertex;
    let edges = (0..n32).flat_map(|i| {
        [
            (i, (i + 1) % n32),
            (i, n32 + i),
            (n32 + i, n32 + (i + 2) % n32),
        ]
    });
    Graph::from_edges(2 * n, edges)
}

/// The Hoffman–Singleton graph from five pentagons and five pentagrams.
///
/// Pentagon `h` vertex `j` is `5h + j` with `j ~ j ± 1`; pentagram `i`
/// vertex `j` is `25 + 5i + j` with `j ~ j ± 2`; pentagon `h` vertex `j` is
/// adjacent to pentagram `i` vertex `h i + j (mod 5)`.
pub fn hoffman_singleton() -> Graph {
    let mut edges = Vec::with_capacity(175);
    for h in 0..5u32 {
        for j in 0..5u32 {
            edges.push((5 * h + j, 5 * h + (j + 1) % 5));
            edges.push((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5));
            for i in 0..5u32 {
                edges.push((5 * h + j, 25 + 5 * i + (h * i + j) % 5));
            }
        }
    }
    Graph::from_edges(50, edges).expect("valid Hoffman-Singleton graph")
}

/// Union of the orbits of `base_edges` under `x -> x + step (mod modulus)`.
pub fn orbit_graph(base_edges: &[(Vertex, Vertex)], step: usize, modulus: usize) -> Result<Graph> {
    if step == 0 || modulus % step != 0 {
        return Err(Error::StepNotDividingV { step, v: modulus });
    }
    let mut edges = BTreeSet::new();
    for &(a, b) in base_edges {
        for x in [a, b] {
            if x as usize >= modulus {
                return Err(Error::PointOutOfRange {
                    point: x as u64,
                    v: modulus,
                });
            }
        }
        for shift in (0..modulus).step_by(step) {
            let a2 = ((a as usize + shift) % modulus) as Vertex;
            let b2 = ((b as usize + shift) % modulus) as Vertex;
            edges.insert((a2.min(b2), a2.max(b2)));
        }
    }
    Graph::from_edges(modulus, edges)
}

/// Replaces vertex `p` by `{hp, .., hp + h - 1}` and every edge by `K_{h,h}`.
pub fn inflate(g: &Graph, h: usize) -> Graph {
    let h32 = h as Vertex;
    let adj = (0..g.n() * h)
        .map(|x| {
            let p = x as Vertex / h32;
            g.neighbors(p)
                .iter()
                .flat_map(|&q| h32 * q..h32 * q + h32)
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{girth, neighborhood_intersection_profile, report, Girth};

    #[test]
    fn petersen_family() {
        let g = generalized_petersen(5).unwrap();
        assert_eq!(g, petersen());
        let r = report(&g);
        assert_eq!(
            (r.n, r.regular_degree, r.girth),
            (10, Some(3), Girth::Cycle(5))
        );
        let g15 = generalized_petersen(15).unwrap();
        let r = report(&g15);
        assert_eq!((r.n, r.regular_degree, r.connected), (30, Some(3), true));
        assert!(r.girth.at_least(5));
        assert!(generalized_petersen(4).is_err());
    }

    #[test]
    fn hoffman_singleton_is_the_moore_graph() {
        let g = hoffman_singleton();
        assert_eq!(g.edge_count(), 175);
        let r = report(&g);
        assert_eq!(
            (r.n, r.regular_degree, r.girth, r.connected),
            (50, Some(7), Girth::Cycle(5), true)
        );
        assert_eq!(r.n, 7 * 7 + 1);
        // Moore graph of diameter two: every non-adjacent pair has exactly one common neighbour.
        let profile = neighborhood_intersection_profile(&g);
        assert_eq!(
            profile.into_iter().collect::<Vec<_>>(),
            vec![(0, 175), (1, 1050)]
        );
    }

    #[test]
    fn orbit_graph_examples() {
        let base = [(0, 4), (1, 5), (2, 6), (0, 3), (1, 3), (2, 3)];
        let g = orbit_graph(&base, 4, 20).unwrap();
        assert_eq!(g.edge_count(), 30);
        let r = report(&g);
        assert_eq!(r.regular_degree, Some(3));
        assert!(r.girth.at_least(5));
        assert!(r.connected);

        let single = orbit_graph(&[(0, 1)], 7, 7).unwrap();
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        assert!(matches!(
            orbit_graph(&base, 3, 20),
            Err(Error::StepNotDividingV { .. })
        ));
        assert!(matches!(
            orbit_graph(&[(0, 20)], 4, 20),
            Err(Error::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn orbit_graph_rotation_invariant() {
        let base = [(0, 4), (1, 5), (2, 6), (0, 3), (1, 3), (2, 3)];
        let g = orbit_graph(&base, 4, 20).unwrap();
        let rotated: Vec<_> = base
            .iter()
            .map(|&(a, b)| ((a + 4) % 20, (b + 4) % 20))
            .collect();
        assert_eq!(orbit_graph(&rotated, 4, 20).unwrap(), g);
    }

    #[test]
    fn inflation() {
        let p = petersen();
        assert_eq!(inflate(&p, 1), p);
        let d = inflate(&p, 3);
        let r = report(&d);
        assert_eq!(
            (r.n, r.regular_degree, r.girth, r.connected),
            (30, Some(9), Girth::Cycle(4), true)
        );
        let profile = neighborhood_intersection_profile(&d);
        assert!(profile.keys().all(|c| [0, 3, 9].contains(c)), "{profile:?}");
        // same source: C(3,2)*10 pairs share all 9 neighbours
        assert_eq!(profile[&9], 30);
        // distance two in Petersen: 30 pairs, each blown up to 9 pairs sharing h = 3
        assert_eq!(profile[&3], 270);
    }

    #[test]
    fn inflation_intersections_follow_source_distance() {
        let c = petersen();
        let h = 3;
        let d = inflate(&c, h);
        for x in 0..d.n() as Vertex {
            let dist = c.distances_from(x / h as Vertex);
            for y in x + 1..d.n() as Vertex {
                let common = d
                    .neighbors(x)
                    .iter()
                    .filter(|z| d.neighbors(y).binary_search(z).is_ok())
                    .count();
                let expected = match dist[(y / h as Vertex) as usize] {
                    Some(0) => 9,
                    Some(2) => h,
                    _ => 0,
                };
                assert_eq!(common, expected);
            }
        }
    }

    #[test]
    fn inflated_girth_is_four() {
        for g in [path(2), cycle(5), petersen(), hoffman_singleton()] {
            for h in 2..4 {
                assert_eq!(girth(&inflate(&g, h)), Girth::Cycle(4));
            }
        }
    }
}
