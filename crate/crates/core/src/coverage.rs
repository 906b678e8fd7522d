use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::Point;

const UNCOVERED: u32 = u32::MAX;

/// Triangular table mapping every unordered point pair to the index of the
/// line covering it.
#[derive(Debug, Clone)]
pub struct PairCoverage {
    v: usize,
    table: Vec<u32>,
}

/// A pair found on two lines while building a [`PairCoverage`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conflict {
    pub pair: (Point, Point),
    pub first: usize,
    pub second: usize,
}

impl From<Conflict> for Error {
    fn from(c: Conflict) -> Self {
        Error::PairCoveredTwice {
            pair: c.pair,
            first: c.first,
            second: c.second,
        }
    }
}

#[inline]
fn tri_index(v: usize, x: usize, y: usize) -> usize {
    debug_assert!(x < y && y < v);
    x * (2 * v - x - 1) / 2 + (y - x - 1)
}

impl PairCoverage {
    pub fn empty(v: usize) -> Self {
        Self {
            v,
            table: vec![UNCOVERED; v * v.saturating_sub(1) / 2],
        }
    }

    /// Fails on the first pair that lies on two lines.
    pub fn build(g: &Geometry) -> Result<Self> {
        let (cov, conflict) = Self::build_lenient(g);
        match conflict {
            Some(c) => Err(c.into()),
            None => Ok(cov),
        }
    }

    /// Keeps the first covering line for every pair and reports the first
    /// conflict, if any, in line order.
    pub fn build_lenient(g: &Geometry) -> (Self, Option<Conflict>) {
        let mut cov = Self::empty(g.v());
        let mut conflict = None;
        for (i, line) in g.lines().iter().enumerate() {
            for (a, b) in line.pairs() {
                let slot = &mut cov.table[tri_index(cov.v, a as usize, b as usize)];
                if *slot == UNCOVERED {
                    *slot = i as u32;
                } else if conflict.is_none() {
                    conflict = Some(Conflict {
                        pair: (a, b),
                        first: *slot as usize,
                        second: i,
                    });
                }
            }
        }
        (cov, conflict)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// The line covering `{x, y}`; `None` for uncovered pairs and `x == y`.
    pub fn line_of(&self, x: Point, y: Point) -> Option<usize> {
        let (x, y) = (x.min(y) as usize, x.max(y) as usize);
        if x == y {
            return None;
        }
        match self.table[tri_index(self.v, x, y)] {
            UNCOVERED => None,
            i => Some(i as usize),
        }
    }

    pub fn is_covered(&self, x: Point, y: Point) -> bool {
        self.line_of(x, y).is_some()
    }

    pub fn covered_count(&self) -> usize {
        self.table.iter().filter(|&&s| s != UNCOVERED).count()
    }

    /// Uncovered pairs `(x, y)`, `x < y`, in lexicographic order.
    pub fn uncovered_pairs(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let v = self.v;
        (0..v).flat_map(move |x| {
            (x + 1..v)
                .filter(move |&y| self.table[tri_index(v, x, y)] == UNCOVERED)
                .map(move |y| (x as Point, y as Point))
        })
    }
}

/// Pair table of a partial linear space; rejects any pair on two lines.
pub fn pair_coverage(g: &Geometry) -> Result<PairCoverage> {
    PairCoverage::build(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Line;
    use crate::params::PentParams;

    fn fano(offset: Point) -> Vec<Vec<Point>> {
        [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ]
        .iter()
        .map(|b| b.iter().map(|&x| x + offset).collect())
        .collect()
    }

    #[test]
    fn triangular_index_is_a_bijection() {
        let v = 9;
        let mut seen = vec![false; v * (v - 1) / 2];
        for x in 0..v {
            for y in x + 1..v {
                let i = tri_index(v, x, y);
                assert!(!seen[i]);
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn two_disjoint_fano_planes() {
        let params = PentParams::new(3, 3, 7).unwrap();
        let lines = fano(0).into_iter().chain(fano(7));
        let g = Geometry::from_point_lists(params, lines).unwrap();
        let cov = pair_coverage(&g).unwrap();
        assert_eq!(cov.covered_count(), 42);
        for x in 0..7 {
            for y in 7..14 {
                assert!(!cov.is_covered(x, y));
            }
        }
        assert_eq!(cov.uncovered_pairs().count(), 49);
    }

    #[test]
    fn duplicate_pair_detected() {
        let params = PentParams::new(3, 3, 3).unwrap();
        let g = Geometry::new(
            params,
            vec![Line::new([0, 1, 2]).unwrap(), Line::new([0, 1, 3]).unwrap()],
        )
        .unwrap();
        assert_eq!(
            pair_coverage(&g).unwrap_err(),
            Error::PairCoveredTwice {
                pair: (0, 1),
                first: 0,
                second: 1
            }
        );
    }

    // Brute force: the table succeeds iff no pair lies in two lines.
    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let params = PentParams::new(3, 3, 3).unwrap();
        for _ in 0..200 {
            let n = rng.random_range(1..8);
            let mut lists = Vec::new();
            for _ in 0..n {
                let mut pts = Vec::new();
                while pts.len() < 3 {
                    let p = rng.random_range(0..10u32);
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
                lists.push(pts);
            }
            let g = Geometry::from_point_lists(params, lists).unwrap();
            let mut partial_linear = true;
            for x in 0..10u32 {
                for y in x + 1..10 {
                    let count = g
                        .lines()
                        .iter()
                        .filter(|l| l.contains(x) && l.contains(y))
                        .count();
                    partial_linear &= count <= 1;
                }
            }
            assert_eq!(pair_coverage(&g).is_ok(), partial_linear);
        }
    }
}
