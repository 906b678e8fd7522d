//! Lines, geometries and base-block development.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::BaseBlockFile;
use crate::params::PentParams;
use crate::Point;

/// A line stored as a strictly increasing list of points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line(Vec<Point>);

impl Line {
    /// Sorts the points; rejects a point listed twice.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut points: Vec<Point> = points.into_iter().collect();
        points.sort_unstable();
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPoint { points });
        }
        Ok(Line(points))
    }

    pub fn points(&self) -> &[Point] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    /// All unordered pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| self.0[i + 1..].iter().map(move |&b| (a, b)))
    }
}

impl From<Line> for Vec<Point> {
    fn from(l: Line) -> Self {
        l.0
    }
}

/// A candidate PENT(k,r,w): parameters plus a line list over points `0..v`.
///
/// Lines are kept sorted lexicographically. The list is allowed to hold
/// repeated or wrongly sized lines so that damaged inputs reach the verifier
/// intact; constructions and [`develop`] only ever produce duplicate-free sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geometry {
    params: PentParams,
    lines: Vec<Line>,
}

impl Geometry {
    pub fn new(params: PentParams, mut lines: Vec<Line>) -> Result<Self> {
        for line in &lines {
            if let Some(&p) = line.points().iter().find(|&&p| p as usize >= params.v) {
                return Err(Error::PointOutOfRange {
                    point: p as u64,
                    v: params.v,
                });
            }
        }
        lines.sort_unstable();
        Ok(Self { params, lines })
    }

    /// Builds from raw point lists, sorting each into a [`Line`].
    pub fn from_point_lists<I, L>(params: PentParams, lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = Point>,
    {
        let lines = lists
            .into_iter()
            .map(Line::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(params, lines)
    }

    pub fn params(&self) -> &PentParams {
        &self.params
    }

    pub fn v(&self) -> usize {
        self.params.v
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// For each point, the indices of the lines through it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.params.v];
        for (i, line) in self.lines.iter().enumerate() {
            for &p in line.points() {
                inc[p as usize].push(i);
            }
        }
        inc
    }

    pub fn into_lines(self) -> Vec<Line> {
        self.lines
    }

    pub fn to_json(&self) -> GeometryJson {
        GeometryJson {
            k: self.params.k,
            r: self.params.r,
            w: self.params.w,
            v: self.params.v,
            lines: self.lines.iter().map(|l| l.points().to_vec()).collect(),
            provenance: None,
        }
    }

    pub fn from_json(json: &GeometryJson) -> Result<Self> {
        let params = PentParams::new(json.k, json.r, json.w)?;
        if params.v != json.v {
            return Err(Error::Format(format!(
                "v = {} disagrees with (k-1)r+w+1 = {}",
                json.v, params.v
            )));
        }
        Self::from_point_lists(params, json.lines.iter().map(|l| l.iter().copied()))
    }
}

/// JSON shape of an exported geometry; lines are sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryJson {
    pub k: usize,
    pub r: usize,
    pub w: usize,
    pub v: usize,
    pub lines: Vec<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<serde_json::Value>,
}

/// Develops every base block under `x -> x + d (mod v)` and returns the
/// union of the orbits with identical lines merged.
pub fn develop(file: &BaseBlockFile) -> Result<Geometry> {
    let params = PentParams::new(file.k, file.r, file.w)?;
    let v = params.v;
    if file.d == 0 || v % file.d != 0 {
        return Err(Error::StepNotDividingV { step: file.d, v });
    }
    let mut lines = BTreeSet::new();
    for (i, block) in file.blocks.iter().enumerate() {
        if block.len() != file.k {
            return Err(Error::ArityMismatch {
                line: i + 1,
                expected: file.k,
                found: block.len(),
            });
        }
        if let Some(&p) = block.iter().find(|&&p| p as usize >= v) {
            return Err(Error::PointOutOfRange { point: p as u64, v });
        }
        for shift in (0..v).step_by(file.d) {
            let line = Line::new(block.iter().map(|&x| ((x as usize + shift) % v) as Point))?;
            lines.insert(line);
        }
    }
    Geometry::new(params, lines.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(k: usize, r: usize, w: usize, d: usize, blocks: Vec<Vec<Point>>) -> BaseBlockFile {
        BaseBlockFile { k, r, w, d, blocks }
    }

    #[test]
    fn line_canonical_order() {
        let l = Line::new([5, 1, 3]).unwrap();
        assert_eq!(l.points(), &[1, 3, 5]);
        assert!(l.contains(3) && !l.contains(2));
        assert_eq!(l.pairs().collect::<Vec<_>>(), vec![(1, 3), (1, 5), (3, 5)]);
        assert!(matches!(
            Line::new([1, 1, 2]),
            Err(Error::RepeatedPoint { .. })
        ));
    }

    #[test]
    fn identity_orbit() {
        // v = 10 for PENT(3,3,3); d = v keeps the block fixed.
        let g = develop(&file(3, 3, 3, 10, vec![vec![0, 1, 2]])).unwrap();
        assert_eq!(g.num_lines(), 1);
    }

    #[test]
    fn short_orbits_collapse() {
        // v = 9 for (3,1,6); {0,3,6} is fixed by x -> x + 3.
        let g = develop(&file(3, 1, 6, 1, vec![vec![0, 3, 6]])).unwrap();
        assert_eq!(g.num_lines(), 3);
        // Both blocks develop to {0,1,5},{0,5,6}; cross-orbit duplicates merge.
        let g = develop(&file(3, 3, 3, 5, vec![vec![0, 5, 1], vec![5, 0, 6]])).unwrap();
        assert_eq!(g.num_lines(), 2);
    }

    #[test]
    fn step_must_divide_v() {
        let err = develop(&file(3, 3, 3, 3, vec![vec![0, 1, 2]])).unwrap_err();
        assert_eq!(err, Error::StepNotDividingV { step: 3, v: 10 });
    }

    #[test]
    fn point_range_checked() {
        let err = develop(&file(3, 3, 3, 5, vec![vec![0, 1, 10]])).unwrap_err();
        assert_eq!(err, Error::PointOutOfRange { point: 10, v: 10 });
    }

    #[test]
    fn json_round_trip() {
        let g = develop(&file(3, 3, 3, 1, vec![vec![0, 1, 5]])).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back: GeometryJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Geometry::from_json(&back).unwrap(), g);
        assert!(json.starts_with(r#"{"k":3,"r":3,"w":3,"v":10,"lines":[[0,1,5],"#));
    }
}
