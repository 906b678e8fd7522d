//! Verification, deficiency graphs and classification of PENT(k,r,w) geometries.

mod analysis;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use analysis::{
    classify, dist3_analysis, line_split, opposite_design, overlap_profile, Dist3Analysis,
    LineSplit, OppositeDesign, OverlapProfile,
};

use crate::coverage::PairCoverage;
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::graphs::{report, Graph, GraphReport};
use crate::params::PentParams;
use crate::Point;

/// `x ~ y` exactly when `x != y` are on no common line.
pub fn deficiency_graph(g: &Geometry) -> Result<Graph> {
    let cov = PairCoverage::build(g)?;
    Ok(deficiency_from_coverage(&cov))
}

pub(crate) fn deficiency_from_coverage(cov: &PairCoverage) -> Graph {
    let v = cov.v();
    let adj = (0..v as Point)
        .into_par_iter()
        .map(|x| {
            (0..v as Point)
                .filter(|&y| y != x && !cov.is_covered(x, y))
                .collect()
        })
        .collect();
    Graph::from_adjacency(adj)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeometryType {
    A,
    B,
    C,
    D,
    E,
    F,
    Invalid,
}

impl std::fmt::Display for GeometryType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Concrete evidence for a failed axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Witness {
    /// A pair on two lines (line indices into the sorted line list).
    Pair {
        pair: (Point, Point),
        lines: (usize, usize),
    },
    /// A line with the wrong number of points.
    Line { line: usize, size: usize },
    /// Every point whose replication differs from `r`, with its actual count.
    Points { points: Vec<(Point, usize)> },
    /// The lowest point whose non-collinear set does not carry an S(2,k,w).
    Opposite { point: Point, reason: String },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Pair { pair, lines } => write!(
                f,
                "pair {{{}, {}}} lies on lines #{} and #{}",
                pair.0, pair.1, lines.0, lines.1
            ),
            Witness::Line { line, size } => write!(f, "line #{line} has {size} points"),
            Witness::Points { points } => {
                let shown: Vec<String> = points
                    .iter()
                    .take(8)
                    .map(|(p, d)| format!("{p} (on {d})"))
                    .collect();
                write!(
                    f,
                    "{} points off the replication number: {}",
                    points.len(),
                    shown.join(", ")
                )?;
                if points.len() > 8 {
                    f.write_str(", ...")?;
                }
                Ok(())
            }
            Witness::Opposite { point, reason } => write!(f, "point {point}: {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn from_witness(witness: Option<Witness>) -> Self {
        Self {
            pass: witness.is_none(),
            witness,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    PartialLinear,
    Uniform,
    Regular,
    OppositeDesigns,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axiom::PartialLinear => "partial_linear",
            Axiom::Uniform => "uniform",
            Axiom::Regular => "regular",
            Axiom::OppositeDesigns => "opposite_designs",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axioms {
    pub partial_linear: AxiomCheck,
    pub uniform: AxiomCheck,
    pub regular: AxiomCheck,
    pub opposite_designs: AxiomCheck,
}

impl Axioms {
    pub fn all_pass(&self) -> bool {
        self.failed().is_empty()
    }

    pub fn get(&self, a: Axiom) -> &AxiomCheck {
        match a {
            Axiom::PartialLinear => &self.partial_linear,
            Axiom::Uniform => &self.uniform,
            Axiom::Regular => &self.regular,
            Axiom::OppositeDesigns => &self.opposite_designs,
        }
    }

    /// Failed axioms in checking order.
    pub fn failed(&self) -> Vec<Axiom> {
        [
            Axiom::PartialLinear,
            Axiom::Uniform,
            Axiom::Regular,
            Axiom::OppositeDesigns,
        ]
        .into_iter()
        .filter(|&a| !self.get(a).pass)
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: PentParams,
    pub num_lines: usize,
    pub axioms: Axioms,
    pub deficiency: GraphReport,
    /// Components of the deficiency graph isomorphic to `K_{w,w}`.
    pub kww_components: usize,
    pub geometry_type: GeometryType,
    /// Present for valid geometries.
    pub line_split: Option<LineSplit>,
    /// Present for valid geometries.
    pub overlap_profile: Option<OverlapProfile>,
    /// Human-readable failures, axioms first.
    pub errors: Vec<String>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.geometry_type != GeometryType::Invalid
    }

    /// The stable JSON summary.
    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            valid: self.is_valid(),
            geometry_type: self.is_valid().then(|| self.geometry_type.to_string()),
            k: self.params.k,
            r: self.params.r,
            w: self.params.w,
            v: self.params.v,
            b: self.num_lines,
            girth: self.deficiency.girth.cycle_length(),
            connected: self.deficiency.connected,
            b_opp: self.line_split.map(|s| s.b_opp),
            b_non_opp: self.line_split.map(|s| s.b_non_opp),
            e: self.params.excess(),
            errors: self.errors.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub valid: bool,
    #[serde(rename = "type")]
    pub geometry_type: Option<String>,
    pub k: usize,
    pub r: usize,
    pub w: usize,
    pub v: usize,
    pub b: usize,
    pub girth: Option<usize>,
    pub connected: bool,
    pub b_opp: Option<usize>,
    pub b_non_opp: Option<usize>,
    pub e: Option<i64>,
    pub errors: Vec<String>,
}

/// Whether `comp` induces `K_{w,w}` in a graph whose vertices have degree `w`.
pub(crate) fn is_kww_component(d: &Graph, comp: &[Point], w: usize) -> bool {
    comp.len() == 2 * w && comp.iter().all(|&x| d.degree(x) == w) && d.is_bipartite_on(comp)
}

/// Brute-force check of every axiom plus the structural summary.
pub fn verify(g: &Geometry) -> VerificationReport {
    let p = *g.params();
    let v = p.v;
    let (cov, conflict) = PairCoverage::build_lenient(g);

    let partial_linear = AxiomCheck::from_witness(conflict.map(|c| Witness::Pair {
        pair: c.pair,
        lines: (c.first, c.second),
    }));

    let uniform =
        AxiomCheck::from_witness(g.lines().iter().position(|l| l.len() != p.k).map(|i| {
            Witness::Line {
                line: i,
                size: g.lines()[i].len(),
            }
        }));

    let mut degree = vec![0usize; v];
    for line in g.lines() {
        for &x in line.points() {
            degree[x as usize] += 1;
        }
    }
    let off: Vec<(Point, usize)> = degree
        .iter()
        .enumerate()
        .filter(|&(_, &d)| d != p.r)
        .map(|(x, &d)| (x as Point, d))
        .collect();
    let regular =
        AxiomCheck::from_witness((!off.is_empty()).then_some(Witness::Points { points: off }));

    let d = deficiency_from_coverage(&cov);
    let inc = g.incidence();
    let opposite_designs = AxiomCheck::from_witness(
        (0..v as Point)
            .into_par_iter()
            .filter_map(|x| opposite_defect(g, &cov, &inc, &d, x).map(|reason| (x, reason)))
            .min_by_key(|(x, _)| *x)
            .map(|(point, reason)| Witness::Opposite { point, reason }),
    );

    let axioms = Axioms {
        partial_linear,
        uniform,
        regular,
        opposite_designs,
    };
    let deficiency = report(&d);
    let kww_components = d
        .components()
        .iter()
        .filter(|c| is_kww_component(&d, c, p.w))
        .count();

    let mut errors: Vec<String> = axioms
        .failed()
        .into_iter()
        .map(|a| format!("{a}: {}", axioms.get(a).witness.as_ref().expect("witness")))
        .collect();

    let mut report = VerificationReport {
        params: p,
        num_lines: g.num_lines(),
        axioms,
        deficiency,
        kww_components,
        geometry_type: GeometryType::Invalid,
        line_split: None,
        overlap_profile: None,
        errors: Vec::new(),
    };
    if report.axioms.all_pass() {
        report.geometry_type = classify(&report).expect("axioms pass");
        let split = analysis::line_split_with(g, &d, &report.deficiency);
        if let Err(e) = &split.check {
            errors.push(e.to_string());
        }
        report.line_split = Some(split.split);
        let overlap = analysis::overlap_profile_of(&d, p.k);
        if let Some((x, y, size)) = overlap.forbidden {
            errors.push(Error::ForbiddenOverlap { x, y, size }.to_string());
        }
        report.overlap_profile = Some(overlap);
        if !errors.is_empty() {
            // necessary conditions of every PENT; a breach means the axioms were misjudged
            report.geometry_type = GeometryType::Invalid;
        }
    }
    report.errors = errors;
    report
}

/// Why `x` fails to see an S(2,k,w) on its non-collinear points, if it does.
fn opposite_defect(
    g: &Geometry,
    cov: &PairCoverage,
    inc: &[Vec<usize>],
    d: &Graph,
    x: Point,
) -> Option<String> {
    let p = g.params();
    let wx = d.neighbors(x);
    if wx.len() != p.w {
        return Some(format!(
            "{} points are not collinear with it, expected w = {}",
            wx.len(),
            p.w
        ));
    }
    for (i, &y) in wx.iter().enumerate() {
        for &z in &wx[i + 1..] {
            match cov.line_of(y, z) {
                None => {
                    return Some(format!(
                        "pair {{{y}, {z}}} of its opposite set is on no line"
                    ))
                }
                Some(l) => {
                    let line = &g.lines()[l];
                    if line.len() != p.k
                        || !line.points().iter().all(|q| wx.binary_search(q).is_ok())
                    {
                        return Some(format!(
                            "pair {{{y}, {z}}} of its opposite set lies on line #{l}, which leaves the set"
                        ));
                    }
                }
            }
        }
    }
    // every pair is covered, so it is covered once iff the inside blocks carry C(w,2) pairs
    let inside: std::collections::BTreeSet<usize> = wx
        .iter()
        .flat_map(|&y| inc[y as usize].iter().copied())
        .filter(|&l| {
            let line = &g.lines()[l];
            line.len() == p.k && line.points().iter().all(|q| wx.binary_search(q).is_ok())
        })
        .collect();
    let carried = inside.len() * p.k * (p.k - 1) / 2;
    if carried != p.w * (p.w - 1) / 2 {
        return Some(format!(
            "its opposite set holds {} blocks covering {carried} pairs, expected {}",
            inside.len(),
            p.w * (p.w - 1) / 2
        ));
    }
    None
}
