//! Recursive and graph-based constructions, plus the asymptotic planners.
//!
//! Every construction re-verifies its output before returning it.

mod graph;
mod plan;
mod product;

use serde::{Deserialize, Serialize};

pub use graph::{construction36, from_girth5_graph};
pub use plan::{pent3_threshold, plan_pent3, plan_pent5, Pent3Plan, Pent5Plan};
pub use product::{product, triple};

use crate::designs::{steiner_system, verify_gdd, Gdd};
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::params::PentParams;
use crate::pent::{verify, VerificationReport};
use crate::Point;

/// Where a constructed geometry came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub op: String,
    pub inputs: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A verified construction result.
#[derive(Debug, Clone)]
pub struct Built {
    pub geometry: Geometry,
    pub report: VerificationReport,
    pub provenance: Provenance,
    /// Lines found by hill climbing.
    pub climbed: usize,
}

impl Built {
    /// Geometry JSON with the provenance attached.
    pub fn to_json(&self) -> crate::geometry::GeometryJson {
        let mut j = self.geometry.to_json();
        j.provenance =
            Some(serde_json::to_value(&self.provenance).expect("serializable provenance"));
        j
    }
}

/// Verifies `lines` as a PENT with `params`; any failure is an error.
pub(crate) fn finish(
    params: PentParams,
    lines: Vec<Vec<Point>>,
    provenance: Provenance,
    climbed: usize,
) -> Result<Built> {
    let geometry = Geometry::from_point_lists(params, lines)?;
    let report = verify(&geometry);
    if !report.is_valid() {
        return Err(Error::ResultFailedVerification(format!(
            "{params}: {}",
            report.errors.join("; ")
        )));
    }
    Ok(Built {
        geometry,
        report,
        provenance,
        climbed,
    })
}

/// Requires `g` to verify; returns its report.
pub(crate) fn require_valid(g: &Geometry) -> Result<VerificationReport> {
    let report = verify(g);
    if report.is_valid() {
        Ok(report)
    } else {
        Err(Error::IngredientInvalid(format!(
            "{}: {}",
            g.params(),
            report.errors.join("; ")
        )))
    }
}

/// Two S(2,k,w) on disjoint point sets: the type F PENT(k, (w-1)/(k-1), w).
pub fn make_degenerate(k: usize, w: usize) -> Result<Built> {
    let s = steiner_system(k, w).map_err(|e| Error::NoIngredient(format!("S(2,{k},{w}): {e}")))?;
    let r = (w - 1) / (k - 1);
    let params = PentParams::new(k, r, w)?;
    let lines = s
        .blocks
        .iter()
        .flat_map(|b| [b.clone(), b.iter().map(|x| x + w as Point).collect()])
        .collect();
    finish(
        params,
        lines,
        Provenance {
            op: "degenerate".into(),
            inputs: serde_json::json!({ "k": k, "w": w }),
            seed: None,
        },
        0,
    )
}

/// A GDD whose groups are filled with copies of PENT(k, r_i, w) of matching size.
#[derive(Debug, Clone)]
pub struct GddFillPlan {
    pub gdd: Gdd,
    /// One geometry per distinct group size; all share `k` and `w`.
    pub ingredients: Vec<Geometry>,
}

/// Overlays each group of `v_i` points with a PENT(k, r_i, w) on `v_i` points.
///
/// The GDD blocks make every cross-group pair collinear, so each point keeps
/// its ingredient's opposite design and the result is a
/// PENT(k, R + (N-1)(w+1)/(k-1), w) whose deficiency graph is the disjoint
/// union of the ingredients' deficiency graphs.
pub fn gdd_fill(plan: &GddFillPlan) -> Result<Built> {
    let first = plan
        .ingredients
        .first()
        .ok_or_else(|| Error::PlanInvalid("no ingredient geometries".into()))?;
    let (k, w) = (first.params().k, first.params().w);
    if plan
        .ingredients
        .iter()
        .any(|g| g.params().k != k || g.params().w != w)
    {
        return Err(Error::PlanInvalid("ingredients disagree on k or w".into()));
    }
    if plan.gdd.k != k && !plan.gdd.blocks.is_empty() {
        return Err(Error::PlanInvalid(format!(
            "GDD block size {} differs from k = {k}",
            plan.gdd.k
        )));
    }
    verify_gdd(&plan.gdd).map_err(|e| Error::PlanInvalid(format!("GDD: {e}")))?;
    for g in &plan.ingredients {
        require_valid(g)?;
    }

    let mut lines: Vec<Vec<Point>> = plan.gdd.blocks.clone();
    let mut summary = Vec::new();
    for group in &plan.gdd.groups {
        let ing = plan
            .ingredients
            .iter()
            .find(|g| g.v() == group.len())
            .ok_or_else(|| {
                Error::PlanInvalid(format!("no ingredient on {} points", group.len()))
            })?;
        summary.push(ing.params().r);
        lines.extend(
            ing.lines()
                .iter()
                .map(|l| l.points().iter().map(|&x| group[x as usize]).collect()),
        );
    }

    let total = plan.gdd.v();
    if total < w + 1 || (total - w - 1) % (k - 1) != 0 {
        return Err(Error::PlanInvalid(format!(
            "{total} points do not give an integral replication number"
        )));
    }
    let params = PentParams::new(k, (total - w - 1) / (k - 1), w)
        .map_err(|e| Error::PlanInvalid(e.to_string()))?;
    finish(
        params,
        lines,
        Provenance {
            op: "gdd-fill".into(),
            inputs: serde_json::json!({
                "gdd_type": plan.gdd.group_type(),
                "ingredient_r": summary,
                "k": k,
                "w": w,
            }),
            seed: None,
        },
        0,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::uniform_gdd;
    use crate::graphs::{petersen, Girth};
    use crate::pent::GeometryType;

    pub(crate) fn pent333() -> Geometry {
        let d = petersen();
        Geometry::from_point_lists(
            PentParams::new(3, 3, 3).unwrap(),
            (0..10).map(|x| d.neighbors(x).to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn degenerate_geometries() {
        let b = make_degenerate(3, 7).unwrap();
        assert_eq!(b.report.geometry_type, GeometryType::F);
        assert_eq!(b.geometry.params().r, 3);
        let b = make_degenerate(3, 3).unwrap();
        assert_eq!(
            (
                b.geometry.v(),
                b.geometry.num_lines(),
                b.geometry.params().r
            ),
            (6, 2, 1)
        );
        let b = make_degenerate(3, 9).unwrap();
        assert_eq!(
            (
                b.geometry.params().r,
                b.geometry.v(),
                b.geometry.num_lines()
            ),
            (4, 18, 24)
        );
        assert!(matches!(
            make_degenerate(4, 25),
            Err(Error::NoIngredient(_))
        ));
    }

    #[test]
    fn fill_td_with_petersen_geometries() {
        let plan = GddFillPlan {
            gdd: uniform_gdd(3, 10).unwrap(),
            ingredients: vec![pent333()],
        };
        let b = gdd_fill(&plan).unwrap();
        let p = b.geometry.params();
        assert_eq!((p.r, p.v, p.b), (13, 30, 130));
        assert_eq!(b.report.geometry_type, GeometryType::B);
        assert_eq!(b.report.deficiency.girth, Girth::Cycle(5));
        assert_eq!(b.report.deficiency.component_sizes, vec![10, 10, 10]);
    }

    #[test]
    fn fill_single_group_is_identity() {
        let g = pent333();
        let gdd = Gdd::new(3, vec![(0..10).collect()], vec![]);
        let b = gdd_fill(&GddFillPlan {
            gdd,
            ingredients: vec![g.clone()],
        })
        .unwrap();
        assert_eq!(b.geometry, g);
    }

    #[test]
    fn fill_rejects_mismatched_groups() {
        let plan = GddFillPlan {
            gdd: uniform_gdd(3, 9).unwrap(),
            ingredients: vec![pent333()],
        };
        assert!(matches!(gdd_fill(&plan), Err(Error::PlanInvalid(_))));
    }
}
