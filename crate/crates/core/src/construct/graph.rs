use super::{finish, Built, Provenance};
use crate::coverage::PairCoverage;
use crate::designs::{steiner_system, uniform_gdd, Gdd};
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::graphs::{girth, inflate, Graph};
use crate::hillclimb::{climb, climb_3gdd, ClimbConfig, ClimbProblem, ClimbStatus};
use crate::params::PentParams;
use crate::Point;

/// Connected, `deg`-regular, girth at least five; returns `deg`.
fn check_seed(c: &Graph) -> Result<usize> {
    let deg = c
        .regular_degree()
        .ok_or_else(|| Error::BadSeedGraph("graph is not regular".into()))?;
    if !c.is_connected() {
        return Err(Error::BadSeedGraph("graph is not connected".into()));
    }
    let g = girth(c);
    if !g.at_least(5) {
        return Err(Error::BadSeedGraph(format!("girth {g} is below 5")));
    }
    Ok(deg)
}

/// Adds triples over the uncovered pairs that are not deficiency edges.
fn complete_by_climbing(
    params: PentParams,
    d: &Graph,
    lines: &mut Vec<Vec<Point>>,
    cfg: Option<ClimbConfig>,
) -> Result<(usize, u64)> {
    let missing = params.b - lines.len();
    if missing == 0 {
        return Ok((0, cfg.map_or(0, |c| c.seed)));
    }
    let partial = Geometry::from_point_lists(params, lines.iter().cloned())?;
    let cov = PairCoverage::build(&partial)?;
    let target_pairs: Vec<(Point, Point)> = cov
        .uncovered_pairs()
        .filter(|&(x, y)| !d.has_edge(x, y))
        .collect();
    if target_pairs.len() != 3 * missing {
        return Err(Error::ResultFailedVerification(format!(
            "{} residual pairs cannot form {missing} triples",
            target_pairs.len()
        )));
    }
    let cfg = cfg.unwrap_or_else(|| ClimbConfig::for_pairs(target_pairs.len(), 0));
    let problem = ClimbProblem {
        v: params.v,
        target_pairs,
        fixed_lines: Vec::new(),
    };
    let out = climb(&problem, &cfg)?;
    if out.status != ClimbStatus::Complete {
        return Err(Error::ClimbFailed {
            attempts: out.attempts_used as usize,
        });
    }
    lines.extend(out.lines.iter().map(|t| t.to_vec()));
    Ok((out.lines.len(), out.seed))
}

/// PENT(3, (n-4)/2) from a connected cubic graph of girth ≥ 5 on `n` vertices:
/// the neighbourhoods are the opposite lines, the rest are found by climbing.
pub fn from_girth5_graph(d: &Graph, cfg: Option<ClimbConfig>) -> Result<Built> {
    let deg = check_seed(d)?;
    if deg != 3 {
        return Err(Error::BadSeedGraph(format!("degree {deg}, expected 3")));
    }
    let n = d.n();
    if n < 10 || n % 2 != 0 {
        return Err(Error::BadSeedGraph(format!(
            "{n} vertices, need an even count >= 10"
        )));
    }
    let params = PentParams::new(3, (n - 4) / 2, 3)
        .map_err(|e| Error::BadSeedGraph(format!("{n} vertices: {e}")))?;
    let mut lines: Vec<Vec<Point>> = (0..n as Point).map(|x| d.neighbors(x).to_vec()).collect();
    let (climbed, seed) = complete_by_climbing(params, d, &mut lines, cfg)?;
    finish(
        params,
        lines,
        Provenance {
            op: "girth5".into(),
            inputs: serde_json::json!({ "n": n, "edges": d.edge_count() }),
            seed: (climbed > 0).then_some(seed),
        },
        climbed,
    )
}

/// A k-GDD of type `h^u` on groups `{j h .. j h + h - 1}`.
fn gdd_ingredient(k: usize, h: usize, u: usize, cfg: Option<ClimbConfig>) -> Result<Gdd> {
    if u == k {
        if let Ok(g) = uniform_gdd(k, h) {
            return Ok(g);
        }
    }
    if k == 3 {
        return climb_3gdd(
            h,
            u,
            cfg.map(|c| ClimbConfig::for_pairs(h * h * u * (u - 1) / 2, c.seed)),
        )
        .map_err(|e| Error::NoIngredient(format!("3-GDD of type {h}^{u}: {e}")));
    }
    Err(Error::NoIngredient(format!("{k}-GDD of type {h}^{u}")))
}

/// Inflates `c` by `h`; on each vertex `p`, lays a k-GDD of type `h^deg` over
/// the copies of `p`'s neighbours (ascending) and an S(2,k,h) over the copies of `p`.
/// For k = 3 any remaining lines come from climbing over the distance-≥3 pairs.
pub fn construction36(c: &Graph, h: usize, k: usize, cfg: Option<ClimbConfig>) -> Result<Built> {
    let deg = check_seed(c)?;
    let (w, v) = (h * deg, h * c.n());
    if k < 3 || h < k || w < h {
        return Err(Error::ParameterDomain(format!(
            "need w >= h >= k >= 3; got w = {w}, h = {h}, k = {k}"
        )));
    }
    if v < w + 1 || (v - w - 1) % (k - 1) != 0 {
        return Err(Error::ParameterDomain(format!(
            "(v - w - 1)/(k - 1) is not integral for v = {v}, w = {w}, k = {k}"
        )));
    }
    let params = PentParams::new(k, (v - w - 1) / (k - 1), w)?;
    let gdd = gdd_ingredient(k, h, deg, cfg)?;
    let s = steiner_system(k, h).map_err(|e| Error::NoIngredient(format!("S(2,{k},{h}): {e}")))?;

    let h32 = h as Point;
    let mut lines: Vec<Vec<Point>> = Vec::new();
    for p in 0..c.n() as Point {
        let nbrs = c.neighbors(p);
        lines.extend(gdd.blocks.iter().map(|b| {
            b.iter()
                .map(|&x| h32 * nbrs[(x / h32) as usize] + x % h32)
                .collect()
        }));
        lines.extend(
            s.blocks
                .iter()
                .map(|b| b.iter().map(|&x| h32 * p + x).collect()),
        );
    }
    let b_opp = lines.len();
    let expected = v * (w * (w - h) + h * (h - 1)) / (h * k * (k - 1));
    if b_opp != expected {
        return Err(Error::ResultFailedVerification(format!(
            "{b_opp} opposite lines, expected {expected}"
        )));
    }
    if b_opp < params.b && k != 3 {
        return Err(Error::CompletionUnsupported {
            k,
            missing: params.b - b_opp,
        });
    }
    let d = inflate(c, h);
    let (climbed, seed) = complete_by_climbing(params, &d, &mut lines, cfg)?;
    finish(
        params,
        lines,
        Provenance {
            op: "c36".into(),
            inputs: serde_json::json!({ "n": c.n(), "degree": deg, "h": h, "k": k, "b_opp": b_opp }),
            seed: (climbed > 0 || (k == 3 && deg != k)).then_some(seed),
        },
        climbed,
    )
}
