//! Reading geometries, graphs and fill plans; `-` means stdin.

use std::io::Read;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use pentgeom::construct::GddFillPlan;
use pentgeom::designs::{uniform_gdd, DesignJson, Gdd};
use pentgeom::graphs::{generalized_petersen, hoffman_singleton, orbit_graph, petersen};
use pentgeom::{develop, parse_pent_file, Geometry, GeometryJson, Graph};

use crate::Failure;

pub fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))
    }
}

pub fn write_output(path: Option<&str>, text: &str) -> Result<(), Failure> {
    match path {
        None | Some("-") => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text).map_err(|e| Failure {
            code: 1,
            message: format!("{p}: {e}"),
        }),
    }
}

/// Geometry JSON when the text starts with `{`, otherwise a `.pent` listing.
pub fn load_geometry(text: &str) -> Result<Geometry, Failure> {
    if text.trim_start().starts_with('{') {
        let json: GeometryJson = serde_json::from_str(text)
            .map_err(|e| Failure::usage(format!("geometry JSON: {e}")))?;
        Ok(Geometry::from_json(&json)?)
    } else {
        Ok(develop(&parse_pent_file(text)?)?)
    }
}

/// `petersen`, `hs`, `gp:N`, or an edge-list file (`-` for stdin).
pub fn load_graph(spec: &str) -> Result<Graph, Failure> {
    match spec {
        "petersen" => Ok(petersen()),
        "hs" => Ok(hoffman_singleton()),
        _ => {
            if let Some(n) = spec.strip_prefix("gp:") {
                let n = n
                    .parse()
                    .map_err(|_| Failure::usage(format!("`{spec}`: expected gp:N")))?;
                return Ok(generalized_petersen(n)?);
            }
            Ok(Graph::parse_text(&read_input(spec)?)?)
        }
    }
}

/// `step modulus` on the first data line, then one `a b` base edge per line.
pub fn load_orbit_graph(text: &str) -> Result<Graph, Failure> {
    let mut rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(str::parse::<u32>)
                .collect::<Result<Vec<u32>, _>>()
                .ok()
                .filter(|v| v.len() == 2)
                .map(|v| (v[0], v[1]))
                .ok_or_else(|| {
                    Failure::usage(format!("orbit file: expected two integers in `{l}`"))
                })
        });
    let (step, modulus) = rows
        .next()
        .ok_or_else(|| Failure::usage("orbit file: missing `step modulus` line"))??;
    let base = rows.collect::<Result<Vec<_>, _>>()?;
    Ok(orbit_graph(&base, step as usize, modulus as usize)?)
}

/// JSON fill plan: a GDD given inline (`gdd`) or as a transversal design
/// (`td: [k, g]`), and ingredient geometry files relative to the plan.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FillSpec {
    #[serde(default)]
    gdd: Option<DesignJson>,
    #[serde(default)]
    td: Option<(usize, usize)>,
    ingredients: Vec<PathBuf>,
}

pub fn load_fill_plan(path: &str) -> Result<GddFillPlan, Failure> {
    let spec: FillSpec = serde_json::from_str(&read_input(path)?)
        .map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    let gdd = match (spec.gdd, spec.td) {
        (Some(d), None) => {
            let groups = d
                .groups
                .ok_or_else(|| Failure::usage(format!("{path}: the GDD needs `groups`")))?;
            Gdd::new(d.k, groups, d.lines)
        }
        (None, Some((k, g))) => uniform_gdd(k, g)?,
        _ => {
            return Err(Failure::usage(format!(
                "{path}: give exactly one of `gdd` and `td`"
            )))
        }
    };
    let base = if path == "-" {
        PathBuf::from(".")
    } else {
        Path::new(path)
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_default()
    };
    let ingredients = spec
        .ingredients
        .iter()
        .map(|p| {
            let full = if p.is_absolute() {
                p.clone()
            } else {
                base.join(p)
            };
            load_geometry(&read_input(&full.to_string_lossy())?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GddFillPlan { gdd, ingredients })
}
