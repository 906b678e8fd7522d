use super::{finish, require_valid, Built, Provenance};
use crate::designs::{steiner_system, uniform_gdd};
use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::params::PentParams;
use crate::Point;

/// Point `a` becomes `{3a, 3a+1, 3a+2}`; each point gains the line on its
/// three copies and each line `{a,b,c}` becomes the nine blocks `{a_h, b_i, c_j}`
/// with `(h,i,j)` constant or a permutation of `(0,1,2)`.
pub fn triple(g: &Geometry) -> Result<Built> {
    let p = *g.params();
    if p.k != 3 {
        return Err(Error::NotBlockSize3 { k: p.k });
    }
    let rep = require_valid(g)?;
    if !rep.deficiency.connected {
        return Err(Error::PreconditionFailed(
            "deficiency graph is not connected".into(),
        ));
    }
    const INDEX: [[Point; 3]; 9] = [
        [0, 0, 0],
        [1, 1, 1],
        [2, 2, 2],
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut lines: Vec<Vec<Point>> = (0..p.v as Point)
        .map(|a| vec![3 * a, 3 * a + 1, 3 * a + 2])
        .collect();
    for line in g.lines() {
        let [a, b, c] = <[Point; 3]>::try_from(line.points()).expect("uniform lines");
        lines.extend(
            INDEX
                .iter()
                .map(|[h, i, j]| vec![3 * a + h, 3 * b + i, 3 * c + j]),
        );
    }
    let params = PentParams::new(3, 3 * p.r + 1, 3 * p.w)?;
    finish(
        params,
        lines,
        Provenance {
            op: "tripling".into(),
            inputs: serde_json::json!({ "k": p.k, "r": p.r, "w": p.w }),
            seed: None,
        },
        0,
    )
}

/// Point `a` becomes `{h a, .., h a + h - 1}`; each line is replaced by a
/// TD(k, h) on the copies of its points and each point's copies carry an S(2,k,h).
pub fn product(g: &Geometry, h: usize) -> Result<Built> {
    let p = *g.params();
    if h < 3 || (h - 1) % (p.k - 1) != 0 {
        return Err(Error::ParameterDomain(format!(
            "product needs h >= 3 and (k-1) | (h-1); got h = {h}, k = {}",
            p.k
        )));
    }
    let gdd = uniform_gdd(p.k, h)
        .map_err(|e| Error::NoIngredient(format!("{}-GDD of type {h}^{}: {e}", p.k, p.k)))?;
    let s = steiner_system(p.k, h)
        .map_err(|e| Error::NoIngredient(format!("S(2,{},{h}): {e}", p.k)))?;
    let rep = require_valid(g)?;
    if !rep.deficiency.connected {
        return Err(Error::PreconditionFailed(
            "deficiency graph is not connected".into(),
        ));
    }

    let h32 = h as Point;
    let mut lines: Vec<Vec<Point>> =
        Vec::with_capacity(g.num_lines() * h * h + p.v * s.blocks.len());
    for a in 0..p.v as Point {
        lines.extend(
            s.blocks
                .iter()
                .map(|b| b.iter().map(|&i| h32 * a + i).collect()),
        );
    }
    for line in g.lines() {
        let pts = line.points();
        // GDD group t sits on the copies of the line's t-th point
        lines.extend(gdd.blocks.iter().map(|b| {
            b.iter()
                .map(|&x| h32 * pts[(x / h32) as usize] + x % h32)
                .collect()
        }));
    }
    let params = PentParams::new(p.k, h * p.r + (h - 1) / (p.k - 1), h * p.w)?;
    finish(
        params,
        lines,
        Provenance {
            op: "product".into(),
            inputs: serde_json::json!({ "k": p.k, "r": p.r, "w": p.w, "h": h }),
            seed: None,
        },
        0,
    )
}

#[cfg(test)]
mod tests {
    use super::super::tests::pent333;
    use super::*;
    use crate::graphs::{inflate, Girth};
    use crate::pent::{deficiency_graph, GeometryType};

    #[test]
    fn tripling_petersen() {
        let g = pent333();
        let b = triple(&g).unwrap();
        let p = b.geometry.params();
        assert_eq!((p.r, p.w, p.v, p.b), (10, 9, 30, 100));
        assert_eq!(b.report.geometry_type, GeometryType::C);
        assert_eq!(b.report.deficiency.girth, Girth::Cycle(4));
        assert_eq!(
            deficiency_graph(&b.geometry).unwrap(),
            inflate(&deficiency_graph(&g).unwrap(), 3)
        );
        let b2 = triple(&b.geometry).unwrap();
        let p = b2.geometry.params();
        assert_eq!((p.r, p.w, p.v, p.b), (31, 27, 90, 930));
    }

    #[test]
    fn product_with_fano() {
        let g = pent333();
        let b = product(&g, 7).unwrap();
        let p = b.geometry.params();
        assert_eq!((p.r, p.w, p.v, p.b), (24, 21, 70, 560));
        assert!(b.report.deficiency.connected);
        assert_eq!(
            deficiency_graph(&b.geometry).unwrap(),
            inflate(&deficiency_graph(&g).unwrap(), 7)
        );
    }

    #[test]
    fn product_with_single_block_matches_tripling_shape() {
        let g = pent333();
        let b = product(&g, 3).unwrap();
        let t = triple(&g).unwrap();
        assert_eq!(b.geometry.params(), t.geometry.params());
        assert_eq!(
            deficiency_graph(&b.geometry).unwrap(),
            deficiency_graph(&t.geometry).unwrap()
        );
    }

    #[test]
    fn product_errors() {
        let g = pent333();
        assert!(matches!(product(&g, 4), Err(Error::ParameterDomain(_))));
        assert!(matches!(product(&g, 11), Err(Error::NoIngredient(_))));
        let d = crate::construct::make_degenerate(4, 13).unwrap();
        assert!(matches!(
            triple(&d.geometry),
            Err(Error::NotBlockSize3 { k: 4 })
        ));
    }
}
