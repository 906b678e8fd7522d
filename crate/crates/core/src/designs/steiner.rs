use super::field::FiniteField;
use super::SteinerSystem;
use crate::error::{Error, Result};
use crate::Point;

/// A Steiner triple system on `w` points: Bose for `w ≡ 3`, Skolem for `w ≡ 1 (mod 6)`.
pub fn sts(w: usize) -> Result<SteinerSystem> {
    if w < 3 || !matches!(w % 6, 1 | 3) {
        return Err(Error::Inadmissible(format!(
            "an STS({w}) needs w >= 3 and w = 1 or 3 (mod 6)"
        )));
    }
    let blocks = if w % 6 == 3 {
        bose(w / 3)
    } else {
        skolem(w / 6)
    };
    Ok(SteinerSystem::new(3, w, blocks))
}

/// Points `(x, i)` with `x < m`, `i < 3` are encoded as `x + m i`.
/// Uses the idempotent commutative quasigroup `x ∘ y = (x + y)(m + 1)/2 mod m`.
fn bose(m: usize) -> Vec<Vec<Point>> {
    let half = m.div_ceil(2);
    let op = |x: usize, y: usize| (x + y) * half % m;
    let pt = |x: usize, i: usize| (x + m * (i % 3)) as Point;
    let mut blocks = Vec::with_capacity(m * (3 * m - 1) / 2);
    for x in 0..m {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in x + 1..m {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Order `6t + 1`: points `(x, i)` with `x < 2t` encoded as `x + 2t i`, and `∞ = 6t`.
/// Uses the half-idempotent quasigroup `x ∘ y = σ(x + y mod 2t)`, `σ(2j) = j`,
/// `σ(2j + 1) = t + j`.
fn skolem(t: usize) -> Vec<Vec<Point>> {
    let n = 2 * t;
    let sigma = |s: usize| if s % 2 == 0 { s / 2 } else { t + s / 2 };
    let op = |x: usize, y: usize| sigma((x + y) % n);
    let pt = |x: usize, i: usize| (x + n * (i % 3)) as Point;
    let inf = (3 * n) as Point;
    let mut blocks = Vec::new();
    for x in 0..t {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            blocks.push(vec![inf, pt(x + t, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..n {
            for y in x + 1..n {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// The S(2, k, k): a single block on `0..k`.
pub fn single_block_system(k: usize) -> SteinerSystem {
    SteinerSystem::new(k, k, vec![(0..k as Point).collect()])
}

/// S(2, q, q²) on points `x q + y`: lines `y = m x + c` and `x = c`.
pub fn affine_plane(q: usize) -> Result<SteinerSystem> {
    let f = FiniteField::new(q)?;
    Ok(SteinerSystem::new(
        q,
        q * q,
        affine_lines(&f).into_iter().map(|(_, l)| l).collect(),
    ))
}

/// Affine lines tagged with their parallel class: slope `m < q`, or `q` for vertical.
fn affine_lines(f: &FiniteField) -> Vec<(usize, Vec<Point>)> {
    let q = f.order();
    let mut lines = Vec::with_capacity(q * q + q);
    for m in 0..q {
        for c in 0..q {
            let line = (0..q)
                .map(|x| (x * q + f.add(f.mul(m, x), c)) as Point)
                .collect();
            lines.push((m, line));
        }
    }
    for c in 0..q {
        lines.push((q, (0..q).map(|y| (c * q + y) as Point).collect()));
    }
    lines
}

/// S(2, q+1, q²+q+1): the affine plane plus one point per parallel class and
/// the line at infinity `{q², .., q²+q}`.
pub fn projective_plane(q: usize) -> Result<SteinerSystem> {
    let f = FiniteField::new(q)?;
    let base = (q * q) as Point;
    let mut blocks: Vec<Vec<Point>> = affine_lines(&f)
        .into_iter()
        .map(|(class, mut l)| {
            l.push(base + class as Point);
            l
        })
        .collect();
    blocks.push((base..base + q as Point + 1).collect());
    Ok(SteinerSystem::new(q + 1, q * q + q + 1, blocks))
}

/// Any S(2, k, w) available without search: single block, STS, affine or projective plane.
pub fn steiner_system(k: usize, w: usize) -> Result<SteinerSystem> {
    if k < 2 || w < k {
        return Err(Error::ParameterDomain(format!(
            "no S(2,{k},{w}) with w < k or k < 2"
        )));
    }
    if w == k {
        return Ok(single_block_system(k));
    }
    if k == 3 {
        return sts(w);
    }
    if w == k * k {
        if let Ok(s) = affine_plane(k) {
            return Ok(s);
        }
    }
    if w == k * k - k + 1 {
        if let Ok(s) = projective_plane(k - 1) {
            return Ok(s);
        }
    }
    Err(Error::NoConstructionAvailable(format!("S(2,{k},{w})")))
}
