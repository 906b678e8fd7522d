//! Steiner systems, group divisible designs and their classical builders.

pub mod field;
mod latin;
mod steiner;

use serde::{Deserialize, Serialize};

pub use field::FiniteField;
pub use latin::{mols, uniform_gdd, LatinSquare};
pub use steiner::{affine_plane, projective_plane, single_block_system, steiner_system, sts};

use crate::Point;

/// An S(2, k, w) on points `0..w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSystem {
    pub k: usize,
    pub w: usize,
    /// Sorted blocks, each sorted.
    pub blocks: Vec<Vec<Point>>,
}

impl SteinerSystem {
    pub fn new(k: usize, w: usize, blocks: Vec<Vec<Point>>) -> Self {
        Self {
            k,
            w,
            blocks: canonical(blocks),
        }
    }

    pub fn to_json(&self) -> DesignJson {
        DesignJson {
            k: self.k,
            v: self.w,
            lines: self.blocks.clone(),
            groups: None,
        }
    }
}

/// A k-GDD; `groups` partition the points `0..v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gdd {
    pub k: usize,
    pub groups: Vec<Vec<Point>>,
    pub blocks: Vec<Vec<Point>>,
}

impl Gdd {
    pub fn new(k: usize, groups: Vec<Vec<Point>>, blocks: Vec<Vec<Point>>) -> Self {
        Self {
            k,
            groups: groups
                .into_iter()
                .map(|mut g| {
                    g.sort_unstable();
                    g
                })
                .collect(),
            blocks: canonical(blocks),
        }
    }

    pub fn v(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Group sizes with multiplicities, largest first, e.g. `[(10, 3)]` for 10^3.
    pub fn group_type(&self) -> Vec<(usize, usize)> {
        let mut sizes: Vec<usize> = self.groups.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((g, m)) if *g == s => *m += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    pub fn to_json(&self) -> DesignJson {
        DesignJson {
            k: self.k,
            v: self.v(),
            lines: self.blocks.clone(),
            groups: Some(self.groups.clone()),
        }
    }
}

fn canonical(mut blocks: Vec<Vec<Point>>) -> Vec<Vec<Point>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable();
    blocks
}

/// JSON export shared by Steiner systems and GDDs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignJson {
    pub k: usize,
    pub v: usize,
    pub lines: Vec<Vec<Point>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<Point>>>,
}

/// First defect found by an exhaustive pair scan.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignDefect {
    #[error("block #{block} has {found} points, expected {expected}")]
    BlockSize {
        block: usize,
        expected: usize,
        found: usize,
    },
    #[error("block #{block} has a point outside 0..{v} or a repeated point")]
    BadBlock { block: usize, v: usize },
    #[error("pair {{{}, {}}} is in no block", pair.0, pair.1)]
    PairMissing { pair: (Point, Point) },
    #[error("pair {{{}, {}}} is in blocks #{first} and #{second}", pair.0, pair.1)]
    PairDoubled {
        pair: (Point, Point),
        first: usize,
        second: usize,
    },
    #[error("pair {{{}, {}}} from one group is covered by block #{block}", pair.0, pair.1)]
    GroupPairCovered { pair: (Point, Point), block: usize },
    #[error("groups do not partition 0..{v}")]
    BadGroups { v: usize },
}

/// Per-pair owner table; returns the first doubled pair.
fn pair_owners(
    v: usize,
    k: usize,
    blocks: &[Vec<Point>],
) -> Result<Vec<Option<usize>>, DesignDefect> {
    let mut owner = vec![None; v * v];
    for (i, b) in blocks.iter().enumerate() {
        if b.len() != k {
            return Err(DesignDefect::BlockSize {
                block: i,
                expected: k,
                found: b.len(),
            });
        }
        let mut sorted = b.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != b.len() || sorted.iter().any(|&x| x as usize >= v) {
            return Err(DesignDefect::BadBlock { block: i, v });
        }
        for (j, &x) in sorted.iter().enumerate() {
            for &y in &sorted[j + 1..] {
                let slot = &mut owner[x as usize * v + y as usize];
                if let Some(first) = *slot {
                    return Err(DesignDefect::PairDoubled {
                        pair: (x, y),
                        first,
                        second: i,
                    });
                }
                *slot = Some(i);
            }
        }
    }
    Ok(owner)
}

/// Every pair of `0..w` in exactly one block.
pub fn verify_steiner(s: &SteinerSystem) -> Result<(), DesignDefect> {
    let v = s.w;
    let owner = pair_owners(v, s.k, &s.blocks)?;
    for x in 0..v {
        for y in x + 1..v {
            if owner[x * v + y].is_none() {
                return Err(DesignDefect::PairMissing {
                    pair: (x as Point, y as Point),
                });
            }
        }
    }
    Ok(())
}

/// Every cross-group pair in exactly one block, no same-group pair in any.
pub fn verify_gdd(d: &Gdd) -> Result<(), DesignDefect> {
    let v = d.v();
    let mut group_of = vec![usize::MAX; v];
    for (gi, g) in d.groups.iter().enumerate() {
        for &x in g {
            if x as usize >= v || group_of[x as usize] != usize::MAX {
                return Err(DesignDefect::BadGroups { v });
            }
            group_of[x as usize] = gi;
        }
    }
    let owner = pair_owners(v, d.k, &d.blocks)?;
    for x in 0..v {
        for y in x + 1..v {
            let same = group_of[x] == group_of[y];
            match (owner[x * v + y], same) {
                (Some(block), true) => {
                    return Err(DesignDefect::GroupPairCovered {
                        pair: (x as Point, y as Point),
                        block,
                    })
                }
                (None, false) => {
                    return Err(DesignDefect::PairMissing {
                        pair: (x as Point, y as Point),
                    })
                }
                _ => {}
            }
        }
    }
    Ok(())
}
