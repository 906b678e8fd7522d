//! Seeded hill climbing for triple systems over a prescribed pair universe.
//!
//! Each step picks a live point `x` (one with an uncovered target pair),
//! then a pair `y, z` with `{x,y}`, `{x,z}` uncovered and `{y,z}` a target
//! pair not covered by a fixed line. The triple `{x,y,z}` is added and the
//! removable triple that held `{y,z}`, if any, is dropped.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::designs::{verify_gdd, verify_steiner, Gdd, SteinerSystem};
use crate::error::{Error, Result};
use crate::Point;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClimbProblem {
    pub v: usize,
    /// Unordered pairs to be covered exactly once.
    pub target_pairs: Vec<(Point, Point)>,
    /// Pre-placed triples; their target pairs count as covered and are never released.
    pub fixed_lines: Vec<Vec<Point>>,
}

impl ClimbProblem {
    /// Every pair of `0..v`.
    pub fn complete(v: usize) -> Self {
        let target_pairs = (0..v as Point)
            .flat_map(|x| (x + 1..v as Point).map(move |y| (x, y)))
            .collect();
        Self {
            v,
            target_pairs,
            fixed_lines: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClimbConfig {
    pub seed: u64,
    /// Step budget per attempt.
    pub max_iterations: u64,
    /// Attempt `i` uses seed `seed + i`.
    pub restarts: u32,
}

impl ClimbConfig {
    /// 100 steps per target pair and 20 attempts.
    pub fn for_pairs(pairs: usize, seed: u64) -> Self {
        Self {
            seed,
            max_iterations: 100 * pairs.max(1) as u64,
            restarts: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClimbStatus {
    Complete,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClimbOutcome {
    pub status: ClimbStatus,
    /// Added triples, sorted; from the successful attempt, or the last one.
    pub lines: Vec<[Point; 3]>,
    /// Steps taken over all attempts.
    pub iterations_used: u64,
    pub attempts_used: u32,
    /// Seed of the attempt that produced `lines`.
    pub seed: u64,
}

const FIXED: u32 = u32::MAX - 1;
const FREE: u32 = u32::MAX;
const NOT_TARGET: u32 = u32::MAX - 2;
/// Live points tried for an ordinary move before the fallback.
const LIVE_TRIES: usize = 4;

/// Mutable search state for one attempt.
pub(crate) struct Climber {
    v: usize,
    /// Per ordered pair: `NOT_TARGET`, `FREE`, `FIXED` or a triple slot.
    owner: Vec<u32>,
    triples: Vec<Option<[Point; 3]>>,
    spare_slots: Vec<u32>,
    /// Uncovered partners of each point, with positions for O(1) removal.
    open: Vec<Vec<Point>>,
    open_pos: Vec<u32>,
    live: Vec<Point>,
    live_pos: Vec<u32>,
    /// Non-fixed target partners of each point.
    partners: Vec<Vec<Point>>,
    uncovered: usize,
    covered: usize,
}

impl Climber {
    pub(crate) fn new(p: &ClimbProblem) -> Result<Self> {
        let v = p.v;
        let mut owner = vec![NOT_TARGET; v * v];
        for &(x, y) in &p.target_pairs {
            if x == y || x as usize >= v || y as usize >= v {
                return Err(Error::PreconditionFailed(format!(
                    "bad target pair {{{x}, {y}}}"
                )));
            }
            owner[x as usize * v + y as usize] = FREE;
            owner[y as usize * v + x as usize] = FREE;
        }
        for line in &p.fixed_lines {
            if line.iter().any(|&x| x as usize >= v) {
                return Err(Error::PreconditionFailed(format!(
                    "fixed line {line:?} out of range"
                )));
            }
            for (i, &x) in line.iter().enumerate() {
                for &y in &line[i + 1..] {
                    let idx = x as usize * v + y as usize;
                    match owner[idx] {
                        FREE => {
                            owner[idx] = FIXED;
                            owner[y as usize * v + x as usize] = FIXED;
                        }
                        FIXED => {
                            return Err(Error::PreconditionFailed(format!(
                                "fixed lines cover {{{x}, {y}}} twice"
                            )))
                        }
                        _ => {}
                    }
                }
            }
        }
        let mut c = Self {
            v,
            owner,
            triples: Vec::new(),
            spare_slots: Vec::new(),
            open: vec![Vec::new(); v],
            open_pos: vec![u32::MAX; v * v],
            live: Vec::new(),
            live_pos: vec![u32::MAX; v],
            partners: vec![Vec::new(); v],
            uncovered: 0,
            covered: 0,
        };
        for x in 0..v {
            for y in x + 1..v {
                match c.owner[x * v + y] {
                    FREE => {
                        c.partners[x].push(y as Point);
                        c.partners[y].push(x as Point);
                        c.release(x as Point, y as Point)
                    }
                    FIXED => c.covered += 1,
                    _ => {}
                }
            }
        }
        Ok(c)
    }

    fn open_insert(&mut self, x: Point, y: Point) {
        let list = &mut self.open[x as usize];
        self.open_pos[x as usize * self.v + y as usize] = list.len() as u32;
        list.push(y);
        if list.len() == 1 {
            self.live_pos[x as usize] = self.live.len() as u32;
            self.live.push(x);
        }
    }

    fn open_remove(&mut self, x: Point, y: Point) {
        let v = self.v;
        let pos = self.open_pos[x as usize * v + y as usize] as usize;
        let list = &mut self.open[x as usize];
        list.swap_remove(pos);
        if let Some(&moved) = list.get(pos) {
            self.open_pos[x as usize * v + moved as usize] = pos as u32;
        }
        if list.is_empty() {
            let lp = self.live_pos[x as usize] as usize;
            self.live.swap_remove(lp);
            if let Some(&moved) = self.live.get(lp) {
                self.live_pos[moved as usize] = lp as u32;
            }
        }
    }

    /// Marks a target pair uncovered.
    fn release(&mut self, x: Point, y: Point) {
        let v = self.v;
        self.owner[x as usize * v + y as usize] = FREE;
        self.owner[y as usize * v + x as usize] = FREE;
        self.open_insert(x, y);
        self.open_insert(y, x);
        self.uncovered += 1;
    }

    fn claim(&mut self, x: Point, y: Point, slot: u32) {
        let v = self.v;
        debug_assert_eq!(self.owner[x as usize * v + y as usize], FREE);
        self.owner[x as usize * v + y as usize] = slot;
        self.owner[y as usize * v + x as usize] = slot;
        self.open_remove(x, y);
        self.open_remove(y, x);
        self.uncovered -= 1;
    }

    fn owner_of(&self, x: Point, y: Point) -> u32 {
        self.owner[x as usize * self.v + y as usize]
    }

    fn admissible(&self, y: Point, z: Point) -> bool {
        y != z && !matches!(self.owner_of(y, z), NOT_TARGET | FIXED)
    }

    pub(crate) fn is_complete(&self) -> bool {
        self.uncovered == 0
    }

    #[cfg(test)]
    pub(crate) fn covered_pairs(&self) -> usize {
        self.covered + self.triples.iter().flatten().count() * 3
    }

    /// One move; returns `false` when nothing could be placed.
    ///
    /// The usual move adds `{x,y,z}` with `{x,y}`, `{x,z}` uncovered and drops
    /// the triple holding `{y,z}`. When `x` has no such pair, the fallback takes
    /// one uncovered `{x,y}` and any `z` joined to both by target pairs,
    /// dropping the triples on `{x,z}` and `{y,z}`.
    pub(crate) fn step(&mut self, rng: &mut ChaCha8Rng) -> bool {
        if self.live.is_empty() {
            return false;
        }
        let mut x = self.live[rng.random_range(0..self.live.len())];
        let mut pick = self.pick_open_pair(x, rng);
        for _ in 1..LIVE_TRIES {
            if pick.is_some() {
                break;
            }
            x = self.live[rng.random_range(0..self.live.len())];
            pick = self.pick_open_pair(x, rng);
        }
        let Some((y, z)) = pick.or_else(|| self.pick_fallback(x, rng)) else {
            return false;
        };
        self.drop_owner(x, z);
        self.drop_owner(y, z);
        self.drop_owner(x, y);
        let mut t = [x, y, z];
        t.sort_unstable();
        let slot = match self.spare_slots.pop() {
            Some(s) => {
                self.triples[s as usize] = Some(t);
                s
            }
            None => {
                self.triples.push(Some(t));
                (self.triples.len() - 1) as u32
            }
        };
        self.claim(x, y, slot);
        self.claim(x, z, slot);
        self.claim(y, z, slot);
        true
    }

    /// Two uncovered partners of `x` forming an admissible pair.
    fn pick_open_pair(&self, x: Point, rng: &mut ChaCha8Rng) -> Option<(Point, Point)> {
        let partners = &self.open[x as usize];
        let n = partners.len();
        if n < 2 {
            return None;
        }
        // rejection sampling keeps the choice uniform over admissible pairs
        for _ in 0..32 {
            let i = rng.random_range(0..n);
            let j = rng.random_range(0..n);
            if i != j && self.admissible(partners[i], partners[j]) {
                return Some((partners[i], partners[j]));
            }
        }
        let pairs: Vec<(Point, Point)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (partners[i], partners[j]))
            .filter(|&(y, z)| self.admissible(y, z))
            .collect();
        (!pairs.is_empty()).then(|| pairs[rng.random_range(0..pairs.len())])
    }

    /// An uncovered partner `y` of `x` and a `z` with `{x,z}`, `{y,z}` admissible,
    /// preferring `{y,z}` uncovered.
    fn pick_fallback(&self, x: Point, rng: &mut ChaCha8Rng) -> Option<(Point, Point)> {
        let open = &self.open[x as usize];
        let y = open[rng.random_range(0..open.len())];
        let mirrored: Vec<Point> = self.open[y as usize]
            .iter()
            .copied()
            .filter(|&z| z != x && self.admissible(x, z))
            .collect();
        if !mirrored.is_empty() {
            return Some((y, mirrored[rng.random_range(0..mirrored.len())]));
        }
        let cands: Vec<Point> = self.partners[x as usize]
            .iter()
            .copied()
            .filter(|&z| z != y && self.admissible(y, z))
            .collect();
        (!cands.is_empty()).then(|| (y, cands[rng.random_range(0..cands.len())]))
    }

    /// Removes the triple covering `{a,b}`, if any, releasing its pairs.
    fn drop_owner(&mut self, a: Point, b: Point) {
        let slot = self.owner_of(a, b);
        if slot == FREE {
            return;
        }
        let [p, q, r] = self.triples[slot as usize].take().expect("live triple");
        self.spare_slots.push(slot);
        self.release(p, q);
        self.release(p, r);
        self.release(q, r);
    }

    fn into_lines(self) -> Vec<[Point; 3]> {
        let mut lines: Vec<[Point; 3]> = self.triples.into_iter().flatten().collect();
        lines.sort_unstable();
        lines
    }
}

/// Runs attempts with seeds `seed, seed + 1, ..` until one completes.
pub fn climb(p: &ClimbProblem, cfg: &ClimbConfig) -> Result<ClimbOutcome> {
    if cfg.max_iterations == 0 || cfg.restarts == 0 {
        return Err(Error::PreconditionFailed(
            "max_iterations and restarts must be at least 1".into(),
        ));
    }
    let mut total = 0;
    let mut last = None;
    for attempt in 0..cfg.restarts {
        let seed = cfg.seed.wrapping_add(attempt as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c = Climber::new(p)?;
        let mut it = 0;
        while !c.is_complete() && it < cfg.max_iterations {
            c.step(&mut rng);
            it += 1;
        }
        total += it;
        let status = if c.is_complete() {
            ClimbStatus::Complete
        } else {
            ClimbStatus::Exhausted
        };
        let outcome = ClimbOutcome {
            status,
            lines: c.into_lines(),
            iterations_used: total,
            attempts_used: attempt + 1,
            seed,
        };
        if status == ClimbStatus::Complete {
            return Ok(outcome);
        }
        last = Some(outcome);
    }
    Ok(last.expect("at least one attempt"))
}

/// A 3-GDD of type `g^u` on groups `{i g .. i g + g - 1}`, found by climbing.
pub fn climb_3gdd(g: usize, u: usize, cfg: Option<ClimbConfig>) -> Result<Gdd> {
    if g == 0 || u < 3 || g * (u - 1) % 2 != 0 || g * g * u * (u - 1) % 6 != 0 {
        return Err(Error::Inadmissible(format!("no 3-GDD of type {g}^{u}")));
    }
    let v = g * u;
    let target_pairs: Vec<(Point, Point)> = (0..v)
        .flat_map(|x| (x + 1..v).map(move |y| (x, y)))
        .filter(|(x, y)| x / g != y / g)
        .map(|(x, y)| (x as Point, y as Point))
        .collect();
    let cfg = cfg.unwrap_or_else(|| ClimbConfig::for_pairs(target_pairs.len(), 0));
    let problem = ClimbProblem {
        v,
        target_pairs,
        fixed_lines: Vec::new(),
    };
    let out = climb(&problem, &cfg)?;
    if out.status != ClimbStatus::Complete {
        return Err(Error::ClimbFailed {
            attempts: out.attempts_used as usize,
        });
    }
    let groups = (0..u)
        .map(|i| ((i * g) as Point..((i + 1) * g) as Point).collect())
        .collect();
    let gdd = Gdd::new(3, groups, out.lines.iter().map(|t| t.to_vec()).collect());
    verify_gdd(&gdd).map_err(|e| Error::ResultFailedVerification(e.to_string()))?;
    Ok(gdd)
}

/// An STS(w) found by climbing over all pairs.
pub fn climb_sts(w: usize, cfg: Option<ClimbConfig>) -> Result<SteinerSystem> {
    if w < 3 || !matches!(w % 6, 1 | 3) {
        return Err(Error::Inadmissible(format!(
            "an STS({w}) needs w >= 3 and w = 1 or 3 (mod 6)"
        )));
    }
    let problem = ClimbProblem::complete(w);
    let cfg = cfg.unwrap_or_else(|| ClimbConfig::for_pairs(problem.target_pairs.len(), 0));
    let out = climb(&problem, &cfg)?;
    if out.status != ClimbStatus::Complete {
        return Err(Error::ClimbFailed {
            attempts: out.attempts_used as usize,
        });
    }
    let s = SteinerSystem::new(3, w, out.lines.iter().map(|t| t.to_vec()).collect());
    verify_steiner(&s).map_err(|e| Error::ResultFailedVerification(e.to_string()))?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{cycle, petersen};

    #[test]
    fn sts7_from_scratch() {
        let p = ClimbProblem::complete(7);
        let out = climb(&p, &ClimbConfig::for_pairs(21, 3)).unwrap();
        assert_eq!(out.status, ClimbStatus::Complete);
        assert_eq!(out.lines.len(), 7);
    }

    #[test]
    fn triangle_free_targets_exhaust() {
        let g = petersen();
        let p = ClimbProblem {
            v: 10,
            target_pairs: g.edges().collect(),
            fixed_lines: Vec::new(),
        };
        let cfg = ClimbConfig {
            seed: 1,
            max_iterations: 500,
            restarts: 3,
        };
        let out = climb(&p, &cfg).unwrap();
        assert_eq!(out.status, ClimbStatus::Exhausted);
        assert!(out.lines.is_empty());
        assert_eq!(out.attempts_used, 3);
        assert_eq!(out.iterations_used, 1500);
    }

    #[test]
    fn fixed_lines_are_kept() {
        // fix one Fano line; the climb must complete around it
        let mut p = ClimbProblem::complete(7);
        p.fixed_lines.push(vec![0, 1, 2]);
        let out = climb(&p, &ClimbConfig::for_pairs(21, 0)).unwrap();
        assert_eq!(out.status, ClimbStatus::Complete);
        assert_eq!(out.lines.len(), 6);
        let mut all: Vec<Vec<Point>> = out.lines.iter().map(|t| t.to_vec()).collect();
        all.push(vec![0, 1, 2]);
        verify_steiner(&SteinerSystem::new(3, 7, all)).unwrap();

        p.fixed_lines.push(vec![0, 1, 3]);
        assert!(matches!(
            climb(&p, &ClimbConfig::for_pairs(21, 0)),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn covered_count_never_decreases() {
        let p = ClimbProblem::complete(15);
        let mut c = Climber::new(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut prev = c.covered_pairs();
        for _ in 0..5000 {
            if c.is_complete() {
                break;
            }
            c.step(&mut rng);
            let now = c.covered_pairs();
            assert!(now >= prev);
            assert_eq!(now + c.uncovered, 105);
            prev = now;
        }
    }

    #[test]
    fn restricted_pairs_stay_exact() {
        // cross-group pairs of type 3^5: the fallback move is exercised
        let v = 15;
        let target_pairs: Vec<(Point, Point)> = (0..v as Point)
            .flat_map(|x| (x + 1..v as Point).map(move |y| (x, y)))
            .filter(|&(x, y)| x / 3 != y / 3)
            .collect();
        let total = target_pairs.len();
        let p = ClimbProblem {
            v,
            target_pairs,
            fixed_lines: Vec::new(),
        };
        let mut c = Climber::new(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut prev = c.covered_pairs();
        for _ in 0..20_000 {
            if c.is_complete() {
                break;
            }
            c.step(&mut rng);
            let mut seen = std::collections::BTreeSet::new();
            for t in c.triples.iter().flatten() {
                for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                    assert_ne!(a / 3, b / 3, "non-target pair {{{a}, {b}}} covered");
                    assert!(seen.insert((a, b)), "pair {{{a}, {b}}} covered twice");
                }
            }
            let now = c.covered_pairs();
            assert_eq!(now, seen.len());
            assert_eq!(now + c.uncovered, total);
            assert!(now + 3 >= prev);
            prev = now;
        }
        assert!(c.is_complete());
    }

    #[test]
    fn gdds_and_sts() {
        assert_eq!(climb_3gdd(2, 3, None).unwrap().blocks.len(), 4);
        assert_eq!(climb_3gdd(10, 3, None).unwrap().blocks.len(), 100);
        let d = climb_3gdd(3, 3, None).unwrap();
        verify_gdd(&d).unwrap();
        assert_eq!(climb_3gdd(3, 7, None).unwrap().blocks.len(), 63);
        assert!(matches!(
            climb_3gdd(3, 4, None),
            Err(Error::Inadmissible(_))
        ));
        assert!(matches!(
            climb_3gdd(1, 4, None),
            Err(Error::Inadmissible(_))
        ));
        assert_eq!(climb_sts(15, None).unwrap().blocks.len(), 35);
        assert_eq!(climb_sts(9, None).unwrap().blocks.len(), 12);
        assert_eq!(climb_sts(19, None).unwrap().blocks.len(), 57);
        assert!(matches!(climb_sts(11, None), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn deterministic() {
        let a = climb_sts(21, Some(ClimbConfig::for_pairs(210, 42))).unwrap();
        let b = climb_sts(21, Some(ClimbConfig::for_pairs(210, 42))).unwrap();
        assert_eq!(a, b);
        let p = ClimbProblem {
            v: 6,
            target_pairs: cycle(6).edges().collect(),
            fixed_lines: vec![],
        };
        assert!(climb(
            &p,
            &ClimbConfig {
                seed: 0,
                max_iterations: 0,
                restarts: 1
            }
        )
        .is_err());
    }
}
