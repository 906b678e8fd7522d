use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Parameters of a two-stage GDD fill for PENT(3, target_r, w):
/// `target_r = v2 u / 2 + v1 t / 2 + r3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pent3Plan {
    pub r0: usize,
    pub r1: usize,
    pub r2: usize,
    pub w: usize,
    pub target_r: usize,
    /// `v_i = 2 r_i + w + 1`.
    pub v0: usize,
    pub v1: usize,
    pub v2: usize,
    pub t: usize,
    pub u: usize,
    /// `r0` when the target is divisible by 3, else `r1`.
    pub r3: usize,
}

impl Pent3Plan {
    /// The replication number the plan produces.
    pub fn achieved_r(&self) -> usize {
        self.v2 * self.u / 2 + self.v1 * self.t / 2 + self.r3
    }
}

struct Pent3Base {
    v0: usize,
    v1: usize,
    v2: usize,
    t_min: usize,
}

impl Pent3Base {
    fn new(r0: usize, r1: usize, r2: usize, w: usize) -> Result<Self> {
        if r0 % 3 != 0 || r1 % 3 == 0 || r2 % 3 == 0 {
            return Err(Error::PreconditionFailed(format!(
                "need r0 = 0 and r1, r2 != 0 (mod 3); got ({r0}, {r1}, {r2})"
            )));
        }
        let (v0, v1, v2) = (2 * r0 + w + 1, 2 * r1 + w + 1, 2 * r2 + w + 1);
        if gcd(v1, v2) != 6 {
            return Err(Error::PreconditionFailed(format!(
                "gcd({v1}, {v2}) = {}, expected 6",
                gcd(v1, v2)
            )));
        }
        // t >= 1 + max(2, v0/v1)
        let t_min = 1 + 2usize.max(v0.div_ceil(v1));
        Ok(Self { v0, v1, v2, t_min })
    }

    /// Smallest integer `u` with `u >= 1 + max(2, v1(t+1)/v2, (v1 t + v0)/v2)`.
    fn u_min(&self, t: usize) -> usize {
        let a = (self.v1 * (t + 1)).div_ceil(self.v2);
        let b = (self.v1 * t + self.v0).div_ceil(self.v2);
        1 + 2usize.max(a).max(b)
    }
}

/// Above this replication number every admissible target has a plan.
pub fn pent3_threshold(r0: usize, r1: usize, r2: usize, w: usize) -> Result<usize> {
    let base = Pent3Base::new(r0, r1, r2, w)?;
    let (p1, p2) = (base.v1 / 6, base.v2 / 6);
    let x_min = base.u_min(base.t_min + p2);
    Ok(3 * (p2 * (x_min + p1) + p1 * (base.t_min + p2)) + r0.max(r1))
}

/// Finds `t >= t_min`, `u >= u_min(t)` and `r3` with `target_r = v2 u/2 + v1 t/2 + r3`.
pub fn plan_pent3(r0: usize, r1: usize, r2: usize, w: usize, target_r: usize) -> Result<Pent3Plan> {
    let base = Pent3Base::new(r0, r1, r2, w)?;
    let r3 = if target_r % 3 == 0 {
        r0
    } else if target_r % 3 == (w + 1) % 3 {
        r1
    } else {
        return Err(Error::Unreachable(format!(
            "r = {target_r} is not 0 or w + 1 (mod 3)"
        )));
    };
    let unreachable = || Error::Unreachable(format!("no (t, u) found for r = {target_r}"));
    let rest = target_r.checked_sub(r3).ok_or_else(unreachable)?;
    // v1 t / 2 + v2 u / 2 = 3 (p1 t + p2 u)
    if rest % 3 != 0 {
        return Err(unreachable());
    }
    let n = rest / 3;
    let (p1, p2) = (base.v1 / 6, base.v2 / 6);
    for t in base.t_min..base.t_min + 6 * base.v2 {
        let Some(left) = n.checked_sub(p1 * t) else {
            break;
        };
        if left % p2 != 0 {
            continue;
        }
        let u = left / p2;
        if u >= base.u_min(t) {
            let plan = Pent3Plan {
                r0,
                r1,
                r2,
                w,
                target_r,
                v0: base.v0,
                v1: base.v1,
                v2: base.v2,
                t,
                u,
                r3,
            };
            debug_assert_eq!(plan.achieved_r(), target_r);
            return Ok(plan);
        }
    }
    Err(unreachable())
}

/// A type B PENT(5, r) assembled from 5-GDDs and PENT(5, s), s ∈ {20, 21, 26}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pent5Plan {
    pub r: usize,
    pub rho: usize,
    /// `4r + 6`.
    pub v: usize,
    /// `86 + 4 rho`.
    pub h: usize,
    pub q: usize,
    /// `v - 100 q`.
    pub m: usize,
    /// Multiplicities of 10, 18 and 30 among the `q` summands of `m`.
    pub tens: usize,
    pub eighteens: usize,
    pub thirties: usize,
}

impl Pent5Plan {
    /// The summands `d_1, .., d_q`, non-decreasing.
    pub fn summands(&self) -> Vec<usize> {
        let mut out = vec![10; self.tens];
        out.extend(std::iter::repeat_n(18, self.eighteens));
        out.extend(std::iter::repeat_n(30, self.thirties));
        out
    }

    /// Every congruence and range the assembly relies on.
    pub fn check(&self) -> Result<()> {
        let fail = |what: &str| {
            Err(Error::Unreachable(format!(
                "plan for r = {}: {what}",
                self.r
            )))
        };
        let (v, q, m, h) = (self.v, self.q, self.m, self.h);
        if self.r % 5 != self.rho || self.rho > 1 || v != 4 * self.r + 6 || h != 86 + 4 * self.rho {
            return fail("v, rho or h");
        }
        if q % 2 != 1 || q % 11 != 0 || q < v.div_ceil(129) || q > v / 111 {
            return fail("q must be odd, divisible by 11 and in [v/129, v/111]");
        }
        if m + 100 * q != v || m % h != 0 || m % 4 != 2 {
            return fail("m = v - 100q must be divisible by h and 2 (mod 4)");
        }
        if !(11 * q <= m && m <= 29 * q) {
            return fail("11q <= m <= 29q");
        }
        if self.tens + self.eighteens + self.thirties != q
            || 10 * self.tens + 18 * self.eighteens + 30 * self.thirties != m
        {
            return fail("summands");
        }
        let b = m / h;
        if q < 1937 || (q / 11) % 2 != 1 || q / 11 < 5 {
            return fail("GDD existence for q");
        }
        if b % 2 != 1 || b < 21 || (h == 86 && b % 10 != 1) {
            return fail("GDD existence for m/h");
        }
        Ok(())
    }
}

/// Chooses `q` and a decomposition of `m = v - 100q` into `q` summands from {10, 18, 30}.
pub fn plan_pent5(r: usize) -> Result<Pent5Plan> {
    let rho = r % 5;
    if rho > 1 {
        return Err(Error::Unreachable(format!("r = {r} is not 0 or 1 (mod 5)")));
    }
    let v = 4 * r + 6;
    let h = 86 + 4 * rho;
    let (q_min, q_max) = (v.div_ceil(129), v / 111);
    for q in (q_min..=q_max).filter(|q| q % 22 == 11) {
        let m = v - 100 * q;
        if m % h != 0 || m < 10 * q {
            continue;
        }
        // 10a + 18b + 30c = m with a + b + c = q  <=>  2b + 5c = (m - 10q)/4
        if (m - 10 * q) % 4 != 0 {
            continue;
        }
        let s = (m - 10 * q) / 4;
        let Some((b, c)) = (0..=s / 5)
            .rev()
            .map(|c| (c, s - 5 * c))
            .find(|&(c, rest)| rest % 2 == 0 && c + rest / 2 <= q)
            .map(|(c, rest)| (rest / 2, c))
        else {
            continue;
        };
        let plan = Pent5Plan {
            r,
            rho,
            v,
            h,
            q,
            m,
            tens: q - b - c,
            eighteens: b,
            thirties: c,
        };
        if plan.check().is_ok() {
            return Ok(plan);
        }
    }
    Err(Error::Unreachable(format!(
        "no q satisfies the constraints for r = {r}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_triples_meet_preconditions() {
        let b = Pent3Base::new(72, 25, 28, 9).unwrap();
        assert_eq!((b.v1, b.v2, gcd(b.v1, b.v2)), (60, 66, 6));
        let b = Pent3Base::new(51, 47, 53, 7).unwrap();
        assert_eq!((b.v1, b.v2, gcd(b.v1, b.v2)), (102, 114, 6));
        assert!(matches!(
            plan_pent3(72, 24, 28, 9, 1000),
            Err(Error::PreconditionFailed(_))
        ));
        assert!(matches!(
            plan_pent3(72, 25, 31, 9, 1000),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn every_target_above_threshold_is_planned() {
        for (r0, r1, r2, w) in [(72, 25, 28, 9), (51, 47, 53, 7)] {
            let t = pent3_threshold(r0, r1, r2, w).unwrap();
            for target in t..t + 300 {
                if target % 3 != 0 && target % 3 != (w + 1) % 3 {
                    continue;
                }
                let plan = plan_pent3(r0, r1, r2, w, target).unwrap();
                assert_eq!(plan.achieved_r(), target);
                assert!(plan.t >= 3 && plan.u >= 3);
            }
        }
    }

    #[test]
    fn small_targets_are_unreachable() {
        assert!(matches!(
            plan_pent3(72, 25, 28, 9, 30),
            Err(Error::Unreachable(_))
        ));
        assert!(matches!(
            plan_pent3(72, 25, 28, 9, 10_001),
            Err(Error::Unreachable(_))
        ));
    }

    #[test]
    fn pent5_plans() {
        let p = plan_pent5(200_000).unwrap();
        p.check().unwrap();
        assert_eq!(p.m % 4, 2);
        assert_eq!(p.summands().len(), p.q);
        assert_eq!(p.summands().iter().sum::<usize>(), p.m);
        assert!(matches!(plan_pent5(6), Err(Error::Unreachable(_))));
        assert!(matches!(plan_pent5(200_002), Err(Error::Unreachable(_))));
    }
}
