use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of a PENT(k, r, w) together with the derived point and line counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PentParams {
    /// Points per line.
    pub k: usize,
    /// Lines per point.
    pub r: usize,
    /// Order of every opposite design.
    pub w: usize,
    /// Number of points, `(k - 1) r + w + 1`.
    pub v: usize,
    /// Number of lines, `v r / k`.
    pub b: usize,
}

impl PentParams {
    pub fn new(k: usize, r: usize, w: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::ParameterDomain(format!("k = {k}, need k >= 3")));
        }
        if w < k {
            return Err(Error::ParameterDomain(format!("w = {w} < k = {k}")));
        }
        if r < 1 {
            return Err(Error::ParameterDomain("r must be positive".into()));
        }
        let v = (k - 1) * r + w + 1;
        if (v * r) % k != 0 {
            return Err(Error::NonIntegralLineCount { k, r, v });
        }
        Ok(Self {
            k,
            r,
            w,
            v,
            b: v * r / k,
        })
    }

    /// Lines through a point of an S(2,k,w), `(w - 1)/(k - 1)`, when integral.
    pub fn opposite_replication(&self) -> Option<usize> {
        ((self.w - 1) % (self.k - 1) == 0).then(|| (self.w - 1) / (self.k - 1))
    }

    /// Blocks of an S(2,k,w), `w(w - 1)/(k(k - 1))`, when integral.
    pub fn opposite_block_count(&self) -> Option<usize> {
        let num = self.w * (self.w - 1);
        let den = self.k * (self.k - 1);
        (num % den == 0).then(|| num / den)
    }

    /// `e = r - w(w - 1)/(k - 1)`; negative values occur for girth-4 geometries.
    pub fn excess(&self) -> Option<i64> {
        let num = self.w * (self.w - 1);
        (num % (self.k - 1) == 0).then(|| self.r as i64 - (num / (self.k - 1)) as i64)
    }

    pub fn is_admissible(&self) -> bool {
        is_admissible(self.k, self.r, self.w)
    }
}

impl std::fmt::Display for PentParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PENT({},{},{})", self.k, self.r, self.w)
    }
}

/// Shorthand for [`PentParams::new`].
pub fn derive_params(k: usize, r: usize, w: usize) -> Result<PentParams> {
    PentParams::new(k, r, w)
}

/// `r` is admissible for `(k, w)` when `r (w + 1 - r) ≡ 0 (mod k)`.
pub fn is_admissible(k: usize, r: usize, w: usize) -> bool {
    if k == 0 {
        return false;
    }
    let (k, r, w) = (k as i128, r as i128, w as i128);
    (r * (w + 1 - r)).rem_euclid(k) == 0
}
