//! Table-backed finite fields of order at most 49.

use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: usize = 49;

/// Irreducible monic polynomials, coefficients from the constant term up.
const MODULI: &[(usize, usize, &[usize])] = &[
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[1, 0, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[2, 0, 1]),
    (27, 3, &[1, 2, 0, 1]),
    (32, 2, &[1, 0, 1, 0, 0, 1]),
    (49, 7, &[1, 0, 1]),
];

/// `Some((p, e))` when `n = p^e` for a prime `p` and `e >= 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut m = n;
    let mut e = 0;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// GF(q) with elements `0..q`; element `x` encodes the polynomial whose
/// base-`p` digits are its coefficients, so `0` and `1` are the identities.
#[derive(Debug, Clone)]
pub struct FiniteField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let e = e as usize;
        let modulus: Vec<usize> = if e == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(order, ..)| *order == q)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(Error::FieldTooLarge(q))?
        };

        let digits = |mut x: usize| -> Vec<usize> {
            (0..e)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;

                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0usize; 2 * e - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (e..prod.len()).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, m) in modulus.iter().enumerate().take(e) {
                            let idx = deg - e + i;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                        prod[deg] = 0;
                    }
                }
                mul[a * q + b] = encode(&prod[..e]) as u8;
            }
        }
        let field = Self { q, p, add, mul };
        field.check_axioms()?;
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    /// Exhaustive check of the field axioms over the tables.
    fn check_axioms(&self) -> Result<()> {
        let q = self.q;
        let fail = |what: &str| {
            Err(Error::NoConstructionAvailable(format!(
                "GF({q}) tables violate {what}"
            )))
        };
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return fail("identities");
            }
            if a != 0 && self.inv(a).is_none() {
                return fail("multiplicative inverses");
            }
            if !(0..q).any(|b| self.add(a, b) == 0) {
                return fail("additive inverses");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return fail("associativity or distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}
