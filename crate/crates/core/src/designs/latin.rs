use super::field::{prime_power, FiniteField};
use super::Gdd;
use crate::error::{Error, Result};
use crate::Point;

/// An `n × n` Latin square, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    pub n: usize,
    pub cells: Vec<usize>,
}

impl LatinSquare {
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    pub fn is_latin(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            (0..n).all(|j| {
                let (a, b) = (self.get(i, j), self.get(j, i));
                a < n
                    && b < n
                    && !std::mem::replace(&mut row[a], true)
                    && !std::mem::replace(&mut col[b], true)
            })
        })
    }

    /// Superimposing the two squares yields every ordered pair exactly once.
    pub fn is_orthogonal_to(&self, other: &LatinSquare) -> bool {
        let n = self.n;
        if other.n != n {
            return false;
        }
        let mut seen = vec![false; n * n];
        self.cells
            .iter()
            .zip(&other.cells)
            .all(|(&a, &b)| !std::mem::replace(&mut seen[a * n + b], true))
    }
}

/// `t` mutually orthogonal Latin squares `L_a(x, y) = a x + y` over GF(q), `a = 1..=t`.
pub fn mols(q: usize, t: usize) -> Result<Vec<LatinSquare>> {
    let f = FiniteField::new(q)?;
    if t == 0 || t > q - 1 {
        return Err(Error::TooManySquares { q, t, max: q - 1 });
    }
    let squares: Vec<LatinSquare> = (1..=t)
        .map(|a| LatinSquare {
            n: q,
            cells: (0..q * q).map(|c| f.add(f.mul(a, c / q), c % q)).collect(),
        })
        .collect();
    for (i, s) in squares.iter().enumerate() {
        if !s.is_latin() || squares[i + 1..].iter().any(|o| !s.is_orthogonal_to(o)) {
            return Err(Error::NoConstructionAvailable(format!(
                "MOLS({q}) check failed"
            )));
        }
    }
    Ok(squares)
}

/// A transversal design TD(k, g), i.e. a k-GDD of type g^k, with group `i`
/// on `i g .. i g + g - 1`.
pub fn uniform_gdd(k: usize, g: usize) -> Result<Gdd> {
    if k < 3 || g == 0 {
        return Err(Error::NoConstructionAvailable(format!("TD({k},{g})")));
    }
    // columns 2.. of each block are indexed by squares
    let squares: Vec<LatinSquare> = if g == 1 {
        vec![
            LatinSquare {
                n: 1,
                cells: vec![0]
            };
            k - 2
        ]
    } else if k == 3 {
        vec![LatinSquare {
            n: g,
            cells: (0..g * g).map(|c| (c / g + c % g) % g).collect(),
        }]
    } else {
        if prime_power(g).is_none() || k - 2 > g - 1 {
            return Err(Error::NoConstructionAvailable(format!(
                "TD({k},{g}) needs {} MOLS of side {g}",
                k - 2
            )));
        }
        mols(g, k - 2).map_err(|e| Error::NoConstructionAvailable(format!("TD({k},{g}): {e}")))?
    };
    let groups = (0..k)
        .map(|i| ((i * g) as Point..((i + 1) * g) as Point).collect())
        .collect();
    let mut blocks = Vec::with_capacity(g * g);
    for x in 0..g {
        for y in 0..g {
            let mut b = vec![x as Point, (g + y) as Point];
            for (i, s) in squares.iter().enumerate() {
                b.push(((i + 2) * g + s.get(x, y)) as Point);
            }
            blocks.push(b);
        }
    }
    Ok(Gdd::new(k, groups, blocks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::verify_gdd;

    #[test]
    fn mols_are_orthogonal() {
        let sq = mols(3, 2).unwrap();
        assert_eq!(sq.len(), 2);
        // brute force: all 9 ordered pairs of symbols appear
        let mut pairs: Vec<_> = (0..3)
            .flat_map(|x| (0..3).map(move |y| (x, y)))
            .map(|(x, y)| (sq[0].get(x, y), sq[1].get(x, y)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), 9);

        assert_eq!(mols(7, 5).unwrap().len(), 5);
        assert!(matches!(
            mols(2, 2),
            Err(Error::TooManySquares { q: 2, t: 2, max: 1 })
        ));
        assert!(matches!(mols(6, 1), Err(Error::NotPrimePower(6))));
    }

    #[test]
    fn transversal_designs() {
        for (k, g) in [
            (3, 3),
            (3, 10),
            (3, 6),
            (4, 3),
            (5, 4),
            (7, 7),
            (6, 5),
            (3, 1),
            (4, 1),
        ] {
            let d = uniform_gdd(k, g).unwrap();
            assert_eq!(d.blocks.len(), g * g, "TD({k},{g})");
            assert_eq!(d.group_type(), vec![(g, k)]);
            verify_gdd(&d).unwrap_or_else(|e| panic!("TD({k},{g}): {e}"));
        }
        assert!(matches!(
            uniform_gdd(4, 2),
            Err(Error::NoConstructionAvailable(_))
        ));
        assert!(matches!(
            uniform_gdd(4, 6),
            Err(Error::NoConstructionAvailable(_))
        ));
        assert!(matches!(
            uniform_gdd(8, 5),
            Err(Error::NoConstructionAvailable(_))
        ));
    }

    #[test]
    fn blocks_are_transversals() {
        let d = uniform_gdd(5, 7).unwrap();
        for b in &d.blocks {
            let groups: Vec<usize> = b.iter().map(|&x| x as usize / 7).collect();
            assert_eq!(groups, vec![0, 1, 2, 3, 4]);
        }
    }
}
