//! Exact rank computations over the integers.

use crate::error::{Error, Result};

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Incrementally built row-echelon basis.
///
/// Rows are reduced fraction-free (`v ← r_p·v − v_p·r`) and divided by the
/// gcd of their entries after every step, so entries stay small for 0/1
/// input.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<(usize, Vec<i128>)>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn push(&mut self, mut v: Vec<i128>) -> Result<bool> {
        debug_assert_eq!(v.len(), self.width);
        for (p, r) in &self.rows {
            let b = v[*p];
            if b == 0 {
                continue;
            }
            let a = r[*p];
            for (x, &y) in v.iter_mut().zip(r.iter()) {
                let lhs = a.checked_mul(*x).ok_or(Error::Overflow)?;
                let rhs = b.checked_mul(y).ok_or(Error::Overflow)?;
                *x = lhs.checked_sub(rhs).ok_or(Error::Overflow)?;
            }
            let g = v.iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                v.iter_mut().for_each(|x| *x /= g);
            }
        }
        match v.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, v));
                Ok(true)
            }
            None => Ok(false),
        }
    }
}

/// Dimension of the affine hull of `points`; `-1` for no points.
pub fn affine_rank(points: &[Vec<i64>]) -> Result<i64> {
    affine_rank_iter(points.iter().map(Vec::as_slice))
}

pub(crate) fn affine_rank_iter<'a>(mut points: impl Iterator<Item = &'a [i64]>) -> Result<i64> {
    let Some(base) = points.next() else {
        return Ok(-1);
    };
    let mut basis = EchelonBasis::new(base.len());
    for p in points {
        if p.len() != base.len() {
            return Err(Error::DimensionMismatch {
                expected: base.len(),
                found: p.len(),
            });
        }
        if basis.is_full() {
            break;
        }
        basis.push(p.iter().zip(base).map(|(&x, &y)| x as i128 - y as i128).collect())?;
    }
    Ok(basis.rank() as i64)
}
