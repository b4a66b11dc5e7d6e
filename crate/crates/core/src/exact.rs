//! Exact rational linear algebra for side tests.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Determinant by fraction-exact Gaussian elimination. Consumes the matrix.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Sign of `det[p_1 - p_0, ..., p_{d-1} - p_0, q - p_0]` for `d` base points
/// in `R^d`: which side of their affine hyperplane `q` lies on.
pub fn orientation_sign(base: &[&[Rational]], q: &[Rational]) -> Ordering {
    let d = q.len();
    debug_assert_eq!(base.len(), d);
    let p0 = base[0];
    let diff = |p: &[Rational]| -> Vec<Rational> { (0..d).map(|i| &p[i] - &p0[i]).collect() };
    let mut rows: Vec<Vec<Rational>> = base[1..].iter().map(|p| diff(p)).collect();
    rows.push(diff(q));
    let det = determinant(rows);
    if det.is_zero() {
        Ordering::Equal
    } else if det.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(vec![vec![int(3)]]), int(3));
        assert_eq!(determinant(vec![vec![int(1), int(2)], vec![int(3), int(4)]]), int(-2));
        // needs a row swap
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        assert_eq!(determinant(m), int(-2));
        let singular = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), int(1)]];
        assert_eq!(determinant(singular), int(0));
    }

    #[test]
    fn side_tests() {
        let a = [int(0), int(0)];
        let b = [int(1), int(0)];
        let base: [&[Rational]; 2] = [&a, &b];
        assert_eq!(orientation_sign(&base, &[int(0), int(1)]), Ordering::Greater);
        assert_eq!(orientation_sign(&base, &[int(5), int(-1)]), Ordering::Less);
        assert_eq!(orientation_sign(&base, &[q(7, 3), int(0)]), Ordering::Equal);
        // in R^1 the hyperplane is a single point
        let p: [&[Rational]; 1] = [&[int(2)]];
        assert_eq!(orientation_sign(&p, &[int(1)]), Ordering::Less);
    }
}
