//! Fraction-free (Bareiss) determinants over exact integral domains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::LaurentPoly;

/// Integral domain in which the Bareiss update divides exactly.
pub trait ExactRing: Clone + PartialEq + Zero + One {
    fn times(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Quotient of a division known to be exact. Panics otherwise.
    fn exact_quotient(&self, divisor: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_quotient(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact Bareiss division");
        q
    }
}

impl ExactRing for LaurentPoly {
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn exact_quotient(&self, divisor: &Self) -> Self {
        self.div_exact(divisor).expect("inexact Bareiss division")
    }
}

/// Determinant of a square matrix given by rows. The empty matrix has determinant 1.
pub fn bareiss_det<R: ExactRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    debug_assert!(a.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].times(&a[k][k]).minus(&a[i][k].times(&a[k][j]));
                a[i][j] = num.exact_quotient(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negated()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_integer_cases() {
        assert_eq!(bareiss_det::<BigInt>(vec![]), BigInt::from(1));
        assert_eq!(bareiss_det(big(&[&[7]])), BigInt::from(7));
        assert_eq!(bareiss_det(big(&[&[0, 1], &[-1, 0]])), BigInt::from(1));
        assert_eq!(bareiss_det(big(&[&[-2, 1], &[1, -2]])), BigInt::from(3));
        // needs a row swap on the first pivot
        assert_eq!(
            bareiss_det(big(&[&[0, 2, 1], &[1, 0, 3], &[4, 1, 0]])),
            BigInt::from(25)
        );
        assert_eq!(bareiss_det(big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
    }

    #[test]
    fn polynomial_entries() {
        // det [[t-1, 1], [-t, t-1]] = t^2 - t + 1
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        let m = vec![vec![&t - &one, one.clone()], vec![-&t, &t - &one]];
        assert_eq!(bareiss_det(m), LaurentPoly::from_i64s(0, &[1, -1, 1]));
    }
}
