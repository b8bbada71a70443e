//! The standard symplectic form and integral symplectic bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// `X_g`: block-diagonal sum of `g` copies of `[[0, 1], [-1, 0]]`.
pub fn standard_symplectic(g: usize) -> IntMatrix {
    let mut x = IntMatrix::zeros(2 * g);
    for m in 0..g {
        x.set(2 * m, 2 * m + 1, BigInt::one());
        x.set(2 * m + 1, 2 * m, -BigInt::one());
    }
    x
}

/// `C X_g C^T == X_g` for a matrix of even size `2g`.
pub fn is_symplectic(c: &IntMatrix) -> bool {
    if c.size() % 2 != 0 {
        return false;
    }
    let x = standard_symplectic(c.size() / 2);
    &(c * &x) * &c.transpose() == x
}

/// Finds a unimodular `A` with `A S A^T = X_g` for a skew-symmetric `S` of
/// determinant 1.
///
/// Works on the trailing block starting at index `k`: a nonzero entry of least
/// absolute value (ties to the lowest row, then column, in the upper triangle)
/// is moved to position `(k, k+1)` and made positive, then rows `k` and `k+1`
/// are reduced modulo it. A nonzero remainder is strictly smaller, so the
/// search restarts with it; otherwise the pivot splits off as a 2x2 block,
/// which must be `X_1` because the determinant is 1.
pub fn skew_standardize(s: &IntMatrix) -> Result<IntMatrix> {
    let n = s.size();
    if n % 2 != 0 {
        return Err(Error::OddSize(n));
    }
    if !s.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let d = s.det();
    if !d.is_one() {
        return Err(Error::SkewDeterminant { det: d });
    }

    let mut work = s.clone();
    let mut a = IntMatrix::identity(n);

    let swap = |work: &mut IntMatrix, a: &mut IntMatrix, p: usize, q: usize| {
        work.congruence_swap(p, q);
        a.swap_rows(p, q);
    };
    let add = |work: &mut IntMatrix, a: &mut IntMatrix, target: usize, source: usize, c: &BigInt| {
        work.congruence_add(target, source, c);
        a.add_row_multiple(target, source, c);
    };

    let mut k = 0;
    while k < n {
        loop {
            let (i, j) = min_entry(&work, k).expect("unimodular skew form has a nonzero entry");
            if i != k {
                swap(&mut work, &mut a, k, i);
            }
            if j != k + 1 {
                swap(&mut work, &mut a, k + 1, j);
            }
            if work.get(k, k + 1).is_negative() {
                swap(&mut work, &mut a, k, k + 1);
            }
            let pivot = work.get(k, k + 1).clone();

            let mut clean = true;
            for l in k + 2..n {
                let q = work.get(k, l).div_floor(&pivot);
                if !q.is_zero() {
                    add(&mut work, &mut a, l, k + 1, &-q);
                }
                let q = work.get(k + 1, l).div_floor(&pivot);
                if !q.is_zero() {
                    add(&mut work, &mut a, l, k, &q);
                }
                clean &= work.get(k, l).is_zero() && work.get(k + 1, l).is_zero();
            }
            if clean {
                assert!(pivot.is_one(), "pivot {pivot} in a determinant-1 skew form");
                break;
            }
        }
        k += 2;
    }
    debug_assert_eq!(work, standard_symplectic(n / 2));
    Ok(a)
}

/// Least nonzero `|S[i][j]|` with `k <= i < j`, ties to the lowest `(i, j)`.
fn min_entry(s: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let n = s.size();
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in k..n {
        for j in i + 1..n {
            let v = s.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(ij, _)| ij)
}
