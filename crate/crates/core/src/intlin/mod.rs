//! Exact integer linear algebra on square matrices.

mod det;
mod signature;
mod symplectic;

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use det::{bareiss_det, ExactRing};
pub use signature::signature;
pub use symplectic::{is_symplectic, skew_standardize, standard_symplectic};

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    size: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix { size, entries: vec![BigInt::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::SizeMismatch { expected: size, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { size, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    /// Builds a matrix from a literal array, mostly for tests and examples.
    pub fn from_array<const N: usize>(rows: [[i64; N]; N]) -> Self {
        IntMatrix {
            size: N,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.size + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.size).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// Largest absolute value of any entry (0 for the empty matrix).
    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|i| (i + 1..self.size).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `Q^T = -Q` (which forces a zero diagonal).
    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.size).all(|i| (i..self.size).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    fn check_same_size(&self, other: &IntMatrix) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch { expected: self.size, found: other.size });
        }
        Ok(())
    }

    pub fn det(&self) -> BigInt {
        bareiss_det(self.to_rows())
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Matrix with row `i` and column `j` deleted.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let keep: Vec<usize> = (0..self.size).filter(|&k| k != i).collect();
        let keep_c: Vec<usize> = (0..self.size).filter(|&k| k != j).collect();
        let entries = keep
            .iter()
            .flat_map(|&r| keep_c.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        IntMatrix { size: self.size.saturating_sub(1), entries }
    }

    /// Principal submatrix keeping only the listed indices, in the given order.
    pub fn principal(&self, keep: &[usize]) -> Self {
        let entries = keep
            .iter()
            .flat_map(|&r| keep.iter().map(move |&c| (r, c)))
            .map(|(r, c)| self.get(r, c).clone())
            .collect();
        IntMatrix { size: keep.len(), entries }
    }

    pub fn adjugate(&self) -> Self {
        let n = self.size;
        let mut adj = Self::zeros(n);
        if n == 1 {
            adj.set(0, 0, BigInt::one());
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(j, i).det();
                adj.set(i, j, if (i + j) % 2 == 0 { c } else { -c });
            }
        }
        adj
    }

    /// Integer inverse of a unimodular matrix, computed from the adjugate.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let d = self.det();
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular { det: d });
        }
        let adj = self.adjugate();
        Ok(if d.is_negative() { -&adj } else { adj })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &IntMatrix) -> Self {
        let n = self.size + other.size;
        let mut m = Self::zeros(n);
        for i in 0..self.size {
            for j in 0..self.size {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                m.set(self.size + i, self.size + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Row `target += c * row source`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        let n = self.size;
        for k in 0..n {
            let v = self.entries[source * n + k].clone() * c;
            self.entries[target * n + k] += v;
        }
    }

    /// Column `target += c * column source`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, c: &BigInt) {
        let n = self.size;
        for k in 0..n {
            let v = self.entries[k * n + source].clone() * c;
            self.entries[k * n + target] += v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.size;
        for k in 0..n {
            self.entries.swap(a * n + k, b * n + k);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let n = self.size;
        for k in 0..n {
            self.entries.swap(k * n + a, k * n + b);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        let n = self.size;
        for v in &mut self.entries[i * n..(i + 1) * n] {
            *v = -&*v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        let n = self.size;
        for k in 0..n {
            let v = &mut self.entries[k * n + j];
            *v = -&*v;
        }
    }

    /// Congruence by `E = I + c e_target e_source^T`: `self <- E self E^T`.
    pub fn congruence_add(&mut self, target: usize, source: usize, c: &BigInt) {
        self.add_row_multiple(target, source, c);
        self.add_col_multiple(target, source, c);
    }

    /// Congruence by the transposition matrix exchanging `a` and `b`.
    pub fn congruence_swap(&mut self, a: usize, b: usize) {
        self.swap_rows(a, b);
        self.swap_cols(a, b);
    }

    /// Congruence by `diag(1, .., -1, .., 1)`.
    pub fn congruence_negate(&mut self, i: usize) {
        self.negate_row(i);
        self.negate_col(i);
    }

    /// Simultaneous permutation: entry `(i, j)` of the result is entry
    /// `(perm[i], perm[j])` of `self`. Equals `P self P^T` for the permutation
    /// matrix `P` with `P[i][perm[i]] = 1`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        self.principal(perm)
    }

    /// The permutation matrix `P` with `P[i][perm[i]] = 1`.
    pub fn permutation_matrix(perm: &[usize]) -> Self {
        let mut p = Self::zeros(perm.len());
        for (i, &j) in perm.iter().enumerate() {
            p.set(i, j, BigInt::one());
        }
        p
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

/// Returns `A M A^T`. `A` must be unimodular and of the same size as `M`.
pub fn congruent(m: &IntMatrix, a: &IntMatrix) -> Result<IntMatrix> {
    m.check_same_size(a)?;
    let d = a.det();
    if !d.abs().is_one() {
        return Err(Error::NotUnimodular { det: d });
    }
    Ok(&(a * m) * &a.transpose())
}

pub fn det(m: &IntMatrix) -> BigInt {
    m.det()
}

pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_unimodular()
}

impl<'a> Mul<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        let n = self.size;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        IntMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a IntMatrix> for &'a IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, rhs.size, "matrix size mismatch");
        IntMatrix {
            size: self.size,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix { size: self.size, entries: self.entries.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_examples() {
        assert_eq!(det(&IntMatrix::zeros(0)), BigInt::from(1));
        assert_eq!(det(&IntMatrix::from_array([[0, 1], [-1, 0]])), BigInt::from(1));
        assert_eq!(det(&IntMatrix::from_array([[-2, 1], [1, -2]])), BigInt::from(3));
    }

    #[test]
    fn unimodularity_examples() {
        assert!(is_unimodular(&IntMatrix::identity(2)));
        assert!(is_unimodular(&IntMatrix::from_array([[1, 1], [0, 1]])));
        assert!(!is_unimodular(&IntMatrix::from_array([[2, 0], [0, 1]])));
        assert!(is_unimodular(&IntMatrix::zeros(0)));
    }

    #[test]
    fn congruence_examples() {
        let m = IntMatrix::from_array([[-1, 1], [0, -1]]);
        let a = IntMatrix::from_array([[1, 1], [0, 1]]);
        // [[1,1],[0,1]] [[-1,1],[0,-1]] = [[-1,0],[0,-1]]; times [[1,0],[1,1]]
        assert_eq!(congruent(&m, &a).unwrap(), IntMatrix::from_array([[-1, 0], [-1, -1]]));
        assert_eq!(congruent(&m, &IntMatrix::identity(2)).unwrap(), m);
        assert_eq!(
            congruent(&IntMatrix::zeros(0), &IntMatrix::zeros(0)).unwrap(),
            IntMatrix::zeros(0)
        );
    }

    #[test]
    fn congruence_errors() {
        let m = IntMatrix::from_array([[-1, 1], [0, -1]]);
        assert_eq!(
            congruent(&m, &IntMatrix::from_array([[2, 0], [0, 1]])),
            Err(Error::NotUnimodular { det: BigInt::from(2) })
        );
        assert_eq!(
            congruent(&m, &IntMatrix::identity(3)),
            Err(Error::SizeMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn elementary_congruences_match_matrix_products() {
        let m = IntMatrix::from_array([[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let mut e = IntMatrix::identity(3);
        e.set(2, 0, BigInt::from(-3));
        let mut fast = m.clone();
        fast.congruence_add(2, 0, &BigInt::from(-3));
        assert_eq!(fast, congruent(&m, &e).unwrap());

        let perm = [2, 0, 1];
        let p = IntMatrix::permutation_matrix(&perm);
        assert_eq!(m.permuted(&perm), congruent(&m, &p).unwrap());
    }

    #[test]
    fn unimodular_inverse() {
        let a = IntMatrix::from_array([[2, 3], [1, 2]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(&a * &inv, IntMatrix::identity(2));
        let b = IntMatrix::from_array([[0, 1, 0], [1, 0, 0], [4, -2, 1]]);
        let inv = b.inverse_unimodular().unwrap();
        assert_eq!(&inv * &b, IntMatrix::identity(3));
        assert!(IntMatrix::from_array([[2, 0], [0, 1]]).inverse_unimodular().is_err());
        assert_eq!(IntMatrix::from_array([[-1]]).inverse_unimodular().unwrap(), IntMatrix::from_array([[-1]]));
    }
}
