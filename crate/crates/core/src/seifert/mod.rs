//! Seifert matrices, their abelian invariants, and the S-equivalence moves.
//!
//! A Seifert matrix here is an even-sized integer matrix `M` with
//! `det(M - M^T) = 1`. S-equivalence is generated by unimodular congruence
//! `M -> A M A^T` together with column and row enlargements (and their
//! inverses, reductions):
//!
//! ```text
//! column:  [[M, xi, 0],      row:  [[M,   0, 0],
//!           [0,  x, 1],             [eta, x, 0],
//!           [0,  0, 0]]             [0,   1, 0]]
//! ```
//!
//! with the new rows and columns appended at the bottom right.

mod search;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::{self, bareiss_det, IntMatrix};
use crate::laurent::LaurentPoly;

pub use search::{
    bounded_sequiv_search, replay, Move, SearchBudget, SearchVerdict, DEFAULT_MAX_ENTRY,
    DEFAULT_MAX_NODES, DEFAULT_MAX_SIZE,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertMatrix(IntMatrix);

/// Checks even size and `det(M - M^T) = 1`.
pub fn validate(m: IntMatrix) -> Result<SeifertMatrix> {
    if m.size() % 2 != 0 {
        return Err(Error::OddSize(m.size()));
    }
    let det = (&m - &m.transpose()).det();
    if !det.is_one() {
        return Err(Error::SeifertPairing { det });
    }
    Ok(SeifertMatrix(m))
}

/// Which abelian invariant separated two Seifert matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    Alexander,
    Signature,
    Determinant,
    Arf,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::Alexander => "alexander",
            InvariantKind::Signature => "signature",
            InvariantKind::Determinant => "determinant",
            InvariantKind::Arf => "arf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub alexander: LaurentPoly,
    pub signature: i64,
    pub determinant: BigInt,
    pub arf: u8,
}

impl Invariants {
    /// First invariant (in the order Alexander, signature, determinant, Arf)
    /// on which the two sets disagree.
    pub fn first_difference(&self, other: &Invariants) -> Option<InvariantKind> {
        if self.alexander != other.alexander {
            Some(InvariantKind::Alexander)
        } else if self.signature != other.signature {
            Some(InvariantKind::Signature)
        } else if self.determinant != other.determinant {
            Some(InvariantKind::Determinant)
        } else if self.arf != other.arf {
            Some(InvariantKind::Arf)
        } else {
            None
        }
    }
}

/// Which enlargement block pattern a reduction removed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EnlargementKind {
    Column,
    Row,
}

/// A reduction found by [`SeifertMatrix::find_reduction`].
///
/// `M.permuted(perm)` is exactly the enlargement of `reduced` of the given
/// kind with data `(vector, x)`; the enlargement pair sits at the original
/// indices `perm[size - 2]`, `perm[size - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub kind: EnlargementKind,
    pub perm: Vec<usize>,
    pub vector: Vec<BigInt>,
    pub x: BigInt,
    pub reduced: SeifertMatrix,
}

impl SeifertMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        validate(m)
    }

    /// The genus-0 (unknot) matrix.
    pub fn empty() -> Self {
        SeifertMatrix(IntMatrix::zeros(0))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn genus(&self) -> usize {
        self.0.size() / 2
    }

    /// `det(M - t M^T)` as a polynomial in `t`.
    pub fn raw_alexander(&self) -> LaurentPoly {
        let m = &self.0;
        let n = m.size();
        let t = LaurentPoly::t();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let a = LaurentPoly::constant(m.get(i, j).clone());
                        let b = &t * &LaurentPoly::constant(m.get(j, i).clone());
                        &a - &b
                    })
                    .collect()
            })
            .collect();
        bareiss_det(rows)
    }

    /// `t^-g det(M - t M^T)`, which is palindromic with value 1 at `t = 1`.
    pub fn alexander(&self) -> LaurentPoly {
        let delta = self.raw_alexander().shift(-(self.genus() as i64));
        assert!(delta.eval_at_one().is_one(), "Alexander polynomial with delta(1) != 1");
        assert!(delta.is_palindromic(), "Alexander polynomial is not symmetric");
        delta
    }

    pub fn is_alexander_trivial(&self) -> bool {
        self.alexander().is_one()
    }

    /// Signature of `M + M^T`.
    pub fn signature(&self) -> i64 {
        intlin::signature(&self.symmetrized()).expect("M + M^T is symmetric")
    }

    /// `|det(M + M^T)| = |delta(-1)|`.
    pub fn determinant(&self) -> BigInt {
        let d = self.symmetrized().det().abs();
        debug_assert_eq!(d, self.alexander().eval_at_minus_one().abs());
        d
    }

    /// Arf invariant: 0 when `delta(-1) = +-1 (mod 8)`, else 1.
    pub fn arf(&self) -> u8 {
        arf_from_alexander(&self.alexander())
    }

    pub fn invariants(&self) -> Invariants {
        let alexander = self.alexander();
        let determinant = self.symmetrized().det().abs();
        assert_eq!(determinant, alexander.eval_at_minus_one().abs());
        Invariants {
            arf: arf_from_alexander(&alexander),
            alexander,
            signature: self.signature(),
            determinant,
        }
    }

    fn symmetrized(&self) -> IntMatrix {
        &self.0 + &self.0.transpose()
    }

    /// `A M A^T` for unimodular `A`.
    pub fn congruent(&self, a: &IntMatrix) -> Result<Self> {
        Ok(SeifertMatrix(intlin::congruent(&self.0, a)?))
    }

    /// `[[M, xi, 0], [0, x, 1], [0, 0, 0]]`.
    pub fn column_enlarge(&self, xi: &[BigInt], x: &BigInt) -> Result<Self> {
        let n = self.size();
        if xi.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: xi.len() });
        }
        let mut out = self.padded();
        for (r, v) in xi.iter().enumerate() {
            out.set(r, n, v.clone());
        }
        out.set(n, n, x.clone());
        out.set(n, n + 1, BigInt::one());
        Ok(SeifertMatrix(out))
    }

    /// `[[M, 0, 0], [eta, x, 0], [0, 1, 0]]`.
    pub fn row_enlarge(&self, eta: &[BigInt], x: &BigInt) -> Result<Self> {
        let n = self.size();
        if eta.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: eta.len() });
        }
        let mut out = self.padded();
        for (c, v) in eta.iter().enumerate() {
            out.set(n, c, v.clone());
        }
        out.set(n, n, x.clone());
        out.set(n + 1, n, BigInt::one());
        Ok(SeifertMatrix(out))
    }

    pub fn enlarge(&self, kind: EnlargementKind, vector: &[BigInt], x: &BigInt) -> Result<Self> {
        match kind {
            EnlargementKind::Column => self.column_enlarge(vector, x),
            EnlargementKind::Row => self.row_enlarge(vector, x),
        }
    }

    fn padded(&self) -> IntMatrix {
        let n = self.size();
        let mut out = IntMatrix::zeros(n + 2);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.0.get(i, j).clone());
            }
        }
        out
    }

    /// Strips one enlargement block if the matrix has one, up to a
    /// simultaneous permutation of rows and columns.
    pub fn try_reduce(&self) -> Option<Self> {
        self.find_reduction().map(|r| r.reduced)
    }

    /// Looks for an enlargement pair `(p, q)`: first at the trailing position
    /// `(n-2, n-1)`, then over all ordered pairs in lexicographic order;
    /// the column pattern is tried before the row pattern at each pair.
    pub fn find_reduction(&self) -> Option<Reduction> {
        let n = self.size();
        if n < 2 {
            return None;
        }
        let trailing = std::iter::once((n - 2, n - 1));
        let all = (0..n).flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)));
        for (p, q) in trailing.chain(all) {
            for kind in [EnlargementKind::Column, EnlargementKind::Row] {
                if self.matches_pattern(kind, p, q) {
                    return Some(self.reduction_at(kind, p, q));
                }
            }
        }
        None
    }

    fn matches_pattern(&self, kind: EnlargementKind, p: usize, q: usize) -> bool {
        let n = self.size();
        // For the row pattern, read the matrix transposed.
        let at = |i: usize, j: usize| match kind {
            EnlargementKind::Column => self.0.get(i, j),
            EnlargementKind::Row => self.0.get(j, i),
        };
        (0..n).all(|c| at(q, c).is_zero())
            && (0..n).all(|r| if r == p { at(r, q).is_one() } else { at(r, q).is_zero() })
            && (0..n).filter(|&c| c != p && c != q).all(|c| at(p, c).is_zero())
    }

    fn reduction_at(&self, kind: EnlargementKind, p: usize, q: usize) -> Reduction {
        let n = self.size();
        let others: Vec<usize> = (0..n).filter(|&k| k != p && k != q).collect();
        let vector = others
            .iter()
            .map(|&r| match kind {
                EnlargementKind::Column => self.0.get(r, p).clone(),
                EnlargementKind::Row => self.0.get(p, r).clone(),
            })
            .collect();
        let reduced = SeifertMatrix(self.0.principal(&others));
        let mut perm = others;
        perm.extend([p, q]);
        Reduction { kind, perm, vector, x: self.0.get(p, p).clone(), reduced }
    }
}

fn arf_from_alexander(delta: &LaurentPoly) -> u8 {
    let r = delta.eval_at_minus_one().mod_floor(&BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

pub fn alexander(m: &SeifertMatrix) -> LaurentPoly {
    m.alexander()
}

pub fn is_alexander_trivial(m: &SeifertMatrix) -> bool {
    m.is_alexander_trivial()
}

pub fn knot_signature(m: &SeifertMatrix) -> i64 {
    m.signature()
}

pub fn knot_determinant(m: &SeifertMatrix) -> BigInt {
    m.determinant()
}

pub fn arf(m: &SeifertMatrix) -> u8 {
    m.arf()
}

pub fn column_enlarge(m: &SeifertMatrix, xi: &[BigInt], x: &BigInt) -> Result<SeifertMatrix> {
    m.column_enlarge(xi, x)
}

pub fn row_enlarge(m: &SeifertMatrix, eta: &[BigInt], x: &BigInt) -> Result<SeifertMatrix> {
    m.row_enlarge(eta, x)
}

pub fn try_reduce(m: &SeifertMatrix) -> Option<SeifertMatrix> {
    m.try_reduce()
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
