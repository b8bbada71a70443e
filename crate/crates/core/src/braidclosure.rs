//! Knots given as closed Artin braids.
//!
//! Seifert's algorithm on a closed braid diagram gives one disk per strand and
//! one half-twisted band per crossing. A basis of first homology is given by
//! the loops running through two consecutive bands of the same generator, so
//! the Seifert matrix has size `c - n + 1` for a word of length `c`.
//! `burau_alexander` computes the Alexander polynomial from the reduced Burau
//! matrix instead and serves as an independent check.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::intlin::{bareiss_det, IntMatrix};
use crate::laurent::LaurentPoly;
use crate::seifert::SeifertMatrix;

/// A word in the Artin generators: letter `v` stands for `sigma_|v|^sign(v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinBraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl ArtinBraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::StrandIndex(format!("braid needs at least 2 strands, got {strands}")));
        }
        for &v in &letters {
            if v == 0 || v.unsigned_abs() as usize >= strands {
                return Err(Error::StrandIndex(format!(
                    "generator {v} out of range for {strands} strands"
                )));
            }
        }
        Ok(ArtinBraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// All crossings flipped.
    pub fn mirror(&self) -> Self {
        ArtinBraidWord { strands: self.strands, letters: self.letters.iter().map(|v| -v).collect() }
    }

    pub fn reversed(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        ArtinBraidWord { strands: self.strands, letters }
    }

    /// Adds a strand and appends `sigma_n^sign`.
    pub fn stabilize(&self, sign: i64) -> Self {
        let n = self.strands as i64;
        let mut letters = self.letters.clone();
        letters.push(if sign < 0 { -n } else { n });
        ArtinBraidWord { strands: self.strands + 1, letters }
    }

    /// Image of each position, 1-based: `perm[p-1]` is where the strand
    /// starting at `p` ends.
    pub fn closure_permutation(&self) -> Vec<usize> {
        // track which strand occupies each slot
        let mut slots: Vec<usize> = (1..=self.strands).collect();
        for &v in &self.letters {
            let i = v.unsigned_abs() as usize;
            slots.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (end, &start) in slots.iter().enumerate() {
            perm[start - 1] = end + 1;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut p = s;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p] - 1;
                }
            }
        }
        count
    }

    pub fn is_knot_closure(&self) -> bool {
        self.components() == 1
    }

    /// Smallest generator index that does not occur.
    pub fn missing_generator(&self) -> Option<usize> {
        let present: BTreeSet<usize> = self.letters.iter().map(|v| v.unsigned_abs() as usize).collect();
        (1..self.strands).find(|i| !present.contains(i))
    }

    fn check_knot(&self) -> Result<()> {
        let components = self.components();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        Ok(())
    }

    /// Seifert matrix of the closure from the canonical braid surface.
    pub fn seifert_matrix(&self) -> Result<SeifertMatrix> {
        self.check_knot()?;
        if let Some(i) = self.missing_generator() {
            return Err(Error::MissingGenerator(i));
        }
        let x = &self.letters;
        let c = x.len();
        // next[p]: position of the following letter with the same generator
        let mut next = vec![None; c];
        for p in 0..c {
            next[p] = (p + 1..c).find(|&q| x[q].abs() == x[p].abs());
        }
        let loops: Vec<(usize, usize)> =
            (0..c).filter_map(|p| next[p].map(|q| (p, q))).collect();
        let size = loops.len();
        let mut m = IntMatrix::zeros(size);
        for (r, &(i, hi)) in loops.iter().enumerate() {
            m.set(r, r, BigInt::from(-(x[i].signum() + x[hi].signum()) / 2));
            for (s, &(j, hj)) in loops.iter().enumerate().skip(r + 1) {
                if hi < j || hj < hi {
                    continue;
                }
                if hi == j {
                    // consecutive loops on the same generator share band j
                    if x[j] > 0 {
                        m.set(r, s, BigInt::one());
                    } else {
                        m.set(s, r, -BigInt::one());
                    }
                    continue;
                }
                // interleaved loops i < j < hi < hj on different generators
                let gap = x[i].abs() - x[j].abs();
                if gap == 1 {
                    m.set(r, s, -BigInt::one());
                } else if gap == -1 {
                    m.set(s, r, BigInt::one());
                }
            }
        }
        debug_assert_eq!(size + self.strands, c + 1);
        SeifertMatrix::new(m)
    }

    /// Reduced Burau matrix of the word, `(n-1) x (n-1)` over `Z[t, t^-1]`.
    pub fn reduced_burau(&self) -> Vec<Vec<LaurentPoly>> {
        let d = self.strands - 1;
        let mut acc = laurent_identity(d);
        for &v in &self.letters {
            acc = laurent_mul(&acc, &burau_generator(d, v));
        }
        acc
    }

    /// Normalized Alexander polynomial of the closure via
    /// `det(B(w) - I) (1 - t) / (1 - t^n)`.
    pub fn burau_alexander(&self) -> Result<LaurentPoly> {
        self.check_knot()?;
        let mut b = self.reduced_burau();
        for (i, row) in b.iter_mut().enumerate() {
            row[i] = &row[i] - &LaurentPoly::one();
        }
        let det = bareiss_det(b);
        let ones = vec![BigInt::one(); self.strands];
        let quotient = det
            .div_exact(&LaurentPoly::from_coeffs(0, ones))
            .ok_or(Error::InexactDivision)?;
        Ok(normalize_alexander(&quotient))
    }
}

/// Multiplies by `+-t^k` so that the result is palindromic with value 1 at 1.
pub fn normalize_alexander(p: &LaurentPoly) -> LaurentPoly {
    let hi = p.highest_exponent().expect("Alexander polynomial of a knot is nonzero");
    let total = p.lowest_exponent() + hi;
    assert!(total % 2 == 0, "Alexander polynomial has even span");
    let mut q = p.shift(-total / 2);
    if q.eval_at_one().is_negative() {
        q = -q;
    }
    assert!(q.eval_at_one().is_one() && q.is_palindromic(), "not an Alexander polynomial: {p}");
    q
}

fn laurent_identity(d: usize) -> Vec<Vec<LaurentPoly>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }).collect())
        .collect()
}

fn laurent_mul(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut s = LaurentPoly::zero();
                    for k in 0..d {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            s = &s + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau image of `sigma_|v|^sign(v)` in dimension `d = n - 1`.
pub fn burau_generator(d: usize, v: i64) -> Vec<Vec<LaurentPoly>> {
    let mut g = laurent_identity(d);
    let i = v.unsigned_abs() as usize - 1;
    let (t, cross, below) = if v > 0 {
        (LaurentPoly::t(), LaurentPoly::t(), LaurentPoly::one())
    } else {
        let inv = LaurentPoly::monomial(1, -1);
        (inv.clone(), LaurentPoly::one(), inv)
    };
    g[i][i] = -t;
    if i > 0 {
        g[i - 1][i] = cross;
    }
    if i + 1 < d {
        g[i + 1][i] = below;
    }
    g
}

pub const DEFAULT_SEED: u64 = 0x5eed_0b1a_d00d_2718;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_strands: usize,
    pub max_len: usize,
    pub count: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { max_strands: 4, max_len: 12, count: 1000, seed: DEFAULT_SEED }
    }
}

/// Distinct random knot-closure words with every generator present, in the
/// order they were drawn. Stops early if the word space runs dry.
pub fn generate_corpus(config: &CorpusConfig) -> Vec<ArtinBraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let max_strands = config.max_strands.max(2);
    let attempts = config.count.saturating_mul(200).max(1000);
    for _ in 0..attempts {
        if out.len() >= config.count {
            break;
        }
        let n = rng.gen_range(2..=max_strands);
        if config.max_len + 1 < n {
            continue;
        }
        let len = rng.gen_range(n - 1..=config.max_len);
        let letters = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i64);
                if rng.gen_bool(0.5) { g } else { -g }
            })
            .collect();
        let w = ArtinBraidWord { strands: n, letters };
        if w.is_knot_closure() && w.missing_generator().is_none() && seen.insert(w.clone()) {
            out.push(w);
        }
    }
    out
}
