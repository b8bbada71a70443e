//! Doubled string links presented as pure braids.
//!
//! An `n`-strand string link is drawn as a pure braid `p` on `k n` strands:
//! string-link strand `i` runs through the braid `k` times, alternating
//! direction on each pass. Braid strand positions carry a double index
//! `(i, a)`: pass `a` runs left to right when `a` is odd and right to left
//! when it is even, so for `n = 3` the fourth braid strand is `(3, 2)` and the
//! fifth is `(2, 2)`. Braid linking numbers are measured with the braid
//! orientation, which agrees with the string-link orientation on odd passes.

use crate::error::{Error, Result};
use crate::purebraid::{Letter, LinkingMatrix, PureBraidWord};

/// Braid strand `(strand, pass)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleIndex {
    pub strand: usize,
    pub pass: usize,
}

impl DoubleIndex {
    pub fn new(strand: usize, pass: usize) -> Self {
        DoubleIndex { strand, pass }
    }
}

/// Braid position (1-based) of a double index.
pub fn position_of(idx: DoubleIndex, n: usize, k: usize) -> Result<usize> {
    let DoubleIndex { strand: i, pass: a } = idx;
    if i == 0 || i > n || a == 0 || a > k {
        return Err(Error::StrandIndex(format!("({i},{a}) with n = {n}, k = {k}")));
    }
    Ok(if a % 2 == 1 { (a - 1) * n + i } else { a * n - i + 1 })
}

/// Inverse of [`position_of`].
pub fn index_at(position: usize, n: usize, k: usize) -> Result<DoubleIndex> {
    if n == 0 || position == 0 || position > n * k {
        return Err(Error::StrandIndex(format!("position {position} with n = {n}, k = {k}")));
    }
    let a = (position - 1) / n + 1;
    let offset = position - (a - 1) * n;
    let i = if a % 2 == 1 { offset } else { n - offset + 1 };
    Ok(DoubleIndex::new(i, a))
}

/// +1 on odd passes, where braid and string-link orientations agree; -1 on even passes.
pub fn orientation_sign(pass: usize) -> i64 {
    assert!(pass >= 1, "passes are numbered from 1");
    if pass % 2 == 1 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledStringLink {
    n: usize,
    k: usize,
    braid: PureBraidWord,
    framings: Vec<i64>,
}

impl DoubledStringLink {
    pub fn new(n: usize, k: usize, braid: PureBraidWord, framings: Vec<i64>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::StrandIndex(format!("n = {n}, k = {k}; both must be positive")));
        }
        if braid.strands() != n * k {
            return Err(Error::StrandCount(n * k, braid.strands()));
        }
        if framings.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: framings.len() });
        }
        Ok(DoubledStringLink { n, k, braid, framings })
    }

    /// Builds the braid from letters written with double indices.
    pub fn from_double_letters(
        n: usize,
        k: usize,
        framings: Vec<i64>,
        letters: &[(DoubleIndex, DoubleIndex, i64)],
    ) -> Result<Self> {
        let mut braid = PureBraidWord::identity(n * k);
        for &(x, y, e) in letters {
            let (p, q) = (position_of(x, n, k)?, position_of(y, n, k)?);
            braid.push(Letter::new(p, q, e, n * k)?)?;
        }
        Self::new(n, k, braid, framings)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn braid(&self) -> &PureBraidWord {
        &self.braid
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn position(&self, idx: DoubleIndex) -> Result<usize> {
        position_of(idx, self.n, self.k)
    }

    /// Braid-level `lk((i,a),(j,b))`, measured with the braid orientation.
    pub fn braid_linking(&self, x: DoubleIndex, y: DoubleIndex) -> Result<i64> {
        let lk = self.braid.linking_matrix();
        Ok(lk.get(self.position(x)?, self.position(y)?))
    }

    /// String-link linking numbers
    /// `lk(i,j) = sum_{a,b} (-1)^(a+b) lk((i,a),(j,b))`.
    pub fn pairwise_linking(&self) -> LinkingMatrix {
        let braid_lk = self.braid.linking_matrix();
        let mut out = LinkingMatrix::zeros(self.n);
        for p in 1..=self.n * self.k {
            for q in p + 1..=self.n * self.k {
                let v = braid_lk.get(p, q);
                if v == 0 {
                    continue;
                }
                let x = index_at(p, self.n, self.k).expect("position in range");
                let y = index_at(q, self.n, self.k).expect("position in range");
                if x.strand != y.strand {
                    let sign = orientation_sign(x.pass) * orientation_sign(y.pass);
                    out.add_to(x.strand, y.strand, sign * v);
                }
            }
        }
        out
    }

    /// The letters of `(p_{A,(j,b)} p_{A,(j,b+1)})^sign`, dropping a factor
    /// whose two strands coincide.
    fn pair_letters(&self, anchor: DoubleIndex, j: usize, b: usize, sign: i64) -> Result<Vec<Letter>> {
        if sign != 1 && sign != -1 {
            return Err(Error::Exponent(sign));
        }
        if b == 0 || b >= self.k {
            return Err(Error::StrandIndex(format!(
                "pass pair ({b}, {}) with k = {}",
                b + 1,
                self.k
            )));
        }
        let a_pos = self.position(anchor)?;
        let mut letters = Vec::with_capacity(2);
        for pass in [b, b + 1] {
            let other = self.position(DoubleIndex::new(j, pass))?;
            if other != a_pos {
                letters.push(Letter::new(a_pos, other, sign, self.n * self.k)?);
            }
        }
        if sign < 0 {
            letters.reverse();
        }
        Ok(letters)
    }

    /// Multiplies the braid by `(p_{(i,a)(j,b)} p_{(i,a)(j,b+1)})^sign`,
    /// on the left when `b` is even and on the right when `b` is odd. The
    /// string link is unchanged: `lk((i,a),(j,b))` and `lk((i,a),(j,b+1))`
    /// both move by `sign`, or only `lk((i,b),(i,b+1))` moves when the anchor
    /// is one of the two strands.
    pub fn stabilizing_multiply(&self, anchor: DoubleIndex, j: usize, b: usize, sign: i64) -> Result<Self> {
        let letters = self.pair_letters(anchor, j, b, sign)?;
        let mut out = self.clone();
        out.multiply_pair(&letters, b, 1);
        Ok(out)
    }

    fn multiply_pair(&mut self, letters: &[Letter], b: usize, times: usize) {
        let strands = self.braid.strands();
        let mut block = Vec::with_capacity(letters.len() * times);
        for _ in 0..times {
            block.extend_from_slice(letters);
        }
        let old = self.braid.letters();
        let combined: Vec<Letter> = if b % 2 == 0 {
            block.iter().chain(old).copied().collect()
        } else {
            old.iter().chain(&block).copied().collect()
        };
        self.braid = PureBraidWord::new(strands, combined).expect("letters already validated");
    }

    /// Rewrites the braid, without changing the string link, so that every
    /// braid-level linking number vanishes.
    ///
    /// For `b = k-1` down to `1`, and anchors `(i,a)` and strands `j` in
    /// lexicographic order, the entry `lk((i,a),(j,b+1))` is cleared by
    /// stabilizing multiplications on the pass pair `(b, b+1)`. Each step only
    /// disturbs entries whose larger pass is at most `b`, so after the sweep
    /// only pass-1 entries `lk((i,1),(j,1))` can be nonzero, and those equal
    /// the string-link linking numbers, which are zero by assumption.
    pub fn normalize_linking(&self) -> Result<Self> {
        if let Some((i, j, value)) = self.pairwise_linking().entries().find(|e| e.2 != 0) {
            return Err(Error::NonzeroLinking { i, j, value });
        }
        let (n, k) = (self.n, self.k);
        let mut out = self.clone();
        let mut lk = out.braid.linking_matrix();
        for b in (1..k).rev() {
            for i in 1..=n {
                for a in 1..=k {
                    for j in 1..=n {
                        let anchor = DoubleIndex::new(i, a);
                        let target = DoubleIndex::new(j, b + 1);
                        if anchor == target {
                            continue;
                        }
                        let v = lk.get(out.position(anchor)?, out.position(target)?);
                        if v == 0 {
                            continue;
                        }
                        let sign = -v.signum();
                        let letters = out.pair_letters(anchor, j, b, sign)?;
                        for l in &letters {
                            lk.add_to(l.i(), l.j(), l.exp() as i64 * v.abs());
                        }
                        out.multiply_pair(&letters, b, v.unsigned_abs() as usize);
                    }
                }
            }
        }
        debug_assert_eq!(lk, out.braid.linking_matrix());
        assert!(lk.is_zero(), "normalization left nonzero braid linking numbers");
        Ok(out)
    }
}

/// Same pairwise linking numbers and the same framings.
pub fn delta_equivalent_links(l1: &DoubledStringLink, l2: &DoubledStringLink) -> Result<bool> {
    if l1.n != l2.n {
        return Err(Error::StrandCount(l1.n, l2.n));
    }
    Ok(l1.framings == l2.framings && l1.pairwise_linking() == l2.pairwise_linking())
}
