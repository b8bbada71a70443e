//! Standardized Seifert matrices and the disk-band standard form.
//!
//! A Seifert matrix `N` is standardized when `N - N^T = X_g`. Such a matrix is
//! the same data as a disk with `2g` bands: band `i` has framing `N[i][i]` and
//! bands `i < j` link `N[j][i]` times. The upper triangle is then forced,
//! `N[i][j] = N[j][i] + X_g[i][j]`; the `X_g` term on dual band pairs
//! `(2m-1, 2m)` comes from where the two bands cross on the surface and is not
//! part of the band string link.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intlin::{congruent, is_symplectic, skew_standardize, standard_symplectic, IntMatrix};
use crate::purebraid::{Letter, PureBraidWord};
use crate::seifert::SeifertMatrix;
use crate::stringlink::{delta_equivalent_links, DoubledStringLink};

/// Framings and band linking numbers of a genus-`g` disk-band surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskBandForm {
    genus: usize,
    framings: Vec<BigInt>,
    // lk(i,j) for i < j, row-major over the strict upper triangle
    linking: Vec<BigInt>,
}

impl DiskBandForm {
    pub fn zeros(genus: usize) -> Self {
        let m = 2 * genus;
        DiskBandForm {
            genus,
            framings: vec![BigInt::zero(); m],
            linking: vec![BigInt::zero(); m * m.saturating_sub(1) / 2],
        }
    }

    pub fn new(genus: usize, framings: Vec<BigInt>) -> Result<Self> {
        if framings.len() != 2 * genus {
            return Err(Error::SizeMismatch { expected: 2 * genus, found: framings.len() });
        }
        Ok(DiskBandForm { framings, ..Self::zeros(genus) })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn bands(&self) -> usize {
        2 * self.genus
    }

    pub fn framings(&self) -> &[BigInt] {
        &self.framings
    }

    fn slot(&self, i: usize, j: usize) -> Result<usize> {
        let m = self.bands();
        let (i, j) = (i.min(j), i.max(j));
        if i == 0 || i == j || j > m {
            return Err(Error::StrandIndex(format!("band pair ({i},{j}) with {m} bands")));
        }
        let (i, j) = (i - 1, j - 1);
        Ok(i * (2 * m - i - 1) / 2 + (j - i - 1))
    }

    /// Linking number of bands `i != j` (1-based, symmetric).
    pub fn band_linking(&self, i: usize, j: usize) -> Result<&BigInt> {
        Ok(&self.linking[self.slot(i, j)?])
    }

    pub fn set_band_linking(&mut self, i: usize, j: usize, v: BigInt) -> Result<()> {
        let s = self.slot(i, j)?;
        self.linking[s] = v;
        Ok(())
    }

    /// `(i, j, lk)` for `i < j` with `lk != 0`.
    pub fn nonzero_linking(&self) -> Vec<(usize, usize, BigInt)> {
        let m = self.bands();
        let mut out = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                let v = &self.linking[self.slot(i, j).expect("in range")];
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    /// The band cores as a framed string link with one pass: strand `i` has
    /// framing `framings[i]` and the braid is the product over `i < j` of
    /// `p(i,j)^lk(i,j)` in lexicographic order.
    pub fn to_string_link(&self) -> Result<DoubledStringLink> {
        let m = self.bands().max(1);
        let mut braid = PureBraidWord::identity(m);
        for (i, j, v) in self.nonzero_linking() {
            let count = to_i64(&v)?;
            let letter = Letter::new(i, j, count.signum(), m)?;
            for _ in 0..count.unsigned_abs() {
                braid.push(letter)?;
            }
        }
        let mut framings = self.framings.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
        framings.resize(m, 0);
        DoubledStringLink::new(m, 1, braid, framings)
    }
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Overflow(v.clone()))
}

fn is_standardized(n: &IntMatrix) -> bool {
    n.size() % 2 == 0 && (n - &n.transpose()) == standard_symplectic(n.size() / 2)
}

/// Unimodular `A` and `N = A M A^T` with `N - N^T = X_g`.
pub fn standardize(m: &SeifertMatrix) -> Result<(IntMatrix, SeifertMatrix)> {
    let mm = m.matrix();
    let a = skew_standardize(&(mm - &mm.transpose()))?;
    let n = m.congruent(&a)?;
    debug_assert!(is_standardized(n.matrix()));
    Ok((a, n))
}

pub fn to_disk_band(n: &SeifertMatrix) -> Result<DiskBandForm> {
    let nm = n.matrix();
    if !is_standardized(nm) {
        return Err(Error::NotStandardized);
    }
    let size = nm.size();
    let framings = (0..size).map(|i| nm.get(i, i).clone()).collect();
    let mut form = DiskBandForm::new(size / 2, framings)?;
    for i in 0..size {
        for j in i + 1..size {
            form.set_band_linking(i + 1, j + 1, nm.get(j, i).clone())?;
        }
    }
    Ok(form)
}

pub fn from_disk_band(d: &DiskBandForm) -> SeifertMatrix {
    let size = d.bands();
    let x = standard_symplectic(d.genus);
    let mut n = IntMatrix::zeros(size);
    for i in 0..size {
        n.set(i, i, d.framings[i].clone());
        for j in i + 1..size {
            let lk = d.band_linking(i + 1, j + 1).expect("in range").clone();
            n.set(i, j, &lk + x.get(i, j));
            n.set(j, i, lk);
        }
    }
    SeifertMatrix::new(n).expect("N - N^T = X_g has determinant 1")
}

/// `C = A1 A2^-1`, which must satisfy `C X_g C^T = X_g`.
pub fn transition(a1: &IntMatrix, a2: &IntMatrix) -> Result<IntMatrix> {
    if a1.size() != a2.size() {
        return Err(Error::SizeMismatch { expected: a1.size(), found: a2.size() });
    }
    if a1.size() % 2 != 0 {
        return Err(Error::OddSize(a1.size()));
    }
    let d1 = a1.det();
    if !d1.abs().is_one() {
        return Err(Error::NotUnimodular { det: d1 });
    }
    let c = a1 * &a2.inverse_unimodular()?;
    if !is_symplectic(&c) {
        return Err(Error::NotSymplectic);
    }
    Ok(c)
}

/// Matrix-level certificate that two standardizations of one Seifert matrix
/// give delta-equivalent band string links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormWitness {
    pub n1: SeifertMatrix,
    pub n2: SeifertMatrix,
    /// Symplectic change of basis `A1 A2^-1`.
    pub c: IntMatrix,
    pub form1: DiskBandForm,
    pub form2: DiskBandForm,
    /// `to_disk_band(C N2 C^T)`, i.e. the second surface in the transported basis.
    pub transported: DiskBandForm,
    /// Both band forms carry identical framings and band linking numbers.
    pub forms_agree: bool,
    /// The realized band string links have equal framings and pairwise linking.
    pub links_delta_equivalent: bool,
}

impl StandardFormWitness {
    /// Band framings, read from the diagonal of `N1`.
    pub fn framings(&self) -> &[BigInt] {
        self.form1.framings()
    }
}

/// Checks that `A1`, `A2` both standardize `M`, computes the symplectic
/// transition `C`, and compares the disk-band data of `N1` with that of
/// `N2` after the `C` basis change.
pub fn standard_form_witness(
    m: &SeifertMatrix,
    a1: &IntMatrix,
    a2: &IntMatrix,
) -> Result<StandardFormWitness> {
    let n1 = m.congruent(a1)?;
    let n2 = m.congruent(a2)?;
    if !is_standardized(n1.matrix()) || !is_standardized(n2.matrix()) {
        return Err(Error::NotStandardized);
    }
    let c = transition(a1, a2)?;
    let moved = SeifertMatrix::new(congruent(n2.matrix(), &c)?)?;
    let form1 = to_disk_band(&n1)?;
    let form2 = to_disk_band(&n2)?;
    let transported = to_disk_band(&moved)?;
    let forms_agree = form1 == transported;
    let links_delta_equivalent =
        delta_equivalent_links(&form1.to_string_link()?, &transported.to_string_link()?)?;
    Ok(StandardFormWitness {
        n1,
        n2,
        c,
        form1,
        form2,
        transported,
        forms_agree,
        links_delta_equivalent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::validate;

    fn sm<const N: usize>(rows: [[i64; N]; N]) -> SeifertMatrix {
        validate(IntMatrix::from_array(rows)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn standardize_examples() {
        let t = sm([[-1, 1], [0, -1]]);
        let (a, n) = standardize(&t).unwrap();
        assert_eq!(a, IntMatrix::identity(2));
        assert_eq!(n, t);

        let (a, n) = standardize(&sm([[0, 0], [1, 0]])).unwrap();
        assert_eq!(a, IntMatrix::from_array([[0, 1], [1, 0]]));
        assert_eq!(n, sm([[0, 1], [0, 0]]));

        let (a, n) = standardize(&SeifertMatrix::empty()).unwrap();
        assert_eq!(a, IntMatrix::zeros(0));
        assert_eq!(n, SeifertMatrix::empty());
    }

    #[test]
    fn disk_band_reading() {
        let d = to_disk_band(&sm([[0, 1], [0, 0]])).unwrap();
        assert_eq!(d.genus(), 1);
        assert_eq!(d.framings(), &ints(&[0, 0])[..]);
        assert_eq!(d.band_linking(1, 2).unwrap(), &BigInt::zero());

        let t = sm([[-1, 1], [0, -1]]);
        let d = to_disk_band(&t).unwrap();
        assert_eq!(d.framings(), &ints(&[-1, -1])[..]);
        assert!(d.nonzero_linking().is_empty());

        let two = validate(t.matrix().block_diag(t.matrix())).unwrap();
        let d = to_disk_band(&two).unwrap();
        assert_eq!(d.framings(), &ints(&[-1, -1, -1, -1])[..]);
        assert!(d.nonzero_linking().is_empty());

        assert_eq!(to_disk_band(&sm([[0, 0], [1, 0]])), Err(Error::NotStandardized));
    }

    #[test]
    fn disk_band_building() {
        assert_eq!(from_disk_band(&DiskBandForm::zeros(1)), sm([[0, 1], [0, 0]]));
        let d = DiskBandForm::new(1, ints(&[-1, -1])).unwrap();
        assert_eq!(from_disk_band(&d), sm([[-1, 1], [0, -1]]));

        let mut d = DiskBandForm::new(2, ints(&[1, 0, -2, 3])).unwrap();
        d.set_band_linking(1, 3, BigInt::from(2)).unwrap();
        d.set_band_linking(4, 2, BigInt::from(-1)).unwrap();
        let n = from_disk_band(&d);
        assert_eq!(to_disk_band(&n).unwrap(), d);
        assert_eq!(*n.matrix().get(2, 0), BigInt::from(2));
        assert_eq!(*n.matrix().get(0, 2), BigInt::from(2));
        assert_eq!(*n.matrix().get(1, 0), BigInt::from(0));
        assert_eq!(*n.matrix().get(0, 1), BigInt::from(1));
    }

    #[test]
    fn transitions() {
        let s = IntMatrix::from_array([[1, 1], [0, 1]]);
        assert_eq!(transition(&s, &s).unwrap(), IntMatrix::identity(2));
        let c = transition(&IntMatrix::identity(2), &s).unwrap();
        assert_eq!(c, s.inverse_unimodular().unwrap());
        assert!(is_symplectic(&c));
        assert_eq!(
            transition(&IntMatrix::identity(2), &IntMatrix::from_array([[0, 1], [1, 0]])),
            Err(Error::NotSymplectic)
        );
        assert!(transition(&IntMatrix::identity(2), &IntMatrix::identity(4)).is_err());
    }

    #[test]
    fn witness_examples() {
        let t = sm([[-1, 1], [0, -1]]);
        let id = IntMatrix::identity(2);
        let w = standard_form_witness(&t, &id, &id).unwrap();
        assert_eq!(w.c, id);
        assert!(w.forms_agree && w.links_delta_equivalent);
        assert_eq!(w.form1, w.form2);
        assert_eq!(w.framings(), &ints(&[-1, -1])[..]);

        // A1 symplectic, A2 = identity
        let s = IntMatrix::from_array([[1, 0], [1, 1]]);
        let w = standard_form_witness(&t, &s, &id).unwrap();
        assert_eq!(w.c, s);
        assert!(w.forms_agree && w.links_delta_equivalent);
        assert_eq!(w.n1, sm([[-1, 0], [-1, -1]]));
        assert_eq!(w.framings(), &ints(&[-1, -1])[..]);
        assert_eq!(w.form1.band_linking(1, 2).unwrap(), &BigInt::from(-1));
        assert!(w.form2.nonzero_linking().is_empty());

        // A2 does not standardize M
        let swap = IntMatrix::from_array([[0, 1], [1, 0]]);
        assert_eq!(standard_form_witness(&t, &id, &swap), Err(Error::NotStandardized));
    }

    #[test]
    fn band_string_link() {
        let mut d = DiskBandForm::new(1, ints(&[2, -1])).unwrap();
        d.set_band_linking(1, 2, BigInt::from(-3)).unwrap();
        let l = d.to_string_link().unwrap();
        assert_eq!(l.n(), 2);
        assert_eq!(l.k(), 1);
        assert_eq!(l.framings(), &[2, -1]);
        assert_eq!(l.braid().len(), 3);
        assert_eq!(l.pairwise_linking().get(1, 2), -3);
    }
}
