//! Independent re-computations of derived quantities.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sequiv::intlin::signature;
use sequiv::IntMatrix;

use common::{random_seifert, random_unimodular};

/// Cofactor expansion along the first row.
fn laplace<T>(m: &[Vec<T>]) -> T
where
    T: Clone + Zero + One + std::ops::Neg<Output = T> + std::ops::Mul<Output = T>,
{
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut total = T::zero();
    for (c, head) in m[0].iter().enumerate() {
        if head.is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = head.clone() * laplace(&minor);
        total = if c % 2 == 0 { total + term } else { total + (-term) };
    }
    total
}

/// Characteristic polynomial coefficients `c_0 .. c_n` (monic) by Faddeev-LeVerrier.
fn char_poly(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> i64 {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

/// For a symmetric matrix every root of the characteristic polynomial is
/// real, so Descartes' rule counts positive and negative eigenvalues exactly.
fn signature_by_descartes(q: &IntMatrix) -> i64 {
    let a: Vec<Vec<BigRational>> = q
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let c = char_poly(&a);
    let pos = sign_changes(&c);
    let flipped: Vec<BigRational> =
        c.iter().enumerate().map(|(k, x)| if k % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    let neg = sign_changes(&flipped);
    pos - neg
}

fn small_matrix(max: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max).prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n.max(1)).take(n).map(|c| c.to_vec()).collect();
            IntMatrix::from_i64_rows(&rows).unwrap()
        })
    })
}

fn symmetric(m: &IntMatrix) -> IntMatrix {
    m + &m.transpose()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_cofactor_expansion(m in small_matrix(6, 5)) {
        prop_assert_eq!(m.det(), laplace(&m.to_rows()));
    }

    #[test]
    fn signature_matches_descartes(m in small_matrix(6, 4)) {
        let q = symmetric(&m);
        prop_assert_eq!(signature(&q).unwrap(), signature_by_descartes(&q));
    }

    #[test]
    fn seifert_invariants_match_oracles(seed in any::<u64>(), num in -3i64..=3, den in 1i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = random_seifert(&mut rng, 3, 3);
        let m = s.matrix();
        // Alexander polynomial evaluated at a rational point against the
        // determinant of the evaluated matrix
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        let evaluated: Vec<Vec<BigRational>> = (0..m.size())
            .map(|i| {
                (0..m.size())
                    .map(|j| {
                        BigRational::from_integer(m.get(i, j).clone())
                            - &t * BigRational::from_integer(m.get(j, i).clone())
                    })
                    .collect()
            })
            .collect();
        prop_assert_eq!(s.raw_alexander().evaluate(&t), laplace(&evaluated));

        let q = symmetric(m);
        prop_assert_eq!(s.signature(), signature_by_descartes(&q));
        prop_assert_eq!(s.determinant(), laplace(&q.to_rows()).abs());
        let d = s.alexander().eval_at_minus_one().abs();
        prop_assert_eq!(&s.determinant(), &d);
        let r = (&d % BigInt::from(8)).to_string();
        prop_assert_eq!(s.arf() == 0, r == "1" || r == "7");
    }

    #[test]
    fn unimodular_inverse_matches_cofactors(seed in any::<u64>(), n in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_unimodular(&mut rng, n, 12);
        let inv = a.inverse_unimodular().unwrap();
        prop_assert_eq!(&(&a * &inv), &IntMatrix::identity(n));
        prop_assert_eq!(laplace(&a.to_rows()).abs(), BigInt::one());
    }
}

#[test]
fn descartes_oracle_sanity() {
    let q = IntMatrix::from_array([[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
    assert_eq!(signature_by_descartes(&q), -1);
    assert_eq!(signature_by_descartes(&IntMatrix::from_array([[2, 0], [0, 0]])), 1);
    assert_eq!(laplace(&IntMatrix::from_array([[2, 0, 1], [1, 3, 2], [1, 1, 2]]).to_rows()), BigInt::from(6));
}
