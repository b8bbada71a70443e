#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sequiv::purebraid::PureBraidWord;
use sequiv::intlin::{is_symplectic, standard_symplectic};
use sequiv::seifert::{validate, SeifertMatrix};
use sequiv::IntMatrix;

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Product of `steps` random elementary matrices: transvections, swaps, sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, size: usize, steps: usize) -> IntMatrix {
    let mut a = IntMatrix::identity(size);
    if size == 0 {
        return a;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..size);
        match rng.gen_range(0..4) {
            0 | 1 if size > 1 => {
                let mut j = rng.gen_range(0..size - 1);
                if j >= i {
                    j += 1;
                }
                let c = if rng.gen_bool(0.5) { 1 } else { -1 };
                a.add_row_multiple(i, j, &big(c));
            }
            2 if size > 1 => {
                let j = rng.gen_range(0..size);
                a.swap_rows(i, j);
            }
            _ => a.negate_row(i),
        }
    }
    a
}

/// Symplectic transvection `I + c v v^T X^T` with `v` in {-1,0,1}^2g, or an
/// SL2 move on one hyperbolic pair.
pub fn random_symplectic(rng: &mut ChaCha8Rng, genus: usize, steps: usize) -> IntMatrix {
    let n = 2 * genus;
    let xt = standard_symplectic(genus).transpose();
    let mut c = IntMatrix::identity(n);
    for _ in 0..steps {
        let mut e = IntMatrix::identity(n);
        if rng.gen_bool(0.3) {
            let m = rng.gen_range(0..genus);
            let (p, q) = if rng.gen_bool(0.5) { (2 * m, 2 * m + 1) } else { (2 * m + 1, 2 * m) };
            e.set(p, q, big(if rng.gen_bool(0.5) { 1 } else { -1 }));
        } else {
            let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            let mut outer = IntMatrix::zeros(n);
            for i in 0..n {
                for j in 0..n {
                    outer.set(i, j, big(s * v[i] * v[j]));
                }
            }
            e = &e + &(&outer * &xt);
        }
        assert!(is_symplectic(&e));
        c = &e * &c;
    }
    c
}

/// Standardized Seifert matrix: `N - N^T = X_g` with free lower triangle.
pub fn random_standardized(rng: &mut ChaCha8Rng, genus: usize, bound: i64) -> SeifertMatrix {
    let n = 2 * genus;
    let x = standard_symplectic(genus);
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            // keep the forced upper entry within the bound too
            let hi = if j < i && x.get(j, i) == &big(1) { bound - 1 } else { bound };
            let v = big(rng.gen_range(-bound..=hi));
            m.set(i, j, v.clone());
            if j < i {
                m.set(j, i, &v + x.get(j, i));
            }
        }
    }
    validate(m).unwrap()
}

/// Valid Seifert matrix of size at most `2 * max_genus` with entries bounded
/// by `bound`: a standardized matrix scrambled by elementary congruences
/// that keep the entries in range.
pub fn random_seifert(rng: &mut ChaCha8Rng, max_genus: usize, bound: i64) -> SeifertMatrix {
    let genus = rng.gen_range(0..=max_genus);
    let mut m = random_standardized(rng, genus, bound).into_matrix();
    let n = m.size();
    for _ in 0..rng.gen_range(0..8) {
        if n < 2 {
            break;
        }
        let mut trial = m.clone();
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        match rng.gen_range(0..3) {
            0 => trial.congruence_add(i, j, &big(if rng.gen_bool(0.5) { 1 } else { -1 })),
            1 => trial.congruence_swap(i, j),
            _ => trial.congruence_negate(i),
        }
        if trial.max_abs_entry() <= big(bound) {
            m = trial;
        }
    }
    validate(m).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<BigInt> {
    (0..len).map(|_| big(rng.gen_range(-bound..=bound))).collect()
}

/// Random pure braid on `n >= 2` strands with at most `max_len` letters.
pub fn random_pure_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> PureBraidWord {
    let len = rng.gen_range(0..=max_len);
    let triples: Vec<(usize, usize, i64)> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(i + 1..=n);
            (i, j, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    PureBraidWord::from_triples(n, &triples).unwrap()
}
