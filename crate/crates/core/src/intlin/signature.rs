use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Signature of a symmetric matrix, by symmetric elimination over the rationals.
///
/// A nonzero diagonal pivot contributes its sign. When every remaining diagonal
/// entry is zero but some off-diagonal `b` is not, the hyperbolic block
/// `[[0, b], [b, 0]]` contributes one positive and one negative direction. An
/// all-zero remainder contributes nothing.
pub fn signature(q: &IntMatrix) -> Result<i64> {
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = q.size();
    let mut w: Vec<Vec<BigRational>> = q
        .rows()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !w[i][i].is_zero()) {
            let p = active.remove(pos);
            let d = w[p][p].clone();
            sig += if d.is_positive() { 1 } else { -1 };
            for &i in &active {
                if w[i][p].is_zero() {
                    continue;
                }
                let f = &w[i][p] / &d;
                for &j in &active {
                    let v = &f * &w[p][j];
                    w[i][j] -= v;
                }
            }
            continue;
        }

        let pair = active.iter().enumerate().find_map(|(x, &p)| {
            active[x + 1..].iter().find(|&&r| !w[p][r].is_zero()).map(|&r| (p, r))
        });
        let Some((p, r)) = pair else { break };
        active.retain(|&i| i != p && i != r);
        let b = w[p][r].clone();
        // Schur complement against [[0, b], [b, 0]], whose inverse is [[0, 1/b], [1/b, 0]].
        let old = w.clone();
        for &i in &active {
            for &j in &active {
                let v = (&old[i][p] * &old[r][j] + &old[i][r] * &old[p][j]) / &b;
                w[i][j] -= v;
            }
        }
    }
    Ok(sig)
}
