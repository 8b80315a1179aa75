use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// Determinant of a square rational matrix.
///
/// Rows are first cleared of denominators, then Bareiss' fraction-free
/// elimination runs over the integers, so every intermediate division is
/// exact.
pub fn det_bareiss(rows: Vec<Vec<Rational>>) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &l;
            row.into_iter()
                .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();

    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Rational::new(sign * &m[n - 1][n - 1], scale)
}

/// Laplace expansion along the first row; for the small fixed-size
/// determinants of the invariant formulas over any [`Scalar`].
pub fn det_cofactor<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    match n {
        0 => S::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut acc = S::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<S>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].clone() * det_cofactor(&minor);
                acc = if col % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn to_rat(m: &[&[i64]]) -> Vec<Vec<Rational>> {
        m.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = to_rat(&[&[2, -1, 0, 3], &[1, 0, 4, -2], &[0, 5, -3, 1], &[7, 2, 1, 0]]);
        assert_eq!(det_bareiss(m.clone()), det_cofactor(&m));
    }

    #[test]
    fn pivoting_and_singularity() {
        let m = to_rat(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(m), rat(-1));
        let s = to_rat(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(det_bareiss(s), rat(0));
    }

    #[test]
    fn fractional_entries() {
        let m = vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 5), ratio(1, 7)],
        ];
        assert_eq!(det_bareiss(m), ratio(1, 14) - ratio(1, 15));
    }
}
