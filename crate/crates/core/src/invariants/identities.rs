//! Definitions of the closed-form quantities by remainders and resultants.
//! These are independent of the closed forms and serve as oracles.
//!
//! Resultants use formal degrees (3 for `φ`, 2 for `ψ`, `P`, `Q`, 1 for
//! `φ″`), which turns every identity into a polynomial identity in the
//! coefficients that holds even when a leading coefficient vanishes.

use num_traits::Zero;

use super::{BinaryCubic, InvariantBundle, Matrix3x6, Quadratic, Traces};
use crate::exactalg::{rat, ratio, resultant_with_degrees, Rational, UniPoly};

pub fn psi_poly(tr: &Traces) -> UniPoly {
    UniPoly::new(vec![tr.psi02.clone(), rat(2) * &tr.psi11, tr.psi20.clone()])
}

pub fn mu_poly(tr: &Traces) -> UniPoly {
    UniPoly::new(vec![tr.mu01.clone(), tr.mu10.clone()])
}

pub fn quadratic_poly(w: &Quadratic) -> UniPoly {
    UniPoly::new(vec![w.c0.clone(), w.c1.clone(), w.c2.clone()])
}

fn as_quadratic(p: &UniPoly) -> Quadratic {
    Quadratic { c2: p.coeff(2), c1: p.coeff(1), c0: p.coeff(0) }
}

/// `Remainder(Φ30 ψ φ′, φ)`; requires `Φ30 ≠ 0`.
pub fn p_by_remainder(phi: &BinaryCubic, tr: &Traces) -> Quadratic {
    let v = phi.to_poly();
    let u = (&psi_poly(tr) * &v.derivative()).scale(&phi.phi30);
    as_quadratic(&u.remainder(&v).expect("phi30 must be nonzero"))
}

/// `½ Remainder(P φ″, φ)`; requires `Φ30 ≠ 0`.
pub fn q_by_remainder(phi: &BinaryCubic, p: &Quadratic) -> Quadratic {
    let v = phi.to_poly();
    let u = &quadratic_poly(p) * &v.derivative().derivative();
    as_quadratic(&u.remainder(&v).expect("phi30 must be nonzero").scale(&ratio(1, 2)))
}

/// `½ (P φ″ − 6 p₂ φ)`, the reduction written without division.
pub fn q_by_reduction(phi: &BinaryCubic, p: &Quadratic) -> Quadratic {
    let v = phi.to_poly();
    let pp = quadratic_poly(p);
    let u = &(&pp * &v.derivative().derivative()) - &v.scale(&(rat(6) * &p.c2));
    as_quadratic(&u.scale(&ratio(1, 2)))
}

/// `Res(φ, φ′) / (27 Φ30)`.
pub fn disc_phi_by_resultant(phi: &BinaryCubic) -> Rational {
    let v = phi.to_poly();
    resultant_with_degrees(&v, 3, &v.derivative(), 2) / (rat(27) * &phi.phi30)
}

/// `Res(φ″, φ)`.
pub fn res_phi2_phi(phi: &BinaryCubic) -> Rational {
    let v = phi.to_poly();
    resultant_with_degrees(&v.derivative().derivative(), 1, &v, 3)
}

/// `Res(ψ, φ)`.
pub fn res_psi_phi(b: &InvariantBundle) -> Rational {
    resultant_with_degrees(&psi_poly(&b.traces), 2, &b.phi.to_poly(), 3)
}

/// `A₀ = sr₀(φ, P) = −Res(φ, P)`.
pub fn a0(b: &InvariantBundle) -> Rational {
    -resultant_with_degrees(&b.phi.to_poly(), 3, &quadratic_poly(&b.p), 2)
}

/// Closed form of `A₀`: `−27 Φ30² Res(ψ, φ) Disc(Φ)`.
pub fn a0_identity(b: &InvariantBundle) -> Rational {
    rat(-27) * &b.phi.phi30 * &b.phi.phi30 * res_psi_phi(b) * &b.disc_phi
}

/// The same product without the factor 27.
pub fn a0_identity_unscaled(b: &InvariantBundle) -> Rational {
    -(&b.phi.phi30 * &b.phi.phi30 * res_psi_phi(b) * &b.disc_phi)
}

/// `B₀ = sr₀(φ, Q) = −Res(φ, Q)`.
pub fn b0(b: &InvariantBundle) -> Rational {
    -resultant_with_degrees(&b.phi.to_poly(), 3, &quadratic_poly(&b.q), 2)
}

/// Closed form of `B₀`: `27 Φ30² Res(ψ, φ) R Disc(Φ)`.
pub fn b0_identity(b: &InvariantBundle) -> Rational {
    rat(27) * &b.phi.phi30 * &b.phi.phi30 * res_psi_phi(b) * &b.r * &b.disc_phi
}

/// The same product without the factor 27.
pub fn b0_identity_unscaled(b: &InvariantBundle) -> Rational {
    &b.phi.phi30 * &b.phi.phi30 * res_psi_phi(b) * &b.r * &b.disc_phi
}

/// Rank of the 3×6 matrix `M` by fraction-free elimination.
pub fn rank_m(m: &Matrix3x6) -> usize {
    let mut rows: Vec<Vec<Rational>> = m.rows.iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..6 {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        for r in rank + 1..rows.len() {
            let factor = &rows[r][col] / &rows[rank][col];
            for c in col..6 {
                let sub = &factor * &rows[rank][c];
                rows[r][c] -= sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::QuadraticForm;

    fn bundle(f: [i64; 6], g: [i64; 6]) -> InvariantBundle {
        InvariantBundle::compute(&QuadraticForm::from_ints(f), &QuadraticForm::from_ints(g))
    }

    #[test]
    fn in_representative_identities() {
        let b = bundle([3, -2, -1, 0, 0, 0], [3, -1, -2, 0, 0, 0]);
        assert_eq!(psi_poly(&b.traces), UniPoly::from_ints(&[-7, -13, -7]));
        assert_eq!(p_by_remainder(&b.phi, &b.traces), b.p);
        assert_eq!(quadratic_poly(&b.p), UniPoly::from_ints(&[-360, -819, -441]));
        assert_eq!(a0(&b), rat(-19131876));
        assert_eq!(a0_identity(&b), a0(&b));
        assert_eq!(a0_identity_unscaled(&b), rat(-708588));
        assert_eq!(b0(&b), b0_identity(&b));
        assert_eq!(disc_phi_by_resultant(&b.phi), b.disc_phi);
        assert_eq!(res_phi2_phi(&b.phi), rat(8) * &b.phi.phi30 * &b.r);
        assert_eq!(q_by_remainder(&b.phi, &b.p), b.q);
        assert_eq!(q_by_reduction(&b.phi, &b.p), b.q);
    }

    #[test]
    fn rank_of_m() {
        let f = QuadraticForm::from_ints([0, 1, 0, 0, 1, 0]);
        let g = QuadraticForm::from_ints([0, 2, 0, 0, 1, 0]);
        assert_eq!(rank_m(&super::super::matrix_m(&f, &g)), 2);
        let f = QuadraticForm::from_ints([3, -2, -1, 0, 0, 0]);
        let g = QuadraticForm::from_ints([3, -1, -2, 0, 0, 0]);
        assert_eq!(rank_m(&super::super::matrix_m(&f, &g)), 3);
    }
}
