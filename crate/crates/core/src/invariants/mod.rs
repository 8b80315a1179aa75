//! Invariants, covariants and combinants of a couple of ternary quadratic
//! forms.
//!
//! Every quantity is a closed-form polynomial in the coefficients, generic
//! over [`Scalar`] so that the same code evaluates a single couple over the
//! rationals or a whole one-parameter family over `Q[z]`.
//!
//! Sign convention: [`disc_phi`] is `Res(φ, φ′) / (27 Φ30)`, which equals
//! minus the textbook cubic discriminant divided by 27. Three distinct real
//! roots give a negative value.

mod identities;

pub use identities::*;

use crate::exactalg::{Rational, Scalar, UniPoly};
use crate::quadform::{omega, QuadraticForm};

/// `Φ(t, u) = Disc(t f + u g) = Φ30 t³ + Φ21 t²u + Φ12 tu² + Φ03 u³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCubic<S = Rational> {
    pub phi30: S,
    pub phi21: S,
    pub phi12: S,
    pub phi03: S,
}

impl<S: Scalar> BinaryCubic<S> {
    pub fn new(phi30: S, phi21: S, phi12: S, phi03: S) -> Self {
        BinaryCubic { phi30, phi21, phi12, phi03 }
    }

    pub fn coeffs(&self) -> [S; 4] {
        [self.phi30.clone(), self.phi21.clone(), self.phi12.clone(), self.phi03.clone()]
    }
}

impl BinaryCubic<Rational> {
    /// The dehomogenization `φ(t) = Φ(t, 1)`.
    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(vec![
            self.phi03.clone(),
            self.phi12.clone(),
            self.phi21.clone(),
            self.phi30.clone(),
        ])
    }
}

/// Ternary cubic, coefficients indexed by [`CUBIC_MONOMIALS`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TernaryCubic<S = Rational> {
    pub coeffs: [S; 10],
}

/// Exponents of x, y, z for each slot of [`TernaryCubic::coeffs`].
pub const CUBIC_MONOMIALS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [0, 3, 0],
    [0, 0, 3],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [0, 2, 1],
    [1, 0, 2],
    [0, 1, 2],
    [1, 1, 1],
];

impl<S: Scalar> TernaryCubic<S> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, p: &[S; 3]) -> S {
        let mut acc = S::zero();
        for (c, e) in self.coeffs.iter().zip(CUBIC_MONOMIALS) {
            let mut term = c.clone();
            for (v, k) in p.iter().zip(e) {
                for _ in 0..k {
                    term = term * v.clone();
                }
            }
            acc = acc + term;
        }
        acc
    }
}

/// Rows: matrix entries of `adj(F)`, of the polar `Ω` and of `adj(G)`.
/// Columns `1, 2, 3` are the diagonal entries, `1̄, 2̄, 3̄` the off-diagonal
/// entries at positions (2,3), (1,3), (1,2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix3x6<S = Rational> {
    pub rows: [[S; 6]; 3],
}

impl<S: Scalar> Matrix3x6<S> {
    /// Maximal minor on the given columns, in the given order.
    pub fn minor(&self, cols: [usize; 3]) -> S {
        let m: Vec<Vec<S>> = self
            .rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        crate::exactalg::det_cofactor(&m)
    }

    pub fn all_minors_vanish(&self) -> bool {
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    if !self.minor([i, j, k]).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `ψ(t) = Ψ20 t² + 2 Ψ11 t + Ψ02` and `μ(t) = μ10 t + μ01`, from
/// `det(vI − Matrix(tf + g)) = v³ − μ v² + ψ v − φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Traces<S = Rational> {
    pub psi20: S,
    pub psi11: S,
    pub psi02: S,
    pub mu10: S,
    pub mu01: S,
}

/// A quadratic `c2 t² + c1 t + c0`, used for `P` and `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic<S = Rational> {
    pub c2: S,
    pub c1: S,
    pub c0: S,
}

/// The binary quadratic `H20 t² + H11 tu + H02 u²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hessian<S = Rational> {
    pub h20: S,
    pub h11: S,
    pub h02: S,
}

impl<S: Scalar> Hessian<S> {
    pub fn is_zero(&self) -> bool {
        self.h20.is_zero() && self.h11.is_zero() && self.h02.is_zero()
    }
}

/// Everything the decision procedure consumes, computed once per couple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle<S = Rational> {
    pub phi: BinaryCubic<S>,
    pub traces: Traces<S>,
    pub disc_phi: S,
    pub hessian: Hessian<S>,
    pub g: TernaryCubic<S>,
    pub p: Quadratic<S>,
    pub a1: S,
    pub q: Quadratic<S>,
    pub b1: S,
    pub r: S,
    pub antisym: S,
    pub trace_t: S,
}

impl<S: Scalar> InvariantBundle<S> {
    pub fn compute(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> Self {
        let phi = characteristic_form(f, g);
        let traces = psi_mu(f, g);
        let p = p_poly(&phi, &traces);
        let q = q_poly(&phi, &p);
        InvariantBundle {
            disc_phi: disc_phi(&phi),
            hessian: hessian(&phi),
            g: covariant_g(f, g),
            a1: subresultant_1(&phi, &p),
            b1: subresultant_1(&phi, &q),
            r: r_invariant(&phi),
            antisym: antisym_invariant(&phi),
            trace_t: trace_t(&phi, &traces),
            phi,
            traces,
            p,
            q,
        }
    }
}

/// `Σ adj(F)_ij G_ij` written on form coefficients: mixed terms carry ½.
fn tangential_pairing<S: Scalar>(ft: &QuadraticForm<S>, g: &QuadraticForm<S>) -> S {
    ft.a200.clone() * g.a200.clone()
        + ft.a020.clone() * g.a020.clone()
        + ft.a002.clone() * g.a002.clone()
        + (ft.a110.clone() * g.a110.clone()
            + ft.a101.clone() * g.a101.clone()
            + ft.a011.clone() * g.a011.clone())
        .half()
}

pub fn characteristic_form<S: Scalar>(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> BinaryCubic<S> {
    BinaryCubic {
        phi30: f.discriminant(),
        phi21: tangential_pairing(&f.tangential(), g),
        phi12: tangential_pairing(&g.tangential(), f),
        phi03: g.discriminant(),
    }
}

/// `Res(φ, φ′) / (27 Φ30)`, expanded so that no division occurs.
pub fn disc_phi<S: Scalar>(phi: &BinaryCubic<S>) -> S {
    let [a, b, c, d] = phi.coeffs();
    // Textbook discriminant of a t³ + b t² + c t + d.
    let delta = b.square() * c.square()
        - S::from_int(4) * a.clone() * c.cube()
        - S::from_int(4) * b.cube() * d.clone()
        - S::from_int(27) * a.square() * d.square()
        + S::from_int(18) * a * b * c * d;
    -delta.scale(&Rational::new(1.into(), 27.into()))
}

/// The same discriminant as a 4×4 determinant divided by 81.
pub fn disc_phi_matrix<S: Scalar>(phi: &BinaryCubic<S>) -> S {
    let [a, b, c, d] = phi.coeffs();
    let n = S::from_int;
    let m = vec![
        vec![n(3) * a.clone(), n(2) * b.clone(), c.clone(), S::zero()],
        vec![S::zero(), n(3) * a.clone(), n(2) * b.clone(), c.clone()],
        vec![b.clone(), n(2) * c.clone(), n(3) * d.clone(), S::zero()],
        vec![S::zero(), b.clone(), n(2) * c.clone(), n(3) * d.clone()],
    ];
    crate::exactalg::det_cofactor(&m).scale(&Rational::new(1.into(), 81.into()))
}

pub fn hessian<S: Scalar>(phi: &BinaryCubic<S>) -> Hessian<S> {
    let [a, b, c, d] = phi.coeffs();
    let n = S::from_int;
    Hessian {
        h20: n(4) * (n(3) * a.clone() * c.clone() - b.square()),
        h11: n(4) * (n(9) * a * d.clone() - b.clone() * c.clone()),
        h02: n(4) * (n(3) * b * d - c.square()),
    }
}

pub fn psi_mu<S: Scalar>(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> Traces<S> {
    Traces {
        psi20: f.tangential().trace(),
        psi11: omega(f, g).trace().half(),
        psi02: g.tangential().trace(),
        mu10: f.trace(),
        mu01: g.trace(),
    }
}

/// Matrix entries of a symmetric-matrix form in the column order of [`Matrix3x6`].
fn matrix_row<S: Scalar>(q: &QuadraticForm<S>) -> [S; 6] {
    [
        q.a200.clone(),
        q.a020.clone(),
        q.a002.clone(),
        q.a011.half(),
        q.a101.half(),
        q.a110.half(),
    ]
}

pub fn matrix_m<S: Scalar>(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> Matrix3x6<S> {
    Matrix3x6 {
        rows: [
            matrix_row(&f.tangential()),
            matrix_row(&omega(f, g)),
            matrix_row(&g.tangential()),
        ],
    }
}

/// The autopolar triangle covariant: a ternary cubic whose coefficients are
/// combinations of the maximal minors of [`matrix_m`].
pub fn covariant_g<S: Scalar>(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> TernaryCubic<S> {
    let m = matrix_m(f, g);
    const C1: usize = 0;
    const C2: usize = 1;
    const C3: usize = 2;
    const B1: usize = 3;
    const B2: usize = 4;
    const B3: usize = 5;
    let k = |cols| m.minor(cols);
    let two = |x: S| x.clone() + x;
    let four = |x: S| S::from_int(4) * x;
    TernaryCubic {
        coeffs: [
            -k([B1, C2, C3]),
            -k([C1, B2, C3]),
            -k([C1, C2, B3]),
            k([B2, C2, C3]) + two(k([B1, B3, C3])),
            k([B3, C2, C3]) + two(k([B1, C2, B2])),
            k([C1, B1, C3]) + two(k([B3, B2, C3])),
            k([C1, B3, C3]) + two(k([C1, B2, B1])),
            k([C1, C2, B1]) + two(k([B2, C2, B3])),
            k([C1, C2, B2]) + two(k([C1, B1, B3])),
            four(k([B1, B2, B3])) - k([C1, C2, C3]),
        ],
    }
}

/// Closed form of `P = Remainder(Φ30 ψ φ′, φ)`.
pub fn p_poly<S: Scalar>(phi: &BinaryCubic<S>, tr: &Traces<S>) -> Quadratic<S> {
    let [a, b, c, d] = phi.coeffs();
    let (s20, s11, s02) = (tr.psi20.clone(), tr.psi11.clone(), tr.psi02.clone());
    let n = S::from_int;
    Quadratic {
        c2: n(3) * a.square() * s02.clone()
            - n(2) * b.clone() * a.clone() * s11.clone()
            - n(2) * c.clone() * a.clone() * s20.clone()
            + b.square() * s20.clone(),
        c1: n(2) * b.clone() * a.clone() * s02.clone()
            - n(4) * c.clone() * a.clone() * s11.clone()
            + c.clone() * b.clone() * s20.clone()
            - n(3) * d.clone() * a.clone() * s20.clone(),
        c0: c * a.clone() * s02 - n(6) * d.clone() * a * s11 + d * b * s20,
    }
}

/// Closed form of `Q = ½ Remainder(P φ″, φ)`.
pub fn q_poly<S: Scalar>(phi: &BinaryCubic<S>, p: &Quadratic<S>) -> Quadratic<S> {
    let [a, b, c, d] = phi.coeffs();
    let (p2, p1, p0) = (p.c2.clone(), p.c1.clone(), p.c0.clone());
    let n = S::from_int;
    Quadratic {
        c2: n(3) * p1.clone() * a.clone() - n(2) * p2.clone() * b.clone(),
        c1: n(3) * p0.clone() * a + p1 * b.clone() - n(3) * p2.clone() * c,
        c0: p0 * b - n(3) * p2 * d,
    }
}

/// `sr₁(φ, W)` for a quadratic `W`: the 3×3 determinant giving `A1`
/// (with `W = P`) and `B1` (with `W = Q`).
pub fn subresultant_1<S: Scalar>(phi: &BinaryCubic<S>, w: &Quadratic<S>) -> S {
    let m = vec![
        vec![phi.phi30.clone(), phi.phi21.clone(), phi.phi12.clone()],
        vec![S::zero(), w.c2.clone(), w.c1.clone()],
        vec![w.c2.clone(), w.c1.clone(), w.c0.clone()],
    ];
    crate::exactalg::det_cofactor(&m)
}

/// `Res(φ″, φ) / (8 Φ30) = 27 Φ30² Φ03 + 2 Φ21³ − 9 Φ30 Φ21 Φ12`.
pub fn r_invariant<S: Scalar>(phi: &BinaryCubic<S>) -> S {
    let [a, b, c, d] = phi.coeffs();
    S::from_int(27) * a.square() * d + S::from_int(2) * b.cube() - S::from_int(9) * a * b * c
}

/// `𝒜 = Φ30 Φ12³ − Φ03 Φ21³`.
pub fn antisym_invariant<S: Scalar>(phi: &BinaryCubic<S>) -> S {
    phi.phi30.clone() * phi.phi12.cube() - phi.phi03.clone() * phi.phi21.cube()
}

/// `T = tr(Φ12 F − Φ21 G) = Φ12 μ10 − Φ21 μ01`.
pub fn trace_t<S: Scalar>(phi: &BinaryCubic<S>, tr: &Traces<S>) -> S {
    phi.phi12.clone() * tr.mu10.clone() - phi.phi21.clone() * tr.mu01.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn q(c: [i64; 6]) -> QuadraticForm {
        QuadraticForm::from_ints(c)
    }

    fn cubic(c: [Rational; 4]) -> BinaryCubic {
        let [a, b, cc, d] = c;
        BinaryCubic::new(a, b, cc, d)
    }

    #[test]
    fn characteristic_forms_of_representatives() {
        let phi = characteristic_form(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0]));
        assert_eq!(phi.coeffs(), [6, 21, 21, 6].map(rat));
        let phi = characteristic_form(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0]));
        assert_eq!(phi.coeffs(), [1, 3, 3, 1].map(|n| ratio(n, 4)));
        let f = q([2, -1, 3, 1, -2, 5]);
        let phi = characteristic_form(&f, &f);
        let d = f.discriminant();
        assert_eq!(phi.coeffs(), [1, 3, 3, 1].map(|n| rat(n) * &d));
    }

    #[test]
    fn mixed_terms_enter_with_weight() {
        // Disc(xy + z²) = −1/4.
        let f = q([0, 0, 1, 1, 0, 0]);
        let phi = characteristic_form(&f, &q([1, 1, 1, 0, 0, 0]));
        assert_eq!(phi.phi30, ratio(-1, 4));
    }

    #[test]
    fn discriminant_of_phi() {
        let phi = cubic([6, 21, 21, 6].map(rat));
        assert_eq!(disc_phi(&phi), rat(-27));
        assert_eq!(disc_phi_matrix(&phi), rat(-27));
        assert_eq!(disc_phi(&cubic([1, 3, 3, 1].map(|n| ratio(n, 4)))), rat(0));
        // Roots −1, ±i: (t+1)(t²+1).
        assert!(disc_phi(&cubic([1, 1, 1, 1].map(rat))) > rat(0));
    }

    #[test]
    fn hessians() {
        let h = hessian(&cubic([6, 21, 21, 6].map(rat)));
        assert_eq!([h.h20, h.h11, h.h02], [-252, -468, -252].map(rat));
        assert!(hessian(&cubic([1, 3, 3, 1].map(|n| ratio(n, 4)))).is_zero());
        assert!(hessian(&cubic([1, 0, 0, 0].map(rat))).is_zero());
    }

    #[test]
    fn traces() {
        let f0 = q([1, 1, -1, 0, 0, 0]);
        let t = psi_mu(&f0, &q([1, 2, 3, 0, 0, 0]));
        assert_eq!(t.psi20, rat(-1));
        assert_eq!(t.mu10, rat(1));
        let f = q([2, -1, 3, 1, -2, 5]);
        let t = psi_mu(&f, &f);
        assert_eq!(&t.psi11 * &t.psi11, &t.psi20 * &t.psi02);
        assert_eq!(t.psi11, t.psi20);
    }

    #[test]
    fn covariant_g_vanishing() {
        assert!(covariant_g(&q([0, 1, 0, 0, 1, 0]), &q([0, 2, 0, 0, 1, 0])).is_zero());
        assert!(covariant_g(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0])).is_zero());
        assert!(!covariant_g(&q([0, 0, 0, 1, -1, 1]), &q([0, 0, 0, 2, -2, 1])).is_zero());
    }

    #[test]
    fn covariant_g_of_diagonal_pencil_is_the_triangle() {
        // The common self-polar triangle of two diagonal forms is xyz = 0.
        let g = covariant_g(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0]));
        assert!(g.coeffs[..9].iter().all(|c| *c == rat(0)));
        assert_ne!(g.coeffs[9], rat(0));
    }

    #[test]
    fn antisymmetric_and_trace() {
        let b = InvariantBundle::compute(&q([0, 1, 0, 0, 1, 0]), &q([0, 2, 0, 0, 1, 0]));
        assert_eq!(
            b.phi.coeffs(),
            [ratio(-1, 4), rat(-1), ratio(-5, 4), ratio(-1, 2)]
        );
        assert_eq!(b.antisym, ratio(-3, 256));
        let f = q([-1, -1, 0, 0, 1, 0]);
        let g = q([1, -1, 0, 0, 1, 0]);
        let b = InvariantBundle::compute(&f, &g);
        assert_eq!(b.traces.mu10, rat(-2));
        assert_eq!(b.traces.mu01, rat(0));
        assert_eq!(b.trace_t, ratio(-3, 2));
        let same = InvariantBundle::compute(&f, &f);
        assert_eq!(same.antisym, rat(0));
        assert_eq!(same.trace_t, rat(0));
    }

    #[test]
    fn r_vanishes_on_a_perfect_cube() {
        assert_eq!(r_invariant(&cubic([1, 3, 3, 1].map(rat))), rat(0));
    }

    #[test]
    fn orbit_i_signs_on_in() {
        let b = InvariantBundle::compute(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0]));
        assert!(b.p.c2 < rat(0));
        assert!(&b.phi.phi30 * &b.a1 > rat(0));
    }
}
