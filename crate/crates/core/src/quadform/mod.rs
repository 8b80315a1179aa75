//! Ternary quadratic forms and their matrices.
//!
//! Coefficient order everywhere is `a200 a020 a002 a110 a101 a011`, i.e. the
//! coefficients of `x², y², z², xy, xz, yz`. The symmetric matrix carries
//! halves of the mixed coefficients off the diagonal.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{format_rational, parse_rational, ExactAlgError, Rational, Scalar, Sign};

/// `a200 x² + a020 y² + a002 z² + a110 xy + a101 xz + a011 yz`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm<S = Rational> {
    pub a200: S,
    pub a020: S,
    pub a002: S,
    pub a110: S,
    pub a101: S,
    pub a011: S,
}

/// Symmetric 3×3 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix3<S = Rational> {
    pub m: [[S; 3]; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointPosition {
    Inside,
    On,
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadFormError {
    #[error("expected 6 coefficients, found {0}")]
    Arity(usize),
    #[error(transparent)]
    Parse(#[from] ExactAlgError),
    #[error("conic is degenerate")]
    Degenerate,
    #[error("conic has no real points")]
    Empty,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("transformation matrix is singular")]
    SingularTransform,
}

impl<S: Scalar> QuadraticForm<S> {
    pub fn from_coeffs(c: [S; 6]) -> Self {
        let [a200, a020, a002, a110, a101, a011] = c;
        QuadraticForm { a200, a020, a002, a110, a101, a011 }
    }

    pub fn coeffs(&self) -> [S; 6] {
        [
            self.a200.clone(),
            self.a020.clone(),
            self.a002.clone(),
            self.a110.clone(),
            self.a101.clone(),
            self.a011.clone(),
        ]
    }

    pub fn coeff_refs(&self) -> [&S; 6] {
        [&self.a200, &self.a020, &self.a002, &self.a110, &self.a101, &self.a011]
    }

    pub fn zero() -> Self {
        Self::from_coeffs(std::array::from_fn(|_| S::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_refs().iter().all(|c| c.is_zero())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> QuadraticForm<T> {
        QuadraticForm::from_coeffs(self.coeff_refs().map(f))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        self.map(|c| c.scale(q))
    }

    /// `t·self + other`, coefficientwise.
    pub fn add(&self, other: &Self) -> Self {
        let a = self.coeffs();
        let b = other.coeffs();
        let mut it = a.into_iter().zip(b).map(|(x, y)| x + y);
        Self::from_coeffs(std::array::from_fn(|_| it.next().unwrap()))
    }

    pub fn matrix(&self) -> SymMatrix3<S> {
        let h = |c: &S| c.half();
        SymMatrix3 {
            m: [
                [self.a200.clone(), h(&self.a110), h(&self.a101)],
                [h(&self.a110), self.a020.clone(), h(&self.a011)],
                [h(&self.a101), h(&self.a011), self.a002.clone()],
            ],
        }
    }

    pub fn from_matrix(m: &SymMatrix3<S>) -> Self {
        let two = |c: &S| c.clone() + c.clone();
        QuadraticForm {
            a200: m.m[0][0].clone(),
            a020: m.m[1][1].clone(),
            a002: m.m[2][2].clone(),
            a110: two(&m.m[0][1]),
            a101: two(&m.m[0][2]),
            a011: two(&m.m[1][2]),
        }
    }

    /// `det(Matrix(f))`.
    pub fn discriminant(&self) -> S {
        self.matrix().det()
    }

    /// The form whose matrix is the cofactor matrix of `Matrix(f)`.
    pub fn tangential(&self) -> Self {
        Self::from_matrix(&self.matrix().adjugate())
    }

    pub fn eval(&self, p: &[S; 3]) -> S {
        let [x, y, z] = p;
        self.a200.clone() * x.square()
            + self.a020.clone() * y.square()
            + self.a002.clone() * z.square()
            + self.a110.clone() * x.clone() * y.clone()
            + self.a101.clone() * x.clone() * z.clone()
            + self.a011.clone() * y.clone() * z.clone()
    }

    pub fn trace(&self) -> S {
        self.a200.clone() + self.a020.clone() + self.a002.clone()
    }
}

/// Middle coefficient of `adj(t f + g) = f̃ t² + Ω t + g̃`, the
/// polarization of the tangential form.
pub fn omega<S: Scalar>(f: &QuadraticForm<S>, g: &QuadraticForm<S>) -> QuadraticForm<S> {
    let [a200, a020, a002, a110, a101, a011] = f.coeffs();
    let [b200, b020, b002, b110, b101, b011] = g.coeffs();
    let cross = |p: &S, q: &S, r: &S, s: &S| p.clone() * q.clone() + r.clone() * s.clone();
    QuadraticForm {
        a200: cross(&a020, &b002, &a002, &b020) - (a011.clone() * b011.clone()).half(),
        a020: cross(&a002, &b200, &a200, &b002) - (a101.clone() * b101.clone()).half(),
        a002: cross(&a020, &b200, &a200, &b020) - (a110.clone() * b110.clone()).half(),
        a011: cross(&a110, &b101, &a101, &b110).half() - cross(&a200, &b011, &a011, &b200),
        a101: cross(&a011, &b110, &a110, &b011).half() - cross(&a020, &b101, &a101, &b020),
        a110: cross(&a011, &b101, &a101, &b011).half() - cross(&a002, &b110, &a110, &b002),
    }
}

impl<S: Scalar> SymMatrix3<S> {
    pub fn det(&self) -> S {
        let m = &self.m;
        m[0][0].clone() * self.cofactor(0, 0)
            + m[0][1].clone() * self.cofactor(0, 1)
            + m[0][2].clone() * self.cofactor(0, 2)
    }

    /// Signed cofactor `(-1)^{i+j}` times the complementary 2×2 minor.
    pub fn cofactor(&self, i: usize, j: usize) -> S {
        let r = [(i + 1) % 3, (i + 2) % 3];
        let c = [(j + 1) % 3, (j + 2) % 3];
        // Cyclic index order makes the sign come out automatically.
        self.m[r[0]][c[0]].clone() * self.m[r[1]][c[1]].clone()
            - self.m[r[0]][c[1]].clone() * self.m[r[1]][c[0]].clone()
    }

    pub fn adjugate(&self) -> SymMatrix3<S> {
        SymMatrix3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| self.cofactor(j, i))),
        }
    }

    pub fn trace(&self) -> S {
        self.m[0][0].clone() + self.m[1][1].clone() + self.m[2][2].clone()
    }

    /// Sum of the principal 2×2 minors.
    pub fn minor_sum(&self) -> S {
        self.cofactor(0, 0) + self.cofactor(1, 1) + self.cofactor(2, 2)
    }
}

impl Signature {
    /// Signature of a symmetric matrix from the signs of its trace, of the
    /// sum of its principal 2×2 minors and of its determinant (the
    /// coefficients of `det(vI − M)`).
    pub fn from_char_signs(trace: Sign, minor_sum: Sign, det: Sign) -> Signature {
        let chi = [-det, minor_sum, -trace, Sign::Positive];
        let reflected = [-det, -minor_sum, -trace, -Sign::Positive];
        let n_zero = chi.iter().take_while(|s| s.is_zero()).count();
        Signature {
            n_plus: sign_variations(&chi),
            n_minus: sign_variations(&reflected),
            n_zero,
        }
    }

    /// Indefinite: both positive and negative eigenvalues.
    pub fn is_indefinite(&self) -> bool {
        self.n_plus > 0 && self.n_minus > 0
    }
}

fn sign_variations(s: &[Sign]) -> usize {
    let nz: Vec<Sign> = s.iter().copied().filter(|x| !x.is_zero()).collect();
    nz.windows(2).filter(|w| w[0] != w[1]).count()
}

impl SymMatrix3<Rational> {
    pub fn from_rows(rows: [[Rational; 3]; 3]) -> Self {
        SymMatrix3 { m: rows }
    }

    /// Eigenvalue sign counts by Descartes' rule on `det(vI − M)`, exact
    /// because a symmetric matrix has only real eigenvalues.
    pub fn signature(&self) -> Signature {
        Signature::from_char_signs(
            Sign::of(&self.trace()),
            Sign::of(&self.minor_sum()),
            Sign::of(&self.det()),
        )
    }
}

impl QuadraticForm<Rational> {
    pub fn from_ints(c: [i64; 6]) -> Self {
        Self::from_coeffs(c.map(crate::exactalg::rat))
    }

    /// Six rationals separated by whitespace or commas.
    pub fn parse(s: &str) -> Result<Self, QuadFormError> {
        let parts: Vec<&str> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 6 {
            return Err(QuadFormError::Arity(parts.len()));
        }
        let mut vals = Vec::with_capacity(6);
        for p in parts {
            vals.push(parse_rational(p)?);
        }
        Ok(Self::from_coeffs(vals.try_into().unwrap()))
    }

    pub fn parse_strings<T: AsRef<str>>(parts: &[T]) -> Result<Self, QuadFormError> {
        if parts.len() != 6 {
            return Err(QuadFormError::Arity(parts.len()));
        }
        let mut vals = Vec::with_capacity(6);
        for p in parts {
            vals.push(parse_rational(p.as_ref())?);
        }
        Ok(Self::from_coeffs(vals.try_into().unwrap()))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeff_refs().iter().map(|c| format_rational(c)).collect()
    }

    pub fn signature(&self) -> Signature {
        self.matrix().signature()
    }

    pub fn is_proper(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Indefinite, i.e. the real zero locus is a curve.
    pub fn is_nonempty(&self) -> bool {
        let s = self.signature();
        s.n_plus > 0 && s.n_minus > 0
    }

    pub fn is_proportional(&self, other: &Self) -> bool {
        let a = self.coeffs();
        let b = other.coeffs();
        (0..6).all(|i| (i + 1..6).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
    }

    /// Position of a point relative to the conic: inside where `f` takes the
    /// sign of `Disc(f)`.
    pub fn point_position(&self, p: &[Rational; 3]) -> Result<PointPosition, QuadFormError> {
        if p.iter().all(|c| c.is_zero()) {
            return Err(QuadFormError::ZeroPoint);
        }
        let d = self.discriminant();
        if d.is_zero() {
            return Err(QuadFormError::Degenerate);
        }
        if !self.is_nonempty() {
            return Err(QuadFormError::Empty);
        }
        Ok(match Sign::of(&self.eval(p)) * Sign::of(&d) {
            Sign::Positive => PointPosition::Inside,
            Sign::Zero => PointPosition::On,
            Sign::Negative => PointPosition::Outside,
        })
    }

    /// The pullback `f∘θ`, whose matrix is `θᵀ M θ`.
    pub fn transform(&self, theta: &[[Rational; 3]; 3]) -> Result<Self, QuadFormError> {
        let t = SymMatrix3 { m: theta.clone() };
        if t.det().is_zero() {
            return Err(QuadFormError::SingularTransform);
        }
        let m = self.matrix().m;
        let out = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut acc = Rational::zero();
                for k in 0..3 {
                    for l in 0..3 {
                        acc += &theta[k][i] * &m[k][l] * &theta[l][j];
                    }
                }
                acc
            })
        });
        Ok(Self::from_matrix(&SymMatrix3 { m: out }))
    }

    pub fn to_f64(&self) -> [f64; 6] {
        self.coeff_refs().map(crate::exactalg::rational_to_f64)
    }
}

/// General 3×3 determinant for transformation matrices.
pub fn det3(t: &[[Rational; 3]; 3]) -> Rational {
    SymMatrix3 { m: t.clone() }.det()
}

impl<S: Scalar> fmt::Debug for QuadraticForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeff_refs()).finish()
    }
}

impl fmt::Display for QuadraticForm<Rational> {
    /// Polynomial notation, e.g. `3x^2 - 2y^2 - z^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MONOMIALS: [&str; 6] = ["x^2", "y^2", "z^2", "xy", "xz", "yz"];
        let mut first = true;
        for (c, m) in self.coeff_refs().iter().zip(MONOMIALS) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &&Rational::zero();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if abs.denom().is_one() {
                write!(f, "{}{m}", abs.numer())?;
            } else {
                write!(f, "({}){m}", format_rational(&abs))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn q(c: [i64; 6]) -> QuadraticForm {
        QuadraticForm::from_ints(c)
    }

    #[test]
    fn matrix_convention() {
        let m = q([0, 0, 0, 0, 1, 0]).matrix();
        assert_eq!(m.m[0][2], ratio(1, 2));
        assert_eq!(m.m[2][0], ratio(1, 2));
        assert_eq!(m.m[1][1], rat(0));
        assert_eq!(q([0, 0, 0, 2, 0, 0]).matrix().m[0][1], rat(1));
        let f0 = q([1, 1, -1, 0, 0, 0]).matrix();
        assert_eq!(f0.m[2][2], rat(-1));
    }

    #[test]
    fn discriminants() {
        assert_eq!(q([1, 1, -1, 0, 0, 0]).discriminant(), rat(-1));
        assert_eq!(q([0, 0, 0, 0, 1, 0]).discriminant(), rat(0));
        assert_eq!(q([1, 1, 1, 0, 0, 0]).discriminant(), rat(1));
    }

    #[test]
    fn tangential_forms() {
        assert_eq!(q([1, 1, -1, 0, 0, 0]).tangential(), q([-1, -1, 1, 0, 0, 0]));
        assert_eq!(q([1, 1, 1, 0, 0, 0]).tangential(), q([1, 1, 1, 0, 0, 0]));
        let t = q([0, 0, 0, 0, 1, 0]).tangential();
        assert_eq!(t.a020, ratio(-1, 4));
        assert!(t.coeff_refs().iter().enumerate().all(|(i, c)| i == 1 || c.is_zero()));
    }

    #[test]
    fn tangential_matches_displayed_minors() {
        let f = QuadraticForm::from_coeffs([3, -1, 2, 5, -7, 4].map(rat));
        let t = f.tangential();
        let [a200, a020, a002, a110, a101, a011] = f.coeffs();
        let h = |c: &Rational| c * ratio(1, 2);
        let det2 = |a: Rational, b: Rational, c: Rational, d: Rational| a * d - b * c;
        assert_eq!(t.a200, det2(a020.clone(), h(&a011), h(&a011), a002.clone()));
        assert_eq!(t.a011, rat(-2) * det2(a200.clone(), h(&a110), h(&a101), h(&a011)));
        assert_eq!(t.a101, rat(-2) * det2(a020.clone(), h(&a110), h(&a011), h(&a101)));
        assert_eq!(t.a110, rat(-2) * det2(a002.clone(), h(&a011), h(&a101), h(&a110)));
    }

    #[test]
    fn omega_is_the_polarization() {
        let f = q([1, 1, 1, 0, 0, 0]);
        let g = q([0, 0, 0, 0, 1, 0]);
        // adj(t f + g) by direct expansion at three values of t.
        let w = omega(&f, &g);
        for t in [rat(-2), rat(1), rat(3)] {
            let lhs = f.scale(&t).add(&g).tangential();
            let rhs = f.tangential().scale(&(&t * &t)).add(&w.scale(&t)).add(&g.tangential());
            assert_eq!(lhs, rhs);
        }
        assert_eq!(w.a200, rat(0));
        assert_eq!(w.a101, rat(-1));
        let ff = omega(&f, &f);
        assert_eq!(ff, f.tangential().scale(&rat(2)));
    }

    #[test]
    fn signatures() {
        let sig = |c| {
            let s = q(c).signature();
            (s.n_plus, s.n_minus, s.n_zero)
        };
        assert_eq!(sig([1, 1, 1, 0, 0, 0]), (3, 0, 0));
        assert_eq!(sig([1, 1, -1, 0, 0, 0]), (2, 1, 0));
        assert_eq!(sig([0, 0, 0, 0, 1, 0]), (1, 1, 1));
        assert_eq!(sig([0, 0, 0, 0, 0, 0]), (0, 0, 3));
    }

    #[test]
    fn predicates() {
        assert!(!q([0, 0, 0, 0, 1, 0]).is_proper());
        assert!(!q([1, 1, 1, 0, 0, 0]).is_nonempty());
        let f = q([3, -2, -1, 1, 0, 4]);
        assert!(f.scale(&rat(2)).is_proportional(&f.scale(&rat(-3))));
        assert!(!f.is_proportional(&q([3, -2, -1, 1, 0, 5])));
    }

    #[test]
    fn inside_points() {
        let f0 = q([1, 1, -1, 0, 0, 0]);
        let pos = |p: [i64; 3]| f0.point_position(&p.map(rat)).unwrap();
        assert_eq!(pos([0, 0, 1]), PointPosition::Inside);
        assert_eq!(pos([1, 0, 1]), PointPosition::On);
        assert_eq!(pos([1, 0, 0]), PointPosition::Outside);
        assert_eq!(f0.point_position(&[rat(0), rat(0), rat(0)]), Err(QuadFormError::ZeroPoint));
        assert_eq!(
            q([1, 1, 1, 0, 0, 0]).point_position(&[rat(1), rat(0), rat(0)]),
            Err(QuadFormError::Empty)
        );
    }

    #[test]
    fn parse_and_print() {
        let f = QuadraticForm::parse("3 -2 -1 0 0 1/2").unwrap();
        assert_eq!(f.to_strings(), ["3", "-2", "-1", "0", "0", "1/2"]);
        assert_eq!(f.to_string(), "3x^2 - 2y^2 - z^2 + (1/2)yz");
        assert_eq!(QuadraticForm::parse("1 2 3"), Err(QuadFormError::Arity(3)));
        assert!(QuadraticForm::parse("1 2 3 4 5 x").is_err());
    }

    #[test]
    fn pullback_by_permutation() {
        let f = q([1, 2, 3, 0, 0, 0]);
        let z = rat(0);
        let o = rat(1);
        // (x, y, z) -> (y, z, x)
        let theta = [
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z.clone(), o.clone()],
            [o.clone(), z.clone(), z.clone()],
        ];
        assert_eq!(f.transform(&theta).unwrap(), q([3, 1, 2, 0, 0, 0]));
        let sing = [[o.clone(), z.clone(), z.clone()], [o.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), o]];
        assert_eq!(f.transform(&sing), Err(QuadFormError::SingularTransform));
    }
}
