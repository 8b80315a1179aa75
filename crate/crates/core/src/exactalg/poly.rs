use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{det_bareiss, format_rational, ExactAlgError, Rational, Sign};

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree order. The zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn identity() -> Self {
        UniPoly::from_ints(&[0, 1])
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign at `x`, by homogeneous integer evaluation.
    pub fn sign_at(&self, x: &Rational) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let (n, d) = (x.numer(), x.denom());
        // Σ c_i n^i d^(deg-i), which has the sign of p(x) since d > 0.
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c.numer() * (&l / c.denom()) * &dpow;
            dpow *= d;
        }
        Sign::of_int(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + super::rational_to_f64(c))
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, q: &Rational) -> UniPoly {
        if q.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly), ExactAlgError> {
        let dd = divisor.degree().ok_or(ExactAlgError::DivisionByZero)?;
        let lc = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    pub fn remainder(&self, divisor: &UniPoly) -> Result<UniPoly, ExactAlgError> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        // Primitive pseudo-remainder sequence over the integers.
        let mut a = self.to_primitive_integers();
        let mut b = other.to_primitive_integers();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_remainder(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        UniPoly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Integer coefficients with unit content and positive leading
    /// coefficient, as rationals. Same roots as `self`.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let ints = self.to_primitive_integers();
        UniPoly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Primitive integer coefficient vector with positive leading coefficient.
    pub fn to_primitive_integers(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let div = content * sign;
        ints.into_iter().map(|c| c / &div).collect()
    }

    /// `self(t + shift)`.
    pub fn taylor_shift(&self, shift: &Rational) -> UniPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &c[j + 1] * shift;
                c[j] += add;
            }
        }
        UniPoly::new(c)
    }

    /// `self(a * t)`.
    pub fn scale_argument(&self, a: &Rational) -> UniPoly {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= a;
        }
        UniPoly::new(out)
    }

    /// `t^deg * self(1/t)`.
    pub fn reversed(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::new(c)
    }

    /// `self(-t)`.
    pub fn reflect(&self) -> UniPoly {
        self.scale_argument(&(-Rational::one()))
    }

    /// Composition `self(other(t))`.
    pub fn compose(&self, other: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

/// Pseudo-remainder of `a` by `b` (both nonempty, trimmed), trimmed.
fn int_pseudo_remainder(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &lr * c;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c /= &content;
        }
    }
    v
}

/// Sylvester resultant of `u` and `v` taken with their actual degrees.
///
/// Computed as the determinant of the Sylvester matrix by fraction-free
/// elimination.
pub fn resultant(u: &UniPoly, v: &UniPoly) -> Result<Rational, ExactAlgError> {
    let du = u.degree().ok_or(ExactAlgError::ZeroPolynomial)?;
    let dv = v.degree().ok_or(ExactAlgError::ZeroPolynomial)?;
    Ok(resultant_with_degrees(u, du, v, dv))
}

/// Sylvester determinant with prescribed formal degrees `du >= deg u`,
/// `dv >= deg v`; leading formal coefficients may vanish.
pub fn resultant_with_degrees(u: &UniPoly, du: usize, v: &UniPoly, dv: usize) -> Rational {
    let n = du + dv;
    if n == 0 {
        return Rational::one();
    }
    let mut m = vec![vec![Rational::zero(); n]; n];
    // Row r of the U block holds t^(dv-1-r) U, columns ordered from degree n-1 down to 0.
    for r in 0..dv {
        for k in 0..=du {
            let deg = k + dv - 1 - r;
            m[r][n - 1 - deg] = u.coeff(k);
        }
    }
    for r in 0..du {
        for k in 0..=dv {
            let deg = k + du - 1 - r;
            m[dv + r][n - 1 - deg] = v.coeff(k);
        }
    }
    det_bareiss(m)
}

impl UniPoly {
    pub fn resultant(&self, other: &UniPoly) -> Result<Rational, ExactAlgError> {
        resultant(self, other)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: UniPoly) -> UniPoly {
        &self + &rhs
    }
}

impl Sub for UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: UniPoly) -> UniPoly {
        &self - &rhs
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn evaluates_exactly() {
        assert_eq!(p(&[2, 5, 4, 1]).eval(&rat(-1)), rat(0));
        assert_eq!(UniPoly::zero().eval(&rat(7)), rat(0));
        assert_eq!(p(&[0, 1]).eval(&ratio(3, 2)), ratio(3, 2));
    }

    #[test]
    fn remainders() {
        assert!(p(&[0, 0, 0, 1]).remainder(&p(&[0, 0, 1])).unwrap().is_zero());
        assert_eq!(p(&[1, 0, 1]).remainder(&p(&[-1, 1])).unwrap(), p(&[2]));
        assert_eq!(
            p(&[1, 2]).remainder(&UniPoly::zero()),
            Err(ExactAlgError::DivisionByZero)
        );
    }

    #[test]
    fn division_identity() {
        let u = p(&[3, -1, 4, 1, -5, 9]);
        let v = p(&[2, 0, -7]);
        let (q, r) = u.div_rem(&v).unwrap();
        assert!(r.degree().unwrap() < 2);
        assert_eq!(&(&q * &v) + &r, u);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(), rat(3));
        assert_eq!(resultant(&p(&[-5, 1]), &p(&[-5, 1])).unwrap(), rat(0));
        assert_eq!(
            resultant(&UniPoly::zero(), &p(&[1, 1])),
            Err(ExactAlgError::ZeroPolynomial)
        );
        // Constant against degree 3 is c^3.
        assert_eq!(resultant(&p(&[2]), &p(&[1, 0, 0, 1])).unwrap(), rat(8));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3])), p(&[1]));
    }

    #[test]
    fn shifts_and_reversal() {
        let q = p(&[1, 2, 3]);
        // q(t+1) = 3t^2 + 8t + 6
        assert_eq!(q.taylor_shift(&rat(1)), p(&[6, 8, 3]));
        assert_eq!(q.reversed(), p(&[3, 2, 1]));
        assert_eq!(q.compose(&p(&[1, 1])), p(&[6, 8, 3]));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(p(&[-229376, 0, 2516, 0, 49]).to_string(), "49*t^4 + 2516*t^2 - 229376");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }
}
