//! Real root isolation by Descartes bisection and exact sign evaluation at
//! real algebraic numbers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, ratio, rational_to_f64, ExactAlgError, Rational, Sign, UniPoly};

/// Number of sign alternations in the nonzero coefficient sequence.
pub fn descartes_variations(p: &UniPoly) -> Result<usize, ExactAlgError> {
    if p.is_zero() {
        return Err(ExactAlgError::ZeroPolynomial);
    }
    Ok(count_variations(p.coeffs().iter().map(Sign::of)))
}

fn count_variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for s in signs.filter(|s| !s.is_zero()) {
        if !last.is_zero() && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly, ExactAlgError> {
    if p.is_zero() {
        return Err(ExactAlgError::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(UniPoly::constant(Rational::one()));
    }
    let g = p.gcd(&p.derivative());
    Ok(p.exact_div(&g).monic())
}

/// Yun's algorithm: pairwise coprime monic squarefree factors `a_i` with
/// `p = lc(p) * prod a_i^i`. Constant factors are omitted.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>, ExactAlgError> {
    if p.is_zero() {
        return Err(ExactAlgError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let b = p.gcd(&dp);
    let mut c = p.exact_div(&b);
    let mut d = &dp.exact_div(&b) - &c.derivative();
    let mut mult = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        c = c.exact_div(&a);
        d = &d.exact_div(&a) - &c.derivative();
        if !a.is_constant() {
            out.push((a, mult));
        }
        mult += 1;
    }
    Ok(out)
}

/// Upper bound (Descartes) on the number of roots of `p` in the open
/// interval `(a, b)`, exact when it is 0 or 1.
pub fn roots_in_interval_bound(p: &UniPoly, a: &Rational, b: &Rational) -> usize {
    if p.is_zero() {
        return usize::MAX;
    }
    // Variations of (1+y)^n p((a + b y)/(1 + y)), scaled to integers:
    // Horner in X = A + B y, W = D (1 + y).
    let c = p.to_primitive_integers();
    let n = c.len() - 1;
    let ab = a.denom() * b.denom();
    let lin_x = [a.numer() * b.denom(), b.numer() * a.denom()];
    let lin_w = [ab.clone(), ab];
    let mul_lin = |v: &[BigInt], l: &[BigInt; 2]| -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); v.len() + 1];
        for (i, x) in v.iter().enumerate() {
            out[i] += x * &l[0];
            out[i + 1] += x * &l[1];
        }
        out
    };
    let mut acc = vec![c[n].clone()];
    let mut wpow = vec![BigInt::one()];
    for i in (0..n).rev() {
        wpow = mul_lin(&wpow, &lin_w);
        acc = mul_lin(&acc, &lin_x);
        for (k, w) in wpow.iter().enumerate() {
            acc[k] += &c[i] * w;
        }
    }
    int_variations(&acc)
}

/// The rational with least denominator in the open interval `(a, b)`.
pub fn simplest_rational_between(a: &Rational, b: &Rational) -> Rational {
    assert!(a < b, "empty interval");
    if a.is_negative() && b.is_positive() {
        return Rational::zero();
    }
    if !b.is_positive() {
        return -simplest_nonnegative(&-b, Some(&-a));
    }
    simplest_nonnegative(a, Some(b))
}

// 0 <= a < b (b = None means +infinity).
fn simplest_nonnegative(a: &Rational, b: Option<&Rational>) -> Rational {
    let fl = a.floor();
    let next = &fl + Rational::one();
    if b.is_none_or(|b| &next < b) {
        return next;
    }
    let b = b.unwrap();
    let lo = a - &fl;
    let hi = b - &fl;
    let inner_hi = if lo.is_zero() { None } else { Some(lo.recip()) };
    let y = simplest_nonnegative(&hi.recip(), inner_hi.as_ref());
    fl + y.recip()
}

/// A real algebraic number given by a squarefree defining polynomial and an
/// open isolating interval with rational endpoints.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: UniPoly,
    lo: Rational,
    hi: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraicNumberError {
    #[error("defining polynomial must be nonconstant")]
    Constant,
    #[error("interval endpoints must satisfy lo < hi")]
    EmptyInterval,
    #[error("defining polynomial vanishes at an endpoint")]
    RootAtEndpoint,
    #[error("interval does not isolate exactly one root")]
    NotIsolating,
}

impl AlgebraicNumber {
    /// Validates the isolating interval: the squarefree part of `poly` must
    /// change sign over `(lo, hi)` and have a Descartes bound of one there.
    pub fn new(poly: &UniPoly, lo: Rational, hi: Rational) -> Result<Self, AlgebraicNumberError> {
        if poly.is_constant() {
            return Err(AlgebraicNumberError::Constant);
        }
        if lo >= hi {
            return Err(AlgebraicNumberError::EmptyInterval);
        }
        let sq = squarefree_part(poly).unwrap().primitive();
        let (sl, sh) = (sq.sign_at(&lo), sq.sign_at(&hi));
        if sl.is_zero() || sh.is_zero() {
            return Err(AlgebraicNumberError::RootAtEndpoint);
        }
        if sl == sh || roots_in_interval_bound(&sq, &lo, &hi) != 1 {
            return Err(AlgebraicNumberError::NotIsolating);
        }
        Ok(AlgebraicNumber { poly: sq, lo, hi })
    }

    pub(crate) fn new_unchecked(poly: UniPoly, lo: Rational, hi: Rational) -> Self {
        AlgebraicNumber { poly, lo, hi }
    }

    pub fn defining_poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Halves the interval. Returns the root itself if the midpoint hits it.
    pub fn refine(&mut self) -> Option<Rational> {
        let mid = (&self.lo + &self.hi) * ratio(1, 2);
        let sm = self.poly.sign_at(&mid);
        if sm.is_zero() {
            return Some(mid);
        }
        if sm == self.poly.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
        None
    }

    /// Refines until the interval is narrower than `width`.
    pub fn refine_to(&mut self, width: &Rational) -> Option<Rational> {
        while &self.width() >= width {
            if let Some(r) = self.refine() {
                return Some(r);
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        let target = rat(1) / Rational::from_integer(BigInt::one() << 60u32);
        let tol = target.clone() * (self.lo.abs() + self.hi.abs() + rat(1));
        if let Some(r) = a.refine_to(&tol) {
            return rational_to_f64(&r);
        }
        rational_to_f64(&((&a.lo + &a.hi) * ratio(1, 2)))
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root of {} in ({}, {})",
            self.poly,
            super::format_rational(&self.lo),
            super::format_rational(&self.hi)
        )
    }
}

/// A real root: exact rational, or an irrational algebraic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRoot {
    Rational(Rational),
    Algebraic(AlgebraicNumber),
}

impl RealRoot {
    pub fn to_f64(&self) -> f64 {
        match self {
            RealRoot::Rational(r) => rational_to_f64(r),
            RealRoot::Algebraic(a) => a.to_f64(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            RealRoot::Rational(r) => Some(r),
            RealRoot::Algebraic(_) => None,
        }
    }

    /// Exact sign of `q` at this number.
    pub fn sign_of(&self, q: &UniPoly) -> Sign {
        match self {
            RealRoot::Rational(r) => q.sign_at(r),
            RealRoot::Algebraic(a) => sign_at_algebraic(q, a),
        }
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &RealRoot) -> Ordering {
        match (self, other) {
            (RealRoot::Rational(a), RealRoot::Rational(b)) => a.cmp(b),
            (RealRoot::Rational(r), RealRoot::Algebraic(a)) => cmp_rational_algebraic(r, a),
            (RealRoot::Algebraic(a), RealRoot::Rational(r)) => {
                cmp_rational_algebraic(r, a).reverse()
            }
            (RealRoot::Algebraic(a), RealRoot::Algebraic(b)) => cmp_algebraic(a, b),
        }
    }

    /// Compares against a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.cmp_exact(&RealRoot::Rational(r.clone()))
    }
}

fn cmp_rational_algebraic(r: &Rational, a: &AlgebraicNumber) -> Ordering {
    let mut a = a.clone();
    loop {
        if r <= &a.lo {
            return Ordering::Less;
        }
        if r >= &a.hi {
            return Ordering::Greater;
        }
        if a.poly.sign_at(r).is_zero() {
            return Ordering::Equal;
        }
        if let Some(root) = a.refine() {
            return r.cmp(&root);
        }
    }
}

fn cmp_algebraic(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    let mut a = a.clone();
    let mut b = b.clone();
    // Isolating intervals are usually disjoint after a few halvings; the gcd
    // is only needed when they keep overlapping.
    let mut g: Option<UniPoly> = None;
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > 8 && g.is_none() {
            g = Some(a.poly.gcd(&b.poly));
        }
        let common = g.as_ref().filter(|g| !g.is_constant());
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if let Some(g) = common {
            // Overlap I; g has at most one root in I since I lies inside both
            // isolating intervals. A sign change of g over I pins both numbers
            // to that root.
            let lo = (&a.lo).max(&b.lo).clone();
            let hi = (&a.hi).min(&b.hi).clone();
            let (sl, sh) = (g.sign_at(&lo), g.sign_at(&hi));
            if !sl.is_zero() && !sh.is_zero() && sl != sh {
                let a_in = a.poly.sign_at(&lo) != a.poly.sign_at(&hi);
                let b_in = b.poly.sign_at(&lo) != b.poly.sign_at(&hi);
                if a_in && b_in {
                    return Ordering::Equal;
                }
            }
        }
        if let Some(r) = a.refine() {
            return cmp_rational_algebraic(&r, &b);
        }
        if let Some(r) = b.refine() {
            return cmp_rational_algebraic(&r, &a).reverse();
        }
    }
}

/// Exact sign of `q` at `alpha`.
///
/// Zero is decided by the gcd of `q` with the defining polynomial; a nonzero
/// sign is read off once refinement leaves no root of `q` in the interval.
pub fn sign_at_algebraic(q: &UniPoly, alpha: &AlgebraicNumber) -> Sign {
    if q.is_constant() {
        return Sign::of(&q.coeff(0));
    }
    if roots_in_interval_bound(q, &alpha.lo, &alpha.hi) == 0 {
        return q.sign_at(&((&alpha.lo + &alpha.hi) * ratio(1, 2)));
    }
    let g = alpha.poly.gcd(q);
    if !g.is_constant() {
        let (sl, sh) = (g.sign_at(&alpha.lo), g.sign_at(&alpha.hi));
        if sl != sh {
            return Sign::Zero;
        }
    }
    let qs = squarefree_part(q).unwrap();
    let mut a = alpha.clone();
    loop {
        if roots_in_interval_bound(&qs, &a.lo, &a.hi) == 0 {
            let mid = (&a.lo + &a.hi) * ratio(1, 2);
            return q.sign_at(&mid);
        }
        if let Some(r) = a.refine() {
            return q.sign_at(&r);
        }
    }
}

// Integer polynomial kernels for the bisection, coefficients ascending.

fn int_variations(p: &[BigInt]) -> usize {
    count_variations(p.iter().map(Sign::of_int))
}

fn int_shift_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut c = p.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let add = c[j + 1].clone();
            c[j] += add;
        }
    }
    c
}

fn int_descartes_unit(p: &[BigInt]) -> usize {
    let mut r = p.to_vec();
    r.reverse();
    int_variations(&int_shift_one(&r))
}

/// `2^n p(x/2)`.
fn int_half(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    p.iter()
        .enumerate()
        .map(|(i, c)| c << (n - i))
        .collect()
}

/// Synthetic division by `x - 1`, assuming `p(1) = 0`.
fn int_div_x_minus_one(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        carry += &p[i + 1];
        q[i] = carry.clone();
    }
    q
}

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

enum Piece {
    Exact(Rational),
    Interval(Rational, Rational),
}

/// Roots of the integer polynomial `q` in `(0,1)`, mapped affinely onto
/// `(lo, hi)`. `q` must be squarefree and nonzero at 0 and 1.
fn bisect_unit(q: Vec<BigInt>, lo: Rational, hi: Rational, out: &mut Vec<Piece>) {
    let mut stack = vec![(q, lo, hi)];
    while let Some((q, lo, hi)) = stack.pop() {
        if q.len() <= 1 {
            continue;
        }
        match int_descartes_unit(&q) {
            0 => continue,
            1 => {
                out.push(Piece::Interval(lo, hi));
                continue;
            }
            _ => {}
        }
        let mid = (&lo + &hi) * ratio(1, 2);
        let mut left = int_half(&q);
        let at_one: BigInt = left.iter().sum();
        if at_one.is_zero() {
            out.push(Piece::Exact(mid.clone()));
            left = int_trim(int_div_x_minus_one(&left));
        }
        let right = int_shift_one(&left);
        stack.push((right, mid.clone(), hi));
        stack.push((left, lo, mid));
    }
}

/// Sorted real roots of a squarefree polynomial; rational roots exact.
pub(crate) fn real_roots_of_squarefree(p: &UniPoly) -> Vec<RealRoot> {
    let mut prim = p.primitive();
    if prim.is_constant() {
        return Vec::new();
    }
    let mut pieces = Vec::new();
    if prim.coeff(0).is_zero() {
        // Deflate, so that 0 is not a root at the bisection endpoints.
        pieces.push(Piece::Exact(Rational::zero()));
        prim = prim.exact_div(&UniPoly::identity());
    }
    let ints = prim.to_primitive_integers();
    if ints.len() > 1 {
        let n = ints.len() - 1;
        // Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two.
        let lead = ints[n].abs();
        let max_ratio = ints[..n]
            .iter()
            .map(|c| Rational::new(c.abs(), lead.clone()))
            .max()
            .unwrap_or_else(Rational::zero);
        let bound = max_ratio + Rational::one();
        let mut b = BigInt::one();
        while Rational::from_integer(b.clone()) <= bound {
            b <<= 1u32;
        }
        let scaled = |neg: bool| -> Vec<BigInt> {
            let mut pow = BigInt::one();
            ints.iter()
                .enumerate()
                .map(|(i, c)| {
                    let mut v = c * &pow;
                    if neg && i % 2 == 1 {
                        v = -v;
                    }
                    pow *= &b;
                    v
                })
                .collect()
        };
        let bq = Rational::from_integer(b.clone());
        bisect_unit(scaled(false), Rational::zero(), bq.clone(), &mut pieces);
        let mut neg = Vec::new();
        bisect_unit(scaled(true), Rational::zero(), bq, &mut neg);
        pieces.extend(neg.into_iter().map(|pc| match pc {
            Piece::Exact(r) => Piece::Exact(-r),
            Piece::Interval(a, b) => Piece::Interval(-b, -a),
        }));
    }
    // Intervals may end at exact roots found at midpoints; certify with those
    // roots divided out.
    for pc in &pieces {
        if let Piece::Exact(r) = pc {
            if !r.is_zero() {
                prim = prim.exact_div(&UniPoly::new(vec![-r.clone(), Rational::one()]));
            }
        }
    }
    let prim = prim.primitive();
    let lead = prim.leading_coeff().unwrap().numer().abs();
    let mut roots: Vec<RealRoot> = pieces
        .into_iter()
        .map(|pc| match pc {
            Piece::Exact(r) => RealRoot::Rational(r),
            Piece::Interval(lo, hi) => certify(&prim, &lead, lo, hi),
        })
        .collect();
    roots.sort_by(|a, b| a.cmp_exact(b));
    roots
}

/// Decides whether the unique root in `(lo, hi)` is rational. A rational
/// root has denominator dividing the leading coefficient `lead`, and two such
/// rationals are at least `1/lead^2` apart, so once the interval is that
/// narrow the simplest rational inside is the only candidate.
fn certify(p: &UniPoly, lead: &BigInt, lo: Rational, hi: Rational) -> RealRoot {
    if p.degree() == Some(1) {
        return RealRoot::Rational(-p.coeff(0) / p.coeff(1));
    }
    let mut a = AlgebraicNumber::new_unchecked(p.clone(), lo, hi);
    let threshold = Rational::new(BigInt::one(), lead * lead);
    let mut steps = 0;
    loop {
        let narrow = a.width() < threshold;
        // Below the threshold only one rational with denominator dividing
        // `lead` fits; earlier checks just catch small denominators early.
        if narrow || steps % 16 == 0 {
            let cand = simplest_rational_between(&a.lo, &a.hi);
            if cand.denom() <= lead && p.sign_at(&cand).is_zero() {
                return RealRoot::Rational(cand);
            }
        }
        if narrow {
            return RealRoot::Algebraic(a);
        }
        if let Some(r) = a.refine() {
            return RealRoot::Rational(r);
        }
        steps += 1;
    }
}

/// All real roots with multiplicities, sorted increasingly.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(RealRoot, usize)>, ExactAlgError> {
    let factors = squarefree_decomposition(p)?;
    let mut all: Vec<(RealRoot, usize)> = Vec::new();
    for (factor, mult) in factors {
        for r in real_roots_of_squarefree(&factor) {
            all.push((r, mult));
        }
    }
    all.sort_by(|a, b| a.0.cmp_exact(&b.0));
    Ok(all)
}

/// Sorted distinct real roots of `p` strictly inside `(lo, hi)`.
pub(crate) fn distinct_roots_between(p: &UniPoly, lo: &Rational, hi: &Rational) -> Vec<RealRoot> {
    if p.is_constant() {
        return Vec::new();
    }
    let sq = squarefree_part(p).unwrap();
    real_roots_of_squarefree(&sq)
        .into_iter()
        .filter(|r| r.cmp_rational(lo) == Ordering::Greater && r.cmp_rational(hi) == Ordering::Less)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn root_at_zero_is_deflated() {
        // 3t³ − 4t² − 5t: roots 0 and (2 ± √19)/3.
        let roots = isolate_real_roots(&p(&[0, -5, -4, 3])).unwrap();
        let approx: Vec<f64> = roots.iter().map(|(r, _)| r.to_f64()).collect();
        assert_eq!(roots.len(), 3);
        let s19 = 19f64.sqrt();
        for (a, b) in approx.iter().zip([(2.0 - s19) / 3.0, 0.0, (2.0 + s19) / 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(roots[1].0, RealRoot::Rational(rat(0)));
        // 2t³ − t² − 5t + 4 = (t − 1)(2t² + t − 4); the root 1 is hit as a midpoint.
        let roots = isolate_real_roots(&p(&[4, -5, -1, 2])).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().filter(|(r, _)| r.as_rational().is_some()).count() == 1);
        assert!((roots[2].0.to_f64() - (-1.0 + 33f64.sqrt()) / 4.0).abs() < 1e-12);
    }

    #[test]
    fn variations() {
        assert_eq!(descartes_variations(&p(&[-1, 1, -1, 1])).unwrap(), 3);
        assert_eq!(descartes_variations(&p(&[6, 21, 21, 6])).unwrap(), 0);
        assert_eq!(descartes_variations(&p(&[-1, 0, 1])).unwrap(), 1);
        assert!(descartes_variations(&UniPoly::zero()).is_err());
    }

    #[test]
    fn squarefree_parts() {
        let sq = squarefree_part(&p(&[2, 5, 4, 1])).unwrap();
        assert_eq!(sq, p(&[2, 3, 1]));
        assert_eq!(squarefree_part(&p(&[0, 0, 0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(squarefree_part(&p(&[-2, 0, 1])).unwrap(), p(&[-2, 0, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        // (t+1)^3 (t-2)
        let f = &p(&[1, 1]).pow(3) * &p(&[-2, 1]);
        let d = squarefree_decomposition(&f).unwrap();
        assert_eq!(d, vec![(p(&[-2, 1]), 1), (p(&[1, 1]), 3)]);
    }

    #[test]
    fn isolates_rational_roots_exactly() {
        let roots = isolate_real_roots(&p(&[6, 21, 21, 6])).unwrap();
        let rs: Vec<_> = roots
            .iter()
            .map(|(r, m)| (r.as_rational().cloned().unwrap(), *m))
            .collect();
        assert_eq!(rs, vec![(rat(-2), 1), (rat(-1), 1), (ratio(-1, 2), 1)]);

        let cube = p(&[1, 3, 3, 1]).scale(&ratio(1, 4));
        let roots = isolate_real_roots(&cube).unwrap();
        assert_eq!(roots, vec![(RealRoot::Rational(rat(-1)), 3)]);

        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        // Non-dyadic rational roots.
        let f = &p(&[-1, 3]) * &p(&[2, 7]);
        let roots = isolate_real_roots(&f).unwrap();
        assert_eq!(roots[0].0, RealRoot::Rational(ratio(-2, 7)));
        assert_eq!(roots[1].0, RealRoot::Rational(ratio(1, 3)));
    }

    #[test]
    fn irrational_roots_are_certified() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        for (r, _) in &roots {
            assert!(matches!(r, RealRoot::Algebraic(_)));
        }
        assert!((roots[1].0.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn signs_at_algebraic_numbers() {
        let h = p(&[-229376, 0, 25216, 0, 49]);
        let roots = isolate_real_roots(&h).unwrap();
        assert_eq!(roots.len(), 2);
        let RealRoot::Algebraic(z0) = &roots[1].0 else {
            panic!("expected irrational root")
        };
        assert!(z0.lo() > &rat(0) && z0.hi() <= &rat(4) || z0.to_f64() < 4.0);
        assert_eq!(sign_at_algebraic(&h, z0), Sign::Zero);
        assert_eq!(sign_at_algebraic(&p(&[1]), z0), Sign::Positive);
        assert_eq!(sign_at_algebraic(&p(&[-16, 0, 1]), z0), Sign::Negative);
        // A multiple of the defining polynomial also vanishes.
        let multiple = &h * &p(&[3, 1]);
        assert_eq!(sign_at_algebraic(&multiple, z0), Sign::Zero);
    }

    #[test]
    fn simplest_rationals() {
        assert_eq!(simplest_rational_between(&ratio(1, 3), &ratio(1, 2)), ratio(2, 5));
        assert_eq!(simplest_rational_between(&rat(-3), &rat(2)), rat(0));
        assert_eq!(simplest_rational_between(&ratio(-7, 2), &rat(-3)), ratio(-10, 3));
        assert_eq!(simplest_rational_between(&rat(2), &rat(5)), rat(3));
    }

    #[test]
    fn comparisons_detect_equality() {
        let a = &isolate_real_roots(&p(&[-2, 0, 1])).unwrap()[1].0;
        let b = &isolate_real_roots(&(&p(&[-2, 0, 1]) * &p(&[-3, 1]))).unwrap();
        let sqrt2_again = b.iter().find(|(r, _)| matches!(r, RealRoot::Algebraic(x) if x.to_f64() > 0.0)).unwrap();
        assert_eq!(a.cmp_exact(&sqrt2_again.0), Ordering::Equal);
        let c = &isolate_real_roots(&p(&[-3, 0, 1])).unwrap()[1].0;
        assert_eq!(a.cmp_exact(c), Ordering::Less);
        assert_eq!(c.cmp_rational(&rat(2)), Ordering::Less);
    }

    #[test]
    fn algebraic_number_validation() {
        let f = p(&[-2, 0, 1]);
        assert!(AlgebraicNumber::new(&f, rat(1), rat(2)).is_ok());
        assert_eq!(
            AlgebraicNumber::new(&f, rat(-2), rat(2)),
            Err(AlgebraicNumberError::NotIsolating)
        );
        assert_eq!(
            AlgebraicNumber::new(&p(&[-1, 1]), rat(1), rat(2)),
            Err(AlgebraicNumberError::RootAtEndpoint)
        );
    }
}
