//! Named families of couples: the canonical forms of non-degenerate pencils
//! and two sweeping-plane examples built from pairs of quadrics.

use super::{ParamFamily, SweepError};
use crate::exactalg::{ratio, Rational, UniPoly};
use crate::quadform::QuadraticForm;

/// A parametrized couple given by its pair of symmetric matrices.
///
/// Parameters may be polynomials, so that any of them can become the sweep
/// variable.
pub trait NormalForm: Send + Sync {
    fn name(&self) -> &'static str;
    fn params(&self) -> &'static [&'static str];
    /// Matrices of `f` and `g`, upper triangle in the order
    /// `m11 m22 m33 m12 m13 m23`.
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]);

    fn check_arity(&self, got: usize) -> Result<(), SweepError> {
        let expected = self.params().len();
        if got != expected {
            return Err(SweepError::Arity { kind: self.name().to_string(), expected, got });
        }
        Ok(())
    }

    fn forms_poly(&self, p: &[UniPoly]) -> Result<(QuadraticForm<UniPoly>, QuadraticForm<UniPoly>), SweepError> {
        self.check_arity(p.len())?;
        let (a, b) = self.matrices(p);
        Ok((from_upper(a), from_upper(b)))
    }

    fn forms(&self, p: &[Rational]) -> Result<(QuadraticForm, QuadraticForm), SweepError> {
        let ps: Vec<UniPoly> = p.iter().map(|c| UniPoly::constant(c.clone())).collect();
        let (f, g) = self.forms_poly(&ps)?;
        let at0 = |q: &UniPoly| q.coeff(0);
        Ok((f.map(at0), g.map(at0)))
    }

    /// The family obtained by letting parameter `axis` vary.
    fn axis_family(&self, p: &[Rational], axis: usize) -> Result<ParamFamily, SweepError> {
        self.check_arity(p.len())?;
        let ps: Vec<UniPoly> = p
            .iter()
            .enumerate()
            .map(|(i, c)| if i == axis { UniPoly::identity() } else { UniPoly::constant(c.clone()) })
            .collect();
        let (f, g) = self.forms_poly(&ps)?;
        ParamFamily::new(f, g)
    }
}

fn from_upper(m: [UniPoly; 6]) -> QuadraticForm<UniPoly> {
    let [m11, m22, m33, m12, m13, m23] = m;
    let two = crate::exactalg::rat(2);
    QuadraticForm::from_coeffs([m11, m22, m33, m12.scale(&two), m13.scale(&two), m23.scale(&two)])
}

fn c(n: i64) -> UniPoly {
    UniPoly::from_ints(&[n])
}

fn o() -> UniPoly {
    UniPoly::zero()
}

struct U11;
struct U12;
struct U21;
struct U22;
struct U31;
struct U32;
struct U4;

impl NormalForm for U11 {
    fn name(&self) -> &'static str {
        "U11"
    }
    fn params(&self) -> &'static [&'static str] {
        &["l1", "l2", "l3"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        ([c(1), c(1), c(1), o(), o(), o()], [p[0].clone(), p[1].clone(), p[2].clone(), o(), o(), o()])
    }
}

impl NormalForm for U12 {
    fn name(&self) -> &'static str {
        "U12"
    }
    fn params(&self) -> &'static [&'static str] {
        &["l1", "l2", "l3"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        ([c(1), c(1), c(-1), o(), o(), o()], [p[0].clone(), p[1].clone(), -p[2].clone(), o(), o(), o()])
    }
}

impl NormalForm for U21 {
    fn name(&self) -> &'static str {
        "U21"
    }
    fn params(&self) -> &'static [&'static str] {
        &["l1", "l2"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        ([o(), o(), c(1), c(1), o(), o()], [o(), c(1), p[1].clone(), p[0].clone(), o(), o()])
    }
}

impl NormalForm for U22 {
    fn name(&self) -> &'static str {
        "U22"
    }
    fn params(&self) -> &'static [&'static str] {
        &["l1", "l2"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        ([o(), o(), c(-1), c(1), o(), o()], [o(), c(1), -p[1].clone(), p[0].clone(), o(), o()])
    }
}

impl NormalForm for U31 {
    fn name(&self) -> &'static str {
        "U31"
    }
    fn params(&self) -> &'static [&'static str] {
        &["a", "b", "l"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        (
            [o(), o(), c(1), c(1), o(), o()],
            [p[1].clone(), -p[1].clone(), p[2].clone(), p[0].clone(), o(), o()],
        )
    }
}

impl NormalForm for U32 {
    fn name(&self) -> &'static str {
        "U32"
    }
    fn params(&self) -> &'static [&'static str] {
        &["a", "b", "l"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        (
            [o(), o(), c(-1), c(1), o(), o()],
            [p[1].clone(), -p[1].clone(), -p[2].clone(), p[0].clone(), o(), o()],
        )
    }
}

impl NormalForm for U4 {
    fn name(&self) -> &'static str {
        "U4"
    }
    fn params(&self) -> &'static [&'static str] {
        &["l"]
    }
    fn matrices(&self, p: &[UniPoly]) -> ([UniPoly; 6], [UniPoly; 6]) {
        ([o(), c(1), o(), o(), c(1), o()], [o(), p[0].clone(), o(), o(), p[0].clone(), c(1)])
    }
}

static REGISTRY: [&dyn NormalForm; 7] = [&U11, &U12, &U21, &U22, &U31, &U32, &U4];

pub fn registry() -> &'static [&'static dyn NormalForm] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static dyn NormalForm, SweepError> {
    REGISTRY
        .iter()
        .copied()
        .find(|n| n.name().eq_ignore_ascii_case(name))
        .ok_or_else(|| SweepError::UnknownKind(name.to_string()))
}

pub fn uhlig_family(kind: &str, params: &[Rational]) -> Result<(QuadraticForm, QuadraticForm), SweepError> {
    lookup(kind)?.forms(params)
}

fn poly(c: &[Rational]) -> UniPoly {
    UniPoly::new(c.to_vec())
}

fn ints(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(c)
}

/// Sections `z = const` of the sphere of radius 5 and of the ellipsoid
/// `(x−6)²/9 + y²/4 + z²/16 = 1`, homogenized in `x, y` with `t`.
pub fn two_ellipsoids() -> ParamFamily {
    let r = crate::exactalg::rat;
    let f = QuadraticForm::from_coeffs([ints(&[1]), ints(&[1]), ints(&[-25, 0, 1]), o(), o(), o()]);
    let g = QuadraticForm::from_coeffs([
        poly(&[ratio(1, 9)]),
        poly(&[ratio(1, 4)]),
        poly(&[r(3), r(0), ratio(1, 16)]),
        o(),
        poly(&[ratio(-4, 3)]),
        o(),
    ]);
    ParamFamily::new(f, g).unwrap()
}

/// Sections `z = const` of an elliptic paraboloid (`f`) and of an ellipsoid
/// (`g`).
pub fn paraboloid_ellipsoid() -> ParamFamily {
    let f = QuadraticForm::from_coeffs([
        ints(&[4]),
        ints(&[2]),
        ints(&[12, -10, 2]),
        ints(&[-4]),
        ints(&[14, -4]),
        ints(&[-6]),
    ]);
    let g = QuadraticForm::from_coeffs([
        ints(&[3]),
        ints(&[2]),
        ints(&[39, -16, 2]),
        ints(&[-4]),
        ints(&[16, -4]),
        ints(&[-12, 2]),
    ]);
    ParamFamily::new(f, g).unwrap()
}
