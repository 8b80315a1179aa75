//! Classification along one-parameter families of couples.
//!
//! Every quantity the classifier reads is a polynomial in the coefficients,
//! so over a family with polynomial coefficients it becomes a polynomial in
//! the parameter. The classification is constant between consecutive real
//! roots of those polynomials; open cells are classified at a rational
//! sample and roots are classified exactly through sign determination at
//! real algebraic numbers.

mod normal_forms;

use std::cmp::Ordering;

use serde_json::{json, Value};
use thiserror::Error;

use crate::classify::{
    classify, label_from_signs, ClassifierSigns, ClassifyError, CoupleClass, ValidationError,
    ValiditySigns,
};
use crate::exactalg::{
    format_rational, parse_rational, simplest_rational_between, squarefree_part, Rational,
    RealRoot, UniPoly,
};
use crate::invariants::InvariantBundle;
use crate::quadform::QuadraticForm;

pub use normal_forms::{
    lookup, paraboloid_ellipsoid, registry, two_ellipsoids, uhlig_family, NormalForm,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SweepError {
    #[error("both forms of the family are identically zero")]
    ZeroFamily,
    #[error("empty range: {0} >= {1}")]
    EmptyRange(String, String),
    #[error("{kind} takes {expected} parameters, got {got}")]
    Arity { kind: String, expected: usize, got: usize },
    #[error("unknown normal form {0:?}")]
    UnknownKind(String),
    #[error("bad family description: {0}")]
    Format(String),
}

/// A couple of forms whose coefficients are polynomials in one parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamFamily {
    pub f: QuadraticForm<UniPoly>,
    pub g: QuadraticForm<UniPoly>,
}

impl ParamFamily {
    pub fn new(f: QuadraticForm<UniPoly>, g: QuadraticForm<UniPoly>) -> Result<Self, SweepError> {
        if f.is_zero() && g.is_zero() {
            return Err(SweepError::ZeroFamily);
        }
        Ok(ParamFamily { f, g })
    }

    /// Twelve coefficient polynomials: six for `f`, then six for `g`.
    pub fn from_coeffs(c: [UniPoly; 12]) -> Result<Self, SweepError> {
        let [a0, a1, a2, a3, a4, a5, b0, b1, b2, b3, b4, b5] = c;
        Self::new(
            QuadraticForm::from_coeffs([a0, a1, a2, a3, a4, a5]),
            QuadraticForm::from_coeffs([b0, b1, b2, b3, b4, b5]),
        )
    }

    /// The family that does not depend on the parameter.
    pub fn constant(f: &QuadraticForm, g: &QuadraticForm) -> Result<Self, SweepError> {
        Self::new(f.map(|c| UniPoly::constant(c.clone())), g.map(|c| UniPoly::constant(c.clone())))
    }

    pub fn at(&self, z: &Rational) -> (QuadraticForm, QuadraticForm) {
        (self.f.map(|p| p.eval(z)), self.g.map(|p| p.eval(z)))
    }

    /// Accepts `{"f": [6 polys], "g": [6 polys]}` or a flat array of twelve
    /// polynomials, each a list of rational strings in ascending degree.
    pub fn from_json(v: &Value) -> Result<Self, SweepError> {
        let bad = |m: &str| SweepError::Format(m.to_string());
        let polys: Vec<&Value> = match v {
            Value::Array(a) => a.iter().collect(),
            Value::Object(o) => {
                let side = |k: &str| -> Result<Vec<&Value>, SweepError> {
                    o.get(k)
                        .and_then(Value::as_array)
                        .map(|a| a.iter().collect())
                        .ok_or_else(|| bad(&format!("missing array {k:?}")))
                };
                let mut p = side("f")?;
                p.extend(side("g")?);
                p
            }
            _ => return Err(bad("expected an object or an array")),
        };
        if polys.len() != 12 {
            return Err(bad(&format!("expected 12 polynomials, got {}", polys.len())));
        }
        let mut out = Vec::with_capacity(12);
        for p in polys {
            let coeffs = p.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
            let cs = coeffs
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s).map_err(|e| bad(&e.to_string())),
                    Value::Number(n) if n.is_i64() => Ok(crate::exactalg::rat(n.as_i64().unwrap())),
                    _ => Err(bad("coefficient must be a rational string")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(UniPoly::new(cs));
        }
        let arr: [UniPoly; 12] = out.try_into().unwrap();
        Self::from_coeffs(arr)
    }

    pub fn to_json(&self) -> Value {
        let side = |q: &QuadraticForm<UniPoly>| {
            Value::Array(q.coeffs().iter().map(poly_json).collect())
        };
        json!({ "f": side(&self.f), "g": side(&self.g) })
    }
}

fn poly_json(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(format_rational(c))).collect())
}

/// Every polynomial whose sign enters validation or classification,
/// specialized to the family. Identically zero entries are dropped.
pub fn boundary_polys(fam: &ParamFamily) -> Vec<UniPoly> {
    let mut out: Vec<UniPoly> = Vec::new();
    for q in [&fam.f, &fam.g] {
        out.extend(q.coeffs());
        let m = q.matrix();
        out.push(m.trace());
        out.push(m.minor_sum());
        out.push(m.det());
    }
    let a = fam.f.coeffs();
    let b = fam.g.coeffs();
    for i in 0..6 {
        for j in i + 1..6 {
            out.push(&(&a[i] * &b[j]) - &(&a[j] * &b[i]));
        }
    }
    let bundle = InvariantBundle::compute(&fam.f, &fam.g);
    for p in bundle_polys(&bundle) {
        out.push(p.clone());
    }
    let mut dedup: Vec<UniPoly> = Vec::new();
    for p in out {
        if !p.is_zero() && !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    dedup
}

fn bundle_polys(b: &InvariantBundle<UniPoly>) -> Vec<&UniPoly> {
    let mut v = vec![
        &b.phi.phi30,
        &b.phi.phi21,
        &b.phi.phi12,
        &b.phi.phi03,
        &b.disc_phi,
        &b.hessian.h20,
        &b.hessian.h11,
        &b.hessian.h02,
        &b.p.c2,
        &b.a1,
        &b.q.c2,
        &b.b1,
        &b.r,
        &b.antisym,
        &b.trace_t,
    ];
    v.extend(b.g.coeffs.iter());
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentStatus {
    Class(CoupleClass),
    Invalid(ValidationError),
    /// A valid point where the sign conditions select no class.
    Transition,
}

impl SegmentStatus {
    fn from_result(r: Result<CoupleClass, ClassifyError>) -> Self {
        match r {
            Ok(c) => SegmentStatus::Class(c),
            Err(ClassifyError::Invalid(e)) => SegmentStatus::Invalid(e),
            Err(ClassifyError::InternalInconsistency(_)) => SegmentStatus::Transition,
        }
    }

    pub fn class(&self) -> Option<CoupleClass> {
        match self {
            SegmentStatus::Class(c) => Some(*c),
            _ => None,
        }
    }
}

/// An open interval, or a single point when `lo == hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub lo: RealRoot,
    pub hi: RealRoot,
    /// Rational classified for open segments.
    pub sample: Option<Rational>,
    pub status: SegmentStatus,
}

impl Segment {
    pub fn is_point(&self) -> bool {
        self.sample.is_none()
    }

    pub fn contains(&self, z: &Rational) -> bool {
        if self.is_point() {
            self.lo.cmp_rational(z) == Ordering::Equal
        } else {
            self.lo.cmp_rational(z) == Ordering::Less && self.hi.cmp_rational(z) == Ordering::Greater
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepResult {
    pub segments: Vec<Segment>,
}

impl SweepResult {
    pub fn segment_at(&self, z: &Rational) -> Option<&Segment> {
        self.segments.iter().find(|s| s.contains(z))
    }

    /// Compact description such as `IaS / IIaS(point) / IbN`.
    pub fn pattern(&self) -> String {
        self.segments
            .iter()
            .map(|s| {
                let name = match &s.status {
                    SegmentStatus::Class(c) => c.to_string(),
                    SegmentStatus::Invalid(e) => format!("invalid:{}", e.kind()),
                    SegmentStatus::Transition => "transition".to_string(),
                };
                if s.is_point() {
                    format!("{name}(point)")
                } else {
                    name
                }
            })
            .collect::<Vec<_>>()
            .join(" / ")
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.segments.iter().map(segment_json).collect())
    }
}

fn endpoint_json(r: &RealRoot) -> (Value, &'static str) {
    match r {
        RealRoot::Rational(q) => (Value::String(format_rational(q)), "rational"),
        RealRoot::Algebraic(a) => (
            json!({
                "poly": poly_json(a.defining_poly()),
                "interval": [format_rational(a.lo()), format_rational(a.hi())],
                "approx": format!("{:.15e}", a.to_f64()),
            }),
            "algebraic",
        ),
    }
}

fn segment_json(s: &Segment) -> Value {
    let (lo, lo_type) = endpoint_json(&s.lo);
    let (hi, hi_type) = endpoint_json(&s.hi);
    let mut o = serde_json::Map::new();
    o.insert("lo".into(), lo);
    o.insert("lo_type".into(), lo_type.into());
    o.insert("hi".into(), hi);
    o.insert("hi_type".into(), hi_type.into());
    let status = match (&s.status, s.is_point()) {
        (SegmentStatus::Invalid(_), _) => "invalid",
        (_, true) => "boundary",
        (_, false) => "class",
    };
    o.insert("status".into(), status.into());
    match &s.status {
        SegmentStatus::Class(c) => {
            o.insert("class".into(), c.to_string().into());
        }
        SegmentStatus::Invalid(e) => {
            o.insert("error".into(), e.kind().into());
            if let Some(w) = e.which() {
                o.insert("conic".into(), w.to_string().into());
            }
        }
        SegmentStatus::Transition => {
            o.insert("class".into(), "transition".into());
        }
    }
    if let Some(q) = &s.sample {
        o.insert("sample".into(), format_rational(q).into());
    }
    Value::Object(o)
}

/// A rational strictly between `a < b`.
fn rational_between(a: &RealRoot, b: &RealRoot) -> Rational {
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        let upper = match &a {
            RealRoot::Rational(q) => q.clone(),
            RealRoot::Algebraic(x) => x.hi().clone(),
        };
        let lower = match &b {
            RealRoot::Rational(q) => q.clone(),
            RealRoot::Algebraic(x) => x.lo().clone(),
        };
        if upper < lower {
            return simplest_rational_between(&upper, &lower);
        }
        if upper == lower && (a.as_rational().is_none() || b.as_rational().is_none()) {
            return upper;
        }
        for r in [&mut a, &mut b] {
            if let RealRoot::Algebraic(x) = r {
                if let Some(q) = x.refine() {
                    *r = RealRoot::Rational(q);
                }
            }
        }
    }
}

/// Classification of a family at an exactly known parameter value.
pub fn classify_at(fam: &ParamFamily, bundle: &InvariantBundle<UniPoly>, z: &RealRoot) -> SegmentStatus {
    if let RealRoot::Rational(q) = z {
        let (f, g) = fam.at(q);
        return SegmentStatus::from_result(classify(&f, &g).map(|c| c.label.couple));
    }
    let sign = |p: &UniPoly| z.sign_of(p);
    let validity = ValiditySigns::from_forms(&fam.f, &fam.g, sign);
    if let Err(e) = validity.check() {
        return SegmentStatus::Invalid(e);
    }
    let signs = ClassifierSigns::from_bundle(bundle, sign);
    SegmentStatus::from_result(label_from_signs(&signs).map(|l| l.couple))
}

/// Sweeps the open interval `(lo, hi)`.
pub fn sweep(fam: &ParamFamily, lo: &Rational, hi: &Rational) -> Result<SweepResult, SweepError> {
    if lo >= hi {
        return Err(SweepError::EmptyRange(format_rational(lo), format_rational(hi)));
    }
    let mut factors: Vec<UniPoly> = Vec::new();
    for p in boundary_polys(fam) {
        if p.is_constant() {
            continue;
        }
        let s = squarefree_part(&p).unwrap();
        if !factors.contains(&s) {
            factors.push(s);
        }
    }
    let mut roots: Vec<RealRoot> = factors
        .iter()
        .flat_map(|p| crate::exactalg::distinct_roots_between(p, lo, hi))
        .collect();
    roots.sort_by(|a, b| a.cmp_exact(b));
    roots.dedup_by(|a, b| a.cmp_exact(b) == Ordering::Equal);

    let bundle = InvariantBundle::compute(&fam.f, &fam.g);
    let mut points = vec![RealRoot::Rational(lo.clone())];
    points.extend(roots.iter().cloned());
    points.push(RealRoot::Rational(hi.clone()));

    let mut segments: Vec<Segment> = Vec::new();
    for (k, w) in points.windows(2).enumerate() {
        if k > 0 {
            segments.push(Segment {
                lo: w[0].clone(),
                hi: w[0].clone(),
                sample: None,
                status: classify_at(fam, &bundle, &w[0]),
            });
        }
        let z = rational_between(&w[0], &w[1]);
        segments.push(Segment {
            lo: w[0].clone(),
            hi: w[1].clone(),
            status: classify_at(fam, &bundle, &RealRoot::Rational(z.clone())),
            sample: Some(z),
        });
    }
    Ok(SweepResult { segments: merge(segments) })
}

/// Fuses each open-point-open run with a common status.
fn merge(segments: Vec<Segment>) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for s in segments {
        out.push(s);
        let n = out.len();
        if n >= 3
            && !out[n - 3].is_point()
            && out[n - 2].is_point()
            && !out[n - 1].is_point()
            && out[n - 3].status == out[n - 2].status
            && out[n - 2].status == out[n - 1].status
        {
            let last = out.pop().unwrap();
            out.pop();
            out.last_mut().unwrap().hi = last.hi;
        }
    }
    out
}

/// Classifies a rectangular grid of rational parameter values of a normal
/// form, varying parameters `axes.0` and `axes.1`.
pub fn classify_grid(
    nf: &dyn NormalForm,
    base: &[Rational],
    axes: (usize, usize),
    xs: &[Rational],
    ys: &[Rational],
) -> Result<Vec<(Rational, Rational, Result<CoupleClass, ClassifyError>)>, SweepError> {
    nf.check_arity(base.len())?;
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in xs {
        for y in ys {
            let mut p = base.to_vec();
            p[axes.0] = x.clone();
            p[axes.1] = y.clone();
            let (f, g) = nf.forms(&p)?;
            out.push((x.clone(), y.clone(), classify(&f, &g).map(|c| c.label.couple)));
        }
    }
    Ok(out)
}
