//! The decision procedure: pencil orbit, then N or S, then which conic is
//! inside, all read off signs of the invariant bundle.

mod labels;
pub mod golden;

use std::fmt;

use thiserror::Error;

pub use labels::{AmbientClass, CoupleClass, Inside, LabelError, PairClass, PencilOrbit};

use crate::exactalg::{Scalar, Sign};
use crate::invariants::InvariantBundle;
use crate::quadform::{QuadraticForm, Signature};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Which {
    F,
    G,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::F => "f",
            Which::G => "g",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Error)]
pub enum ValidationError {
    #[error("conic {0} is the zero form")]
    ZeroForm(Which),
    #[error("conic {0} is degenerate")]
    DegenerateConic(Which),
    #[error("conic {0} has no real points")]
    EmptyConic(Which),
    #[error("the two conics are proportional")]
    ProportionalConics,
}

impl ValidationError {
    pub fn kind(&self) -> &'static str {
        match self {
            ValidationError::ZeroForm(_) => "ZeroForm",
            ValidationError::DegenerateConic(_) => "DegenerateConic",
            ValidationError::EmptyConic(_) => "EmptyConic",
            ValidationError::ProportionalConics => "ProportionalConics",
        }
    }

    pub fn which(&self) -> Option<Which> {
        match self {
            ValidationError::ZeroForm(w)
            | ValidationError::DegenerateConic(w)
            | ValidationError::EmptyConic(w) => Some(*w),
            ValidationError::ProportionalConics => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Signs of every quantity the decision procedure reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassifierSigns {
    pub disc_phi: Sign,
    pub h_zero: bool,
    pub g_zero: bool,
    pub p2: Sign,
    pub a1: Sign,
    pub phi30: Sign,
    pub phi21: Sign,
    pub phi12: Sign,
    pub phi03: Sign,
    pub antisym: Sign,
    pub trace_t: Sign,
    pub r: Sign,
    pub b1: Sign,
    pub q2: Sign,
}

impl ClassifierSigns {
    /// Reads the signs off a bundle over any scalar ring, given a sign
    /// oracle for that ring.
    pub fn from_bundle<S: Scalar>(b: &InvariantBundle<S>, sign: impl Fn(&S) -> Sign) -> Self {
        ClassifierSigns {
            disc_phi: sign(&b.disc_phi),
            h_zero: [&b.hessian.h20, &b.hessian.h11, &b.hessian.h02]
                .iter()
                .all(|c| sign(c).is_zero()),
            g_zero: b.g.coeffs.iter().all(|c| sign(c).is_zero()),
            p2: sign(&b.p.c2),
            a1: sign(&b.a1),
            phi30: sign(&b.phi.phi30),
            phi21: sign(&b.phi.phi21),
            phi12: sign(&b.phi.phi12),
            phi03: sign(&b.phi.phi03),
            antisym: sign(&b.antisym),
            trace_t: sign(&b.trace_t),
            r: sign(&b.r),
            b1: sign(&b.b1),
            q2: sign(&b.q.c2),
        }
    }

    pub fn of(b: &InvariantBundle) -> Self {
        Self::from_bundle(b, Sign::of)
    }

    pub fn phi30_a1(&self) -> Sign {
        self.phi30 * self.a1
    }

    /// The Sturm-query sign sequence `1, A2, Φ30 A1, A0` restricted to what
    /// is known without `A0`.
    pub fn orbit_conditions(&self) -> [(PencilOrbit, bool); 9] {
        let d = self.disc_phi;
        let h = !self.h_zero;
        let g = !self.g_zero;
        let p2 = self.p2;
        let fa = self.phi30_a1();
        use PencilOrbit::*;
        [
            (I, d.is_negative() && p2.is_negative() && fa.is_positive()),
            (
                Ia,
                d.is_negative()
                    && (p2.is_positive()
                        || fa.is_negative()
                        || (self.a1.is_zero() && p2.is_zero())),
            ),
            (Ib, d.is_positive()),
            (II, d.is_zero() && h && g && p2.is_negative() && fa.is_positive()),
            (IIa, d.is_zero() && h && g && (p2.is_zero() || fa.is_negative())),
            (III, d.is_zero() && h && !g && p2.is_negative()),
            (IIIa, d.is_zero() && h && !g && p2.is_positive()),
            (IV, !h && g),
            (V, !h && !g),
        ]
    }

    pub fn is_n(&self) -> bool {
        (self.phi30 * self.phi12).is_positive() && (self.phi03 * self.phi21).is_positive()
    }
}

impl fmt::Display for ClassifierSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = |b: bool| if b { "0" } else { "nonzero" };
        write!(
            f,
            "disc_phi={} H={} G={} p2={} phi30*A1={} phi30*phi12={} phi03*phi21={} \
             antisym={} T={} phi03*R={} phi30*B1={} phi03*q2={}",
            self.disc_phi,
            z(self.h_zero),
            z(self.g_zero),
            self.p2,
            self.phi30_a1(),
            self.phi30 * self.phi12,
            self.phi03 * self.phi21,
            self.antisym,
            self.trace_t,
            self.phi03 * self.r,
            self.phi30 * self.b1,
            self.phi03 * self.q2,
        )
    }
}

/// The class of a couple at all four levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub orbit: PencilOrbit,
    pub pair: PairClass,
    pub couple: CoupleClass,
    pub ambient: AmbientClass,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orbit={} pair={} couple={} ambient={}",
            self.orbit, self.pair, self.couple, self.ambient
        )
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub label: ClassLabel,
    pub signs: ClassifierSigns,
    pub bundle: InvariantBundle,
}

/// Validity of a couple from sign data: the zero-form tests receive whether
/// all six coefficients vanish, the rest need signs of trace, principal
/// minor sum and discriminant of each form, and whether all 2×2 minors of
/// the coefficient matrix vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValiditySigns {
    pub f_zero: bool,
    pub g_zero: bool,
    pub f_char: [Sign; 3],
    pub g_char: [Sign; 3],
    pub proportional: bool,
}

impl ValiditySigns {
    pub fn from_forms<S: Scalar>(
        f: &QuadraticForm<S>,
        g: &QuadraticForm<S>,
        sign: impl Fn(&S) -> Sign,
    ) -> Self {
        let chars = |q: &QuadraticForm<S>| {
            let m = q.matrix();
            [sign(&m.trace()), sign(&m.minor_sum()), sign(&m.det())]
        };
        let a = f.coeffs();
        let b = g.coeffs();
        let proportional = (0..6).all(|i| {
            (i + 1..6).all(|j| sign(&(a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone())).is_zero())
        });
        ValiditySigns {
            f_zero: a.iter().all(|c| sign(c).is_zero()),
            g_zero: b.iter().all(|c| sign(c).is_zero()),
            f_char: chars(f),
            g_char: chars(g),
            proportional,
        }
    }

    /// Checks `f` fully, then `g`, then proportionality.
    pub fn check(&self) -> Result<(), ValidationError> {
        use ValidationError::*;
        let conic = |zero: bool, c: [Sign; 3], w: Which| {
            if zero {
                return Err(ZeroForm(w));
            }
            if c[2].is_zero() {
                return Err(DegenerateConic(w));
            }
            if !Signature::from_char_signs(c[0], c[1], c[2]).is_indefinite() {
                return Err(EmptyConic(w));
            }
            Ok(())
        };
        conic(self.f_zero, self.f_char, Which::F)?;
        conic(self.g_zero, self.g_char, Which::G)?;
        if self.proportional {
            return Err(ProportionalConics);
        }
        Ok(())
    }
}

/// Couples of distinct proper non-empty conics are valid.
pub fn validate(f: &QuadraticForm, g: &QuadraticForm) -> Result<(), ValidationError> {
    ValiditySigns::from_forms(f, g, Sign::of).check()
}

pub fn orbit_from_signs(s: &ClassifierSigns) -> Result<PencilOrbit, ClassifyError> {
    let fired: Vec<PencilOrbit> = s
        .orbit_conditions()
        .into_iter()
        .filter(|(_, ok)| *ok)
        .map(|(o, _)| o)
        .collect();
    match fired.as_slice() {
        [o] => Ok(*o),
        _ => Err(ClassifyError::InternalInconsistency(format!(
            "orbit conditions fired: {fired:?} for signs {s}"
        ))),
    }
}

pub fn pair_from_signs(orbit: PencilOrbit, s: &ClassifierSigns) -> PairClass {
    PairClass::from_orbit(orbit, s.is_n())
}

pub fn couple_from_signs(pair: PairClass, s: &ClassifierSigns) -> Result<CoupleClass, ClassifyError> {
    if !pair.splits() {
        return Ok(CoupleClass::new(pair, None));
    }
    let by_sign = |v: Sign, what: &str| match v {
        Sign::Negative => Ok(Inside::FInsideG),
        Sign::Positive => Ok(Inside::GInsideF),
        Sign::Zero => Err(ClassifyError::InternalInconsistency(format!(
            "{what} vanishes on a couple of class {pair}"
        ))),
    };
    let inside = match pair {
        PairClass::VN => by_sign(s.trace_t, "T")?,
        PairClass::IaN => {
            let b1 = s.phi30 * s.b1;
            let q2 = s.phi03 * s.q2;
            let f_in = match s.phi03 * s.r {
                Sign::Negative => b1.is_positive() && q2.is_negative(),
                Sign::Positive => !b1.is_positive() || !q2.is_positive(),
                Sign::Zero => q2.is_negative(),
            };
            if f_in {
                Inside::FInsideG
            } else {
                Inside::GInsideF
            }
        }
        PairClass::IIIaN => by_sign(s.antisym, "the antisymmetric invariant")?,
        // On the II, IIa and III orbits the inner conic has the opposite sign.
        _ => by_sign(-s.antisym, "the antisymmetric invariant")?,
    };
    Ok(CoupleClass::new(pair, Some(inside)))
}

pub fn label_from_signs(s: &ClassifierSigns) -> Result<ClassLabel, ClassifyError> {
    let orbit = orbit_from_signs(s)?;
    let pair = pair_from_signs(orbit, s);
    let couple = couple_from_signs(pair, s)?;
    Ok(ClassLabel { orbit, pair, couple, ambient: couple.ambient() })
}

pub fn classify(f: &QuadraticForm, g: &QuadraticForm) -> Result<Classification, ClassifyError> {
    validate(f, g)?;
    let bundle = InvariantBundle::compute(f, g);
    let signs = ClassifierSigns::of(&bundle);
    let label = label_from_signs(&signs)?;
    Ok(Classification { label, signs, bundle })
}

pub fn orbit(f: &QuadraticForm, g: &QuadraticForm) -> Result<PencilOrbit, ClassifyError> {
    classify(f, g).map(|c| c.label.orbit)
}

pub fn pair_class(f: &QuadraticForm, g: &QuadraticForm) -> Result<PairClass, ClassifyError> {
    classify(f, g).map(|c| c.label.pair)
}

pub fn couple_class(f: &QuadraticForm, g: &QuadraticForm) -> Result<CoupleClass, ClassifyError> {
    classify(f, g).map(|c| c.label.couple)
}

pub fn ambient_class(c: CoupleClass) -> AmbientClass {
    c.ambient()
}

pub fn quartic_code(p: PairClass) -> &'static str {
    p.quartic_code()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 6]) -> QuadraticForm {
        QuadraticForm::from_ints(c)
    }

    fn couple(f: [i64; 6], g: [i64; 6]) -> String {
        couple_class(&q(f), &q(g)).unwrap().to_string()
    }

    #[test]
    fn validation_errors_name_the_conic() {
        assert_eq!(
            validate(&q([0, 0, 0, 0, 1, 0]), &q([0, 1, 0, 0, 0, 0])),
            Err(ValidationError::DegenerateConic(Which::F))
        );
        assert_eq!(
            validate(&q([1, 1, 1, 0, 0, 0]), &q([1, 0, -1, 0, 0, 0])),
            Err(ValidationError::EmptyConic(Which::F))
        );
        let f = q([3, -2, -1, 0, 0, 0]);
        assert_eq!(validate(&f, &f.scale(&crate::exactalg::rat(5))), Err(ValidationError::ProportionalConics));
        assert_eq!(validate(&f, &QuadraticForm::zero()), Err(ValidationError::ZeroForm(Which::G)));
    }

    #[test]
    fn orbits_of_representatives() {
        assert_eq!(orbit(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0])).unwrap(), PencilOrbit::I);
        assert_eq!(orbit(&q([1, 1, 1, 0, 3, 0]), &q([1, 1, 1, 0, 4, 0])).unwrap(), PencilOrbit::Ia);
        assert_eq!(orbit(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0])).unwrap(), PencilOrbit::V);
    }

    #[test]
    fn pair_classes() {
        assert_eq!(pair_class(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0])).unwrap(), PairClass::IN);
        assert_eq!(pair_class(&q([3, -2, -1, 0, 0, 0]), &q([1, -2, 1, 0, 0, 0])).unwrap(), PairClass::IS);
        assert_eq!(pair_class(&q([0, 1, 1, 0, 1, 0]), &q([0, 1, 1, 0, -1, 0])).unwrap(), PairClass::IIaS);
    }

    #[test]
    fn inside_flags() {
        assert_eq!(couple([0, 1, 0, 0, 1, 0], [0, 2, 0, 0, 1, 0]), "IIIN/g-in");
        assert_eq!(couple([0, 2, 0, 0, 1, 0], [0, 1, 0, 0, 1, 0]), "IIIN/f-in");
        assert_eq!(couple([-1, -1, 0, 0, 1, 0], [1, -1, 0, 0, 1, 0]), "VN/f-in");
    }

    #[test]
    fn label_line() {
        let c = classify(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0])).unwrap();
        assert_eq!(c.label.to_string(), "orbit=I pair=IN couple=IN ambient=IN");
    }
}
