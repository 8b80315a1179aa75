//! Representative couples for each of the fourteen pair classes.

use super::{CoupleClass, PairClass};
use crate::quadform::QuadraticForm;

#[derive(Debug, Clone)]
pub struct Representative {
    pub label: PairClass,
    pub f: QuadraticForm,
    pub g: QuadraticForm,
}

fn rep(label: PairClass, f: [i64; 6], g: [i64; 6]) -> Representative {
    Representative { label, f: QuadraticForm::from_ints(f), g: QuadraticForm::from_ints(g) }
}

/// Coefficients in the order `x², y², z², xy, xz, yz`.
pub fn representatives() -> Vec<Representative> {
    use PairClass::*;
    vec![
        rep(IN, [3, -2, -1, 0, 0, 0], [3, -1, -2, 0, 0, 0]),
        rep(IS, [3, -2, -1, 0, 0, 0], [1, -2, 1, 0, 0, 0]),
        rep(IaN, [1, 1, 1, 0, 3, 0], [1, 1, 1, 0, 4, 0]),
        rep(IaS, [1, 1, 1, 0, 3, 0], [1, 1, 1, 0, -3, 0]),
        rep(IbN, [1, 1, -1, 0, 1, 0], [1, 1, -1, 0, -1, 0]),
        rep(IIN, [0, 0, 0, 1, -1, 1], [0, 0, 0, 2, -2, 1]),
        rep(IIS, [0, 0, 0, 1, -1, 1], [0, 0, 0, -1, 1, 1]),
        rep(IIaN, [0, 1, 1, 0, 1, 0], [0, 1, 1, 0, 2, 0]),
        rep(IIaS, [0, 1, 1, 0, 1, 0], [0, 1, 1, 0, -1, 0]),
        rep(IIIN, [0, 1, 0, 0, 1, 0], [0, 2, 0, 0, 1, 0]),
        rep(IIIS, [0, 1, 0, 0, 1, 0], [0, -1, 0, 0, 1, 0]),
        rep(IIIaN, [1, 1, -1, 0, 0, 0], [1, 1, -2, 0, 0, 0]),
        rep(IVN, [0, -1, 0, 1, 1, 0], [0, -1, 0, -2, 1, 0]),
        rep(VN, [-1, -1, 0, 0, 1, 0], [1, -1, 0, 0, 1, 0]),
    ]
}

/// Expected couple class of each representative, including which conic is
/// inside for the splitting classes.
pub fn couples() -> Vec<(Representative, CoupleClass)> {
    use super::Inside::*;
    use PairClass::*;
    representatives()
        .into_iter()
        .map(|r| {
            let inside = match r.label {
                IIIN => Some(GInsideF),
                IaN | IIN | IIaN | IIIaN | VN => Some(FInsideG),
                _ => None,
            };
            let c = CoupleClass::new(r.label, inside);
            (r, c)
        })
        .collect()
}
