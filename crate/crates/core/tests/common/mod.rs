#![allow(dead_code)]

use conic_isotopy::classify::validate;
use conic_isotopy::quadform::QuadraticForm;
use rand::Rng;

pub fn q(c: [i64; 6]) -> QuadraticForm {
    QuadraticForm::from_ints(c)
}

pub fn random_form<R: Rng>(rng: &mut R, bound: i64) -> QuadraticForm {
    q(std::array::from_fn(|_| rng.gen_range(-bound..=bound)))
}

/// A random couple passing validation.
pub fn random_valid_couple<R: Rng>(rng: &mut R, bound: i64) -> (QuadraticForm, QuadraticForm) {
    loop {
        let f = random_form(rng, bound);
        let g = random_form(rng, bound);
        if validate(&f, &g).is_ok() {
            return (f, g);
        }
    }
}
