//! Independent verification of the symbolic classifier: base points by
//! elimination and nesting by sampling.
//!
//! Base points come from the resultant in `y` of the two forms after a
//! random rational change of coordinates. Real roots and multiplicities of
//! that quartic are computed exactly; only the reported coordinates are
//! floating point. Nesting samples points on each conic through its
//! eigen-decomposition and applies the inside predicate of the other.

use std::f64::consts::TAU;

use nalgebra::{Matrix3, SymmetricEigen, Vector3};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::classify::{validate, CoupleClass, Inside, PencilOrbit, ValidationError};
use crate::exactalg::{isolate_real_roots, rat, rational_to_f64, Rational, RealRoot, UniPoly};
use crate::quadform::{det3, QuadFormError, QuadraticForm};

#[derive(Debug, Clone, PartialEq)]
pub struct BasePoint {
    /// Homogeneous coordinates, normalized to unit length.
    pub coords: [f64; 3],
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionReport {
    pub real_points: Vec<BasePoint>,
    /// Multiplicities of the non-real base points, decreasing.
    pub imaginary_multiplicities: Vec<usize>,
    pub total_complex_multiplicity: usize,
    /// Largest normalized value of `|f|` or `|g|` at a reported real point.
    pub residual: f64,
}

impl IntersectionReport {
    /// Multiplicities of the real base points, decreasing.
    pub fn real_profile(&self) -> Vec<usize> {
        let mut m: Vec<usize> = self.real_points.iter().map(|p| p.multiplicity).collect();
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    pub fn matches_orbit(&self, orbit: PencilOrbit) -> bool {
        self.real_profile() == orbit.real_base_points()
            && self.imaginary_multiplicities == orbit.imaginary_base_points()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nesting {
    FInsideG,
    GInsideF,
    NotNested,
    TangentAmbiguous,
}

impl Nesting {
    pub fn name(self) -> &'static str {
        match self {
            Nesting::FInsideG => "f_inside_g",
            Nesting::GInsideF => "g_inside_f",
            Nesting::NotNested => "not_nested",
            Nesting::TangentAmbiguous => "tangent_ambiguous",
        }
    }

    /// The expected nesting of a couple class.
    pub fn expected_for(c: CoupleClass) -> Nesting {
        match c.inside {
            Some(Inside::FInsideG) => Nesting::FInsideG,
            Some(Inside::GInsideF) => Nesting::GInsideF,
            None => Nesting::NotNested,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("ill-conditioned after {0} coordinate changes")]
    IllConditioned(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleOptions {
    /// Relative tolerance under which a sample counts as lying on a conic.
    pub tolerance: f64,
    pub samples: usize,
    pub seed: u64,
    pub max_attempts: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { tolerance: 1e-9, samples: 256, seed: 0x5eed, max_attempts: 16 }
    }
}

/// The pullback `f∘θ`.
pub fn transform_form(
    f: &QuadraticForm,
    theta: &[[Rational; 3]; 3],
) -> Result<QuadraticForm, QuadFormError> {
    f.transform(theta)
}

/// A random integer matrix with entries in `[-bound, bound]` and nonzero
/// determinant.
pub fn random_invertible<R: Rng>(rng: &mut R, bound: i64) -> [[Rational; 3]; 3] {
    loop {
        let t: [[Rational; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| rat(rng.gen_range(-bound..=bound))));
        if !det3(&t).is_zero() {
            return t;
        }
    }
}

/// A random integer matrix of determinant ±1, built as a product of
/// elementary matrices and a signed permutation.
pub fn random_unimodular<R: Rng>(rng: &mut R, steps: usize) -> [[Rational; 3]; 3] {
    let mut m = [[0i64; 3]; 3];
    let mut perm = [0usize, 1, 2];
    for i in (1..3).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    for (i, &p) in perm.iter().enumerate() {
        m[i][p] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..3);
        let mut j = rng.gen_range(0..3);
        while j == i {
            j = rng.gen_range(0..3);
        }
        let k = rng.gen_range(-2i64..=2);
        for c in 0..3 {
            m[i][c] += k * m[j][c];
        }
    }
    m.map(|r| r.map(rat))
}

fn form_coeffs_in_y(f: &QuadraticForm) -> (Rational, UniPoly, UniPoly) {
    // f(x, y, 1) = a y² + b(x) y + c(x)
    let a = f.a020.clone();
    let b = UniPoly::new(vec![f.a011.clone(), f.a110.clone()]);
    let c = UniPoly::new(vec![f.a002.clone(), f.a101.clone(), f.a200.clone()]);
    (a, b, c)
}

fn normalized(p: [f64; 3]) -> [f64; 3] {
    let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    p.map(|c| c / n)
}

fn eval_f64(f: &[f64; 6], p: &[f64; 3]) -> f64 {
    let [x, y, z] = *p;
    f[0] * x * x + f[1] * y * y + f[2] * z * z + f[3] * x * y + f[4] * x * z + f[5] * y * z
}

fn coeff_norm(f: &[f64; 6]) -> f64 {
    f.iter().map(|c| c * c).sum::<f64>().sqrt()
}

enum Attempt {
    Done(IntersectionReport),
    Retry,
}

fn try_intersect(f: &QuadraticForm, g: &QuadraticForm, theta: &[[Rational; 3]; 3]) -> Attempt {
    let ft = f.transform(theta).unwrap();
    let gt = g.transform(theta).unwrap();
    let (a1, b1, c1) = form_coeffs_in_y(&ft);
    let (a2, b2, c2) = form_coeffs_in_y(&gt);
    if a1.is_zero() || a2.is_zero() {
        return Attempt::Retry;
    }
    // Res_y of two quadratics and the linear combination giving the common root.
    let e = &c2.scale(&a1) - &c1.scale(&a2);
    let den = &b2.scale(&a1) - &b1.scale(&a2);
    let res = &(&e * &e) - &(&den * &(&(&b1 * &c2) - &(&b2 * &c1)));
    if res.degree() != Some(4) {
        return Attempt::Retry;
    }
    let roots = match isolate_real_roots(&res) {
        Ok(r) => r,
        Err(_) => return Attempt::Retry,
    };
    // Two base points over one x, or a conjugate pair over a real x, make the
    // common root in y non-unique.
    if roots.iter().any(|(r, _)| r.sign_of(&den).is_zero()) {
        return Attempt::Retry;
    }
    let factors = crate::exactalg::squarefree_decomposition(&res).unwrap();
    let mut imaginary = Vec::new();
    for (factor, mult) in &factors {
        let real = crate::exactalg::isolate_real_roots(factor).unwrap().len();
        let deg = factor.degree().unwrap();
        imaginary.extend(std::iter::repeat_n(*mult, deg - real));
    }
    imaginary.sort_unstable_by(|a, b| b.cmp(a));

    let th: [[f64; 3]; 3] = theta.clone().map(|r| r.map(|c| rational_to_f64(&c)));
    let ff = f.to_f64();
    let gf = g.to_f64();
    let mut residual: f64 = 0.0;
    let mut real_points = Vec::new();
    for (root, mult) in &roots {
        let x0 = refined_f64(root);
        let y0 = -e.eval_f64(x0) / den.eval_f64(x0);
        let v = [x0, y0, 1.0];
        let p: [f64; 3] = std::array::from_fn(|i| (0..3).map(|j| th[i][j] * v[j]).sum());
        let p = normalized(p);
        residual = residual
            .max(eval_f64(&ff, &p).abs() / coeff_norm(&ff))
            .max(eval_f64(&gf, &p).abs() / coeff_norm(&gf));
        real_points.push(BasePoint { coords: p, multiplicity: *mult });
    }
    Attempt::Done(IntersectionReport {
        real_points,
        imaginary_multiplicities: imaginary,
        total_complex_multiplicity: 4,
        residual,
    })
}

fn refined_f64(r: &RealRoot) -> f64 {
    r.to_f64()
}

/// Real base points with multiplicities, and the multiplicities of the
/// imaginary ones.
pub fn intersect_numeric(
    f: &QuadraticForm,
    g: &QuadraticForm,
    opts: &OracleOptions,
) -> Result<IntersectionReport, OracleError> {
    validate(f, g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.max_attempts {
        let theta = random_invertible(&mut rng, 4);
        if let Attempt::Done(report) = try_intersect(f, g, &theta) {
            return Ok(report);
        }
    }
    Err(OracleError::IllConditioned(opts.max_attempts))
}

/// Points on a proper non-empty conic, evenly spaced in the angle of its
/// eigen-parametrization.
pub fn sample_conic(f: &QuadraticForm, n: usize) -> Vec<[f64; 3]> {
    let c = f.to_f64();
    let m = Matrix3::new(
        c[0],
        c[3] / 2.0,
        c[4] / 2.0,
        c[3] / 2.0,
        c[1],
        c[5] / 2.0,
        c[4] / 2.0,
        c[5] / 2.0,
        c[2],
    );
    let eig = SymmetricEigen::new(m);
    let mut idx = [0usize, 1, 2];
    // Make the odd-signed eigenvalue last.
    let pos = (0..3).filter(|&i| eig.eigenvalues[i] > 0.0).count();
    let lone_positive = pos == 1;
    idx.sort_by_key(|&i| (eig.eigenvalues[i] > 0.0) == lone_positive);
    let l: [f64; 3] = idx.map(|i| eig.eigenvalues[i].abs().sqrt());
    let q: [Vector3<f64>; 3] = idx.map(|i| eig.eigenvectors.column(i).into_owned());
    (0..n)
        .map(|k| {
            let t = TAU * (k as f64 + 0.5) / n as f64;
            let v = q[0] * (t.cos() / l[0]) + q[1] * (t.sin() / l[1]) + q[2] * (1.0 / l[2]);
            normalized([v[0], v[1], v[2]])
        })
        .collect()
}

#[derive(Debug, Clone, Copy, Default)]
struct SideCount {
    inside: usize,
    outside: usize,
    near: usize,
}

fn sides(points: &[[f64; 3]], g: &QuadraticForm, tol: f64) -> SideCount {
    let gf = g.to_f64();
    let norm = coeff_norm(&gf);
    let disc = rational_to_f64(&g.discriminant()).signum();
    let mut s = SideCount::default();
    for p in points {
        let v = eval_f64(&gf, p) / norm * disc;
        if v.abs() <= tol {
            s.near += 1;
        } else if v > 0.0 {
            s.inside += 1;
        } else {
            s.outside += 1;
        }
    }
    s
}

/// Which conic lies inside the other. When the conics cross, the nesting
/// near a real tangency point is reported instead, as that is the only
/// sense in which one of them is inner.
pub fn nesting_numeric(
    f: &QuadraticForm,
    g: &QuadraticForm,
    opts: &OracleOptions,
) -> Result<Nesting, OracleError> {
    validate(f, g)?;
    let n = opts.samples.max(32);
    let fs = sample_conic(f, n);
    let gs = sample_conic(g, n);
    let a = sides(&fs, g, opts.tolerance);
    let b = sides(&gs, f, opts.tolerance);
    if a.near * 4 > n || b.near * 4 > n {
        return Ok(Nesting::TangentAmbiguous);
    }
    let f_in = a.outside == 0 && a.inside > 0;
    let g_in = b.outside == 0 && b.inside > 0;
    match (f_in, g_in) {
        (true, false) => return Ok(Nesting::FInsideG),
        (false, true) => return Ok(Nesting::GInsideF),
        (true, true) => return Ok(Nesting::TangentAmbiguous),
        _ => {}
    }
    if a.inside > 0 && a.outside > 0 {
        // Crossing conics: look for a real double base point.
        let report = intersect_numeric(f, g, opts)?;
        if let Some(p) = report.real_points.iter().find(|p| p.multiplicity == 2) {
            return Ok(local_nesting(f, g, &p.coords, opts));
        }
    }
    Ok(Nesting::NotNested)
}

/// Nesting of the two arcs through a common tangency point `p`.
fn local_nesting(f: &QuadraticForm, g: &QuadraticForm, p: &[f64; 3], opts: &OracleOptions) -> Nesting {
    let near = |q: &QuadraticForm| -> Vec<[f64; 3]> {
        let pts = sample_conic(q, 1 << 14);
        let dist = |a: &[f64; 3]| {
            let dot = a[0] * p[0] + a[1] * p[1] + a[2] * p[2];
            1.0 - dot.abs()
        };
        let mut sorted: Vec<_> = pts.into_iter().filter(|a| dist(a) > 1e-10).collect();
        sorted.sort_by(|a, b| dist(a).partial_cmp(&dist(b)).unwrap());
        sorted.truncate(16);
        sorted
    };
    let a = sides(&near(f), g, opts.tolerance * 1e-3);
    let b = sides(&near(g), f, opts.tolerance * 1e-3);
    match (a.outside == 0 && a.inside > 0, b.outside == 0 && b.inside > 0) {
        (true, false) => Nesting::FInsideG,
        (false, true) => Nesting::GInsideF,
        _ if a.inside == 0 && b.inside == 0 => Nesting::NotNested,
        _ => Nesting::TangentAmbiguous,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: [i64; 6]) -> QuadraticForm {
        QuadraticForm::from_ints(c)
    }

    #[test]
    fn base_points_of_representatives() {
        let opts = OracleOptions::default();
        let r = intersect_numeric(&q([3, -2, -1, 0, 0, 0]), &q([3, -1, -2, 0, 0, 0]), &opts).unwrap();
        assert_eq!(r.real_profile(), vec![1, 1, 1, 1]);
        assert!(r.residual < 1e-9);
        let r = intersect_numeric(&q([1, 1, 1, 0, 3, 0]), &q([1, 1, 1, 0, -3, 0]), &opts).unwrap();
        assert!(r.real_points.is_empty());
        assert_eq!(r.imaginary_multiplicities, vec![1, 1, 1, 1]);
        let r = intersect_numeric(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0]), &opts).unwrap();
        assert_eq!(r.real_profile(), vec![4]);
    }

    #[test]
    fn samples_lie_on_the_conic() {
        let f = q([3, -2, -1, 1, 4, -2]);
        let c = f.to_f64();
        for p in sample_conic(&f, 64) {
            assert!(eval_f64(&c, &p).abs() < 1e-12);
        }
    }

    #[test]
    fn concentric_circles() {
        let opts = OracleOptions::default();
        let n = nesting_numeric(&q([1, 1, -1, 0, 0, 0]), &q([1, 1, -2, 0, 0, 0]), &opts).unwrap();
        assert_eq!(n, Nesting::FInsideG);
        let n = nesting_numeric(&q([3, -2, -1, 0, 0, 0]), &q([1, -2, 1, 0, 0, 0]), &opts).unwrap();
        assert_eq!(n, Nesting::NotNested);
    }
}
