mod common;

use common::q;
use conic_isotopy::classify::*;
use conic_isotopy::exactalg::*;
use conic_isotopy::invariants::*;
use conic_isotopy::oracle::*;
use conic_isotopy::quadform::{PointPosition, QuadraticForm};
use conic_isotopy::sturm::{sturm_query, SignSeq4};
use conic_isotopy::sweep::*;
use num_traits::Zero;

fn label(f: [i64; 6], g: [i64; 6]) -> String {
    classify(&q(f), &q(g)).unwrap().label.to_string()
}

#[test]
fn labels_at_all_levels() {
    assert_eq!(label([3, -2, -1, 0, 0, 0], [3, -1, -2, 0, 0, 0]), "orbit=I pair=IN couple=IN ambient=IN");
    assert_eq!(label([3, -2, -1, 0, 0, 0], [1, -2, 1, 0, 0, 0]), "orbit=I pair=IS couple=IS ambient=IS");
    let c = couple_class(&q([0, 1, 1, 0, 1, 0]), &q([0, 1, 1, 0, -1, 0])).unwrap();
    assert_eq!(c.to_string(), "IIaS");
    assert_eq!(orbit(&q([1, 1, 1, 0, 3, 0]), &q([1, 1, 1, 0, 4, 0])).unwrap(), PencilOrbit::Ia);
    assert_eq!(orbit(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0])).unwrap(), PencilOrbit::V);
}

#[test]
fn inside_flags_of_tangent_couples() {
    let f = q([0, 1, 0, 0, 1, 0]);
    let g = q([0, 2, 0, 0, 1, 0]);
    let b = InvariantBundle::compute(&f, &g);
    assert_eq!(b.phi.coeffs(), [ratio(-1, 4), rat(-1), ratio(-5, 4), ratio(-1, 2)]);
    assert_eq!(b.antisym, ratio(-3, 256));
    // xz + 2y² is the thinner parabola, so it is the inner conic.
    assert_eq!(couple_class(&f, &g).unwrap().to_string(), "IIIN/g-in");
    assert_eq!(couple_class(&g, &f).unwrap().to_string(), "IIIN/f-in");
    let f = q([-1, -1, 0, 0, 1, 0]);
    let g = q([1, -1, 0, 0, 1, 0]);
    assert_eq!(InvariantBundle::compute(&f, &g).trace_t, ratio(-3, 2));
    assert_eq!(couple_class(&f, &g).unwrap().to_string(), "VN/f-in");
    let e = InvariantBundle::compute(&f, &f);
    assert!(e.antisym.is_zero() && e.trace_t.is_zero());
}

#[test]
fn ambient_merges_and_quartic_codes() {
    let ivn = CoupleClass::new(PairClass::IVN, None);
    assert_eq!(ivn.ambient().to_string(), "IbN∪IVN");
    let ian = CoupleClass::new(PairClass::IaN, Some(Inside::FInsideG));
    assert_eq!(ian.ambient().to_string(), "IaN∪IIIaN/f-in");
    assert_eq!(CoupleClass::new(PairClass::IIS, None).ambient().to_string(), "IIS");
    assert_eq!(quartic_code(PairClass::IN), "17p");
    assert_eq!(quartic_code(PairClass::IIaS), "44p");
    assert_eq!(quartic_code(PairClass::IVN), "18p");
}

#[test]
fn validation_messages_name_the_conic() {
    let xz = q([0, 0, 0, 0, 1, 0]);
    let yy = q([0, 1, 0, 0, 0, 0]);
    assert_eq!(validate(&xz, &yy), Err(ValidationError::DegenerateConic(Which::F)));
    assert_eq!(
        validate(&q([1, 1, 1, 0, 0, 0]), &q([1, 0, -1, 0, 0, 0])),
        Err(ValidationError::EmptyConic(Which::F))
    );
    let f = q([3, -2, -1, 1, 0, 2]);
    assert_eq!(validate(&f, &f.scale(&rat(5))), Err(ValidationError::ProportionalConics));
}

#[test]
fn point_positions() {
    let f0 = q([1, 1, -1, 0, 0, 0]);
    assert_eq!(f0.point_position(&[rat(0), rat(0), rat(1)]).unwrap(), PointPosition::Inside);
    assert_eq!(f0.point_position(&[rat(1), rat(0), rat(1)]).unwrap(), PointPosition::On);
    assert_eq!(f0.point_position(&[rat(1), rat(0), rat(0)]).unwrap(), PointPosition::Outside);
}

#[test]
fn sign_sequences() {
    let s = |v| sturm_query(SignSeq4::from_i32(v)).unwrap();
    assert_eq!(s([1, -1, 1, -1]), -3);
    assert_eq!(s([1, 0, 0, -1]), 1);
    assert_eq!(s([1, 0, -1, 0]), 0);
}

#[test]
fn base_points_and_nesting() {
    let opts = OracleOptions::default();
    let r = intersect_numeric(&q([-1, -1, 0, 0, 1, 0]), &q([1, -1, 0, 0, 1, 0]), &opts).unwrap();
    assert_eq!(r.real_profile(), vec![4]);
    let r = intersect_numeric(&q([1, 1, 1, 0, 3, 0]), &q([1, 1, 1, 0, -3, 0]), &opts).unwrap();
    assert_eq!((r.real_points.len(), r.imaginary_multiplicities.len()), (0, 4));
    // Circles of radii 1 and 1/√2.
    let f = q([1, 1, -1, 0, 0, 0]);
    let g = q([2, 2, -1, 0, 0, 0]);
    assert_eq!(nesting_numeric(&f, &g, &opts).unwrap(), Nesting::GInsideF);
    assert_eq!(couple_class(&f, &g).unwrap().inside, Some(Inside::GInsideF));
    let n = nesting_numeric(&q([3, -2, -1, 0, 0, 0]), &q([1, -2, 1, 0, 0, 0]), &opts).unwrap();
    assert_eq!(n, Nesting::NotNested);
}

#[test]
fn algebraic_sign_at_the_sweep_boundary() {
    let h = UniPoly::from_ints(&[-229376, 0, 25216, 0, 49]);
    let z0 = isolate_real_roots(&h)
        .unwrap()
        .into_iter()
        .map(|(r, _)| r)
        .find(|r| r.cmp_rational(&rat(0)).is_gt())
        .unwrap();
    assert!(z0.cmp_rational(&rat(4)).is_lt());
    assert_eq!(z0.sign_of(&h), Sign::Zero);
    assert_eq!(z0.sign_of(&UniPoly::from_ints(&[-16, 0, 1])), Sign::Negative);
}

fn has_multiple(list: &[UniPoly], p: &UniPoly) -> bool {
    list.iter().any(|q| {
        q.degree() == p.degree()
            && (q.leading_coeff().unwrap() / p.leading_coeff().unwrap()) > rat(0)
            && q.monic() == p.monic()
    })
}

#[test]
fn boundary_polynomials_of_the_worked_families() {
    let b = boundary_polys(&paraboloid_ellipsoid());
    let factors: Vec<UniPoly> = b
        .iter()
        .filter(|p| !p.is_constant())
        .flat_map(|p| squarefree_decomposition(p).unwrap().into_iter().map(|(f, _)| f))
        .collect();
    assert!(factors.iter().any(|f| f == &UniPoly::new(vec![ratio(1, 4), rat(1)])));
    assert!(has_multiple(&factors, &UniPoly::from_ints(&[34, -12, 1])));
    let b = boundary_polys(&two_ellipsoids());
    let h = UniPoly::from_ints(&[-229376, 0, 25216, 0, 49]);
    let sq: Vec<UniPoly> = b.iter().filter(|p| !p.is_constant()).map(|p| squarefree_part(p).unwrap()).collect();
    assert!(sq.iter().any(|p| p.remainder(&h).unwrap().is_zero()));
}

#[test]
fn root_free_subinterval_is_one_segment() {
    let fam = two_ellipsoids();
    let r = sweep(&fam, &rat(-2), &rat(2)).unwrap();
    assert_eq!(r.segments.len(), 1);
    let (f, g) = fam.at(&rat(0));
    assert_eq!(r.segments[0].status.class(), couple_class(&f, &g).ok());
}

#[test]
fn uhlig_pairs_are_the_displayed_matrices() {
    let (f, g) = uhlig_family("U31", &[rat(2), rat(3), rat(5)]).unwrap();
    assert_eq!(f, q([0, 0, 1, 2, 0, 0]));
    assert_eq!(g, q([3, -3, 5, 4, 0, 0]));
    let (f, g) = uhlig_family("U12", &[rat(1), rat(2), rat(3)]).unwrap();
    assert_eq!(f, q([1, 1, -1, 0, 0, 0]));
    assert_eq!(g, q([1, 2, -3, 0, 0, 0]));
    let (f, _) = uhlig_family("U4", &[rat(1)]).unwrap();
    assert_eq!(f, QuadraticForm::from_ints([0, 1, 0, 0, 2, 0]));
}
