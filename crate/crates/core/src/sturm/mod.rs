//! Sturm queries of a quadratic for a cubic from four signed subresultant
//! principal coefficients.

use thiserror::Error;

use crate::exactalg::{det_bareiss, ExactAlgError, Rational, Sign, UniPoly};

/// Signs of `sr₃, sr₂, sr₁, sr₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignSeq4 {
    pub s3: Sign,
    pub s2: Sign,
    pub s1: Sign,
    pub s0: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SturmError {
    #[error("leading sign of the sequence must be nonzero")]
    LeadingZero,
    #[error("expected a cubic and a polynomial of degree at most 2")]
    Degree,
}

impl SignSeq4 {
    pub fn new(s3: Sign, s2: Sign, s1: Sign, s0: Sign) -> Self {
        SignSeq4 { s3, s2, s1, s0 }
    }

    pub fn from_i32(v: [i32; 4]) -> Self {
        let [a, b, c, d] = v.map(Sign::from_i32);
        SignSeq4::new(a, b, c, d)
    }

    pub fn as_array(&self) -> [Sign; 4] {
        [self.s3, self.s2, self.s1, self.s0]
    }

    pub fn negated(&self) -> Self {
        SignSeq4::new(-self.s3, -self.s2, -self.s1, -self.s0)
    }

    pub fn symbols(&self) -> String {
        self.as_array().iter().map(|s| s.symbol()).collect()
    }
}

/// Drops the first pair of consecutive zeros, negating what follows, then
/// counts permanences minus exchanges over consecutive nonzero pairs.
pub fn sturm_query(seq: SignSeq4) -> Result<i32, SturmError> {
    if seq.s3.is_zero() {
        return Err(SturmError::LeadingZero);
    }
    let mut s = seq.as_array().to_vec();
    if let Some(i) = (0..s.len() - 1).find(|&i| s[i].is_zero() && s[i + 1].is_zero()) {
        s.drain(i..i + 2);
        for x in &mut s[i..] {
            *x = -*x;
        }
    }
    Ok(s.windows(2)
        .filter(|w| !w[0].is_zero() && !w[1].is_zero())
        .map(|w| if w[0] == w[1] { 1 } else { -1 })
        .sum())
}

/// `sr₃ … sr₀` of a cubic `V` and a quadratic `W` (formal degree 2), by the
/// explicit determinants.
pub fn signed_subresultants(v: &UniPoly, w: &UniPoly) -> Result<[Rational; 4], SturmError> {
    if v.degree() != Some(3) || w.degree().is_some_and(|d| d > 2) {
        return Err(SturmError::Degree);
    }
    let [v0, v1, v2, v3] = std::array::from_fn(|i| v.coeff(i));
    let [w0, w1, w2] = std::array::from_fn(|i| w.coeff(i));
    let z = Rational::from_integer(0.into());
    let sr1 = det_bareiss(vec![
        vec![v3.clone(), v2.clone(), v1.clone()],
        vec![z.clone(), w2.clone(), w1.clone()],
        vec![w2.clone(), w1.clone(), w0.clone()],
    ]);
    let sr0 = det_bareiss(vec![
        vec![v3.clone(), v2.clone(), v1.clone(), v0.clone(), z.clone()],
        vec![z.clone(), v3.clone(), v2.clone(), v1.clone(), v0],
        vec![z.clone(), z.clone(), w2.clone(), w1.clone(), w0.clone()],
        vec![z.clone(), w2.clone(), w1.clone(), w0.clone(), z.clone()],
        vec![w2.clone(), w1, w0, z.clone(), z],
    ]);
    Ok([v3, w2, sr1, sr0])
}

/// Sturm query of `U` for the cubic `V` via `W = Remainder(U V′, V)`.
pub fn sturm_query_of(u: &UniPoly, v: &UniPoly) -> Result<i32, SturmError> {
    if v.degree() != Some(3) {
        return Err(SturmError::Degree);
    }
    let w = (u * &v.derivative()).remainder(v).map_err(|_: ExactAlgError| SturmError::Degree)?;
    let sr = signed_subresultants(v, &w)?;
    let [a, b, c, d] = sr.each_ref().map(Sign::of);
    sturm_query(SignSeq4::new(a, b, c, d))
}

/// Direct tally over the distinct real roots of `V` of the sign of `U`.
pub fn sturm_query_direct(u: &UniPoly, v: &UniPoly) -> Result<i32, ExactAlgError> {
    let roots = crate::exactalg::isolate_real_roots(v)?;
    Ok(roots.iter().map(|(r, _)| r.sign_of(u).to_i32()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn query(v: [i32; 4]) -> i32 {
        sturm_query(SignSeq4::from_i32(v)).unwrap()
    }

    #[test]
    fn documented_sequences() {
        assert_eq!(query([1, -1, 1, -1]), -3);
        assert_eq!(query([1, 0, 0, -1]), 1);
        assert_eq!(query([1, 0, -1, 0]), 0);
        assert_eq!(query([1, 0, 0, 0]), 0);
        assert_eq!(query([1, 1, 0, 0]), 1);
        assert_eq!(query([1, -1, 0, 0]), -1);
        assert_eq!(query([1, -1, 1, 0]), -2);
        assert_eq!(query([1, 1, 1, 1]), 3);
    }

    #[test]
    fn leading_zero_rejected() {
        assert_eq!(sturm_query(SignSeq4::from_i32([0, 1, 1, 1])), Err(SturmError::LeadingZero));
    }

    #[test]
    fn sr0_is_minus_the_resultant() {
        let v = UniPoly::from_ints(&[6, 21, 21, 6]);
        let w = UniPoly::from_ints(&[-360, -819, -441]);
        let sr = signed_subresultants(&v, &w).unwrap();
        assert_eq!(sr[0], rat(6));
        assert_eq!(sr[1], rat(-441));
        assert_eq!(sr[3], -crate::exactalg::resultant(&v, &w).unwrap());
    }

    #[test]
    fn query_matches_tally_on_in() {
        let v = UniPoly::from_ints(&[6, 21, 21, 6]);
        let psi = UniPoly::from_ints(&[-7, -13, -7]);
        assert_eq!(sturm_query_of(&psi, &v).unwrap(), -3);
        assert_eq!(sturm_query_direct(&psi, &v).unwrap(), -3);
    }
}
