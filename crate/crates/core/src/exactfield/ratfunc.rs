//! Rational functions over GF(p) in lowest terms with monic denominator.

use super::poly::{self, Poly};
use super::FieldError;

pub const DEGREE_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub(crate) num: Poly,
    pub(crate) den: Poly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: vec![], den: vec![1] }
    }

    pub fn constant(c: u32) -> Self {
        RatFunc { num: poly::constant(c), den: vec![1] }
    }

    pub fn numerator(&self) -> &[u32] {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub(crate) fn new(num: Poly, den: Poly, p: u32) -> Result<Self, FieldError> {
        if den.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(Self::zero());
        }
        let g = poly::gcd(&num, &den, p);
        let (mut n, _) = poly::divrem(&num, &g, p);
        let (mut d, _) = poly::divrem(&den, &g, p);
        let (lc, dm) = poly::make_monic(&d, p);
        d = dm;
        n = poly::scale(&n, poly::invm(lc, p), p);
        if n.len() > DEGREE_CAP + 1 || d.len() > DEGREE_CAP + 1 {
            return Err(FieldError::DegreeOverflow(DEGREE_CAP));
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub(crate) fn add(&self, o: &Self, p: u32) -> Result<Self, FieldError> {
        if self.den == o.den {
            return Self::new(poly::add(&self.num, &o.num, p), self.den.clone(), p);
        }
        let n = poly::add(&poly::mul(&self.num, &o.den, p), &poly::mul(&o.num, &self.den, p), p);
        Self::new(n, poly::mul(&self.den, &o.den, p), p)
    }

    pub(crate) fn neg(&self, p: u32) -> Self {
        RatFunc { num: poly::neg(&self.num, p), den: self.den.clone() }
    }

    pub(crate) fn mul(&self, o: &Self, p: u32) -> Result<Self, FieldError> {
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero());
        }
        Self::new(poly::mul(&self.num, &o.num, p), poly::mul(&self.den, &o.den, p), p)
    }

    pub(crate) fn inv(&self, p: u32) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone(), p)
    }

    pub(crate) fn to_text(&self) -> String {
        if self.den == [1] {
            poly::to_text(&self.num)
        } else {
            format!("(({}))/(({}))", poly::to_text(&self.num), poly::to_text(&self.den))
        }
    }
}
