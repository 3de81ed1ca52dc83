//! Exact fields: GF(p), GF(p^k) with k ≤ 4, ℚ and F_p(t).
//!
//! A [`Field`] is a cheap `Copy` handle to an interned descriptor. Two
//! handles compare equal exactly when they describe the same field, so
//! descriptor checks are pointer comparisons. Elements ([`Fe`]) carry their
//! field handle and a canonical representation, which makes `==` structural.

mod etale;
mod finite;
pub(crate) mod poly;
mod ratfunc;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

pub use etale::{etale_iso_test, make_etale, EtaleAlgebra, EtaleSpec, KElem};
use finite::FiniteCtx;
pub use ratfunc::{RatFunc, DEGREE_CAP};

/// Largest extension field we build log tables for.
pub const MAX_EXTENSION_SIZE: u32 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("malformed field spec `{0}`")]
    MalformedSpec(String),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("unsupported field: {0}")]
    UnsupportedSize(String),
    #[error("descriptor mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial degree exceeds the cap of {0}")]
    DegreeOverflow(usize),
    #[error("zero input")]
    ZeroInput,
    #[error("wrong field: {0}")]
    WrongField(String),
    #[error("cannot parse element `{0}`: {1}")]
    ParseElement(String, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inseparable quadratic modulus")]
    Inseparable,
}

/// Three-valued answer for questions that are not always decidable here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn and(self, o: Decision) -> Decision {
        match (self, o) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Unknown,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u32),
    Extension { p: u32, k: u32, modulus: Vec<u32> },
    Rationals,
    RatFunc(u32),
}

#[derive(Debug)]
pub struct FieldCtx {
    kind: FieldKind,
    fin: Option<FiniteCtx>,
}

/// Interned field descriptor.
#[derive(Clone, Copy)]
pub struct Field(&'static FieldCtx);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}
impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.0 as *const FieldCtx as usize).hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            FieldKind::Prime(p) => write!(f, "GF({p})"),
            FieldKind::Extension { p, k, modulus } => {
                let cs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "GF({}; {})", p.pow(*k), cs.join(","))
            }
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::RatFunc(p) => write!(f, "F{p}(t)"),
        }
    }
}

static REGISTRY: OnceLock<Mutex<Vec<&'static FieldCtx>>> = OnceLock::new();

fn intern(kind: FieldKind) -> Field {
    let reg = REGISTRY.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = reg.lock().expect("field registry poisoned");
    if let Some(c) = guard.iter().find(|c| c.kind == kind) {
        return Field(c);
    }
    let fin = match &kind {
        FieldKind::Prime(p) => Some(FiniteCtx::prime(*p)),
        FieldKind::Extension { p, modulus, .. } => Some(FiniteCtx::extension(*p, modulus.clone())),
        _ => None,
    };
    let ctx: &'static FieldCtx = Box::leak(Box::new(FieldCtx { kind, fin }));
    guard.push(ctx);
    Field(ctx)
}

impl Field {
    pub fn gf(p: u32) -> Result<Field, FieldError> {
        if !poly::is_prime(p as u64) || p >= (1 << 31) {
            return Err(FieldError::UnsupportedSize(format!("{p} is not a supported prime")));
        }
        Ok(intern(FieldKind::Prime(p)))
    }

    /// GF(p^k) with the monic modulus x^k + c_{k-1}x^{k-1} + … + c_0.
    pub fn gf_ext(p: u32, modulus: &[u32]) -> Result<Field, FieldError> {
        if !poly::is_prime(p as u64) {
            return Err(FieldError::UnsupportedSize(format!("{p} is not prime")));
        }
        let k = modulus.len() as u32;
        if k == 1 {
            // a linear modulus is always irreducible; the field is GF(p)
            return Field::gf(p);
        }
        if k == 0 || k > 4 {
            return Err(FieldError::UnsupportedSize(format!("extension degree {k}")));
        }
        let q = (p as u64).pow(k);
        if q > MAX_EXTENSION_SIZE as u64 {
            return Err(FieldError::UnsupportedSize(format!("{q} elements")));
        }
        let mut m: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        m.push(1);
        if !poly::is_irreducible_small(&m, p) {
            return Err(FieldError::ReducibleModulus(p));
        }
        m.pop();
        Ok(intern(FieldKind::Extension { p, k, modulus: m }))
    }

    /// GF(p^k) with the first irreducible modulus in code order.
    pub fn gf_default(p: u32, k: u32) -> Result<Field, FieldError> {
        if k == 1 {
            return Field::gf(p);
        }
        if !poly::is_prime(p as u64) {
            return Err(FieldError::UnsupportedSize(format!("{p} is not prime")));
        }
        let q = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if k > 4 || q > MAX_EXTENSION_SIZE as u64 {
            return Err(FieldError::UnsupportedSize(format!("{p}^{k}")));
        }
        for code in 0..q {
            let mut c = code;
            let mut m = Vec::new();
            for _ in 0..k {
                m.push((c % p as u64) as u32);
                c /= p as u64;
            }
            let mut full = m.clone();
            full.push(1);
            if poly::is_irreducible_small(&full, p) {
                return Field::gf_ext(p, &m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn rationals() -> Field {
        intern(FieldKind::Rationals)
    }

    pub fn ratfunc(p: u32) -> Result<Field, FieldError> {
        if !poly::is_prime(p as u64) || p >= (1 << 31) {
            return Err(FieldError::UnsupportedSize(format!("{p} is not a supported prime")));
        }
        Ok(intern(FieldKind::RatFunc(p)))
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0.kind
    }

    pub fn characteristic(&self) -> u32 {
        match self.0.kind {
            FieldKind::Prime(p) | FieldKind::RatFunc(p) => p,
            FieldKind::Extension { p, .. } => p,
            FieldKind::Rationals => 0,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.fin.is_some()
    }

    /// Number of elements for finite fields.
    pub fn size(&self) -> Option<u64> {
        self.0.fin.as_ref().map(|f| f.q as u64)
    }

    /// Finite fields and ℚ are perfect; F_p(t) is not.
    pub fn is_perfect(&self) -> bool {
        !matches!(self.0.kind, FieldKind::RatFunc(_))
    }

    fn fin(&self) -> &FiniteCtx {
        self.0.fin.as_ref().expect("finite field expected")
    }

    fn mk(&self, repr: Repr) -> Fe {
        Fe { field: *self, repr }
    }

    pub fn zero(&self) -> Fe {
        match self.0.kind {
            FieldKind::Rationals => self.mk(Repr::Rat(BigRational::zero())),
            FieldKind::RatFunc(_) => self.mk(Repr::Func(RatFunc::zero())),
            _ => self.mk(Repr::Fin(0)),
        }
    }

    pub fn one(&self) -> Fe {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Fe {
        match self.0.kind {
            FieldKind::Rationals => self.mk(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
            FieldKind::RatFunc(p) => {
                self.mk(Repr::Func(RatFunc::constant(n.rem_euclid(p as i64) as u32)))
            }
            _ => self.mk(Repr::Fin(self.fin().from_i64(n))),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Fe {
        match self.0.kind {
            FieldKind::Rationals => self.mk(Repr::Rat(BigRational::from_integer(n.clone()))),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = ((n % &p) + &p) % &p;
                self.from_i64(r.to_i64().expect("residue fits"))
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Fe, FieldError> {
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// Element with the given integer code (finite fields only).
    pub fn from_code(&self, code: u32) -> Fe {
        assert!(code < self.fin().q, "code out of range");
        self.mk(Repr::Fin(code))
    }

    /// GF(p^k) element from its coefficients in the power basis.
    pub fn from_coefficients(&self, c: &[i64]) -> Fe {
        let f = self.fin();
        let c: Vec<u32> = c.iter().map(|&x| x.rem_euclid(f.p as i64) as u32).collect();
        self.mk(Repr::Fin(f.from_coefficients(&c)))
    }

    /// The transcendental t of F_p(t).
    pub fn t(&self) -> Fe {
        match self.0.kind {
            FieldKind::RatFunc(_) => self.mk(Repr::Func(RatFunc { num: vec![0, 1], den: vec![1] })),
            _ => panic!("t() on {self}"),
        }
    }

    /// F_p(t) element num/den from ascending coefficient lists.
    pub fn ratfunc_from_polys(&self, num: &[i64], den: &[i64]) -> Result<Fe, FieldError> {
        let FieldKind::RatFunc(p) = self.0.kind else {
            return Err(FieldError::WrongField(self.to_string()));
        };
        let red = |v: &[i64]| {
            let mut r: Vec<u32> = v.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
            poly::trim(&mut r);
            r
        };
        Ok(self.mk(Repr::Func(RatFunc::new(red(num), red(den), p)?)))
    }

    /// All elements in code order (finite fields only, at most 10⁴ elements).
    pub fn elements(&self) -> Option<Vec<Fe>> {
        let q = self.0.fin.as_ref()?.q;
        if q > MAX_EXTENSION_SIZE {
            return None;
        }
        Some((0..q).map(|c| self.mk(Repr::Fin(c))).collect())
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, height: u32) -> Fe {
        match &self.0.kind {
            FieldKind::Rationals => {
                let h = height.max(1) as i64;
                let n = rng.gen_range(-h..=h);
                let d = rng.gen_range(1..=h);
                self.from_ratio(n, d).expect("nonzero denominator")
            }
            FieldKind::RatFunc(p) => {
                let p = *p as i64;
                let deg = rng.gen_range(0..=height.max(1) as usize);
                let num: Vec<i64> = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                let dd = rng.gen_range(0..=height.max(1) as usize / 2);
                let mut den: Vec<i64> = (0..dd).map(|_| rng.gen_range(0..p)).collect();
                den.push(1);
                self.ratfunc_from_polys(&num, &den).expect("monic denominator")
            }
            _ => {
                let q = self.fin().q;
                self.mk(Repr::Fin(rng.gen_range(0..q)))
            }
        }
    }

    pub fn parse_element(&self, text: &str) -> Result<Fe, FieldError> {
        let mut p = ExprParser { s: text.as_bytes(), i: 0, field: *self, text };
        let v = p.expr()?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

/// Parses "GF(p)", "GF(q; c_0,…,c_{k−1})", "GF(p^k; …)", "GF(q)", "Q" and "Fp(t)".
pub fn parse_field(spec: &str) -> Result<Field, FieldError> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || FieldError::MalformedSpec(spec.to_string());
    if s == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(rest) = s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let (size, coeffs) = match rest.split_once(';') {
            Some((a, b)) => (a, Some(b)),
            None => (rest, None),
        };
        let (p, k) = if let Some((a, b)) = size.split_once('^') {
            let p: u64 = a.parse().map_err(|_| bad())?;
            let k: u32 = b.parse().map_err(|_| bad())?;
            (p, k)
        } else {
            let q: u64 = size.parse().map_err(|_| bad())?;
            prime_power(q).ok_or_else(|| FieldError::UnsupportedSize(format!("{q} is not a prime power")))?
        };
        if p > u32::MAX as u64 {
            return Err(FieldError::UnsupportedSize(size.to_string()));
        }
        let p = p as u32;
        return match coeffs {
            None => Field::gf_default(p, k),
            Some(list) => {
                let cs: Vec<u32> = list
                    .split(',')
                    .map(|c| c.parse::<i64>().map(|v| v.rem_euclid(p as i64) as u32))
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad())?;
                if cs.len() as u32 != k {
                    return Err(bad());
                }
                Field::gf_ext(p, &cs)
            }
        };
    }
    if let Some(rest) = s.strip_prefix('F').and_then(|r| r.strip_suffix("(t)")) {
        let p: u32 = rest.parse().map_err(|_| bad())?;
        return Field::ratfunc(p);
    }
    Err(bad())
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut k = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Fin(u32),
    Rat(BigRational),
    Func(RatFunc),
}

/// A field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fe {
    field: Field,
    repr: Repr,
}

impl Fe {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Fin(c) => *c == 0,
            Repr::Rat(r) => r.is_zero(),
            Repr::Func(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field.one()
    }

    /// Integer code for finite-field elements.
    pub fn code(&self) -> Option<u32> {
        match self.repr {
            Repr::Fin(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match &self.repr {
            Repr::Func(r) => Some(r),
            _ => None,
        }
    }

    fn check(&self, o: &Fe) -> Result<(), FieldError> {
        if self.field != o.field {
            return Err(FieldError::Mismatch(self.field.to_string(), o.field.to_string()));
        }
        Ok(())
    }

    fn p(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn try_add(&self, o: &Fe) -> Result<Fe, FieldError> {
        self.check(o)?;
        let repr = match (&self.repr, &o.repr) {
            (Repr::Fin(a), Repr::Fin(b)) => Repr::Fin(self.field.fin().add(*a, *b)),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.add(b, self.p())?),
            _ => unreachable!(),
        };
        Ok(self.field.mk(repr))
    }

    pub fn try_sub(&self, o: &Fe) -> Result<Fe, FieldError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Fe) -> Result<Fe, FieldError> {
        self.check(o)?;
        let repr = match (&self.repr, &o.repr) {
            (Repr::Fin(a), Repr::Fin(b)) => Repr::Fin(self.field.fin().mul(*a, *b)),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Func(a), Repr::Func(b)) => Repr::Func(a.mul(b, self.p())?),
            _ => unreachable!(),
        };
        Ok(self.field.mk(repr))
    }

    pub fn try_inv(&self) -> Result<Fe, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Fin(a) => Repr::Fin(self.field.fin().inv(*a).expect("nonzero")),
            Repr::Rat(a) => Repr::Rat(a.recip()),
            Repr::Func(a) => Repr::Func(a.inv(self.p())?),
        };
        Ok(self.field.mk(repr))
    }

    pub fn try_div(&self, o: &Fe) -> Result<Fe, FieldError> {
        self.check(o)?;
        self.try_mul(&o.try_inv()?)
    }

    fn neg_ref(&self) -> Fe {
        let repr = match &self.repr {
            Repr::Fin(a) => Repr::Fin(self.field.fin().neg(*a)),
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Func(a) => Repr::Func(a.neg(self.p())),
        };
        self.field.mk(repr)
    }

    pub fn inv(&self) -> Option<Fe> {
        self.try_inv().ok()
    }

    /// Integer power; negative exponents invert (panics on 0^negative).
    pub fn pow(&self, e: i64) -> Fe {
        if e < 0 {
            return self.try_inv().expect("inverse of zero").pow(-e);
        }
        if let Repr::Fin(a) = self.repr {
            return self.field.mk(Repr::Fin(self.field.fin().pow(a, e as u64)));
        }
        let mut base = self.clone();
        let mut r = self.field.one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        r
    }

    /// Square root if one exists in the field.
    pub fn sqrt(&self) -> Result<Option<Fe>, FieldError> {
        match &self.repr {
            Repr::Fin(a) => Ok(self.field.fin().sqrt(*a).map(|r| self.field.mk(Repr::Fin(r)))),
            Repr::Rat(r) => {
                if r.is_negative() {
                    return Ok(None);
                }
                let (n, d) = (r.numer(), r.denom());
                let (sn, sd) = (n.sqrt(), d.sqrt());
                if &(&sn * &sn) == n && &(&sd * &sd) == d {
                    Ok(Some(self.field.mk(Repr::Rat(BigRational::new(sn, sd)))))
                } else {
                    Ok(None)
                }
            }
            Repr::Func(f) => {
                let p = self.p();
                if p == 2 {
                    return Err(FieldError::Unsupported("square roots in F2(t)".into()));
                }
                if f.is_zero() {
                    return Ok(Some(self.clone()));
                }
                let nd = poly::mul(&f.num, &f.den, p);
                match poly::sqrt(&nd, p) {
                    None => Ok(None),
                    Some(s) => Ok(Some(self.field.mk(Repr::Func(RatFunc::new(s, f.den.clone(), p)?)))),
                }
            }
        }
    }

    /// Decides x ∈ (F^×)³.
    pub fn is_cube(&self) -> Result<bool, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        match &self.repr {
            Repr::Fin(a) => {
                let f = self.field.fin();
                let n = (f.q - 1) as u64;
                if n % 3 != 0 {
                    return Ok(true);
                }
                Ok(f.pow(*a, n / 3) == 1)
            }
            Repr::Rat(r) => {
                let cube = |n: &BigInt| {
                    let c = n.cbrt();
                    &(&c * &c * &c) == n
                };
                Ok(cube(r.numer()) && cube(r.denom()))
            }
            Repr::Func(f) => {
                if self.p() != 3 {
                    return Err(FieldError::Unsupported(format!("cube test in {}", self.field)));
                }
                let in_t3 = |v: &[u32]| v.iter().enumerate().all(|(i, &c)| c == 0 || i % 3 == 0);
                Ok(in_t3(&f.num) && in_t3(&f.den))
            }
        }
    }

    /// Decides x/y ∈ (F^×)³.
    pub fn cube_class_equal(&self, y: &Fe) -> Result<bool, FieldError> {
        if self.is_zero() || y.is_zero() {
            return Err(FieldError::ZeroInput);
        }
        self.try_div(y)?.is_cube()
    }

    /// Coordinates (c₀,c₁,c₂) over F₃(t³) with x = c₀ + c₁t + c₂t².
    pub fn f3_subfield_decompose(&self) -> Result<[Fe; 3], FieldError> {
        let Repr::Func(f) = &self.repr else {
            return Err(FieldError::WrongField(self.field.to_string()));
        };
        if self.p() != 3 {
            return Err(FieldError::WrongField(self.field.to_string()));
        }
        let p = 3;
        let q2 = poly::mul(&f.den, &f.den, p);
        let num = poly::mul(&f.num, &q2, p);
        let den = poly::mul(&f.den, &q2, p);
        let mut parts: [Vec<u32>; 3] = [vec![], vec![], vec![]];
        for (i, &c) in num.iter().enumerate() {
            let part = &mut parts[i % 3];
            let e = i - i % 3;
            if part.len() <= e {
                part.resize(e + 1, 0);
            }
            part[e] = c;
        }
        let mk = |n: &Vec<u32>| -> Result<Fe, FieldError> {
            let mut n = n.clone();
            poly::trim(&mut n);
            Ok(self.field.mk(Repr::Func(RatFunc::new(n, den.clone(), p)?)))
        };
        Ok([mk(&parts[0])?, mk(&parts[1])?, mk(&parts[2])?])
    }

    fn order_key(&self) -> (u8, &Repr) {
        let tag = match self.repr {
            Repr::Fin(_) => 0,
            Repr::Rat(_) => 1,
            Repr::Func(_) => 2,
        };
        (tag, &self.repr)
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Code order for finite fields, numeric order on ℚ, coefficient-list order
/// on F_p(t). Only meant for deterministic sorting.
impl Ord for Fe {
    fn cmp(&self, other: &Self) -> Ordering {
        let (ta, ra) = self.order_key();
        let (tb, rb) = other.order_key();
        ta.cmp(&tb).then_with(|| match (ra, rb) {
            (Repr::Fin(a), Repr::Fin(b)) => a.cmp(b),
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Func(a), Repr::Func(b)) => {
                (a.den.len(), &a.den, a.num.len(), &a.num).cmp(&(b.den.len(), &b.den, b.num.len(), &b.num))
            }
            _ => Ordering::Equal,
        })
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Fin(c) => {
                let fin = self.field.fin();
                if fin.k == 1 {
                    write!(f, "{c}")
                } else {
                    let cs: Vec<String> = fin.coefficients(*c).iter().map(|x| x.to_string()).collect();
                    write!(f, "[{}]", cs.join(","))
                }
            }
            Repr::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Func(r) => f.write_str(&r.to_text()),
        }
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Fe> for &Fe {
            type Output = Fe;
            fn $m(self, o: &Fe) -> Fe {
                self.$try(o).unwrap_or_else(|e| panic!("field arithmetic: {e}"))
            }
        }
        impl $tr<Fe> for Fe {
            type Output = Fe;
            fn $m(self, o: Fe) -> Fe {
                (&self).$m(&o)
            }
        }
        impl $tr<&Fe> for Fe {
            type Output = Fe;
            fn $m(self, o: &Fe) -> Fe {
                (&self).$m(o)
            }
        }
        impl $tr<Fe> for &Fe {
            type Output = Fe;
            fn $m(self, o: Fe) -> Fe {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        self.neg_ref()
    }
}

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        self.neg_ref()
    }
}

impl AddAssign<&Fe> for Fe {
    fn add_assign(&mut self, o: &Fe) {
        *self = &*self + o;
    }
}

impl SubAssign<&Fe> for Fe {
    fn sub_assign(&mut self, o: &Fe) {
        *self = &*self - o;
    }
}

impl MulAssign<&Fe> for Fe {
    fn mul_assign(&mut self, o: &Fe) {
        *self = &*self * o;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArithResult {
    Elem(Fe),
    Bool(bool),
}

/// Checked arithmetic entry point. Unary ops ignore `y` but still require a
/// matching descriptor.
pub fn arith(x: &Fe, y: &Fe, op: ArithOp) -> Result<ArithResult, FieldError> {
    x.check(y)?;
    Ok(match op {
        ArithOp::Add => ArithResult::Elem(x.try_add(y)?),
        ArithOp::Sub => ArithResult::Elem(x.try_sub(y)?),
        ArithOp::Mul => ArithResult::Elem(x.try_mul(y)?),
        ArithOp::Div => ArithResult::Elem(x.try_div(y)?),
        ArithOp::Neg => ArithResult::Elem(-x),
        ArithOp::Inv => ArithResult::Elem(x.try_inv()?),
        ArithOp::Eq => ArithResult::Bool(x == y),
    })
}

struct ExprParser<'a> {
    s: &'a [u8],
    i: usize,
    field: Field,
    text: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> FieldError {
        FieldError::ParseElement(self.text.to_string(), format!("{msg} at offset {}", self.i))
    }

    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Result<Fe, FieldError> {
        let mut v = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.i += 1;
                    v = v.try_add(&self.term()?)?;
                }
                b'-' => {
                    self.i += 1;
                    v = v.try_sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn term(&mut self) -> Result<Fe, FieldError> {
        let mut v = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    v = v.try_mul(&self.factor()?)?;
                }
                Some(b'/') => {
                    self.i += 1;
                    let d = self.factor()?;
                    v = v.try_div(&d).map_err(|_| self.err("division by zero"))?;
                }
                Some(c) if c == b'(' || c == b't' || c == b'[' || c.is_ascii_digit() => {
                    v = v.try_mul(&self.factor()?)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn factor(&mut self) -> Result<Fe, FieldError> {
        if self.peek() == Some(b'-') {
            self.i += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.i += 1;
            let neg = if self.peek() == Some(b'-') {
                self.i += 1;
                true
            } else {
                false
            };
            let e = self.integer()?.to_i64().ok_or_else(|| self.err("exponent too large"))?;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(self.err("division by zero"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, FieldError> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.s[start..self.i]).expect("ascii");
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<Fe, FieldError> {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.i += 1;
                Ok(v)
            }
            Some(b't') => {
                self.i += 1;
                if !matches!(self.field.kind(), FieldKind::RatFunc(_)) {
                    return Err(self.err("`t` outside F_p(t)"));
                }
                Ok(self.field.t())
            }
            Some(b'[') => {
                self.i += 1;
                if !matches!(self.field.kind(), FieldKind::Extension { .. }) {
                    return Err(self.err("coefficient list outside GF(p^k)"));
                }
                let mut cs = Vec::new();
                loop {
                    let neg = if self.peek() == Some(b'-') {
                        self.i += 1;
                        true
                    } else {
                        false
                    };
                    let n = self.integer()?;
                    let p = BigInt::from(self.field.characteristic());
                    let r = ((if neg { -n } else { n } % &p) + &p) % &p;
                    cs.push(r.to_i64().expect("small"));
                    match self.peek() {
                        Some(b',') => self.i += 1,
                        Some(b']') => {
                            self.i += 1;
                            break;
                        }
                        _ => return Err(self.err("expected `,` or `]`")),
                    }
                }
                let k = match self.field.kind() {
                    FieldKind::Extension { k, .. } => *k as usize,
                    _ => unreachable!(),
                };
                if cs.len() > k {
                    return Err(self.err("too many coefficients"));
                }
                Ok(self.field.from_coefficients(&cs))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(self.field.from_bigint(&n))
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}
