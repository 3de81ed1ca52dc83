//! Quadratic étale algebras K = F[X]/(X² − bX − c).
//!
//! The split algebra F×F is presented as (b, c) = (1, 0), where X is the
//! idempotent (1, 0). Elements are pairs (a₀, a₁) meaning a₀ + a₁X.

use std::fmt;

use super::{Decision, Fe, Field, FieldError};

#[derive(Clone, Debug)]
pub enum EtaleSpec {
    Split,
    Quadratic(Fe, Fe),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KElem {
    pub a0: Fe,
    pub a1: Fe,
}

#[derive(Clone, Debug)]
pub struct EtaleAlgebra {
    field: Field,
    b: Fe,
    c: Fe,
    split: Decision,
}

pub fn make_etale(field: Field, spec: EtaleSpec) -> Result<EtaleAlgebra, FieldError> {
    let (b, c) = match spec {
        EtaleSpec::Split => (field.one(), field.zero()),
        EtaleSpec::Quadratic(b, c) => {
            if b.field() != field || c.field() != field {
                return Err(FieldError::Mismatch(field.to_string(), b.field().to_string()));
            }
            (b, c)
        }
    };
    let separable = if field.characteristic() == 2 {
        !b.is_zero()
    } else {
        !(&b * &b + &field.from_i64(4) * &c).is_zero()
    };
    if !separable {
        return Err(FieldError::Inseparable);
    }
    let mut k = EtaleAlgebra { field, b, c, split: Decision::Unknown };
    k.split = match k.roots() {
        Ok(Some(_)) => Decision::Yes,
        Ok(None) => Decision::No,
        Err(_) => Decision::Unknown,
    };
    Ok(k)
}

impl EtaleAlgebra {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn b(&self) -> &Fe {
        &self.b
    }

    pub fn c(&self) -> &Fe {
        &self.c
    }

    pub fn is_split(&self) -> Decision {
        self.split
    }

    /// b² + 4c.
    pub fn discriminant(&self) -> Fe {
        &self.b * &self.b + &self.field.from_i64(4) * &self.c
    }

    /// Roots of X² − bX − c in F, if the modulus splits.
    pub fn roots(&self) -> Result<Option<(Fe, Fe)>, FieldError> {
        let f = self.field;
        if f.characteristic() == 2 {
            let Some(els) = f.elements() else {
                return Err(FieldError::Unsupported("root search in an infinite field of characteristic 2".into()));
            };
            let r = els.into_iter().find(|x| (x * x - &self.b * x - &self.c).is_zero());
            return Ok(r.map(|r| {
                let r2 = &self.b - &r;
                (r, r2)
            }));
        }
        let two = f.from_i64(2);
        Ok(self.discriminant().sqrt()?.map(|s| ((&self.b + &s) / &two, (&self.b - &s) / &two)))
    }

    pub fn elem(&self, a0: Fe, a1: Fe) -> KElem {
        KElem { a0, a1 }
    }

    pub fn scalar(&self, a: Fe) -> KElem {
        KElem { a0: a, a1: self.field.zero() }
    }

    pub fn zero(&self) -> KElem {
        self.scalar(self.field.zero())
    }

    pub fn one(&self) -> KElem {
        self.scalar(self.field.one())
    }

    pub fn x(&self) -> KElem {
        KElem { a0: self.field.zero(), a1: self.field.one() }
    }

    pub fn add(&self, x: &KElem, y: &KElem) -> KElem {
        KElem { a0: &x.a0 + &y.a0, a1: &x.a1 + &y.a1 }
    }

    pub fn sub(&self, x: &KElem, y: &KElem) -> KElem {
        KElem { a0: &x.a0 - &y.a0, a1: &x.a1 - &y.a1 }
    }

    pub fn neg(&self, x: &KElem) -> KElem {
        KElem { a0: -&x.a0, a1: -&x.a1 }
    }

    pub fn scale(&self, s: &Fe, x: &KElem) -> KElem {
        KElem { a0: s * &x.a0, a1: s * &x.a1 }
    }

    pub fn mul(&self, x: &KElem, y: &KElem) -> KElem {
        let t = &x.a1 * &y.a1;
        KElem {
            a0: &x.a0 * &y.a0 + &t * &self.c,
            a1: &x.a0 * &y.a1 + &x.a1 * &y.a0 + &t * &self.b,
        }
    }

    /// X̄ = b − X.
    pub fn conj(&self, x: &KElem) -> KElem {
        KElem { a0: &x.a0 + &self.b * &x.a1, a1: -&x.a1 }
    }

    pub fn norm(&self, x: &KElem) -> Fe {
        &x.a0 * &x.a0 + &self.b * &x.a0 * &x.a1 - &self.c * &x.a1 * &x.a1
    }

    pub fn trace(&self, x: &KElem) -> Fe {
        &self.field.from_i64(2) * &x.a0 + &self.b * &x.a1
    }

    pub fn inv(&self, x: &KElem) -> Option<KElem> {
        let n = self.norm(x).inv()?;
        Some(self.scale(&n, &self.conj(x)))
    }

    pub fn pow(&self, x: &KElem, e: i64) -> Option<KElem> {
        let base = if e < 0 { self.inv(x)? } else { x.clone() };
        let mut r = self.one();
        for _ in 0..e.unsigned_abs() {
            r = self.mul(&r, &base);
        }
        Some(r)
    }

    /// Image under the identification K ≅ F×F given by the two roots.
    pub fn to_pair(&self, x: &KElem) -> Option<(Fe, Fe)> {
        let (r1, r2) = self.roots().ok()??;
        Some((&x.a0 + &x.a1 * &r1, &x.a0 + &x.a1 * &r2))
    }

    pub fn from_pair(&self, p: &Fe, q: &Fe) -> Option<KElem> {
        let (r1, r2) = self.roots().ok()??;
        let a1 = (p - q).try_div(&(&r1 - &r2)).ok()?;
        let a0 = p - &a1 * &r1;
        Some(KElem { a0, a1 })
    }

    /// Every element of norm 1 (finite fields only).
    pub fn norm_one_elements(&self) -> Option<Vec<KElem>> {
        let els = self.field.elements()?;
        let one = self.field.one();
        let mut out = Vec::new();
        for a0 in &els {
            for a1 in &els {
                let x = KElem { a0: a0.clone(), a1: a1.clone() };
                if self.norm(&x) == one {
                    out.push(x);
                }
            }
        }
        Some(out)
    }

    /// Short isomorphism-class label: "split", "GF(q²)" for finite fields,
    /// otherwise the defining polynomial.
    pub fn iso_label(&self) -> String {
        match (self.split, self.field.size()) {
            (Decision::Yes, _) => "split".into(),
            (Decision::No, Some(q)) => format!("GF({})", q * q),
            _ => format!("{}[x]/(x^2-({})x-({}))", self.field, self.b, self.c),
        }
    }

    pub fn elem_text(&self, x: &KElem) -> String {
        if self.split == Decision::Yes {
            if let Some((p, q)) = self.to_pair(x) {
                return format!("({p},{q})");
            }
        }
        format!("{}+({})x", x.a0, x.a1)
    }

    /// Image of X under an explicit isomorphism K → K′, when one can be built.
    pub fn iso_to(&self, other: &EtaleAlgebra) -> Option<KElem> {
        if self.field != other.field || etale_iso_test(self, other) != Decision::Yes {
            return None;
        }
        if self.split == Decision::Yes {
            let (r1, r2) = self.roots().ok()??;
            return other.from_pair(&r1, &r2);
        }
        let f = self.field;
        if f.characteristic() == 2 {
            return None;
        }
        // X = (b + √D)/2 and √D ↦ s·√D′ with √D′ = 2X′ − b′
        let s = self.discriminant().try_div(&other.discriminant()).ok()?.sqrt().ok()??;
        let two = f.from_i64(2);
        let sqrt_d_prime = KElem { a0: -other.b(), a1: two.clone() };
        let img = other.add(&other.scalar(self.b.clone()), &other.scale(&s, &sqrt_d_prime));
        Some(other.scale(&two.inv()?, &img))
    }

    /// Applies the K-algebra map determined by the image of X.
    pub fn apply_map(&self, other: &EtaleAlgebra, image_of_x: &KElem, a: &KElem) -> KElem {
        other.add(&other.scalar(a.a0.clone()), &other.scale(&a.a1, image_of_x))
    }
}

impl fmt::Display for EtaleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.iso_label())
    }
}

/// Isomorphism test for quadratic étale algebras over the same field.
pub fn etale_iso_test(k: &EtaleAlgebra, k2: &EtaleAlgebra) -> Decision {
    if k.field != k2.field {
        return Decision::No;
    }
    match (k.split, k2.split) {
        (Decision::Yes, Decision::Yes) => return Decision::Yes,
        (Decision::Yes, Decision::No) | (Decision::No, Decision::Yes) => return Decision::No,
        (Decision::No, Decision::No) => {}
        _ => return Decision::Unknown,
    }
    if k.field.is_finite() {
        return Decision::Yes;
    }
    if k.field.characteristic() == 2 {
        return Decision::Unknown;
    }
    match k.discriminant().try_div(&k2.discriminant()).map(|r| r.sqrt()) {
        Ok(Ok(Some(_))) => Decision::Yes,
        Ok(Ok(None)) => Decision::No,
        _ => Decision::Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(f: Field, b: i64, c: i64) -> EtaleAlgebra {
        make_etale(f, EtaleSpec::Quadratic(f.from_i64(b), f.from_i64(c))).unwrap()
    }

    #[test]
    fn gf7_x2_x_1_splits() {
        let f = Field::gf(7).unwrap();
        // oracle: roots of x^2+x+1 mod 7
        let roots: Vec<i64> = (0..7).filter(|x| (x * x + x + 1) % 7 == 0).collect();
        assert_eq!(roots, vec![2, 4]);
        let split = make_etale(f, EtaleSpec::Split).unwrap();
        assert_eq!(etale_iso_test(&split, &quad(f, -1, -1)), Decision::Yes);
    }

    #[test]
    fn gf5_x2_x_1_is_a_field() {
        let f = Field::gf(5).unwrap();
        assert!((0..5).all(|x: i64| (x * x + x + 1) % 5 != 0));
        let split = make_etale(f, EtaleSpec::Split).unwrap();
        let k = quad(f, -1, -1);
        assert_eq!(k.is_split(), Decision::No);
        assert_eq!(etale_iso_test(&split, &k), Decision::No);
        assert_eq!(k.iso_label(), "GF(25)");
    }

    #[test]
    fn inseparable_rejected() {
        let f = Field::gf(3).unwrap();
        assert!(matches!(
            make_etale(f, EtaleSpec::Quadratic(f.zero(), f.zero())),
            Err(FieldError::Inseparable)
        ));
        let g2 = Field::gf(2).unwrap();
        assert!(make_etale(g2, EtaleSpec::Quadratic(g2.zero(), g2.one())).is_err());
        assert_eq!(quad(g2, 1, 1).is_split(), Decision::No);
    }

    #[test]
    fn norm_and_trace_identities() {
        for f in [Field::gf(3).unwrap(), Field::gf(2).unwrap(), Field::gf(7).unwrap()] {
            for k in [make_etale(f, EtaleSpec::Split).unwrap(), quad(f, 1, 1)] {
                let els = f.elements().unwrap();
                for a0 in &els {
                    for a1 in &els {
                        let x = k.elem(a0.clone(), a1.clone());
                        assert_eq!(k.mul(&x, &k.conj(&x)), k.scalar(k.norm(&x)));
                        assert_eq!(k.add(&x, &k.conj(&x)), k.scalar(k.trace(&x)));
                    }
                }
            }
        }
    }

    #[test]
    fn rational_square_classes() {
        let q = Field::rationals();
        let a = quad(q, 0, -1); // x^2 + 1, D = -4
        let b = quad(q, 0, -4); // x^2 + 4, D = -16
        let c = quad(q, 0, 2); // x^2 - 2, D = 8
        assert_eq!(etale_iso_test(&a, &b), Decision::Yes);
        assert_eq!(etale_iso_test(&a, &c), Decision::No);
        let img = a.iso_to(&b).unwrap();
        let sq = b.mul(&img, &img);
        assert_eq!(b.sub(&b.sub(&sq, &b.scale(a.b(), &img)), &b.scalar(a.c().clone())), b.zero());
    }

    #[test]
    fn pair_roundtrip() {
        let f = Field::gf(7).unwrap();
        let k = quad(f, -1, -1);
        let x = k.elem(f.from_i64(3), f.from_i64(5));
        let (p, q) = k.to_pair(&x).unwrap();
        assert_eq!(k.from_pair(&p, &q).unwrap(), x);
        assert_eq!(&p * &q, k.norm(&x));
    }
}
