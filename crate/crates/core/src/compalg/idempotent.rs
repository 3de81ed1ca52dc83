//! Idempotents, the commutative center and para-units.

use rayon::prelude::*;

use super::{conj_about, Algebra, Elem, Tag};
use crate::error::{Error, Result};
use crate::exactfield::{Fe, Field};
use crate::linalg::{vaxpy, vscale, vzero, Matrix, Subspace};
use crate::search::{coefficient_pool, find_in_span};

/// Largest |F|^d that brute-force enumeration will attempt.
pub const BRUTE_FORCE_LIMIT: u64 = 100_000_000;

/// How an idempotent set was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    BruteForce,
    /// {e} ∪ {w : n(e,w) = −1, n(w) = 1} around a para-unit e.
    ParaQuadric,
    /// {e + x : x ∈ Centr(e), x*x = 0} around a quaternionic idempotent e.
    QuaternionicCone,
    /// {e + x : x ∈ rad Centr(e)}.
    RadicalCoset,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentSet {
    /// Every idempotent, sorted by coordinates. `cubic_extension_hint` is set
    /// when a symmetric composition algebra of dimension 8 has none over F.
    Finite { elements: Vec<Elem>, strategy: Strategy, cubic_extension_hint: bool },
    /// {para_unit} ∪ {w : n(para_unit, w) = −1, n(w) = 1} over an infinite field.
    ParaQuadric { para_unit: Elem },
    /// {base + x : x ∈ span, x*x = 0} over an infinite field.
    SquareZeroCone { base: Elem, span: Subspace },
    /// {base + x : x ∈ span} over an infinite field.
    Affine { base: Elem, span: Subspace },
}

impl IdempotentSet {
    pub fn elements(&self) -> Option<&[Elem]> {
        match self {
            IdempotentSet::Finite { elements, .. } => Some(elements),
            _ => None,
        }
    }

    pub fn len(&self) -> Option<usize> {
        self.elements().map(<[Elem]>::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn contains(&self, s: &Algebra, x: &[Fe]) -> bool {
        match self {
            IdempotentSet::Finite { elements, .. } => elements.binary_search_by(|e| e.as_slice().cmp(x)).is_ok(),
            IdempotentSet::ParaQuadric { para_unit } => {
                x == para_unit.as_slice() || is_para_quadric(s, para_unit, x)
            }
            IdempotentSet::SquareZeroCone { base, span } => {
                let d = crate::linalg::vsub(x, base);
                span.contains(&d) && s.mul(&d, &d).iter().all(Fe::is_zero)
            }
            IdempotentSet::Affine { base, span } => span.contains(&crate::linalg::vsub(x, base)),
        }
    }
}

/// Enumerates F^k in lexicographic order of field-element codes and keeps
/// combinations Σ cᵢ basisᵢ accepted by `pred`.
pub(crate) fn enumerate_span(
    field: Field,
    offset: &Elem,
    basis: &[Elem],
    pred: impl Fn(&Elem) -> bool + Sync,
) -> Vec<Elem> {
    let els = field.elements().expect("finite field");
    let q = els.len() as u64;
    let k = basis.len() as u32;
    let total = q.pow(k);
    let mut out: Vec<Elem> = (0..total)
        .into_par_iter()
        .filter_map(|mut n| {
            let mut v = offset.clone();
            for b in basis.iter().rev() {
                let c = &els[(n % q) as usize];
                n /= q;
                vaxpy(&mut v, c, b);
            }
            pred(&v).then_some(v)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

fn is_para_quadric(s: &Algebra, e: &[Fe], w: &[Fe]) -> bool {
    s.polar(e, w) == -s.field().one() && s.norm(w).is_one()
}

/// The para-quadric set around a para-unit, enumerated over the affine
/// hyperplane n(e, w) = −1.
fn para_quadric(s: &Algebra, e: &Elem) -> Vec<Elem> {
    let f = s.field();
    let d = s.dim();
    let ge = s.form().gram().mul_vec(e);
    let j = ge.iter().position(|x| !x.is_zero()).expect("para-unit is not in the radical");
    // w_j = (−1 − Σ_{i≠j} ge_i w_i) / ge_j
    let inv = ge[j].inv().expect("nonzero");
    let mut offset = vzero(f, d);
    offset[j] = -&inv;
    let basis: Vec<Elem> = (0..d)
        .filter(|&i| i != j)
        .map(|i| {
            let mut b = s.basis(i);
            b[j] = -(&ge[i] * &inv);
            b
        })
        .collect();
    let mut out = enumerate_span(f, &offset, &basis, |w| s.norm(w).is_one());
    if out.binary_search(e).is_err() {
        out.push(e.clone());
        out.sort();
    }
    out
}

/// Checks the quaternionic condition through τ_e: τ_e ≠ id and (τ_e − id)² = 0.
fn is_quaternionic(s: &Algebra, e: &[Fe]) -> bool {
    let Ok(t) = crate::maps::tau_from_idempotent(s, e) else {
        return false;
    };
    let n = t.matrix().sub(&Matrix::identity(s.field(), s.dim()));
    !n.is_zero() && n.mul(&n).is_zero()
}

/// rad(B) = B ∩ B^⊥.
pub fn radical_of(s: &Algebra, b: &Subspace) -> Subspace {
    b.intersect(&s.perp(b))
}

/// All idempotents of S, by the cheapest strategy that applies.
pub fn idempotents(s: &Algebra) -> Result<IdempotentSet> {
    let f = s.field();
    let d = s.dim();
    if let Tag::Para { para_unit } = s.tag() {
        if f.is_finite() {
            return Ok(IdempotentSet::Finite {
                elements: para_quadric(s, para_unit),
                strategy: Strategy::ParaQuadric,
                cubic_extension_hint: false,
            });
        }
        return Ok(IdempotentSet::ParaQuadric { para_unit: para_unit.clone() });
    }
    let symmetric8 = s.tag().is_symmetric() && d == 8;
    if symmetric8 && f.characteristic() == 3 {
        if let Some(e) = s.tag().known_idempotent().filter(|e| s.is_idempotent(e)) {
            if is_quaternionic(s, e) {
                let c = s.centralizer(e);
                if f.is_finite() {
                    let zero = vzero(f, d);
                    let xs = enumerate_span(f, &zero, c.basis(), |x| s.mul(x, x).iter().all(Fe::is_zero));
                    let mut elements: Vec<Elem> = xs.iter().map(|x| crate::linalg::vadd(e, x)).collect();
                    elements.sort();
                    return Ok(IdempotentSet::Finite {
                        elements,
                        strategy: Strategy::QuaternionicCone,
                        cubic_extension_hint: false,
                    });
                }
                return Ok(IdempotentSet::SquareZeroCone { base: e.clone(), span: c });
            }
            if !f.is_finite() {
                let g = crate::classify::g_image(s)?;
                if g.dimension == Some(3) {
                    let r = radical_of(s, &s.centralizer(e));
                    return Ok(IdempotentSet::Affine { base: e.clone(), span: r });
                }
            }
        }
    }
    match f.size() {
        Some(q) if (q as f64).powi(d as i32) <= BRUTE_FORCE_LIMIT as f64 => {
            let zero = vzero(f, d);
            let basis: Vec<Elem> = (0..d).map(|i| s.basis(i)).collect();
            let elements = enumerate_span(f, &zero, &basis, |x| s.is_idempotent(x));
            let hint = symmetric8 && elements.is_empty();
            Ok(IdempotentSet::Finite { elements, strategy: Strategy::BruteForce, cubic_extension_hint: hint })
        }
        _ => Err(Error::NoStrategy(format!("no idempotent strategy for a {d}-dimensional algebra over {f}"))),
    }
}

/// Every idempotent by exhaustive enumeration, sorted.
pub fn brute_force_idempotents(s: &Algebra) -> Result<Vec<Elem>> {
    let f = s.field();
    let d = s.dim();
    match f.size() {
        Some(q) if (q as f64).powi(d as i32) <= BRUTE_FORCE_LIMIT as f64 => {
            let basis: Vec<Elem> = (0..d).map(|i| s.basis(i)).collect();
            Ok(enumerate_span(f, &vzero(f, d), &basis, |x| s.is_idempotent(x)))
        }
        _ => Err(Error::NoStrategy(format!("{f}^{d} is too large to enumerate"))),
    }
}

/// {x : x*y = y*x for every y}
pub fn commutative_center(s: &Algebra) -> Subspace {
    let f = s.field();
    let d = s.dim();
    let mut rows: Vec<Elem> = vec![];
    for j in 0..d {
        let y = s.basis(j);
        let m = s.right_matrix(&y).sub(&s.left_matrix(&y));
        rows.extend((0..d).map(|i| m.row(i).to_vec()));
    }
    Subspace::kernel_of(&Matrix::from_rows(f, &rows))
}

/// e*x = x*e = n(x,e)e − x on every basis vector.
pub fn is_para_unit(s: &Algebra, e: &[Fe]) -> bool {
    if !s.is_idempotent(e) {
        return false;
    }
    (0..s.dim()).all(|i| {
        let x = s.basis(i);
        let target = conj_about(s, e, &x);
        s.mul(e, &x) == target && s.mul(&x, e) == target
    })
}

/// A para-unit of S, if one exists. A para-unit commutes with everything, so
/// the search runs inside the commutative center.
pub fn find_para_unit(s: &Algebra) -> Option<Elem> {
    if let Some(e) = s.tag().known_idempotent() {
        if is_para_unit(s, e) {
            return Some(e.clone());
        }
    }
    let k = commutative_center(s);
    let f = s.field();
    match k.dim() {
        0 => None,
        1 => {
            // c*c = μc forces e = c/μ
            let c = &k.basis()[0];
            let cc = s.mul(c, c);
            let mu = k.coordinates(&cc)?.into_iter().next()?;
            let e = vscale(&mu.inv()?, c);
            is_para_unit(s, &e).then_some(e)
        }
        _ => {
            let pool = coefficient_pool(f, 3);
            if let Some(q) = f.size() {
                if (q as f64).powi(k.dim() as i32) <= BRUTE_FORCE_LIMIT as f64 {
                    let zero = vzero(f, s.dim());
                    return enumerate_span(f, &zero, k.basis(), |x| is_para_unit(s, x)).into_iter().next();
                }
            }
            find_in_span(f, k.basis(), &pool, crate::search::SEARCH_CAP, |x| is_para_unit(s, x))
        }
    }
}

/// Does w satisfy w² + w + 1 = 0 in the Hurwitz algebra A?
pub fn is_cube_root_of_unity(a: &Algebra, w: &[Fe]) -> bool {
    let Some(one) = a.unit() else {
        return false;
    };
    let mut v = a.mul(w, w);
    vaxpy(&mut v, &a.field().one(), w);
    vaxpy(&mut v, &a.field().one(), one);
    v.iter().all(Fe::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compalg::{etale_algebra, para, split_okubo, zorn};
    use crate::exactfield::{make_etale, EtaleSpec};

    #[test]
    fn para_zorn_gf2_matches_brute_force() {
        let f = Field::gf(2).unwrap();
        let z = zorn(f);
        let p = para(&z).unwrap();
        let closed = idempotents(&p).unwrap();
        let brute = enumerate_span(f, &z.zero(), &(0..8).map(|i| z.basis(i)).collect::<Vec<_>>(), |x| p.is_idempotent(x));
        assert_eq!(closed.elements().unwrap(), brute.as_slice());
        let one = z.unit().unwrap();
        for w in brute.iter().filter(|w| *w != one) {
            assert!(is_cube_root_of_unity(&z, w));
        }
    }

    #[test]
    fn commutative_centers() {
        let f = Field::gf(3).unwrap();
        let z = zorn(f);
        let p = para(&z).unwrap();
        let k = commutative_center(&p);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(z.unit().unwrap()));
        assert_eq!(commutative_center(&split_okubo(f)).dim(), 0);
        let g7 = Field::gf(7).unwrap();
        let kk = make_etale(g7, EtaleSpec::Quadratic(g7.from_i64(-1), g7.from_i64(-1))).unwrap();
        let pk = para(&etale_algebra(&kk)).unwrap();
        assert_eq!(commutative_center(&pk).dim(), 2);
    }

    #[test]
    fn para_units() {
        let f = Field::gf(3).unwrap();
        let z = zorn(f);
        let p = para(&z).unwrap().with_tag(Tag::Generic);
        assert_eq!(find_para_unit(&p).as_ref(), z.unit());
        assert_eq!(find_para_unit(&split_okubo(f)), None);
    }
}
