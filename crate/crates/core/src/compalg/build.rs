//! Constructors for the algebras the library works with.

use super::{conj_about, find_canonical_basis, Algebra, CanonicalWitness, Elem, QuadraticForm, Tag};
use crate::error::{Error, Result};
use crate::exactfield::{EtaleAlgebra, Fe, Field, KElem};
use crate::linalg::{unit_vector, vfrom_i64, vzero, Matrix};
use crate::maps::{check_automorphism, Automorphism};

/// Canonical multiplication table: entry (s, k) at row i, column j means bᵢ·bⱼ = s·b_k; s = 0 is zero.
#[rustfmt::skip]
const TABLE1: [[(i8, usize); 8]; 8] = [
    //  e1       e2       u1       u2       u3       v1       v2       v3
    [(1, 0), (0, 0), (1, 2), (1, 3), (1, 4), (0, 0), (0, 0), (0, 0)], // e1
    [(0, 0), (1, 1), (0, 0), (0, 0), (0, 0), (1, 5), (1, 6), (1, 7)], // e2
    [(0, 0), (1, 2), (0, 0), (1, 7), (-1, 6), (-1, 0), (0, 0), (0, 0)], // u1
    [(0, 0), (1, 3), (-1, 7), (0, 0), (1, 5), (0, 0), (-1, 0), (0, 0)], // u2
    [(0, 0), (1, 4), (1, 6), (-1, 5), (0, 0), (0, 0), (0, 0), (-1, 0)], // u3
    [(1, 5), (0, 0), (-1, 1), (0, 0), (0, 0), (0, 0), (1, 4), (-1, 3)], // v1
    [(1, 6), (0, 0), (0, 0), (-1, 1), (0, 0), (-1, 4), (0, 0), (1, 2)], // v2
    [(1, 7), (0, 0), (0, 0), (0, 0), (-1, 1), (1, 3), (-1, 2), (0, 0)], // v3
];

/// bᵢ·bⱼ of the canonical basis as an integer coordinate vector.
pub(crate) fn canonical_entry(i: usize, j: usize) -> [i64; 8] {
    let mut v = [0i64; 8];
    let (s, k) = TABLE1[i][j];
    if s != 0 {
        v[k] = s as i64;
    }
    v
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// The Zorn vector-matrix algebra in its canonical basis.
pub fn zorn(field: Field) -> Algebra {
    let mut gram = Matrix::zero(field, 8, 8);
    for (a, b) in [(0, 1), (2, 5), (3, 6), (4, 7)] {
        gram.set(a, b, field.one());
        gram.set(b, a, field.one());
    }
    let form = QuadraticForm::new(vec![field.zero(); 8], gram).expect("valid form");
    let mut unit = vzero(field, 8);
    unit[0] = field.one();
    unit[1] = field.one();
    Algebra::from_fn(field, form, Tag::Hurwitz { unit }, |i, j| vfrom_i64(field, &canonical_entry(i, j)))
        .expect("8x8 table")
        .with_names(names(&super::CANONICAL_NAMES))
        .with_witness(Some(CanonicalWitness::standard(field)))
}

/// The one-dimensional Hurwitz algebra F.
pub fn ground(field: Field) -> Algebra {
    let gram = Matrix::from_rows(field, &[vec![field.from_i64(2)]]);
    let form = QuadraticForm::new(vec![field.one()], gram).expect("valid form");
    Algebra::from_fn(field, form, Tag::Hurwitz { unit: vec![field.one()] }, |_, _| vec![field.one()])
        .expect("1x1 table")
        .with_names(names(&["1"]))
}

/// A quadratic étale algebra as a Hurwitz algebra on the basis 1, X.
pub fn etale_algebra(k: &EtaleAlgebra) -> Algebra {
    let f = k.field();
    let basis = [k.one(), k.x()];
    let coords = |e: &KElem| vec![e.a0.clone(), e.a1.clone()];
    let diag: Vec<Fe> = basis.iter().map(|b| k.norm(b)).collect();
    let mut gram = Matrix::zero(f, 2, 2);
    for i in 0..2 {
        for j in 0..2 {
            gram.set(i, j, k.trace(&k.mul(&basis[i], &k.conj(&basis[j]))));
        }
    }
    let form = QuadraticForm::new(diag, gram).expect("valid form");
    Algebra::from_fn(f, form, Tag::Hurwitz { unit: unit_vector(f, 2, 0) }, |i, j| {
        coords(&k.mul(&basis[i], &basis[j]))
    })
    .expect("2x2 table")
    .with_names(names(&["1", "x"]))
}

/// Cayley–Dickson doubling B ⊕ B·u with u² = μ.
///
/// (a + b·u)(c + d·u) = (ac + μ d̄b) + (da + bc̄)·u,  n(a + b·u) = n(a) − μ n(b).
pub fn cayley_dickson(b: &Algebra, mu: &Fe) -> Result<Algebra> {
    let f = b.field();
    let n = b.dim();
    if !matches!(n, 1 | 2 | 4) {
        return Err(Error::Dimension(n));
    }
    if mu.is_zero() {
        return Err(Error::Precondition("doubling parameter must be nonzero".into()));
    }
    let unit = b.unit().ok_or(Error::NotHurwitz("cayley_dickson"))?.clone();
    let conj: Vec<Elem> = (0..n).map(|i| b.conj(&b.basis(i)).expect("hurwitz")).collect();
    let embed = |x: &Elem, half: usize| {
        let mut v = vzero(f, 2 * n);
        for (i, c) in x.iter().enumerate() {
            v[half * n + i] = c.clone();
        }
        v
    };
    let bs = |i: usize| b.basis(i);
    let table = |i: usize, j: usize| -> Elem {
        let (hi, ii) = (i / n, i % n);
        let (hj, jj) = (j / n, j % n);
        match (hi, hj) {
            (0, 0) => embed(&b.mul(&bs(ii), &bs(jj)), 0),
            (0, 1) => embed(&b.mul(&bs(jj), &bs(ii)), 1),
            (1, 0) => embed(&b.mul(&bs(ii), &conj[jj]), 1),
            _ => {
                let p = b.mul(&conj[jj], &bs(ii));
                embed(&p.iter().map(|x| mu * x).collect(), 0)
            }
        }
    };
    let mut diag = b.form().diag().to_vec();
    diag.extend(b.form().diag().iter().map(|x| -(mu * x)));
    let mut gram = Matrix::zero(f, 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let g = b.form().gram().get(i, j);
            gram.set(i, j, g.clone());
            gram.set(n + i, n + j, -(mu * g));
        }
    }
    let form = QuadraticForm::new(diag, gram)?;
    let letter = match n {
        1 => "i",
        2 => "j",
        _ => "l",
    };
    let mut nm: Vec<String> = b.names().to_vec();
    nm.extend(b.names().iter().map(|s| if s == "1" { letter.to_string() } else { format!("{s}{letter}") }));
    Ok(Algebra::from_fn(f, form, Tag::Hurwitz { unit: embed(&unit, 0) }, table)?.with_names(nm))
}

/// Para-Hurwitz algebra: x∙y = x̄·ȳ.
pub fn para(a: &Algebra) -> Result<Algebra> {
    let unit = a.unit().ok_or(Error::NotHurwitz("para"))?.clone();
    let conj: Vec<Elem> = (0..a.dim()).map(|i| conj_about(a, &unit, &a.basis(i))).collect();
    Ok(Algebra::from_fn(a.field(), a.form().clone(), Tag::Para { para_unit: unit }, |i, j| {
        a.mul(&conj[i], &conj[j])
    })?
    .with_names(a.names().to_vec())
    .with_witness(a.witness().cloned()))
}

/// Petersson algebra C_τ: x*y = τ(x̄)·τ²(ȳ).
pub fn petersson(a: &Algebra, tau: &Matrix) -> Result<Algebra> {
    let unit = a.unit().ok_or(Error::NotHurwitz("petersson"))?.clone();
    check_automorphism(a, tau)?;
    let tau2 = tau.mul(tau);
    if !tau2.mul(tau).is_identity() {
        return Err(Error::NotOrder3);
    }
    let d = a.dim();
    let left: Vec<Elem> = (0..d).map(|i| tau.mul_vec(&conj_about(a, &unit, &a.basis(i)))).collect();
    let right: Vec<Elem> = (0..d).map(|i| tau2.mul_vec(&conj_about(a, &unit, &a.basis(i)))).collect();
    Ok(Algebra::from_fn(a.field(), a.form().clone(), Tag::Petersson { unit }, |i, j| {
        a.mul(&left[i], &right[j])
    })?
    .with_names(a.names().to_vec())
    .with_witness(a.witness().cloned()))
}

/// The split Okubo algebra C_{τ_st}.
pub fn split_okubo(field: Field) -> Algebra {
    let z = zorn(field);
    let tau = crate::maps::tau_st(&z).expect("zorn has a witness");
    okubo_from(&z, tau.matrix())
}

/// Split Okubo algebra realised as C_τ with τ the unipotent long-root
/// automorphism fixing e₁, e₂, u₁, u₂ and sending u₃ to u₃ + u₂. Here the
/// unit of the Zorn algebra is the quaternionic idempotent. Characteristic 3
/// only, where τ has order 3.
pub fn split_okubo_type1(field: Field) -> Result<Algebra> {
    if field.characteristic() != 3 {
        return Err(Error::Characteristic("the type-1 model needs characteristic 3".into()));
    }
    let z = zorn(field);
    let tau = crate::maps::tau_normal_form(&z, 1)?;
    Ok(okubo_from(&z, tau.matrix()))
}

fn okubo_from(z: &Algebra, tau: &Matrix) -> Algebra {
    let p = petersson(z, tau).expect("order-3 automorphism");
    let unit = z.unit().cloned();
    p.with_tag(Tag::Okubo { idempotent: unit })
}

/// The Cayley algebra K ⊕ Kw₁ ⊕ Kw₂ ⊕ Kw₃ with σ(wᵢ,wᵢ) = 0, σ(wᵢ,wⱼ) = −1 and
/// Φ(w₁,w₂,w₃) = a, together with τ_{K,a}.
#[derive(Clone, Debug)]
pub struct KwData {
    pub algebra: Algebra,
    pub tau: Automorphism,
    pub k: EtaleAlgebra,
    pub a: KElem,
}

impl KwData {
    /// Coordinates of κ·wᵢ (i = 0, 1, 2), or of κ itself for `None`.
    pub fn embed(&self, kappa: &KElem, w: Option<usize>) -> Elem {
        kw_embed(self.algebra.field(), kappa, w)
    }

    /// The unit of K.
    pub fn one(&self) -> Elem {
        self.embed(&self.k.one(), None)
    }
}

fn kw_embed(f: Field, kappa: &KElem, w: Option<usize>) -> Elem {
    let mut v = vzero(f, 8);
    let off = w.map_or(0, |i| 2 + 2 * i);
    v[off] = kappa.a0.clone();
    v[off + 1] = kappa.a1.clone();
    v
}

/// Splits a coordinate vector into its K and W components.
fn kw_split(k: &EtaleAlgebra, x: &[Fe]) -> (KElem, [KElem; 3]) {
    let ke = |o: usize| k.elem(x[o].clone(), x[o + 1].clone());
    (ke(0), [ke(2), ke(4), ke(6)])
}

pub fn from_kw(k: &EtaleAlgebra, a: &KElem) -> Result<KwData> {
    let f = k.field();
    if f.characteristic() != 3 {
        return Err(Error::Characteristic("the (K, a) construction needs characteristic 3".into()));
    }
    if !k.norm(a).is_one() {
        return Err(Error::Precondition("n(a) must be 1".into()));
    }
    // σ(wᵢ, wⱼ)
    let sigma = |i: usize, j: usize| if i == j { f.zero() } else { f.from_i64(-1) };
    let s = Matrix::from_rows(f, &(0..3).map(|i| (0..3).map(|j| sigma(i, j)).collect()).collect::<Vec<_>>());
    let s_inv = s.inverse().ok_or_else(|| Error::Inconsistent("σ is degenerate".into()))?;
    let abar = k.conj(a);
    // wᵢ × wⱼ = Σ_k c[i][j][k] w_k with c = ā·S⁻¹ε(·,i,j)
    let eps = |l: usize, i: usize, j: usize| -> i64 {
        if l == i || l == j || i == j {
            return 0;
        }
        if (l, i, j) == (0, 1, 2) || (l, i, j) == (1, 2, 0) || (l, i, j) == (2, 0, 1) {
            1
        } else {
            -1
        }
    };
    let mut cross: Vec<Vec<[KElem; 3]>> = vec![];
    for i in 0..3 {
        let mut row = vec![];
        for j in 0..3 {
            let rhs: Vec<Fe> = (0..3).map(|l| f.from_i64(eps(l, i, j))).collect();
            let sol = s_inv.mul_vec(&rhs);
            row.push(std::array::from_fn(|kk| k.scale(&sol[kk], &abar)));
        }
        cross.push(row);
    }
    let product = |x: &Elem, y: &Elem| -> Elem {
        let (k0, kw) = kw_split(k, x);
        let (l0, lw) = kw_split(k, y);
        let mut out_k = k.mul(&k0, &l0);
        let mut out_w: [KElem; 3] = std::array::from_fn(|_| k.zero());
        for j in 0..3 {
            out_w[j] = k.add(&out_w[j], &k.mul(&k0, &lw[j]));
            out_w[j] = k.add(&out_w[j], &k.mul(&k.conj(&l0), &kw[j]));
        }
        for i in 0..3 {
            for j in 0..3 {
                let s_ij = sigma(i, j);
                let kl = k.mul(&kw[i], &k.conj(&lw[j]));
                out_k = k.sub(&out_k, &k.scale(&s_ij, &kl));
                let coef = k.mul(&k.conj(&kw[i]), &k.conj(&lw[j]));
                for m in 0..3 {
                    out_w[m] = k.add(&out_w[m], &k.mul(&coef, &cross[i][j][m]));
                }
            }
        }
        let mut v = kw_embed(f, &out_k, None);
        for (m, c) in out_w.iter().enumerate() {
            v[2 + 2 * m] = c.a0.clone();
            v[3 + 2 * m] = c.a1.clone();
        }
        v
    };
    let polar = |x: &Elem, y: &Elem| -> Fe {
        let (k0, kw) = kw_split(k, x);
        let (l0, lw) = kw_split(k, y);
        let mut s = k.trace(&k.mul(&k0, &k.conj(&l0)));
        for i in 0..3 {
            for j in 0..3 {
                let t = k.trace(&k.mul(&kw[i], &k.conj(&lw[j])));
                s += &(&sigma(i, j) * &t);
            }
        }
        s
    };
    let basis: Vec<Elem> = (0..8).map(|i| unit_vector(f, 8, i)).collect();
    let diag: Vec<Fe> = (0..8)
        .map(|i| if i < 2 { k.norm(&kw_split(k, &basis[i]).0) } else { f.zero() })
        .collect();
    let mut gram = Matrix::zero(f, 8, 8);
    for i in 0..8 {
        for j in 0..8 {
            gram.set(i, j, polar(&basis[i], &basis[j]));
        }
    }
    let form = QuadraticForm::new(diag, gram)?;
    let alg = Algebra::from_fn(f, form, Tag::Hurwitz { unit: unit_vector(f, 8, 0) }, |i, j| {
        product(&basis[i], &basis[j])
    })?
    .with_names(names(&["1", "x", "w1", "xw1", "w2", "xw2", "w3", "xw3"]));
    let witness = find_canonical_basis(&alg, None).ok();
    let alg = alg.with_witness(witness);
    // τ fixes K and cycles w₁ → w₂ → w₃ → w₁
    let mut m = Matrix::zero(f, 8, 8);
    m.set(0, 0, f.one());
    m.set(1, 1, f.one());
    for i in 0..3 {
        let j = (i + 1) % 3;
        m.set(2 + 2 * j, 2 + 2 * i, f.one());
        m.set(3 + 2 * j, 3 + 2 * i, f.one());
    }
    let tau = Automorphism::new(&alg, m)?;
    Ok(KwData { algebra: alg, tau, k: k.clone(), a: a.clone() })
}
