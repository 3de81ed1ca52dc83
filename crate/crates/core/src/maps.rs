//! Linear maps on algebras: automorphism checks, named order-3 maps, fixed
//! spaces, Segre symbols and idempotent-to-automorphism transport.

use std::fmt;

use crate::compalg::{conj_about, Algebra, Elem, Tag, CANONICAL_NAMES};
use crate::error::{Error, Result};
use crate::exactfield::{parse_field, Fe, Field, DEGREE_CAP};
use crate::linalg::{vaxpy, vneg, vsub, Matrix, Subspace};

/// Orders above this are reported as unknown.
pub const ORDER_CAP: u32 = 512;

/// Why a matrix fails to be an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape,
    Singular,
    /// φ(bᵢ·bⱼ) ≠ φ(bᵢ)·φ(bⱼ)
    Product(usize, usize),
    /// n(φbᵢ, φbⱼ) ≠ n(bᵢ, bⱼ)
    Polar(usize, usize),
    /// n(φbᵢ) ≠ n(bᵢ)
    Norm(usize),
}

impl Violation {
    pub fn describe(&self, a: &Algebra) -> String {
        let n = |i: &usize| a.names()[*i].clone();
        match self {
            Violation::Shape => "matrix shape does not match the algebra".into(),
            Violation::Singular => "matrix is singular".into(),
            Violation::Product(i, j) => format!("product not preserved on ({}, {})", n(i), n(j)),
            Violation::Polar(i, j) => format!("polar form not preserved on ({}, {})", n(i), n(j)),
            Violation::Norm(i) => format!("norm not preserved on {}", n(i)),
        }
    }
}

/// First failure of multiplicativity, invertibility or isometry, if any.
pub fn find_violation(a: &Algebra, m: &Matrix) -> Option<Violation> {
    let d = a.dim();
    if m.rows() != d || m.cols() != d || m.field() != a.field() {
        return Some(Violation::Shape);
    }
    if m.rank() != d {
        return Some(Violation::Singular);
    }
    let img: Vec<Elem> = (0..d).map(|i| m.col(i)).collect();
    for i in 0..d {
        for j in 0..d {
            if m.mul_vec(a.basis_product(i, j)) != a.mul(&img[i], &img[j]) {
                return Some(Violation::Product(i, j));
            }
        }
    }
    for i in 0..d {
        if a.norm(&img[i]) != a.form().diag()[i] {
            return Some(Violation::Norm(i));
        }
        for j in i + 1..d {
            if a.polar(&img[i], &img[j]) != *a.form().gram().get(i, j) {
                return Some(Violation::Polar(i, j));
            }
        }
    }
    None
}

pub fn is_automorphism(a: &Algebra, m: &Matrix) -> bool {
    find_violation(a, m).is_none()
}

pub fn check_automorphism(a: &Algebra, m: &Matrix) -> Result<()> {
    match find_violation(a, m) {
        None => Ok(()),
        Some(v) => Err(Error::NotAutomorphism(v.describe(a))),
    }
}

/// Least k ≤ ORDER_CAP with mᵏ = id. Over F_p(t) the search also stops once
/// the powers would outgrow the degree cap.
pub fn matrix_order(m: &Matrix) -> Option<u32> {
    let step = func_degree(m);
    let mut p = m.clone();
    for k in 1..=ORDER_CAP {
        if p.is_identity() {
            return Some(k);
        }
        if func_degree(&p) + step > DEGREE_CAP {
            return None;
        }
        p = p.mul(m);
    }
    None
}

fn func_degree(m: &Matrix) -> usize {
    m.entries()
        .iter()
        .filter_map(Fe::as_ratfunc)
        .map(|r| r.numerator().len() + r.denominator().len())
        .max()
        .unwrap_or(0)
}

/// A validated automorphism, columns are images of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    matrix: Matrix,
}

impl Automorphism {
    pub fn new(a: &Algebra, m: Matrix) -> Result<Automorphism> {
        check_automorphism(a, &m)?;
        Ok(Automorphism { matrix: m })
    }

    pub fn identity(a: &Algebra) -> Automorphism {
        Automorphism { matrix: Matrix::identity(a.field(), a.dim()) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn order(&self) -> Option<u32> {
        matrix_order(&self.matrix)
    }

    pub fn apply(&self, x: &[Fe]) -> Elem {
        self.matrix.mul_vec(x)
    }

    /// self ∘ other
    pub fn compose(&self, a: &Algebra, other: &Automorphism) -> Result<Automorphism> {
        Automorphism::new(a, self.matrix.mul(&other.matrix))
    }

    pub fn inverse(&self, a: &Algebra) -> Result<Automorphism> {
        let inv = self.matrix.inverse().ok_or_else(|| Error::Inconsistent("automorphism not invertible".into()))?;
        Automorphism::new(a, inv)
    }

    /// ψ ∘ self ∘ ψ⁻¹
    pub fn conjugate_by(&self, a: &Algebra, psi: &Automorphism) -> Result<Automorphism> {
        let inv = psi.matrix.inverse().ok_or_else(|| Error::Inconsistent("automorphism not invertible".into()))?;
        Automorphism::new(a, psi.matrix.mul(&self.matrix).mul(&inv))
    }
}

/// Matrix acting on witness coordinates, transported to the algebra's basis.
fn from_witness_coords(a: &Algebra, std: &Matrix) -> Result<Matrix> {
    let w = a.witness().ok_or_else(|| Error::Precondition("algebra has no canonical witness".into()))?;
    let wm = w.matrix(a.field());
    let wi = wm.inverse().ok_or_else(|| Error::Inconsistent("witness is not a basis".into()))?;
    Ok(wm.mul(std).mul(&wi))
}

/// τ_st fixes e₁, e₂ and sends u₁ → u₂ → u₃ → u₁, v₁ → v₂ → v₃ → v₁.
pub fn tau_st(a: &Algebra) -> Result<Automorphism> {
    let f = a.field();
    let mut p = Matrix::zero(f, 8, 8);
    p.set(0, 0, f.one());
    p.set(1, 1, f.one());
    for i in 0..3 {
        let j = (i + 1) % 3;
        p.set(2 + j, 2 + i, f.one());
        p.set(5 + j, 5 + i, f.one());
    }
    Automorphism::new(a, from_witness_coords(a, &p)?)
}

/// x ↦ (w·x)·w² for w with w³ = 1.
pub fn tau_w(a: &Algebra, w: &[Fe]) -> Result<Automorphism> {
    let one = a.unit().ok_or(Error::NotHurwitz("tau_w"))?;
    let w2 = a.mul(w, w);
    if a.mul(&w2, w) != *one {
        return Err(Error::Precondition("w^3 != 1".into()));
    }
    let cols: Vec<Elem> = (0..a.dim()).map(|i| a.mul(&a.mul(w, &a.basis(i)), &w2)).collect();
    Automorphism::new(a, Matrix::from_cols(a.field(), &cols))
}

/// The four normal forms of order-3 automorphisms in characteristic 3, in the
/// algebra's canonical witness. Each fixes u₁ and u₂; on u₃:
///
/// 1. u₃ ↦ u₃ + u₂
/// 2. τ_st
/// 3. u₃ ↦ u₃ + v₃ − (e₁ − e₂), i.e. x ↦ w·x·w² with w = 1 − v₃
/// 4. u₃ ↦ u₃ + u₂ + v₃ − (e₁ − e₂), the composite of 1 and 3
pub fn tau_normal_form(a: &Algebra, kind: u8) -> Result<Automorphism> {
    let f = a.field();
    let type1 = || {
        let mut p = Matrix::identity(f, 8);
        // u₃ ↦ u₃ + u₂, v₂ ↦ v₂ − v₃
        p.set(3, 4, f.one());
        p.set(7, 6, f.from_i64(-1));
        p
    };
    let type3 = || -> Result<Matrix> {
        let w = a.witness().ok_or_else(|| Error::Precondition("algebra has no canonical witness".into()))?;
        let one = a.unit().ok_or(Error::NotHurwitz("tau_normal_form"))?;
        let wv = vsub(one, &w.vectors[7]);
        let w2 = a.mul(&wv, &wv);
        // in witness coordinates
        let wm = w.matrix(f);
        let wi = wm.inverse().ok_or_else(|| Error::Inconsistent("witness is not a basis".into()))?;
        let cols: Vec<Elem> = (0..8).map(|i| wi.mul_vec(&a.mul(&a.mul(&wv, &w.vectors[i]), &w2))).collect();
        Ok(Matrix::from_cols(f, &cols))
    };
    let std = match kind {
        1 => type1(),
        2 => return tau_st(a),
        3 => type3()?,
        4 => type1().mul(&type3()?),
        _ => return Err(Error::Precondition(format!("normal form {kind} does not exist"))),
    };
    Automorphism::new(a, from_witness_coords(a, &std)?)
}

/// Fix(φ) = ker(φ − id).
pub fn fix(phi: &Automorphism) -> Subspace {
    let m = phi.matrix();
    Subspace::kernel_of(&m.sub(&Matrix::identity(m.field(), m.rows())))
}

/// {x : e*x = x*e}
pub fn centr(s: &Algebra, e: &[Fe]) -> Subspace {
    s.centralizer(e)
}

/// Jordan block sizes of a nilpotent map, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SegreSymbol(pub Vec<usize>);

impl SegreSymbol {
    pub fn parse(text: &str) -> Option<SegreSymbol> {
        let inner = text.trim().strip_prefix('(')?.strip_suffix(')')?;
        let mut parts: Vec<usize> = vec![];
        for tok in inner.split(',') {
            let tok = tok.trim();
            let (b, e): (usize, usize) = match tok.split_once('^') {
                Some((b, e)) => (b.parse().ok()?, e.parse().ok()?),
                None => (tok.parse().ok()?, 1usize),
            };
            parts.extend(std::iter::repeat(b).take(e));
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Some(SegreSymbol(parts))
    }
}

impl fmt::Display for SegreSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out: Vec<String> = vec![];
        let mut i = 0;
        while i < self.0.len() {
            let b = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == b).count();
            out.push(if run == 1 { b.to_string() } else { format!("{b}^{run}") });
            i += run;
        }
        write!(f, "({})", out.join(","))
    }
}

/// Segre symbol from the rank sequence of powers: the number of blocks of
/// size ≥ k is rank(Nᵏ⁻¹) − rank(Nᵏ).
pub fn segre_symbol(n: &Matrix) -> Result<SegreSymbol> {
    let d = n.rows();
    let mut ranks = vec![d];
    let mut p = Matrix::identity(n.field(), d);
    for _ in 0..d {
        p = p.mul(n);
        ranks.push(p.rank());
    }
    if ranks[d] != 0 {
        return Err(Error::NotNilpotent);
    }
    let at_least: Vec<usize> = (1..=d).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut parts = vec![];
    for k in (1..=d).rev() {
        let bigger = if k < d { at_least[k] } else { 0 };
        parts.extend(std::iter::repeat(k).take(at_least[k - 1] - bigger));
    }
    Ok(SegreSymbol(parts))
}

/// τ_e(x) = e*(e*x) for an idempotent e of a symmetric composition algebra.
/// Also checks e*(e*x) = n(e,x)e − x*e on every basis vector and τ_e³ = id.
pub fn tau_from_idempotent(s: &Algebra, e: &[Fe]) -> Result<Automorphism> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let d = s.dim();
    let mut cols = vec![];
    for i in 0..d {
        let x = s.basis(i);
        let t = s.mul(e, &s.mul(e, &x));
        let mut other = vneg(&s.mul(&x, e));
        vaxpy(&mut other, &s.polar(e, &x), e);
        if t != other {
            return Err(Error::Inconsistent(format!("the two expressions for tau_e differ on {}", s.names()[i])));
        }
        cols.push(t);
    }
    let m = Matrix::from_cols(s.field(), &cols);
    if !m.pow(3).is_identity() {
        return Err(Error::NotOrder3);
    }
    Automorphism::new(s, m)
}

/// The Hurwitz algebra x·y = (e*x)*(y*e) with unit e.
pub fn hurwitz_from_idempotent(s: &Algebra, e: &[Fe]) -> Result<Algebra> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let d = s.dim();
    let left: Vec<Elem> = (0..d).map(|i| s.mul(e, &s.basis(i))).collect();
    let right: Vec<Elem> = (0..d).map(|j| s.mul(&s.basis(j), e)).collect();
    let h = Algebra::from_fn(s.field(), s.form().clone(), Tag::Hurwitz { unit: e.to_vec() }, |i, j| {
        s.mul(&left[i], &right[j])
    })?
    .with_names(s.names().to_vec());
    let w = if d == 8 { crate::compalg::find_canonical_basis(&h, None).ok() } else { None };
    Ok(h.with_witness(w))
}

/// A linear isomorphism between subspaces given by matching bases:
/// `source[i] ↦ image[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraIso {
    pub source: Vec<Elem>,
    pub image: Vec<Elem>,
}

impl SubalgebraIso {
    /// Image of an element of span(source).
    pub fn map(&self, a: &Algebra, x: &[Fe]) -> Option<Elem> {
        let m = Matrix::from_cols(a.field(), &self.source);
        let c = m.solve(x)?;
        let mut out = a.zero();
        for (ci, v) in c.iter().zip(&self.image) {
            vaxpy(&mut out, ci, v);
        }
        Some(out)
    }

    /// Checks both sides are subalgebras of the same dimension and that the
    /// correspondence preserves products and the norm.
    pub fn validate(&self, a: &Algebra) -> Result<()> {
        let f = a.field();
        let k = self.source.len();
        if self.image.len() != k {
            return Err(Error::Precondition("source and image differ in length".into()));
        }
        let sb = Subspace::span(f, a.dim(), &self.source);
        let ib = Subspace::span(f, a.dim(), &self.image);
        if sb.dim() != k || ib.dim() != k {
            return Err(Error::Precondition("source or image is not linearly independent".into()));
        }
        for i in 0..k {
            if a.norm(&self.source[i]) != a.norm(&self.image[i]) {
                return Err(Error::Precondition(format!("norm mismatch on basis vector {i}")));
            }
            for j in 0..k {
                let p = a.mul(&self.source[i], &self.source[j]);
                let mapped = self
                    .map(a, &p)
                    .ok_or_else(|| Error::Precondition("source is not closed under the product".into()))?;
                if mapped != a.mul(&self.image[i], &self.image[j]) {
                    return Err(Error::Precondition(format!("not an isomorphism on the pair ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// The automorphism determined once the source spans the algebra.
    pub fn to_automorphism(&self, a: &Algebra) -> Result<Automorphism> {
        if self.source.len() != a.dim() {
            return Err(Error::Precondition("isomorphism does not cover the algebra".into()));
        }
        let s = Matrix::from_cols(a.field(), &self.source);
        let t = Matrix::from_cols(a.field(), &self.image);
        let si = s.inverse().ok_or_else(|| Error::Precondition("source is not a basis".into()))?;
        Automorphism::new(a, t.mul(&si))
    }
}

/// Extends φ: B → B' to B ⊕ B·u → B' ⊕ B'·u' by a + b·u ↦ φ(a) + φ(b)·u'.
pub fn extend_by_doubling(a: &Algebra, phi: &SubalgebraIso, u: &[Fe], u2: &[Fe]) -> Result<SubalgebraIso> {
    let k = phi.source.len();
    if !matches!(k, 1 | 2 | 4) {
        return Err(Error::Dimension(k));
    }
    phi.validate(a)?;
    let nu = a.norm(u);
    if nu.is_zero() || nu != a.norm(u2) {
        return Err(Error::Precondition("u and u' must have equal nonzero norm".into()));
    }
    if phi.source.iter().any(|b| !a.polar(b, u).is_zero()) {
        return Err(Error::Precondition("u is not orthogonal to B".into()));
    }
    if phi.image.iter().any(|b| !a.polar(b, u2).is_zero()) {
        return Err(Error::Precondition("u' is not orthogonal to B'".into()));
    }
    let mut out = phi.clone();
    for i in 0..k {
        out.source.push(a.mul(&phi.source[i], u));
        out.image.push(a.mul(&phi.image[i], u2));
    }
    out.validate(a)?;
    Ok(out)
}

/// "map d over F" followed by one line per column.
pub fn format_map(m: &Matrix) -> String {
    let mut s = format!("map {} over {}\n", m.rows(), m.field());
    for j in 0..m.cols() {
        let col: Vec<String> = m.col(j).iter().map(|x| x.to_string()).collect();
        s.push_str(&col.join(" "));
        s.push('\n');
    }
    s
}

pub fn parse_map(text: &str) -> Result<Matrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = lines.next().ok_or_else(|| Error::Parse("empty map file".into()))?;
    let rest = header.trim().strip_prefix("map ").ok_or_else(|| Error::Parse("expected 'map d over F'".into()))?;
    let (d, fs) = rest.split_once(" over ").ok_or_else(|| Error::Parse("expected 'map d over F'".into()))?;
    let d: usize = d.trim().parse().map_err(|_| Error::Parse(format!("bad dimension '{d}'")))?;
    let field = parse_field(fs.trim())?;
    let entries = parse_entries(field, lines)?;
    if entries.len() != d * d {
        return Err(Error::Parse(format!("expected {} entries, found {}", d * d, entries.len())));
    }
    let cols: Vec<Elem> = entries.chunks(d).map(|c| c.to_vec()).collect();
    Ok(Matrix::from_cols(field, &cols))
}

pub(crate) fn parse_entries<'a>(field: Field, lines: impl Iterator<Item = &'a str>) -> Result<Vec<Fe>> {
    let mut out = vec![];
    for l in lines {
        for tok in l.split_whitespace() {
            out.push(field.parse_element(tok)?);
        }
    }
    Ok(out)
}

/// Names of the canonical basis, for callers building maps by hand.
pub fn canonical_index(name: &str) -> Option<usize> {
    CANONICAL_NAMES.iter().position(|n| *n == name)
}

/// Conjugation x ↦ x̄ restricted to a unital algebra, as a matrix.
pub fn conjugation_matrix(a: &Algebra) -> Result<Matrix> {
    let one = a.unit().ok_or(Error::NotHurwitz("conjugation"))?;
    let cols: Vec<Elem> = (0..a.dim()).map(|i| conj_about(a, one, &a.basis(i))).collect();
    Ok(Matrix::from_cols(a.field(), &cols))
}



#[cfg(test)]
mod tests {
    use super::*;
    use crate::compalg::{petersson, split_okubo, zorn, E1, E2, U1, U2, U3, V1, V2, V3};

    fn gf(p: u32) -> Field {
        Field::gf(p).unwrap()
    }

    #[test]
    fn tau_st_examples() {
        let z = zorn(gf(7));
        let t = tau_st(&z).unwrap();
        assert_eq!(t.apply(&z.basis(U1)), z.basis(U2));
        assert_eq!(t.apply(&z.basis(E1)), z.basis(E1));
        assert_eq!(t.order(), Some(3));
        assert_eq!(Automorphism::identity(&z).order(), Some(1));
    }

    #[test]
    fn swapping_u1_u2_is_not_an_automorphism() {
        let f = gf(5);
        let z = zorn(f);
        let mut p = Matrix::identity(f, 8);
        for (a, b) in [(U1, U2)] {
            p.set(a, a, f.zero());
            p.set(b, b, f.zero());
            p.set(a, b, f.one());
            p.set(b, a, f.one());
        }
        assert!(matches!(find_violation(&z, &p), Some(Violation::Product(_, _))));
    }

    #[test]
    fn peirce_swap_has_order_two() {
        let f = gf(5);
        let z = zorn(f);
        let mut p = Matrix::zero(f, 8, 8);
        // e₁ ↔ e₂, uᵢ ↔ vᵢ
        p.set(E2, E1, f.one());
        p.set(E1, E2, f.one());
        for i in 0..3 {
            p.set(V1 + i, U1 + i, f.one());
            p.set(U1 + i, V1 + i, f.one());
        }
        let a = Automorphism::new(&z, p).unwrap();
        assert_eq!(a.order(), Some(2));
    }

    #[test]
    fn segre_symbols() {
        let f = gf(3);
        assert_eq!(segre_symbol(&Matrix::zero(f, 8, 8)).unwrap().to_string(), "(1^8)");
        let z = zorn(f);
        let id = Matrix::identity(f, 8);
        let t1 = tau_normal_form(&z, 1).unwrap();
        assert_eq!(segre_symbol(&t1.matrix().sub(&id)).unwrap().to_string(), "(2^2,1^4)");
        assert!(segre_symbol(&id).is_err());
        assert_eq!(SegreSymbol::parse("(3,2^2,1)").unwrap().0, vec![3, 2, 2, 1]);
    }

    #[test]
    fn fix_of_tau_st() {
        let z = zorn(gf(7));
        let fx = fix(&tau_st(&z).unwrap());
        assert_eq!(fx.dim(), 4);
        let f = z.field();
        let s = |i: usize, j: usize, k: usize| {
            let mut v = z.zero();
            for x in [i, j, k] {
                v[x] = f.one();
            }
            v
        };
        assert!(fx.contains(&s(U1, U2, U3)) && fx.contains(&s(V1, V2, V3)));
    }

    #[test]
    fn tau_w_char3() {
        let f = gf(3);
        let z = zorn(f);
        let mut w = z.unit().unwrap().clone();
        w[U1] = f.one();
        let t = tau_w(&z, &w).unwrap();
        let mut expect = z.basis(U2);
        expect[V3] = f.from_i64(-1);
        assert_eq!(t.apply(&z.basis(U2)), expect);
        let id = Matrix::identity(f, 8);
        assert_eq!(segre_symbol(&t.matrix().sub(&id)).unwrap().to_string(), "(3,2^2,1)");
        // the bracketing does not matter
        let w2 = z.mul(&w, &w);
        for i in 0..8 {
            let x = z.basis(i);
            assert_eq!(z.mul(&z.mul(&w, &x), &w2), z.mul(&w, &z.mul(&x, &w2)));
        }
        assert_eq!(tau_w(&z, z.unit().unwrap()).unwrap().order(), Some(1));
    }

    #[test]
    fn normal_forms_on_u3() {
        let f = gf(3);
        let z = zorn(f);
        let t3 = tau_normal_form(&z, 3).unwrap();
        let mut e = z.basis(U3);
        e[V3] = f.one();
        e[E1] = f.from_i64(-1);
        e[E2] = f.one();
        assert_eq!(t3.apply(&z.basis(U3)), e);
        let t4 = tau_normal_form(&z, 4).unwrap();
        e[U2] = f.one();
        assert_eq!(t4.apply(&z.basis(U3)), e);
        for t in [t3, t4] {
            assert_eq!(t.apply(&z.basis(U1)), z.basis(U1));
            assert_eq!(t.apply(&z.basis(U2)), z.basis(U2));
            assert_eq!(t.order(), Some(3));
        }
    }

    #[test]
    fn tau_from_unit_of_split_okubo() {
        let f = gf(3);
        let s = split_okubo(f);
        let one = s.tag().known_idempotent().unwrap().clone();
        let t = tau_from_idempotent(&s, &one).unwrap();
        assert_eq!(t.order(), Some(3));
        let h = hurwitz_from_idempotent(&s, &one).unwrap();
        assert!(crate::compalg::check_hurwitz(&h).is_ok());
    }

    #[test]
    fn para_unit_gives_identity() {
        let f = gf(5);
        let z = zorn(f);
        let p = crate::compalg::para(&z).unwrap();
        let t = tau_from_idempotent(&p, z.unit().unwrap()).unwrap();
        assert_eq!(t.order(), Some(1));
        let idm = Matrix::identity(f, 8);
        let q = petersson(&z, &idm).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(q.basis_product(i, j), p.basis_product(i, j));
            }
        }
    }

    #[test]
    fn doubling_identity_and_mismatch() {
        let f = gf(5);
        let z = zorn(f);
        let b = vec![z.basis(E1), z.basis(E2)];
        let id = SubalgebraIso { source: b.clone(), image: b };
        let mut u = z.basis(U1);
        u[V1] = f.one();
        let step = extend_by_doubling(&z, &id, &u, &u).unwrap();
        let mut u2 = z.basis(U2);
        u2[V2] = f.one();
        let full = extend_by_doubling(&z, &step, &u2, &u2).unwrap();
        assert!(full.to_automorphism(&z).unwrap().matrix().is_identity());
        let mut bad = z.basis(U1);
        bad[V1] = f.from_i64(2);
        assert!(extend_by_doubling(&z, &id, &u, &bad).is_err());
    }

    #[test]
    fn map_file_round_trip() {
        let f = Field::gf_ext(3, &[1, 0]).unwrap();
        let z = zorn(f);
        let m = tau_st(&z).unwrap().matrix().clone();
        assert_eq!(parse_map(&format_map(&m)).unwrap(), m);
    }
}
