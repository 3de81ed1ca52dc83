//! Canonical bases and constructive conjugation inside a split Cayley algebra.

use super::build::canonical_entry;
use super::{Algebra, CanonicalWitness, Elem};
use crate::error::{Error, Result};
use crate::exactfield::Fe;
use crate::linalg::{vaxpy, vneg, vscale, vsub, Matrix, Subspace};
use crate::maps::{extend_by_doubling, Automorphism, SubalgebraIso};
use crate::search::{coefficient_pool, find_in_span, SEARCH_CAP};

/// Checks that the witness vectors multiply exactly as the canonical table. Returns the
/// first offending pair of canonical indices.
pub fn witness_reproduces_table(a: &Algebra, w: &CanonicalWitness) -> std::result::Result<(), (usize, usize)> {
    for i in 0..8 {
        for j in 0..8 {
            let mut expect = a.zero();
            for (k, c) in canonical_entry(i, j).iter().enumerate() {
                if *c != 0 {
                    vaxpy(&mut expect, &a.field().from_i64(*c), &w.vectors[k]);
                }
            }
            if a.mul(&w.vectors[i], &w.vectors[j]) != expect {
                return Err((i, j));
            }
        }
    }
    Ok(())
}

/// Peirce space x·C·y = {z : x·z = z = z·y} for orthogonal idempotents x, y.
fn peirce(a: &Algebra, x: &[Fe], y: &[Fe]) -> Subspace {
    let id = Matrix::identity(a.field(), a.dim());
    let lx = a.left_matrix(x).sub(&id);
    let ry = a.right_matrix(y).sub(&id);
    let mut rows: Vec<Elem> = (0..lx.rows()).map(|i| lx.row(i).to_vec()).collect();
    rows.extend((0..ry.rows()).map(|i| ry.row(i).to_vec()));
    Subspace::kernel_of(&Matrix::from_rows(a.field(), &rows))
}

/// Completes (e₁, e₂, ũ₁, ũ₂, ũ₃) to a canonical basis with ṽ₁ = ũ₂·ũ₃,
/// ṽ₂ = ũ₃·ũ₁, ṽ₃ = ũ₁·ũ₂.
pub fn complete_canonical_basis(
    a: &Algebra,
    e1: &[Fe],
    e2: &[Fe],
    u: [&[Fe]; 3],
) -> Result<CanonicalWitness> {
    let one = a.unit().ok_or(Error::NotHurwitz("complete_canonical_basis"))?;
    if a.dim() != 8 {
        return Err(Error::Dimension(a.dim()));
    }
    if !a.is_idempotent(e1) || !a.is_idempotent(e2) {
        return Err(Error::Precondition("e1 and e2 must be idempotents".into()));
    }
    let zero = a.zero();
    if a.mul(e1, e2) != zero || a.mul(e2, e1) != zero {
        return Err(Error::Precondition("e1 and e2 must be orthogonal".into()));
    }
    if crate::linalg::vadd(e1, e2) != *one {
        return Err(Error::Precondition("e1 + e2 must be the unit".into()));
    }
    let pu = peirce(a, e1, e2);
    if u.iter().any(|x| !pu.contains(x)) {
        return Err(Error::Precondition("the u's must lie in the Peirce space e1·C·e2".into()));
    }
    if Subspace::span(a.field(), 8, &u.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).dim() != 3 {
        return Err(Error::Precondition("the u's must be linearly independent".into()));
    }
    let lam = a.polar(u[0], &a.mul(u[1], u[2]));
    if !lam.is_one() {
        return Err(Error::Precondition(format!("n(u1, u2·u3) = {lam}, expected 1")));
    }
    let v1 = a.mul(u[1], u[2]);
    let v2 = a.mul(u[2], u[0]);
    let v3 = a.mul(u[0], u[1]);
    let w = CanonicalWitness {
        vectors: [e1.to_vec(), e2.to_vec(), u[0].to_vec(), u[1].to_vec(), u[2].to_vec(), v1, v2, v3],
    };
    witness_reproduces_table(a, &w)
        .map_err(|(i, j)| Error::Inconsistent(format!("canonical table fails at ({i},{j})")))?;
    Ok(w)
}

/// Given an idempotent f ∉ {0, 1}, builds a canonical basis with e₁ = f.
fn canonical_from_idempotent(a: &Algebra, f: &[Fe]) -> Result<CanonicalWitness> {
    let one = a.unit().ok_or(Error::NotHurwitz("canonical basis"))?;
    let e2 = vsub(one, f);
    let pu = peirce(a, f, &e2);
    if pu.dim() != 3 {
        return Err(Error::Inconsistent(format!("Peirce space has dimension {}", pu.dim())));
    }
    let b = pu.basis();
    let lam = a.polar(&b[0], &a.mul(&b[1], &b[2]));
    let inv = lam.inv().ok_or_else(|| Error::Inconsistent("degenerate trilinear form on U".into()))?;
    let u1 = vscale(&inv, &b[0]);
    complete_canonical_basis(a, f, &e2, [&u1, &b[1], &b[2]])
}

/// For x ≠ 0 with x² = 0: y with n(x,y) = −1, n(1,y) = 0 = n(y), so that
/// x·y and y·x are complementary orthogonal idempotents.
fn square_zero_partner(a: &Algebra, x: &[Fe]) -> Result<Elem> {
    let f = a.field();
    let one = a.unit().ok_or(Error::NotHurwitz("square-zero partner"))?;
    let g = a.form().gram();
    let rows = vec![g.mul_vec(x), g.mul_vec(one)];
    let m = Matrix::from_rows(f, &rows);
    let mut y = m
        .solve(&[f.from_i64(-1), f.zero()])
        .ok_or_else(|| Error::Precondition("x is in the radical of the norm".into()))?;
    // n(y + λx) = n(y) − λ, so λ = n(y)
    let lam = a.norm(&y);
    vaxpy(&mut y, &lam, x);
    Ok(y)
}

/// A canonical basis of an 8-dimensional Hurwitz algebra with isotropic norm.
///
/// Starts from an isotropic x ⊥ 1 (or the given one), pairs it with y as in
/// the square-zero construction, and takes e₁ = x·y.
pub fn find_canonical_basis(a: &Algebra, isotropic: Option<&Elem>) -> Result<CanonicalWitness> {
    let one = a.unit().ok_or(Error::NotHurwitz("find_canonical_basis"))?.clone();
    if a.dim() != 8 {
        return Err(Error::Dimension(a.dim()));
    }
    let f = a.field();
    let x = match isotropic {
        Some(x) => x.clone(),
        None => {
            let perp1 = a.perp(&Subspace::span(f, 8, std::slice::from_ref(&one)));
            let pool = coefficient_pool(f, 3);
            find_in_span(f, perp1.basis(), &pool, SEARCH_CAP, |v| a.norm(v).is_zero())
                .ok_or_else(|| Error::SearchExhausted("no isotropic vector orthogonal to 1".into()))?
        }
    };
    let y = square_zero_partner(a, &x)?;
    let e1 = a.mul(&x, &y);
    canonical_from_idempotent(a, &e1)
}

/// Nonisotropic u ⊥ B found by lattice search.
pub(crate) fn nonisotropic_perp(a: &Algebra, b: &[Elem], height: u32) -> Result<Elem> {
    let f = a.field();
    let perp = a.perp(&Subspace::span(f, a.dim(), b));
    let pool = coefficient_pool(f, height);
    find_in_span(f, perp.basis(), &pool, SEARCH_CAP, |v| !a.norm(v).is_zero())
        .ok_or_else(|| Error::SearchExhausted("no nonisotropic vector orthogonal to the subalgebra".into()))
}

/// φ ∈ Aut(A) with φ(x) = e₁ (x an idempotent other than 1) or φ(x) = u₁
/// (x ≠ 0 with x² = 0), built by extending a map between small subalgebras
/// through Cayley–Dickson doubling.
pub fn conjugate_to_standard(a: &Algebra, x: &[Fe]) -> Result<Automorphism> {
    let one = a.unit().ok_or(Error::NotHurwitz("conjugate_to_standard"))?.clone();
    let w = a.witness().ok_or_else(|| Error::Precondition("algebra has no canonical witness".into()))?.clone();
    let f = a.field();
    let height = f.size().map_or(3, |q| q.min(u32::MAX as u64) as u32);
    let std = |i: usize| w.vectors[i].clone();
    let with_norm = |i: usize, j: usize, c: &Fe| {
        let mut v = std(i);
        vaxpy(&mut v, c, &std(j));
        v
    };
    // ψ maps the standard side onto the side containing x; φ = ψ⁻¹
    let (mut iso, steps) = if a.is_idempotent(x) && x != one.as_slice() {
        let iso = SubalgebraIso { source: vec![std(0), std(1)], image: vec![x.to_vec(), vsub(&one, x)] };
        (iso, vec![(2usize, 5usize), (3, 6)])
    } else if !x.iter().all(Fe::is_zero) && a.mul(x, x).iter().all(Fe::is_zero) {
        let y = square_zero_partner(a, x)?;
        let fx = a.mul(x, &y);
        let iso = SubalgebraIso {
            source: vec![std(0), std(1), std(2), vneg(&std(5))],
            image: vec![fx, vsub(&one, &a.mul(x, &y)), x.to_vec(), y],
        };
        (iso, vec![(3, 6)])
    } else {
        return Err(Error::Precondition("x must be an idempotent other than 1 or a nonzero square-zero element".into()));
    };
    for (ui, vi) in steps {
        let up = nonisotropic_perp(a, &iso.image, height)?;
        let c = a.norm(&up);
        let u = with_norm(ui, vi, &c);
        iso = extend_by_doubling(a, &iso, &u, &up)?;
    }
    let psi = iso.to_automorphism(a)?;
    psi.inverse(a)
}
