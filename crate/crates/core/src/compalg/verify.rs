//! Composition, Hurwitz and symmetric-composition checks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactfield::{Fe, FieldKind};
use crate::linalg::{vadd, vaxpy, vzero};
use crate::search::coefficient_pool;

/// Literal pair enumeration is used while |F|^(2d) stays below this.
const LITERAL_PAIR_LIMIT: u64 = 1 << 20;
/// Per-element checking is used while |F|^d stays below this.
const PER_ELEMENT_LIMIT: u64 = 100_000;
/// Number of random pairs in randomized mode (a tenth of it over F_p(t)).
pub const RANDOM_PAIRS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every pair (x, y) ∈ F^d × F^d.
    Literal { pairs: u64 },
    /// Every x ∈ F^d against the basis: y ↦ n(x·y) − n(x)n(y) is a quadratic
    /// form, so its diagonal and polar values on the basis decide all y.
    PerElement { elements: u64 },
    /// Random pairs with coordinates drawn from a finite evaluation set S.
    /// A nonzero identity of degree 4 survives one pair with probability at
    /// most 4/|S|.
    Randomized { pairs: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionCheck {
    pub ok: bool,
    pub mode: CheckMode,
    /// The polynomial identity n(x·y) = n(x)n(y) holds coefficientwise.
    pub certificate: bool,
    /// A pair with n(x·y) ≠ n(x)n(y).
    pub witness: Option<(Elem, Elem)>,
    /// The basis product occurring in the most failing coefficient identities.
    pub suspect: Option<(usize, usize)>,
}

fn defect(a: &Algebra, x: &[Fe], y: &[Fe]) -> Fe {
    &a.norm(&a.mul(x, y)) - &(&a.norm(x) * &a.norm(y))
}

/// Coefficients of the biquadratic form Q(x, y) = n(x·y) − n(x)n(y). Each
/// failing identity is reported with the basis products it involves.
fn certificate_failures(a: &Algebra) -> Vec<(usize, usize, usize, usize)> {
    let d = a.dim();
    let p = |i: usize, j: usize| a.basis_product(i, j);
    let n = |i: usize| &a.form().diag()[i];
    let g = |i: usize, j: usize| a.form().gram().get(i, j);
    let mut bad = vec![];
    for i in 0..d {
        for j in 0..d {
            if a.norm(p(i, j)) != n(i) * n(j) {
                bad.push((i, j, i, j));
            }
        }
    }
    for i in 0..d {
        for k in i + 1..d {
            for j in 0..d {
                if a.polar(p(i, j), p(k, j)) != g(i, k) * n(j) {
                    bad.push((i, j, k, j));
                }
            }
        }
    }
    for i in 0..d {
        for j in 0..d {
            for l in j + 1..d {
                if a.polar(p(i, j), p(i, l)) != n(i) * g(j, l) {
                    bad.push((i, j, i, l));
                }
            }
        }
    }
    for i in 0..d {
        for k in i + 1..d {
            for j in 0..d {
                for l in j + 1..d {
                    let lhs = &a.polar(p(i, j), p(k, l)) + &a.polar(p(i, l), p(k, j));
                    if lhs != g(i, k) * g(j, l) {
                        bad.push((i, j, k, l));
                    }
                }
            }
        }
    }
    bad
}

/// The product bᵢ·bⱼ occurring most often among failing identities.
fn localize(fails: &[(usize, usize, usize, usize)], d: usize) -> Option<(usize, usize)> {
    let mut counts = vec![0usize; d * d];
    for &(i, j, k, l) in fails {
        let mut prods = vec![(i, j), (k, l)];
        if (i, j) != (k, l) {
            prods.extend([(i, l), (k, j)]);
        }
        prods.sort_unstable();
        prods.dedup();
        for (x, y) in prods {
            counts[x * d + y] += 1;
        }
    }
    let best = counts.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))?;
    (*best.1 > 0).then_some((best.0 / d, best.0 % d))
}

/// Small combinations around a failing coefficient identity.
fn witness_near(a: &Algebra, fails: &[(usize, usize, usize, usize)]) -> Option<(Elem, Elem)> {
    let f = a.field();
    let pool = coefficient_pool(f, 2);
    let pool: Vec<&Fe> = pool.iter().filter(|c| !c.is_zero()).take(8).collect();
    for &(i, j, k, l) in fails.iter().take(64) {
        for s in &pool {
            for t in &pool {
                let mut x = a.basis(i);
                if k != i {
                    vaxpy(&mut x, s, &a.basis(k));
                }
                let mut y = a.basis(j);
                if l != j {
                    vaxpy(&mut y, t, &a.basis(l));
                }
                if !defect(a, &x, &y).is_zero() {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

fn index_to_elem(els: &[Fe], d: usize, mut n: u64) -> Elem {
    let q = els.len() as u64;
    let mut v = Vec::with_capacity(d);
    for _ in 0..d {
        v.push(els[(n % q) as usize].clone());
        n /= q;
    }
    v.reverse();
    v
}

/// n(x·y) = n(x)n(y) for all x, y.
///
/// The identity is always checked coefficientwise (an exact certificate valid
/// over every extension of F). In addition, points are sampled: all pairs
/// when |F|^(2d) ≤ 2^20, all x against the basis when |F|^d ≤ 10^5, and
/// otherwise [`RANDOM_PAIRS`] pairs drawn with a ChaCha generator seeded by
/// `seed`.
pub fn check_composition(a: &Algebra, seed: u64) -> CompositionCheck {
    use rayon::prelude::*;
    let f = a.field();
    let d = a.dim();
    let fails = certificate_failures(a);
    let certificate = fails.is_empty();
    let mut witness = None;
    let size = f.size().map(|q| (q as f64).powi(d as i32));
    let mode = match size {
        Some(s) if s * s <= LITERAL_PAIR_LIMIT as f64 => {
            let els = f.elements().expect("finite");
            let total = s as u64;
            witness = (0..total * total).into_par_iter().find_first(|n| {
                let x = index_to_elem(&els, d, n / total);
                let y = index_to_elem(&els, d, n % total);
                !defect(a, &x, &y).is_zero()
            })
            .map(|n| (index_to_elem(&els, d, n / total), index_to_elem(&els, d, n % total)));
            CheckMode::Literal { pairs: total * total }
        }
        Some(s) if s <= PER_ELEMENT_LIMIT as f64 => {
            let els = f.elements().expect("finite");
            let total = s as u64;
            witness = (0..total)
                .into_par_iter()
                .find_map_first(|n| {
                    let x = index_to_elem(&els, d, n);
                    let nx = a.norm(&x);
                    let xb: Vec<Elem> = (0..d).map(|i| a.mul(&x, &a.basis(i))).collect();
                    for i in 0..d {
                        if a.norm(&xb[i]) != &nx * &a.form().diag()[i] {
                            return Some((x, a.basis(i)));
                        }
                    }
                    for i in 0..d {
                        for j in i + 1..d {
                            if a.polar(&xb[i], &xb[j]) != &nx * a.form().gram().get(i, j) {
                                return Some((x.clone(), vadd(&a.basis(i), &a.basis(j))));
                            }
                        }
                    }
                    None
                });
            CheckMode::PerElement { elements: total }
        }
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // degrees add up across a product of sums, so keep function-field samples short
            let func = matches!(f.kind(), FieldKind::RatFunc(_));
            let height = if func { 2 } else { 16 };
            let pairs = if func { RANDOM_PAIRS / 10 } else { RANDOM_PAIRS };
            for _ in 0..pairs {
                let x: Elem = (0..d).map(|_| f.random_element(&mut rng, height)).collect();
                let y: Elem = (0..d).map(|_| f.random_element(&mut rng, height)).collect();
                if !defect(a, &x, &y).is_zero() {
                    witness = Some((x, y));
                    break;
                }
            }
            CheckMode::Randomized { pairs, seed }
        }
    };
    if witness.is_none() && !certificate {
        witness = witness_near(a, &fails);
    }
    let suspect = localize(&fails, d);
    CompositionCheck { ok: certificate && witness.is_none(), mode, certificate, witness, suspect }
}

/// n(x*y, z) = n(x, y*z) and (x*y)*x = n(x)y = x*(y*x), checked on basis
/// triples together with the polarized forms, which is exhaustive.
pub fn check_symmetric(s: &Algebra) -> Result<()> {
    let d = s.dim();
    let nm = |i: usize| s.names()[i].clone();
    let b: Vec<Elem> = (0..d).map(|i| s.basis(i)).collect();
    for i in 0..d {
        for j in 0..d {
            let ij = s.basis_product(i, j);
            for k in 0..d {
                if s.polar(ij, &b[k]) != s.polar(&b[i], s.basis_product(j, k)) {
                    return Err(Error::Inconsistent(format!(
                        "n(x*y, z) != n(x, y*z) at ({}, {}, {})",
                        nm(i),
                        nm(j),
                        nm(k)
                    )));
                }
            }
        }
    }
    for j in 0..d {
        for i in 0..d {
            for k in i..d {
                // polarization of x ↦ (x*y)*x in x
                let mut target = vzero(s.field(), d);
                let c = if i == k { s.form().diag()[i].clone() } else { s.form().gram().get(i, k).clone() };
                vaxpy(&mut target, &c, &b[j]);
                let left = {
                    let mut v = s.mul(s.basis_product(i, j), &b[k]);
                    if i != k {
                        v = vadd(&v, &s.mul(s.basis_product(k, j), &b[i]));
                    }
                    v
                };
                let right = {
                    let mut v = s.mul(&b[i], s.basis_product(j, k));
                    if i != k {
                        v = vadd(&v, &s.mul(&b[k], s.basis_product(j, i)));
                    }
                    v
                };
                if left != target || right != target {
                    return Err(Error::Inconsistent(format!(
                        "(x*y)*x = n(x)y = x*(y*x) fails at x in {{{}, {}}}, y = {}",
                        nm(i),
                        nm(k),
                        nm(j)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Unit, Cayley–Hamilton x² − n(x,1)x + n(x)1 = 0 (with its polarization),
/// x̄̄ = x and conj(x·y) = ȳ·x̄ on the basis.
pub fn check_hurwitz(a: &Algebra) -> Result<()> {
    let one = a.unit().ok_or(Error::NotHurwitz("check_hurwitz"))?.clone();
    let d = a.dim();
    let nm = |i: usize| a.names()[i].clone();
    let b: Vec<Elem> = (0..d).map(|i| a.basis(i)).collect();
    for i in 0..d {
        if a.mul(&one, &b[i]) != b[i] || a.mul(&b[i], &one) != b[i] {
            return Err(Error::Inconsistent(format!("unit fails on {}", nm(i))));
        }
    }
    let t: Vec<Fe> = b.iter().map(|x| a.polar(x, &one)).collect();
    for i in 0..d {
        for j in i..d {
            let mut v = a.basis_product(i, j).clone();
            if i == j {
                vaxpy(&mut v, &-&t[i], &b[i]);
                vaxpy(&mut v, &a.form().diag()[i], &one);
            } else {
                v = vadd(&v, a.basis_product(j, i));
                vaxpy(&mut v, &-&t[i], &b[j]);
                vaxpy(&mut v, &-&t[j], &b[i]);
                vaxpy(&mut v, a.form().gram().get(i, j), &one);
            }
            if v.iter().any(|c| !c.is_zero()) {
                return Err(Error::Inconsistent(format!("Cayley-Hamilton fails on ({}, {})", nm(i), nm(j))));
            }
        }
    }
    let conj: Vec<Elem> = b.iter().map(|x| a.conj(x).expect("hurwitz")).collect();
    for i in 0..d {
        if a.conj(&conj[i])? != b[i] {
            return Err(Error::Inconsistent(format!("conjugation is not an involution on {}", nm(i))));
        }
        for j in 0..d {
            if a.conj(a.basis_product(i, j))? != a.mul(&conj[j], &conj[i]) {
                return Err(Error::Inconsistent(format!("conj(x·y) != conj(y)·conj(x) on ({}, {})", nm(i), nm(j))));
            }
        }
    }
    Ok(())
}
