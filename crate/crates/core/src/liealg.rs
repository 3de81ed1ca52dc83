//! Derivation algebras, the Chevalley basis of type G₂ attached to a
//! canonical basis, root decompositions and Lie centralizers.
//!
//! The Chevalley elements are computed once over ℤ from the multiplication
//! table, together with the divided squares x_α²/2, and only then reduced
//! into the field. This is what makes exp(t·x_α) available in
//! characteristics 2 and 3.

use std::fmt;

use crate::compalg::{Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactfield::{Fe, Field};
use crate::linalg::{Matrix, Subspace};
use crate::maps::{format_map, Automorphism};

/// A Lie subalgebra of End(A) consisting of derivations, given by a basis.
#[derive(Clone, Debug)]
pub struct DerivationAlgebra {
    field: Field,
    n: usize,
    basis: Vec<Matrix>,
    /// Columns are the flattened basis matrices.
    flat: Matrix,
}

fn flatten(m: &Matrix) -> Vec<Fe> {
    m.entries().to_vec()
}

fn unflatten(field: Field, n: usize, v: &[Fe]) -> Matrix {
    let rows: Vec<Vec<Fe>> = v.chunks(n).map(<[Fe]>::to_vec).collect();
    Matrix::from_rows(field, &rows)
}

impl DerivationAlgebra {
    fn from_basis(field: Field, n: usize, basis: Vec<Matrix>) -> DerivationAlgebra {
        let cols: Vec<Vec<Fe>> = basis.iter().map(flatten).collect();
        let flat = if cols.is_empty() { Matrix::zero(field, n * n, 0) } else { Matrix::from_cols(field, &cols) };
        DerivationAlgebra { field, n, basis, flat }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Fe>> {
        if self.basis.is_empty() {
            return m.is_zero().then(Vec::new);
        }
        self.flat.solve(&flatten(m))
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.coordinates(m).is_some()
    }

    /// The element Σ cᵢ Dᵢ.
    pub fn element(&self, coords: &[Fe]) -> Matrix {
        let v = self.flat.mul_vec(coords);
        unflatten(self.field, self.n, &v)
    }

    /// Matrix of ad h on this algebra's coordinates. `h` must normalize it.
    pub fn ad_matrix(&self, h: &Matrix) -> Result<Matrix> {
        let cols = self
            .basis
            .iter()
            .map(|d| {
                self.coordinates(&h.bracket(d))
                    .ok_or_else(|| Error::Precondition("ad h does not preserve the derivation algebra".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zero(self.field, 0, 0));
        }
        Ok(Matrix::from_cols(self.field, &cols))
    }

    /// Is span(gens) an ideal: [D, g] ∈ span(gens) for all D here?
    pub fn is_ideal(&self, gens: &[Matrix]) -> bool {
        let span = Subspace::span(self.field, self.n * self.n, &gens.iter().map(flatten).collect::<Vec<_>>());
        self.basis.iter().all(|d| gens.iter().all(|g| span.contains(&flatten(&d.bracket(g)))))
    }

    /// The subalgebra spanned by the given coefficient vectors.
    pub fn restrict(&self, coords: &Subspace) -> DerivationAlgebra {
        let basis = coords.basis().iter().map(|c| self.element(c)).collect();
        DerivationAlgebra::from_basis(self.field, self.n, basis)
    }
}

/// Checks D(bᵢ·bⱼ) = D(bᵢ)·bⱼ + bᵢ·D(bⱼ) on all basis pairs.
pub fn is_derivation(a: &Algebra, d: &Matrix) -> bool {
    let n = a.dim();
    let images: Vec<Elem> = (0..n).map(|i| d.col(i)).collect();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = d.mul_vec(a.basis_product(i, j));
            let mut rhs = a.mul(&images[i], &a.basis(j));
            let r2 = a.mul(&a.basis(i), &images[j]);
            for (x, y) in rhs.iter_mut().zip(&r2) {
                *x += y;
            }
            lhs == rhs
        })
    })
}

/// Der(A) as the kernel of the Leibniz system: d² unknowns D[k][l] and d³
/// equations, one per (i, j, k).
pub fn derivations(a: &Algebra) -> Result<DerivationAlgebra> {
    let n = a.dim();
    if n > 8 {
        return Err(Error::Dimension(n));
    }
    let f = a.field();
    let mut rows: Vec<Vec<Fe>> = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![f.zero(); n * n];
                for m in 0..n {
                    let c = a.structure_constant(i, j, m);
                    if !c.is_zero() {
                        row[k * n + m] += c;
                    }
                    let c = a.structure_constant(m, j, k);
                    if !c.is_zero() {
                        row[m * n + i] -= c;
                    }
                    let c = a.structure_constant(i, m, k);
                    if !c.is_zero() {
                        row[m * n + j] -= c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = Matrix::from_rows(f, &rows).kernel();
    let basis = kernel.iter().map(|v| unflatten(f, n, v)).collect();
    Ok(DerivationAlgebra::from_basis(f, n, basis))
}

/// ad_x = L_x − R_x for x running over the basis.
pub fn inner_derivations(a: &Algebra) -> Vec<Matrix> {
    (0..a.dim()).map(|i| a.left_matrix(&a.basis(i)).sub(&a.right_matrix(&a.basis(i)))).collect()
}

/// m₁ε₁ + m₂ε₂ with ε₁ + ε₂ + ε₃ = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub m1: i64,
    pub m2: i64,
}

const EPS: [(i64, i64); 3] = [(1, 0), (0, 1), (-1, -1)];

impl Root {
    pub const fn new(m1: i64, m2: i64) -> Root {
        Root { m1, m2 }
    }

    /// εᵢ, 1-based.
    pub fn eps(i: usize) -> Root {
        let (a, b) = EPS[i - 1];
        Root::new(a, b)
    }

    /// εᵢ − εⱼ, 1-based.
    pub fn diff(i: usize, j: usize) -> Root {
        Root::new(EPS[i - 1].0 - EPS[j - 1].0, EPS[i - 1].1 - EPS[j - 1].1)
    }

    pub fn neg(self) -> Root {
        Root::new(-self.m1, -self.m2)
    }

    /// The twelve roots: ±ε₁, ±ε₂, ±ε₃, then εᵢ − εⱼ.
    pub fn all() -> Vec<Root> {
        let mut v = vec![];
        for i in 1..=3 {
            v.push(Root::eps(i));
            v.push(Root::eps(i).neg());
        }
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    v.push(Root::diff(i, j));
                }
            }
        }
        v
    }

    /// εᵢ − εⱼ are the long roots.
    pub fn is_long(&self) -> bool {
        !(1..=3).any(|i| *self == Root::eps(i) || *self == Root::eps(i).neg())
    }

    /// Eigenvalues of ad h₁ and ad h₂ on x_α.
    pub fn weights(&self) -> (i64, i64) {
        (2 * self.m1 - self.m2, self.m2 - self.m1)
    }

    pub fn parse(text: &str) -> Option<Root> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (sign, rest) = match t.strip_prefix('-') {
            Some(r) => (-1, r),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        let eps = |s: &str| -> Option<Root> {
            let i: usize = s.strip_prefix('e')?.parse().ok()?;
            (1..=3).contains(&i).then(|| Root::eps(i))
        };
        let r = match rest.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (eps(a)?, eps(b)?);
                if sign < 0 || a == b {
                    return None;
                }
                Root::new(a.m1 - b.m1, a.m2 - b.m2)
            }
            None => {
                let e = eps(rest)?;
                if sign < 0 {
                    e.neg()
                } else {
                    e
                }
            }
        };
        Root::all().contains(&r).then_some(r)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=3 {
            if *self == Root::eps(i) {
                return write!(f, "e{i}");
            }
            if *self == Root::eps(i).neg() {
                return write!(f, "-e{i}");
            }
            for j in 1..=3 {
                if i != j && *self == Root::diff(i, j) {
                    return write!(f, "e{i}-e{j}");
                }
            }
        }
        write!(f, "({},{})", self.m1, self.m2)
    }
}

type IMat = [[i64; 8]; 8];

fn imul(a: &IMat, b: &IMat) -> IMat {
    let mut c = [[0i64; 8]; 8];
    for i in 0..8 {
        for k in 0..8 {
            if a[i][k] != 0 {
                for j in 0..8 {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

fn icomb(a: &IMat, b: &IMat, s: i64) -> IMat {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][j] + s * b[i][j]))
}

fn ibracket(a: &IMat, b: &IMat) -> IMat {
    icomb(&imul(a, b), &imul(b, a), -1)
}

fn left_int(i: usize) -> IMat {
    let mut m = [[0i64; 8]; 8];
    for j in 0..8 {
        for (k, c) in crate::compalg::canonical_entry(i, j).iter().enumerate() {
            m[k][j] = *c;
        }
    }
    m
}

fn right_int(i: usize) -> IMat {
    let mut m = [[0i64; 8]; 8];
    for j in 0..8 {
        for (k, c) in crate::compalg::canonical_entry(j, i).iter().enumerate() {
            m[k][j] = *c;
        }
    }
    m
}

/// d_{x,y} = [L_x, L_y] + [L_x, R_y] + [R_x, R_y]
fn d_int(x: usize, y: usize) -> IMat {
    let (lx, ly, rx, ry) = (left_int(x), left_int(y), right_int(x), right_int(y));
    icomb(&icomb(&ibracket(&lx, &ly), &ibracket(&lx, &ry), 1), &ibracket(&rx, &ry), 1)
}

fn diag_int(d: [i64; 8]) -> IMat {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { d[i] } else { 0 }))
}

/// x_α over ℤ in canonical coordinates.
fn chevalley_int(r: Root) -> IMat {
    const E1: usize = 0;
    const E2: usize = 1;
    for i in 1..=3 {
        if r == Root::eps(i) {
            return d_int(E1, 1 + i);
        }
        if r == Root::eps(i).neg() {
            return icomb(&[[0; 8]; 8], &d_int(E2, 4 + i), -1);
        }
        for j in 1..=3 {
            if i != j && r == Root::diff(i, j) {
                return ibracket(&left_int(1 + i), &right_int(4 + j));
            }
        }
    }
    unreachable!("not a root: {r:?}")
}

fn reduce(field: Field, m: &IMat) -> Matrix {
    let flat: Vec<i64> = m.iter().flatten().copied().collect();
    Matrix::from_i64(field, 8, 8, &flat)
}

#[derive(Clone, Debug)]
pub struct ChevalleyElement {
    pub root: Root,
    pub x: Matrix,
    /// x_α²/2, computed over ℤ before reduction.
    pub divided_square: Matrix,
}

/// {x_α : α ∈ Φ} ∪ {h₁, h₂} transported to an algebra's basis through its
/// canonical witness.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub elements: Vec<ChevalleyElement>,
    pub h1: Matrix,
    pub h2: Matrix,
    pub witness: Matrix,
}

impl ChevalleyBasis {
    pub fn element(&self, r: Root) -> Option<&ChevalleyElement> {
        self.elements.iter().find(|e| e.root == r)
    }

    pub fn x(&self, r: Root) -> Option<&Matrix> {
        self.element(r).map(|e| &e.x)
    }

    /// The same data in canonical coordinates (W⁻¹ M W).
    pub fn in_canonical_coords(&self, m: &Matrix) -> Matrix {
        let wi = self.witness.inverse().expect("witness is a basis");
        wi.mul(m).mul(&self.witness)
    }
}

pub fn chevalley_basis(a: &Algebra) -> Result<ChevalleyBasis> {
    let f = a.field();
    let w = a.witness().ok_or_else(|| Error::Precondition("algebra has no canonical witness".into()))?;
    let wm = w.matrix(f);
    let wi = wm.inverse().ok_or_else(|| Error::Inconsistent("witness is not a basis".into()))?;
    let transport = |m: &IMat| wm.mul(&reduce(f, m)).mul(&wi);
    let h1i = diag_int([0, 0, 2, -1, -1, -2, 1, 1]);
    let h2i = diag_int([0, 0, -1, 1, 0, 1, -1, 0]);
    let h1 = transport(&h1i);
    let h2 = transport(&h2i);
    let mut elements = vec![];
    for r in Root::all() {
        let xi = chevalley_int(r);
        let sq = imul(&xi, &xi);
        if sq.iter().flatten().any(|c| c % 2 != 0) {
            return Err(Error::Inconsistent(format!("x_{r}^2 is not divisible by 2 over Z")));
        }
        let half: IMat = std::array::from_fn(|i| std::array::from_fn(|j| sq[i][j] / 2));
        let x = transport(&xi);
        if !is_derivation(a, &x) {
            return Err(Error::Inconsistent(format!("x_{r} is not a derivation")));
        }
        let (w1, w2) = r.weights();
        if h1.bracket(&x) != x.scale(&f.from_i64(w1)) || h2.bracket(&x) != x.scale(&f.from_i64(w2)) {
            return Err(Error::Inconsistent(format!("x_{r} has the wrong torus weights")));
        }
        elements.push(ChevalleyElement { root: r, x, divided_square: transport(&half) });
    }
    Ok(ChevalleyBasis { elements, h1, h2, witness: wm })
}

/// exp(t·x_α) = id + t·x_α + t²·x_α^{(2)}.
pub fn exp_root(a: &Algebra, cb: &ChevalleyBasis, r: Root, t: &Fe) -> Result<Automorphism> {
    let e = cb.element(r).ok_or_else(|| Error::Precondition(format!("{r} is not a root")))?;
    let f = a.field();
    let m = Matrix::identity(f, a.dim()).add(&e.x.scale(t)).add(&e.divided_square.scale(&(t * t)));
    Automorphism::new(a, m)
}

/// A joint generalized eigenspace of ad h₁, ad h₂ inside a derivation algebra.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    pub weight: (Fe, Fe),
    /// Roots whose weights reduce to this pair; empty for the zero weight.
    pub roots: Vec<Root>,
    /// Coordinates relative to the derivation algebra's basis.
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct RootDecomposition {
    pub spaces: Vec<WeightSpace>,
    /// Some distinct roots share a weight after reduction into F.
    pub merged: bool,
    /// The listed spaces exhaust the derivation algebra.
    pub complete: bool,
}

impl RootDecomposition {
    pub fn zero_space(&self) -> Option<&WeightSpace> {
        self.spaces.iter().find(|w| w.weight.0.is_zero() && w.weight.1.is_zero())
    }
}

/// Generalized joint eigenspaces of ad h₁ and ad h₂ for the weights of Φ ∪ {0}.
pub fn root_decomposition(d: &DerivationAlgebra, h1: &Matrix, h2: &Matrix) -> Result<RootDecomposition> {
    let f = d.field();
    let n = d.dim();
    let a1 = d.ad_matrix(h1)?;
    let a2 = d.ad_matrix(h2)?;
    let mut keys: Vec<((Fe, Fe), Vec<Root>)> = vec![((f.zero(), f.zero()), vec![])];
    for r in Root::all() {
        let (w1, w2) = r.weights();
        let key = (f.from_i64(w1), f.from_i64(w2));
        match keys.iter_mut().find(|(k, _)| *k == key) {
            Some((_, roots)) => roots.push(r),
            None => keys.push((key, vec![r])),
        }
    }
    let merged = keys.iter().any(|(k, roots)| roots.len() > 1 || (k.0.is_zero() && k.1.is_zero() && !roots.is_empty()));
    let id = Matrix::identity(f, n);
    let mut spaces = vec![];
    let mut total = 0;
    for (key, roots) in keys {
        let p1 = a1.sub(&id.scale(&key.0)).pow(n as u32);
        let p2 = a2.sub(&id.scale(&key.1)).pow(n as u32);
        let mut rows: Vec<Vec<Fe>> = (0..n).map(|i| p1.row(i).to_vec()).collect();
        rows.extend((0..n).map(|i| p2.row(i).to_vec()));
        let space = if n == 0 { Subspace::zero(f, 0) } else { Subspace::kernel_of(&Matrix::from_rows(f, &rows)) };
        total += space.dim();
        if space.dim() > 0 {
            spaces.push(WeightSpace { weight: key, roots, space });
        }
    }
    Ok(RootDecomposition { spaces, merged, complete: total == n })
}

/// {D : Dφ = φD}, as coordinates in the derivation algebra.
pub fn lie_centralizer(d: &DerivationAlgebra, phi: &Matrix) -> Subspace {
    let f = d.field();
    let cols: Vec<Vec<Fe>> = d.basis().iter().map(|m| flatten(&m.mul(phi).sub(&phi.mul(m)))).collect();
    kernel_of_cols(f, d.dim(), cols)
}

fn kernel_of_cols(f: Field, k: usize, cols: Vec<Vec<Fe>>) -> Subspace {
    if k == 0 {
        return Subspace::zero(f, 0);
    }
    if cols[0].is_empty() {
        return Subspace::full(f, k);
    }
    Subspace::kernel_of(&Matrix::from_cols(f, &cols))
}

/// What a stabilizer should preserve.
#[derive(Clone, Copy, Debug)]
pub enum StabTarget<'a> {
    /// D(v) = 0
    Vector(&'a [Fe]),
    /// D(V) ⊆ V
    Space(&'a Subspace),
}

pub fn lie_stabilizer(d: &DerivationAlgebra, target: StabTarget<'_>) -> Subspace {
    let f = d.field();
    match target {
        StabTarget::Vector(v) => {
            let cols = d.basis().iter().map(|m| m.mul_vec(v)).collect();
            kernel_of_cols(f, d.dim(), cols)
        }
        StabTarget::Space(s) => {
            // D(V) ⊆ V iff every annihilating functional kills D(vⱼ)
            let ann: Vec<Vec<Fe>> = if s.dim() == 0 {
                (0..s.ambient()).map(|i| crate::linalg::unit_vector(f, s.ambient(), i)).collect()
            } else {
                Matrix::from_rows(f, s.basis()).kernel()
            };
            let cols = d
                .basis()
                .iter()
                .map(|m| {
                    let mut col = vec![];
                    for v in s.basis() {
                        let dv = m.mul_vec(v);
                        for a in &ann {
                            col.push(a.iter().zip(&dv).fold(f.zero(), |acc, (x, y)| acc + &(x * y)));
                        }
                    }
                    col
                })
                .collect();
            kernel_of_cols(f, d.dim(), cols)
        }
    }
}

/// Labelled listing of a Chevalley basis, one map block per element.
pub fn format_chevalley(cb: &ChevalleyBasis) -> String {
    let mut s = String::new();
    for (label, m) in [("h1", &cb.h1), ("h2", &cb.h2)] {
        s.push_str(&format!("# {label}\n{}", format_map(m)));
    }
    for e in &cb.elements {
        s.push_str(&format!("# x[{}]\n{}", e.root, format_map(&e.x)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compalg::{zorn, U1, U2, U3, V1, V2, V3};

    #[test]
    fn root_labels_round_trip() {
        for r in Root::all() {
            assert_eq!(Root::parse(&r.to_string()), Some(r));
        }
        assert_eq!(Root::parse("e1-e2"), Some(Root::diff(1, 2)));
        assert_eq!(Root::parse("-e3"), Some(Root::new(1, 1)));
        assert_eq!(Root::parse("e1-e1"), None);
        assert_eq!(Root::all().iter().filter(|r| r.is_long()).count(), 6);
    }

    #[test]
    fn long_root_acts_as_elementary_matrix_on_u() {
        let f = Field::gf(7).unwrap();
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let us = [U1, U2, U3];
        for i in 1..=3 {
            for j in 1..=3 {
                if i == j {
                    continue;
                }
                let x = cb.x(Root::diff(i, j)).unwrap();
                for (k, &u) in us.iter().enumerate() {
                    let img = x.mul_vec(&z.basis(u));
                    let expect = if k + 1 == j { z.basis(us[i - 1]) } else { z.zero() };
                    assert_eq!(img, expect, "x[e{i}-e{j}] on u{}", k + 1);
                }
            }
        }
    }

    #[test]
    fn short_root_squares() {
        let f = Field::gf(5).unwrap();
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let two = f.from_i64(2);
        for (i, (u, v)) in [(U1, V1), (U2, V2), (U3, V3)].into_iter().enumerate() {
            let x = cb.x(Root::eps(i + 1)).unwrap();
            assert!(x.pow(3).is_zero());
            assert_eq!(x.mul(x).mul_vec(&z.basis(v)), crate::linalg::vscale(&two, &z.basis(u)));
        }
        for r in Root::all().into_iter().filter(Root::is_long) {
            assert!(cb.x(r).unwrap().pow(2).is_zero());
        }
    }

    #[test]
    fn one_parameter_subgroups() {
        let f = Field::gf(3).unwrap();
        let z = zorn(f);
        let cb = chevalley_basis(&z).unwrap();
        let els = f.elements().unwrap();
        for r in Root::all() {
            for s in &els {
                for t in &els {
                    let a = exp_root(&z, &cb, r, s).unwrap();
                    let b = exp_root(&z, &cb, r, t).unwrap();
                    let c = exp_root(&z, &cb, r, &(s + t)).unwrap();
                    assert_eq!(a.matrix().mul(b.matrix()), *c.matrix());
                }
            }
            assert_eq!(exp_root(&z, &cb, r, &f.one()).unwrap().order(), Some(3));
            assert!(exp_root(&z, &cb, r, &f.zero()).unwrap().matrix().is_identity());
        }
    }

    #[test]
    fn etale_algebra_has_no_derivations() {
        let f = Field::gf(7).unwrap();
        let k = crate::exactfield::make_etale(f, crate::exactfield::EtaleSpec::Split).unwrap();
        assert_eq!(derivations(&crate::compalg::etale_algebra(&k)).unwrap().dim(), 0);
    }

    #[test]
    fn stabilizer_of_e1_and_quaternions() {
        let f = Field::gf(7).unwrap();
        let z = zorn(f);
        let d = derivations(&z).unwrap();
        // Der fixing e₁ is sl₃
        assert_eq!(lie_stabilizer(&d, StabTarget::Vector(&z.basis(0))).dim(), 8);
        let q = Subspace::span(f, 8, &[z.basis(0), z.basis(1), z.basis(U1), z.basis(V1)]);
        assert_eq!(lie_stabilizer(&d, StabTarget::Space(&q)).dim(), 6);
    }
}
