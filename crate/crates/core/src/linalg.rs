//! Exact dense linear algebra over any supported field.

use std::fmt;

use crate::exactfield::{Fe, Field};

pub fn vzero(field: Field, n: usize) -> Vec<Fe> {
    vec![field.zero(); n]
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Fe> {
    let mut v = vzero(field, n);
    v[i] = field.one();
    v
}

pub fn vadd(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vsub(x: &[Fe], y: &[Fe]) -> Vec<Fe> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vneg(x: &[Fe]) -> Vec<Fe> {
    x.iter().map(|a| -a).collect()
}

pub fn vscale(s: &Fe, x: &[Fe]) -> Vec<Fe> {
    x.iter().map(|a| s * a).collect()
}

/// y += s·x
pub fn vaxpy(y: &mut [Fe], s: &Fe, x: &[Fe]) {
    if s.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(s * xi);
        }
    }
}

pub fn vis_zero(x: &[Fe]) -> bool {
    x.iter().all(Fe::is_zero)
}

/// Integer vector reduced into the field.
pub fn vfrom_i64(field: Field, x: &[i64]) -> Vec<Fe> {
    x.iter().map(|&a| field.from_i64(a)).collect()
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Fe>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Matrix whose j-th column is `cols[j]`.
    pub fn from_cols(field: Field, cols: &[Vec<Fe>]) -> Matrix {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Matrix::zero(field, r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Integer matrix reduced into the field.
    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { field, rows, cols, data: entries.iter().map(|&x| field.from_i64(x)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Fe {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut m = Matrix::zero(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) + &(a * b);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Fe) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// Commutator AB − BA.
    pub fn bracket(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut r = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Fe::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * rv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : Mx = 0}.
    pub fn kernel(&self) -> Vec<Vec<Fe>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Some solution of Mx = b, if the system is consistent.
    pub fn solve(&self, b: &[Fe]) -> Option<Vec<Fe>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A subspace of F^n stored as a basis in reduced row echelon form, so that
/// equality of subspaces is equality of values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Fe>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let (r, pivots) = Matrix::from_rows(field, vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { field, ambient, basis, pivots }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { field, ambient, basis: vec![], pivots: vec![] }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let id = Matrix::identity(field, ambient);
        Subspace::span(field, ambient, &(0..ambient).map(|i| id.row(i).to_vec()).collect::<Vec<_>>())
    }

    /// Kernel of M as a subspace of F^{cols}.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        Subspace::span(m.field(), m.cols(), &m.kernel())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    /// Coordinates in the echelon basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Fe> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut w = v.to_vec();
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (wi, bi) in w.iter_mut().zip(b) {
                if !bi.is_zero() {
                    *wi -= &(c * bi);
                }
            }
        }
        w.iter().all(Fe::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::span(self.field, self.ambient, &v)
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        // a·U = b·V  ⇔  (a, b) ∈ ker [Uᵀ | −Vᵀ]
        let mut cols: Vec<Vec<Fe>> = self.basis.clone();
        cols.extend(o.basis.iter().map(|b| b.iter().map(|x| -x).collect()));
        let m = Matrix::from_cols(self.field, &cols);
        let vecs: Vec<Vec<Fe>> = m
            .kernel()
            .into_iter()
            .map(|k| {
                let mut v = vec![self.field.zero(); self.ambient];
                for (c, b) in k.iter().zip(&self.basis) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi += &(c * bi);
                    }
                }
                v
            })
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// {x : b(v, x) = 0 for all v in the subspace} for the bilinear form with Gram matrix G.
    pub fn perp(&self, gram: &Matrix) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field, self.ambient);
        }
        let rows: Vec<Vec<Fe>> = self.basis.iter().map(|b| gram.transpose().mul_vec(b)).collect();
        Subspace::kernel_of(&Matrix::from_rows(self.field, &rows))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.basis)
    }
}
