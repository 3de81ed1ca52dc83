//! Structure-constant algebras carrying a quadratic form.
//!
//! Elements are plain coordinate vectors (`Vec<Fe>`) in the algebra's basis.
//! The product is stored densely (one coordinate vector per basis pair) and
//! also as a sparse list, which is what multiplication walks.

mod build;
mod canonical;
mod idempotent;
mod io;
mod verify;

use std::fmt;

pub use build::{
    cayley_dickson, etale_algebra, from_kw, ground, para, petersson, split_okubo,
    split_okubo_type1, zorn, KwData,
};
pub(crate) use build::canonical_entry;
pub(crate) use canonical::nonisotropic_perp;
pub(crate) use idempotent::enumerate_span;
pub use canonical::{
    complete_canonical_basis, conjugate_to_standard, find_canonical_basis, witness_reproduces_table,
};
pub use idempotent::{
    brute_force_idempotents, commutative_center, find_para_unit, idempotents, is_cube_root_of_unity, is_para_unit,
    radical_of, IdempotentSet, Strategy, BRUTE_FORCE_LIMIT,
};
pub use io::{format_algebra, format_element, parse_algebra, parse_element};
pub use verify::{check_composition, check_hurwitz, check_symmetric, CompositionCheck, CheckMode};

use crate::error::{Error, Result};
use crate::exactfield::{Fe, Field};
use crate::linalg::{unit_vector, vaxpy, vis_zero, vzero, Matrix, Subspace};

pub type Elem = Vec<Fe>;

/// Canonical basis labels, in storage order.
pub const CANONICAL_NAMES: [&str; 8] = ["e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"];
pub const E1: usize = 0;
pub const E2: usize = 1;
pub const U1: usize = 2;
pub const U2: usize = 3;
pub const U3: usize = 4;
pub const V1: usize = 5;
pub const V2: usize = 6;
pub const V3: usize = 7;

/// Diagonal values n(bᵢ) together with the polar Gram matrix n(bᵢ, bⱼ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    diag: Vec<Fe>,
    gram: Matrix,
}

impl QuadraticForm {
    pub fn new(diag: Vec<Fe>, gram: Matrix) -> Result<QuadraticForm> {
        let d = diag.len();
        if gram.rows() != d || gram.cols() != d {
            return Err(Error::BadForm("gram shape".into()));
        }
        let two = gram.field().from_i64(2);
        for i in 0..d {
            if *gram.get(i, i) != &two * &diag[i] {
                return Err(Error::BadForm(format!("polar(b{i},b{i}) != 2 n(b{i})")));
            }
            for j in 0..i {
                if gram.get(i, j) != gram.get(j, i) {
                    return Err(Error::BadForm("gram not symmetric".into()));
                }
            }
        }
        Ok(QuadraticForm { diag, gram })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Fe] {
        &self.diag
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn norm(&self, x: &[Fe]) -> Fe {
        let f = self.gram.field();
        let mut s = f.zero();
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            if !self.diag[i].is_zero() {
                s += &(&self.diag[i] * &(&x[i] * &x[i]));
            }
            for j in i + 1..x.len() {
                let g = self.gram.get(i, j);
                if !g.is_zero() && !x[j].is_zero() {
                    s += &(g * &(&x[i] * &x[j]));
                }
            }
        }
        s
    }

    pub fn polar(&self, x: &[Fe], y: &[Fe]) -> Fe {
        let f = self.gram.field();
        let mut s = f.zero();
        for i in 0..x.len() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..y.len() {
                let g = self.gram.get(i, j);
                if !g.is_zero() && !y[j].is_zero() {
                    s += &(g * &(&x[i] * &y[j]));
                }
            }
        }
        s
    }

    /// {x : n(x, C) = 0}
    pub fn radical(&self) -> Subspace {
        Subspace::kernel_of(&self.gram)
    }

    /// Radical zero, or a nonisotropic line.
    pub fn is_nonsingular(&self) -> bool {
        let r = self.radical();
        match r.dim() {
            0 => true,
            1 => !self.norm(&r.basis()[0]).is_zero(),
            _ => false,
        }
    }
}

/// Distinguished data attached to an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tag {
    Hurwitz { unit: Elem },
    Para { para_unit: Elem },
    /// A Petersson algebra C_τ; `unit` is the unit of C, an idempotent of C_τ.
    Petersson { unit: Elem },
    Okubo { idempotent: Option<Elem> },
    Generic,
}

impl Tag {
    pub fn name(&self) -> &'static str {
        match self {
            Tag::Hurwitz { .. } => "hurwitz",
            Tag::Para { .. } => "para",
            Tag::Petersson { .. } => "petersson",
            Tag::Okubo { .. } => "okubo",
            Tag::Generic => "generic",
        }
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self, Tag::Para { .. } | Tag::Petersson { .. } | Tag::Okubo { .. })
    }

    /// A known idempotent: the unit, para-unit, or recorded idempotent.
    pub fn known_idempotent(&self) -> Option<&Elem> {
        match self {
            Tag::Hurwitz { unit } | Tag::Petersson { unit } => Some(unit),
            Tag::Para { para_unit } => Some(para_unit),
            Tag::Okubo { idempotent } => idempotent.as_ref(),
            Tag::Generic => None,
        }
    }
}

/// The images of (e₁, e₂, u₁, u₂, u₃, v₁, v₂, v₃) in an algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalWitness {
    pub vectors: [Elem; 8],
}

impl CanonicalWitness {
    pub fn standard(field: Field) -> CanonicalWitness {
        CanonicalWitness { vectors: std::array::from_fn(|i| unit_vector(field, 8, i)) }
    }

    /// Matrix whose columns are the witness vectors.
    pub fn matrix(&self, field: Field) -> Matrix {
        Matrix::from_cols(field, &self.vectors)
    }
}

#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Vec<Elem>,
    sparse: Vec<Vec<(usize, Fe)>>,
    form: QuadraticForm,
    tag: Tag,
    names: Vec<String>,
    witness: Option<CanonicalWitness>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Algebra) -> bool {
        self.field == o.field && self.table == o.table && self.form == o.form && self.tag == o.tag
    }
}

impl Algebra {
    /// `table[i*d + j]` holds the coordinates of bᵢ·bⱼ.
    pub fn new(field: Field, table: Vec<Elem>, form: QuadraticForm, tag: Tag) -> Result<Algebra> {
        let d = form.dim();
        if table.len() != d * d || table.iter().any(|v| v.len() != d) {
            return Err(Error::Dimension(d));
        }
        if form.gram().field() != field || table.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let sparse = table
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect())
            .collect();
        let names = (0..d).map(|i| format!("b{i}")).collect();
        Ok(Algebra { field, dim: d, table, sparse, form, tag, names, witness: None })
    }

    /// Builds the table from a bilinear rule on basis indices.
    pub fn from_fn(
        field: Field,
        form: QuadraticForm,
        tag: Tag,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Result<Algebra> {
        let d = form.dim();
        let mut table = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                table.push(f(i, j));
            }
        }
        Algebra::new(field, table, form, tag)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Algebra {
        assert_eq!(names.len(), self.dim);
        self.names = names;
        self
    }

    pub fn with_tag(mut self, tag: Tag) -> Algebra {
        self.tag = tag;
        self
    }

    pub fn with_witness(mut self, w: Option<CanonicalWitness>) -> Algebra {
        self.witness = w;
        self
    }

    /// Copy with one structure constant c[i][j][k] replaced.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, v: Fe) -> Algebra {
        let mut table = self.table.clone();
        table[i * self.dim + j][k] = v;
        Algebra::new(self.field, table, self.form.clone(), self.tag.clone())
            .expect("same shape")
            .with_names(self.names.clone())
            .with_witness(self.witness.clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn tag(&self) -> &Tag {
        &self.tag
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn witness(&self) -> Option<&CanonicalWitness> {
        self.witness.as_ref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Fe {
        &self.table[i * self.dim + j][k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &Elem {
        &self.table[i * self.dim + j]
    }

    pub fn basis(&self, i: usize) -> Elem {
        unit_vector(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Elem {
        vzero(self.field, self.dim)
    }

    /// Index of a basis vector by name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn mul(&self, x: &[Fe], y: &[Fe]) -> Elem {
        let d = self.dim;
        let mut out = vzero(self.field, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let entries = &self.sparse[i * d + j];
                if entries.is_empty() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in entries {
                    out[*k] += &(&c * v);
                }
            }
        }
        out
    }

    pub fn norm(&self, x: &[Fe]) -> Fe {
        self.form.norm(x)
    }

    pub fn polar(&self, x: &[Fe], y: &[Fe]) -> Fe {
        self.form.polar(x, y)
    }

    pub fn unit(&self) -> Option<&Elem> {
        match &self.tag {
            Tag::Hurwitz { unit } => Some(unit),
            _ => None,
        }
    }

    /// x̄ = n(x,1)1 − x.
    pub fn conj(&self, x: &[Fe]) -> Result<Elem> {
        let one = self.unit().ok_or(Error::NotHurwitz("conjugate"))?;
        Ok(conj_about(self, one, x))
    }

    /// Matrix of y ↦ x·y (columns are images of basis vectors).
    pub fn left_matrix(&self, x: &[Fe]) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_cols(self.field, &cols)
    }

    /// Matrix of y ↦ y·x.
    pub fn right_matrix(&self, x: &[Fe]) -> Matrix {
        let cols: Vec<Elem> = (0..self.dim).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_cols(self.field, &cols)
    }

    /// Symbolic rendering such as "v3", "-e1", "2*u1+e2" or "0".
    pub fn elem_text(&self, x: &[Fe]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.names[i];
            let neg = -c;
            let term = if c.is_one() {
                format!("+{name}")
            } else if neg.is_one() {
                format!("-{name}")
            } else {
                let t = c.to_string();
                if t.starts_with('-') {
                    format!("-{}*{name}", &t[1..])
                } else if t.contains(['+', '-', '/']) && !t.starts_with('[') {
                    format!("+({t})*{name}")
                } else {
                    format!("+{t}*{name}")
                }
            };
            parts.push(term);
        }
        if parts.is_empty() {
            return "0".into();
        }
        let s = parts.concat();
        s.strip_prefix('+').map(str::to_string).unwrap_or(s)
    }

    /// Elements b with n(x, b) = 0 for all x in S.
    pub fn perp(&self, s: &Subspace) -> Subspace {
        s.perp(self.form.gram())
    }

    pub fn is_idempotent(&self, e: &[Fe]) -> bool {
        !vis_zero(e) && self.mul(e, e) == e
    }

    /// Elements commuting with e: kernel of x ↦ e·x − x·e.
    pub fn centralizer(&self, e: &[Fe]) -> Subspace {
        Subspace::kernel_of(&self.left_matrix(e).sub(&self.right_matrix(e)))
    }

    /// Is the subspace closed under the product?
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&self.mul(x, y))))
    }
}

/// n(x,e)e − x: conjugation about a norm-one element e.
pub(crate) fn conj_about(a: &Algebra, e: &[Fe], x: &[Fe]) -> Elem {
    let mut out = crate::linalg::vneg(x);
    vaxpy(&mut out, &a.polar(x, e), e);
    out
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-dim {} algebra over {}", self.dim, self.tag.name(), self.field)
    }
}
