use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// dense matrix over an exact field, row-major
///
/// linear maps act on column vectors, so a map `V -> W` is a `dim W × dim V` matrix
/// and `g∘f` is `g.mul(&f)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// quotient of a coordinate space by the column space of a matrix
///
/// the quotient basis is the list of non-pivot coordinates, and the section sends
/// each quotient basis vector to the corresponding coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel<F: Field> {
    pub projection: Mat<F>,
    pub section: Mat<F>,
    /// coordinates of the ambient space picked as quotient basis
    pub basis: Vec<usize>,
}

impl<F: Field> Cokernel<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// the endomorphism `a` of the ambient space pushed to the quotient
    ///
    /// only meaningful when `a` preserves the relation subspace.
    pub fn transport(&self, a: &Mat<F>) -> Result<Mat<F>> {
        self.projection.mul(&a.select_cols(&self.basis))
    }
}

impl<F: Field> Cokernel<F> {
    /// push `a` to the quotient, failing if `a` does not preserve the relations
    pub fn descend(&self, a: &Mat<F>) -> Result<Mat<F>> {
        let t = self.transport(a)?;
        if t.mul(&self.projection)? != self.projection.mul(a)? {
            return Err(Error::NotWellDefined("map does not preserve the relation subspace".into()));
        }
        Ok(t)
    }
}

/// subspace given by a basis in kernel normal form
///
/// the basis matrix restricted to the rows `free` is the identity, so those rows
/// give a retraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    pub inclusion: Mat<F>,
    pub free: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// the endomorphism `a` of the ambient space restricted to the subspace
    pub fn restrict(&self, a: &Mat<F>) -> Result<Mat<F>> {
        let ai = a.mul(&self.inclusion)?;
        let r = ai.select_rows(&self.free);
        if self.inclusion.mul(&r)? != ai {
            return Err(Error::NotWellDefined("map does not preserve the subspace".into()));
        }
        Ok(r)
    }

    /// coordinates of ambient vectors known to lie in the subspace
    pub fn retract(&self, v: &Mat<F>) -> Mat<F> {
        v.select_rows(&self.free)
    }
}

impl<F: Field> Mat<F> {
    /// null space as a subspace
    pub fn kernel_subspace(&self) -> Subspace<F> {
        let (inclusion, free) = self.kernel_with_free();
        Subspace { inclusion, free }
    }

    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, f: impl Fn(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape {
                op: "from_vec",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Mat {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// integer entries, reduced into the field
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::from_vec(field, rows, cols, entries.iter().map(|&x| field.from_i64(x)).collect())
    }

    pub fn from_rows(field: &F, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged rows".into()));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::from_i64(field, r, c, &flat)
    }

    /// a single column
    pub fn column(field: &F, v: Vec<F::Elem>) -> Self {
        let n = v.len();
        Mat {
            field: field.clone(),
            rows: n,
            cols: 1,
            data: v,
        }
    }

    /// matrix whose columns are the given vectors, all of length `rows`
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Shape {
                    op: "from_columns",
                    left: (rows, cols),
                    right: (c.len(), 1),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// nonzero entries of column `j`
    pub fn col_entries(&self, j: usize) -> Vec<(usize, F::Elem)> {
        (0..self.rows)
            .filter_map(|i| {
                let x = self.get(i, j);
                (!self.field.is_zero(x)).then(|| (i, x.clone()))
            })
            .collect()
    }

    /// all columns in sparse form
    pub fn sparse_cols(&self) -> Vec<Vec<(usize, F::Elem)>> {
        let mut out = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (j, x) in self.row(i).iter().enumerate() {
                if !self.field.is_zero(x) {
                    out[j].push((i, x.clone()));
                }
            }
        }
        out
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let f = &self.field;
        let (n, m) = (self.rows, other.cols);
        let mut out = vec![f.zero(); n * m];
        for i in 0..n {
            let acc = &mut out[i * m..(i + 1) * m];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                for (slot, b) in acc.iter_mut().zip(other.row(k)) {
                    if !f.is_zero(b) {
                        *slot = f.mul_add(slot, a, b);
                    }
                }
            }
        }
        Self::from_vec(f, n, m, out)
    }

    fn zip_with(&self, other: &Self, op: &'static str, g: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::Shape {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| g(a, b)).collect();
        Self::from_vec(&self.field, self.rows, self.cols, data)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", |a, b| self.field.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Mat { data, ..self.clone() }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Mat { data, ..self.clone() }
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Shape {
                op: "apply",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| if f.is_zero(a) || f.is_zero(b) { acc } else { f.mul_add(&acc, a, b) })
            })
            .collect())
    }

    /// Kronecker product, row index `i_a·rows_b + i_b`
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let f = &self.field;
        let (rb, cb) = other.shape();
        let mut out = Self::zeros(f, self.rows * rb, self.cols * cb);
        let oc = out.cols;
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let a = self.get(ia, ja);
                if f.is_zero(a) {
                    continue;
                }
                for ib in 0..rb {
                    for jb in 0..cb {
                        let b = other.get(ib, jb);
                        if !f.is_zero(b) {
                            out.data[(ia * rb + ib) * oc + ja * cb + jb] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// block diagonal `[[a, 0], [0, b]]`
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let mut out = Self::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// side-by-side concatenation; `rows` is used when the list is empty
    pub fn hstack(field: &F, rows: usize, parts: &[&Self]) -> Result<Self> {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut off = 0;
        for p in parts {
            if p.field != *field {
                return Err(Error::FieldMismatch(field.name(), p.field.name()));
            }
            if p.rows != rows {
                return Err(Error::Shape {
                    op: "hstack",
                    left: (rows, cols),
                    right: p.shape(),
                });
            }
            for i in 0..rows {
                for j in 0..p.cols {
                    out.data[i * cols + off + j] = p.get(i, j).clone();
                }
            }
            off += p.cols;
        }
        Ok(out)
    }

    /// stacked concatenation; `cols` is used when the list is empty
    pub fn vstack(field: &F, cols: usize, parts: &[&Self]) -> Result<Self> {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            if p.field != *field {
                return Err(Error::FieldMismatch(field.name(), p.field.name()));
            }
            if p.cols != cols {
                return Err(Error::Shape {
                    op: "vstack",
                    left: (rows, cols),
                    right: p.shape(),
                });
            }
            data.extend_from_slice(&p.data);
        }
        Self::from_vec(field, rows, cols, data)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// reduced row echelon form and pivot columns
    ///
    /// pivots are chosen column by column from the left, taking the first row
    /// with a nonzero entry, so the result is deterministic.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&self.field, self.rows, self.cols, &mut m.data);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// kernel basis (as columns) together with the free column of each basis vector
    ///
    /// basis vector `t` has a 1 at coordinate `free[t]` and 0 at the other free coordinates.
    pub fn kernel_with_free(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(k);
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| is_pivot[j].is_none()).collect();
        let mut basis = Self::zeros(f, self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            basis.set(fc, t, f.one());
            for (k, &p) in pivots.iter().enumerate() {
                let x = r.get(k, fc);
                if !f.is_zero(x) {
                    basis.set(p, t, f.neg(x));
                }
            }
        }
        (basis, free)
    }

    /// columns form a basis of the null space
    pub fn kernel_basis(&self) -> Self {
        self.kernel_with_free().0
    }

    /// projection onto the cokernel, with its coordinate section
    pub fn cokernel_projection(&self) -> Cokernel<F> {
        let f = &self.field;
        let d = self.rows;
        let (r, pivots) = self.transpose().rref();
        let mut is_pivot = vec![false; d];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<usize> = (0..d).filter(|&j| !is_pivot[j]).collect();
        let q = basis.len();
        let mut projection = Self::zeros(f, q, d);
        for (t, &j) in basis.iter().enumerate() {
            projection.set(t, j, f.one());
        }
        for (k, &p) in pivots.iter().enumerate() {
            for (t, &j) in basis.iter().enumerate() {
                let x = r.get(k, j);
                if !f.is_zero(x) {
                    projection.set(t, p, f.neg(x));
                }
            }
        }
        let mut section = Self::zeros(f, d, q);
        for (t, &j) in basis.iter().enumerate() {
            section.set(j, t, f.one());
        }
        Cokernel {
            projection,
            section,
            basis,
        }
    }

    /// some `x` with `self·x = b`
    pub fn solve(&self, b: &Self) -> Result<Self> {
        self.same_field(b)?;
        if self.rows != b.rows {
            return Err(Error::Shape {
                op: "solve",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let f = &self.field;
        let aug = Self::hstack(f, self.rows, &[self, b])?;
        let (r, pivots) = aug.rref();
        if let Some(&p) = pivots.iter().find(|&&p| p >= self.cols) {
            return Err(Error::NoSolution(format!("inconsistent in right-hand column {}", p - self.cols)));
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (k, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, r.get(k, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// the unique `x` with `self·x = b`; requires full column rank
    pub fn solve_unique(&self, b: &Self) -> Result<Self> {
        if self.rank() != self.cols {
            return Err(Error::NoSolution("solution is not unique".into()));
        }
        self.solve(b)
    }

    /// some `x` with `x·self = b`
    pub fn solve_left(&self, b: &Self) -> Result<Self> {
        Ok(self.transpose().solve(&b.transpose())?.transpose())
    }

    /// the unique `x` with `x·self = b`; requires full row rank
    pub fn solve_left_unique(&self, b: &Self) -> Result<Self> {
        Ok(self.transpose().solve_unique(&b.transpose())?.transpose())
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Singular);
        }
        if !self.is_invertible() {
            return Err(Error::Singular);
        }
        self.solve(&Self::identity(&self.field, self.rows))
    }

    /// entries as integers (rationals as strings) for reports
    pub fn render(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| self.field.format(x)).collect())
            .collect()
    }
}

pub(crate) fn rref_in_place<F: Field>(f: &F, rows: usize, cols: usize, data: &mut [F::Elem]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&data[r * cols + c]).expect("nonzero pivot");
        let mut pivot_row = Vec::new();
        for j in c..cols {
            let x = &data[r * cols + j];
            if !f.is_zero(x) {
                let y = f.mul(x, &inv);
                data[r * cols + j] = y.clone();
                pivot_row.push((j, y));
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c].clone();
            if f.is_zero(&factor) {
                continue;
            }
            let neg = f.neg(&factor);
            for (j, y) in &pivot_row {
                let slot = &mut data[i * cols + j];
                *slot = f.mul_add(slot, &neg, y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(fm, "Mat {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format(x)).collect();
            writeln!(fm, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
