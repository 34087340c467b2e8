use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};

pub const ALG_ASSOC: Axiom = Axiom::new("algebra.assoc", "associativity of structure constants");
pub const ALG_UNIT: Axiom = Axiom::new("algebra.unit", "two-sided unit");

/// finite-dimensional unital algebra given by structure constants
#[derive(Clone)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    /// `dim × dim²`, column `i·dim + j` holds `e_i·e_j`
    mult: Mat<F>,
    unit: Vec<F::Elem>,
    lmul: Vec<Mat<F>>,
    rmul: Vec<Mat<F>>,
    name: String,
    fingerprint: u64,
}

impl<F: Field> Algebra<F> {
    pub fn new(field: &F, dim: usize, mult: Mat<F>, unit: Vec<F::Elem>, name: impl Into<String>) -> Result<Self> {
        if mult.shape() != (dim, dim * dim) {
            return Err(Error::Shape {
                op: "algebra structure constants",
                left: (dim, dim * dim),
                right: mult.shape(),
            });
        }
        if unit.len() != dim {
            return Err(Error::Shape {
                op: "algebra unit",
                left: (dim, 1),
                right: (unit.len(), 1),
            });
        }
        let lmul = (0..dim)
            .map(|i| Mat::from_fn(field, dim, dim, |k, j| mult.get(k, i * dim + j).clone()))
            .collect();
        let rmul = (0..dim)
            .map(|j| Mat::from_fn(field, dim, dim, |k, i| mult.get(k, i * dim + j).clone()))
            .collect();
        let mut h = DefaultHasher::new();
        field.hash(&mut h);
        dim.hash(&mut h);
        mult.hash(&mut h);
        unit.hash(&mut h);
        Ok(Algebra {
            field: field.clone(),
            dim,
            mult,
            unit,
            lmul,
            rmul,
            name: name.into(),
            fingerprint: h.finish(),
        })
    }

    /// structure constants `c[(i·dim + j)·dim + k]` = coefficient of `e_k` in `e_i·e_j`
    pub fn from_constants(field: &F, dim: usize, consts: &[i64], unit: &[i64], name: impl Into<String>) -> Result<Self> {
        if consts.len() != dim * dim * dim {
            return Err(Error::Shape {
                op: "structure constants",
                left: (dim * dim * dim, 1),
                right: (consts.len(), 1),
            });
        }
        let mult = Mat::from_fn(field, dim, dim * dim, |k, ij| field.from_i64(consts[ij * dim + k]));
        let unit = unit.iter().map(|&x| field.from_i64(x)).collect();
        Self::new(field, dim, mult, unit, name)
    }

    /// the ground field as a one-dimensional algebra
    pub fn ground(field: &F) -> Self {
        Self::new(field, 1, Mat::identity(field, 1), vec![field.one()], "k").expect("ground algebra")
    }

    /// the product algebra `k × … × k` with idempotent basis
    pub fn diagonal(field: &F, n: usize) -> Self {
        let mult = Mat::from_fn(field, n, n * n, |k, ij| {
            if ij / n == ij % n && ij % n == k {
                field.one()
            } else {
                field.zero()
            }
        });
        Self::new(field, n, mult, vec![field.one(); n], format!("k^{n}")).expect("diagonal algebra")
    }

    /// `c^op[i][j] = c[j][i]`
    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let mult = Mat::from_fn(&self.field, n, n * n, |k, ij| self.mult.get(k, (ij % n) * n + ij / n).clone());
        Self::new(&self.field, n, mult, self.unit.clone(), format!("{}^op", self.name)).expect("opposite")
    }

    /// `self ⊗_k other`, basis `e_i ⊗ f_j` at index `i·dim(other) + j`
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.name(), other.field.name()));
        }
        let (a, b) = (self.dim, other.dim);
        let n = a * b;
        let f = &self.field;
        let mut mult = Mat::zeros(f, n, n * n);
        for i in 0..a {
            for j in 0..b {
                for k in 0..a {
                    for l in 0..b {
                        let col = (i * b + j) * n + (k * b + l);
                        for (x, cx) in self.mult.col_entries(i * a + k) {
                            for (y, cy) in other.mult.col_entries(j * b + l) {
                                mult.set(x * b + y, col, f.mul(&cx, &cy));
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![f.zero(); n];
        for i in 0..a {
            for j in 0..b {
                unit[i * b + j] = f.mul(&self.unit[i], &other.unit[j]);
            }
        }
        Self::new(f, n, mult, unit, format!("{}⊗{}", self.name, other.name))
    }

    /// `R^e = R^op ⊗ R`
    pub fn enveloping(&self) -> Self {
        self.opposite().tensor(self).expect("same field").renamed(format!("{}^e", self.name))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn structure(&self) -> &Mat<F> {
        &self.mult
    }
    /// left multiplication by the basis element `e_i`
    pub fn lmul(&self, i: usize) -> &Mat<F> {
        &self.lmul[i]
    }
    /// right multiplication by the basis element `e_j`
    pub fn rmul(&self, j: usize) -> &Mat<F> {
        &self.rmul[j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn multiply(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in self.mult.col_entries(i * self.dim + j) {
                    out[k] = f.mul_add(&out[k], &ab, &c);
                }
            }
        }
        out
    }

    /// product of basis elements as a vector
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F::Elem> {
        self.mult.col(i * self.dim + j)
    }

    /// combine per-basis matrices linearly: `Σ x_i·family[i]`
    pub fn combine(&self, family: &[Mat<F>], x: &[F::Elem]) -> Result<Mat<F>> {
        let f = &self.field;
        let (r, c) = family.first().map_or((0, 0), |m| m.shape());
        let mut out = Mat::zeros(f, r, c);
        for (m, a) in family.iter().zip(x) {
            if !f.is_zero(a) {
                out = out.add(&m.scale(a))?;
            }
        }
        Ok(out)
    }

    pub fn left_mul_by(&self, x: &[F::Elem]) -> Mat<F> {
        self.combine(&self.lmul, x).expect("uniform shapes")
    }

    pub fn right_mul_by(&self, x: &[F::Elem]) -> Mat<F> {
        self.combine(&self.rmul, x).expect("uniform shapes")
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// basis indices spanning the algebra modulo the line of the unit
    ///
    /// a relation family that is linear in `r` and vanishes at `r = 1` is spanned by
    /// its values on these indices.
    pub fn generators_mod_unit(&self) -> Vec<usize> {
        match self.unit.iter().position(|u| !self.field.is_zero(u)) {
            Some(skip) => (0..self.dim).filter(|&i| i != skip).collect(),
            None => (0..self.dim).collect(),
        }
    }

    /// all associativity and unit violations
    pub fn check(&self) -> Report {
        let mut rep = Report::new();
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for l in 0..n {
                    let lhs = self.multiply(&ij, &self.basis_vector(l));
                    let rhs = self.multiply(&self.basis_vector(i), &self.basis_product(j, l));
                    if lhs != rhs {
                        bad.push(format!("({i},{j},{l})"));
                    }
                }
            }
        }
        if bad.is_empty() {
            rep.pass(ALG_ASSOC, &self.name);
        } else {
            rep.fail(ALG_ASSOC, &self.name, format!("failing triples {}", bad.join(" ")));
        }
        let mut bad = Vec::new();
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.multiply(&self.unit, &e) != e || self.multiply(&e, &self.unit) != e {
                bad.push(i.to_string());
            }
        }
        if bad.is_empty() {
            rep.pass(ALG_UNIT, &self.name);
        } else {
            rep.fail(ALG_UNIT, &self.name, format!("unit fails on basis elements {}", bad.join(" ")));
        }
        rep
    }
}

impl<F: Field> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.field == other.field && self.mult == other.mult && self.unit == other.unit
    }
}

impl<F: Field> Eq for Algebra<F> {}

impl<F: Field> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, dim {} over {})", self.name, self.dim, self.field.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    fn c2(f: &PrimeField) -> Algebra<PrimeField> {
        // basis 1, g with g² = 1
        Algebra::from_constants(f, 2, &[1, 0, 0, 1, 0, 1, 1, 0], &[1, 0], "kC2").unwrap()
    }

    #[test]
    fn ground_is_valid() {
        let f = PrimeField::new(5).unwrap();
        assert!(Algebra::ground(&f).check().all_passed());
        assert_eq!(Algebra::ground(&f).opposite(), Algebra::ground(&f));
    }

    #[test]
    fn group_algebra_valid_by_brute_force() {
        let f = PrimeField::new(3).unwrap();
        let a = c2(&f);
        let rep = a.check();
        assert!(rep.all_passed(), "{rep}");
        // independent oracle: g·g = 1
        assert_eq!(a.basis_product(1, 1), vec![1, 0]);
    }

    #[test]
    fn corrupted_constant_names_triple() {
        let f = PrimeField::new(2).unwrap();
        let good = Algebra::diagonal(&f, 2);
        assert!(good.check().all_passed());
        let mut m = good.structure().clone();
        // e_0·e_1 := e_1
        m.set(1, 1, 1);
        let bad = Algebra::new(&f, 2, m, good.unit().to_vec(), "bad").unwrap();
        let rep = bad.check();
        assert!(!rep.all_passed());
        let failed = rep.failures().next().unwrap();
        assert!(failed.detail.as_ref().unwrap().contains('('));
    }

    #[test]
    fn opposite_and_enveloping() {
        let f = PrimeField::new(2).unwrap();
        let r = Algebra::diagonal(&f, 2);
        assert_eq!(r.opposite(), r);
        let e = r.enveloping();
        assert_eq!(e.dim(), 4);
        assert!(e.check().all_passed());
    }

    #[test]
    fn noncommutative_opposite() {
        let f = PrimeField::new(2).unwrap();
        // upper triangular 2×2: basis e11, e12, e22
        let mut c = vec![0i64; 27];
        let mut set = |i: usize, j: usize, k: usize| c[(i * 3 + j) * 3 + k] = 1;
        set(0, 0, 0);
        set(0, 1, 1);
        set(1, 2, 1);
        set(2, 2, 2);
        let t = Algebra::from_constants(&f, 3, &c, &[1, 0, 1], "T2").unwrap();
        assert!(t.check().all_passed());
        assert!(!t.is_commutative());
        let op = t.opposite();
        assert!(op.check().all_passed());
        assert_eq!(op.basis_product(1, 0), t.basis_product(0, 1));
        assert!(t.enveloping().check().all_passed());
    }
}
