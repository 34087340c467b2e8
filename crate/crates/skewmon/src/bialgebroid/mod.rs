//! right bialgebroids by structure constants and the skew-monoidal structure they
//! induce on right modules over the base
//!
//! for `H` over `R` with source `s` and target `t`, the four actions on `H` are
//!
//! | action | formula |
//! |--------|---------|
//! | `λ₁(r)h` | `h·t(r)` |
//! | `ρ₁(r)h` | `t(r)·h` |
//! | `λ₂(r)h` | `s(r)·h` |
//! | `ρ₂(r)h` | `h·s(r)` |
//!
//! `Δ` lands in `H ⊗_{R₁} H`, the tensor square with respect to `ρ₂` and `λ₁`.

mod axioms;
mod galois;
mod induced;
mod instances;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Cokernel, Field, Mat};
use crate::ringmod::{tensor_quotient, Algebra, Bimodule, Obj};

pub use axioms::*;
pub use galois::{galois_map, is_hopf, HopfCertificate, GALOIS_HOPF_AGREEMENT, GALOIS_WELL_DEFINED};
pub use induced::{check_well_defined, default_probes, InducedSkewMon, WD_EPS, WD_GAMMA, WD_PRODUCT_MAP};
pub use instances::{b1, b2, b3, b4, enveloping_bialgebroid, from_bialgebra, group_algebra, triangular};

pub(crate) type Sparse<E> = Vec<(usize, E)>;

/// `out += c·v`
pub(crate) fn axpy<F: Field>(field: &F, out: &mut [F::Elem], c: &F::Elem, v: &[(usize, F::Elem)]) {
    for (i, x) in v {
        out[*i] = field.mul_add(&out[*i], c, x);
    }
}

pub(crate) fn sparse<F: Field>(field: &F, v: &[F::Elem]) -> Sparse<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// a right bialgebroid `H` over `R`
pub struct RightBialgebroid<F: Field> {
    field: F,
    base: Arc<Algebra<F>>,
    h: Arc<Algebra<F>>,
    s: Mat<F>,
    t: Mat<F>,
    delta_k: Mat<F>,
    counit: Mat<F>,
    name: String,
    lambda1: Vec<Mat<F>>,
    rho1: Vec<Mat<F>>,
    lambda2: Vec<Mat<F>>,
    rho2: Vec<Mat<F>>,
    q1: Cokernel<F>,
    q2: Cokernel<F>,
    delta: Mat<F>,
    delta_terms: Vec<Vec<(usize, usize, F::Elem)>>,
    mult_terms: Vec<Sparse<F::Elem>>,
}

impl<F: Field> RightBialgebroid<F> {
    /// `s`, `t` are `dim H × dim R`, `delta` is `dim H² × dim H` into `H ⊗_k H`
    /// (index `a·dim H + b` for `e_a ⊗ e_b`), `counit` is `dim R × dim H`
    pub fn new(
        base: Arc<Algebra<F>>,
        h: Arc<Algebra<F>>,
        s: Mat<F>,
        t: Mat<F>,
        delta: Mat<F>,
        counit: Mat<F>,
        name: impl Into<String>,
    ) -> Result<Self> {
        let f = base.field().clone();
        if h.field() != &f {
            return Err(Error::FieldMismatch(f.name(), h.field().name()));
        }
        let (r, n) = (base.dim(), h.dim());
        for (what, m, shape) in [
            ("bialgebroid.s", &s, (n, r)),
            ("bialgebroid.t", &t, (n, r)),
            ("bialgebroid.Delta", &delta, (n * n, n)),
            ("bialgebroid.counit", &counit, (r, n)),
        ] {
            if m.shape() != shape {
                return Err(Error::Invalid(format!("{what} has shape {:?}, expected {:?}", m.shape(), shape)));
            }
        }
        let lambda1: Vec<Mat<F>> = (0..r).map(|i| h.right_mul_by(&t.col(i))).collect();
        let rho1: Vec<Mat<F>> = (0..r).map(|i| h.left_mul_by(&t.col(i))).collect();
        let lambda2: Vec<Mat<F>> = (0..r).map(|i| h.left_mul_by(&s.col(i))).collect();
        let rho2: Vec<Mat<F>> = (0..r).map(|i| h.right_mul_by(&s.col(i))).collect();
        let q1 = tensor_quotient(&base, &rho2, &lambda1, n, n)?;
        let q2 = tensor_quotient(&base, &rho2, &lambda2, n, n)?;
        let delta_q = q1.projection.mul(&delta)?;
        let delta_terms = (0..n)
            .map(|j| {
                delta_q
                    .col_entries(j)
                    .into_iter()
                    .map(|(t, c)| {
                        let amb = q1.basis[t];
                        (amb / n, amb % n, c)
                    })
                    .collect()
            })
            .collect();
        let mult_terms = (0..n * n).map(|ab| h.structure().col_entries(ab)).collect();
        Ok(RightBialgebroid {
            field: f,
            base,
            h,
            s,
            t,
            delta_k: delta,
            counit,
            name: name.into(),
            lambda1,
            rho1,
            lambda2,
            rho2,
            q1,
            q2,
            delta: delta_q,
            delta_terms,
            mult_terms,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn base(&self) -> &Arc<Algebra<F>> {
        &self.base
    }
    pub fn total(&self) -> &Arc<Algebra<F>> {
        &self.h
    }
    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }
    pub fn dim_r(&self) -> usize {
        self.base.dim()
    }
    pub fn source(&self) -> &Mat<F> {
        &self.s
    }
    pub fn target(&self) -> &Mat<F> {
        &self.t
    }
    pub fn counit(&self) -> &Mat<F> {
        &self.counit
    }
    /// `Δ` as supplied, into `H ⊗_k H`
    pub fn delta_free(&self) -> &Mat<F> {
        &self.delta_k
    }
    /// `Δ` into the canonical basis of `H ⊗_{R₁} H`
    pub fn delta(&self) -> &Mat<F> {
        &self.delta
    }
    /// quotient `H⊗_k H ↠ H ⊗_{R₁} H`
    pub fn q1(&self) -> &Cokernel<F> {
        &self.q1
    }
    /// quotient `H⊗_k H ↠ H ⊗_{R₂} H`
    pub fn q2(&self) -> &Cokernel<F> {
        &self.q2
    }
    pub fn lambda1(&self) -> &[Mat<F>] {
        &self.lambda1
    }
    pub fn rho1(&self) -> &[Mat<F>] {
        &self.rho1
    }
    pub fn lambda2(&self) -> &[Mat<F>] {
        &self.lambda2
    }
    pub fn rho2(&self) -> &[Mat<F>] {
        &self.rho2
    }

    /// `Δ(e_h)` as monomials `(a, b, c)` meaning `c·e_a ⊗ e_b`, a fixed lift
    pub fn delta_terms(&self, h: usize) -> &[(usize, usize, F::Elem)] {
        &self.delta_terms[h]
    }

    /// `e_a·e_b`
    pub fn mult_terms(&self, a: usize, b: usize) -> &[(usize, F::Elem)] {
        &self.mult_terms[a * self.h.dim() + b]
    }

    /// product of a sparse element with a basis element on the right
    pub(crate) fn mul_sparse_basis(&self, x: &[(usize, F::Elem)], b: usize) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.h.dim()];
        for (a, c) in x {
            axpy(&self.field, &mut out, c, self.mult_terms(*a, b));
        }
        out
    }

    /// product of a basis element with a sparse element on the right
    pub(crate) fn mul_basis_sparse(&self, a: usize, y: &[(usize, F::Elem)]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.h.dim()];
        for (b, c) in y {
            axpy(&self.field, &mut out, c, self.mult_terms(a, *b));
        }
        out
    }

    /// `s(e_r)·e_h`
    pub(crate) fn s_times(&self, r: usize, h: usize) -> Vec<F::Elem> {
        self.mul_sparse_basis(&sparse(&self.field, &self.s.col(r)), h)
    }

    /// `ε(x)` for a dense element of `H`
    pub fn eps_of(&self, x: &[F::Elem]) -> Vec<F::Elem> {
        self.counit.apply(x).expect("counit shape")
    }

    /// the base `R` as the unit object, a right module over itself
    pub fn unit_object(&self) -> Obj<F> {
        Arc::new(Bimodule::right_regular(&self.base).relabel("R"))
    }

    /// `H` as a right `R`-module through `ρ₂`
    pub fn h_module(&self) -> Obj<F> {
        Arc::new(Bimodule::right_module(self.base.clone(), self.rho2.clone(), "H").expect("ρ₂ matrices are square"))
    }

    /// `H` with all four actions, as an `R^e`-`R^e`-style record: left `λ₁`,`λ₂`, right `ρ₁`,`ρ₂`
    pub fn four_actions(&self) -> [&[Mat<F>]; 4] {
        [&self.lambda1, &self.rho1, &self.lambda2, &self.rho2]
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// a copy with one structure map replaced, for mutation tests
    pub fn with_parts(&self, s: Option<Mat<F>>, t: Option<Mat<F>>, delta: Option<Mat<F>>, counit: Option<Mat<F>>) -> Result<Self> {
        Self::new(
            self.base.clone(),
            self.h.clone(),
            s.unwrap_or_else(|| self.s.clone()),
            t.unwrap_or_else(|| self.t.clone()),
            delta.unwrap_or_else(|| self.delta_k.clone()),
            counit.unwrap_or_else(|| self.counit.clone()),
            format!("{}*", self.name),
        )
    }
}

impl<F: Field> std::fmt::Debug for RightBialgebroid<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RightBialgebroid({}: dim H {} over {} of dim {})",
            self.name,
            self.h.dim(),
            self.base.name(),
            self.base.dim()
        )
    }
}

#[cfg(test)]
mod tests;
