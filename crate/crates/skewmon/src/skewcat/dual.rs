//! formal duals and deliberately broken structures

use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::{Field, Mat};
use crate::ringmod::{BimodMap, Bimodule, Obj};

use super::SkewMonoidal;

/// the dual space with transposed actions; sides of the actions swap
///
/// an arrow `f: A → B` corresponds to `fᵀ: B* → A*`, so this realizes the
/// opposite category. dualizing twice returns the same data.
pub fn dual_object<F: Field>(x: &Obj<F>) -> Obj<F> {
    let label = match x.label().strip_suffix('°') {
        Some(base) => base.to_string(),
        None => format!("{}°", x.label()),
    };
    let left = x.right().iter().map(Mat::transpose).collect();
    let right = x.left().iter().map(Mat::transpose).collect();
    Arc::new(
        Bimodule::new(x.dim(), x.right_alg().clone(), x.left_alg().clone(), left, right, label).expect("transposed actions keep their shapes"),
    )
}

/// `fᵀ: B* → A*` for `f: A → B`
pub fn dual_map<F: Field>(f: &BimodMap<F>) -> BimodMap<F> {
    BimodMap {
        mat: f.mat.transpose(),
        source: dual_object(&f.target),
        target: dual_object(&f.source),
    }
}

/// `M^{op,rev}`: opposite arrows and reversed product, again right-monoidal with
/// the roles of `η` and `ε` exchanged
pub struct OpRev<S> {
    pub inner: S,
}

impl<S> OpRev<S> {
    pub fn new(inner: S) -> Self {
        OpRev { inner }
    }
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonoidal<F> for OpRev<S> {
    fn name(&self) -> String {
        format!("{}^op,rev", self.inner.name())
    }
    fn unit(&self) -> Obj<F> {
        dual_object(&self.inner.unit())
    }
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        Ok(dual_object(&self.inner.product(&dual_object(b), &dual_object(a))?))
    }
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        let inner = self.inner.product_map(&dual_map(g), &dual_map(f))?;
        Ok(dual_map(&inner))
    }
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let g = self.inner.gamma(&dual_object(n), &dual_object(m), &dual_object(l))?;
        Ok(dual_map(&g))
    }
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.inner.eps(&dual_object(m))?))
    }
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.inner.eta(&dual_object(m))?))
    }
    fn e_basis(&self) -> Vec<Mat<F>> {
        self.inner.e_basis().iter().map(Mat::transpose).collect()
    }
}

/// which comparison map a [`Corrupted`] structure perturbs
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Gamma,
    Eta,
    Eps,
}

/// adds one to the first entry of the chosen comparison map at every object
pub struct Corrupted<S> {
    pub inner: S,
    pub part: Part,
}

fn bump<F: Field>(mut f: BimodMap<F>) -> BimodMap<F> {
    if f.mat.rows() > 0 && f.mat.cols() > 0 {
        let field = f.mat.field().clone();
        let x = field.add(f.mat.get(0, 0), &field.one());
        f.mat.set(0, 0, x);
    }
    f
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonoidal<F> for Corrupted<S> {
    fn name(&self) -> String {
        format!("{} with {:?} corrupted", self.inner.name(), self.part)
    }
    fn unit(&self) -> Obj<F> {
        self.inner.unit()
    }
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        self.inner.product(a, b)
    }
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.inner.product_map(f, g)
    }
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let g = self.inner.gamma(l, m, n)?;
        Ok(if self.part == Part::Gamma { bump(g) } else { g })
    }
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let e = self.inner.eta(m)?;
        Ok(if self.part == Part::Eta { bump(e) } else { e })
    }
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let e = self.inner.eps(m)?;
        Ok(if self.part == Part::Eps { bump(e) } else { e })
    }
    fn e_basis(&self) -> Vec<Mat<F>> {
        self.inner.e_basis()
    }
}
