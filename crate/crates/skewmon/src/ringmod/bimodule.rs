use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};

use super::Algebra;

pub const BIMOD_LEFT: Axiom = Axiom::new("bimodule.left", "left action unital and multiplicative");
pub const BIMOD_RIGHT: Axiom = Axiom::new("bimodule.right", "right action unital and multiplicative");
pub const BIMOD_COMMUTE: Axiom = Axiom::new("bimodule.commute", "left and right actions commute");

/// finite-dimensional bimodule over a pair of algebras
///
/// `left[i]` is the matrix of `m ↦ e_i·m` and `right[j]` the matrix of `m ↦ m·e_j`,
/// so a right action satisfies `right(e_i e_j) = right(e_j)·right(e_i)`.
/// plain right modules have the ground field on the left.
#[derive(Clone)]
pub struct Bimodule<F: Field> {
    dim: usize,
    left_alg: Arc<Algebra<F>>,
    right_alg: Arc<Algebra<F>>,
    left: Vec<Mat<F>>,
    right: Vec<Mat<F>>,
    label: String,
    fingerprint: u64,
}

/// objects are shared
pub type Obj<F> = Arc<Bimodule<F>>;

impl<F: Field> Bimodule<F> {
    pub fn new(
        dim: usize,
        left_alg: Arc<Algebra<F>>,
        right_alg: Arc<Algebra<F>>,
        left: Vec<Mat<F>>,
        right: Vec<Mat<F>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if left_alg.field() != right_alg.field() {
            return Err(Error::FieldMismatch(left_alg.field().name(), right_alg.field().name()));
        }
        if left.len() != left_alg.dim() || right.len() != right_alg.dim() {
            return Err(Error::Invalid(format!(
                "expected {} left and {} right action matrices, got {} and {}",
                left_alg.dim(),
                right_alg.dim(),
                left.len(),
                right.len()
            )));
        }
        for m in left.iter().chain(&right) {
            if m.shape() != (dim, dim) {
                return Err(Error::Shape {
                    op: "action matrix",
                    left: (dim, dim),
                    right: m.shape(),
                });
            }
            if m.field() != left_alg.field() {
                return Err(Error::FieldMismatch(m.field().name(), left_alg.field().name()));
            }
        }
        let mut h = DefaultHasher::new();
        dim.hash(&mut h);
        left_alg.fingerprint().hash(&mut h);
        right_alg.fingerprint().hash(&mut h);
        left.hash(&mut h);
        right.hash(&mut h);
        Ok(Bimodule {
            dim,
            left_alg,
            right_alg,
            left,
            right,
            label: label.into(),
            fingerprint: h.finish(),
        })
    }

    /// right module, ground field acting on the left
    pub fn right_module(alg: Arc<Algebra<F>>, right: Vec<Mat<F>>, label: impl Into<String>) -> Result<Self> {
        let dim = right.first().map_or(0, |m| m.rows());
        let k = Arc::new(Algebra::ground(alg.field()));
        Self::new(dim, k, alg.clone(), vec![Mat::identity(alg.field(), dim)], right, label)
    }

    /// `R` acting on itself from both sides
    pub fn regular(alg: &Arc<Algebra<F>>) -> Self {
        let n = alg.dim();
        let left = (0..n).map(|i| alg.lmul(i).clone()).collect();
        let right = (0..n).map(|j| alg.rmul(j).clone()).collect();
        Self::new(n, alg.clone(), alg.clone(), left, right, alg.name().to_string()).expect("regular bimodule")
    }

    /// `R` as a right module over itself
    pub fn right_regular(alg: &Arc<Algebra<F>>) -> Self {
        Self::regular(alg).underlying_right()
    }

    /// `R^n` as a right module
    pub fn free_right(alg: &Arc<Algebra<F>>, n: usize) -> Self {
        let r = Self::right_regular(alg);
        let mut acc = r.clone();
        for _ in 1..n {
            acc = acc.direct_sum(&r).expect("same algebras");
        }
        if n == 0 {
            return Self::right_module(alg.clone(), vec![Mat::zeros(alg.field(), 0, 0); alg.dim()], "0").expect("zero module");
        }
        acc.relabel(format!("{}^{n}", alg.name()))
    }

    /// `R ⊗_k R` with `a·(x⊗y)·b = ax ⊗ yb`, the free bimodule of rank one
    pub fn free(alg: &Arc<Algebra<F>>) -> Self {
        let f = alg.field();
        let n = alg.dim();
        let id = Mat::identity(f, n);
        let left = (0..n).map(|i| alg.lmul(i).kron(&id).expect("same field")).collect();
        let right = (0..n).map(|j| id.kron(alg.rmul(j)).expect("same field")).collect();
        Self::new(n * n, alg.clone(), alg.clone(), left, right, format!("{}^e", alg.name())).expect("free bimodule")
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.left_alg.fingerprint() != other.left_alg.fingerprint() || self.right_alg.fingerprint() != other.right_alg.fingerprint() {
            return Err(Error::AlgebraMismatch(format!("{} ⊕ {}", self.label, other.label)));
        }
        let sum = |a: &[Mat<F>], b: &[Mat<F>]| -> Result<Vec<Mat<F>>> { a.iter().zip(b).map(|(x, y)| x.direct_sum(y)).collect() };
        Self::new(
            self.dim + other.dim,
            self.left_alg.clone(),
            self.right_alg.clone(),
            sum(&self.left, &other.left)?,
            sum(&self.right, &other.right)?,
            format!("{}⊕{}", self.label, other.label),
        )
    }

    /// forget the left action
    pub fn underlying_right(&self) -> Self {
        let k = Arc::new(Algebra::ground(self.field()));
        Self::new(
            self.dim,
            k,
            self.right_alg.clone(),
            vec![Mat::identity(self.field(), self.dim)],
            self.right.clone(),
            self.label.clone(),
        )
        .expect("shapes unchanged")
    }

    /// replace the left action
    pub fn with_left(&self, alg: Arc<Algebra<F>>, left: Vec<Mat<F>>) -> Result<Self> {
        Self::new(self.dim, alg, self.right_alg.clone(), left, self.right.clone(), self.label.clone())
    }

    /// replace the right action
    pub fn with_right(&self, alg: Arc<Algebra<F>>, right: Vec<Mat<F>>) -> Result<Self> {
        Self::new(self.dim, self.left_alg.clone(), alg, self.left.clone(), right, self.label.clone())
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn field(&self) -> &F {
        self.right_alg.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn left_alg(&self) -> &Arc<Algebra<F>> {
        &self.left_alg
    }
    pub fn right_alg(&self) -> &Arc<Algebra<F>> {
        &self.right_alg
    }
    pub fn left(&self) -> &[Mat<F>] {
        &self.left
    }
    pub fn right(&self) -> &[Mat<F>] {
        &self.right
    }

    /// matrix of `m ↦ x·m` for an element `x` of the left algebra
    pub fn left_by(&self, x: &[F::Elem]) -> Mat<F> {
        self.combine(&self.left, x)
    }

    /// matrix of `m ↦ m·x`
    pub fn right_by(&self, x: &[F::Elem]) -> Mat<F> {
        self.combine(&self.right, x)
    }

    fn combine(&self, fam: &[Mat<F>], x: &[F::Elem]) -> Mat<F> {
        let f = self.field();
        let mut out = Mat::zeros(f, self.dim, self.dim);
        for (m, a) in fam.iter().zip(x) {
            if !f.is_zero(a) {
                out = out.add(&m.scale(a)).expect("uniform shapes");
            }
        }
        out
    }

    pub fn identity(self: &Arc<Self>) -> BimodMap<F> {
        BimodMap {
            mat: Mat::identity(self.field(), self.dim),
            source: self.clone(),
            target: self.clone(),
        }
    }

    pub fn check(&self) -> Report {
        let mut rep = Report::new();
        let subject = self.label.clone();
        let id = Mat::identity(self.field(), self.dim);
        let mut bad = Vec::new();
        if self.left_by(self.left_alg.unit()) != id {
            bad.push("unit".to_string());
        }
        for i in 0..self.left_alg.dim() {
            for j in 0..self.left_alg.dim() {
                let lhs = self.left_by(&self.left_alg.basis_product(i, j));
                if lhs != self.left[i].mul(&self.left[j]).expect("square") {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        rep.assert(BIMOD_LEFT, &subject, bad.is_empty(), format!("violations at {}", bad.join(" ")));
        let mut bad = Vec::new();
        if self.right_by(self.right_alg.unit()) != id {
            bad.push("unit".to_string());
        }
        for i in 0..self.right_alg.dim() {
            for j in 0..self.right_alg.dim() {
                let lhs = self.right_by(&self.right_alg.basis_product(i, j));
                if lhs != self.right[j].mul(&self.right[i]).expect("square") {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        rep.assert(BIMOD_RIGHT, &subject, bad.is_empty(), format!("violations at {}", bad.join(" ")));
        let mut bad = Vec::new();
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l.mul(r).expect("square") != r.mul(l).expect("square") {
                    bad.push(format!("({i},{j})"));
                }
            }
        }
        rep.assert(BIMOD_COMMUTE, &subject, bad.is_empty(), format!("violations at {}", bad.join(" ")));
        rep
    }
}

impl<F: Field> fmt::Debug for Bimodule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Bimodule({}, dim {}, {}-{})",
            self.label,
            self.dim,
            self.left_alg.name(),
            self.right_alg.name()
        )
    }
}

impl<F: Field> PartialEq for Bimodule<F> {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.dim == other.dim && self.left == other.left && self.right == other.right
    }
}

impl<F: Field> Eq for Bimodule<F> {}

/// linear map between bimodules, expected to commute with both actions
#[derive(Clone)]
pub struct BimodMap<F: Field> {
    pub mat: Mat<F>,
    pub source: Obj<F>,
    pub target: Obj<F>,
}

impl<F: Field> BimodMap<F> {
    pub fn new(mat: Mat<F>, source: Obj<F>, target: Obj<F>) -> Result<Self> {
        if mat.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape {
                op: "bimodule map",
                left: (target.dim(), source.dim()),
                right: mat.shape(),
            });
        }
        Ok(BimodMap { mat, source, target })
    }

    pub fn zero(source: Obj<F>, target: Obj<F>) -> Self {
        BimodMap {
            mat: Mat::zeros(source.field(), target.dim(), source.dim()),
            source,
            target,
        }
    }

    /// `self ∘ g`
    pub fn compose(&self, g: &BimodMap<F>) -> Result<Self> {
        if g.target.fingerprint() != self.source.fingerprint() {
            return Err(Error::Invalid(format!(
                "cannot compose {} → {} after {} → {}",
                self.source.label(),
                self.target.label(),
                g.source.label(),
                g.target.label()
            )));
        }
        Ok(BimodMap {
            mat: self.mat.mul(&g.mat)?,
            source: g.source.clone(),
            target: self.target.clone(),
        })
    }

    /// `maps[0] ∘ maps[1] ∘ …`
    pub fn chain(maps: &[&BimodMap<F>]) -> Result<Self> {
        let (last, rest) = maps.split_last().ok_or_else(|| Error::Invalid("empty composite".into()))?;
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Self::new(self.mat.add(&other.mat)?, self.source.clone(), self.target.clone())
    }

    /// whether the matrix intertwines both actions on basis elements
    pub fn is_equivariant(&self) -> bool {
        let s = &self.source;
        let t = &self.target;
        if s.left_alg().fingerprint() != t.left_alg().fingerprint() || s.right_alg().fingerprint() != t.right_alg().fingerprint() {
            return false;
        }
        let ok = |a: &[Mat<F>], b: &[Mat<F>]| a.iter().zip(b).all(|(x, y)| self.mat.mul(x).ok() == y.mul(&self.mat).ok());
        ok(s.left(), t.left()) && ok(s.right(), t.right())
    }

    pub fn is_iso(&self) -> bool {
        self.mat.is_invertible()
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.mat.inverse()?, self.target.clone(), self.source.clone())
    }
}

impl<F: Field> fmt::Debug for BimodMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {}: {:?}", self.source.label(), self.target.label(), self.mat)
    }
}
