//! objects with actions of `E = End(R)`, and the structures built from them
//!
//! in module categories `E` is the base algebra acting by left multiplication, so an
//! `E`-object is a bimodule. the product `K⊛L` of two `E`-objects carries the actions
//! of its factors and one extra right action per `⊛` sign, numbered left to right.

mod modules;
mod structures;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{Algebra, BimodMap, Bimodule, Obj};
use crate::skewcat::{delta, mu, par_report, tuple_label, SkewMonoidal};

pub use modules::*;
pub use structures::*;

pub const EOBJ_COMMUTE: Axiom = Axiom::new("e-object.commute", "all actions commute");
pub const EOBJ_LEFT: Axiom = Axiom::new("e-object.left", "left actions unital and multiplicative");
pub const EOBJ_RIGHT: Axiom = Axiom::new("e-object.right", "right actions unital and anti-multiplicative");

pub const LR1: Axiom = Axiom::new("lambda-rho.1", "λi∘γ = γ∘λi");
pub const LR2: Axiom = Axiom::new("lambda-rho.2", "λ2∘η = η∘λ1");
pub const LR3: Axiom = Axiom::new("lambda-rho.3", "λ1∘ε = ε∘λ1");
pub const LR4: Axiom = Axiom::new("lambda-rho.4", "λ1∘μ = μ∘λ1");
pub const LR5: Axiom = Axiom::new("lambda-rho.5", "λ2∘μ = μ∘λ3");
pub const LR6: Axiom = Axiom::new("lambda-rho.6", "λ3∘δ = δ∘λ2");
pub const LR7: Axiom = Axiom::new("lambda-rho.7", "λ1∘δ = δ∘λ1");
pub const LR8: Axiom = Axiom::new("lambda-rho.8", "ρi∘γ = γ∘ρi");
pub const LR9: Axiom = Axiom::new("lambda-rho.9", "ρ1∘η = λ1∘η");
pub const LR10: Axiom = Axiom::new("lambda-rho.10", "ε∘ρ1 = ε∘λ2");
pub const LR11: Axiom = Axiom::new("lambda-rho.11", "ρ1∘μ = μ∘ρ2");
pub const LR12: Axiom = Axiom::new("lambda-rho.12", "ρ1∘δ = δ∘ρ1");
pub const LR13: Axiom = Axiom::new("lambda-rho.13", "μ∘ρ1 = μ∘λ2");
pub const LR14: Axiom = Axiom::new("lambda-rho.14", "ρ2∘δ = λ2∘δ");

/// an object of `M` with `m` left and `n` right `E`-actions, each a matrix per basis
/// element of `E`
#[derive(Clone)]
pub struct EObject<F: Field> {
    pub obj: Obj<F>,
    pub lambdas: Vec<Vec<Mat<F>>>,
    pub rhos: Vec<Vec<Mat<F>>>,
}

impl<F: Field> EObject<F> {
    pub fn new(obj: Obj<F>, lambdas: Vec<Vec<Mat<F>>>, rhos: Vec<Vec<Mat<F>>>) -> Self {
        EObject { obj, lambdas, rhos }
    }

    /// a `(1,0)`-type object
    pub fn left(obj: Obj<F>, lambda: Vec<Mat<F>>) -> Self {
        Self::new(obj, vec![lambda], Vec::new())
    }

    /// `(m, n)`
    pub fn kind(&self) -> (usize, usize) {
        (self.lambdas.len(), self.rhos.len())
    }

    /// `R` with `E` acting as itself
    pub fn unit<S: SkewMonoidal<F> + ?Sized>(s: &S) -> Self {
        Self::left(s.unit(), e_mats(s))
    }

    /// a bimodule read as an `E`-object: the left action becomes `λ`
    pub fn from_bimodule(x: &Obj<F>) -> Self {
        Self::left(Arc::new(x.underlying_right()), x.left().to_vec())
    }

    /// a `(1,0)`-type object as a bimodule with `E` acting on the left
    pub fn to_bimodule(&self, e: &Arc<Algebra<F>>) -> Result<Obj<F>> {
        if self.kind() != (1, 0) {
            return Err(Error::Invalid(format!("{:?}-type object is not a bimodule", self.kind())));
        }
        Ok(Arc::new(Bimodule::new(
            self.obj.dim(),
            e.clone(),
            self.obj.right_alg().clone(),
            self.lambdas[0].clone(),
            self.obj.right().to_vec(),
            self.obj.label(),
        )?))
    }
}

/// the algebra standing in for `E`: the algebra `R` is a right module over
pub fn e_algebra<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S) -> Arc<Algebra<F>> {
    s.unit().right_alg().clone()
}

/// the basis of `E` as endomorphisms of `R`
pub fn e_mats<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S) -> Vec<Mat<F>> {
    let b = s.e_basis();
    if b.is_empty() {
        let e = e_algebra(s);
        (0..e.dim()).map(|i| e.lmul(i).clone()).collect()
    } else {
        b
    }
}

fn e_maps<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S) -> Vec<BimodMap<F>> {
    let r = s.unit();
    e_mats(s).into_iter().map(|m| BimodMap { mat: m, source: r.clone(), target: r.clone() }).collect()
}

fn endo<F: Field>(x: &Obj<F>, m: &Mat<F>) -> BimodMap<F> {
    BimodMap {
        mat: m.clone(),
        source: x.clone(),
        target: x.clone(),
    }
}

/// `ρ(r) = (ε_K⊛L)∘γ_{K,R,L}∘(K⊛(r⊛L))∘(K⊛η_L)` on `K⊛L`, one matrix per basis element
pub fn rho_between<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, k: &Obj<F>, l: &Obj<F>) -> Result<Vec<Mat<F>>> {
    let r = s.unit();
    let outer = s.map_left(&s.eps(k)?, l)?.compose(&s.gamma(k, &r, l)?)?;
    let inner = s.map_right(k, &s.eta(l)?)?;
    e_maps(s)
        .iter()
        .map(|e| {
            let mid = s.map_right(k, &s.map_left(e, l)?)?;
            outer.mat.mul(&mid.mat)?.mul(&inner.mat)
        })
        .collect()
}

/// `K⊛L` with the actions of both factors and the new right action between them
pub fn product_actions<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, k: &EObject<F>, l: &EObject<F>) -> Result<EObject<F>> {
    let obj = s.product(&k.obj, &l.obj)?;
    let on_left = |fam: &Vec<Mat<F>>| -> Result<Vec<Mat<F>>> { fam.iter().map(|m| Ok(s.map_left(&endo(&k.obj, m), &l.obj)?.mat)).collect() };
    let on_right = |fam: &Vec<Mat<F>>| -> Result<Vec<Mat<F>>> { fam.iter().map(|m| Ok(s.map_right(&k.obj, &endo(&l.obj, m))?.mat)).collect() };
    let mut lambdas = Vec::new();
    for fam in &k.lambdas {
        lambdas.push(on_left(fam)?);
    }
    for fam in &l.lambdas {
        lambdas.push(on_right(fam)?);
    }
    let mut rhos = Vec::new();
    for fam in &k.rhos {
        rhos.push(on_left(fam)?);
    }
    rhos.push(rho_between(s, &k.obj, &l.obj)?);
    for fam in &l.rhos {
        rhos.push(on_right(fam)?);
    }
    Ok(EObject::new(obj, lambdas, rhos))
}

/// unitality, (anti-)multiplicativity and pairwise commutation over the basis of `e`
pub fn check_e_object<F: Field>(e: &Algebra<F>, x: &EObject<F>, subject: &str) -> Report {
    let mut rep = Report::new();
    let n = e.dim();
    let mut bad = Vec::new();
    let fams: Vec<&Vec<Mat<F>>> = x.lambdas.iter().chain(&x.rhos).collect();
    for (a, fa) in fams.iter().enumerate() {
        for (b, fb) in fams.iter().enumerate().skip(a + 1) {
            for i in 0..n {
                for j in 0..n {
                    if fa[i].mul(&fb[j]).ok() != fb[j].mul(&fa[i]).ok() {
                        bad.push(format!("families {a},{b} at ({i},{j})"));
                    }
                }
            }
        }
    }
    rep.assert(EOBJ_COMMUTE, subject, bad.is_empty(), bad.join("; "));
    for (ax, fams, anti) in [(EOBJ_LEFT, &x.lambdas, false), (EOBJ_RIGHT, &x.rhos, true)] {
        let mut bad = Vec::new();
        for (a, fam) in fams.iter().enumerate() {
            match e.combine(fam, e.unit()) {
                Ok(u) if u.is_identity() => {}
                _ => bad.push(format!("family {a} not unital")),
            }
            for i in 0..n {
                for j in 0..n {
                    let prod = if anti { fam[j].mul(&fam[i]) } else { fam[i].mul(&fam[j]) };
                    if prod.ok() != e.combine(fam, &e.basis_product(i, j)).ok() {
                        bad.push(format!("family {a} at ({i},{j})"));
                    }
                }
            }
        }
        rep.assert(ax, subject, bad.is_empty(), bad.join("; "));
    }
    rep
}

fn stack<F: Field>(parts: Vec<Mat<F>>, cols: usize, field: &F) -> Result<Mat<F>> {
    let refs: Vec<&Mat<F>> = parts.iter().collect();
    Mat::vstack(field, cols, &refs)
}

/// `a[i]·x` against `x·b[i]` for every basis element, stacked
fn commutes<F: Field>(a: &[Mat<F>], x: &Mat<F>, b: &[Mat<F>]) -> Result<(Mat<F>, Mat<F>)> {
    let f = x.field();
    let lhs = a.iter().map(|m| m.mul(x)).collect::<Result<Vec<_>>>()?;
    let rhs = b.iter().map(|m| x.mul(m)).collect::<Result<Vec<_>>>()?;
    Ok((stack(lhs, x.cols(), f)?, stack(rhs, x.cols(), f)?))
}

/// `x·a[i]` against `x·b[i]`
fn coequalizes<F: Field>(x: &Mat<F>, a: &[Mat<F>], b: &[Mat<F>]) -> Result<(Mat<F>, Mat<F>)> {
    let f = x.field();
    let lhs = a.iter().map(|m| x.mul(m)).collect::<Result<Vec<_>>>()?;
    let rhs = b.iter().map(|m| x.mul(m)).collect::<Result<Vec<_>>>()?;
    let cols = a.first().map_or(0, |m| m.cols());
    Ok((stack(lhs, cols, f)?, stack(rhs, cols, f)?))
}

/// `a[i]·x` against `b[i]·x`
fn equalized<F: Field>(a: &[Mat<F>], b: &[Mat<F>], x: &Mat<F>) -> Result<(Mat<F>, Mat<F>)> {
    let f = x.field();
    let lhs = a.iter().map(|m| m.mul(x)).collect::<Result<Vec<_>>>()?;
    let rhs = b.iter().map(|m| m.mul(x)).collect::<Result<Vec<_>>>()?;
    Ok((stack(lhs, x.cols(), f)?, stack(rhs, x.cols(), f)?))
}

/// the fourteen relations between the actions and `γ`, `η`, `ε`, `μ`, `δ`
pub fn check_lambda_rho_table<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, probes: &[EObject<F>]) -> Report {
    let r = EObject::unit(s);
    let triples: Vec<[&EObject<F>; 3]> = probes
        .iter()
        .flat_map(|a| probes.iter().flat_map(move |b| probes.iter().map(move |c| [a, b, c])))
        .collect();
    let mut rep = par_report(&triples, |[l, m, n]| {
        let mut rep = Report::new();
        let subject = tuple_label(&[&l.obj, &m.obj, &n.obj]);
        let parts = (|| -> Result<_> {
            let a = product_actions(s, l, &product_actions(s, m, n)?)?;
            let b = product_actions(s, &product_actions(s, l, m)?, n)?;
            let g = s.gamma(&l.obj, &m.obj, &n.obj)?.mat;
            Ok((a, b, g))
        })();
        match parts {
            Ok((a, b, g)) => {
                rep.equal_with(LR1, &subject, || {
                    let mut lhs = Vec::new();
                    let mut rhs = Vec::new();
                    for i in 0..3 {
                        let (x, y) = commutes(&b.lambdas[i], &g, &a.lambdas[i])?;
                        lhs.push(x);
                        rhs.push(y);
                    }
                    Ok((stack(lhs, g.cols(), g.field())?, stack(rhs, g.cols(), g.field())?))
                });
                rep.equal_with(LR8, &subject, || {
                    let mut lhs = Vec::new();
                    let mut rhs = Vec::new();
                    for i in 0..2 {
                        let (x, y) = commutes(&b.rhos[i], &g, &a.rhos[i])?;
                        lhs.push(x);
                        rhs.push(y);
                    }
                    Ok((stack(lhs, g.cols(), g.field())?, stack(rhs, g.cols(), g.field())?))
                });
            }
            Err(e) => {
                rep.error(LR1, &subject, e.to_string());
                rep.error(LR8, &subject, e.to_string());
            }
        }
        rep
    });
    rep.extend(par_report(probes, |x| {
        let mut rep = Report::new();
        let subject = tuple_label(&[&x.obj]);
        let built = (|| -> Result<_> {
            let rx = product_actions(s, &r, x)?;
            let rrx = product_actions(s, &r, &rx)?;
            let xr = product_actions(s, x, &r)?;
            let xrr = product_actions(s, &xr, &r)?;
            let eta = s.eta(&x.obj)?.mat;
            let eps = s.eps(&x.obj)?.mat;
            let mu = mu(s, &x.obj)?.mat;
            let de = delta(s, &x.obj)?.mat;
            Ok((rx, rrx, xr, xrr, eta, eps, mu, de))
        })();
        let (rx, rrx, xr, xrr, eta, eps, mu, de) = match built {
            Ok(t) => t,
            Err(e) => {
                for ax in [LR2, LR3, LR4, LR5, LR6, LR7, LR9, LR10, LR11, LR12, LR13, LR14] {
                    rep.error(ax, &subject, e.to_string());
                }
                return rep;
            }
        };
        rep.equal_with(LR2, &subject, || commutes(&rx.lambdas[1], &eta, &x.lambdas[0]));
        rep.equal_with(LR3, &subject, || commutes(&x.lambdas[0], &eps, &xr.lambdas[0]));
        rep.equal_with(LR4, &subject, || commutes(&rx.lambdas[0], &mu, &rrx.lambdas[0]));
        rep.equal_with(LR5, &subject, || commutes(&rx.lambdas[1], &mu, &rrx.lambdas[2]));
        rep.equal_with(LR6, &subject, || commutes(&xrr.lambdas[2], &de, &xr.lambdas[1]));
        rep.equal_with(LR7, &subject, || commutes(&xrr.lambdas[0], &de, &xr.lambdas[0]));
        rep.equal_with(LR9, &subject, || equalized(&rx.rhos[0], &rx.lambdas[0], &eta));
        rep.equal_with(LR10, &subject, || coequalizes(&eps, &xr.rhos[0], &xr.lambdas[1]));
        rep.equal_with(LR11, &subject, || commutes(&rx.rhos[0], &mu, &rrx.rhos[1]));
        rep.equal_with(LR12, &subject, || commutes(&xrr.rhos[0], &de, &xr.rhos[0]));
        rep.equal_with(LR13, &subject, || coequalizes(&mu, &rrx.rhos[0], &rrx.lambdas[1]));
        rep.equal_with(LR14, &subject, || equalized(&xrr.rhos[1], &xrr.lambdas[1], &de));
        rep
    }));
    rep.sorted()
}

#[cfg(test)]
mod tests;
