//! center and quotient of `L⊛M`, and the right-monoidal structures `⊛_z`, `⊛_q` on
//! `E`-objects
//!
//! `E`-objects are bimodules with `E` on the left. the forgetful functor `φ` drops
//! the left action.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactlin::{Cokernel, Field, Mat, Subspace};
use crate::report::{Axiom, Report};
use crate::ringmod::{coequalizer_mats, equalizer_mats, Algebra, BimodMap, Bimodule, Obj};
use crate::skewcat::{
    check_comonad_morphism, check_monad_morphism, check_skewmon_functor, check_skewopmon_functor, tuple_label, FunctorData, ProbeSet,
    SkewMonFunctor, SkewMonoidal, SkewOpmonFunctor,
};

use super::{e_algebra, product_actions, EObject};

pub const THETA_EQUIVARIANT: Axiom = Axiom::new("theta.equivariant", "θ = q∘z is an E-map");

/// `φ`: forget the `E`-action
pub fn forget<F: Field>(x: &Obj<F>) -> Obj<F> {
    Arc::new(x.underlying_right())
}

/// `φ` on arrows
pub fn forget_map<F: Field>(f: &BimodMap<F>) -> BimodMap<F> {
    BimodMap {
        mat: f.mat.clone(),
        source: forget(&f.source),
        target: forget(&f.target),
    }
}

/// the equalizer of `λ₁` and `ρ₁` on `L⊛M`, an `E`-object through `λ₂`
pub fn center<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, l: &EObject<F>, m: &EObject<F>) -> Result<(EObject<F>, Subspace<F>)> {
    let lm = product_actions(s, l, m)?;
    let n = lm.lambdas.len() - m.lambdas.len();
    let (eq, sub) = equalizer_mats(&lm.obj, &lm.lambdas[n - 1], &lm.rhos[l.rhos.len()])?;
    let lam = lm.lambdas[n].iter().map(|a| sub.restrict(a)).collect::<Result<Vec<_>>>()?;
    let obj = Arc::new(eq.relabel(format!("{}⊛z{}", l.obj.label(), m.obj.label())));
    Ok((EObject::left(obj, lam), sub))
}

/// the coequalizer of `ρ₁` and `λ₂` on `L⊛M`, an `E`-object through `λ₁`
pub fn quotient<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, l: &EObject<F>, m: &EObject<F>) -> Result<(EObject<F>, Cokernel<F>)> {
    let lm = product_actions(s, l, m)?;
    let n = lm.lambdas.len() - m.lambdas.len();
    let (co, q) = coequalizer_mats(&lm.obj, &lm.rhos[l.rhos.len()], &lm.lambdas[n])?;
    let lam = lm.lambdas[n - 1].iter().map(|a| q.descend(a)).collect::<Result<Vec<_>>>()?;
    let obj = Arc::new(co.relabel(format!("{}⊛q{}", l.obj.label(), m.obj.label())));
    Ok((EObject::left(obj, lam), q))
}

/// `θ = q∘z`, with a check that it intertwines `λ₂` on the center and `λ₁` on the quotient
pub fn theta<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, l: &EObject<F>, m: &EObject<F>) -> Result<(Mat<F>, Report)> {
    let (z, sub) = center(s, l, m)?;
    let (q, co) = quotient(s, l, m)?;
    let th = co.projection.mul(&sub.inclusion)?;
    let mut rep = Report::new();
    let subject = tuple_label(&[&l.obj, &m.obj]);
    let ok = z.lambdas[0]
        .iter()
        .zip(&q.lambdas[0])
        .all(|(a, b)| th.mul(a).ok() == b.mul(&th).ok());
    rep.assert(THETA_EQUIVARIANT, &subject, ok, "θ does not intertwine the actions");
    Ok((th, rep))
}

struct QData<F: Field> {
    obj: Obj<F>,
    /// `φL⊛φM`
    under: Obj<F>,
    q: Cokernel<F>,
}

struct ZData<F: Field> {
    obj: Obj<F>,
    under: Obj<F>,
    z: Subspace<F>,
}

fn unit_e_object<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, e: &Arc<Algebra<F>>) -> Obj<F> {
    EObject::unit(s).to_bimodule(e).expect("unit is a (1,0)-type object")
}

fn as_bimodule<F: Field>(x: &EObject<F>, e: &Arc<Algebra<F>>) -> Result<Obj<F>> {
    x.to_bimodule(e)
}

/// `⊛_q` on `E`-objects: the quotient of `ρ₁` and `λ₂`
pub struct QuotientStructure<F: Field, S> {
    pub inner: S,
    e: Arc<Algebra<F>>,
    unit: Obj<F>,
    cache: Mutex<HashMap<(u64, u64), Arc<QData<F>>>>,
}

impl<F: Field, S: SkewMonoidal<F>> QuotientStructure<F, S> {
    pub fn new(inner: S) -> Self {
        let e = e_algebra(&inner);
        let unit = unit_e_object(&inner, &e);
        QuotientStructure {
            inner,
            e,
            unit,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn e_algebra(&self) -> &Arc<Algebra<F>> {
        &self.e
    }

    fn data(&self, l: &Obj<F>, m: &Obj<F>) -> Result<Arc<QData<F>>> {
        let key = (l.fingerprint(), m.fingerprint());
        if let Some(d) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(d.clone());
        }
        let (x, q) = quotient(&self.inner, &EObject::from_bimodule(l), &EObject::from_bimodule(m))?;
        let d = Arc::new(QData {
            obj: as_bimodule(&x, &self.e)?,
            under: self.inner.product(&forget(l), &forget(m))?,
            q,
        });
        self.cache.lock().expect("cache lock").insert(key, d.clone());
        Ok(d)
    }

    /// `q_{L,M}: φL⊛φM → φ(L⊛_q M)`
    pub fn q(&self, l: &Obj<F>, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(l, m)?;
        Ok(BimodMap {
            mat: d.q.projection.clone(),
            source: d.under.clone(),
            target: forget(&d.obj),
        })
    }

    /// `κ_M = q_{R,M}`
    pub fn kappa(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.q(&self.unit, m)
    }

    /// `X` with `X∘epi = target`, checked
    fn factor(epi: &Mat<F>, target: &Mat<F>, what: &str) -> Result<Mat<F>> {
        let x = epi.solve_left(target).map_err(|_| Error::NotWellDefined(format!("{what} is not constant on the relations")))?;
        if x.mul(epi)? != *target {
            return Err(Error::NotWellDefined(format!("{what} does not factor")));
        }
        Ok(x)
    }
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonoidal<F> for QuotientStructure<F, S> {
    fn name(&self) -> String {
        format!("{} quotient", self.inner.name())
    }

    fn unit(&self) -> Obj<F> {
        self.unit.clone()
    }

    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        Ok(self.data(a, b)?.obj.clone())
    }

    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        let src = self.data(&f.source, &g.source)?;
        let dst = self.data(&f.target, &g.target)?;
        let pm = self.inner.product_map(&forget_map(f), &forget_map(g))?;
        let top = dst.q.projection.mul(&pm.mat)?;
        let mat = Self::factor(&src.q.projection, &top, "f⊛g")?;
        BimodMap::new(mat, src.obj.clone(), dst.obj.clone())
    }

    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let s = &self.inner;
        let (fl, fm, fn_) = (forget(l), forget(m), forget(n));
        let lm = self.data(l, m)?;
        let mn = self.data(m, n)?;
        let lm_n = self.data(&lm.obj, n)?;
        let l_mn = self.data(l, &mn.obj)?;
        // ξ = q_{L⊛qM,N}∘(q_{L,M}⊛N)∘γ
        let xi = lm_n
            .q
            .projection
            .mul(&s.map_left(&self.q(l, m)?, &fn_)?.mat)?
            .mul(&s.gamma(&fl, &fm, &fn_)?.mat)?;
        let epi = l_mn.q.projection.mul(&s.map_right(&fl, &self.q(m, n)?)?.mat)?;
        let mat = Self::factor(&epi, &xi, "γ")?;
        BimodMap::new(mat, l_mn.obj.clone(), lm_n.obj.clone())
    }

    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(&self.unit, m)?;
        let mat = d.q.projection.mul(&self.inner.eta(&forget(m))?.mat)?;
        BimodMap::new(mat, m.clone(), d.obj.clone())
    }

    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(m, &self.unit)?;
        let mat = Self::factor(&d.q.projection, &self.inner.eps(&forget(m))?.mat, "ε")?;
        BimodMap::new(mat, d.obj.clone(), m.clone())
    }
}

/// `⊛_z` on `E`-objects: the equalizer of `λ₁` and `ρ₁`
pub struct CenterStructure<F: Field, S> {
    pub inner: S,
    e: Arc<Algebra<F>>,
    unit: Obj<F>,
    cache: Mutex<HashMap<(u64, u64), Arc<ZData<F>>>>,
}

impl<F: Field, S: SkewMonoidal<F>> CenterStructure<F, S> {
    pub fn new(inner: S) -> Self {
        let e = e_algebra(&inner);
        let unit = unit_e_object(&inner, &e);
        CenterStructure {
            inner,
            e,
            unit,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn data(&self, l: &Obj<F>, m: &Obj<F>) -> Result<Arc<ZData<F>>> {
        let key = (l.fingerprint(), m.fingerprint());
        if let Some(d) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(d.clone());
        }
        let (x, z) = center(&self.inner, &EObject::from_bimodule(l), &EObject::from_bimodule(m))?;
        let d = Arc::new(ZData {
            obj: as_bimodule(&x, &self.e)?,
            under: self.inner.product(&forget(l), &forget(m))?,
            z,
        });
        self.cache.lock().expect("cache lock").insert(key, d.clone());
        Ok(d)
    }

    /// `z_{L,M}: φ(L⊛_z M) → φL⊛φM`
    pub fn z(&self, l: &Obj<F>, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(l, m)?;
        Ok(BimodMap {
            mat: d.z.inclusion.clone(),
            source: forget(&d.obj),
            target: d.under.clone(),
        })
    }

    /// `ζ_L = z_{L,R}`
    pub fn zeta(&self, l: &Obj<F>) -> Result<BimodMap<F>> {
        self.z(l, &self.unit)
    }

    /// `X` with `mono∘X = target`, checked
    fn factor(mono: &Mat<F>, target: &Mat<F>, what: &str) -> Result<Mat<F>> {
        let x = mono.solve(target).map_err(|_| Error::NotWellDefined(format!("{what} does not land in the center")))?;
        if mono.mul(&x)? != *target {
            return Err(Error::NotWellDefined(format!("{what} does not factor")));
        }
        Ok(x)
    }
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonoidal<F> for CenterStructure<F, S> {
    fn name(&self) -> String {
        format!("{} center", self.inner.name())
    }

    fn unit(&self) -> Obj<F> {
        self.unit.clone()
    }

    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        Ok(self.data(a, b)?.obj.clone())
    }

    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        let src = self.data(&f.source, &g.source)?;
        let dst = self.data(&f.target, &g.target)?;
        let pm = self.inner.product_map(&forget_map(f), &forget_map(g))?;
        let bottom = pm.mat.mul(&src.z.inclusion)?;
        let mat = Self::factor(&dst.z.inclusion, &bottom, "f⊛g")?;
        BimodMap::new(mat, src.obj.clone(), dst.obj.clone())
    }

    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let s = &self.inner;
        let (fl, fm, fn_) = (forget(l), forget(m), forget(n));
        let lm = self.data(l, m)?;
        let mn = self.data(m, n)?;
        let lm_n = self.data(&lm.obj, n)?;
        let l_mn = self.data(l, &mn.obj)?;
        // γ∘(L⊛z_{M,N})∘z_{L,M⊛zN}
        let top = s
            .gamma(&fl, &fm, &fn_)?
            .mat
            .mul(&s.map_right(&fl, &self.z(m, n)?)?.mat)?
            .mul(&l_mn.z.inclusion)?;
        let mono = s.map_left(&self.z(l, m)?, &fn_)?.mat.mul(&lm_n.z.inclusion)?;
        let mat = Self::factor(&mono, &top, "γ")?;
        BimodMap::new(mat, l_mn.obj.clone(), lm_n.obj.clone())
    }

    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(&self.unit, m)?;
        let mat = Self::factor(&d.z.inclusion, &self.inner.eta(&forget(m))?.mat, "η")?;
        BimodMap::new(mat, m.clone(), d.obj.clone())
    }

    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let d = self.data(m, &self.unit)?;
        let mat = self.inner.eps(&forget(m))?.mat.mul(&d.z.inclusion)?;
        BimodMap::new(mat, d.obj.clone(), m.clone())
    }
}

/// `⟨φ, q, 1_R⟩` from `E`-objects with `⊛_q` to `M`
pub struct QuotientForget<'a, F: Field, S> {
    pub on: &'a QuotientStructure<F, S>,
}

impl<F: Field, S: SkewMonoidal<F>> FunctorData<F> for QuotientForget<'_, F, S> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        Ok(forget(x))
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(forget_map(f))
    }
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonFunctor<F> for QuotientForget<'_, F, S> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        self.on.q(x, y)
    }
    fn f0(&self) -> Result<BimodMap<F>> {
        Ok(self.on.inner.unit().identity())
    }
}

/// `⟨φ, z, 1_R⟩` from `E`-objects with `⊛_z` to `M`
pub struct CenterForget<'a, F: Field, S> {
    pub on: &'a CenterStructure<F, S>,
}

impl<F: Field, S: SkewMonoidal<F>> FunctorData<F> for CenterForget<'_, F, S> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        Ok(forget(x))
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(forget_map(f))
    }
}

impl<F: Field, S: SkewMonoidal<F>> SkewOpmonFunctor<F> for CenterForget<'_, F, S> {
    fn f2op(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        self.on.z(x, y)
    }
    fn f0op(&self) -> Result<BimodMap<F>> {
        Ok(self.on.inner.unit().identity())
    }
}

/// smf1–smf3 for `⟨φ, q, 1_R⟩` and the monad-morphism equations for `κ`
pub fn check_quotient_functor<F: Field, S: SkewMonoidal<F>>(qs: &QuotientStructure<F, S>, probes: &ProbeSet<F>) -> Report {
    let fun = QuotientForget { on: qs };
    let mut rep = check_skewmon_functor(&fun, qs, &qs.inner, probes);
    rep.extend(check_monad_morphism(&fun, qs, &qs.inner, probes));
    rep.sorted()
}

/// the opmonoidal laws for `⟨φ, z, 1_R⟩` and the comonad-morphism equations for `ζ`
pub fn check_center_functor<F: Field, S: SkewMonoidal<F>>(cs: &CenterStructure<F, S>, probes: &ProbeSet<F>) -> Report {
    let fun = CenterForget { on: cs };
    let mut rep = check_skewopmon_functor(&fun, cs, &cs.inner, probes);
    rep.extend(check_comonad_morphism(&fun, cs, &cs.inner, probes));
    rep.sorted()
}

/// a bimodule with `E` acting on the left and the given right action
pub fn e_bimodule<F: Field>(e: &Arc<Algebra<F>>, obj: &Obj<F>, lambda: Vec<Mat<F>>) -> Result<Obj<F>> {
    Ok(Arc::new(Bimodule::new(obj.dim(), e.clone(), obj.right_alg().clone(), lambda, obj.right().to_vec(), obj.label())?))
}
