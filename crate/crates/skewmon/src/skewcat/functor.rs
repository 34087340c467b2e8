//! skew-monoidal and skew-opmonoidal functors, monoidal transformations, and the
//! induced (co)monad morphisms between canonical (co)monads

use crate::error::Result;
use crate::exactlin::Field;
use crate::report::{Axiom, Report};
use crate::ringmod::{BimodMap, Obj};

use super::*;

pub const SMF1: Axiom = Axiom::new("smf1.hexagon", "smf1");
pub const SMF2: Axiom = Axiom::new("smf2.unit", "smf2");
pub const SMF3: Axiom = Axiom::new("smf3.counit", "smf3");
pub const SMF_NAT: Axiom = Axiom::new("smf.natural", "naturality of F2");
pub const OPSMF1: Axiom = Axiom::new("opsmf1.hexagon", "smf1 in the op-rev dual");
pub const OPSMF2: Axiom = Axiom::new("opsmf2.counit", "smf2 in the op-rev dual");
pub const OPSMF3: Axiom = Axiom::new("opsmf3.unit", "smf3 in the op-rev dual");
pub const MONNAT_PRODUCT: Axiom = Axiom::new("monoidal-nat.product", "monoidal transformation and F2");
pub const MONNAT_UNIT: Axiom = Axiom::new("monoidal-nat.unit", "monoidal transformation and F0");
pub const MONAD_MORPHISM_MULT: Axiom = Axiom::new("monad-morphism.mult", "monad morphism and mu");
pub const MONAD_MORPHISM_UNIT: Axiom = Axiom::new("monad-morphism.unit", "monad morphism and eta");
pub const COMONAD_MORPHISM_COMULT: Axiom = Axiom::new("comonad-morphism.comult", "comonad morphism and delta");
pub const COMONAD_MORPHISM_COUNIT: Axiom = Axiom::new("comonad-morphism.counit", "comonad morphism and eps");

/// a functor between categories of bimodules, given on objects and arrows
pub trait FunctorData<F: Field>: Send + Sync {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>>;
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>>;
}

/// `⟨F, F₂, F₀⟩` with `F_{X,Y}: FX⊛FY → F(X⊛Y)` and `F₀: R → FR`
pub trait SkewMonFunctor<F: Field>: FunctorData<F> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>>;
    fn f0(&self) -> Result<BimodMap<F>>;
}

/// `⟨F, F², F⁰⟩` with `F^{X,Y}: F(X⊛Y) → FX⊛FY` and `F⁰: FR → R`
pub trait SkewOpmonFunctor<F: Field>: FunctorData<F> {
    fn f2op(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>>;
    fn f0op(&self) -> Result<BimodMap<F>>;
}

/// the identity functor with identity structure maps
pub struct IdentityFunctor<'a, F: Field> {
    pub on: &'a dyn SkewMonoidal<F>,
}

impl<F: Field> FunctorData<F> for IdentityFunctor<'_, F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        Ok(x.clone())
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(f.clone())
    }
}

impl<F: Field> SkewMonFunctor<F> for IdentityFunctor<'_, F> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        self.on.id2(x, y)
    }
    fn f0(&self) -> Result<BimodMap<F>> {
        Ok(self.on.unit().identity())
    }
}

impl<F: Field> SkewOpmonFunctor<F> for IdentityFunctor<'_, F> {
    fn f2op(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        self.on.id2(x, y)
    }
    fn f0op(&self) -> Result<BimodMap<F>> {
        Ok(self.on.unit().identity())
    }
}

/// the identity functor with a supplied `F₂`, as used for twists
pub struct IdentityWith<'a, F: Field> {
    pub unit: Obj<F>,
    pub f2: &'a (dyn Fn(&Obj<F>, &Obj<F>) -> Result<BimodMap<F>> + Send + Sync),
}

impl<F: Field> FunctorData<F> for IdentityWith<'_, F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        Ok(x.clone())
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(f.clone())
    }
}

impl<F: Field> SkewMonFunctor<F> for IdentityWith<'_, F> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        (self.f2)(x, y)
    }
    fn f0(&self) -> Result<BimodMap<F>> {
        Ok(self.unit.identity())
    }
}

/// smf1–smf3 and naturality of `F₂`, for `F: M → N`
pub fn check_skewmon_functor<F: Field>(fun: &dyn SkewMonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    let r = m.unit();
    let mut rep = par_report(&p.triples(), |[x, y, z]| {
        let mut rep = Report::new();
        rep.equal_with(SMF1, &tuple_label(&[x, y, z]), || {
            let (fx, fy, fz) = (fun.obj(x)?, fun.obj(y)?, fun.obj(z)?);
            let yz = m.product(y, z)?;
            let xy = m.product(x, y)?;
            let lhs = comp(&[&fun.arrow(&m.gamma(x, y, z)?)?, &fun.f2(x, &yz)?, &n.map_right(&fx, &fun.f2(y, z)?)?])?;
            let rhs = comp(&[&fun.f2(&xy, z)?, &n.map_left(&fun.f2(x, y)?, &fz)?, &n.gamma(&fx, &fy, &fz)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    rep.extend(par_report(&p.objects, |x| {
        let mut rep = Report::new();
        let subject = tuple_label(&[x]);
        rep.equal_with(SMF2, &subject, || {
            let fx = fun.obj(x)?;
            let lhs = comp(&[&fun.f2(&r, x)?, &n.map_left(&fun.f0()?, &fx)?, &n.eta(&fx)?])?;
            Ok((lhs, fun.arrow(&m.eta(x)?)?.mat))
        });
        rep.equal_with(SMF3, &subject, || {
            let fx = fun.obj(x)?;
            let lhs = comp(&[&fun.arrow(&m.eps(x)?)?, &fun.f2(x, &r)?, &n.map_right(&fx, &fun.f0()?)?])?;
            Ok((lhs, n.eps(&fx)?.mat))
        });
        rep
    }));
    rep.extend(par_report(&p.maps, |f| {
        let mut rep = Report::new();
        for y in &p.objects {
            let subject = format!("([{}→{}],{})", f.source.label(), f.target.label(), y.label());
            rep.equal_with(SMF_NAT, &subject, || {
                let fy = fun.obj(y)?;
                let lhs = comp(&[&fun.f2(&f.target, y)?, &n.map_left(&fun.arrow(f)?, &fy)?])?;
                let rhs = comp(&[&fun.arrow(&m.map_left(f, y)?)?, &fun.f2(&f.source, y)?])?;
                Ok((lhs, rhs))
            });
            let subject = format!("({},[{}→{}])", y.label(), f.source.label(), f.target.label());
            rep.equal_with(SMF_NAT, &subject, || {
                let fy = fun.obj(y)?;
                let lhs = comp(&[&fun.f2(y, &f.target)?, &n.map_right(&fy, &fun.arrow(f)?)?])?;
                let rhs = comp(&[&fun.arrow(&m.map_right(y, f)?)?, &fun.f2(y, &f.source)?])?;
                Ok((lhs, rhs))
            });
        }
        rep
    }));
    rep.sorted()
}

/// the three laws of a skew-opmonoidal functor, written out in `M`
pub fn check_skewopmon_functor<F: Field>(fun: &dyn SkewOpmonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    let r = m.unit();
    let mut rep = par_report(&p.triples(), |[x, y, z]| {
        let mut rep = Report::new();
        rep.equal_with(OPSMF1, &tuple_label(&[x, y, z]), || {
            let (fx, fy, fz) = (fun.obj(x)?, fun.obj(y)?, fun.obj(z)?);
            let xy = m.product(x, y)?;
            let yz = m.product(y, z)?;
            let lhs = comp(&[&n.map_left(&fun.f2op(x, y)?, &fz)?, &fun.f2op(&xy, z)?, &fun.arrow(&m.gamma(x, y, z)?)?])?;
            let rhs = comp(&[&n.gamma(&fx, &fy, &fz)?, &n.map_right(&fx, &fun.f2op(y, z)?)?, &fun.f2op(x, &yz)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    rep.extend(par_report(&p.objects, |x| {
        let mut rep = Report::new();
        let subject = tuple_label(&[x]);
        rep.equal_with(OPSMF2, &subject, || {
            let fx = fun.obj(x)?;
            let lhs = comp(&[&n.eps(&fx)?, &n.map_right(&fx, &fun.f0op()?)?, &fun.f2op(x, &r)?])?;
            Ok((lhs, fun.arrow(&m.eps(x)?)?.mat))
        });
        rep.equal_with(OPSMF3, &subject, || {
            let fx = fun.obj(x)?;
            let lhs = comp(&[&n.map_left(&fun.f0op()?, &fx)?, &fun.f2op(&r, x)?, &fun.arrow(&m.eta(x)?)?])?;
            Ok((lhs, n.eta(&fx)?.mat))
        });
        rep
    }));
    rep.sorted()
}

/// the two squares for a monoidal transformation `ν: F → G`
pub fn check_monoidal_nat<F: Field>(
    nu: &(dyn Fn(&Obj<F>) -> Result<BimodMap<F>> + Sync),
    f: &dyn SkewMonFunctor<F>,
    g: &dyn SkewMonFunctor<F>,
    m: &dyn SkewMonoidal<F>,
    n: &dyn SkewMonoidal<F>,
    p: &ProbeSet<F>,
) -> Report {
    let mut rep = par_report(&p.pairs(), |(x, y)| {
        let mut rep = Report::new();
        rep.equal_with(MONNAT_PRODUCT, &tuple_label(&[x, y]), || {
            let xy = m.product(x, y)?;
            let lhs = comp(&[&nu(&xy)?, &f.f2(x, y)?])?;
            let rhs = comp(&[&g.f2(x, y)?, &n.product_map(&nu(x)?, &nu(y)?)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    let r = m.unit();
    rep.equal_with(MONNAT_UNIT, &tuple_label(&[&r]), || Ok((comp(&[&nu(&r)?, &f.f0()?])?, g.f0()?.mat)));
    rep.sorted()
}

/// `φ_M = F_{R,M}∘(F₀⊛FM): T'FM → FTM`
pub fn monad_morphism_from_functor<F: Field>(fun: &dyn SkewMonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, x: &Obj<F>) -> Result<BimodMap<F>> {
    let fx = fun.obj(x)?;
    fun.f2(&m.unit(), x)?.compose(&n.map_left(&fun.f0()?, &fx)?)
}

/// `ψ_M = (FM⊛F⁰)∘F^{M,R}: FQM → Q'FM`
pub fn comonad_morphism_from_functor<F: Field>(fun: &dyn SkewOpmonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, x: &Obj<F>) -> Result<BimodMap<F>> {
    let fx = fun.obj(x)?;
    n.map_right(&fx, &fun.f0op()?)?.compose(&fun.f2op(x, &m.unit())?)
}

/// the monad-morphism equations for `φ`
pub fn check_monad_morphism<F: Field>(fun: &dyn SkewMonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    par_report(&p.objects, |x| {
        let mut rep = Report::new();
        let subject = tuple_label(&[x]);
        let phi = |y: &Obj<F>| monad_morphism_from_functor(fun, m, n, y);
        rep.equal_with(MONAD_MORPHISM_MULT, &subject, || {
            let tx = t_obj(m, x)?;
            let lhs = comp(&[&fun.arrow(&mu(m, x)?)?, &phi(&tx)?, &t_map(n, &phi(x)?)?])?;
            let fx = fun.obj(x)?;
            let rhs = comp(&[&phi(x)?, &mu(n, &fx)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(MONAD_MORPHISM_UNIT, &subject, || {
            let fx = fun.obj(x)?;
            Ok((fun.arrow(&m.eta(x)?)?.mat, comp(&[&phi(x)?, &n.eta(&fx)?])?))
        });
        rep
    })
    .sorted()
}

/// the comonad-morphism equations for `ψ`
pub fn check_comonad_morphism<F: Field>(fun: &dyn SkewOpmonFunctor<F>, m: &dyn SkewMonoidal<F>, n: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    par_report(&p.objects, |x| {
        let mut rep = Report::new();
        let subject = tuple_label(&[x]);
        let psi = |y: &Obj<F>| comonad_morphism_from_functor(fun, m, n, y);
        rep.equal_with(COMONAD_MORPHISM_COMULT, &subject, || {
            let qx = q_obj(m, x)?;
            let fx = fun.obj(x)?;
            let lhs = comp(&[&q_map(n, &psi(x)?)?, &psi(&qx)?, &fun.arrow(&delta(m, x)?)?])?;
            let rhs = comp(&[&delta(n, &fx)?, &psi(x)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(COMONAD_MORPHISM_COUNIT, &subject, || {
            let fx = fun.obj(x)?;
            Ok((comp(&[&n.eps(&fx)?, &psi(x)?])?, fun.arrow(&m.eps(x)?)?.mat))
        });
        rep
    })
    .sorted()
}
