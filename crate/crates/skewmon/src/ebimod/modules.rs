//! modules over `T = R⊛−`, comodules over `Q = −⊛R`, entwined modules, and the
//! comparison with the structures on `E`-objects

use std::sync::Arc;

use crate::bialgebroid::{InducedSkewMon, RightBialgebroid};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{hom_over, restrict_homs, tensor_quotient, BimodMap, Obj};
use crate::skewcat::{chi, delta, mu, tuple_label, SkewMonoidal};

use super::{center, check_e_object, e_algebra, e_mats, forget, quotient, EObject, QuotientStructure};

pub const ACT1: Axiom = Axiom::new("act1", "∇∘(R⊛∇) = ∇∘μ");
pub const ACT2: Axiom = Axiom::new("act2", "∇∘η = 1");
pub const COACT1: Axiom = Axiom::new("coact1", "(Δ⊛R)∘Δ = δ∘Δ");
pub const COACT2: Axiom = Axiom::new("coact2", "ε∘Δ = 1");
pub const ENTWINED: Axiom = Axiom::new("entwined", "Δ∘∇ = Q∇∘χ∘TΔ");
pub const MODMAP: Axiom = Axiom::new("modmap", "t∘∇ = ∇'∘(R⊛t)");
pub const COMODMAP: Axiom = Axiom::new("comodmap", "Δ'∘t = (t⊛R)∘Δ");
pub const E_EQUIVARIANT: Axiom = Axiom::new("e-action.equivariant", "module maps commute with the induced E-actions");
pub const SPLIT_EQUALIZER: Axiom = Axiom::new("comodule.split-equalizer", "ε splits the equalizer of δ and Δ⊛R");
pub const PHI_Q_OBJECT: Axiom = Axiom::new("phi-q.object", "φ_q sends T_q-modules to T-modules over φ");
pub const PHI_Q_TRIANGLE: Axiom = Axiom::new("phi-q.triangle", "the E-action induced on φ_q X is the action of X");
pub const PHI_Q_HOM: Axiom = Axiom::new("phi-q.hom", "φ_q is bijective on hom sets");
pub const TQ_TENSOR: Axiom = Axiom::new("tq.tensor", "T_q N ≅ N ⊗_{R^e} H naturally");

fn m<F: Field>(x: &Mat<F>, src: &Obj<F>, dst: &Obj<F>) -> Result<BimodMap<F>> {
    BimodMap::new(x.clone(), src.clone(), dst.clone())
}

/// the two module laws for `∇: R⊛M → M`
pub fn check_tmodule<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, nabla: &Mat<F>) -> Report {
    let mut rep = Report::new();
    let subject = tuple_label(&[x]);
    let r = s.unit();
    rep.equal_with(ACT1, &subject, || {
        let tx = s.product(&r, x)?;
        let n = m(nabla, &tx, x)?;
        let lhs = nabla.mul(&s.map_right(&r, &n)?.mat)?;
        let rhs = nabla.mul(&mu(s, x)?.mat)?;
        Ok((lhs, rhs))
    });
    rep.equal_with(ACT2, &subject, || Ok((nabla.mul(&s.eta(x)?.mat)?, Mat::identity(x.field(), x.dim()))));
    rep
}

/// the two comodule laws for `Δ: L → L⊛R`
pub fn check_qcomodule<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, coaction: &Mat<F>) -> Report {
    let mut rep = Report::new();
    let subject = tuple_label(&[x]);
    let r = s.unit();
    rep.equal_with(COACT1, &subject, || {
        let qx = s.product(x, &r)?;
        let d = m(coaction, x, &qx)?;
        let lhs = s.map_left(&d, &r)?.mat.mul(coaction)?;
        let rhs = delta(s, x)?.mat.mul(coaction)?;
        Ok((lhs, rhs))
    });
    rep.equal_with(COACT2, &subject, || Ok((s.eps(x)?.mat.mul(coaction)?, Mat::identity(x.field(), x.dim()))));
    rep
}

/// both sets of laws and the compatibility square through `χ`
pub fn check_entwined<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, nabla: &Mat<F>, coaction: &Mat<F>) -> Report {
    let mut rep = check_tmodule(s, x, nabla);
    rep.extend(check_qcomodule(s, x, coaction));
    let r = s.unit();
    rep.equal_with(ENTWINED, &tuple_label(&[x]), || {
        let tx = s.product(&r, x)?;
        let qx = s.product(x, &r)?;
        let lhs = coaction.mul(nabla)?;
        let t_delta = s.map_right(&r, &m(coaction, x, &qx)?)?;
        let q_nabla = s.map_left(&m(nabla, &tx, x)?, &r)?;
        let rhs = q_nabla.mat.mul(&chi(s, x)?.mat)?.mul(&t_delta.mat)?;
        Ok((lhs, rhs))
    });
    rep
}

/// `t∘∇ = ∇'∘(R⊛t)`
pub fn check_tmodule_map<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: (&Obj<F>, &Mat<F>), y: (&Obj<F>, &Mat<F>), t: &Mat<F>) -> Report {
    let mut rep = Report::new();
    rep.equal_with(MODMAP, &tuple_label(&[x.0, y.0]), || {
        let rt = s.map_right(&s.unit(), &m(t, x.0, y.0)?)?;
        Ok((t.mul(x.1)?, y.1.mul(&rt.mat)?))
    });
    rep
}

/// `Δ'∘t = (t⊛R)∘Δ`
pub fn check_qcomodule_map<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: (&Obj<F>, &Mat<F>), y: (&Obj<F>, &Mat<F>), t: &Mat<F>) -> Report {
    let mut rep = Report::new();
    rep.equal_with(COMODMAP, &tuple_label(&[x.0, y.0]), || {
        let tr = s.map_left(&m(t, x.0, y.0)?, &s.unit())?;
        Ok((y.1.mul(t)?, tr.mat.mul(x.1)?))
    });
    rep
}

/// `(R⊛N, μ_N)`
pub fn free_tmodule<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, n: &Obj<F>) -> Result<(Obj<F>, Mat<F>)> {
    Ok((s.product(&s.unit(), n)?, mu(s, n)?.mat))
}

/// `(N⊛R, δ_N)`
pub fn free_qcomodule<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, n: &Obj<F>) -> Result<(Obj<F>, Mat<F>)> {
    Ok((s.product(n, &s.unit())?, delta(s, n)?.mat))
}

/// `λ_N(r) = ∇∘(r⊛N)∘η_N`
pub fn t_induced_action<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, nabla: &Mat<F>) -> Result<Vec<Mat<F>>> {
    let r = s.unit();
    let eta = s.eta(x)?.mat;
    e_mats(s)
        .into_iter()
        .map(|e| {
            let re = s.map_left(&m(&e, &r, &r)?, x)?;
            nabla.mul(&re.mat)?.mul(&eta)
        })
        .collect()
}

/// `λ_L(r) = ε_L∘(L⊛r)∘Δ_L`
pub fn q_induced_action<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, coaction: &Mat<F>) -> Result<Vec<Mat<F>>> {
    let r = s.unit();
    let eps = s.eps(x)?.mat;
    e_mats(s)
        .into_iter()
        .map(|e| {
            let le = s.map_right(x, &m(&e, &r, &r)?)?;
            eps.mul(&le.mat)?.mul(coaction)
        })
        .collect()
}

/// the induced action is a monoid morphism, and each supplied map `(t, target action)`
/// intertwines it
pub fn check_induced_action<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, action: &[Mat<F>], maps: &[(Mat<F>, Vec<Mat<F>>)]) -> Report {
    let subject = tuple_label(&[x]);
    let mut rep = check_e_object(&e_algebra(s), &EObject::left(x.clone(), action.to_vec()), &subject);
    let ok = maps
        .iter()
        .all(|(t, act)| action.iter().zip(act).all(|(a, b)| t.mul(a).ok() == b.mul(t).ok()));
    rep.assert(E_EQUIVARIANT, &subject, ok, "a supplied map is not equivariant");
    rep
}

/// `Δ` is split by `ε_L` and `ε_{L⊛R}` as an equalizer of `δ_L` and `Δ⊛R`
pub fn check_split_equalizer<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &Obj<F>, coaction: &Mat<F>) -> Report {
    let mut rep = Report::new();
    let r = s.unit();
    let subject = tuple_label(&[x]);
    let res = (|| -> Result<bool> {
        let qx = s.product(x, &r)?;
        let e = s.eps(x)?.mat;
        let eq = s.eps(&qx)?.mat;
        let d = delta(s, x)?.mat;
        let dr = s.map_left(&m(coaction, x, &qx)?, &r)?.mat;
        let id = Mat::identity(x.field(), x.dim());
        let idq = Mat::identity(x.field(), qx.dim());
        Ok(e.mul(coaction)? == id && eq.mul(&d)? == idq && eq.mul(&dr)? == coaction.mul(&e)? && d.mul(coaction)? == dr.mul(coaction)?)
    })();
    match res {
        Ok(ok) => rep.assert(SPLIT_EQUALIZER, &subject, ok, "the splitting identities fail"),
        Err(err) => rep.error(SPLIT_EQUALIZER, &subject, err.to_string()),
    }
    rep
}

/// `Δ^z` with `z_{L,R}∘Δ^z = Δ`; `l` carries the action induced by the coaction
pub fn factorize_coaction<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, l: &EObject<F>, coaction: &Mat<F>) -> Result<Mat<F>> {
    let (_, sub) = center(s, l, &EObject::unit(s))?;
    let x = sub.retract(coaction);
    if sub.inclusion.mul(&x)? != *coaction {
        let col = (0..coaction.cols()).find(|&j| sub.inclusion.mul(&x).map(|v| v.col(j) != coaction.col(j)).unwrap_or(true));
        return Err(Error::NotWellDefined(format!(
            "coaction of {} leaves the center at basis vector {}",
            l.obj.label(),
            col.unwrap_or(0)
        )));
    }
    Ok(x)
}

/// `∇^q` with `∇^q∘q_{R,M} = ∇`; `x` carries the action induced by `∇`
pub fn factorize_action<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: &EObject<F>, nabla: &Mat<F>) -> Result<Mat<F>> {
    let (_, q) = quotient(s, &EObject::unit(s), x)?;
    let y = nabla.mul(&q.section)?;
    if y.mul(&q.projection)? != *nabla {
        let diff = y.mul(&q.projection)?.sub(nabla)?;
        let col = (0..diff.cols()).find(|&j| diff.col(j).iter().any(|e| !x.obj.field().is_zero(e)));
        return Err(Error::NotWellDefined(format!(
            "action on {} is not constant on the relations, basis vector {}",
            x.obj.label(),
            col.unwrap_or(0)
        )));
    }
    Ok(y)
}

/// a `T_q`-module: an `E`-object `X` with `∇^q: R⊛_q X → X`
#[derive(Clone)]
pub struct TqModule<F: Field> {
    pub obj: Obj<F>,
    pub action: Mat<F>,
}

/// the free `T_q`-module `(T_q N, μ^q_N)`
pub fn free_tq_module<F: Field, S: SkewMonoidal<F>>(qs: &QuotientStructure<F, S>, n: &Obj<F>) -> Result<TqModule<F>> {
    let (obj, action) = free_tmodule(qs, n)?;
    Ok(TqModule { obj, action })
}

/// `φ_q(X, ∇^q) = (φX, ∇^q∘κ_X)`
pub fn phi_q<F: Field, S: SkewMonoidal<F>>(qs: &QuotientStructure<F, S>, x: &TqModule<F>) -> Result<(Obj<F>, Mat<F>)> {
    Ok((forget(&x.obj), x.action.mul(&qs.kappa(&x.obj)?.mat)?))
}

fn tq_homs<F: Field, S: SkewMonoidal<F>>(qs: &QuotientStructure<F, S>, x: &TqModule<F>, y: &TqModule<F>) -> Result<Vec<Mat<F>>> {
    let basis = hom_over(&x.obj, &y.obj)?;
    let r = qs.unit();
    restrict_homs(x.obj.field(), &basis, |t| {
        let rt = qs.map_right(&r, &m(t, &x.obj, &y.obj)?)?;
        t.mul(&x.action)?.sub(&y.action.mul(&rt.mat)?)
    })
}

fn t_homs<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, x: (&Obj<F>, &Mat<F>), y: (&Obj<F>, &Mat<F>)) -> Result<Vec<Mat<F>>> {
    let basis = hom_over(x.0, y.0)?;
    let r = s.unit();
    restrict_homs(x.0.field(), &basis, |t| {
        let rt = s.map_right(&r, &m(t, x.0, y.0)?)?;
        t.mul(x.1)?.sub(&y.1.mul(&rt.mat)?)
    })
}

/// `φ_q` on sample `T_q`-modules: images are `T`-modules, the induced `E`-action
/// recovers the original one, and hom sets correspond
pub fn check_phi_q<F: Field, S: SkewMonoidal<F>>(qs: &QuotientStructure<F, S>, samples: &[TqModule<F>]) -> Report {
    let mut rep = Report::new();
    let s = &qs.inner;
    let mut images = Vec::new();
    for x in samples {
        let subject = tuple_label(&[&x.obj]);
        match phi_q(qs, x) {
            Ok((fx, nabla)) => {
                let laws = check_tmodule(s, &fx, &nabla);
                rep.assert(PHI_Q_OBJECT, &subject, laws.all_passed(), format!("{:?}", laws.failed_ids()));
                match t_induced_action(s, &fx, &nabla) {
                    Ok(act) => rep.assert(PHI_Q_TRIANGLE, &subject, act == x.obj.left(), "induced action differs"),
                    Err(e) => rep.error(PHI_Q_TRIANGLE, &subject, e.to_string()),
                }
                images.push(Some((fx, nabla)));
            }
            Err(e) => {
                rep.error(PHI_Q_OBJECT, &subject, e.to_string());
                images.push(None);
            }
        }
    }
    for (i, x) in samples.iter().enumerate() {
        for (j, y) in samples.iter().enumerate() {
            let subject = tuple_label(&[&x.obj, &y.obj]);
            let (Some(fx), Some(fy)) = (&images[i], &images[j]) else {
                continue;
            };
            match (tq_homs(qs, x, y), t_homs(s, (&fx.0, &fx.1), (&fy.0, &fy.1))) {
                (Ok(a), Ok(b)) => {
                    // φ is faithful, so the map on homs is the inclusion; compare dimensions
                    rep.assert(PHI_Q_HOM, &subject, a.len() == b.len(), format!("dimensions {} and {}", a.len(), b.len()))
                }
                (Err(e), _) | (_, Err(e)) => rep.error(PHI_Q_HOM, &subject, e.to_string()),
            }
        }
    }
    rep
}

/// the comparison `N ⊗_{R^e} H → T_q N`, `n⊗h ↦ q_{R,N}[1, n, h]`, where `N` is a
/// bimodule, `R^e` acts on `N` by `n·(r'⊗r) = r'nr` and on `H` through `t(r')s(r)`
pub fn tq_as_tensor<F: Field>(qs: &QuotientStructure<F, Arc<InducedSkewMon<F>>>, n: &Obj<F>) -> Result<Mat<F>> {
    let ind = &qs.inner;
    let b: &RightBialgebroid<F> = ind.bialgebroid();
    let base = b.base();
    let h = b.total();
    let (dr, dh, dn) = (base.dim(), b.dim_h(), n.dim());
    let re = base.enveloping();
    let mut on_n = Vec::with_capacity(dr * dr);
    let mut on_h = Vec::with_capacity(dr * dr);
    for ip in 0..dr {
        for i in 0..dr {
            on_n.push(n.left()[ip].mul(&n.right()[i])?);
            on_h.push(h.left_mul_by(&b.target().col(ip)).mul(&h.left_mul_by(&b.source().col(i)))?);
        }
    }
    let amalg = tensor_quotient(&re, &on_n, &on_h, dn, dh)?;
    let phi = free_to_tq(qs, n)?;
    let g = phi.mul(&amalg.section)?;
    if g.mul(&amalg.projection)? != phi {
        return Err(Error::NotWellDefined(format!("comparison for {} is not balanced over R^e", n.label())));
    }
    Ok(g)
}

/// invertibility and naturality of the comparison on sample bimodules and maps
pub fn check_tq_as_tensor<F: Field>(qs: &QuotientStructure<F, Arc<InducedSkewMon<F>>>, objects: &[Obj<F>], maps: &[BimodMap<F>]) -> Report {
    let mut rep = Report::new();
    for n in objects {
        let subject = tuple_label(&[n]);
        match tq_as_tensor(qs, n) {
            Ok(g) => rep.assert(TQ_TENSOR, &subject, g.is_invertible(), format!("rank {} of {:?}", g.rank(), g.shape())),
            Err(e) => rep.error(TQ_TENSOR, &subject, e.to_string()),
        }
    }
    for t in maps {
        let subject = format!("[{}→{}]", t.source.label(), t.target.label());
        rep.equal_with(TQ_TENSOR, &subject, || {
            let b = qs.inner.bialgebroid();
            let tq = qs.map_right(&qs.unit(), t)?.mat;
            // naturality on N ⊗_k H, which surjects onto the amalgamated product
            let ih = Mat::identity(b.field(), b.dim_h());
            let th = t.mat.kron(&ih)?;
            let src_free = free_to_tq(qs, &t.source)?;
            let dst_free = free_to_tq(qs, &t.target)?;
            Ok((tq.mul(&src_free)?, dst_free.mul(&th)?))
        });
    }
    rep
}

/// the comparison on `N ⊗_k H` before amalgamation
fn free_to_tq<F: Field>(qs: &QuotientStructure<F, Arc<InducedSkewMon<F>>>, n: &Obj<F>) -> Result<Mat<F>> {
    let ind = &qs.inner;
    let b = ind.bialgebroid();
    let f = b.field();
    let (dh, dn) = (b.dim_h(), n.dim());
    let data = ind.data(&ind.unit(), &forget(n))?;
    let mut free = Mat::zeros(f, data.dim(), dn * dh);
    for x in 0..dn {
        for y in 0..dh {
            let mut col = vec![f.zero(); data.dim()];
            for (i, ui) in b.base().unit().iter().enumerate() {
                if !f.is_zero(ui) {
                    data.project(f, i, x, y, ui, &mut col);
                }
            }
            for (k, c) in col.into_iter().enumerate() {
                free.set(k, x * dh + y, c);
            }
        }
    }
    qs.kappa(n)?.mat.mul(&free)
}
