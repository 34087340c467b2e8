//! the opmonoidality and fusion-operator laws, the passage between them, and the
//! right-monoidal structure `M⊙N = M⊗ON` a bimonad induces

use std::sync::Arc;

use crate::bialgebroid::RightBialgebroid;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{BimodMap, Bimodule, Obj};
use crate::skewcat::{comp, mu, par_report, tuple_label, BimodTensor, ProbeSet, SkewMonoidal};

use super::{forward_monad, Bimonad, Fusion, Monad};

pub const MONAD_ASSOC: Axiom = Axiom::new("bimonad.monad-assoc", "ω∘Oω = ω∘ωO");
pub const MONAD_UNIT: Axiom = Axiom::new("bimonad.monad-unit", "ω∘ιO = O = ω∘Oι");
pub const MONAD_NATURAL: Axiom = Axiom::new("bimonad.natural", "naturality of ω, ι and O^{M,N}");
pub const OPMON1: Axiom = Axiom::new("opmon1.coassoc", "opmon1");
pub const OPMON2: Axiom = Axiom::new("opmon2.left-counit", "opmon2");
pub const OPMON3: Axiom = Axiom::new("opmon3.right-counit", "opmon3");
pub const OPMON4: Axiom = Axiom::new("opmon4.mult", "opmon4");
pub const OPMON5: Axiom = Axiom::new("opmon5.mult-counit", "opmon5");
pub const OPMON6: Axiom = Axiom::new("opmon6.unit", "opmon6");
pub const OPMON7: Axiom = Axiom::new("opmon7.unit-counit", "opmon7");
pub const H0: Axiom = Axiom::new("fusion.h0", "H0");
pub const H1: Axiom = Axiom::new("fusion.h1", "H1");
pub const H2: Axiom = Axiom::new("fusion.h2", "H2");
pub const H3: Axiom = Axiom::new("fusion.h3", "H3");
pub const H4: Axiom = Axiom::new("fusion.h4", "H4");
pub const H5: Axiom = Axiom::new("fusion.h5", "H5");
pub const H6: Axiom = Axiom::new("fusion.h6", "H6");
pub const ROUNDTRIP_O: Axiom = Axiom::new("fusion.roundtrip-o", "O ↦ h ↦ O is the identity");
pub const ROUNDTRIP_H: Axiom = Axiom::new("fusion.roundtrip-h", "h ↦ O ↦ h is the identity");
pub const MONMOR1: Axiom = Axiom::new("monmor1.mult", "monmor1");
pub const MONMOR2: Axiom = Axiom::new("monmor2.unit", "monmor2");

/// associativity, unit laws and naturality of `⟨O, ω, ι⟩`
pub fn check_monad_laws<F: Field>(o: &dyn Monad<F>, p: &ProbeSet<F>) -> Report {
    let mut rep = par_report(&p.objects, |m| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m]);
        rep.equal_with(MONAD_ASSOC, &subject, || {
            let om = o.obj(m)?;
            let lhs = comp(&[&o.omega(m)?, &o.arrow(&o.omega(m)?)?])?;
            let rhs = comp(&[&o.omega(m)?, &o.omega(&om)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(MONAD_UNIT, &format!("{subject} left"), || {
            let om = o.obj(m)?;
            Ok((comp(&[&o.omega(m)?, &o.iota(&om)?])?, om.identity().mat))
        });
        rep.equal_with(MONAD_UNIT, &format!("{subject} right"), || {
            let om = o.obj(m)?;
            Ok((comp(&[&o.omega(m)?, &o.arrow(&o.iota(m)?)?])?, om.identity().mat))
        });
        rep
    });
    rep.extend(par_report(&p.maps, |f| {
        let mut rep = Report::new();
        let subject = format!("[{}→{}]", f.source.label(), f.target.label());
        rep.equal_with(MONAD_NATURAL, &format!("ω {subject}"), || {
            let off = o.arrow(&o.arrow(f)?)?;
            Ok((comp(&[&o.arrow(f)?, &o.omega(&f.source)?])?, comp(&[&o.omega(&f.target)?, &off])?))
        });
        rep.equal_with(MONAD_NATURAL, &format!("ι {subject}"), || {
            Ok((comp(&[&o.arrow(f)?, &o.iota(&f.source)?])?, comp(&[&o.iota(&f.target)?, f])?))
        });
        rep
    }));
    rep.sorted()
}

/// the monad laws and opmon1–opmon7 on probe tuples
pub fn check_bimonad<F: Field>(o: &dyn Bimonad<F>, t: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    let r = t.unit();
    let mut rep = check_monad_laws(o, p);
    rep.extend(par_report(&p.triples(), |[l, m, n]| {
        let mut rep = Report::new();
        rep.equal_with(OPMON1, &tuple_label(&[l, m, n]), || {
            let (ol, om, on) = (o.obj(l)?, o.obj(m)?, o.obj(n)?);
            let mn = t.product(m, n)?;
            let lm = t.product(l, m)?;
            let lhs = comp(&[&t.gamma(&ol, &om, &on)?, &t.map_right(&ol, &o.o2(m, n)?)?, &o.o2(l, &mn)?])?;
            let rhs = comp(&[&t.map_left(&o.o2(l, m)?, &on)?, &o.o2(&lm, n)?, &o.arrow(&t.gamma(l, m, n)?)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.extend(par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m, n]);
        rep.equal_with(OPMON4, &subject, || {
            let (om, on) = (o.obj(m)?, o.obj(n)?);
            let mn = t.product(m, n)?;
            let lhs = comp(&[&t.product_map(&o.omega(m)?, &o.omega(n)?)?, &o.o2(&om, &on)?, &o.arrow(&o.o2(m, n)?)?])?;
            let rhs = comp(&[&o.o2(m, n)?, &o.omega(&mn)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(OPMON6, &subject, || {
            let mn = t.product(m, n)?;
            let lhs = comp(&[&o.o2(m, n)?, &o.iota(&mn)?])?;
            Ok((lhs, t.product_map(&o.iota(m)?, &o.iota(n)?)?.mat))
        });
        rep
    }));
    rep.extend(par_report(&p.objects, |m| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m]);
        rep.equal_with(OPMON2, &subject, || {
            let om = o.obj(m)?;
            let lhs = comp(&[&t.map_left(&o.o0()?, &om)?, &o.o2(&r, m)?, &o.arrow(&t.eta(m)?)?])?;
            Ok((lhs, t.eta(&om)?.mat))
        });
        rep.equal_with(OPMON3, &subject, || {
            let om = o.obj(m)?;
            let lhs = comp(&[&t.eps(&om)?, &t.map_right(&om, &o.o0()?)?, &o.o2(m, &r)?])?;
            Ok((lhs, o.arrow(&t.eps(m)?)?.mat))
        });
        rep
    }));
    rep.extend(par_report(&p.maps, |f| {
        let mut rep = Report::new();
        for y in &p.objects {
            let subject = format!("O² ([{}→{}],{})", f.source.label(), f.target.label(), y.label());
            rep.equal_with(MONAD_NATURAL, &subject, || {
                let oy = o.obj(y)?;
                let lhs = comp(&[&o.o2(&f.target, y)?, &o.arrow(&t.map_left(f, y)?)?])?;
                let rhs = comp(&[&t.map_left(&o.arrow(f)?, &oy)?, &o.o2(&f.source, y)?])?;
                Ok((lhs, rhs))
            });
            let subject = format!("O² ({},[{}→{}])", y.label(), f.source.label(), f.target.label());
            rep.equal_with(MONAD_NATURAL, &subject, || {
                let oy = o.obj(y)?;
                let lhs = comp(&[&o.o2(y, &f.target)?, &o.arrow(&t.map_right(y, f)?)?])?;
                let rhs = comp(&[&t.map_right(&oy, &o.arrow(f)?)?, &o.o2(y, &f.source)?])?;
                Ok((lhs, rhs))
            });
        }
        rep
    }));
    let subject = tuple_label(&[&r]);
    rep.equal_with(OPMON5, &subject, || {
        let lhs = comp(&[&o.o0()?, &o.omega(&r)?])?;
        let rhs = comp(&[&o.o0()?, &o.arrow(&o.o0()?)?])?;
        Ok((lhs, rhs))
    });
    rep.equal_with(OPMON7, &subject, || Ok((comp(&[&o.o0()?, &o.iota(&r)?])?, r.identity().mat)));
    rep.sorted()
}

/// H0–H6 on probe tuples, together with the monad laws
pub fn check_fusion<F: Field>(h: &dyn Fusion<F>, t: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    let r = t.unit();
    let mut rep = check_monad_laws(h, p);
    rep.extend(par_report(&p.triples(), |[l, m, n]| {
        let mut rep = Report::new();
        rep.equal_with(H1, &tuple_label(&[l, m, n]), || {
            let (ol, om, on) = (h.obj(l)?, h.obj(m)?, h.obj(n)?);
            let l_om = t.product(l, &om)?;
            let m_on = t.product(m, &on)?;
            let lhs = comp(&[
                &t.map_left(&h.h(l, m)?, &on)?,
                &h.h(&l_om, n)?,
                &h.arrow(&t.gamma(l, &om, &on)?)?,
                &h.arrow(&t.map_right(l, &h.h(m, n)?)?)?,
            ])?;
            let rhs = comp(&[&t.gamma(&ol, &om, &on)?, &t.map_right(&ol, &h.h(m, n)?)?, &h.h(l, &m_on)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.extend(par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m, n]);
        rep.equal_with(H0, &subject, || {
            let (om, on) = (h.obj(m)?, h.obj(n)?);
            let lhs = comp(&[&t.map_right(&om, &h.omega(n)?)?, &h.h(m, &on)?])?;
            let rhs = comp(&[&h.h(m, n)?, &h.arrow(&t.map_right(m, &h.omega(n)?)?)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(H2, &subject, || {
            let on = h.obj(n)?;
            let m_on = t.product(m, &on)?;
            Ok((comp(&[&h.h(m, n)?, &h.iota(&m_on)?])?, t.map_left(&h.iota(m)?, &on)?.mat))
        });
        rep.equal_with(H5, &subject, || {
            let (om, on) = (h.obj(m)?, h.obj(n)?);
            let m_on = t.product(m, &on)?;
            let lhs = comp(&[&t.map_left(&h.omega(m)?, &on)?, &h.h(&om, n)?, &h.arrow(&h.h(m, n)?)?])?;
            let rhs = comp(&[&h.h(m, n)?, &h.omega(&m_on)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.extend(par_report(&p.objects, |m| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m]);
        rep.equal_with(H3, &subject, || {
            let on = h.obj(m)?;
            let lhs = comp(&[&t.map_left(&h.h0()?, &on)?, &h.h(&r, m)?, &h.arrow(&t.eta(&on)?)?])?;
            Ok((lhs, comp(&[&t.eta(&on)?, &h.omega(m)?])?))
        });
        rep.equal_with(H4, &subject, || {
            let om = h.obj(m)?;
            let lhs = comp(&[&t.eps(&om)?, &t.map_right(&om, &h.h0()?)?, &h.h(m, &r)?])?;
            let rhs = comp(&[&h.arrow(&t.eps(m)?)?, &h.arrow(&t.map_right(m, &h.h0()?)?)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.equal_with(H6, &tuple_label(&[&r]), || Ok((comp(&[&h.h0()?, &h.iota(&r)?])?, r.identity().mat)));
    rep.sorted()
}

/// `h_{M,N} = (OM⊗ω_N)∘O^{M,ON}`
pub struct FusionOf<F: Field> {
    pub bimonad: Arc<dyn Bimonad<F>>,
    pub tensor: Arc<dyn SkewMonoidal<F>>,
}

forward_monad!(FusionOf, bimonad);

impl<F: Field> Fusion<F> for FusionOf<F> {
    fn h(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let (o, t) = (&self.bimonad, &self.tensor);
        let (om, on) = (o.obj(m)?, o.obj(n)?);
        t.map_right(&om, &o.omega(n)?)?.compose(&o.o2(m, &on)?)
    }
    fn h0(&self) -> Result<BimodMap<F>> {
        self.bimonad.o0()
    }
}

/// `O^{M,N} = h_{M,N}∘O(M⊗ι_N)`
pub struct BimonadOf<F: Field> {
    pub fusion: Arc<dyn Fusion<F>>,
    pub tensor: Arc<dyn SkewMonoidal<F>>,
}

forward_monad!(BimonadOf, fusion);

impl<F: Field> Bimonad<F> for BimonadOf<F> {
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let (h, t) = (&self.fusion, &self.tensor);
        h.h(m, n)?.compose(&h.arrow(&t.map_right(m, &h.iota(n)?)?)?)
    }
    fn o0(&self) -> Result<BimodMap<F>> {
        self.fusion.h0()
    }
}

pub fn fusion_from_bimonad<F: Field>(o: Arc<dyn Bimonad<F>>, t: Arc<dyn SkewMonoidal<F>>) -> Arc<FusionOf<F>> {
    Arc::new(FusionOf { bimonad: o, tensor: t })
}

pub fn bimonad_from_fusion<F: Field>(h: Arc<dyn Fusion<F>>, t: Arc<dyn SkewMonoidal<F>>) -> Arc<BimonadOf<F>> {
    Arc::new(BimonadOf { fusion: h, tensor: t })
}

/// `O ↦ h ↦ O` on probe pairs
pub fn check_roundtrip_from_bimonad<F: Field>(o: Arc<dyn Bimonad<F>>, t: Arc<dyn SkewMonoidal<F>>, p: &ProbeSet<F>) -> Report {
    let back = bimonad_from_fusion(fusion_from_bimonad(o.clone(), t.clone()), t.clone());
    let mut rep = par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        rep.equal_with(ROUNDTRIP_O, &tuple_label(&[m, n]), || Ok((back.o2(m, n)?.mat, o.o2(m, n)?.mat)));
        rep
    });
    rep.equal_with(ROUNDTRIP_O, "O⁰", || Ok((back.o0()?.mat, o.o0()?.mat)));
    rep.sorted()
}

/// `h ↦ O ↦ h` on probe pairs; a mismatch carries both matrices as witness
pub fn check_roundtrip_from_fusion<F: Field>(h: Arc<dyn Fusion<F>>, t: Arc<dyn SkewMonoidal<F>>, p: &ProbeSet<F>) -> Report {
    let back = fusion_from_bimonad(bimonad_from_fusion(h.clone(), t.clone()), t.clone());
    let mut rep = par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        rep.equal_with(ROUNDTRIP_H, &tuple_label(&[m, n]), || Ok((back.h(m, n)?.mat, h.h(m, n)?.mat)));
        rep
    });
    rep.equal_with(ROUNDTRIP_H, "O⁰", || Ok((back.h0()?.mat, h.h0()?.mat)));
    rep.sorted()
}

/// `M⊙N = M⊗ON` with `γ̇`, `η̇`, `ε̇` built from a bimonad
pub struct Odot<F: Field> {
    pub bimonad: Arc<dyn Bimonad<F>>,
    pub tensor: Arc<dyn SkewMonoidal<F>>,
}

pub fn induced_structure_from_bimonad<F: Field>(o: Arc<dyn Bimonad<F>>, t: Arc<dyn SkewMonoidal<F>>) -> Arc<Odot<F>> {
    Arc::new(Odot { bimonad: o, tensor: t })
}

impl<F: Field> SkewMonoidal<F> for Odot<F> {
    fn name(&self) -> String {
        format!("⊙ over {}", self.tensor.name())
    }
    fn unit(&self) -> Obj<F> {
        self.tensor.unit()
    }
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        self.tensor.product(a, &self.bimonad.obj(b)?)
    }
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.tensor.product_map(f, &self.bimonad.arrow(g)?)
    }
    /// `asso_{L,OM,ON}∘(L⊗(OM⊗ω_N))∘(L⊗O^{M,ON})`
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let (o, t) = (&self.bimonad, &self.tensor);
        let (om, on) = (o.obj(m)?, o.obj(n)?);
        let h = t.map_right(&om, &o.omega(n)?)?.compose(&o.o2(m, &on)?)?;
        t.gamma(l, &om, &on)?.compose(&t.map_right(l, &h)?)
    }
    /// `luni⁻¹_{OM}∘ι_M`
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let om = self.bimonad.obj(m)?;
        self.tensor.eta(&om)?.compose(&self.bimonad.iota(m)?)
    }
    /// `runi_M∘(M⊗O⁰)`
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.eps(m)?.compose(&self.tensor.map_right(m, &self.bimonad.o0()?)?)
    }
    fn e_basis(&self) -> Vec<Mat<F>> {
        self.tensor.e_basis()
    }
}

/// `luni⁻¹_{ON}: ON → ṪN` is a morphism from `O` to the canonical monad of `⊙`
pub fn check_unit_monad_morphism<F: Field>(odot: &Odot<F>, p: &ProbeSet<F>) -> Report {
    let (o, t) = (&odot.bimonad, &odot.tensor);
    par_report(&p.objects, |n| {
        let mut rep = Report::new();
        let subject = tuple_label(&[n]);
        rep.equal_with(MONMOR1, &subject, || {
            let on = o.obj(n)?;
            let r = t.unit();
            let tn = odot.product(&r, n)?;
            let otn = o.obj(&tn)?;
            let lhs = comp(&[&mu(odot, n)?, &t.eta(&otn)?, &o.arrow(&t.eta(&on)?)?])?;
            Ok((lhs, comp(&[&t.eta(&on)?, &o.omega(n)?])?))
        });
        rep.equal_with(MONMOR2, &subject, || {
            let on = o.obj(n)?;
            Ok((odot.eta(n)?.mat, comp(&[&t.eta(&on)?, &o.iota(n)?])?))
        });
        rep
    })
    .sorted()
}

/// `O = −⊗H` on vector spaces for a bialgebra `H` over the ground field, with
/// `O^{M,N}(m⊗n⊗h) = m⊗h₁⊗n⊗h₂` and `O⁰ = ε`
pub struct TensorBialgebra<F: Field> {
    b: Arc<RightBialgebroid<F>>,
    tensor: Arc<BimodTensor<F>>,
    h: Obj<F>,
}

impl<F: Field> TensorBialgebra<F> {
    pub fn new(b: Arc<RightBialgebroid<F>>) -> Result<Self> {
        if b.base().dim() != 1 {
            return Err(Error::Invalid(format!("{} is not a bialgebra over the ground field", b.name())));
        }
        let f = b.field();
        let h = Arc::new(Bimodule::right_module(b.base().clone(), vec![Mat::identity(f, b.dim_h())], "H")?);
        let tensor = Arc::new(BimodTensor::new(b.base().clone()));
        Ok(TensorBialgebra { b, tensor, h })
    }

    pub fn tensor(&self) -> Arc<BimodTensor<F>> {
        self.tensor.clone()
    }

    /// `H` as an object
    pub fn h_object(&self) -> Obj<F> {
        self.h.clone()
    }
}

impl<F: Field> crate::skewcat::FunctorData<F> for TensorBialgebra<F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        self.tensor.product(x, &self.h)
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.tensor.product_map(f, &self.h.identity())
    }
}

impl<F: Field> Monad<F> for TensorBialgebra<F> {
    fn omega(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let f = self.b.field();
        let mh = self.tensor.tensor(m, &self.h)?;
        let mhh = self.tensor.tensor(&mh.0, &self.h)?;
        let ih = Mat::identity(f, self.b.dim_h());
        let mat = mh
            .1
            .projection
            .mul(&Mat::identity(f, m.dim()).kron(self.b.total().structure())?)?
            .mul(&mh.1.section.kron(&ih)?)?
            .mul(&mhh.1.section)?;
        BimodMap::new(mat, mhh.0.clone(), mh.0.clone())
    }
    fn iota(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let f = self.b.field();
        let mh = self.tensor.tensor(m, &self.h)?;
        let one = Mat::column(f, self.b.total().unit().to_vec());
        let mat = mh.1.projection.mul(&Mat::identity(f, m.dim()).kron(&one)?)?;
        BimodMap::new(mat, m.clone(), mh.0.clone())
    }
}

impl<F: Field> Bimonad<F> for TensorBialgebra<F> {
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let f = self.b.field();
        let (dm, dn, dh) = (m.dim(), n.dim(), self.b.dim_h());
        let mn = self.tensor.tensor(m, n)?;
        let src = self.tensor.tensor(&mn.0, &self.h)?;
        let mh = self.tensor.tensor(m, &self.h)?;
        let nh = self.tensor.tensor(n, &self.h)?;
        let dst = self.tensor.tensor(&mh.0, &nh.0)?;
        // m⊗n⊗h₁⊗h₂ ↦ m⊗h₁⊗n⊗h₂
        let swap = Mat::from_fn(f, dm * dn * dh * dh, dm * dn * dh * dh, |row, col| {
            let (x, rest) = (col / (dn * dh * dh), col % (dn * dh * dh));
            let (y, a, b) = (rest / (dh * dh), (rest / dh) % dh, rest % dh);
            if row == ((x * dh + a) * dn + y) * dh + b {
                f.one()
            } else {
                f.zero()
            }
        });
        let mat = dst
            .1
            .projection
            .mul(&mh.1.projection.kron(&nh.1.projection)?)?
            .mul(&swap)?
            .mul(&Mat::identity(f, dm * dn).kron(self.b.delta_free())?)?
            .mul(&mn.1.section.kron(&Mat::identity(f, dh))?)?
            .mul(&src.1.section)?;
        BimodMap::new(mat, src.0.clone(), dst.0.clone())
    }
    fn o0(&self) -> Result<BimodMap<F>> {
        let r = self.tensor.unit();
        let rh = self.tensor.tensor(&r, &self.h)?;
        let mat = self.b.counit().mul(&rh.1.section)?;
        BimodMap::new(mat, rh.0.clone(), r)
    }
}

/// which part of a bimonad [`CorruptedBimonad`] perturbs
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimonadPart {
    Counit,
    Comult,
}

/// adds one to the first entry of `O⁰` or of every `O^{M,N}`
pub struct CorruptedBimonad<F: Field> {
    pub inner: Arc<dyn Bimonad<F>>,
    pub part: BimonadPart,
}

forward_monad!(CorruptedBimonad, inner);

impl<F: Field> Bimonad<F> for CorruptedBimonad<F> {
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let x = self.inner.o2(m, n)?;
        Ok(if self.part == BimonadPart::Comult { bump(x) } else { x })
    }
    fn o0(&self) -> Result<BimodMap<F>> {
        let x = self.inner.o0()?;
        Ok(if self.part == BimonadPart::Counit { bump(x) } else { x })
    }
}

fn bump<F: Field>(mut f: BimodMap<F>) -> BimodMap<F> {
    if f.mat.rows() > 0 && f.mat.cols() > 0 {
        let field = f.mat.field().clone();
        let x = field.add(f.mat.get(0, 0), &field.one());
        f.mat.set(0, 0, x);
    }
    f
}

/// how [`MutatedFusion`] perturbs `h`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionMutation {
    /// add one to the first entry of every `h_{M,N}`
    Bump,
    /// add a map vanishing on the image of `O(M⊗ι_N)`: the recovered `O` is
    /// unchanged, so `h ↦ O ↦ h` cannot return the mutated `h`
    OffImage,
}

pub struct MutatedFusion<F: Field> {
    pub inner: Arc<dyn Fusion<F>>,
    pub tensor: Arc<dyn SkewMonoidal<F>>,
    pub kind: FusionMutation,
}

forward_monad!(MutatedFusion, inner);

impl<F: Field> Fusion<F> for MutatedFusion<F> {
    fn h(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let h = self.inner.h(m, n)?;
        match self.kind {
            FusionMutation::Bump => Ok(bump(h)),
            FusionMutation::OffImage => {
                let j = self.inner.arrow(&self.tensor.map_right(m, &self.inner.iota(n)?)?)?;
                let coker = j.mat.cokernel_projection();
                if coker.dim() == 0 || h.mat.rows() == 0 {
                    return Ok(h);
                }
                let f = h.mat.field();
                let pick = Mat::from_fn(f, h.mat.rows(), coker.dim(), |i, k| if i == 0 && k == 0 { f.one() } else { f.zero() });
                let extra = pick.mul(&coker.projection)?;
                BimodMap::new(h.mat.add(&extra)?, h.source, h.target)
            }
        }
    }
    fn h0(&self) -> Result<BimodMap<F>> {
        self.inner.h0()
    }
}
