//! tetrahedral homomorphisms `t_{L,M,N}: L⊗(M⊛N) → (L⊗M)⊛N`, the comparison
//! `w_{M,N}: M⊗TN → M⊛N` with its heptagon and tetragon, and the opmonoidal
//! structure `w` puts on the canonical monad `T = R⊛−`

use std::sync::Arc;

use crate::bialgebroid::InducedSkewMon;
use crate::ebimod::{forget, QuotientStructure};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{BimodMap, Obj};
use crate::skewcat::{comp, par_report, tuple_label, BimodTensor, FunctorData, ProbeSet, SkewMonoidal};

use super::{Ambient, Bimonad, Family2, Family3, Fusion, Monad, TensorBialgebra};

pub const TET_PSTAR: Axiom = Axiom::new("tet.p-star", "(asso⊛N)∘t_{K,L⊗M,N}∘(K⊗t_{L,M,N}) = t_{K⊗L,M,N}∘asso");
pub const TET_PSTARSTAR: Axiom = Axiom::new("tet.p-star-star", "(t⊛N)∘t_{K,L⊛M,N}∘(K⊗γ) = γ∘t_{K,L,M⊛N}");
pub const TET_UNIT: Axiom = Axiom::new("tet.unit", "t_{R,M,N}∘luni⁻¹ = luni⁻¹⊛N");
pub const TET_COUNIT: Axiom = Axiom::new("tet.counit", "ε_{M⊗N}∘t_{M,N,R} = M⊗ε_N");
pub const TET_NATURAL: Axiom = Axiom::new("tet.natural", "naturality of t");
pub const TET_ISO: Axiom = Axiom::new("tet.iso", "w = (runi⊛N)∘t_{M,R,N} is invertible");
pub const W_INVERTIBLE: Axiom = Axiom::new("w.invertible", "w_{M,N} is invertible");
pub const W_NATURAL: Axiom = Axiom::new("w.natural", "naturality of w");
pub const W_UNIT: Axiom = Axiom::new("w.unit", "w_{R,N}∘luni⁻¹_{TN} = TN");
pub const HEPTAGON: Axiom = Axiom::new("w.heptagon", "(w⊛N)∘w∘asso∘(L⊗w⁻¹)∘(L⊗γ_{R,M,N}) = γ∘w_{L,M⊛N}");
pub const TETRAGON: Axiom = Axiom::new("w.tetragon", "ε_M∘w_{M,R} = runi_M∘(M⊗ε_R)");
pub const ROUNDTRIP_W: Axiom = Axiom::new("tet.roundtrip-w", "w ↦ t ↦ w is the identity");
pub const ROUNDTRIP_T: Axiom = Axiom::new("tet.roundtrip-t", "t ↦ w ↦ t is the identity");
pub const T0_COUNIT: Axiom = Axiom::new("tw.t0", "T⁰ = ε_R");

/// `t_{L,M,N} = w_{L⊗M,N}∘asso_{L,M,TN}∘(L⊗w⁻¹_{M,N})`
pub fn tet_from_w<F: Field>(amb: &Ambient<F>, w: Family2<F>) -> Family3<F> {
    let amb = amb.clone();
    Arc::new(move |l, m, n| {
        let t = &amb.tensor;
        let lm = t.product(l, m)?;
        BimodMap::chain(&[&w(&lm, n)?, &amb.asso(l, m, &amb.t(n)?)?, &t.map_right(l, &w(m, n)?.inverse()?)?])
    })
}

/// `w_{M,N} = (runi_M⊛N)∘t_{M,R,N}`
pub fn w_from_tet<F: Field>(amb: &Ambient<F>, t: Family3<F>) -> Family2<F> {
    let amb = amb.clone();
    Arc::new(move |m, n| {
        let r = amb.unit();
        amb.skew.map_left(&amb.runi(m)?, n)?.compose(&t(m, &r, n)?)
    })
}

/// how far a tetrahedral candidate got
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TetStatus {
    /// all axioms hold and `w` is invertible on every probe pair
    Isomorphism,
    /// all axioms hold but some `w_{M,N}` is not invertible
    HomomorphismOnly,
    Failed,
}

/// P*, P**, tet-unit, tet-counit and naturality, then invertibility of the induced `w`
pub fn check_tetrahedral<F: Field>(amb: &Ambient<F>, t: &Family3<F>, p: &ProbeSet<F>) -> (Report, TetStatus) {
    let (s, o) = (&amb.skew, &amb.tensor);
    let r = amb.unit();
    let mut rep = par_report(&p.quadruples(), |[k, l, m, n]| {
        let mut rep = Report::new();
        let subject = tuple_label(&[k, l, m, n]);
        rep.equal_with(TET_PSTAR, &subject, || {
            let lm = o.product(l, m)?;
            let kl = o.product(k, l)?;
            let mn = s.product(m, n)?;
            let lhs = comp(&[&s.map_left(&o.gamma(k, l, m)?, n)?, &t(k, &lm, n)?, &o.map_right(k, &t(l, m, n)?)?])?;
            let rhs = comp(&[&t(&kl, m, n)?, &o.gamma(k, l, &mn)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(TET_PSTARSTAR, &subject, || {
            let lm = s.product(l, m)?;
            let kl = o.product(k, l)?;
            let mn = s.product(m, n)?;
            let lhs = comp(&[&s.map_left(&t(k, l, m)?, n)?, &t(k, &lm, n)?, &o.map_right(k, &s.gamma(l, m, n)?)?])?;
            let rhs = comp(&[&s.gamma(&kl, m, n)?, &t(k, l, &mn)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    rep.extend(par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m, n]);
        rep.equal_with(TET_UNIT, &subject, || {
            let mn = s.product(m, n)?;
            Ok((comp(&[&t(&r, m, n)?, &o.eta(&mn)?])?, s.map_left(&o.eta(m)?, n)?.mat))
        });
        rep.equal_with(TET_COUNIT, &subject, || {
            let mn = o.product(m, n)?;
            Ok((comp(&[&s.eps(&mn)?, &t(m, n, &r)?])?, o.map_right(m, &s.eps(n)?)?.mat))
        });
        for f in &p.maps {
            let arrow = format!("[{}→{}]", f.source.label(), f.target.label());
            rep.equal_with(TET_NATURAL, &format!("({arrow},{},{})", m.label(), n.label()), || {
                let lhs = comp(&[&t(&f.target, m, n)?, &o.map_left(f, &s.product(m, n)?)?])?;
                let rhs = comp(&[&s.map_left(&o.map_left(f, m)?, n)?, &t(&f.source, m, n)?])?;
                Ok((lhs, rhs))
            });
            rep.equal_with(TET_NATURAL, &format!("({},{arrow},{})", m.label(), n.label()), || {
                let lhs = comp(&[&t(m, &f.target, n)?, &o.map_right(m, &s.map_left(f, n)?)?])?;
                let rhs = comp(&[&s.map_left(&o.map_right(m, f)?, n)?, &t(m, &f.source, n)?])?;
                Ok((lhs, rhs))
            });
            rep.equal_with(TET_NATURAL, &format!("({},{},{arrow})", m.label(), n.label()), || {
                let lhs = comp(&[&t(m, n, &f.target)?, &o.map_right(m, &s.map_right(n, f)?)?])?;
                let rhs = comp(&[&s.map_right(&o.product(m, n)?, f)?, &t(m, n, &f.source)?])?;
                Ok((lhs, rhs))
            });
        }
        rep
    }));
    if !rep.all_passed() {
        return (rep.sorted(), TetStatus::Failed);
    }
    let w = w_from_tet(amb, t.clone());
    let mut iso = true;
    for (m, n) in p.pairs() {
        let subject = tuple_label(&[&m, &n]);
        match w(&m, &n) {
            Ok(x) => {
                let ok = x.is_iso();
                iso &= ok;
                let detail = format!("rank {} of {:?}", x.mat.rank(), x.mat.shape());
                if ok {
                    rep.pass_with(TET_ISO, &subject, detail);
                } else {
                    rep.not_verified(TET_ISO, &subject, format!("homomorphism only: {detail}"));
                }
            }
            Err(e) => {
                rep.error(TET_ISO, &subject, e.to_string());
                return (rep.sorted(), TetStatus::Failed);
            }
        }
    }
    let status = if iso { TetStatus::Isomorphism } else { TetStatus::HomomorphismOnly };
    (rep.sorted(), status)
}

/// invertibility, naturality, the unit normalization, heptagon and tetragon for `w`
pub fn check_heptagon_tetragon<F: Field>(amb: &Ambient<F>, w: &Family2<F>, p: &ProbeSet<F>) -> Report {
    let (s, o) = (&amb.skew, &amb.tensor);
    let r = amb.unit();
    let mut rep = par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m, n]);
        match w(m, n) {
            Ok(x) => rep.assert(W_INVERTIBLE, &subject, x.is_iso(), format!("rank {} of {:?}", x.mat.rank(), x.mat.shape())),
            Err(e) => rep.error(W_INVERTIBLE, &subject, e.to_string()),
        }
        rep
    });
    rep.extend(par_report(&p.objects, |y| {
        let mut rep = Report::new();
        let (m, n) = (y, y);
        for f in &p.maps {
            let arrow = format!("[{}→{}]", f.source.label(), f.target.label());
            rep.equal_with(W_NATURAL, &format!("({arrow},{})", n.label()), || {
                let tn = amb.t(n)?;
                let lhs = comp(&[&w(&f.target, n)?, &o.map_left(f, &tn)?])?;
                let rhs = comp(&[&s.map_left(f, n)?, &w(&f.source, n)?])?;
                Ok((lhs, rhs))
            });
            rep.equal_with(W_NATURAL, &format!("({},{arrow})", m.label()), || {
                let lhs = comp(&[&w(m, &f.target)?, &o.map_right(m, &amb.t_map(f)?)?])?;
                let rhs = comp(&[&s.map_right(m, f)?, &w(m, &f.source)?])?;
                Ok((lhs, rhs))
            });
        }
        rep
    }));
    rep.extend(par_report(&p.triples(), |[l, m, n]| {
        let mut rep = Report::new();
        rep.equal_with(HEPTAGON, &tuple_label(&[l, m, n]), || {
            let tm = amb.t(m)?;
            let ltm = o.product(l, &tm)?;
            let mn = s.product(m, n)?;
            let lhs = comp(&[
                &s.map_left(&w(l, m)?, n)?,
                &w(&ltm, n)?,
                &amb.asso(l, &tm, &amb.t(n)?)?,
                &o.map_right(l, &w(&tm, n)?.inverse()?)?,
                &o.map_right(l, &s.gamma(&r, m, n)?)?,
            ])?;
            let rhs = comp(&[&s.gamma(l, m, n)?, &w(l, &mn)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.extend(par_report(&p.objects, |n| {
        let mut rep = Report::new();
        let subject = tuple_label(&[n]);
        rep.equal_with(W_UNIT, &subject, || {
            let tn = amb.t(n)?;
            Ok((comp(&[&w(&r, n)?, &amb.luni_inv(&tn)?])?, tn.identity().mat))
        });
        rep.equal_with(TETRAGON, &subject, || {
            let lhs = comp(&[&s.eps(n)?, &w(n, &r)?])?;
            let rhs = comp(&[&amb.runi(n)?, &o.map_right(n, &s.eps(&r)?)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.sorted()
}

/// `w ↦ t ↦ w` on pairs
pub fn check_roundtrip_from_w<F: Field>(amb: &Ambient<F>, w: &Family2<F>, p: &ProbeSet<F>) -> Report {
    let back = w_from_tet(amb, tet_from_w(amb, w.clone()));
    par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        rep.equal_with(ROUNDTRIP_W, &tuple_label(&[m, n]), || Ok((back(m, n)?.mat, w(m, n)?.mat)));
        rep
    })
    .sorted()
}

/// `t ↦ w ↦ t` on triples
pub fn check_roundtrip_from_tet<F: Field>(amb: &Ambient<F>, t: &Family3<F>, p: &ProbeSet<F>) -> Report {
    let back = tet_from_w(amb, w_from_tet(amb, t.clone()));
    par_report(&p.triples(), |[l, m, n]| {
        let mut rep = Report::new();
        rep.equal_with(ROUNDTRIP_T, &tuple_label(&[l, m, n]), || Ok((back(l, m, n)?.mat, t(l, m, n)?.mat)));
        rep
    })
    .sorted()
}

/// `γ` of a right-monoidal structure read as a tetrahedral candidate from the
/// structure to itself; its `w` is `(ε_M⊛N)∘γ_{M,R,N}`
pub fn gamma_as_tet<F: Field>(s: Arc<dyn SkewMonoidal<F>>) -> Family3<F> {
    Arc::new(move |l, m, n| s.gamma(l, m, n))
}

/// `w_{M,N} = (runi_M⊗N)∘asso_{M,R,N}: M⊗(R⊗N) → M⊗N` for `⊛ = ⊗`
pub fn trivial_w<F: Field>(amb: &Ambient<F>) -> Family2<F> {
    let amb = amb.clone();
    Arc::new(move |m, n| {
        let r = amb.unit();
        amb.tensor.map_left(&amb.runi(m)?, n)?.compose(&amb.asso(m, &r, n)?)
    })
}

/// `m⊗[r, n, h] ↦ [m·r, n, h]` on `M ⊗_k (R⊛N)`, before balancing over `R`
fn free_w<F: Field>(ind: &InducedSkewMon<F>, m: &Obj<F>, n: &Obj<F>) -> Result<Mat<F>> {
    let f = ind.bialgebroid().field();
    let tn = ind.data(&ind.unit(), n)?;
    let mn = ind.data(m, n)?;
    let dt = tn.dim();
    let acts: Vec<_> = m.right().iter().map(|a| a.sparse_cols()).collect();
    let mut mat = Mat::zeros(f, mn.dim(), m.dim() * dt);
    let mut col = vec![f.zero(); mn.dim()];
    for i in 0..m.dim() {
        for (q, &(r, y, h)) in tn.lifts.iter().enumerate() {
            col.iter_mut().for_each(|x| *x = f.zero());
            for (k, c) in &acts[r][i] {
                mn.project(f, *k, y, h, c, &mut col);
            }
            for (row, x) in col.iter().enumerate() {
                if !f.is_zero(x) {
                    mat.set(row, i * dt + q, x.clone());
                }
            }
        }
    }
    Ok(mat)
}

/// push a free map through the quotient presentation of `M⊗X`, checking it is balanced
fn balanced<F: Field>(tensor: &BimodTensor<F>, m: &Obj<F>, x: &Obj<F>, free: &Mat<F>, target: Obj<F>) -> Result<BimodMap<F>> {
    let p = tensor.tensor(m, x)?;
    let mat = free.mul(&p.1.section)?;
    if mat.mul(&p.1.projection)? != *free {
        return Err(Error::NotWellDefined(format!("comparison on {}⊗{} is not balanced", m.label(), x.label())));
    }
    BimodMap::new(mat, p.0.clone(), target)
}

/// the canonical `w_{M,N}: M⊗(R⊛N) → M⊛N`, `m⊗[r, n, h] ↦ [m·r, n, h]`, for the
/// structure induced by a bialgebroid over the ground field
pub fn canonical_w<F: Field>(ind: Arc<InducedSkewMon<F>>, tensor: Arc<BimodTensor<F>>) -> Family2<F> {
    Arc::new(move |m, n| {
        let free = free_w(&ind, m, n)?;
        balanced(&tensor, m, &ind.product(&ind.unit(), n)?, &free, ind.product(m, n)?)
    })
}

/// the canonical `w` for the quotient structure on `R`-bimodules: lift `T_qN`
/// through a section of `q_{R,N}`, apply the free formula and project with `q_{M,N}`
pub fn canonical_w_quotient<F: Field>(qs: Arc<QuotientStructure<F, Arc<InducedSkewMon<F>>>>, tensor: Arc<BimodTensor<F>>) -> Family2<F> {
    Arc::new(move |m, n| {
        let ind = &qs.inner;
        let f = ind.bialgebroid().field();
        let r = qs.unit();
        let qrn = qs.q(&r, n)?;
        let section = qrn.mat.solve(&Mat::identity(f, qrn.mat.rows()))?;
        let im = Mat::identity(f, m.dim());
        let top = qs.q(m, n)?.mat.mul(&free_w(ind, &forget(m), &forget(n))?)?;
        let free = top.mul(&im.kron(&section)?)?;
        if free.mul(&im.kron(&qrn.mat)?)? != top {
            return Err(Error::NotWellDefined(format!("comparison on ({},{}) is not constant on q", m.label(), n.label())));
        }
        balanced(&tensor, m, &qs.product(&r, n)?, &free, qs.product(m, n)?)
    })
}

/// `v_{M,N}: M⊗(N⊗H) → M⊛N`, `m⊗(n⊗h) ↦ [m, n, h]`, for a bialgebra over the ground field
pub fn bialgebra_twist<F: Field>(ind: Arc<InducedSkewMon<F>>, o: Arc<TensorBialgebra<F>>) -> Family2<F> {
    Arc::new(move |m, n| {
        let tensor = o.tensor();
        let f = ind.bialgebroid().field();
        let mn = ind.data(m, n)?;
        let nh = tensor.tensor(n, &o.h_object())?;
        let dh = ind.bialgebroid().dim_h();
        let mut free = Mat::zeros(f, mn.dim(), m.dim() * n.dim() * dh);
        let mut col = vec![f.zero(); mn.dim()];
        for i in 0..m.dim() {
            for j in 0..n.dim() {
                for a in 0..dh {
                    col.iter_mut().for_each(|x| *x = f.zero());
                    mn.project(f, i, j, a, &f.one(), &mut col);
                    for (row, x) in col.iter().enumerate() {
                        mat_set(&mut free, row, (i * n.dim() + j) * dh + a, x);
                    }
                }
            }
        }
        let lifted = free.mul(&Mat::identity(f, m.dim()).kron(&nh.1.section)?)?;
        balanced(&tensor, m, &nh.0, &lifted, mn.obj.clone())
    })
}

fn mat_set<F: Field>(mat: &mut Mat<F>, i: usize, j: usize, x: &F::Elem) {
    if !mat.field().is_zero(x) {
        mat.set(i, j, x.clone());
    }
}

/// `w_{M,N} = v_{M,N}∘(M⊗luni_{ON})∘(M⊗v⁻¹_{R,N})` from a bimonad `O` and a twist `v: ⊙ → ⊛`
pub fn w_from_twist<F: Field>(amb: &Ambient<F>, o: Arc<dyn Bimonad<F>>, v: Family2<F>) -> Family2<F> {
    let amb = amb.clone();
    Arc::new(move |m, n| {
        let r = amb.unit();
        let on = o.obj(n)?;
        BimodMap::chain(&[
            &v(m, n)?,
            &amb.tensor.map_right(m, &amb.luni(&on)?)?,
            &amb.tensor.map_right(m, &v(&r, n)?.inverse()?)?,
        ])
    })
}

/// the canonical monad `T = R⊛−` with `T^{M,N}`, `T⁰` and the fusion operator built from `w`
pub struct TFromW<F: Field> {
    pub amb: Ambient<F>,
    pub w: Family2<F>,
}

pub fn opmonoidal_t_from_w<F: Field>(amb: &Ambient<F>, w: Family2<F>) -> Arc<TFromW<F>> {
    Arc::new(TFromW { amb: amb.clone(), w })
}

impl<F: Field> FunctorData<F> for TFromW<F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        self.amb.t(x)
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.amb.t_map(f)
    }
}

impl<F: Field> Monad<F> for TFromW<F> {
    fn omega(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.amb.mu(m)
    }
    fn iota(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.amb.skew.eta(m)
    }
}

impl<F: Field> Fusion<F> for TFromW<F> {
    /// `w⁻¹_{TM,N}∘γ_{R,M,N}∘Tw_{M,N}`
    fn h(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let a = &self.amb;
        let tm = a.t(m)?;
        BimodMap::chain(&[&(self.w)(&tm, n)?.inverse()?, &a.skew.gamma(&a.unit(), m, n)?, &a.t_map(&(self.w)(m, n)?)?])
    }
    fn h0(&self) -> Result<BimodMap<F>> {
        self.amb.skew.eps(&self.amb.unit())
    }
}

impl<F: Field> Bimonad<F> for TFromW<F> {
    /// `h_{M,N}∘T(M⊗η_N)`
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let j = self.amb.tensor.map_right(m, &self.amb.skew.eta(n)?)?;
        self.h(m, n)?.compose(&self.amb.t_map(&j)?)
    }
    fn o0(&self) -> Result<BimodMap<F>> {
        self.h0()
    }
}

/// `T⁰ = ε_R`, asserted on the constructed bimonad
pub fn check_t0<F: Field>(t: &TFromW<F>) -> Report {
    let mut rep = Report::new();
    let r = t.amb.unit();
    rep.equal_with(T0_COUNIT, &tuple_label(&[&r]), || Ok((t.o0()?.mat, t.amb.skew.eps(&r)?.mat)));
    rep
}
