//! monoidal structure of `𝐐_n` on bimodules over the base of a bialgebroid
//!
//! `Q^n M` is a quotient of `M ⊗ H^{⊗n}` through `π_n: m⊗h₁⊗…⊗h_n ↦ [[m,1,h₁],…,1,h_n]`.
//! `(𝐐_n)_{M,N}` lifts `ζ(x)` and `ζ(y)` along `π_n`, multiplies the `H` factors slot by
//! slot, and projects back; independence of the lifts is verified, not assumed. the
//! hom form `𝐐_n M ≅ Hom_{R_{n+1}}(P_n, Q^n M)` is rebuilt from `P_n` as a cross-check.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bialgebroid::{InducedSkewMon, RightBialgebroid};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{intertwiners, tensor_over, Algebra, BimodMap, Bimodule, Obj};
use crate::skewcat::{check_skewmon_functor, comp, par_report, tuple_label, BimodTensor, FunctorData, ProbeSet, SkewMonFunctor, SkewMonoidal};

use super::LaxQ;

pub const QN_DELTA_SQUARE: Axiom = Axiom::new("qn-monoidal.delta", "δⁿ_i(M⊗N)∘(𝐐_n)_{M,N} = (𝐐_{n+1})_{M,N}∘(δⁿ_iM⊗δⁿ_iN)");
pub const QN_DELTA_UNIT: Axiom = Axiom::new("qn-monoidal.delta-unit", "δⁿ_i∘(𝐐_n)₀ = (𝐐_{n+1})₀");
pub const QN_EPS_SQUARE: Axiom = Axiom::new("qn-monoidal.eps", "εⁿ_i(M⊗N)∘(𝐐_n)_{M,N} = (𝐐_{n−1})_{M,N}∘(εⁿ_iM⊗εⁿ_iN)");
pub const QN_EPS_UNIT: Axiom = Axiom::new("qn-monoidal.eps-unit", "εⁿ_i∘(𝐐_n)₀ = (𝐐_{n−1})₀");
pub const QN_NU_SQUARE: Axiom = Axiom::new("qn-monoidal.nu", "ν^{m,n}(M⊗N)∘(𝐐_m𝐐_n)_{M,N} = (𝐐_{m+n})_{M,N}∘(ν^{m,n}M⊗ν^{m,n}N)");
pub const QN_NU_UNIT: Axiom = Axiom::new("qn-monoidal.nu-unit", "ν^{m,n}∘(𝐐_m𝐐_n)₀ = (𝐐_{m+n})₀");
pub const PN_CYCLIC: Axiom = Axiom::new("pn.cyclic", "P_n is generated by 1⊗…⊗1 over R_{n+1}");
pub const EV_HOM_FORM: Axiom = Axiom::new("pn.hom-form", "evaluation at the generator maps Hom_{R_{n+1}}(P_n, QⁿM) onto ζⁿ(𝐐_nM)");

struct Lift<F: Field> {
    /// `π_n: M⊗H^{⊗n} → QⁿφM`
    pi: Mat<F>,
    /// `π_n∘lift = ζⁿ`
    lift: Mat<F>,
    kernel: Mat<F>,
}

/// a left module generated by one vector
#[derive(Clone)]
pub struct Cyclic<F: Field> {
    pub module: Obj<F>,
    pub generator: Vec<F::Elem>,
}

/// `𝐐` over `⟨_R M_R, ⊗_R, R⟩` for a right bialgebroid with base `R`
pub struct MonoidalQ<F: Field> {
    pub lax: LaxQ<F, Arc<InducedSkewMon<F>>>,
    pub tensor: BimodTensor<F>,
    b: Arc<RightBialgebroid<F>>,
    lifts: Mutex<HashMap<(u64, usize), Arc<Lift<F>>>>,
    rings: Mutex<HashMap<usize, Arc<Algebra<F>>>>,
    pn: Mutex<HashMap<usize, Arc<Cyclic<F>>>>,
}

impl<F: Field> MonoidalQ<F> {
    pub fn new(b: Arc<RightBialgebroid<F>>, n_max: usize) -> Self {
        let s = Arc::new(InducedSkewMon::new(b.clone()));
        let lax = LaxQ::new(s, n_max);
        let tensor = BimodTensor::new(lax.e_algebra().clone());
        MonoidalQ {
            lax,
            tensor,
            b,
            lifts: Mutex::new(HashMap::new()),
            rings: Mutex::new(HashMap::new()),
            pn: Mutex::new(HashMap::new()),
        }
    }

    pub fn n_max(&self) -> usize {
        self.lax.n_max
    }

    pub fn bialgebroid(&self) -> &Arc<RightBialgebroid<F>> {
        &self.b
    }

    /// `R` as a bimodule over itself
    pub fn unit(&self) -> Obj<F> {
        self.tensor.unit()
    }

    fn field(&self) -> &F {
        self.b.field()
    }

    /// `π_n` for the `E`-object `m`
    pub fn pi(&self, m: &Obj<F>, n: usize) -> Result<Mat<F>> {
        Ok(self.lift(m, n)?.pi.clone())
    }

    fn lift(&self, m: &Obj<F>, n: usize) -> Result<Arc<Lift<F>>> {
        let key = (m.fingerprint(), n);
        if let Some(l) = self.lifts.lock().expect("cache lock").get(&key) {
            return Ok(l.clone());
        }
        let f = self.field();
        let pi = if n == 0 {
            Mat::identity(f, m.dim())
        } else {
            let prev = self.lift(m, n - 1)?;
            let x = self.lax.power(m, n - 1)?;
            self.pi_step(&x)?.mul(&prev.pi.kron(&Mat::identity(f, self.b.dim_h()))?)?
        };
        let zeta = self.lax.zeta(m, n)?.mat;
        let lift = pi.solve(&zeta)?;
        let kernel = pi.kernel_basis();
        let l = Arc::new(Lift { pi, lift, kernel });
        self.lifts.lock().expect("cache lock").insert(key, l.clone());
        Ok(l)
    }

    /// `X⊗H → X⊛R`, `x⊗h ↦ [x, 1, h]`
    fn pi_step(&self, x: &Obj<F>) -> Result<Mat<F>> {
        let f = self.field();
        let s = &self.lax.inner;
        let data = s.data(x, &s.unit())?;
        let dh = self.b.dim_h();
        let one = self.b.base().unit();
        let mut out = Mat::zeros(f, data.dim(), x.dim() * dh);
        for i in 0..x.dim() {
            for h in 0..dh {
                let mut col = vec![f.zero(); data.dim()];
                for (r, u) in one.iter().enumerate() {
                    if !f.is_zero(u) {
                        data.project(f, i, r, h, u, &mut col);
                    }
                }
                for (k, c) in col.into_iter().enumerate() {
                    out.set(k, i * dh + h, c);
                }
            }
        }
        Ok(out)
    }

    /// `(m⊗h⃗)⊗(m'⊗h⃗') ↦ (m⊗_R m')⊗(h₁h'₁)⊗…⊗(h_nh'_n)`
    fn mult(&self, m: &Obj<F>, k: &Obj<F>, n: usize) -> Result<Mat<F>> {
        let f = self.field();
        let h = self.b.total();
        let dh = h.dim();
        let slots = dh.pow(n as u32);
        let mk = self.tensor.tensor(m, k)?;
        let proj = &mk.1.projection;
        let dmk = proj.rows();
        // products in H^{⊗n}, slot by slot
        let mut prods = vec![vec![f.zero(); slots]; slots * slots];
        for a in 0..slots {
            for c in 0..slots {
                let mut v = vec![f.one()];
                for slot in (0..n).rev() {
                    let p = dh.pow(slot as u32);
                    let (ha, hc) = ((a / p) % dh, (c / p) % dh);
                    let col = h.structure().col(ha * dh + hc);
                    v = v.iter().flat_map(|x| col.iter().map(move |y| f.mul(x, y))).collect();
                }
                prods[a * slots + c] = v;
            }
        }
        let (da, dk) = (m.dim() * slots, k.dim() * slots);
        let mut out = Mat::zeros(f, dmk * slots, da * dk);
        for i in 0..m.dim() {
            for j in 0..k.dim() {
                let pcol = proj.col_entries(i * k.dim() + j);
                for a in 0..slots {
                    for c in 0..slots {
                        let col = (i * slots + a) * dk + j * slots + c;
                        for (t, pt) in &pcol {
                            for (w, hw) in prods[a * slots + c].iter().enumerate() {
                                if !f.is_zero(hw) {
                                    let row = t * slots + w;
                                    let v = f.add(out.get(row, col), &f.mul(pt, hw));
                                    out.set(row, col, v);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(𝐐_n)_{M,N}: 𝐐_nM ⊗_R 𝐐_nN → 𝐐_n(M⊗_R N)`
    pub fn qn2(&self, m: &Obj<F>, k: &Obj<F>, n: usize) -> Result<BimodMap<F>> {
        let mk = self.tensor.product(m, k)?;
        let (lm, lk, lmk) = (self.lift(m, n)?, self.lift(k, n)?, self.lift(&mk, n)?);
        let pm = lmk.pi.mul(&self.mult(m, k, n)?)?;
        let zero_on = |a: &Mat<F>, b: &Mat<F>| -> Result<bool> {
            if a.cols() == 0 || b.cols() == 0 {
                return Ok(true);
            }
            Ok(pm.mul(&a.kron(b)?)?.is_zero())
        };
        if !zero_on(&lm.kernel, &lk.lift)? || !zero_on(&lm.kernel, &lk.kernel)? || !zero_on(&lm.lift, &lk.kernel)? {
            return Err(Error::NotWellDefined(format!("(𝐐{n}) on {} depends on the chosen lifts", tuple_label(&[m, k]))));
        }
        let free = pm.mul(&lm.lift.kron(&lk.lift)?)?;
        let zmk = self.lax.zeta(&mk, n)?.mat;
        let x = zmk.solve(&free).map_err(|_| Error::NotWellDefined(format!("(𝐐{n}) on {} leaves the equalizer", tuple_label(&[m, k]))))?;
        let (qm, qk) = (self.lax.obj(m, n)?, self.lax.obj(k, n)?);
        let src = self.tensor.tensor(&qm, &qk)?;
        let mat = x.mul(&src.1.section)?;
        if mat.mul(&src.1.projection)? != x {
            return Err(Error::NotWellDefined(format!("(𝐐{n}) on {} is not balanced over R", tuple_label(&[m, k]))));
        }
        BimodMap::new(mat, src.0.clone(), self.lax.obj(&mk, n)?)
    }

    /// `(𝐐_n)₀: R → 𝐐_n R`, `r ↦ r·x₀` with `ζ(x₀) = π_n(1⊗1⊗…⊗1)`
    pub fn qn0(&self, n: usize) -> Result<BimodMap<F>> {
        let f = self.field();
        let r = self.unit();
        let mut one = Mat::column(f, self.b.base().unit().to_vec());
        for _ in 0..n {
            one = one.kron(&Mat::column(f, self.b.total().unit().to_vec()))?;
        }
        let target = self.lax.obj(&r, n)?;
        let z = self.lax.zeta(&r, n)?.mat;
        let x0 = z.solve(&self.lift(&r, n)?.pi.mul(&one)?)?;
        let cols: Vec<Vec<F::Elem>> = target.left().iter().map(|l| l.mul(&x0).map(|c| c.col(0))).collect::<Result<_>>()?;
        let map = BimodMap::new(Mat::from_columns(f, target.dim(), &cols)?, r, target)?;
        if !map.is_equivariant() {
            return Err(Error::NotWellDefined(format!("the unit of 𝐐{n} is not central")));
        }
        Ok(map)
    }

    /// `R_k = R ⊗ (R^op⊗R)^{⊗(k−1)}`
    pub fn ring(&self, k: usize) -> Result<Arc<Algebra<F>>> {
        if let Some(a) = self.rings.lock().expect("cache lock").get(&k) {
            return Ok(a.clone());
        }
        let base = self.b.base();
        let a = if k <= 1 {
            base.clone()
        } else {
            let prev = self.ring(k - 1)?;
            Arc::new(prev.tensor(&base.enveloping())?.renamed(format!("R{k}")))
        };
        self.rings.lock().expect("cache lock").insert(k, a.clone());
        Ok(a)
    }

    /// `(R^op⊗R)^{⊗k}`
    fn env_power(&self, k: usize) -> Result<Arc<Algebra<F>>> {
        let env = self.b.base().enveloping();
        let mut a = Algebra::ground(self.field());
        for _ in 0..k {
            a = a.tensor(&env)?;
        }
        Ok(Arc::new(a))
    }

    /// `P_1 = R⊗R` with `(r₁⊗r'⊗r₂)·(x⊗y)·r₃ = r₁xr'⊗r₂yr₃`, and
    /// `P_n = (P⊗(R^op⊗R)^{⊗(n−1)}) ⊗_{R_n} P_{n−1}`
    pub fn p(&self, n: usize) -> Result<Arc<Cyclic<F>>> {
        if let Some(p) = self.pn.lock().expect("cache lock").get(&n) {
            return Ok(p.clone());
        }
        let f = self.field();
        let base = self.b.base();
        let r = base.dim();
        let u = base.unit().to_vec();
        let p1 = {
            let mut left = Vec::with_capacity(r * r * r);
            for a in 0..r {
                for b in 0..r {
                    for c in 0..r {
                        left.push(base.lmul(a).mul(base.rmul(b))?.kron(base.lmul(c))?);
                    }
                }
            }
            let id = Mat::identity(f, r);
            let right = (0..r).map(|d| id.kron(base.rmul(d))).collect::<Result<Vec<_>>>()?;
            let module = Arc::new(Bimodule::new(r * r, self.ring(2)?, base.clone(), left, right, "P1")?);
            let generator = Mat::column(f, u.clone()).kron(&Mat::column(f, u.clone()))?.col(0);
            Cyclic { module, generator }
        };
        let out = if n <= 1 {
            p1
        } else {
            let prev = self.p(n - 1)?;
            let y = self.env_power(n - 1)?;
            let dy = y.dim();
            let pm = &p1.module;
            let mut left = Vec::with_capacity(pm.left().len() * dy);
            for a in pm.left() {
                for j in 0..dy {
                    left.push(a.kron(y.lmul(j))?);
                }
            }
            let mut right = Vec::with_capacity(r * dy);
            for a in pm.right() {
                for j in 0..dy {
                    right.push(a.kron(y.rmul(j))?);
                }
            }
            let ext = Bimodule::new(pm.dim() * dy, self.ring(n + 1)?, self.ring(n)?, left, right, format!("P⊗R^e{}", n - 1))?;
            let (module, q) = tensor_over(&ext, &prev.module)?;
            let g = Mat::column(f, p1.generator.clone())
                .kron(&Mat::column(f, y.unit().to_vec()))?
                .kron(&Mat::column(f, prev.generator.clone()))?;
            Cyclic {
                module: Arc::new(module.relabel(format!("P{n}"))),
                generator: q.projection.mul(&g)?.col(0),
            }
        };
        let out = Arc::new(out);
        self.pn.lock().expect("cache lock").insert(n, out.clone());
        Ok(out)
    }

    /// `R_{n+1}` acting on `QⁿφM`: `r₀⊗(r'₁⊗r₁)⊗… ↦ λ₁(r₀)ρ₁(r'₁)λ₂(r₁)⋯`
    pub fn ring_action(&self, m: &Obj<F>, n: usize) -> Result<Vec<Mat<F>>> {
        let p = self.lax.power_actions(m, n)?;
        let r = self.b.base().dim();
        let d = p.obj.dim();
        let mut acts = vec![Mat::identity(self.field(), d)];
        for i in 0..=n {
            let mut next = Vec::with_capacity(acts.len() * r * r);
            for a in &acts {
                if i == 0 {
                    for l in &p.lambdas[0] {
                        next.push(a.mul(l)?);
                    }
                } else {
                    for rho in &p.rhos[i - 1] {
                        for l in &p.lambdas[i] {
                            next.push(a.mul(rho)?.mul(l)?);
                        }
                    }
                }
            }
            acts = next;
        }
        Ok(acts)
    }
}

/// `𝐐_n` with its monoidal structure
pub struct QnFunctor<'a, F: Field> {
    pub mq: &'a MonoidalQ<F>,
    pub n: usize,
}

impl<F: Field> FunctorData<F> for QnFunctor<'_, F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        self.mq.lax.obj(x, self.n)
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.mq.lax.map(f, self.n)
    }
}

impl<F: Field> SkewMonFunctor<F> for QnFunctor<'_, F> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        self.mq.qn2(x, y, self.n)
    }
    fn f0(&self) -> Result<BimodMap<F>> {
        self.mq.qn0(self.n)
    }
}

/// `𝐐_m𝐐_n` with the composite monoidal structure
pub struct QmQn<'a, F: Field> {
    pub mq: &'a MonoidalQ<F>,
    pub m: usize,
    pub n: usize,
}

impl<F: Field> FunctorData<F> for QmQn<'_, F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        self.mq.lax.obj(&self.mq.lax.obj(x, self.n)?, self.m)
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.mq.lax.map(&self.mq.lax.map(f, self.n)?, self.m)
    }
}

impl<F: Field> SkewMonFunctor<F> for QmQn<'_, F> {
    fn f2(&self, x: &Obj<F>, y: &Obj<F>) -> Result<BimodMap<F>> {
        let lax = &self.mq.lax;
        let inner = self.mq.qn2(x, y, self.n)?;
        lax.map(&inner, self.m)?.compose(&self.mq.qn2(&lax.obj(x, self.n)?, &lax.obj(y, self.n)?, self.m)?)
    }
    fn f0(&self) -> Result<BimodMap<F>> {
        self.mq.lax.map(&self.mq.qn0(self.n)?, self.m)?.compose(&self.mq.qn0(self.m)?)
    }
}

type Transformation<'a, F> = Box<dyn Fn(&Obj<F>) -> Result<BimodMap<F>> + Sync + 'a>;

/// the two squares of a monoidal transformation `t: A → B`, under the given names
fn monoidal_squares<F: Field>(
    mq: &MonoidalQ<F>,
    axes: (Axiom, Axiom),
    label: &str,
    t: &Transformation<'_, F>,
    a: &dyn SkewMonFunctor<F>,
    b: &dyn SkewMonFunctor<F>,
    pairs: &[(Obj<F>, Obj<F>)],
) -> Report {
    let ts = &mq.tensor;
    let mut rep = par_report(pairs, |(x, y)| {
        let mut rep = Report::new();
        rep.equal_with(axes.0, &format!("{label} {}", tuple_label(&[x, y])), || {
            let xy = ts.product(x, y)?;
            let lhs = comp(&[&t(&xy)?, &a.f2(x, y)?])?;
            let rhs = comp(&[&b.f2(x, y)?, &ts.product_map(&t(x)?, &t(y)?)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    let r = mq.unit();
    rep.equal_with(axes.1, label, || Ok((comp(&[&t(&r)?, &a.f0()?])?, b.f0()?.mat)));
    rep
}

fn prefixed(mut rep: Report, prefix: &str) -> Report {
    for rec in &mut rep.records {
        rec.subject = format!("{prefix} {}", rec.subject);
    }
    rep
}

/// functor laws for each `𝐐_n`, and monoidality of `δ`, `ε` and `ν`
pub fn check_monoidal_qn<F: Field>(mq: &MonoidalQ<F>, probes: &[Obj<F>]) -> Report {
    let nm = mq.n_max();
    let lax = &mq.lax;
    let p = ProbeSet::objects_only(probes.to_vec());
    let pairs = p.pairs();
    let mut rep = Report::new();
    for n in 0..=nm {
        let fun = QnFunctor { mq, n };
        rep.extend(prefixed(check_skewmon_functor(&fun, &mq.tensor, &mq.tensor, &p), &format!("𝐐{n}")));
    }
    for n in 1..=nm {
        let (qn, qn1, qn0) = (QnFunctor { mq, n }, QnFunctor { mq, n: n + 1 }, QnFunctor { mq, n: n - 1 });
        for i in 0..n {
            if n < nm {
                let t: Transformation<'_, F> = Box::new(move |x| lax.delta(x, n, i));
                rep.extend(monoidal_squares(mq, (QN_DELTA_SQUARE, QN_DELTA_UNIT), &format!("δ{n}_{i}"), &t, &qn, &qn1, &pairs));
            }
            let t: Transformation<'_, F> = Box::new(move |x| lax.eps(x, n, i));
            rep.extend(monoidal_squares(mq, (QN_EPS_SQUARE, QN_EPS_UNIT), &format!("ε{n}_{i}"), &t, &qn, &qn0, &pairs));
        }
    }
    for a in 0..=nm {
        for b in 0..=nm - a {
            let t: Transformation<'_, F> = Box::new(move |x| lax.nu(x, a, b));
            let src = QmQn { mq, m: a, n: b };
            let dst = QnFunctor { mq, n: a + b };
            rep.extend(monoidal_squares(mq, (QN_NU_SQUARE, QN_NU_UNIT), &format!("ν{a},{b}"), &t, &src, &dst, &pairs));
        }
    }
    rep.sorted()
}

/// `P_n` is cyclic, and its homs into `QⁿφM` evaluate exactly onto the image of `ζⁿ`
pub fn check_hom_form<F: Field>(mq: &MonoidalQ<F>, probes: &[Obj<F>], n_max: usize) -> Report {
    let mut rep = Report::new();
    let f = mq.field();
    for n in 1..=n_max {
        let pn = match mq.p(n) {
            Ok(p) => p,
            Err(e) => {
                rep.error(PN_CYCLIC, &format!("P{n}"), e.to_string());
                continue;
            }
        };
        let g = Mat::column(f, pn.generator.clone());
        let orbit = pn.module.left().iter().map(|a| a.mul(&g).map(|c| c.col(0))).collect::<Result<Vec<_>>>();
        match orbit.and_then(|cols| Mat::from_columns(f, pn.module.dim(), &cols)) {
            Ok(o) => rep.assert(PN_CYCLIC, &format!("P{n}"), o.rank() == pn.module.dim(), format!("orbit rank {} of {}", o.rank(), pn.module.dim())),
            Err(e) => rep.error(PN_CYCLIC, &format!("P{n}"), e.to_string()),
        }
        for m in probes {
            let subject = format!("P{n} {}", tuple_label(&[m]));
            let res = (|| -> Result<(usize, usize, bool)> {
                let acts = mq.ring_action(m, n)?;
                let d = acts[0].rows();
                let pairs: Vec<(&Mat<F>, &Mat<F>)> = pn.module.left().iter().zip(&acts).collect();
                let homs = intertwiners(f, pn.module.dim(), d, &pairs)?;
                let evals = homs.iter().map(|h| h.mul(&g).map(|c| c.col(0))).collect::<Result<Vec<_>>>()?;
                let ev = Mat::from_columns(f, d, &evals)?;
                let z = mq.lax.zeta(m, n)?.mat;
                let joint = Mat::hstack(f, d, &[&ev, &z])?;
                Ok((ev.rank(), z.cols(), joint.rank() == z.cols() && ev.rank() == homs.len()))
            })();
            match res {
                Ok((e, z, same)) => rep.assert(EV_HOM_FORM, &subject, same && e == z, format!("evaluation rank {e}, 𝐐{n} dimension {z}")),
                Err(e) => rep.error(EV_HOM_FORM, &subject, e.to_string()),
            }
        }
    }
    rep
}
