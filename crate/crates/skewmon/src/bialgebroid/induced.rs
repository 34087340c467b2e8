//! `M⊛N = M ⊗_{R₁} (N ⊗_{R₂} H)` with its comparison maps
//!
//! elements are written `[m, n, h]`. every basis vector of `M⊛N` lifts to a single
//! monomial `e_m ⊗ e_n ⊗ e_h`, so each structure map is evaluated on monomials and
//! pushed back through the two quotient projections.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{tensor_quotient, BimodMap, Bimodule, Obj};
use crate::skewcat::{tuple_label, SkewMonoidal};

use super::{axpy, sparse, RightBialgebroid, Sparse};

pub const WD_GAMMA: Axiom = Axiom::new("well-defined.gamma", "gamma formula respects the balancing relations");
pub const WD_EPS: Axiom = Axiom::new("well-defined.eps", "eps formula respects the balancing relations");
pub const WD_PRODUCT_MAP: Axiom = Axiom::new("well-defined.product-map", "product of arrows respects the balancing relations");

/// one product object with its projections in sparse form
pub(crate) struct ProductData<F: Field> {
    pub obj: Obj<F>,
    pub d_inner: usize,
    pub d_h: usize,
    inner_cols: Vec<Sparse<F::Elem>>,
    outer_cols: Vec<Sparse<F::Elem>>,
    /// monomial lift `(m, n, h)` of each basis vector
    pub lifts: Vec<(usize, usize, usize)>,
}

impl<F: Field> ProductData<F> {
    pub fn dim(&self) -> usize {
        self.lifts.len()
    }

    /// `out += c·[e_m, e_n, e_h]`
    pub fn project(&self, field: &F, m: usize, n: usize, h: usize, c: &F::Elem, out: &mut [F::Elem]) {
        for (t, ct) in &self.inner_cols[n * self.d_h + h] {
            axpy(field, out, &field.mul(c, ct), &self.outer_cols[m * self.d_inner + t]);
        }
    }
}

type Key3 = (u64, u64, u64);

/// the right-monoidal structure on right `R`-modules induced by a bialgebroid
pub struct InducedSkewMon<F: Field> {
    b: Arc<RightBialgebroid<F>>,
    unit: Obj<F>,
    products: Mutex<HashMap<(u64, u64), Arc<ProductData<F>>>>,
    gammas: Mutex<HashMap<Key3, BimodMap<F>>>,
}

impl<F: Field> InducedSkewMon<F> {
    pub fn new(b: Arc<RightBialgebroid<F>>) -> Self {
        let unit = b.unit_object();
        InducedSkewMon {
            b,
            unit,
            products: Mutex::new(HashMap::new()),
            gammas: Mutex::new(HashMap::new()),
        }
    }

    pub fn bialgebroid(&self) -> &Arc<RightBialgebroid<F>> {
        &self.b
    }

    fn field(&self) -> &F {
        self.b.field()
    }

    fn check_module(&self, m: &Obj<F>) -> Result<()> {
        if m.right_alg().fingerprint() != self.b.base().fingerprint() {
            return Err(Error::AlgebraMismatch(format!(
                "{} is a module over {}, not {}",
                m.label(),
                m.right_alg().name(),
                self.b.base().name()
            )));
        }
        Ok(())
    }

    pub(crate) fn data(&self, m: &Obj<F>, n: &Obj<F>) -> Result<Arc<ProductData<F>>> {
        let key = (m.fingerprint(), n.fingerprint());
        if let Some(d) = self.products.lock().expect("cache lock").get(&key) {
            return Ok(d.clone());
        }
        let d = Arc::new(self.build(m, n)?);
        self.products.lock().expect("cache lock").insert(key, d.clone());
        Ok(d)
    }

    fn build(&self, m: &Obj<F>, n: &Obj<F>) -> Result<ProductData<F>> {
        self.check_module(m)?;
        self.check_module(n)?;
        let f = self.field();
        let b = &self.b;
        let base = b.base();
        let dh = b.dim_h();
        let (dm, dn) = (m.dim(), n.dim());
        let inner = tensor_quotient(base, n.right(), b.lambda2(), dn, dh)?;
        let idn = Mat::identity(f, dn);
        let lam_inner = b
            .lambda1()
            .iter()
            .map(|l| inner.transport(&idn.kron(l)?))
            .collect::<Result<Vec<_>>>()?;
        let di = inner.dim();
        let outer = tensor_quotient(base, m.right(), &lam_inner, dm, di)?;
        let lifts: Vec<(usize, usize, usize)> = outer
            .basis
            .iter()
            .map(|&amb| {
                let inner_amb = inner.basis[amb % di];
                (amb / di, inner_amb / dh, inner_amb % dh)
            })
            .collect();
        let mut data = ProductData {
            obj: m.clone(),
            d_inner: di,
            d_h: dh,
            inner_cols: inner.projection.sparse_cols(),
            outer_cols: outer.projection.sparse_cols(),
            lifts,
        };
        // right action through ρ₂ on the last slot
        let d = data.dim();
        let mut right = Vec::with_capacity(base.dim());
        for j in 0..base.dim() {
            let mut mat = Mat::zeros(f, d, d);
            for (q, &(x, y, h)) in data.lifts.iter().enumerate() {
                let mut col = vec![f.zero(); d];
                for (k, c) in sparse(f, &b.mul_basis_sparse(h, &sparse(f, &b.source().col(j)))) {
                    data.project(f, x, y, k, &c, &mut col);
                }
                for (i, x) in col.into_iter().enumerate() {
                    mat.set(i, q, x);
                }
            }
            right.push(mat);
        }
        let label = format!("{}⊛{}", wrap(m.label()), wrap(n.label()));
        data.obj = Arc::new(Bimodule::right_module(base.clone(), right, label)?);
        Ok(data)
    }

    /// assemble a matrix column by column from an evaluator on source lifts
    fn assemble(
        &self,
        src: &ProductData<F>,
        rows: usize,
        eval: impl Fn((usize, usize, usize), &mut Vec<F::Elem>),
    ) -> Mat<F> {
        let f = self.field();
        let mut mat = Mat::zeros(f, rows, src.dim());
        for (q, &lift) in src.lifts.iter().enumerate() {
            let mut col = vec![f.zero(); rows];
            eval(lift, &mut col);
            for (i, x) in col.into_iter().enumerate() {
                if !f.is_zero(&x) {
                    mat.set(i, q, x);
                }
            }
        }
        mat
    }

    /// `[l, [m,n,g], h] ↦ [[l,m,h₁], n, g·h₂]` on a monomial with `y` a basis index of `M⊛N`
    fn gamma_on(&self, lm: &ProductData<F>, lmn: &ProductData<F>, mn: &ProductData<F>, l: usize, y: usize, h: usize, c: &F::Elem, out: &mut [F::Elem]) {
        let (m, n, g) = mn.lifts[y];
        self.gamma_free(lm, lmn, l, m, n, g, h, c, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn gamma_free(&self, lm: &ProductData<F>, lmn: &ProductData<F>, l: usize, m: usize, n: usize, g: usize, h: usize, c: &F::Elem, out: &mut [F::Elem]) {
        let f = self.field();
        let b = &self.b;
        let mut first = vec![f.zero(); lm.dim()];
        for (a, bb, cd) in b.delta_terms(h) {
            first.iter_mut().for_each(|x| *x = f.zero());
            lm.project(f, l, m, *a, &f.one(), &mut first);
            let gb = b.mult_terms(g, *bb);
            for (j, xj) in first.iter().enumerate() {
                if f.is_zero(xj) {
                    continue;
                }
                let cj = f.mul(c, &f.mul(cd, xj));
                for (k, ck) in gb {
                    lmn.project(f, j, n, *k, &f.mul(&cj, ck), out);
                }
            }
        }
    }

    /// `[m, r, h] ↦ m·ε(s(r)h)`
    fn eps_free(&self, m_obj: &Obj<F>, m: usize, r: usize, h: usize, c: &F::Elem, out: &mut [F::Elem]) {
        let f = self.field();
        let e = self.b.eps_of(&self.b.s_times(r, h));
        for (i, ei) in e.iter().enumerate() {
            if f.is_zero(ei) {
                continue;
            }
            for (k, x) in m_obj.right()[i].col_entries(m) {
                out[k] = f.mul_add(&out[k], &f.mul(c, ei), &x);
            }
        }
    }
}

fn wrap(label: &str) -> String {
    if label.contains('⊛') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

impl<F: Field> SkewMonoidal<F> for InducedSkewMon<F> {
    fn name(&self) -> String {
        format!("induced by {}", self.b.name())
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
        let field = self.field();
        let fc = f.mat.sparse_cols();
        let gc = g.mat.sparse_cols();
        let mat = self.assemble(&src, dst.dim(), |(a, c, h), out| {
            for (a2, x) in &fc[a] {
                for (c2, y) in &gc[c] {
                    dst.project(field, *a2, *c2, h, &field.mul(x, y), out);
                }
            }
        });
        BimodMap::new(mat, src.obj.clone(), dst.obj.clone())
    }

    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let key = (l.fingerprint(), m.fingerprint(), n.fingerprint());
        if let Some(g) = self.gammas.lock().expect("cache lock").get(&key) {
            return Ok(g.clone());
        }
        let mn = self.data(m, n)?;
        let src = self.data(l, &mn.obj)?;
        let lm = self.data(l, m)?;
        let dst = self.data(&lm.obj, n)?;
        let one = self.field().one();
        let mat = self.assemble(&src, dst.dim(), |(x, y, h), out| self.gamma_on(&lm, &dst, &mn, x, y, h, &one, out));
        let g = BimodMap::new(mat, src.obj.clone(), dst.obj.clone())?;
        self.gammas.lock().expect("cache lock").insert(key, g.clone());
        Ok(g)
    }

    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let f = self.field();
        let dst = self.data(&self.unit, m)?;
        let ur = sparse(f, self.b.base().unit());
        let uh = sparse(f, self.b.total().unit());
        let mut mat = Mat::zeros(f, dst.dim(), m.dim());
        for j in 0..m.dim() {
            let mut col = vec![f.zero(); dst.dim()];
            for (i, ci) in &ur {
                for (k, ck) in &uh {
                    dst.project(f, *i, j, *k, &f.mul(ci, ck), &mut col);
                }
            }
            for (i, x) in col.into_iter().enumerate() {
                mat.set(i, j, x);
            }
        }
        BimodMap::new(mat, m.clone(), dst.obj.clone())
    }

    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let src = self.data(m, &self.unit)?;
        let one = self.field().one();
        let mat = self.assemble(&src, m.dim(), |(x, r, h), out| self.eps_free(m, x, r, h, &one, out));
        BimodMap::new(mat, src.obj.clone(), m.clone())
    }

    fn e_basis(&self) -> Vec<Mat<F>> {
        let base = self.b.base();
        (0..base.dim()).map(|i| base.lmul(i).clone()).collect()
    }
}

/// compare each formula on all free monomials with the assembled map composed with
/// the quotient projections
pub fn check_well_defined<F: Field>(s: &InducedSkewMon<F>, triples: &[[Obj<F>; 3]], maps: &[(BimodMap<F>, BimodMap<F>)]) -> Report {
    let mut rep = Report::new();
    let f = s.field().clone();
    let dh = s.b.dim_h();
    for [l, m, n] in triples {
        let subject = tuple_label(&[l, m, n]);
        let res: Result<Option<String>> = (|| {
            let g = s.gamma(l, m, n)?;
            let mn = s.data(m, n)?;
            let src = s.data(l, &mn.obj)?;
            let lm = s.data(l, m)?;
            let dst = s.data(&lm.obj, n)?;
            let one = f.one();
            for li in 0..l.dim() {
                for mi in 0..m.dim() {
                    for ni in 0..n.dim() {
                        for gi in 0..dh {
                            // [m, n, g] in M⊛N coordinates, then [l, ·, h]
                            let mut y = vec![f.zero(); mn.dim()];
                            mn.project(&f, mi, ni, gi, &one, &mut y);
                            for hi in 0..dh {
                                let mut free = vec![f.zero(); dst.dim()];
                                s.gamma_free(&lm, &dst, li, mi, ni, gi, hi, &one, &mut free);
                                let mut x = vec![f.zero(); src.dim()];
                                for (yi, cy) in y.iter().enumerate() {
                                    if !f.is_zero(cy) {
                                        src.project(&f, li, yi, hi, cy, &mut x);
                                    }
                                }
                                if g.mat.apply(&x)? != free {
                                    return Ok(Some(format!("differs at [e{li},[e{mi},e{ni},e{gi}],e{hi}]")));
                                }
                            }
                        }
                    }
                }
            }
            Ok(None)
        })();
        record(&mut rep, WD_GAMMA, &subject, res);
        let subject = tuple_label(&[l]);
        let res: Result<Option<String>> = (|| {
            let e = s.eps(l)?;
            let src = s.data(l, &s.unit)?;
            let one = f.one();
            for li in 0..l.dim() {
                for ri in 0..s.b.dim_r() {
                    for hi in 0..dh {
                        let mut free = vec![f.zero(); l.dim()];
                        s.eps_free(l, li, ri, hi, &one, &mut free);
                        let mut x = vec![f.zero(); src.dim()];
                        src.project(&f, li, ri, hi, &one, &mut x);
                        if e.mat.apply(&x)? != free {
                            return Ok(Some(format!("differs at [e{li},e{ri},e{hi}]")));
                        }
                    }
                }
            }
            Ok(None)
        })();
        record(&mut rep, WD_EPS, &subject, res);
    }
    for (a, c) in maps {
        let subject = format!("[{}→{}]⊛[{}→{}]", a.source.label(), a.target.label(), c.source.label(), c.target.label());
        let res: Result<Option<String>> = (|| {
            let pm = s.product_map(a, c)?;
            let src = s.data(&a.source, &c.source)?;
            let dst = s.data(&a.target, &c.target)?;
            let one = f.one();
            for ai in 0..a.source.dim() {
                for ci in 0..c.source.dim() {
                    for hi in 0..dh {
                        let mut free = vec![f.zero(); dst.dim()];
                        for (a2, x) in a.mat.col_entries(ai) {
                            for (c2, y) in c.mat.col_entries(ci) {
                                dst.project(&f, a2, c2, hi, &f.mul(&x, &y), &mut free);
                            }
                        }
                        let mut x = vec![f.zero(); src.dim()];
                        src.project(&f, ai, ci, hi, &one, &mut x);
                        if pm.mat.apply(&x)? != free {
                            return Ok(Some(format!("differs at [e{ai},e{ci},e{hi}]")));
                        }
                    }
                }
            }
            Ok(None)
        })();
        record(&mut rep, WD_PRODUCT_MAP, &subject, res);
    }
    rep
}

fn record(rep: &mut Report, ax: Axiom, subject: &str, res: Result<Option<String>>) {
    match res {
        Ok(None) => rep.pass(ax, subject),
        Ok(Some(w)) => rep.fail(ax, subject, w),
        Err(e) => rep.error(ax, subject, e.to_string()),
    }
}

/// `R` and `R²` with a thinned set of arrows between them
pub fn default_probes<F: Field>(b: &RightBialgebroid<F>, max_maps: usize) -> Result<crate::skewcat::ProbeSet<F>> {
    let r = b.unit_object();
    let r2: Obj<F> = Arc::new(Bimodule::free_right(b.base(), 2).relabel("R²"));
    Ok(crate::skewcat::ProbeSet::with_hom_bases(vec![r, r2])?.thin_maps(max_maps))
}
