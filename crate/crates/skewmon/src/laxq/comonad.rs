//! `𝐐_n`, `δⁿ_i`, `εⁿ_i`, `ν^{m,n}` and their laws

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::ebimod::{e_algebra, forget, forget_map, product_actions, EObject};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, Subspace};
use crate::report::{Axiom, Report};
use crate::ringmod::{Algebra, BimodMap, Bimodule, Obj};
use crate::skewcat::{delta, par_report, tuple_label, SkewMonoidal};

use super::{decompose, Elementary, MonotoneMap};


pub const ZETA_MONO: Axiom = Axiom::new("laxq.zeta-mono", "ζⁿ is a monomorphism");
pub const SIMPLICIAL: Axiom = Axiom::new("laxq.simplicial", "𝐐_{f∘g} = 𝐐_g∘𝐐_f");
pub const NU_ASSOC: Axiom = Axiom::new("laxq.nu-assoc", "ν^{l+m,n}∘ν^{l,m}𝐐_n = ν^{l,m+n}∘𝐐_lν^{m,n}");
pub const NU_UNIT: Axiom = Axiom::new("laxq.nu-unit", "ν^{0,n} = 1 = ν^{n,0}");
pub const NU_NAT_DELTA: Axiom = Axiom::new("laxq.nu-natural-delta", "δ^{m+n}_i∘ν^{m,n} = ν∘(δ on the matching factor)");
pub const NU_NAT_EPS: Axiom = Axiom::new("laxq.nu-natural-eps", "ε^{m+n}_i∘ν^{m,n} = ν∘(ε on the matching factor)");

struct Level<F: Field> {
    /// `Qⁿ φM` with `λ_1..λ_{n+1}` and `ρ_1..ρ_n`
    power: EObject<F>,
    zeta: Subspace<F>,
    obj: Obj<F>,
}

/// the lax comonad `𝐐` on `E`-objects of a right-monoidal structure
///
/// `E`-objects are bimodules whose left algebra is `E`; the levels `n ≤ n_max` are
/// built on demand and cached per object.
pub struct LaxQ<F: Field, S> {
    pub inner: S,
    pub n_max: usize,
    e: Arc<Algebra<F>>,
    cache: Mutex<HashMap<(u64, usize), Arc<Level<F>>>>,
}

/// `x` with `sub.inclusion·x = y`, checked
fn through<F: Field>(sub: &Subspace<F>, y: &Mat<F>, what: &str) -> Result<Mat<F>> {
    let x = sub.retract(y);
    if sub.inclusion.mul(&x)? != *y {
        let diff = sub.inclusion.mul(&x)?.sub(y)?;
        let col = (0..diff.cols()).find(|&j| !diff.col(j).iter().all(|e| y.field().is_zero(e))).unwrap_or(0);
        return Err(Error::NotWellDefined(format!("{what} leaves the equalizer at basis vector {col}")));
    }
    Ok(x)
}

impl<F: Field, S: SkewMonoidal<F>> LaxQ<F, S> {
    pub fn new(inner: S, n_max: usize) -> Self {
        let e = e_algebra(&inner);
        LaxQ {
            inner,
            n_max,
            e,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn e_algebra(&self) -> &Arc<Algebra<F>> {
        &self.e
    }

    fn level(&self, m: &Obj<F>, n: usize) -> Result<Arc<Level<F>>> {
        let key = (m.fingerprint(), n);
        if let Some(l) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(l.clone());
        }
        if m.left_alg().fingerprint() != self.e.fingerprint() {
            return Err(Error::AlgebraMismatch(format!("{} is not an E-object", m.label())));
        }
        let f = m.field();
        let level = if n == 0 {
            let d = m.dim();
            Level {
                power: EObject::from_bimodule(m),
                zeta: Subspace {
                    inclusion: Mat::identity(f, d),
                    free: (0..d).collect(),
                },
                obj: m.clone(),
            }
        } else {
            let prev = self.level(m, n - 1)?;
            let power = product_actions(&self.inner, &prev.power, &EObject::unit(&self.inner))?;
            let zeta = self.equalizer(&power, n)?;
            let lam = power.lambdas[n].iter().map(|a| zeta.restrict(a)).collect::<Result<Vec<_>>>()?;
            let right = power.obj.right().iter().map(|a| zeta.restrict(a)).collect::<Result<Vec<_>>>()?;
            let obj = Bimodule::new(
                zeta.dim(),
                self.e.clone(),
                power.obj.right_alg().clone(),
                lam,
                right,
                format!("𝐐{n}({})", m.label()),
            )?;
            Level {
                power,
                zeta,
                obj: Arc::new(obj),
            }
        };
        let level = Arc::new(level);
        self.cache.lock().expect("cache lock").insert(key, level.clone());
        Ok(level)
    }

    /// kernel of `λ_1(e_1)⋯λ_n(e_n) − ρ_1(e_1)⋯ρ_n(e_n)` over all basis tuples
    fn equalizer(&self, power: &EObject<F>, n: usize) -> Result<Subspace<F>> {
        let f = power.obj.field();
        let d = power.obj.dim();
        let k = self.e.dim();
        let mut rows = Vec::new();
        let mut tuple = vec![0usize; n];
        loop {
            let mut lam = Mat::identity(f, d);
            let mut rho = Mat::identity(f, d);
            for (i, &e) in tuple.iter().enumerate() {
                lam = lam.mul(&power.lambdas[i][e])?;
                rho = rho.mul(&power.rhos[i][e])?;
            }
            let diff = lam.sub(&rho)?;
            if !diff.is_zero() {
                rows.push(diff);
            }
            // next tuple in lexicographic order
            let mut pos = n;
            loop {
                if pos == 0 {
                    let refs: Vec<&Mat<F>> = rows.iter().collect();
                    return Ok(Mat::vstack(f, d, &refs)?.kernel_subspace());
                }
                pos -= 1;
                tuple[pos] += 1;
                if tuple[pos] < k {
                    break;
                }
                tuple[pos] = 0;
            }
        }
    }

    /// `𝐐_n M`
    pub fn obj(&self, m: &Obj<F>, n: usize) -> Result<Obj<F>> {
        Ok(self.level(m, n)?.obj.clone())
    }

    /// `Qⁿ φM`
    pub fn power(&self, m: &Obj<F>, n: usize) -> Result<Obj<F>> {
        Ok(self.level(m, n)?.power.obj.clone())
    }

    /// `Qⁿ φM` with its `E`-actions
    pub fn power_actions(&self, m: &Obj<F>, n: usize) -> Result<EObject<F>> {
        Ok(self.level(m, n)?.power.clone())
    }

    /// `ζⁿ_M: φ𝐐_n M → Qⁿ φM`
    pub fn zeta(&self, m: &Obj<F>, n: usize) -> Result<BimodMap<F>> {
        let l = self.level(m, n)?;
        BimodMap::new(l.zeta.inclusion.clone(), forget(&l.obj), l.power.obj.clone())
    }

    /// `Qⁿ f` for an arrow of the underlying category
    pub fn power_map(&self, f: &BimodMap<F>, n: usize) -> Result<BimodMap<F>> {
        let r = self.inner.unit();
        (0..n).try_fold(f.clone(), |g, _| self.inner.map_left(&g, &r))
    }

    /// `𝐐_n t` for an `E`-map `t`
    pub fn map(&self, t: &BimodMap<F>, n: usize) -> Result<BimodMap<F>> {
        let src = self.level(&t.source, n)?;
        let dst = self.level(&t.target, n)?;
        let y = self.power_map(&forget_map(t), n)?.mat.mul(&src.zeta.inclusion)?;
        let x = through(&dst.zeta, &y, "𝐐_n t")?;
        BimodMap::new(x, src.obj.clone(), dst.obj.clone())
    }

    /// `δⁿ_i: 𝐐_n → 𝐐_{n+1}` with `ζ^{n+1}∘δⁿ_i = Q^iδQ^{n−i−1}∘ζⁿ`
    pub fn delta(&self, m: &Obj<F>, n: usize, i: usize) -> Result<BimodMap<F>> {
        if i >= n {
            return Err(Error::Invalid(format!("δ^{n}_{i} needs i < n")));
        }
        let src = self.level(m, n)?;
        let dst = self.level(m, n + 1)?;
        let core = delta(&self.inner, &self.power(m, n - i - 1)?)?;
        let y = self.power_map(&core, i)?.mat.mul(&src.zeta.inclusion)?;
        let x = through(&dst.zeta, &y, "δ")?;
        BimodMap::new(x, src.obj.clone(), dst.obj.clone())
    }

    /// `εⁿ_i: 𝐐_n → 𝐐_{n−1}` with `ζ^{n−1}∘εⁿ_i = Q^iεQ^{n−i−1}∘ζⁿ`
    pub fn eps(&self, m: &Obj<F>, n: usize, i: usize) -> Result<BimodMap<F>> {
        if i >= n {
            return Err(Error::Invalid(format!("ε^{n}_{i} needs i < n")));
        }
        let src = self.level(m, n)?;
        let dst = self.level(m, n - 1)?;
        let core = self.inner.eps(&self.power(m, n - i - 1)?)?;
        let y = self.power_map(&core, i)?.mat.mul(&src.zeta.inclusion)?;
        let x = through(&dst.zeta, &y, "ε")?;
        BimodMap::new(x, src.obj.clone(), dst.obj.clone())
    }

    /// `𝐐_e` for an elementary map `e`
    pub fn elementary(&self, m: &Obj<F>, e: Elementary) -> Result<BimodMap<F>> {
        match e {
            Elementary::Merge { i, j } => self.delta(m, i + 1 + j, i),
            Elementary::Insert { i, j } => self.eps(m, i + 1 + j, i),
        }
    }

    /// `𝐐_f: 𝐐_{target} M → 𝐐_{source} M` through the normal form of `f`
    pub fn along(&self, f: &MonotoneMap, m: &Obj<F>) -> Result<BimodMap<F>> {
        let start = self.obj(m, f.target)?.identity();
        decompose(f).iter().rev().try_fold(start, |acc, &e| self.elementary(m, e)?.compose(&acc))
    }

    /// `ν^{a,b}_M: 𝐐_a𝐐_b M → 𝐐_{a+b} M` with `ζ^{a+b}∘ν = Q^aζ^b∘ζ^a𝐐_b`
    pub fn nu(&self, m: &Obj<F>, a: usize, b: usize) -> Result<BimodMap<F>> {
        let qb = self.obj(m, b)?;
        let outer = self.level(&qb, a)?;
        let dst = self.level(m, a + b)?;
        let y = self.power_map(&self.zeta(m, b)?, a)?.mat.mul(&outer.zeta.inclusion)?;
        let x = through(&dst.zeta, &y, "ν")?;
        BimodMap::new(x, outer.obj.clone(), dst.obj.clone())
    }
}

/// `ζⁿ` is monic and `𝐐_f` is functorial on all pairs of elementary maps
pub fn check_simplicial<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, probes: &[Obj<F>]) -> Report {
    let elems = Elementary::all(q.n_max);
    let mut pairs = Vec::new();
    for g in &elems {
        for f in &elems {
            if g.target() == f.source() {
                pairs.push((*g, *f));
            }
        }
    }
    par_report(probes, |m| {
        let mut rep = Report::new();
        for n in 0..=q.n_max {
            let subject = format!("{} n={n}", tuple_label(&[m]));
            match q.zeta(m, n) {
                Ok(z) => rep.assert(ZETA_MONO, &subject, z.mat.rank() == z.mat.cols(), format!("rank {} of {:?}", z.mat.rank(), z.mat.shape())),
                Err(e) => rep.error(ZETA_MONO, &subject, e.to_string()),
            }
        }
        for (g, f) in &pairs {
            let subject = format!("{} ({f})∘({g})", tuple_label(&[m]));
            rep.equal_with(SIMPLICIAL, &subject, || {
                let fg = f.as_map().after(&g.as_map())?;
                let lhs = q.along(&fg, m)?;
                let rhs = q.elementary(m, *g)?.compose(&q.elementary(m, *f)?)?;
                Ok((lhs.mat, rhs.mat))
            });
        }
        rep
    })
    .sorted()
}

/// associativity and unit laws of `ν` and its naturality against elementary maps
pub fn check_lax_monoidal<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, probes: &[Obj<F>]) -> Report {
    let nm = q.n_max;
    par_report(probes, |m| {
        let mut rep = Report::new();
        let label = tuple_label(&[m]);
        for n in 0..=nm {
            rep.equal_with(NU_UNIT, &format!("{label} 0,{n}"), || {
                let x = q.nu(m, 0, n)?;
                Ok((x.mat.clone(), Mat::identity(m.field(), x.mat.cols())))
            });
            rep.equal_with(NU_UNIT, &format!("{label} {n},0"), || {
                let x = q.nu(m, n, 0)?;
                Ok((x.mat.clone(), Mat::identity(m.field(), x.mat.cols())))
            });
        }
        for l in 0..=nm {
            for a in 0..=nm - l {
                for b in 0..=nm - l - a {
                    rep.equal_with(NU_ASSOC, &format!("{label} {l},{a},{b}"), || {
                        let qb = q.obj(m, b)?;
                        let lhs = q.nu(m, l + a, b)?.compose(&q.nu(&qb, l, a)?)?;
                        let rhs = q.nu(m, l, a + b)?.compose(&q.map(&q.nu(m, a, b)?, l)?)?;
                        Ok((lhs.mat, rhs.mat))
                    });
                }
            }
        }
        for a in 0..=nm {
            for b in 0..=nm - a {
                if a + b < nm {
                    for i in 0..a + b {
                        rep.equal_with(NU_NAT_DELTA, &format!("{label} {a},{b} i={i}"), || {
                            let qb = q.obj(m, b)?;
                            let lhs = q.delta(m, a + b, i)?.compose(&q.nu(m, a, b)?)?;
                            let rhs = if i < a {
                                q.nu(m, a + 1, b)?.compose(&q.delta(&qb, a, i)?)?
                            } else {
                                q.nu(m, a, b + 1)?.compose(&q.map(&q.delta(m, b, i - a)?, a)?)?
                            };
                            Ok((lhs.mat, rhs.mat))
                        });
                    }
                }
                for i in 0..a + b {
                    rep.equal_with(NU_NAT_EPS, &format!("{label} {a},{b} i={i}"), || {
                        let qb = q.obj(m, b)?;
                        let lhs = q.eps(m, a + b, i)?.compose(&q.nu(m, a, b)?)?;
                        let rhs = if i < a {
                            q.nu(m, a - 1, b)?.compose(&q.eps(&qb, a, i)?)?
                        } else {
                            q.nu(m, a, b - 1)?.compose(&q.map(&q.eps(m, b, i - a)?, a)?)?
                        };
                        Ok((lhs.mat, rhs.mat))
                    });
                }
            }
        }
        rep
    })
    .sorted()
}
