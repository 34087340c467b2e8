//! comodules over `𝐐` and their comparison with `Q`-comodules

use crate::ebimod::{e_bimodule, forget, q_induced_action};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{hom_over, restrict_homs, BimodMap, Obj};
use crate::skewcat::{tuple_label, SkewMonoidal};

use super::{LaxQ, MonotoneMap};

pub const LAXCOMOD_UNIT: Axiom = Axiom::new("laxcomodule.unit", "α_0 = ι");
pub const LAXCOMOD_NAT: Axiom = Axiom::new("laxcomodule.natural", "𝐐_f∘α_n = α_m for f: m → n");
pub const LAXCOMOD_MULT: Axiom = Axiom::new("laxcomodule.mult", "α_{m+n} = ν^{m,n}∘𝐐_mα_n∘α_m");
pub const LAXCOMOD_EMAP: Axiom = Axiom::new("laxcomodule.e-map", "each α_n is an arrow of E-objects");
pub const PHI_HAT_ROUNDTRIP: Axiom = Axiom::new("phi-hat.roundtrip", "ζⁿ∘φα̂_n = Qⁿ⁻¹α∘…∘α");
pub const PHI_HAT_FULL: Axiom = Axiom::new("phi-hat.full", "φ̂ is bijective on hom sets");

/// `M` with `α_n: M → 𝐐_n M` for `n ≤ alphas.len() − 1`
#[derive(Clone)]
pub struct LaxComodule<F: Field> {
    pub carrier: Obj<F>,
    pub alphas: Vec<BimodMap<F>>,
}

/// the three comodule laws and equivariance, for all indices present
pub fn check_laxcomodule<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, c: &LaxComodule<F>) -> Report {
    let mut rep = Report::new();
    let m = &c.carrier;
    let label = tuple_label(&[m]);
    let top = c.alphas.len().saturating_sub(1);
    if let Some(a0) = c.alphas.first() {
        rep.assert(LAXCOMOD_UNIT, &label, a0.mat.is_identity(), "α_0 is not the identity");
    }
    for (n, a) in c.alphas.iter().enumerate() {
        rep.assert(LAXCOMOD_EMAP, &format!("{label} n={n}"), a.is_equivariant(), "α_n does not commute with the actions");
    }
    for s in 0..=top {
        for t in 0..=top {
            for f in MonotoneMap::all(s, t) {
                rep.equal_with(LAXCOMOD_NAT, &format!("{label} {f}"), || {
                    let lhs = q.along(&f, m)?.compose(&c.alphas[t])?;
                    Ok((lhs.mat, c.alphas[s].mat.clone()))
                });
            }
        }
    }
    for a in 0..=top {
        for b in 0..=top - a {
            rep.equal_with(LAXCOMOD_MULT, &format!("{label} {a},{b}"), || {
                let rhs = q.nu(m, a, b)?.compose(&q.map(&c.alphas[b], a)?)?.compose(&c.alphas[a])?;
                Ok((c.alphas[a + b].mat.clone(), rhs.mat))
            });
        }
    }
    rep
}

/// `α_n = Qⁿ⁻¹α∘…∘Qα∘α` on the carrier of a `Q`-comodule
pub fn iterated_coaction<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, x: &Obj<F>, coaction: &Mat<F>, n: usize) -> Result<Mat<F>> {
    let s = &q.inner;
    let r = s.unit();
    let mut acc = Mat::identity(x.field(), x.dim());
    let mut alpha = BimodMap::new(coaction.clone(), x.clone(), s.product(x, &r)?)?;
    for _ in 0..n {
        acc = alpha.mat.mul(&acc)?;
        alpha = s.map_left(&alpha, &r)?;
    }
    Ok(acc)
}

/// the lift `(M̂, α̂)` of a `Q`-comodule: `M` with the action induced by `α`, and each
/// `α_n` factored through `ζⁿ`
pub fn phi_hat<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, x: &Obj<F>, coaction: &Mat<F>) -> Result<LaxComodule<F>> {
    let s = &q.inner;
    let lambda = q_induced_action(s, x, coaction)?;
    let e = q.e_algebra();
    let carrier = e_bimodule(e, x, lambda)?;
    let mut alphas = Vec::with_capacity(q.n_max + 1);
    for n in 0..=q.n_max {
        let y = iterated_coaction(q, x, coaction, n)?;
        let z = q.zeta(&carrier, n)?;
        let sub = z.mat.clone();
        let a = sub.solve(&y).map_err(|_| {
            let col = (0..y.cols()).find(|&j| sub.solve(&y.select_cols(&[j])).is_err()).unwrap_or(0);
            Error::NotWellDefined(format!("α_{n} of {} leaves the equalizer at basis vector {col}", x.label()))
        })?;
        alphas.push(BimodMap::new(a, carrier.clone(), q.obj(&carrier, n)?)?);
    }
    Ok(LaxComodule { carrier, alphas })
}

/// `φ̂` recovers the coaction and carrier, and the lifted family satisfies the laws
pub fn check_phi_hat<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, x: &Obj<F>, coaction: &Mat<F>) -> Report {
    let label = tuple_label(&[x]);
    let mut rep = Report::new();
    match phi_hat(q, x, coaction) {
        Ok(c) => {
            for n in 0..=q.n_max {
                rep.equal_with(PHI_HAT_ROUNDTRIP, &format!("{label} n={n}"), || {
                    let lhs = q.zeta(&c.carrier, n)?.mat.mul(&c.alphas[n].mat)?;
                    Ok((lhs, iterated_coaction(q, x, coaction, n)?))
                });
            }
            rep.assert(
                PHI_HAT_ROUNDTRIP,
                &format!("{label} carrier"),
                forget(&c.carrier).fingerprint() == forget(x).fingerprint(),
                "carrier changed",
            );
            rep.extend(check_laxcomodule(q, &c));
        }
        Err(e) => rep.error(PHI_HAT_ROUNDTRIP, &label, e.to_string()),
    }
    rep
}

/// arrows of `𝐐`-comodules `(M, α) → (N, β)`, checked up to the computed levels
pub fn laxcomodule_homs<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, a: &LaxComodule<F>, b: &LaxComodule<F>) -> Result<Vec<Mat<F>>> {
    let (m, n) = (&a.carrier, &b.carrier);
    let basis = hom_over(m, n)?;
    let f = m.field();
    restrict_homs(f, &basis, |t| {
        let tm = BimodMap::new(t.clone(), m.clone(), n.clone())?;
        let mut rows = Vec::new();
        for k in 0..a.alphas.len().min(b.alphas.len()) {
            let lhs = b.alphas[k].mat.mul(t)?;
            let rhs = q.map(&tm, k)?.mat.mul(&a.alphas[k].mat)?;
            rows.push(lhs.sub(&rhs)?);
        }
        let refs: Vec<&Mat<F>> = rows.iter().collect();
        Mat::vstack(f, m.dim(), &refs)
    })
}

/// arrows of `Q`-comodules `(X, α) → (Y, β)` in the underlying category
pub fn qcomodule_homs<F: Field, S: SkewMonoidal<F>>(s: &S, x: (&Obj<F>, &Mat<F>), y: (&Obj<F>, &Mat<F>)) -> Result<Vec<Mat<F>>> {
    let (fx, fy) = (forget(x.0), forget(y.0));
    let basis = hom_over(&fx, &fy)?;
    let r = s.unit();
    restrict_homs(fx.field(), &basis, |t| {
        let tr = s.map_left(&BimodMap::new(t.clone(), fx.clone(), fy.clone())?, &r)?;
        y.1.mul(t)?.sub(&tr.mat.mul(x.1)?)
    })
}

/// `φ̂` is full and faithful on the given `Q`-comodules
pub fn check_phi_hat_full<F: Field, S: SkewMonoidal<F>>(q: &LaxQ<F, S>, samples: &[(Obj<F>, Mat<F>)]) -> Report {
    let mut rep = Report::new();
    let lifts: Vec<Option<LaxComodule<F>>> = samples.iter().map(|(x, a)| phi_hat(q, x, a).ok()).collect();
    for (i, x) in samples.iter().enumerate() {
        for (j, y) in samples.iter().enumerate() {
            let subject = tuple_label(&[&x.0, &y.0]);
            let (Some(a), Some(b)) = (&lifts[i], &lifts[j]) else {
                rep.error(PHI_HAT_FULL, &subject, "no lift");
                continue;
            };
            match (laxcomodule_homs(q, a, b), qcomodule_homs(&q.inner, (&x.0, &x.1), (&y.0, &y.1))) {
                (Ok(u), Ok(v)) => rep.assert(PHI_HAT_FULL, &subject, u.len() == v.len(), format!("dimensions {} and {}", u.len(), v.len())),
                (Err(e), _) | (_, Err(e)) => rep.error(PHI_HAT_FULL, &subject, e.to_string()),
            }
        }
    }
    rep
}
