//! the canonical monad `T = R⊛−`, comonad `Q = −⊛R` and what is built from them

use crate::error::Result;
use crate::exactlin::Field;
use crate::report::{Axiom, Report};
use crate::ringmod::{BimodMap, Obj};

use super::*;

pub const SMC10: Axiom = Axiom::new("smc10.monad-left-unit", "SMC10");
pub const SMC11: Axiom = Axiom::new("smc11.monad-right-unit", "SMC11");
pub const SMC12: Axiom = Axiom::new("smc12.comonad-left-counit", "SMC12");
pub const SMC13: Axiom = Axiom::new("smc13.comonad-right-counit", "SMC13");
pub const MONAD_ASSOC: Axiom = Axiom::new("monad.assoc", "associativity of mu");
pub const COMONAD_COASSOC: Axiom = Axiom::new("comonad.coassoc", "coassociativity of delta");
pub const SMC14: Axiom = Axiom::new("smc14.chi-mu", "SMC14");
pub const SMC15: Axiom = Axiom::new("smc15.chi-delta", "SMC15");
pub const SMC16: Axiom = Axiom::new("smc16.chi-eta", "SMC16");
pub const SMC17: Axiom = Axiom::new("smc17.chi-eps", "SMC17");
pub const DELTA2_COASSOC: Axiom = Axiom::new("two-arg.delta-coassoc", "two-argument delta coassociativity");
pub const DELTA2_COUNIT: Axiom = Axiom::new("two-arg.delta-counit", "two-argument delta counit");
pub const MU2_ASSOC: Axiom = Axiom::new("two-arg.mu-assoc", "two-argument mu associativity");
pub const MU2_UNIT: Axiom = Axiom::new("two-arg.mu-unit", "two-argument mu unit");
pub const GALOIS_IDENTITY: Axiom = Axiom::new("galois.identity", "gamma as Galois map");
pub const COMPAT_DIAGRAM: Axiom = Axiom::new("compat.diagram", "bialgebra-like compatibility diagram");
pub const COMPAT_SECOND_ROW: Axiom = Axiom::new("compat.second-row", "chi second row of the compatibility diagram");

/// `TM = R⊛M`
pub fn t_obj<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, m: &Obj<F>) -> Result<Obj<F>> {
    s.product(&s.unit(), m)
}

/// `QM = M⊛R`
pub fn q_obj<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, m: &Obj<F>) -> Result<Obj<F>> {
    s.product(m, &s.unit())
}

/// `Tf = R⊛f`
pub fn t_map<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, f: &BimodMap<F>) -> Result<BimodMap<F>> {
    s.map_right(&s.unit(), f)
}

/// `Qf = f⊛R`
pub fn q_map<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, f: &BimodMap<F>) -> Result<BimodMap<F>> {
    s.map_left(f, &s.unit())
}

/// `μ_M = (ε_R⊛M)∘γ_{R,R,M}: TTM → TM`
pub fn mu<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, m: &Obj<F>) -> Result<BimodMap<F>> {
    let r = s.unit();
    s.map_left(&s.eps(&r)?, m)?.compose(&s.gamma(&r, &r, m)?)
}

/// `δ_M = γ_{M,R,R}∘(M⊛η_R): QM → QQM`
pub fn delta<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, m: &Obj<F>) -> Result<BimodMap<F>> {
    let r = s.unit();
    s.gamma(m, &r, &r)?.compose(&s.map_right(m, &s.eta(&r)?)?)
}

/// the distributive law `χ_M = γ_{R,M,R}: TQM → QTM`
pub fn chi<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, m: &Obj<F>) -> Result<BimodMap<F>> {
    let r = s.unit();
    s.gamma(&r, m, &r)
}

/// `δ_{K,L} = γ_{K,R,L}∘(K⊛η_L): K⊛L → QK⊛L`
pub fn delta2<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, k: &Obj<F>, l: &Obj<F>) -> Result<BimodMap<F>> {
    s.gamma(k, &s.unit(), l)?.compose(&s.map_right(k, &s.eta(l)?)?)
}

/// `μ_{K,L} = (ε_K⊛L)∘γ_{K,R,L}: K⊛TL → K⊛L`
pub fn mu2<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, k: &Obj<F>, l: &Obj<F>) -> Result<BimodMap<F>> {
    s.map_left(&s.eps(k)?, l)?.compose(&s.gamma(k, &s.unit(), l)?)
}

/// `σ_{L,M,N} = ((L⊛M)⊛η_N)∘γ_{L,M,N}∘(ε_L⊛(M⊛N)): QL⊛(M⊛N) → (L⊛M)⊛TN`
pub fn sigma<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
    let lm = s.product(l, m)?;
    let mn = s.product(m, n)?;
    BimodMap::chain(&[&s.map_right(&lm, &s.eta(n)?)?, &s.gamma(l, m, n)?, &s.map_left(&s.eps(l)?, &mn)?])
}

/// monad laws of `T` on probe objects
pub fn check_monad<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    par_report(&p.objects, |n| {
        let mut rep = Report::new();
        let subject = tuple_label(&[n]);
        rep.equal_with(SMC10, &subject, || {
            let tn = t_obj(s, n)?;
            Ok((comp(&[&mu(s, n)?, &s.eta(&tn)?])?, tn.identity().mat))
        });
        rep.equal_with(SMC11, &subject, || {
            let tn = t_obj(s, n)?;
            Ok((comp(&[&mu(s, n)?, &t_map(s, &s.eta(n)?)?])?, tn.identity().mat))
        });
        rep.equal_with(MONAD_ASSOC, &subject, || {
            let tn = t_obj(s, n)?;
            let lhs = comp(&[&mu(s, n)?, &t_map(s, &mu(s, n)?)?])?;
            let rhs = comp(&[&mu(s, n)?, &mu(s, &tn)?])?;
            Ok((lhs, rhs))
        });
        rep
    })
    .sorted()
}

/// comonad laws of `Q` on probe objects
pub fn check_comonad<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    par_report(&p.objects, |m| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m]);
        rep.equal_with(SMC12, &subject, || {
            let qm = q_obj(s, m)?;
            Ok((comp(&[&s.eps(&qm)?, &delta(s, m)?])?, qm.identity().mat))
        });
        rep.equal_with(SMC13, &subject, || {
            let qm = q_obj(s, m)?;
            Ok((comp(&[&q_map(s, &s.eps(m)?)?, &delta(s, m)?])?, qm.identity().mat))
        });
        rep.equal_with(COMONAD_COASSOC, &subject, || {
            let qm = q_obj(s, m)?;
            let lhs = comp(&[&q_map(s, &delta(s, m)?)?, &delta(s, m)?])?;
            let rhs = comp(&[&delta(s, &qm)?, &delta(s, m)?])?;
            Ok((lhs, rhs))
        });
        rep
    })
    .sorted()
}

/// the four distributive-law equations for `χ`
pub fn check_distributive_law<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    par_report(&p.objects, |m| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m]);
        rep.equal_with(SMC14, &subject, || {
            let tm = t_obj(s, m)?;
            let qm = q_obj(s, m)?;
            let lhs = comp(&[&q_map(s, &mu(s, m)?)?, &chi(s, &tm)?, &t_map(s, &chi(s, m)?)?])?;
            let rhs = comp(&[&chi(s, m)?, &mu(s, &qm)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(SMC15, &subject, || {
            let tm = t_obj(s, m)?;
            let qm = q_obj(s, m)?;
            let lhs = comp(&[&q_map(s, &chi(s, m)?)?, &chi(s, &qm)?, &t_map(s, &delta(s, m)?)?])?;
            let rhs = comp(&[&delta(s, &tm)?, &chi(s, m)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(SMC16, &subject, || {
            let qm = q_obj(s, m)?;
            Ok((comp(&[&chi(s, m)?, &s.eta(&qm)?])?, q_map(s, &s.eta(m)?)?.mat))
        });
        rep.equal_with(SMC17, &subject, || {
            let tm = t_obj(s, m)?;
            Ok((comp(&[&s.eps(&tm)?, &chi(s, m)?])?, t_map(s, &s.eps(m)?)?.mat))
        });
        rep
    })
    .sorted()
}

/// (co)unit and (co)associativity relations of the two-argument maps
pub fn check_two_arg<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    par_report(&p.pairs(), |(k, l)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[k, l]);
        rep.equal_with(DELTA2_COASSOC, &subject, || {
            let qk = q_obj(s, k)?;
            let lhs = comp(&[&delta2(s, &qk, l)?, &delta2(s, k, l)?])?;
            let rhs = comp(&[&s.map_left(&delta(s, k)?, l)?, &delta2(s, k, l)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(DELTA2_COUNIT, &subject, || {
            Ok((comp(&[&s.map_left(&s.eps(k)?, l)?, &delta2(s, k, l)?])?, s.id2(k, l)?.mat))
        });
        rep.equal_with(MU2_ASSOC, &subject, || {
            let tl = t_obj(s, l)?;
            let lhs = comp(&[&mu2(s, k, l)?, &mu2(s, k, &tl)?])?;
            let rhs = comp(&[&mu2(s, k, l)?, &s.map_right(k, &mu(s, l)?)?])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(MU2_UNIT, &subject, || {
            Ok((comp(&[&mu2(s, k, l)?, &s.map_right(k, &s.eta(l)?)?])?, s.id2(k, l)?.mat))
        });
        rep
    })
    .sorted()
}

/// `μ_{QM,N}∘δ_{M,TN} = γ_{M,R,N}` on probe pairs
pub fn check_galois_identity<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        rep.equal_with(GALOIS_IDENTITY, &tuple_label(&[m, n]), || {
            let qm = q_obj(s, m)?;
            let tn = t_obj(s, n)?;
            let lhs = comp(&[&mu2(s, &qm, n)?, &delta2(s, m, &tn)?])?;
            Ok((lhs, s.gamma(m, &s.unit(), n)?.mat))
        });
        rep
    })
    .sorted()
}

/// both paths of the compatibility diagram at `R`, and the `χ` second row
pub fn check_compatibility_diagram<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S) -> Report {
    let r = s.unit();
    let subject = tuple_label(&[&r]);
    let mut rep = Report::new();
    rep.equal_with(COMPAT_DIAGRAM, &subject, || {
        let top = comp(&[&delta(s, &r)?, &mu(s, &r)?])?;
        let tr = t_obj(s, &r)?;
        let qr = q_obj(s, &r)?;
        let ttr = t_obj(s, &tr)?;
        let qqr = q_obj(s, &qr)?;
        let bottom = comp(&[
            &q_map(s, &mu(s, &r)?)?,
            &mu2(s, &ttr, &r)?,
            &sigma(s, &r, &tr, &r)?,
            &delta2(s, &r, &qqr)?,
            &t_map(s, &delta(s, &r)?)?,
        ])?;
        Ok((top, bottom))
    });
    rep.equal_with(COMPAT_SECOND_ROW, &subject, || {
        let top = comp(&[&delta(s, &r)?, &mu(s, &r)?])?;
        let tr = t_obj(s, &r)?;
        let row = comp(&[&q_map(s, &mu(s, &r)?)?, &s.gamma(&r, &tr, &r)?, &t_map(s, &delta(s, &r)?)?])?;
        Ok((top, row))
    });
    rep
}

/// whether `δ_R∘μ_R` differs from `γ_{R,R,R}`, the naive coherence that fails in general
pub fn naive_coherence_fails<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S) -> Result<bool> {
    let r = s.unit();
    let lhs = comp(&[&delta(s, &r)?, &mu(s, &r)?])?;
    Ok(lhs != s.gamma(&r, &r, &r)?.mat)
}

/// the full derived suite: monad, comonad, distributive law, two-argument maps,
/// Galois identity and compatibility diagram
pub fn check_derived<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    let mut rep = check_monad(s, p);
    rep.extend(check_comonad(s, p));
    rep.extend(check_distributive_law(s, p));
    rep.extend(check_two_arg(s, p));
    rep.extend(check_galois_identity(s, p));
    rep.extend(check_compatibility_diagram(s));
    rep.sorted()
}
