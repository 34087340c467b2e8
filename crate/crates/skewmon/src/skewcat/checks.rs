use crate::exactlin::Field;
use crate::report::Report;
use crate::ringmod::BimodMap;

use super::*;

/// the five axioms on all probe tuples
pub fn check_smc_axioms<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    let r = s.unit();
    let mut rep = par_report(&p.quadruples(), |[k, l, m, n]| {
        let mut rep = Report::new();
        rep.equal_with(SMC1, &tuple_label(&[k, l, m, n]), || {
            let lm = s.product(l, m)?;
            let lhs = comp(&[
                &s.map_left(&s.gamma(k, l, m)?, n)?,
                &s.gamma(k, &lm, n)?,
                &s.map_right(k, &s.gamma(l, m, n)?)?,
            ])?;
            let kl = s.product(k, l)?;
            let mn = s.product(m, n)?;
            let rhs = comp(&[&s.gamma(&kl, m, n)?, &s.gamma(k, l, &mn)?])?;
            Ok((lhs, rhs))
        });
        rep
    });
    rep.extend(par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        let subject = tuple_label(&[m, n]);
        rep.equal_with(SMC2, &subject, || {
            let mn = s.product(m, n)?;
            Ok((comp(&[&s.gamma(&r, m, n)?, &s.eta(&mn)?])?, s.map_left(&s.eta(m)?, n)?.mat))
        });
        rep.equal_with(SMC3, &subject, || {
            let mn = s.product(m, n)?;
            Ok((comp(&[&s.eps(&mn)?, &s.gamma(m, n, &r)?])?, s.map_right(m, &s.eps(n)?)?.mat))
        });
        rep.equal_with(SMC4, &subject, || {
            let lhs = comp(&[&s.map_left(&s.eps(m)?, n)?, &s.gamma(m, &r, n)?, &s.map_right(m, &s.eta(n)?)?])?;
            Ok((lhs, s.id2(m, n)?.mat))
        });
        rep
    }));
    rep.equal_with(SMC5, &tuple_label(&[&r]), || Ok((comp(&[&s.eps(&r)?, &s.eta(&r)?])?, r.identity().mat)));
    rep.sorted()
}

/// naturality of `γ`, `η`, `ε` and bifunctoriality of the product on probe arrows
pub fn check_naturality<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    let r = s.unit();
    let mut rep = par_report(&p.maps, |f| {
        let mut rep = Report::new();
        let (a, b) = (&f.source, &f.target);
        let name = format!("{}→{}", a.label(), b.label());
        rep.equal_with(NAT_ETA, &name, || {
            let lhs = comp(&[&s.map_right(&r, f)?, &s.eta(a)?])?;
            let rhs = comp(&[&s.eta(b)?, f])?;
            Ok((lhs, rhs))
        });
        rep.equal_with(NAT_EPS, &name, || {
            let lhs = comp(&[f, &s.eps(a)?])?;
            let rhs = comp(&[&s.eps(b)?, &s.map_left(f, &r)?])?;
            Ok((lhs, rhs))
        });
        for (m, n) in p.pairs() {
            let subject = |slot: usize| {
                let mut names = vec![m.label().to_string(), n.label().to_string()];
                names.insert(slot, format!("[{name}]"));
                format!("({})", names.join(","))
            };
            // first slot
            rep.equal_with(NAT_GAMMA, &subject(0), || {
                let mn = s.product(&m, &n)?;
                let lhs = comp(&[&s.gamma(b, &m, &n)?, &s.map_left(f, &mn)?])?;
                let rhs = comp(&[&s.map_left(&s.map_left(f, &m)?, &n)?, &s.gamma(a, &m, &n)?])?;
                Ok((lhs, rhs))
            });
            // middle slot
            rep.equal_with(NAT_GAMMA, &subject(1), || {
                let lhs = comp(&[&s.gamma(&m, b, &n)?, &s.map_right(&m, &s.map_left(f, &n)?)?])?;
                let rhs = comp(&[&s.map_left(&s.map_right(&m, f)?, &n)?, &s.gamma(&m, a, &n)?])?;
                Ok((lhs, rhs))
            });
            // last slot
            rep.equal_with(NAT_GAMMA, &subject(2), || {
                let lhs = comp(&[&s.gamma(&m, &n, b)?, &s.map_right(&m, &s.map_right(&n, f)?)?])?;
                let mn = s.product(&m, &n)?;
                let rhs = comp(&[&s.map_right(&mn, f)?, &s.gamma(&m, &n, a)?])?;
                Ok((lhs, rhs))
            });
        }
        rep
    });
    rep.extend(par_report(&p.pairs(), |(m, n)| {
        let mut rep = Report::new();
        rep.equal_with(BIFUNCTOR_ID, &tuple_label(&[m, n]), || {
            Ok((s.product_map(&m.identity(), &n.identity())?.mat, s.id2(m, n)?.mat))
        });
        rep
    }));
    // composable pairs of probe arrows, tensored with a probe arrow on the other side
    let mut composable: Vec<(&BimodMap<F>, &BimodMap<F>)> = Vec::new();
    for f in &p.maps {
        for g in &p.maps {
            if g.target.fingerprint() == f.source.fingerprint() {
                composable.push((f, g));
            }
        }
    }
    let step = composable.len().div_ceil(24).max(1);
    let composable: Vec<_> = composable.into_iter().step_by(step).collect();
    rep.extend(par_report(&composable, |(f, g)| {
        let mut rep = Report::new();
        let subject = format!("{}→{}→{}", g.source.label(), g.target.label(), f.target.label());
        rep.equal_with(BIFUNCTOR_COMP, &subject, || {
            let fg = f.compose(g)?;
            let lhs = s.product_map(&fg, &fg)?.mat;
            let rhs = comp(&[&s.product_map(f, f)?, &s.product_map(g, g)?])?;
            Ok((lhs, rhs))
        });
        rep
    }));
    rep.sorted()
}

/// axioms, naturality and bifunctoriality
pub fn check_smc<F: Field, S: SkewMonoidal<F> + ?Sized>(s: &S, p: &ProbeSet<F>) -> Report {
    let mut rep = check_smc_axioms(s, p);
    rep.extend(check_naturality(s, p));
    rep.sorted()
}
