use std::sync::Arc;

use super::*;
use crate::bialgebroid::{b1, b2, b4, InducedSkewMon, RightBialgebroid};
use crate::exactlin::{Field, Mat, PrimeField};
use crate::ringmod::{hom_over, BimodMap, Bimodule, Obj};
use crate::skewcat::{check_smc, delta, mu, Corrupted, Part, ProbeSet, SkewMonoidal};

type Ind = Arc<InducedSkewMon<PrimeField>>;

fn induced(b: RightBialgebroid<PrimeField>) -> Ind {
    Arc::new(InducedSkewMon::new(Arc::new(b)))
}

fn regular(s: &Ind) -> Obj<PrimeField> {
    Arc::new(Bimodule::regular(s.bialgebroid().base()))
}

fn e_probes(s: &Ind) -> Vec<EObject<PrimeField>> {
    let r = EObject::unit(s);
    let rr = product_actions(s, &r, &r).unwrap();
    vec![r, EObject::left(rr.obj.clone(), rr.lambdas[0].clone())]
}

#[test]
fn lambda_rho_table_holds() {
    for b in [b1(), b2(), b4()] {
        let s = induced(b);
        let rep = check_lambda_rho_table(&s, &e_probes(&s));
        assert!(rep.all_passed(), "{}: {rep}", s.name());
    }
}

#[test]
fn product_actions_form_e_objects() {
    let s = induced(b4());
    let e = e_algebra(&s);
    let r = EObject::unit(&s);
    let rr = product_actions(&s, &r, &r).unwrap();
    let rrr = product_actions(&s, &r, &rr).unwrap();
    assert_eq!(rrr.kind(), (3, 2));
    assert!(check_e_object(&e, &rr, "R⊛R").all_passed());
    assert!(check_e_object(&e, &rrr, "R⊛(R⊛R)").all_passed());
}

#[test]
fn corrupted_unit_breaks_the_table() {
    let s = Corrupted {
        inner: induced(b4()),
        part: Part::Eta,
    };
    let probes = vec![EObject::unit(&s)];
    let failed = check_lambda_rho_table(&s, &probes).failed_ids();
    assert!(!failed.is_empty());
}

#[test]
fn quotient_of_the_unit() {
    let s = induced(b4());
    let r = EObject::unit(&s);
    let (q, co) = quotient(&s, &r, &r).unwrap();
    assert_eq!(q.obj.dim(), 2);
    assert_eq!(co.dim(), 2);
    let qs = QuotientStructure::new(s.clone());
    let k = qs.kappa(&qs.unit()).unwrap();
    assert_eq!(k.mat.rank(), k.mat.rows());
    assert_eq!(qs.product(&qs.unit(), &qs.unit()).unwrap().dim(), 2);
}

#[test]
fn theta_is_equivariant() {
    let s = induced(b4());
    let r = EObject::unit(&s);
    let (th, rep) = theta(&s, &r, &r).unwrap();
    assert!(rep.all_passed(), "{rep}");
    // H is commutative, so the center is all of R⊛R
    assert_eq!(th.shape(), (2, 4));
}

#[test]
fn quotient_and_center_structures_are_skew_monoidal() {
    for b in [b2(), b4()] {
        let s = induced(b);
        let qs = QuotientStructure::new(s.clone());
        let p = ProbeSet::with_hom_bases(vec![qs.unit(), regular(&s)]).unwrap();
        let rep = check_smc(&qs, &p);
        assert!(rep.all_passed(), "{}: {rep}", qs.name());
        let rep = check_quotient_functor(&qs, &p);
        assert!(rep.all_passed(), "{}: {rep}", qs.name());

        let cs = CenterStructure::new(s.clone());
        let p = ProbeSet::with_hom_bases(vec![cs.unit(), regular(&s)]).unwrap();
        let rep = check_smc(&cs, &p);
        assert!(rep.all_passed(), "{}: {rep}", cs.name());
        let rep = check_center_functor(&cs, &p);
        assert!(rep.all_passed(), "{}: {rep}", cs.name());
    }
}

#[test]
fn free_module_and_comodule() {
    let s = induced(b4());
    let r = s.unit();
    let (tr, nabla) = free_tmodule(&s, &r).unwrap();
    assert!(check_tmodule(&s, &tr, &nabla).all_passed());
    let (qr, coaction) = free_qcomodule(&s, &r).unwrap();
    assert!(check_qcomodule(&s, &qr, &coaction).all_passed());
    assert!(check_split_equalizer(&s, &qr, &coaction).all_passed());
    // the induced action on a free module is the action of the first factor
    let act = t_induced_action(&s, &tr, &nabla).unwrap();
    let rr = product_actions(&s, &EObject::unit(&s), &EObject::unit(&s)).unwrap();
    assert_eq!(act, rr.lambdas[0]);
    assert!(check_induced_action(&s, &tr, &act, &[]).all_passed());
}

/// `(R⊛R, μ_R, δ_R)`
fn entwined_square(s: &Ind) -> (Obj<PrimeField>, Mat<PrimeField>, Mat<PrimeField>) {
    let r = s.unit();
    let (x, nabla) = free_tmodule(s, &r).unwrap();
    (x, nabla, delta(s, &r).unwrap().mat)
}

#[test]
fn free_square_is_entwined() {
    for b in [b1(), b2(), b4()] {
        let s = induced(b);
        let (x, nabla, coaction) = entwined_square(&s);
        let rep = check_entwined(&s, &x, &nabla, &coaction);
        assert!(rep.all_passed(), "{}: {rep}", s.name());
    }
}

#[test]
fn trivial_module_is_not_entwined_over_a_group() {
    // k with trivial action and coaction is not a Hopf module over k[C2]
    let s = induced(b2());
    let r = s.unit();
    let nabla = s.eps(&r).unwrap().mat;
    let coaction = s.eta(&r).unwrap().mat;
    let rep = check_entwined(&s, &r, &nabla, &coaction);
    assert!(check_tmodule(&s, &r, &nabla).all_passed());
    assert!(check_qcomodule(&s, &r, &coaction).all_passed());
    assert_eq!(rep.failed_ids().into_iter().collect::<Vec<_>>(), vec![ENTWINED.id.to_string()]);
}

#[test]
fn broken_coaction_is_caught() {
    let s = induced(b4());
    let (qr, coaction) = free_qcomodule(&s, &s.unit()).unwrap();
    let f = *coaction.field();
    let bad = coaction.scale(&f.zero());
    let failed = check_qcomodule(&s, &qr, &bad).failed_ids();
    assert!(failed.contains(COACT2.id), "{failed:?}");
}

#[test]
fn actions_and_coactions_factor() {
    for b in [b2(), b4()] {
        let s = induced(b);
        let (x, nabla, coaction) = entwined_square(&s);
        let act = t_induced_action(&s, &x, &nabla).unwrap();
        let xe = EObject::left(x.clone(), act);
        let (_, q) = quotient(&s, &EObject::unit(&s), &xe).unwrap();
        let nq = factorize_action(&s, &xe, &nabla).unwrap();
        assert_eq!(nq.mul(&q.projection).unwrap(), nabla);

        let coact = q_induced_action(&s, &x, &coaction).unwrap();
        let l = EObject::left(x.clone(), coact);
        let (_, z) = center(&s, &l, &EObject::unit(&s)).unwrap();
        let dz = factorize_coaction(&s, &l, &coaction).unwrap();
        assert_eq!(z.inclusion.mul(&dz).unwrap(), coaction);
    }
}

#[test]
fn action_nonzero_on_a_relation_does_not_factor() {
    let s = induced(b4());
    let (x, nabla, _) = entwined_square(&s);
    let xe = EObject::left(x.clone(), t_induced_action(&s, &x, &nabla).unwrap());
    let (_, q) = quotient(&s, &EObject::unit(&s), &xe).unwrap();
    let rels = q.projection.kernel_basis();
    assert!(rels.cols() > 0);
    let k0 = rels.col(0);
    let f = *nabla.field();
    let j = k0.iter().position(|c| !f.is_zero(c)).unwrap();
    let mut bad = nabla.clone();
    let v = f.add(bad.get(0, j), &f.one());
    bad.set(0, j, v);
    assert!(factorize_action(&s, &xe, &bad).is_err());
}

#[test]
fn phi_q_on_free_modules() {
    let s = induced(b4());
    let qs = QuotientStructure::new(s.clone());
    let u = qs.unit();
    let samples = vec![free_tq_module(&qs, &u).unwrap(), free_tq_module(&qs, &regular(&s)).unwrap()];
    let rep = check_phi_q(&qs, &samples);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn tq_is_a_tensor_product() {
    for b in [b2(), b4()] {
        let s = induced(b);
        let qs = QuotientStructure::new(s.clone());
        let objs = vec![qs.unit(), regular(&s)];
        let maps: Vec<BimodMap<PrimeField>> = hom_over(&objs[1], &objs[1])
            .unwrap()
            .into_iter()
            .map(|m| BimodMap::new(m, objs[1].clone(), objs[1].clone()).unwrap())
            .collect();
        let rep = check_tq_as_tensor(&qs, &objs, &maps);
        assert!(rep.all_passed(), "{}: {rep}", s.name());
        let _ = mu(&qs, &objs[0]).unwrap();
    }
}
