use std::sync::Arc;

use super::*;
use crate::bialgebroid::{b1, b2, b3, b4, default_probes, InducedSkewMon, RightBialgebroid};
use crate::ebimod::{check_tq_as_tensor, tq_as_tensor, QuotientStructure};
use crate::exactlin::PrimeField;
use crate::ringmod::{Algebra, BimodMap, Bimodule, Obj};
use crate::skewcat::{check_smc, check_smc_axioms, mu2, BimodTensor, ProbeSet, SkewMonoidal};

type P = PrimeField;

fn f3() -> P {
    PrimeField::new(3).unwrap()
}

fn vect() -> (Arc<BimodTensor<P>>, ProbeSet<P>) {
    let k = Arc::new(Algebra::ground(&f3()));
    let t = Arc::new(BimodTensor::new(k.clone()));
    let r = t.unit();
    let r2: Obj<P> = Arc::new(Bimodule::free_right(&k, 2).relabel("R²"));
    let probes = ProbeSet::with_hom_bases(vec![r, r2]).unwrap().thin_maps(4);
    (t, probes)
}

fn induced(b: RightBialgebroid<P>) -> Arc<InducedSkewMon<P>> {
    Arc::new(InducedSkewMon::new(Arc::new(b)))
}

fn ambient_of(ind: &Arc<InducedSkewMon<P>>) -> (Ambient<P>, Arc<BimodTensor<P>>) {
    let tensor = Arc::new(BimodTensor::new(ind.bialgebroid().base().clone()));
    (Ambient::new(ind.clone(), tensor.clone()).unwrap(), tensor)
}

fn bumped(w: Family2<P>) -> Family2<P> {
    Arc::new(move |m: &Obj<P>, n: &Obj<P>| {
        let mut x = w(m, n)?;
        let f = *x.mat.field();
        let v = f.add(x.mat.get(0, 0), &f.one());
        x.mat.set(0, 0, v);
        Ok(x)
    })
}

#[test]
fn identity_bimonad_passes_everything() {
    let (t, p) = vect();
    let o: Arc<dyn Bimonad<P>> = Arc::new(IdentityBimonad { tensor: t.clone() });
    let rep = check_bimonad(&*o, &*t, &p);
    assert!(rep.all_passed(), "{rep}");
    let h = fusion_from_bimonad(o.clone(), t.clone());
    assert!(check_fusion(&*h, &*t, &p).all_passed());
    for (m, n) in p.pairs() {
        assert!(h.h(&m, &n).unwrap().mat.is_identity());
    }
    assert!(check_roundtrip_from_bimonad(o.clone(), t.clone(), &p).all_passed());
    assert!(check_roundtrip_from_fusion(h, t.clone(), &p).all_passed());
}

#[test]
fn identity_bimonad_induces_the_tensor_product() {
    let (t, p) = vect();
    let odot = induced_structure_from_bimonad(Arc::new(IdentityBimonad { tensor: t.clone() }), t.clone());
    for [l, m, n] in p.triples() {
        assert_eq!(odot.product(&m, &n).unwrap().fingerprint(), t.product(&m, &n).unwrap().fingerprint());
        assert_eq!(odot.gamma(&l, &m, &n).unwrap().mat, t.gamma(&l, &m, &n).unwrap().mat);
    }
    assert!(check_smc(&*odot, &p).all_passed());
    assert!(check_unit_monad_morphism(&odot, &p).all_passed());
}

#[test]
fn group_algebra_bimonad_passes_and_a_bad_counit_fails_opmon7() {
    let b = Arc::new(b2());
    let (_, p) = vect();
    let o = Arc::new(TensorBialgebra::new(b).unwrap());
    let t = o.tensor();
    let rep = check_bimonad(&*o, &*t, &p);
    assert!(rep.all_passed(), "{rep}");
    let bad = CorruptedBimonad {
        inner: o.clone(),
        part: BimonadPart::Counit,
    };
    let failed = check_bimonad(&bad, &*t, &p).failed_ids();
    assert!(failed.contains(OPMON7.id), "{failed:?}");
    let bad = CorruptedBimonad {
        inner: o,
        part: BimonadPart::Comult,
    };
    assert!(!check_bimonad(&bad, &*t, &p).all_passed());
}

#[test]
fn group_algebra_fusion_roundtrips_and_mutations() {
    let (_, p) = vect();
    let o = Arc::new(TensorBialgebra::new(Arc::new(b2())).unwrap());
    let t: Arc<dyn SkewMonoidal<P>> = o.tensor();
    let h: Arc<dyn Fusion<P>> = fusion_from_bimonad(o.clone(), t.clone());
    assert!(check_fusion(&*h, &*t, &p).all_passed());
    assert!(check_roundtrip_from_bimonad(o.clone(), t.clone(), &p).all_passed());
    assert!(check_roundtrip_from_fusion(h.clone(), t.clone(), &p).all_passed());

    let bump = MutatedFusion {
        inner: h.clone(),
        tensor: t.clone(),
        kind: FusionMutation::Bump,
    };
    assert!(check_fusion(&bump, &*t, &p).failed_ids().contains(H5.id));

    let off: Arc<dyn Fusion<P>> = Arc::new(MutatedFusion {
        inner: h,
        tensor: t.clone(),
        kind: FusionMutation::OffImage,
    });
    let rep = check_roundtrip_from_fusion(off.clone(), t.clone(), &p);
    let bad: Vec<_> = rep.failures().collect();
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|r| r.witness.as_ref().is_some_and(|w| w.rhs.is_some())));
    assert!(check_fusion(&*off, &*t, &p).failed_ids().contains(H0.id));
}

#[test]
fn group_algebra_odot_is_right_monoidal_of_the_expected_size() {
    let (_, p) = vect();
    let o = Arc::new(TensorBialgebra::new(Arc::new(b2())).unwrap());
    let odot = induced_structure_from_bimonad(o.clone(), o.tensor());
    for (m, n) in p.pairs() {
        assert_eq!(odot.product(&m, &n).unwrap().dim(), m.dim() * n.dim() * 2);
    }
    let rep = check_smc(&*odot, &p);
    assert!(rep.all_passed(), "{rep}");
    assert!(check_unit_monad_morphism(&odot, &p).all_passed());
}

#[test]
fn tensor_as_its_own_skew_structure_is_representable() {
    let (t, p) = vect();
    let amb = Ambient::new(t.clone(), t.clone()).unwrap();
    let w = trivial_w(&amb);
    let tet = tet_from_w(&amb, w.clone());
    for [l, m, n] in p.triples() {
        assert_eq!(tet(&l, &m, &n).unwrap().mat, t.gamma(&l, &m, &n).unwrap().mat);
    }
    let (rep, status) = check_tetrahedral(&amb, &tet, &p);
    assert_eq!(status, TetStatus::Isomorphism, "{rep}");
    let cert = representability_pipeline(&amb, w, &p);
    assert!(cert.is_representable(), "{}", cert.verdict);
    let tw = cert.bimonad.unwrap();
    for (m, n) in p.pairs() {
        // T = R⊗− carries the coherence isomorphisms as its comonoidal structure
        assert!(tw.o2(&m, &n).unwrap().is_iso());
    }
}

#[test]
fn canonical_w_satisfies_heptagon_and_tetragon_and_a_bumped_one_does_not() {
    let ind = induced(b2());
    let (amb, tensor) = ambient_of(&ind);
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    let w = canonical_w(ind.clone(), tensor);
    let rep = check_heptagon_tetragon(&amb, &w, &p);
    assert!(rep.all_passed(), "{rep}");
    assert!(check_roundtrip_from_w(&amb, &w, &p).all_passed());
    let failed = check_heptagon_tetragon(&amb, &bumped(w), &p).failed_ids();
    assert!(failed.contains(HEPTAGON.id), "{failed:?}");
}

#[test]
fn gamma_of_a_skew_structure_is_only_a_tetrahedral_homomorphism() {
    let ind = induced(b2());
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    // ⊛ against itself: every law reduces to a skew-monoidal axiom, but w = μ₂ is not invertible
    let amb = Ambient {
        skew: ind.clone(),
        tensor: ind.clone(),
    };
    let (rep, status) = check_tetrahedral(&amb, &gamma_as_tet(ind.clone()), &p);
    assert_eq!(status, TetStatus::HomomorphismOnly, "{rep}");
    let w = w_from_tet(&amb, gamma_as_tet(ind.clone()));
    let r = ind.unit();
    assert_eq!(w(&r, &r).unwrap().mat, mu2(&*ind, &r, &r).unwrap().mat);
}

#[test]
fn bialgebroids_over_the_ground_field_are_representable() {
    for b in [b1(), b2(), b3()] {
        let name = b.name().to_string();
        let setup = bialgebroid_setup(Arc::new(b), 4).unwrap();
        let cert = representability_pipeline(&setup.amb, setup.w, &setup.probes);
        assert!(cert.is_representable(), "{name}: {}", cert.verdict);
        assert_eq!(cert.steps.len(), 6);
        assert!(cert.report.all_passed());
    }
}

#[test]
fn non_hopf_instance_has_non_invertible_gamma_yet_is_representable() {
    let ind = induced(b3());
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    let singular = p.triples().iter().any(|[l, m, n]| !ind.gamma(l, m, n).unwrap().is_iso());
    assert!(singular);
    let setup = bialgebroid_setup(ind.bialgebroid().clone(), 4).unwrap();
    assert!(representability_pipeline(&setup.amb, setup.w, &setup.probes).is_representable());
}

#[test]
fn t_from_w_recovers_the_group_algebra_bimonad() {
    let ind = induced(b2());
    let (amb, tensor) = ambient_of(&ind);
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    let o = Arc::new(TensorBialgebra::new(ind.bialgebroid().clone()).unwrap());
    let v = bialgebra_twist(ind.clone(), o.clone());
    let odot = induced_structure_from_bimonad(o.clone(), o.tensor());
    assert!(check_twist(&amb, &v, &*odot, &p).all_passed());

    // w built from the twist is the canonical one
    let w = w_from_twist(&amb, o.clone(), v.clone());
    let canon = canonical_w(ind.clone(), tensor);
    for (m, n) in p.pairs() {
        assert_eq!(w(&m, &n).unwrap().mat, canon(&m, &n).unwrap().mat);
    }

    // φ_N = v_{R,N}∘luni⁻¹_{ON}: ON → TN intertwines the comonoidal structures
    let tw = opmonoidal_t_from_w(&amb, w);
    let r = amb.unit();
    let phi = |n: &Obj<P>| -> BimodMap<P> {
        let on = o.obj(n).unwrap();
        v(&r, n).unwrap().compose(&amb.luni_inv(&on).unwrap()).unwrap()
    };
    for (m, n) in p.pairs() {
        let mn = amb.tensor.product(&m, &n).unwrap();
        let lhs = tw.o2(&m, &n).unwrap().compose(&phi(&mn)).unwrap();
        let rhs = amb.tensor.product_map(&phi(&m), &phi(&n)).unwrap().compose(&o.o2(&m, &n).unwrap()).unwrap();
        assert_eq!(lhs.mat, rhs.mat);
        assert!(phi(&m).is_iso());
    }
    assert_eq!(tw.o0().unwrap().compose(&phi(&r)).unwrap().mat, o.o0().unwrap().mat);
}

#[test]
fn enveloping_bialgebroid_quotient_is_representable_by_tq() {
    let b = Arc::new(b4());
    let setup = bialgebroid_setup(b.clone(), 3).unwrap();
    let cert = representability_pipeline(&setup.amb, setup.w.clone(), &setup.probes);
    assert!(cert.is_representable(), "{}", cert.verdict);
    let tw = cert.bimonad.unwrap();
    let odot = cert.induced.unwrap();
    assert!(check_smc_axioms(&*odot, &setup.probes).all_passed());

    // the emitted T is −⊗_{R^e}H: compare with the amalgamated tensor product
    let qs = QuotientStructure::new(Arc::new(InducedSkewMon::new(b)));
    assert!(check_tq_as_tensor(&qs, &setup.probes.objects, &setup.probes.maps).all_passed());
    for n in &setup.probes.objects {
        let g = tq_as_tensor(&qs, n).unwrap();
        assert_eq!(g.rows(), tw.obj(n).unwrap().dim());
        assert!(g.is_invertible());
    }
}

#[test]
fn bumped_w_is_not_verified_at_the_first_step() {
    let setup = bialgebroid_setup(Arc::new(b2()), 4).unwrap();
    let cert = representability_pipeline(&setup.amb, bumped(setup.w), &setup.probes);
    match &cert.verdict {
        Verdict::NotVerified { step, .. } => assert_eq!(step, STEP_HEPTAGON),
        v => panic!("{v}"),
    }
    assert!(cert.bimonad.is_none());
}

#[test]
fn t0_is_the_counit_of_r() {
    let setup = bialgebroid_setup(Arc::new(b2()), 4).unwrap();
    let tw = opmonoidal_t_from_w(&setup.amb, setup.w);
    assert!(check_t0(&tw).all_passed());
    let r = setup.amb.unit();
    assert_eq!(tw.o0().unwrap().mat, setup.amb.skew.eps(&r).unwrap().mat);
}

#[test]
fn tensor_product_is_corepresentable() {
    let (t, p) = vect();
    let amb = Ambient::new(t.clone(), t.clone()).unwrap();
    let cert = corepresentability_by_duality(&amb, flip_w(t.clone()), &p).unwrap();
    assert!(cert.is_corepresentable(), "{}", cert.dual.verdict);
    let r = amb.unit();
    assert!(cert.q0().unwrap().is_iso());
    assert_eq!(cert.q0().unwrap().mat, amb.skew.eta(&r).unwrap().mat);
}

#[test]
fn group_algebra_corepresentability_matches_the_direct_formula() {
    let ind = induced(b2());
    let (amb, tensor) = ambient_of(&ind);
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    let w = swap_w(ind.clone(), tensor, false);
    let cert = corepresentability_by_duality(&amb, w.clone(), &p).unwrap();
    assert!(cert.is_corepresentable(), "{}", cert.dual.verdict);
    for (m, n) in p.pairs() {
        let direct = monoidal_q_from_w(&amb, &w, &m, &n).unwrap();
        assert_eq!(cert.q2(&m, &n).unwrap().mat, direct.mat);
    }
    let r = amb.unit();
    assert_eq!(cert.q0().unwrap().mat, ind.eta(&r).unwrap().mat);
}

#[test]
fn degenerate_dual_candidate_is_not_verified() {
    let ind = induced(b2());
    let (amb, tensor) = ambient_of(&ind);
    let p = default_probes(ind.bialgebroid(), 4).unwrap();
    let cert = corepresentability_by_duality(&amb, swap_w(ind, tensor, true), &p).unwrap();
    assert!(!cert.is_corepresentable());
    assert!(cert.dual.report.failed_ids().contains(W_INVERTIBLE.id));
    assert!(cert.q2(&amb.unit(), &amb.unit()).is_err());
}

#[test]
fn dual_of_the_dual_tensor_is_the_tensor() {
    let (t, p) = vect();
    let d = OpInv { inner: OpInv { inner: t.clone() } };
    for [l, m, n] in p.triples() {
        assert_eq!(d.gamma(&l, &m, &n).unwrap().mat, t.gamma(&l, &m, &n).unwrap().mat);
    }
    assert!(check_smc(&OpInv { inner: t }, &dual_probes(&p)).all_passed());
}
