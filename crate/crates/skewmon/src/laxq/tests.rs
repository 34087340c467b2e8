use std::sync::Arc;

use super::*;
use crate::bialgebroid::{b1, b2, b4, enveloping_bialgebroid, triangular, InducedSkewMon, RightBialgebroid};
use crate::ebimod::free_qcomodule;
use crate::exactlin::{Field, Mat, PrimeField};
use crate::report::Status;
use crate::ringmod::{Bimodule, Obj};
use crate::skewcat::{delta, SkewMonoidal};

type Ind = Arc<InducedSkewMon<PrimeField>>;

fn lax(b: RightBialgebroid<PrimeField>, n_max: usize) -> LaxQ<PrimeField, Ind> {
    LaxQ::new(Arc::new(InducedSkewMon::new(Arc::new(b))), n_max)
}

fn regular(q: &LaxQ<PrimeField, Ind>) -> Obj<PrimeField> {
    Arc::new(Bimodule::regular(q.inner.bialgebroid().base()).relabel("R"))
}

#[test]
fn decompose_small_maps() {
    assert!(decompose(&MonotoneMap::identity(3)).is_empty());
    let m = MonotoneMap::new(2, 1, vec![0, 0]).unwrap();
    assert_eq!(decompose(&m), vec![Elementary::Merge { i: 0, j: 0 }]);
    let m = MonotoneMap::new(3, 2, vec![0, 0, 1]).unwrap();
    assert_eq!(decompose(&m), vec![Elementary::Merge { i: 0, j: 1 }]);
    let m = MonotoneMap::new(0, 1, vec![]).unwrap();
    assert_eq!(decompose(&m), vec![Elementary::Insert { i: 0, j: 0 }]);
}

#[test]
fn decompose_recomposes_every_small_map() {
    for m in 0..=4 {
        for n in 0..=4 {
            for f in MonotoneMap::all(m, n) {
                let list = decompose(&f);
                assert_eq!(compose_all(m, &list).unwrap(), f, "{f}: {list:?}");
                // merges never follow insertions
                let first_insert = list.iter().position(|e| matches!(e, Elementary::Insert { .. })).unwrap_or(list.len());
                assert!(list[first_insert..].iter().all(|e| matches!(e, Elementary::Insert { .. })));
            }
        }
    }
}

#[test]
fn monotone_maps_are_counted_by_binomials() {
    // maps m → n correspond to multisets of size m from n values
    let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1));
    for m in 0..=4 {
        for n in 1..=4 {
            assert_eq!(MonotoneMap::all(m, n).len(), binom(n + m - 1, m));
        }
    }
    assert!(MonotoneMap::new(2, 2, vec![1, 0]).is_err());
}

#[test]
fn trivial_base_gives_identities() {
    let q = lax(b1(), 3);
    let r = regular(&q);
    for n in 0..=3 {
        assert_eq!(q.obj(&r, n).unwrap().dim(), 1);
        assert!(q.zeta(&r, n).unwrap().mat.is_identity());
        for i in 0..n {
            assert!(q.delta(&r, n, i).unwrap().mat.is_identity());
            assert!(q.eps(&r, n, i).unwrap().mat.is_identity());
        }
    }
    assert!(check_simplicial(&q, std::slice::from_ref(&r)).all_passed());
    assert!(check_lax_monoidal(&q, &[r]).all_passed());
}

#[test]
fn one_dimensional_e_degenerates_to_the_iterated_comonad() {
    let q = lax(b2(), 3);
    let r = regular(&q);
    let s = &q.inner;
    for n in 0..=3 {
        let z = q.zeta(&r, n).unwrap();
        assert!(z.mat.is_identity());
        assert_eq!(q.obj(&r, n).unwrap().dim(), 2usize.pow(n as u32));
    }
    // δⁿ_i is Q^iδQ^{n−i−1} itself
    for n in 1..=2 {
        for i in 0..n {
            let core = delta(s, &q.power(&r, n - i - 1).unwrap()).unwrap();
            let direct = q.power_map(&core, i).unwrap();
            assert_eq!(q.delta(&r, n, i).unwrap().mat, direct.mat);
        }
    }
    for n in 0..=1 {
        for m in 0..=1 {
            assert!(q.nu(&r, m, n).unwrap().mat.is_identity());
        }
    }
}

/// the joint kernel of `λ_i(e) − ρ_i(e)` over single basis elements
fn pairwise_equalizer_dim(q: &LaxQ<PrimeField, Ind>, m: &Obj<PrimeField>, n: usize) -> usize {
    let p = q.power_actions(m, n).unwrap();
    let f = m.field();
    let d = p.obj.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for (l, r) in p.lambdas[i].iter().zip(&p.rhos[i]) {
            rows.push(l.sub(r).unwrap());
        }
    }
    let refs: Vec<&Mat<PrimeField>> = rows.iter().collect();
    let stacked = if refs.is_empty() { Mat::zeros(f, 0, d) } else { Mat::vstack(f, d, &refs).unwrap() };
    d - stacked.rank()
}

/// the one-dimensional bimodule on which `e_i` acts on the left and `e_j` on the right
fn simple_bimodule(e: &Arc<crate::ringmod::Algebra<PrimeField>>, i: usize, j: usize) -> Obj<PrimeField> {
    let f = e.field();
    let act = |k: usize, at: usize| Mat::from_fn(f, 1, 1, |_, _| if k == at { f.one() } else { f.zero() });
    let left = (0..e.dim()).map(|k| act(k, i)).collect();
    let right = (0..e.dim()).map(|k| act(k, j)).collect();
    Arc::new(Bimodule::new(1, e.clone(), e.clone(), left, right, format!("S{i}{j}")).unwrap())
}

/// `{m : r·m = m·r}`
fn symmetric_part_dim(m: &Obj<PrimeField>) -> usize {
    let f = m.field();
    let rows: Vec<Mat<PrimeField>> = m.left().iter().zip(m.right()).map(|(l, r)| l.sub(r).unwrap()).collect();
    let refs: Vec<&Mat<PrimeField>> = rows.iter().collect();
    m.dim() - Mat::vstack(f, m.dim(), &refs).unwrap().rank()
}

#[test]
fn equalizer_dimensions_over_a_product_of_fields() {
    let q = lax(b4(), 2);
    let e = q.e_algebra().clone();
    let r = regular(&q);
    let r2: Obj<PrimeField> = Arc::new(Bimodule::regular(&e).direct_sum(&Bimodule::regular(&e)).unwrap().relabel("R²"));
    let simple = |i: usize, j: usize| simple_bimodule(&e, i, j);
    for m in [r, r2, simple(0, 1), simple(1, 0), simple(0, 0)] {
        for n in 0..=2 {
            let dim = q.obj(&m, n).unwrap().dim();
            assert_eq!(dim, pairwise_equalizer_dim(&q, &m, n), "{} n={n}", m.label());
            // over R^e the product is M⊗_k N, and the equalizer is M_sym⊗R^{⊗n}
            let expected = if n == 0 { m.dim() } else { symmetric_part_dim(&m) * 2usize.pow(n as u32) };
            assert_eq!(dim, expected, "{} n={n}", m.label());
        }
    }
}

fn law_probes(q: &LaxQ<PrimeField, Ind>) -> Vec<Obj<PrimeField>> {
    let e = q.e_algebra().clone();
    let mut out = vec![regular(q)];
    if e.dim() == 2 {
        out.extend([simple_bimodule(&e, 0, 0), simple_bimodule(&e, 0, 1)]);
    }
    out
}

#[test]
fn simplicial_and_lax_laws_hold() {
    for (b, n) in [(b1(), 3), (b2(), 3), (b4(), 3)] {
        let q = lax(b, n);
        let p = law_probes(&q);
        let rep = check_simplicial(&q, &p);
        assert!(rep.all_passed(), "{}: {rep}", q.inner.name());
        // 4 ζ checks and 26 composable pairs of elementary maps per probe
        assert_eq!(rep.count(Status::Pass), 30 * p.len());
        let rep = check_lax_monoidal(&q, &p);
        assert!(rep.all_passed(), "{}: {rep}", q.inner.name());
    }
}

#[test]
fn laws_hold_over_a_noncommutative_base() {
    let f = PrimeField::new(2).unwrap();
    let base = Arc::new(triangular(&f).unwrap());
    let q = lax(enveloping_bialgebroid(base).unwrap(), 2);
    let r = regular(&q);
    assert_eq!(q.obj(&r, 1).unwrap().dim(), pairwise_equalizer_dim(&q, &r, 1));
    assert!(q.zeta(&r, 1).unwrap().mat.cols() < q.power(&r, 1).unwrap().dim());
    let rep = check_simplicial(&q, std::slice::from_ref(&r));
    assert!(rep.all_passed(), "{rep}");
    let rep = check_lax_monoidal(&q, &[r]);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn free_comodule_lifts() {
    for b in [b2(), b4()] {
        let q = lax(b, 2);
        let s = &q.inner;
        let (x, coaction) = free_qcomodule(s, &s.unit()).unwrap();
        let rep = check_phi_hat(&q, &x, &coaction);
        assert!(rep.all_passed(), "{}: {rep}", s.name());
        let r = s.unit();
        let eta = s.eta(&r).unwrap().mat;
        let rep = check_phi_hat_full(&q, &[(x, coaction), (r, eta)]);
        assert!(rep.all_passed(), "{}: {rep}", s.name());
    }
}

#[test]
fn trivial_comodule_lifts_to_identities() {
    let q = lax(b1(), 3);
    let s = &q.inner;
    let r = s.unit();
    let eta = s.eta(&r).unwrap().mat;
    let c = phi_hat(&q, &r, &eta).unwrap();
    assert!(c.alphas.iter().all(|a| a.mat.is_identity()));
    assert!(check_laxcomodule(&q, &c).all_passed());
}

#[test]
fn corrupted_second_coaction_breaks_multiplicativity() {
    let q = lax(b4(), 2);
    let s = &q.inner;
    let (x, coaction) = free_qcomodule(s, &s.unit()).unwrap();
    let mut c = phi_hat(&q, &x, &coaction).unwrap();
    let f = *x.field();
    let a2 = &c.alphas[2];
    c.alphas[2] = crate::ringmod::BimodMap::new(a2.mat.scale(&f.zero()), a2.source.clone(), a2.target.clone()).unwrap();
    let failed = check_laxcomodule(&q, &c).failed_ids();
    assert!(failed.contains(LAXCOMOD_MULT.id), "{failed:?}");
}

fn monoidal(b: RightBialgebroid<PrimeField>, n_max: usize) -> MonoidalQ<PrimeField> {
    MonoidalQ::new(Arc::new(b), n_max)
}

#[test]
fn monoidal_structure_over_the_ground_field_is_trivial() {
    let mq = monoidal(b1(), 2);
    let r = mq.unit();
    for n in 0..=2 {
        assert!(mq.qn2(&r, &r, n).unwrap().mat.is_identity());
        assert!(mq.qn0(n).unwrap().mat.is_identity());
    }
    let rep = check_monoidal_qn(&mq, &[r]);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn first_level_over_a_group_algebra_is_multiplication() {
    let mq = monoidal(b2(), 2);
    let b = mq.bialgebroid().clone();
    let r = mq.unit();
    let m = mq.qn2(&r, &r, 1).unwrap();
    // π_1: H → Q_1R is invertible here, so (Q_1)_{R,R} is the product of H transported
    let pi = mq.pi(&r, 1).unwrap();
    assert!(pi.is_invertible());
    let lhs = m.mat.mul(&pi.kron(&pi).unwrap()).unwrap();
    let rhs = pi.mul(b.total().structure()).unwrap();
    assert_eq!(lhs, rhs);
    let r2: Obj<PrimeField> = Arc::new(r.direct_sum(&r).unwrap().relabel("R²"));
    let rep = check_monoidal_qn(&mq, &[r, r2]);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn monoidal_laws_over_a_product_of_fields() {
    let mq = monoidal(b4(), 2);
    let e = mq.lax.e_algebra().clone();
    let probes = vec![mq.unit(), simple_bimodule(&e, 0, 0), simple_bimodule(&e, 0, 1)];
    let rep = check_monoidal_qn(&mq, &probes);
    assert!(rep.all_passed(), "{rep}");
    let rep = check_hom_form(&mq, &probes, 2);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn monoidal_laws_over_a_noncommutative_base() {
    let f = PrimeField::new(2).unwrap();
    let base = Arc::new(triangular(&f).unwrap());
    let mq = monoidal(enveloping_bialgebroid(base).unwrap(), 1);
    let r = mq.unit();
    let rep = check_monoidal_qn(&mq, std::slice::from_ref(&r));
    assert!(rep.all_passed(), "{rep}");
    let rep = check_hom_form(&mq, &[r], 1);
    assert!(rep.all_passed(), "{rep}");
}

#[test]
fn nonmultiplicative_comultiplication_breaks_the_delta_square() {
    let b = b2();
    let f = *b.field();
    // Δ(g) = g⊗1 + 1⊗g − 1⊗1 is coassociative and counital but not multiplicative
    let mut d = Mat::zeros(&f, 4, 2);
    d.set(0, 0, f.one());
    d.set(2, 1, f.one());
    d.set(1, 1, f.one());
    d.set(0, 1, f.neg(&f.one()));
    let bad = b.with_parts(None, None, Some(d), None).unwrap();
    let mq = monoidal(bad, 2);
    let r = mq.unit();
    let failed = check_monoidal_qn(&mq, &[r]).failed_ids();
    assert!(failed.contains(QN_DELTA_SQUARE.id), "{failed:?}");
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]

    /// `𝐐_{f∘g} = 𝐐_g∘𝐐_f` for arbitrary monotone maps, not only elementary ones
    #[test]
    fn along_is_contravariant(a in 0usize..=3, b in 1usize..=3, c in 1usize..=3, i in 0usize..1000, j in 0usize..1000) {
        let gs = MonotoneMap::all(a, b);
        let fs = MonotoneMap::all(b, c);
        let (g, f) = (&gs[i % gs.len()], &fs[j % fs.len()]);
        let q = lax(b4(), 3);
        let r = regular(&q);
        let lhs = q.along(&f.after(g).unwrap(), &r).unwrap();
        let rhs = q.along(g, &r).unwrap().compose(&q.along(f, &r).unwrap()).unwrap();
        proptest::prop_assert_eq!(lhs.mat, rhs.mat);
    }
}
