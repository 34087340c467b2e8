//! algebras by structure constants, bimodules, tensor and hom over a ring,
//! equalizers and coequalizers of map families

mod algebra;
mod bimodule;
mod ops;

pub use algebra::{Algebra, ALG_ASSOC, ALG_UNIT};
pub use bimodule::{BimodMap, Bimodule, Obj, BIMOD_COMMUTE, BIMOD_LEFT, BIMOD_RIGHT};
pub use ops::{coequalizer, coequalizer_mats, equalizer, equalizer_mats, hom_over, intertwiners, restrict_homs, tensor_over, tensor_quotient};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{Field, Mat, PrimeField};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn diag2() -> Arc<Algebra<PrimeField>> {
        Arc::new(Algebra::diagonal(&f2(), 2))
    }

    #[test]
    fn ground_tensor_is_kronecker() {
        let f = PrimeField::new(3).unwrap();
        let k = Arc::new(Algebra::ground(&f));
        let m = Bimodule::right_module(k.clone(), vec![Mat::identity(&f, 2)], "k2").unwrap();
        let n = Bimodule::new(3, k.clone(), k.clone(), vec![Mat::identity(&f, 3)], vec![Mat::identity(&f, 3)], "k3").unwrap();
        let (t, q) = tensor_over(&m, &n).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(q.projection.is_identity());
    }

    #[test]
    fn regular_tensor_regular() {
        let r = diag2();
        let reg = Bimodule::regular(&r);
        assert!(reg.check().all_passed());
        let (t, q) = tensor_over(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.check().all_passed());
        // balanced: π(m·b ⊗ n) = π(m ⊗ b·n)
        let i = Mat::identity(r.field(), 2);
        for b in 0..2 {
            let lhs = q.projection.mul(&reg.right()[b].kron(&i).unwrap()).unwrap();
            let rhs = q.projection.mul(&i.kron(&reg.left()[b]).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hom_examples() {
        let f = f2();
        let k = Arc::new(Algebra::ground(&f));
        let kk = Bimodule::regular(&k);
        assert_eq!(hom_over(&kk, &kk).unwrap().len(), 1);
        let r = diag2();
        let rr = Bimodule::right_regular(&r);
        let homs = hom_over(&rr, &rr).unwrap();
        assert_eq!(homs.len(), 2);
        // independent oracle: each basis map is a left multiplication
        for h in &homs {
            let x = h.col(0);
            let y = h.col(1);
            let e = r.unit().to_vec();
            let img: Vec<u64> = x.iter().zip(&y).map(|(a, b)| f.add(a, b)).collect();
            assert_eq!(r.left_mul_by(&img).apply(&e).unwrap(), img);
        }
    }

    #[test]
    fn hom_from_regular_is_evaluation() {
        let r = diag2();
        let rr = Arc::new(Bimodule::right_regular(&r));
        let probes = [
            Bimodule::free_right(&r, 2),
            Bimodule::free(&r).underlying_right(),
            Bimodule::right_regular(&r),
        ];
        for m in &probes {
            let homs = hom_over(&rr, m).unwrap();
            assert_eq!(homs.len(), m.dim());
            let unit = Mat::column(r.field(), r.unit().to_vec());
            let evals: Vec<Vec<u64>> = homs.iter().map(|h| h.mul(&unit).unwrap().col(0)).collect();
            let ev = Mat::from_columns(r.field(), m.dim(), &evals).unwrap();
            assert_eq!(ev.rank(), m.dim());
        }
        let _ = rr;
    }

    #[test]
    fn equalizer_examples() {
        let f = f2();
        let k = Arc::new(Algebra::ground(&f));
        let k2 = Arc::new(Bimodule::right_module(k.clone(), vec![Mat::identity(&f, 2)], "k2").unwrap());
        let id = k2.identity();
        let (e, inc) = equalizer(std::slice::from_ref(&id), std::slice::from_ref(&id)).unwrap();
        assert_eq!(e.dim(), 2);
        assert!(inc.mat.is_identity());
        let zero = BimodMap::zero(k2.clone(), k2.clone());
        let (e, _) = equalizer(std::slice::from_ref(&id), std::slice::from_ref(&zero)).unwrap();
        assert_eq!(e.dim(), 0);
        let (c, p) = coequalizer(std::slice::from_ref(&id), std::slice::from_ref(&id)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(p.mat.is_identity());
        let (c, _) = coequalizer(&[id], &[zero]).unwrap();
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn equalizer_inclusion_equalizes() {
        let r = diag2();
        let fr = Arc::new(Bimodule::free(&r));
        // left versus right multiplication by e_0: the equalizer is the diagonal part
        let a = BimodMap::new(fr.left()[0].clone(), fr.clone(), fr.clone()).unwrap();
        let b = BimodMap::new(fr.right()[0].clone(), fr.clone(), fr.clone()).unwrap();
        let (e, inc) = equalizer(std::slice::from_ref(&a), std::slice::from_ref(&b)).unwrap();
        assert_eq!(a.mat.mul(&inc.mat).unwrap(), b.mat.mul(&inc.mat).unwrap());
        // brute force: count vectors in F_2^4 fixed by the difference
        let d = a.mat.sub(&b.mat).unwrap();
        let count = (0u64..16)
            .filter(|bits| {
                let v: Vec<u64> = (0..4).map(|i| (bits >> i) & 1).collect();
                d.apply(&v).unwrap().iter().all(|x| *x == 0)
            })
            .count();
        assert_eq!(1usize << e.dim(), count);
    }

    #[test]
    fn noncommutative_bimodules() {
        let f = f2();
        let mut c = vec![0i64; 27];
        for (i, j, k) in [(0, 0, 0), (0, 1, 1), (1, 2, 1), (2, 2, 2)] {
            c[(i * 3 + j) * 3 + k] = 1;
        }
        let t = Arc::new(Algebra::from_constants(&f, 3, &c, &[1, 0, 1], "T2").unwrap());
        let reg = Bimodule::regular(&t);
        assert!(reg.check().all_passed());
        let fr = Bimodule::free(&t);
        assert!(fr.check().all_passed());
        let (tt, _) = tensor_over(&reg, &reg).unwrap();
        assert_eq!(tt.dim(), 3);
        assert!(tt.check().all_passed());
        let (rf, _) = tensor_over(&reg, &fr).unwrap();
        assert_eq!(rf.dim(), 9);
        assert_eq!(hom_over(&reg, &reg).unwrap().len(), hom_over(&reg, &reg).unwrap().len());
    }

    #[test]
    fn algebra_mismatch_rejected() {
        let f = f2();
        let k = Arc::new(Algebra::ground(&f));
        let r = diag2();
        let m = Bimodule::right_module(k, vec![Mat::identity(&f, 1)], "k").unwrap();
        assert!(tensor_over(&m, &Bimodule::regular(&r)).is_err());
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let r = diag2();
        let reg = Bimodule::regular(&r);
        let (_, q) = tensor_over(&reg, &reg).unwrap();
        let id = Mat::identity(r.field(), 2).kron(&Mat::identity(r.field(), 2)).unwrap();
        assert!(q.descend(&id).unwrap().is_identity());
    }

    proptest! {
        #[test]
        fn hom_basis_intertwines(bits in proptest::collection::vec(0u64..2, 4)) {
            // a random 2-dimensional right module over F_2×F_2 is a split idempotent
            let f = f2();
            let r = diag2();
            let e0 = Mat::from_i64(&f, 2, 2, &bits.iter().map(|&b| b as i64).collect::<Vec<_>>()).unwrap();
            prop_assume!(e0.mul(&e0).unwrap() == e0);
            let e1 = Mat::identity(&f, 2).sub(&e0).unwrap();
            let m = Bimodule::right_module(r.clone(), vec![e0, e1], "M").unwrap();
            prop_assert!(m.check().all_passed());
            let rr = Bimodule::free_right(&r, 2);
            for h in hom_over(&rr, &m).unwrap() {
                for j in 0..2 {
                    prop_assert_eq!(h.mul(&rr.right()[j]).unwrap(), m.right()[j].mul(&h).unwrap());
                }
            }
        }
    }
}
