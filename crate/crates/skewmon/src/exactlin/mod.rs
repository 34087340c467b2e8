//! exact dense linear algebra over F_p and Q

mod field;
mod mat;

pub use field::{Field, PrimeField, Rationals};
pub use mat::{Cokernel, Mat, Subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }
    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }
    fn m(f: &PrimeField, rows: &[&[i64]]) -> Mat<PrimeField> {
        Mat::from_rows(f, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = f3();
        let (r, p) = Mat::identity(&f, 2).rref();
        assert!(r.is_identity());
        assert_eq!(p, vec![0, 1]);

        let f = f2();
        let (r, p) = m(&f, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, m(&f, &[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let z = Mat::zeros(&f, 3, 2);
        let (r, p) = z.rref();
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_examples() {
        let f = f2();
        assert_eq!(Mat::identity(&f, 3).kernel_basis().cols(), 0);
        let k = m(&f, &[&[1, 1], &[1, 1]]).kernel_basis();
        assert_eq!(k, m(&f, &[&[1], &[1]]));
        let k = Mat::zeros(&f, 2, 3).kernel_basis();
        assert!(k.is_identity());
    }

    #[test]
    fn cokernel_examples() {
        let f = f3();
        assert_eq!(Mat::identity(&f, 3).cokernel_projection().dim(), 0);
        let c = Mat::zeros(&f, 3, 3).cokernel_projection();
        assert!(c.projection.is_identity());
        let a = m(&f, &[&[1], &[1]]);
        let c = a.cokernel_projection();
        assert_eq!(c.dim(), 1);
        assert!(c.projection.mul(&a).unwrap().is_zero());
        assert!(c.projection.mul(&c.section).unwrap().is_identity());
    }

    #[test]
    fn solve_examples() {
        let f = f3();
        let b = m(&f, &[&[1, 2], &[0, 1]]);
        assert_eq!(Mat::identity(&f, 2).solve(&b).unwrap(), b);
        assert_eq!(m(&f, &[&[2]]).solve(&m(&f, &[&[1]])).unwrap(), m(&f, &[&[2]]));
        let f = f2();
        assert!(m(&f, &[&[1, 1], &[1, 1]]).solve(&m(&f, &[&[1], &[0]])).is_err());
        assert!(m(&f, &[&[1]]).solve(&Mat::zeros(&f, 2, 1)).is_err());
    }

    #[test]
    fn kron_examples() {
        let f = f2();
        assert!(Mat::identity(&f, 2).kron(&Mat::identity(&f, 3)).unwrap().is_identity());
        let x = m(&f, &[&[1, 0], &[1, 1]]);
        assert_eq!(m(&f, &[&[1]]).kron(&x).unwrap(), x);
        let swap = m(&f, &[&[0, 1], &[1, 0]]);
        let k = swap.kron(&Mat::identity(&f, 2)).unwrap();
        let expect = m(&f, &[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(k, expect);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Mat::identity(&f2(), 2);
        let b = Mat::identity(&f3(), 2);
        assert!(a.mul(&b).is_err());
        assert!(a.kron(&b).is_err());
    }

    #[test]
    fn inverse_and_direct_sum() {
        let f = f3();
        let a = m(&f, &[&[1, 1], &[0, 2]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(m(&f, &[&[1, 1], &[1, 1]]).inverse().is_err());
        let s = a.direct_sum(&Mat::identity(&f, 1)).unwrap();
        assert_eq!(s.shape(), (3, 3));
        assert_eq!(s.rank(), 3);
    }

    #[test]
    fn rationals_work() {
        let q = Rationals;
        let a = Mat::from_rows(&q, &[vec![2, 1], vec![4, 3]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert_eq!(q.format(inv.get(0, 0)), "3/2");
    }

    fn arb_mat(p: u64, max: usize) -> impl Strategy<Value = Mat<PrimeField>> {
        (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(0..p as i64, r * c)
                .prop_map(move |v| Mat::from_i64(&PrimeField::new(p).unwrap(), r, c, &v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn kernel_is_annihilated(a in arb_mat(5, 6)) {
            let k = a.kernel_basis();
            prop_assert!(a.mul(&k).unwrap().is_zero());
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn cokernel_laws(a in arb_mat(3, 6)) {
            let c = a.cokernel_projection();
            prop_assert!(c.projection.mul(&a).unwrap().is_zero());
            prop_assert!(c.projection.mul(&c.section).unwrap().is_identity());
            prop_assert_eq!(c.projection.rank(), c.dim());
            prop_assert_eq!(c.dim() + a.rank(), a.rows());
        }

        #[test]
        fn rref_idempotent(a in arb_mat(7, 6)) {
            let (r, _) = a.rref();
            prop_assert_eq!(r.rref().0, r);
        }

        #[test]
        fn kron_mixed_product(a in arb_mat(3, 3), b in arb_mat(3, 3), seed in 0i64..1000) {
            let f = PrimeField::new(3).unwrap();
            let c = Mat::from_fn(&f, a.cols(), 2, |i, j| f.from_i64(seed + (i * 2 + j) as i64));
            let d = Mat::from_fn(&f, b.cols(), 3, |i, j| f.from_i64(seed * 7 + (i + j) as i64));
            let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
            let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn solve_roundtrip(a in arb_mat(5, 5), seed in 0i64..1000) {
            let f = PrimeField::new(5).unwrap();
            let x0 = Mat::from_fn(&f, a.cols(), 2, |i, j| f.from_i64(seed * 3 + (i * 5 + j) as i64));
            let b = a.mul(&x0).unwrap();
            let x = a.solve(&b).unwrap();
            prop_assert_eq!(a.mul(&x).unwrap(), b);
        }
    }
}
