//! standard bialgebroids

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat, PrimeField};
use crate::ringmod::Algebra;

use super::RightBialgebroid;

/// a `k`-bialgebra as a bialgebroid over `k`: `s = t = unit`
///
/// `delta` is `dim H² × dim H` into `H ⊗_k H`, `counit` is `1 × dim H`.
pub fn from_bialgebra<F: Field>(h: Arc<Algebra<F>>, delta: Mat<F>, counit: Mat<F>) -> Result<RightBialgebroid<F>> {
    let f = h.field().clone();
    let base = Arc::new(Algebra::ground(&f));
    let unit = Mat::column(&f, h.unit().to_vec());
    let name = h.name().to_string();
    RightBialgebroid::new(base, h, unit.clone(), unit, delta, counit, name)
}

/// `k[C_n]` with grouplike basis
pub fn group_algebra<F: Field>(field: &F, n: usize) -> Result<RightBialgebroid<F>> {
    if n == 0 {
        return Err(Error::Invalid("group order must be positive".into()));
    }
    let mult = Mat::from_fn(field, n, n * n, |k, ij| {
        if (ij / n + ij % n) % n == k {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let h = Arc::new(Algebra::new(field, n, mult, unit, format!("{}[C{n}]", field.name()))?);
    let delta = grouplike_delta(field, n);
    let counit = Mat::from_fn(field, 1, n, |_, _| field.one());
    from_bialgebra(h, delta, counit)
}

/// `Δe_i = e_i ⊗ e_i`
fn grouplike_delta<F: Field>(field: &F, n: usize) -> Mat<F> {
    Mat::from_fn(field, n * n, n, |ab, i| if ab == i * n + i { field.one() } else { field.zero() })
}

/// `R^e = R^op ⊗ R` over `R` with `s(r) = 1⊗r`, `t(r) = r⊗1`,
/// `Δ(r'⊗r) = (r'⊗1)⊗(1⊗r)` and `ε(r'⊗r) = r'r`
pub fn enveloping_bialgebroid<F: Field>(base: Arc<Algebra<F>>) -> Result<RightBialgebroid<F>> {
    let f = base.field().clone();
    let n = base.dim();
    let h = Arc::new(base.enveloping().renamed("R^e"));
    let dh = n * n;
    let u = base.unit();
    // index i'·n + i for e_i' ⊗ e_i
    let s = Mat::from_fn(&f, dh, n, |x, r| if x % n == r { u[x / n].clone() } else { f.zero() });
    let t = Mat::from_fn(&f, dh, n, |x, r| if x / n == r { u[x % n].clone() } else { f.zero() });
    let mut delta = Mat::zeros(&f, dh * dh, dh);
    for ip in 0..n {
        for i in 0..n {
            for a in 0..n {
                for bb in 0..n {
                    // (e_ip ⊗ u_a) ⊗ (u_bb ⊗ e_i)
                    let c = f.mul(&u[a], &u[bb]);
                    if f.is_zero(&c) {
                        continue;
                    }
                    let row = (ip * n + a) * dh + (bb * n + i);
                    let x = f.add(delta.get(row, ip * n + i), &c);
                    delta.set(row, ip * n + i, x);
                }
            }
        }
    }
    // ε(e_i' ⊗ e_i) = e_i'·e_i in R
    let counit = Mat::from_fn(&f, n, dh, |k, x| base.basis_product(x / n, x % n)[k].clone());
    RightBialgebroid::new(base.clone(), h, s, t, delta, counit, format!("{}^e", base.name()))
}

/// upper triangular `2×2` matrices, basis `e11, e12, e22`
pub fn triangular<F: Field>(field: &F) -> Result<Algebra<F>> {
    // e11·e11 = e11, e11·e12 = e12, e12·e22 = e12, e22·e22 = e22
    let mut c = vec![0i64; 27];
    let mut put = |i: usize, j: usize, k: usize| c[(i * 3 + j) * 3 + k] = 1;
    put(0, 0, 0);
    put(0, 1, 1);
    put(1, 2, 1);
    put(2, 2, 2);
    Algebra::from_constants(field, 3, &c, &[1, 0, 1], "T2")
}

/// the trivial bialgebroid `k` over `k`, over `F_3`
pub fn b1() -> RightBialgebroid<PrimeField> {
    let f = PrimeField::new(3).expect("3 is prime");
    let h = Arc::new(Algebra::ground(&f));
    let one = Mat::identity(&f, 1);
    from_bialgebra(h, one.clone(), one).expect("trivial bialgebroid").renamed("B1")
}

/// `F_3[C_2]`
pub fn b2() -> RightBialgebroid<PrimeField> {
    let f = PrimeField::new(3).expect("3 is prime");
    group_algebra(&f, 2).expect("group algebra").renamed("B2")
}

/// the monoid bialgebra `F_3{1, x}` with `x² = x`, both basis elements grouplike
pub fn b3() -> RightBialgebroid<PrimeField> {
    let f = PrimeField::new(3).expect("3 is prime");
    let h = Arc::new(Algebra::from_constants(&f, 2, &[1, 0, 0, 1, 0, 1, 0, 1], &[1, 0], "F3{1,x}").expect("monoid algebra"));
    let counit = Mat::from_i64(&f, 1, 2, &[1, 1]).expect("shape");
    from_bialgebra(h, grouplike_delta(&f, 2), counit).expect("monoid bialgebra").renamed("B3")
}

/// `R^e` over `R = F_2 × F_2`
pub fn b4() -> RightBialgebroid<PrimeField> {
    let f = PrimeField::new(2).expect("2 is prime");
    enveloping_bialgebroid(Arc::new(Algebra::diagonal(&f, 2))).expect("enveloping bialgebroid").renamed("B4")
}
