//! `⊗_R` on `R`-bimodules as a (strong) monoidal structure
//!
//! associators and unitors are the base-change matrices between the quotient
//! presentations of iterated tensor products.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::exactlin::{Cokernel, Field, Mat};
use crate::ringmod::{tensor_over, Algebra, BimodMap, Bimodule, Obj};

use super::SkewMonoidal;

type Product<F> = Arc<(Obj<F>, Cokernel<F>)>;

/// `⟨R-bimodules, ⊗_R, R⟩`
pub struct BimodTensor<F: Field> {
    base: Arc<Algebra<F>>,
    unit: Obj<F>,
    cache: Mutex<HashMap<(u64, u64), Product<F>>>,
}

impl<F: Field> BimodTensor<F> {
    pub fn new(base: Arc<Algebra<F>>) -> Self {
        let unit = Arc::new(Bimodule::regular(&base).relabel("R"));
        BimodTensor {
            base,
            unit,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn base(&self) -> &Arc<Algebra<F>> {
        &self.base
    }

    /// `M⊗_R N` and its presentation as a quotient of `M⊗_k N`
    pub fn tensor(&self, m: &Obj<F>, n: &Obj<F>) -> Result<Product<F>> {
        let key = (m.fingerprint(), n.fingerprint());
        if let Some(p) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(p.clone());
        }
        let (obj, q) = tensor_over(m, n)?;
        let p = Arc::new((Arc::new(obj.relabel(format!("({}⊗{})", m.label(), n.label()))), q));
        self.cache.lock().expect("cache lock").insert(key, p.clone());
        Ok(p)
    }

    fn check(&self, x: &Obj<F>) -> Result<()> {
        let fp = self.base.fingerprint();
        if x.left_alg().fingerprint() != fp || x.right_alg().fingerprint() != fp {
            return Err(Error::AlgebraMismatch(format!("{} is not an {}-bimodule", x.label(), self.base.name())));
        }
        Ok(())
    }
}

impl<F: Field> SkewMonoidal<F> for BimodTensor<F> {
    fn name(&self) -> String {
        format!("⊗ over {}", self.base.name())
    }

    fn unit(&self) -> Obj<F> {
        self.unit.clone()
    }

    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.tensor(a, b)?.0.clone())
    }

    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        let src = self.tensor(&f.source, &g.source)?;
        let dst = self.tensor(&f.target, &g.target)?;
        let mat = dst.1.projection.mul(&f.mat.kron(&g.mat)?)?.mul(&src.1.section)?;
        BimodMap::new(mat, src.0.clone(), dst.0.clone())
    }

    /// `l⊗[m⊗n] ↦ [l⊗m]⊗n`
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let f = l.field();
        let mn = self.tensor(m, n)?;
        let l_mn = self.tensor(l, &mn.0)?;
        let lm = self.tensor(l, m)?;
        let lm_n = self.tensor(&lm.0, n)?;
        let il = Mat::identity(f, l.dim());
        let inn = Mat::identity(f, n.dim());
        let mat = lm_n
            .1
            .projection
            .mul(&lm.1.projection.kron(&inn)?)?
            .mul(&il.kron(&mn.1.section)?)?
            .mul(&l_mn.1.section)?;
        BimodMap::new(mat, l_mn.0.clone(), lm_n.0.clone())
    }

    /// `m ↦ 1⊗m`
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let f = m.field();
        let rm = self.tensor(&self.unit, m)?;
        let one = Mat::column(f, self.base.unit().to_vec());
        let mat = rm.1.projection.mul(&one.kron(&Mat::identity(f, m.dim()))?)?;
        BimodMap::new(mat, m.clone(), rm.0.clone())
    }

    /// `m⊗r ↦ m·r`
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        let f = m.field();
        let mr = self.tensor(m, &self.unit)?;
        let r = self.base.dim();
        let act = Mat::from_fn(f, m.dim(), m.dim() * r, |i, c| m.right()[c % r].get(i, c / r).clone());
        let mat = act.mul(&mr.1.section)?;
        BimodMap::new(mat, mr.0.clone(), m.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebroid::triangular;
    use crate::exactlin::PrimeField;
    use crate::skewcat::{check_smc, ProbeSet};

    /// the one-dimensional bimodule on which `e_i` acts on the left and `e_j` on the right
    fn simple(base: &Arc<Algebra<PrimeField>>, i: usize, j: usize) -> Obj<PrimeField> {
        let f = base.field();
        let act = |k: usize, at: usize| Mat::from_fn(f, 1, 1, |_, _| if k == at { f.one() } else { f.zero() });
        let left = (0..base.dim()).map(|k| act(k, i)).collect();
        let right = (0..base.dim()).map(|k| act(k, j)).collect();
        Arc::new(Bimodule::new(1, base.clone(), base.clone(), left, right, format!("S{i}{j}")).unwrap())
    }

    #[test]
    fn tensor_over_a_product_of_fields() {
        let f = PrimeField::new(2).unwrap();
        let base = Arc::new(Algebra::diagonal(&f, 2));
        let s = BimodTensor::new(base.clone());
        let (a, b) = (simple(&base, 0, 1), simple(&base, 1, 0));
        assert_eq!(s.product(&a, &b).unwrap().dim(), 1);
        assert_eq!(s.product(&b, &b).unwrap().dim(), 0);
        let p = ProbeSet::with_hom_bases(vec![s.unit(), a, b]).unwrap();
        let rep = check_smc(&s, &p);
        assert!(rep.all_passed(), "{rep}");
        for [x, y, z] in p.triples() {
            assert!(s.gamma(&x, &y, &z).unwrap().is_iso());
        }
    }

    #[test]
    fn tensor_over_triangular_matrices() {
        let f = PrimeField::new(3).unwrap();
        let base = Arc::new(triangular(&f).unwrap());
        let s = BimodTensor::new(base.clone());
        let r = s.unit();
        let rr = s.product(&r, &r).unwrap();
        assert_eq!(rr.dim(), 3);
        let p = ProbeSet::with_hom_bases(vec![r.clone(), Arc::new(r.direct_sum(&r).unwrap())]).unwrap().thin_maps(6);
        let rep = check_smc(&s, &p);
        assert!(rep.all_passed(), "{rep}");
        assert!(s.eta(&r).unwrap().is_iso() && s.eps(&r).unwrap().is_iso());
    }
}
