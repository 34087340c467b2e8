//! corepresentability by a monoidal comonad, obtained by running the
//! representability chain on the opposite category
//!
//! on `E^op` the right-monoidal structure is the op-rev dual of `⊛`, and `⊗` keeps
//! its order with inverted constraints. a candidate `w_{M,N}: N⊛M → M⊗QN` in `E`,
//! where `Q = −⊛R`, becomes the candidate `M*⊗T'N* → M*⊛'N*` there.

use std::sync::Arc;

use crate::bialgebroid::InducedSkewMon;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::ringmod::{BimodMap, Obj};
use crate::skewcat::{dual_map, dual_object, BimodTensor, OpRev, ProbeSet, SkewMonoidal};

use super::{representability_pipeline, Ambient, Bimonad, Certificate, Family2};

/// `⊗` on the opposite category: same order, constraints inverted
pub struct OpInv<S> {
    pub inner: S,
}

impl<F: Field, S: SkewMonoidal<F>> SkewMonoidal<F> for OpInv<S> {
    fn name(&self) -> String {
        format!("{}^op", self.inner.name())
    }
    fn unit(&self) -> Obj<F> {
        dual_object(&self.inner.unit())
    }
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        Ok(dual_object(&self.inner.product(&dual_object(a), &dual_object(b))?))
    }
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.inner.product_map(&dual_map(f), &dual_map(g))?))
    }
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let g = self.inner.gamma(&dual_object(l), &dual_object(m), &dual_object(n))?;
        Ok(dual_map(&g.inverse()?))
    }
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.inner.eta(&dual_object(m))?.inverse()?))
    }
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.inner.eps(&dual_object(m))?.inverse()?))
    }
    fn e_basis(&self) -> Vec<Mat<F>> {
        self.inner.e_basis().iter().map(Mat::transpose).collect()
    }
}

/// `(E^op, ⊛^{op,rev}, ⊗^op)`
pub fn dual_ambient<F: Field>(amb: &Ambient<F>) -> Result<Ambient<F>> {
    Ambient::new(Arc::new(OpRev::new(amb.skew.clone())), Arc::new(OpInv { inner: amb.tensor.clone() }))
}

/// probe objects and arrows of the opposite category
pub fn dual_probes<F: Field>(p: &ProbeSet<F>) -> ProbeSet<F> {
    ProbeSet {
        objects: p.objects.iter().map(dual_object).collect(),
        maps: p.maps.iter().map(dual_map).collect(),
    }
}

/// the representability certificate of the dual, read back in `E`
pub struct CorepCertificate<F: Field> {
    pub dual: Certificate<F>,
    pub amb: Ambient<F>,
}

impl<F: Field> CorepCertificate<F> {
    pub fn is_corepresentable(&self) -> bool {
        self.dual.is_representable()
    }

    /// `Q_{M,N}: QM⊗QN → Q(M⊗N)`
    pub fn q2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        let t = self.bimonad()?;
        Ok(dual_map(&t.o2(&dual_object(m), &dual_object(n))?))
    }

    /// `Q₀: R → QR`
    pub fn q0(&self) -> Result<BimodMap<F>> {
        Ok(dual_map(&self.bimonad()?.o0()?))
    }

    fn bimonad(&self) -> Result<&Arc<super::TFromW<F>>> {
        self.dual
            .bimonad
            .as_ref()
            .ok_or_else(|| Error::Invalid(format!("no comonad was constructed: {}", self.dual.verdict)))
    }
}

/// run the representability chain on the dual for `w_{M,N}: N⊛M → M⊗QN`
pub fn corepresentability_by_duality<F: Field>(amb: &Ambient<F>, w: Family2<F>, p: &ProbeSet<F>) -> Result<CorepCertificate<F>> {
    let dual = dual_ambient(amb)?;
    let wd: Family2<F> = Arc::new(move |a, b| Ok(dual_map(&w(&dual_object(a), &dual_object(b))?)));
    let cert = representability_pipeline(&dual, wd, &dual_probes(p));
    Ok(CorepCertificate { dual: cert, amb: amb.clone() })
}

/// `Q_{M,N} = Q(M⊗ε_N)∘Qw_{M,N}∘γ_{N,M,R}∘w⁻¹_{QM,N}`, computed in `E` directly
pub fn monoidal_q_from_w<F: Field>(amb: &Ambient<F>, w: &Family2<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
    let (s, r) = (&amb.skew, amb.unit());
    let qm = s.product(m, &r)?;
    let j = amb.tensor.map_right(m, &s.eps(n)?)?;
    BimodMap::chain(&[
        &s.map_left(&j, &r)?,
        &s.map_left(&w(m, n)?, &r)?,
        &s.gamma(n, m, &r)?,
        &w(&qm, n)?.inverse()?,
    ])
}

/// `N⊗M → M⊗(N⊗R)`: the flip followed by `M⊗runi⁻¹_N`, for `⊛ = ⊗` over the ground field
pub fn flip_w<F: Field>(tensor: Arc<BimodTensor<F>>) -> Family2<F> {
    Arc::new(move |m, n| {
        ground(tensor.base().dim())?;
        let f = m.field();
        let (dm, dn) = (m.dim(), n.dim());
        let src = tensor.tensor(n, m)?;
        let dst = tensor.tensor(m, n)?;
        let flip = Mat::from_fn(f, dm * dn, dm * dn, |row, col| if row == (col % dm) * dn + col / dm { f.one() } else { f.zero() });
        let mat = dst.1.projection.mul(&flip)?.mul(&src.1.section)?;
        let sigma = BimodMap::new(mat, src.0.clone(), dst.0.clone())?;
        tensor.map_right(m, &tensor.eps(n)?.inverse()?)?.compose(&sigma)
    })
}

fn ground(dim: usize) -> Result<()> {
    if dim != 1 {
        return Err(Error::Invalid("the flip candidate needs the ground field as base".into()));
    }
    Ok(())
}

/// `[n, m, h] ↦ m⊗[n, 1, h]` for a bialgebra over the ground field; with
/// `degenerate` the `H` slot is replaced by `ε(h)·1`, which is not invertible
pub fn swap_w<F: Field>(ind: Arc<InducedSkewMon<F>>, tensor: Arc<BimodTensor<F>>, degenerate: bool) -> Family2<F> {
    Arc::new(move |m, n| {
        let b = ind.bialgebroid();
        ground(b.base().dim())?;
        let f = b.field();
        let r = ind.unit();
        let nm = ind.data(n, m)?;
        let qn = ind.data(n, &r)?;
        let dst = tensor.tensor(m, &qn.obj)?;
        let dq = qn.dim();
        let unit_r = b.base().unit().to_vec();
        let unit_h = b.total().unit().to_vec();
        let mut free = Mat::zeros(f, m.dim() * dq, nm.dim());
        let mut col = vec![f.zero(); dq];
        for (c, &(a, bm, h)) in nm.lifts.iter().enumerate() {
            col.iter_mut().for_each(|x| *x = f.zero());
            let terms: Vec<(usize, F::Elem)> = if degenerate {
                let mut basis = vec![f.zero(); b.dim_h()];
                basis[h] = f.one();
                let e = b.eps_of(&basis)[0].clone();
                unit_h.iter().enumerate().map(|(k, u)| (k, f.mul(&e, u))).collect()
            } else {
                vec![(h, f.one())]
            };
            for (k, ck) in &terms {
                for (i, ui) in unit_r.iter().enumerate() {
                    qn.project(f, a, i, *k, &f.mul(ck, ui), &mut col);
                }
            }
            for (q, x) in col.iter().enumerate() {
                if !f.is_zero(x) {
                    free.set(bm * dq + q, c, x.clone());
                }
            }
        }
        let mat = dst.1.projection.mul(&free)?;
        BimodMap::new(mat, nm.obj.clone(), dst.0.clone())
    })
}
