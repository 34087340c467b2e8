//! the canonical map `H ⊗_{R₂} H → H ⊗_{R₁} H`, `g⊗h ↦ h₁ ⊗ g·h₂`

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Mat};
use crate::report::Axiom;
use crate::skewcat::SkewMonoidal;

use super::{InducedSkewMon, RightBialgebroid};

pub const GALOIS_WELL_DEFINED: Axiom = Axiom::new("galois.well-defined", "canonical map constant on balancing relations");
pub const GALOIS_HOPF_AGREEMENT: Axiom = Axiom::new("galois.hopf-agreement", "canonical map invertible iff γ_{R,R,R} invertible");

/// the formula on `H ⊗_k H`, landing in `H ⊗_{R₁} H`
fn galois_free<F: Field>(b: &RightBialgebroid<F>) -> Mat<F> {
    let f = b.field();
    let n = b.dim_h();
    let q1 = &b.q1().projection;
    let mut phi = Mat::zeros(f, q1.rows(), n * n);
    for g in 0..n {
        for h in 0..n {
            let mut col = vec![f.zero(); q1.rows()];
            for (a, bb, c) in b.delta_terms(h) {
                for (k, ck) in b.mult_terms(g, *bb) {
                    let coef = f.mul(c, ck);
                    for (i, x) in q1.col_entries(a * n + k) {
                        col[i] = f.mul_add(&col[i], &coef, &x);
                    }
                }
            }
            for (i, x) in col.into_iter().enumerate() {
                phi.set(i, g * n + h, x);
            }
        }
    }
    phi
}

/// the canonical map between the quotient bases of `H ⊗_{R₂} H` and `H ⊗_{R₁} H`
///
/// fails with a witness column when the formula is not balanced.
pub fn galois_map<F: Field>(b: &RightBialgebroid<F>) -> Result<Mat<F>> {
    let phi = galois_free(b);
    let q2 = b.q2();
    let g = phi.mul(&q2.section)?;
    let lifted = g.mul(&q2.projection)?;
    if lifted != phi {
        let n = b.dim_h();
        let col = (0..phi.cols()).find(|&j| lifted.col(j) != phi.col(j)).unwrap_or(0);
        return Err(Error::NotWellDefined(format!(
            "galois map at e{}⊗e{} of {}",
            col / n,
            col % n,
            b.name()
        )));
    }
    Ok(g)
}

/// invertibility of the canonical map next to invertibility of `γ_{R,R,R}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfCertificate {
    pub galois_rank: usize,
    pub galois_shape: (usize, usize),
    pub gamma_rank: usize,
    pub gamma_shape: (usize, usize),
    pub hopf: bool,
    /// both maps invertible or both not
    pub agree: bool,
}

pub fn is_hopf<F: Field>(b: &std::sync::Arc<RightBialgebroid<F>>) -> Result<HopfCertificate> {
    let g = galois_map(b)?;
    let s = InducedSkewMon::new(b.clone());
    let r = s.unit();
    let gamma = s.gamma(&r, &r, &r)?;
    let hopf = g.is_invertible();
    Ok(HopfCertificate {
        galois_rank: g.rank(),
        galois_shape: g.shape(),
        gamma_rank: gamma.mat.rank(),
        gamma_shape: gamma.mat.shape(),
        hopf,
        agree: hopf == gamma.mat.is_invertible(),
    })
}
