//! corepresentability through the op-rev dual: a monoidal comonad Q with M⊛N ≅ Q(M)⊗N
//!
//! usage: cargo run --example corepresentability

use std::sync::Arc;

use skewmon::bialgebroid::{b2, default_probes, InducedSkewMon};
use skewmon::represent::{corepresentability_by_duality, swap_w, Ambient};
use skewmon::skewcat::BimodTensor;

fn main() {
    let ind = Arc::new(InducedSkewMon::new(Arc::new(b2())));
    let tensor = Arc::new(BimodTensor::new(ind.bialgebroid().base().clone()));
    let amb = Ambient::new(ind.clone(), tensor.clone()).expect("ambient");
    let p = default_probes(ind.bialgebroid(), 4).expect("probes");
    for degenerate in [false, true] {
        let cert = corepresentability_by_duality(&amb, swap_w(ind.clone(), tensor.clone(), degenerate), &p).expect("dual");
        println!(
            "degenerate candidate {degenerate}: corepresentable {} (dual pipeline: {})",
            cert.is_corepresentable(),
            cert.dual.verdict
        );
        if cert.is_corepresentable() {
            let r = amb.unit();
            println!("  Q₂(R,R) has rank {}", cert.q2(&r, &r).expect("Q₂").mat.rank());
        }
    }
}
