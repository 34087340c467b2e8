//! recover an opmonoidal monad T with M⊛N ≅ M⊗TN from the skew structure
//!
//! usage: cargo run --example representability

use std::sync::Arc;

use skewmon::bialgebroid::{b2, b4};
use skewmon::represent::{bialgebroid_setup, representability_pipeline};
use skewmon::skewcat::FunctorData;

fn main() {
    for b in [b2(), b4()] {
        let name = b.name().to_string();
        let setup = bialgebroid_setup(Arc::new(b), 3).expect("setup");
        let cert = representability_pipeline(&setup.amb, setup.w.clone(), &setup.probes);
        println!("{name}: {}", cert.verdict);
        for (step, status) in &cert.steps {
            println!("  {step}: {status:?}");
        }
        if let Some(t) = &cert.bimonad {
            for n in &setup.probes.objects {
                println!("  T({}) has dimension {}", n.label(), t.obj(n).expect("T").dim());
            }
        }
    }
}
