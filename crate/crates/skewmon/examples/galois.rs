//! the canonical map of each built-in bialgebroid, and whether it is Hopf
//!
//! usage: cargo run --example galois

use std::sync::Arc;

use skewmon::bialgebroid::{b1, b2, b3, b4, is_hopf};

fn main() {
    for b in [b1(), b2(), b3(), b4()] {
        let name = b.name().to_string();
        let c = is_hopf(&Arc::new(b)).expect("canonical map");
        println!(
            "{name}: canonical map rank {}/{}, γ_(R,R,R) rank {}/{}, hopf {}",
            c.galois_rank, c.galois_shape.1, c.gamma_rank, c.gamma_shape.1, c.hopf
        );
        assert!(c.agree);
    }
}
