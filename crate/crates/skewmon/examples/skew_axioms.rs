//! the skew-monoidal structure induced by a bialgebroid, checked on probe bimodules
//!
//! usage: cargo run --example skew_axioms

use std::sync::Arc;

use skewmon::bialgebroid::{b2, check_bialgebroid, default_probes, InducedSkewMon};
use skewmon::report::Status;
use skewmon::skewcat::{check_derived, check_smc, naive_coherence_fails, SkewMonoidal};

fn main() {
    let b = Arc::new(b2());
    println!("{}", check_bialgebroid(&b));
    let s = InducedSkewMon::new(b.clone());
    let p = default_probes(&b, 4).expect("probes");
    for (m, n) in p.pairs() {
        let mn = s.product(&m, &n).expect("product");
        println!("{} ⊛ {} has dimension {}", m.label(), n.label(), mn.dim());
    }
    let rep = check_smc(&s, &p);
    println!("skew-monoidal axioms: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    let rep = check_derived(&s, &p);
    println!("monad, comonad and χ: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    println!("δ∘μ differs from γ_(R,R,R): {}", naive_coherence_fails(&s).expect("coherence"));
}
