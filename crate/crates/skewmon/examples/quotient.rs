//! the quotient structure ⊛_q over the enveloping bialgebroid and T_q = −⊗_{R^e}H
//!
//! usage: cargo run --example quotient

use std::sync::Arc;

use skewmon::bialgebroid::{b4, InducedSkewMon};
use skewmon::ebimod::{check_quotient_functor, check_tq_as_tensor, tq_as_tensor, QuotientStructure};
use skewmon::report::Status;
use skewmon::ringmod::{Bimodule, Obj};
use skewmon::skewcat::{check_smc, ProbeSet, SkewMonoidal};

fn main() {
    let s = Arc::new(InducedSkewMon::new(Arc::new(b4())));
    let qs = QuotientStructure::new(s.clone());
    let re: Obj<_> = Arc::new(Bimodule::free(s.bialgebroid().base()).relabel("R^e"));
    let objs = vec![qs.unit(), re];
    for m in &objs {
        for n in &objs {
            let prod = qs.product(m, n).expect("product");
            println!("{} ⊛_q {} has dimension {} (⊛ gives {})", m.label(), n.label(), prod.dim(), s.product(m, n).expect("product").dim());
        }
    }
    let p = ProbeSet::with_hom_bases(objs.clone()).expect("probes");
    let mut rep = check_smc(&qs, &p);
    rep.extend(check_quotient_functor(&qs, &p));
    rep.extend(check_tq_as_tensor(&qs, &objs, &[]));
    println!("{} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    for n in &objs {
        let g = tq_as_tensor(&qs, n).expect("comparison");
        println!("{}⊗_(R^e)H → T_q({}): {:?}, invertible {}", n.label(), n.label(), g.shape(), g.is_invertible());
    }
}
