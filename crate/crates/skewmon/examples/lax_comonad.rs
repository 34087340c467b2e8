//! the lax comonad 𝐐 on the simplex category and its monoidal levels
//!
//! usage: cargo run --example lax_comonad

use std::sync::Arc;

use skewmon::bialgebroid::{b4, InducedSkewMon};
use skewmon::ebimod::free_qcomodule;
use skewmon::laxq::{check_lax_monoidal, check_monoidal_qn, check_phi_hat, check_simplicial, LaxQ, MonoidalQ};
use skewmon::report::Status;
use skewmon::ringmod::{Bimodule, Obj};
use skewmon::skewcat::SkewMonoidal;

fn main() {
    let b = Arc::new(b4());
    let q = LaxQ::new(Arc::new(InducedSkewMon::new(b.clone())), 3);
    // the regular bimodule carries the E-actions the levels are built from
    let r: Obj<_> = Arc::new(Bimodule::regular(b.base()).relabel("R"));
    for n in 0..=3 {
        println!("𝐐_{n}(R) has dimension {}", q.obj(&r, n).expect("level").dim());
    }
    let mut rep = check_simplicial(&q, std::slice::from_ref(&r));
    rep.extend(check_lax_monoidal(&q, std::slice::from_ref(&r)));
    let (x, coaction) = free_qcomodule(&q.inner, &q.inner.unit()).expect("free comodule");
    rep.extend(check_phi_hat(&q, &x, &coaction));
    println!("lax comonad: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));

    let mq = MonoidalQ::new(b, 2);
    let rep = check_monoidal_qn(&mq, &[mq.unit()]);
    println!("monoidal levels: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
}
