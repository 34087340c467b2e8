//! modules over R⊛−, comodules over −⊛R and the entwined square R⊛R
//!
//! usage: cargo run --example modules

use std::sync::Arc;

use skewmon::bialgebroid::{b2, InducedSkewMon};
use skewmon::ebimod::{check_entwined, check_qcomodule, check_split_equalizer, check_tmodule, free_qcomodule, free_tmodule};
use skewmon::skewcat::{delta, SkewMonoidal};

fn main() {
    let s = InducedSkewMon::new(Arc::new(b2()));
    let r = s.unit();
    let (tr, nabla) = free_tmodule(&s, &r).expect("free module");
    println!("free module R⊛R:\n{}", check_tmodule(&s, &tr, &nabla));
    let (qr, coaction) = free_qcomodule(&s, &r).expect("free comodule");
    let mut rep = check_qcomodule(&s, &qr, &coaction);
    rep.extend(check_split_equalizer(&s, &qr, &coaction));
    println!("free comodule R⊛R:\n{rep}");
    let d = delta(&s, &r).expect("δ").mat;
    println!("entwined:\n{}", check_entwined(&s, &tr, &nabla, &d));
}
