//! the enveloping bialgebroid of the upper triangular 2×2 matrices over F_2
//!
//! usage: cargo run --example noncommutative_base

use std::sync::Arc;

use skewmon::bialgebroid::{check_bialgebroid, default_probes, enveloping_bialgebroid, is_hopf, triangular, InducedSkewMon};
use skewmon::exactlin::PrimeField;
use skewmon::report::Status;
use skewmon::skewcat::check_smc;

fn main() {
    let f = PrimeField::new(2).expect("prime");
    let base = Arc::new(triangular(&f).expect("algebra"));
    let b = Arc::new(enveloping_bialgebroid(base).expect("bialgebroid"));
    println!("dim R = {}, dim H = {}", b.dim_r(), b.dim_h());
    let rep = check_bialgebroid(&b);
    println!("bialgebroid axioms: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    let s = InducedSkewMon::new(b.clone());
    let rep = check_smc(&s, &default_probes(&b, 2).expect("probes"));
    println!("skew-monoidal axioms: {} pass, {} fail", rep.count(Status::Pass), rep.count(Status::Fail));
    let c = is_hopf(&b).expect("canonical map");
    println!("hopf {}", c.hopf);
}
