//! write the built-in bialgebroids as instance files, and one corrupted variant
//! per family of checks
//!
//! usage: cargo run --example write_instances -- <dir>

use skewmon::bialgebroid::{b1, b2, b3, b4, BGD_COASSOC, GALOIS_WELL_DEFINED};
use skewmon::cli::{ExpectedFailure, InstanceFile};
use skewmon::ebimod::SPLIT_EQUALIZER;
use skewmon::laxq::SIMPLICIAL;
use skewmon::report::Axiom;
use skewmon::represent::TETRAGON;
use skewmon::ringmod::ALG_UNIT;
use skewmon::skewcat::{MONAD_ASSOC, SMC1};

fn write(dir: &str, name: &str, file: &InstanceFile) {
    let path = format!("{dir}/{name}");
    std::fs::write(&path, file.to_json() + "\n").expect("write instance");
    println!("{path}");
}

/// `base` with one entry bumped, tagged with the check it must trip
fn corrupt(base: &InstanceFile, at: (&str, usize, usize), command: &str, ax: Axiom, what: &str) -> InstanceFile {
    let mut f = base.clone();
    assert!(f.bump(at.0, at.1, at.2), "no entry {at:?}");
    f.metadata.name = format!("{}*", base.metadata.name);
    f.metadata.description = format!("{} with {}[{}][{}] + 1: {what}", base.metadata.name, at.0, at.1, at.2);
    f.metadata.expected_failure = Some(ExpectedFailure {
        command: command.into(),
        id: ax.id.into(),
        anchor: ax.anchor.into(),
    });
    f
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| ".".into());
    let i1 = InstanceFile::from_bialgebroid(&b1(), "the trivial bialgebroid k over k = F_3");
    let i2 = InstanceFile::from_bialgebroid(&b2(), "group algebra of C_2 over F_3, grouplike basis");
    let i3 = InstanceFile::from_bialgebroid(&b3(), "monoid bialgebra F_3{1, x} with x² = x, both grouplike");
    let i4 = InstanceFile::from_bialgebroid(&b4(), "R^e over R = F_2 × F_2");
    write(&dir, "b1.json", &i1);
    write(&dir, "b2_kc2_f3.json", &i2);
    write(&dir, "b3_monoid.json", &i3);
    write(&dir, "b4_renv.json", &i4);

    let bad = format!("{dir}/corrupted");
    std::fs::create_dir_all(&bad).expect("create directory");
    let variants = [
        ("algebra.json", corrupt(&i2, ("algebra.mult", 0, 0), "check-bialgebroid", ALG_UNIT, "the base loses its unit")),
        ("bialgebroid.json", corrupt(&i4, ("bialgebroid.Delta", 9, 3), "check-bialgebroid", BGD_COASSOC, "Δ is not coassociative")),
        ("skew_monoidal.json", corrupt(&i2, ("bialgebroid.mult", 1, 3), "check-axioms", SMC1, "g² = 1 + g breaks the pentagon")),
        ("monad.json", corrupt(&i3, ("bialgebroid.counit", 0, 1), "check-axioms", MONAD_ASSOC, "ε(x) = 2")),
        ("galois.json", corrupt(&i4, ("bialgebroid.s", 0, 0), "galois", GALOIS_WELL_DEFINED, "s is not multiplicative")),
        ("representability.json", corrupt(&i4, ("bialgebroid.counit", 0, 1), "representability", TETRAGON, "ε is not an R-bimodule map")),
        ("laxcomonad.json", corrupt(&i2, ("bialgebroid.counit", 0, 1), "laxcomonad", SIMPLICIAL, "ε(g) = 2")),
        ("modcomod.json", corrupt(&i2, ("bialgebroid.Delta", 3, 1), "modcomod", SPLIT_EQUALIZER, "Δg = 2·g⊗g")),
    ];
    for (name, file) in &variants {
        write(&bad, name, file);
    }
}
