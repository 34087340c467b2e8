//! representability of `⊛` by a bimonad on `⊗` as a chain of certified steps:
//! heptagon and tetragon for a supplied `w`, the tetrahedral isomorphism, the
//! opmonoidal canonical monad, the fusion bijection, the induced `⊙` and finally
//! `w` as a twist `⊙ → ⊛`

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bialgebroid::{default_probes, InducedSkewMon, RightBialgebroid};
use crate::ebimod::QuotientStructure;
use crate::error::Result;
use crate::exactlin::Field;
use crate::report::{Axiom, Report, Status};
use crate::ringmod::{Bimodule, Obj};
use crate::skewcat::{check_skewmon_functor, check_smc_axioms, BimodTensor, IdentityWith, ProbeSet, SkewMonoidal, SMF1, SMF2, SMF3, SMF_NAT};

use super::{
    check_bimonad, check_fusion, check_heptagon_tetragon, check_roundtrip_from_bimonad, check_roundtrip_from_fusion, check_roundtrip_from_tet,
    check_roundtrip_from_w, check_t0, check_tetrahedral, check_unit_monad_morphism, opmonoidal_t_from_w, tet_from_w, Ambient, Bimonad, Family2,
    Fusion, Odot, TFromW, TetStatus, TET_ISO, canonical_w, canonical_w_quotient,
};

pub const TWIST1: Axiom = Axiom::new("twist1.hexagon", "v∘(v⊙N)∘γ̇ = γ∘v∘(L⊙v)");
pub const TWIST2: Axiom = Axiom::new("twist2.unit", "v_{R,N}∘η̇_N = η_N");
pub const TWIST3: Axiom = Axiom::new("twist3.counit", "ε̇_M = ε_M∘v_{M,R}");
pub const TWIST_NATURAL: Axiom = Axiom::new("twist.natural", "naturality of v");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    Representable,
    NotVerified { step: String, check: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Representable => write!(f, "representable"),
            Verdict::NotVerified { step, check } => write!(f, "not verified: {check} failed in step {step}"),
        }
    }
}

/// the outcome of the pipeline; the bimonad and `⊙` are present once constructed
pub struct Certificate<F: Field> {
    pub verdict: Verdict,
    /// records of every step that ran, in order
    pub report: Report,
    pub steps: Vec<(String, Status)>,
    pub bimonad: Option<Arc<TFromW<F>>>,
    pub induced: Option<Arc<Odot<F>>>,
}

impl<F: Field> Certificate<F> {
    pub fn is_representable(&self) -> bool {
        self.verdict == Verdict::Representable
    }
}

pub const STEP_HEPTAGON: &str = "heptagon-tetragon";
pub const STEP_TETRAHEDRAL: &str = "tetrahedral";
pub const STEP_BIMONAD: &str = "bimonad";
pub const STEP_BIJECTION: &str = "fusion-bijection";
pub const STEP_INDUCED: &str = "induced";
pub const STEP_TWIST: &str = "twist";

struct Run<F: Field> {
    cert: Certificate<F>,
}

impl<F: Field> Run<F> {
    /// record a step; false once the chain is broken
    fn step(&mut self, name: &str, rep: Report) -> bool {
        let first = rep.records.iter().find(|r| matches!(r.status, Status::Fail | Status::Error | Status::NotVerified));
        let status = if first.is_some() { Status::Fail } else { Status::Pass };
        if let Some(rec) = first {
            self.cert.verdict = Verdict::NotVerified {
                step: name.to_string(),
                check: format!("{} at {}", rec.id, rec.subject),
            };
        }
        self.cert.steps.push((name.to_string(), status));
        self.cert.report.extend(rep);
        status == Status::Pass
    }
}

/// run the chain for the candidate `w_{M,N}: M⊗TN → M⊛N`, stopping at the first failure
pub fn representability_pipeline<F: Field>(amb: &Ambient<F>, w: Family2<F>, p: &ProbeSet<F>) -> Certificate<F> {
    let mut run = Run {
        cert: Certificate {
            verdict: Verdict::Representable,
            report: Report::new(),
            steps: Vec::new(),
            bimonad: None,
            induced: None,
        },
    };
    if !run.step(STEP_HEPTAGON, check_heptagon_tetragon(amb, &w, p)) {
        return run.cert;
    }

    let t = tet_from_w(amb, w.clone());
    let (mut rep, status) = check_tetrahedral(amb, &t, p);
    if status == TetStatus::HomomorphismOnly {
        rep.fail(TET_ISO, "probes", "w is not invertible");
    }
    rep.extend(check_roundtrip_from_w(amb, &w, p));
    rep.extend(check_roundtrip_from_tet(amb, &t, p));
    if !run.step(STEP_TETRAHEDRAL, rep) {
        return run.cert;
    }

    let tw = opmonoidal_t_from_w(amb, w.clone());
    run.cert.bimonad = Some(tw.clone());
    let mut rep = check_t0(&tw);
    rep.extend(check_fusion(&*tw as &dyn Fusion<F>, &*amb.tensor, p));
    rep.extend(check_bimonad(&*tw as &dyn Bimonad<F>, &*amb.tensor, p));
    if !run.step(STEP_BIMONAD, rep) {
        return run.cert;
    }

    let as_bimonad: Arc<dyn Bimonad<F>> = tw.clone();
    let as_fusion: Arc<dyn Fusion<F>> = tw.clone();
    let mut rep = check_roundtrip_from_bimonad(as_bimonad.clone(), amb.tensor.clone(), p);
    rep.extend(check_roundtrip_from_fusion(as_fusion, amb.tensor.clone(), p));
    if !run.step(STEP_BIJECTION, rep) {
        return run.cert;
    }

    let odot = Arc::new(Odot {
        bimonad: as_bimonad,
        tensor: amb.tensor.clone(),
    });
    run.cert.induced = Some(odot.clone());
    let mut rep = check_smc_axioms(&*odot, p);
    rep.extend(check_unit_monad_morphism(&odot, p));
    if !run.step(STEP_INDUCED, rep) {
        return run.cert;
    }

    run.step(STEP_TWIST, check_twist(amb, &w, &*odot, p));
    run.cert
}

/// `v: M⊙N → M⊛N` as a twist, i.e. the identity functor with structure `v`
pub fn check_twist<F: Field>(amb: &Ambient<F>, v: &Family2<F>, odot: &dyn SkewMonoidal<F>, p: &ProbeSet<F>) -> Report {
    let fun = IdentityWith {
        unit: amb.unit(),
        f2: &**v,
    };
    let mut rep = check_skewmon_functor(&fun, &*amb.skew, odot, p);
    for rec in &mut rep.records {
        let ax = match rec.id.as_str() {
            id if id == SMF1.id => TWIST1,
            id if id == SMF2.id => TWIST2,
            id if id == SMF3.id => TWIST3,
            id if id == SMF_NAT.id => TWIST_NATURAL,
            _ => continue,
        };
        rec.id = ax.id.to_string();
        rec.anchor = ax.anchor.to_string();
    }
    rep.sorted()
}

/// a bialgebroid-induced structure with `⊗` over its base, the canonical `w` and probes
///
/// over the ground field the objects are vector spaces and `⊛` is the induced
/// structure itself; over a larger base the objects are `R`-bimodules and `⊛` is
/// the quotient structure.
pub struct Setup<F: Field> {
    pub amb: Ambient<F>,
    pub w: Family2<F>,
    pub probes: ProbeSet<F>,
}

pub fn bialgebroid_setup<F: Field>(b: Arc<RightBialgebroid<F>>, max_maps: usize) -> Result<Setup<F>> {
    let base = b.base().clone();
    let tensor = Arc::new(BimodTensor::new(base.clone()));
    let ind = Arc::new(InducedSkewMon::new(b.clone()));
    if base.dim() == 1 {
        let amb = Ambient::new(ind.clone(), tensor.clone())?;
        return Ok(Setup {
            amb,
            w: canonical_w(ind, tensor),
            probes: default_probes(&b, max_maps)?,
        });
    }
    let qs = Arc::new(QuotientStructure::new(ind));
    let amb = Ambient::new(qs.clone(), tensor.clone())?;
    let free: Obj<F> = Arc::new(Bimodule::free(&base).relabel("R^e"));
    let probes = ProbeSet::with_hom_bases(vec![qs.unit(), free])?.thin_maps(max_maps);
    Ok(Setup {
        amb,
        w: canonical_w_quotient(qs, tensor),
        probes,
    })
}
