//! one suite runner per command

use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bialgebroid::{
    check_bialgebroid, check_well_defined, check_with_induced, counit_mult_mirrored, is_hopf, InducedSkewMon, RightBialgebroid,
    GALOIS_HOPF_AGREEMENT, GALOIS_WELL_DEFINED,
};
use crate::ebimod::{
    check_entwined, check_phi_q, check_qcomodule, check_quotient_functor, check_split_equalizer, check_tmodule, check_tq_as_tensor,
    free_qcomodule, free_tmodule, free_tq_module, QuotientStructure,
};
use crate::error::Result;
use crate::exactlin::Field;
use crate::laxq::{check_hom_form, check_lax_monoidal, check_monoidal_qn, check_phi_hat, check_phi_hat_full, check_simplicial, LaxQ, MonoidalQ};
use crate::report::{Axiom, CheckRecord, Report, Status};
use crate::represent::{bialgebroid_setup, representability_pipeline};
use crate::ringmod::{Bimodule, Obj};
use crate::skewcat::{check_derived, check_smc, delta, naive_coherence_fails, ProbeSet, SkewMonoidal};

use super::instance::{Built, InstanceFile};

/// a data construction the checks depend on
pub const CONSTRUCT: Axiom = Axiom::new("construct", "the structure under test can be built");
pub const MUTATION_DETECTED: Axiom = Axiom::new("mutation.detected", "a single-entry corruption trips a named check");
pub const MUTATION_COVERAGE: Axiom = Axiom::new("mutation.coverage", "corruptions run and equivalent ones skipped");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// the bialgebroid axioms
    CheckBialgebroid,
    /// the induced product on probes and its well-definedness
    BuildSkewmon,
    /// skew-monoidal axioms, derived (co)monads, and the quotient structure
    CheckAxioms,
    /// the canonical map and the Hopf criterion
    Galois,
    /// the representability certificate
    Representability,
    /// the lax comonad and the monoidal structure of its levels
    Laxcomonad,
    /// modules, comodules and their lifts
    Modcomod,
    /// every suite
    Report,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckBialgebroid => "check-bialgebroid",
            Command::BuildSkewmon => "build-skewmon",
            Command::CheckAxioms => "check-axioms",
            Command::Galois => "galois",
            Command::Representability => "representability",
            Command::Laxcomonad => "laxcomonad",
            Command::Modcomod => "modcomod",
            Command::Report => "report",
        }
    }

    pub fn all() -> [Command; 7] {
        [
            Command::CheckBialgebroid,
            Command::BuildSkewmon,
            Command::CheckAxioms,
            Command::Galois,
            Command::Representability,
            Command::Laxcomonad,
            Command::Modcomod,
        ]
    }
}

/// which objects to probe with
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProbeLevel {
    /// the unit only
    Unit,
    /// the unit and a free module of rank two
    #[default]
    Default,
    /// adds `H`, or the free bimodule where bimodules are probed
    Full,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub probes: ProbeLevel,
    pub n_max: usize,
    pub max_maps: Option<usize>,
    pub seed_mutations: usize,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            probes: ProbeLevel::Default,
            n_max: 3,
            max_maps: None,
            seed_mutations: 0,
            timing: false,
        }
    }
}

const DEFAULT_MAX_MAPS: usize = 6;
/// highest level of the monoidal structure on the lax comonad's levels
const MONOIDAL_N_MAX: usize = 2;

pub struct Suite {
    pub name: String,
    pub report: Report,
    pub millis: Option<u64>,
}

/// suites and a command-specific summary
pub struct Outcome {
    pub suites: Vec<Suite>,
    pub summary: Map<String, Value>,
    /// one record per seeded corruption
    pub mutations: Option<Report>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.report.all_passed()) && self.mutations.as_ref().is_none_or(Report::all_passed)
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| s.report.records.iter())
    }
}

struct Runner<'a, F: Field> {
    built: &'a Built<F>,
    opts: &'a Options,
    suites: Vec<Suite>,
    summary: Map<String, Value>,
}

impl<'a, F: Field> Runner<'a, F> {
    fn suite(&mut self, name: &str, run: impl FnOnce() -> Report) {
        let start = Instant::now();
        let report = run();
        let millis = self.opts.timing.then(|| start.elapsed().as_millis() as u64);
        self.suites.push(Suite {
            name: name.to_string(),
            report,
            millis,
        });
    }

    fn note(&mut self, key: &str, value: Value) {
        self.summary.insert(key.to_string(), value);
    }

    fn max_maps(&self) -> usize {
        self.opts.max_maps.or(self.built.max_maps).unwrap_or(DEFAULT_MAX_MAPS)
    }

    /// right modules for the induced structure
    fn induced_probes(&self, b: &RightBialgebroid<F>) -> Result<ProbeSet<F>> {
        let mut objs = vec![b.unit_object()];
        if self.opts.probes != ProbeLevel::Unit {
            objs.push(Arc::new(Bimodule::free_right(b.base(), 2).relabel("R²")));
        }
        if self.opts.probes == ProbeLevel::Full {
            objs.push(b.h_module());
        }
        objs.extend(self.built.extra.iter().cloned());
        Ok(ProbeSet::with_hom_bases(objs)?.thin_maps(self.max_maps()))
    }

    /// bimodules, for the quotient structure and the lax comonad
    fn bimodule_probes(&self, unit: Obj<F>) -> Result<Vec<Obj<F>>> {
        let base = &self.built.base;
        let mut objs = vec![unit.clone()];
        if self.opts.probes != ProbeLevel::Unit {
            objs.push(Arc::new(Bimodule::free(base).relabel("R^e")));
        }
        if self.opts.probes == ProbeLevel::Full {
            objs.push(Arc::new(unit.direct_sum(&unit)?.relabel("R⊕R")));
        }
        Ok(objs)
    }

    fn run(&mut self, cmd: Command) {
        let checks = self.built.checks.clone();
        self.suite("load", || checks);
        match cmd {
            Command::Report => {
                for c in Command::all() {
                    self.body(c);
                }
            }
            c => self.body(c),
        }
    }

    fn body(&mut self, cmd: Command) {
        let b = match self.built.require_bialgebroid() {
            Ok(b) => b.clone(),
            Err(e) => {
                let msg = e.to_string();
                self.suite(cmd.name(), || {
                    let mut rep = Report::new();
                    rep.error(CONSTRUCT, "bialgebroid", msg);
                    rep
                });
                return;
            }
        };
        let ind = Arc::new(InducedSkewMon::new(b.clone()));
        match cmd {
            Command::CheckBialgebroid => self.check_bialgebroid(&b),
            Command::BuildSkewmon => self.build_skewmon(&ind),
            Command::CheckAxioms => self.check_axioms(&ind),
            Command::Galois => self.galois(&b),
            Command::Representability => self.representability(&b),
            Command::Laxcomonad => self.laxcomonad(&ind),
            Command::Modcomod => self.modcomod(&ind),
            Command::Report => unreachable!("expanded by run"),
        }
    }

    fn probes_or_error(&mut self, name: &str, p: Result<ProbeSet<F>>) -> Option<ProbeSet<F>> {
        match p {
            Ok(p) => Some(p),
            Err(e) => {
                self.suite(name, || construct_error("probes", e));
                None
            }
        }
    }

    fn check_bialgebroid(&mut self, b: &Arc<RightBialgebroid<F>>) {
        let Some(p) = self.probes_or_error("bialgebroid", self.induced_probes(b)) else { return };
        self.suite("bialgebroid", || check_with_induced(b, &p));
        self.note("dim_r", json!(b.dim_r()));
        self.note("dim_h", json!(b.dim_h()));
        self.note("counit_mult_mirrored", json!(counit_mult_mirrored(b)));
    }

    fn build_skewmon(&mut self, ind: &Arc<InducedSkewMon<F>>) {
        let Some(p) = self.probes_or_error("well-defined", self.induced_probes(ind.bialgebroid())) else { return };
        self.suite("well-defined", || check_well_defined(ind, &p.triples(), &[]));
        let mut products = Vec::new();
        for (m, n) in p.pairs() {
            let dim = ind.product(&m, &n).map(|x| json!(x.dim())).unwrap_or(Value::Null);
            products.push(json!({ "left": m.label(), "right": n.label(), "dim": dim }));
        }
        self.note("structure", json!(ind.name()));
        self.note("products", Value::Array(products));
    }

    fn check_axioms(&mut self, ind: &Arc<InducedSkewMon<F>>) {
        let Some(p) = self.probes_or_error("skew-monoidal", self.induced_probes(ind.bialgebroid())) else { return };
        self.suite("skew-monoidal", || check_smc(&**ind, &p));
        self.suite("derived", || check_derived(&**ind, &p));
        match naive_coherence_fails(&**ind) {
            Ok(w) => self.note("delta_mu_differs_from_gamma", json!(w)),
            Err(e) => self.note("delta_mu_differs_from_gamma", json!(e.to_string())),
        }
        let qs = QuotientStructure::new(ind.clone());
        let qp = self
            .bimodule_probes(qs.unit())
            .and_then(|objs| Ok(ProbeSet::with_hom_bases(objs)?.thin_maps(self.max_maps())));
        let Some(qp) = self.probes_or_error("quotient", qp) else { return };
        self.suite("quotient", || {
            let mut rep = check_smc(&qs, &qp);
            rep.extend(check_quotient_functor(&qs, &qp));
            rep.extend(check_tq_as_tensor(&qs, &qp.objects, &qp.maps));
            rep
        });
    }

    fn galois(&mut self, b: &Arc<RightBialgebroid<F>>) {
        let name = b.name().to_string();
        match is_hopf(b) {
            Ok(c) => {
                self.suite("galois", || {
                    let mut rep = Report::new();
                    rep.pass(GALOIS_WELL_DEFINED, &name);
                    rep.assert(
                        GALOIS_HOPF_AGREEMENT,
                        &name,
                        c.agree,
                        format!("canonical map rank {}, γ rank {}", c.galois_rank, c.gamma_rank),
                    );
                    rep
                });
                self.note("rank", json!(format!("{}/{}", c.galois_rank, c.galois_shape.1)));
                self.note("gamma_rank", json!(format!("{}/{}", c.gamma_rank, c.gamma_shape.1)));
                self.note("hopf", json!(c.hopf));
            }
            Err(e) => self.suite("galois", || {
                let mut rep = Report::new();
                rep.error(GALOIS_WELL_DEFINED, &name, e.to_string());
                rep
            }),
        }
    }

    fn representability(&mut self, b: &Arc<RightBialgebroid<F>>) {
        let setup = match bialgebroid_setup(b.clone(), self.max_maps()) {
            Ok(s) => s,
            Err(e) => return self.suite("representability", || construct_error("setup", e)),
        };
        let start = Instant::now();
        let cert = representability_pipeline(&setup.amb, setup.w.clone(), &setup.probes);
        let millis = self.opts.timing.then(|| start.elapsed().as_millis() as u64);
        let steps: Vec<Value> = cert.steps.iter().map(|(s, st)| json!({ "step": s, "status": st })).collect();
        self.note("verdict", json!(cert.verdict.to_string()));
        self.note("certificate", json!({ "verdict": cert.verdict, "steps": steps, "structure": setup.amb.skew.name() }));
        self.suites.push(Suite {
            name: "representability".into(),
            report: cert.report,
            millis,
        });
    }

    fn laxcomonad(&mut self, ind: &Arc<InducedSkewMon<F>>) {
        let b = ind.bialgebroid().clone();
        let n_max = self.opts.n_max;
        let q = LaxQ::new(ind.clone(), n_max);
        let probes = match self.bimodule_probes(Arc::new(Bimodule::regular(b.base()).relabel("R"))) {
            Ok(p) => p,
            Err(e) => return self.suite("lax-comonad", || construct_error("probes", e)),
        };
        self.suite("lax-comonad", || {
            let mut rep = check_simplicial(&q, &probes);
            rep.extend(check_lax_monoidal(&q, &probes));
            match free_qcomodule(&**ind, &ind.unit()) {
                Ok((x, c)) => rep.extend(check_phi_hat(&q, &x, &c)),
                Err(e) => rep.extend(construct_error("free comodule", e)),
            }
            rep
        });
        let nq = n_max.min(MONOIDAL_N_MAX);
        let mq = MonoidalQ::new(b, nq);
        self.suite("monoidal-levels", || {
            let mut rep = check_monoidal_qn(&mq, &probes);
            rep.extend(check_hom_form(&mq, &probes, nq));
            rep
        });
        self.note("n_max", json!(n_max));
        self.note("monoidal_n_max", json!(nq));
    }

    fn modcomod(&mut self, ind: &Arc<InducedSkewMon<F>>) {
        let s = &**ind;
        let r = s.unit();
        let nq = self.opts.n_max.min(MONOIDAL_N_MAX);
        self.suite("modules", || {
            let mut rep = Report::new();
            match free_tmodule(s, &r) {
                Ok((x, nabla)) => {
                    rep.extend(check_tmodule(s, &x, &nabla));
                    match delta(s, &r) {
                        Ok(d) => rep.extend(check_entwined(s, &x, &nabla, &d.mat)),
                        Err(e) => rep.extend(construct_error("δ_R", e)),
                    }
                }
                Err(e) => rep.extend(construct_error("free module", e)),
            }
            match free_qcomodule(s, &r) {
                Ok((x, c)) => {
                    rep.extend(check_qcomodule(s, &x, &c));
                    rep.extend(check_split_equalizer(s, &x, &c));
                    let q = LaxQ::new(ind.clone(), nq);
                    match s.eta(&r) {
                        Ok(eta) => rep.extend(check_phi_hat_full(&q, &[(x, c), (r.clone(), eta.mat)])),
                        Err(e) => rep.extend(construct_error("η_R", e)),
                    }
                }
                Err(e) => rep.extend(construct_error("free comodule", e)),
            }
            rep
        });
        let qs = QuotientStructure::new(ind.clone());
        self.suite("quotient-modules", || {
            let regular: Obj<F> = Arc::new(Bimodule::regular(ind.bialgebroid().base()).relabel("R"));
            let samples: Result<Vec<_>> = [qs.unit(), regular].iter().map(|n| free_tq_module(&qs, n)).collect();
            match samples {
                Ok(samples) => check_phi_q(&qs, &samples),
                Err(e) => construct_error("free modules", e),
            }
        });
    }
}

fn construct_error(subject: &str, e: crate::Error) -> Report {
    let mut rep = Report::new();
    rep.error(CONSTRUCT, subject, e.to_string());
    rep
}

/// run one command on a built instance
pub fn run_command<F: Field>(file: &InstanceFile, built: &Built<F>, cmd: Command, opts: &Options) -> Outcome {
    let mut runner = Runner {
        built,
        opts,
        suites: Vec::new(),
        summary: Map::new(),
    };
    runner.run(cmd);
    let mutations = (opts.seed_mutations > 0).then(|| seed_mutations(file, built, cmd, opts));
    Outcome {
        suites: runner.suites,
        summary: runner.summary,
        mutations,
    }
}

/// fixed so that mutation runs are reproducible
const MUTATION_SEED: u64 = 0x5eed;

/// `k` distinct single-entry corruptions (`+1`), each required to trip a named check
///
/// the bialgebroid axioms always run on a mutant next to the command's own suites.
/// a change that vanishes in the projected data (an entry of `Delta` inside the
/// balancing relations of `H⊗_k H`) gives the same bialgebroid; such mutants are
/// skipped and counted in the summary record.
pub fn seed_mutations<F: Field>(file: &InstanceFile, built: &Built<F>, cmd: Command, opts: &Options) -> Report {
    let mut sites = Vec::new();
    let mut probe = file.clone();
    for (path, m) in probe.matrices_mut() {
        for (i, row) in m.iter().enumerate() {
            for j in 0..row.len() {
                sites.push((path.clone(), i, j));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MUTATION_SEED);
    sites.shuffle(&mut rng);
    let inner = Options {
        seed_mutations: 0,
        timing: false,
        ..opts.clone()
    };
    let mut rep = Report::new();
    let (mut tried, mut equivalent) = (0, 0);
    for (path, i, j) in sites {
        if tried == opts.seed_mutations {
            break;
        }
        let mut mutant = file.clone();
        mutant.bump(&path, i, j);
        let subject = format!("{path}[{i}][{j}] + 1");
        let caught = match mutant.build(&built.field) {
            Err(e) => vec![format!("{} ({e})", CONSTRUCT.id)],
            Ok(mb) if same_data(built, &mb) => {
                equivalent += 1;
                continue;
            }
            Ok(mb) => {
                let mut out = run_command(&mutant, &mb, cmd, &inner);
                if let Some(b) = &mb.bialgebroid {
                    out.suites.push(Suite {
                        name: "bialgebroid".into(),
                        report: check_bialgebroid(b),
                        millis: None,
                    });
                }
                let ids: std::collections::BTreeSet<String> =
                    out.records().filter(|r| r.status != Status::Pass).map(|r| r.id.clone()).collect();
                ids.into_iter().collect()
            }
        };
        tried += 1;
        if caught.is_empty() {
            rep.fail(MUTATION_DETECTED, &subject, "no check failed");
        } else {
            rep.pass_with(MUTATION_DETECTED, &subject, format!("caught by {}", caught.join(", ")));
        }
    }
    rep.pass_with(
        MUTATION_COVERAGE,
        &built.name,
        format!("{tried} corruptions run, {equivalent} equivalent ones skipped"),
    );
    rep
}

/// equal algebras and equal projected structure maps
fn same_data<F: Field>(a: &Built<F>, b: &Built<F>) -> bool {
    if a.base.structure() != b.base.structure() || a.base.unit() != b.base.unit() {
        return false;
    }
    match (&a.bialgebroid, &b.bialgebroid) {
        (Some(x), Some(y)) => {
            x.total().structure() == y.total().structure()
                && x.total().unit() == y.total().unit()
                && x.source() == y.source()
                && x.target() == y.target()
                && x.delta() == y.delta()
                && x.counit() == y.counit()
        }
        (None, None) => true,
        _ => false,
    }
}
