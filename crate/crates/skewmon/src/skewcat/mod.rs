//! right-monoidal (skew-monoidal) categories of modules
//!
//! a structure is a set of evaluators: the product on objects and arrows, the unit
//! object `R` and the comparison maps `γ_{L,M,N}: L⊛(M⊛N) → (L⊛M)⊛N`,
//! `η_M: M → R⊛M` and `ε_M: M⊛R → M`. axioms are checked on a finite probe set.

mod checks;
mod derived;
mod dual;
mod functor;
mod tensor;

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::Result;
use crate::exactlin::{Field, Mat};
use crate::report::{Axiom, Report};
use crate::ringmod::{hom_over, BimodMap, Obj};

pub use checks::{check_naturality, check_smc, check_smc_axioms};
pub use derived::*;
pub use dual::{dual_map, dual_object, Corrupted, OpRev, Part};
pub use functor::*;
pub use tensor::BimodTensor;

pub const SMC1: Axiom = Axiom::new("smc1.pentagon", "SMC1");
pub const SMC2: Axiom = Axiom::new("smc2.left-unit", "SMC2");
pub const SMC3: Axiom = Axiom::new("smc3.right-unit", "SMC3");
pub const SMC4: Axiom = Axiom::new("smc4.middle-unit", "SMC4");
pub const SMC5: Axiom = Axiom::new("smc5.unit", "SMC5");
pub const NAT_GAMMA: Axiom = Axiom::new("natural.gamma", "naturality of gamma");
pub const NAT_ETA: Axiom = Axiom::new("natural.eta", "naturality of eta");
pub const NAT_EPS: Axiom = Axiom::new("natural.eps", "naturality of eps");
pub const BIFUNCTOR_ID: Axiom = Axiom::new("bifunctor.identity", "product preserves identities");
pub const BIFUNCTOR_COMP: Axiom = Axiom::new("bifunctor.composition", "product preserves composition");

/// a right-monoidal structure on a category of finite-dimensional bimodules
pub trait SkewMonoidal<F: Field>: Send + Sync {
    fn name(&self) -> String;
    fn unit(&self) -> Obj<F>;
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>>;
    /// `f⊛g: A⊛C → B⊛D` for `f: A → B` and `g: C → D`
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>>;
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>>;
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>>;
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>>;

    /// the endomorphisms of `R` that act on objects, as matrices on `R`
    ///
    /// for modules over `R` these are left multiplications by a basis of `R`.
    fn e_basis(&self) -> Vec<Mat<F>> {
        Vec::new()
    }

    /// `f⊛N`
    fn map_left(&self, f: &BimodMap<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        self.product_map(f, &n.identity())
    }

    /// `M⊛g`
    fn map_right(&self, m: &Obj<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.product_map(&m.identity(), g)
    }

    /// the identity of `M⊛N`
    fn id2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(self.product(m, n)?.identity())
    }
}

impl<F: Field, S: SkewMonoidal<F> + ?Sized> SkewMonoidal<F> for Arc<S> {
    fn name(&self) -> String {
        (**self).name()
    }
    fn unit(&self) -> Obj<F> {
        (**self).unit()
    }
    fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
        (**self).product(a, b)
    }
    fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
        (**self).product_map(f, g)
    }
    fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        (**self).gamma(l, m, n)
    }
    fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        (**self).eta(m)
    }
    fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        (**self).eps(m)
    }
    fn e_basis(&self) -> Vec<Mat<F>> {
        (**self).e_basis()
    }
}

/// finite stand-in for "all objects": probe objects and arrows between them
#[derive(Clone)]
pub struct ProbeSet<F: Field> {
    pub objects: Vec<Obj<F>>,
    pub maps: Vec<BimodMap<F>>,
}

impl<F: Field> ProbeSet<F> {
    pub fn objects_only(objects: Vec<Obj<F>>) -> Self {
        ProbeSet { objects, maps: Vec::new() }
    }

    /// probe objects together with hom bases between every ordered pair
    pub fn with_hom_bases(objects: Vec<Obj<F>>) -> Result<Self> {
        let mut maps = Vec::new();
        for a in &objects {
            for b in &objects {
                for mat in hom_over(a, b)? {
                    maps.push(BimodMap::new(mat, a.clone(), b.clone())?);
                }
            }
        }
        Ok(ProbeSet { objects, maps })
    }

    /// keep at most `n` arrows, spread over the list
    pub fn thin_maps(mut self, n: usize) -> Self {
        if self.maps.len() > n && n > 0 {
            let step = self.maps.len().div_ceil(n);
            self.maps = self.maps.into_iter().step_by(step).collect();
        }
        self
    }

    pub fn pairs(&self) -> Vec<(Obj<F>, Obj<F>)> {
        let mut out = Vec::new();
        for a in &self.objects {
            for b in &self.objects {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    pub fn triples(&self) -> Vec<[Obj<F>; 3]> {
        let mut out = Vec::new();
        for a in &self.objects {
            for (b, c) in self.pairs() {
                out.push([a.clone(), b, c]);
            }
        }
        out
    }

    pub fn quadruples(&self) -> Vec<[Obj<F>; 4]> {
        let mut out = Vec::new();
        for (a, b) in self.pairs() {
            for (c, d) in self.pairs() {
                out.push([a.clone(), b.clone(), c, d]);
            }
        }
        out
    }
}

/// subject label for an object tuple
pub fn tuple_label<F: Field>(objs: &[&Obj<F>]) -> String {
    let names: Vec<&str> = objs.iter().map(|o| o.label()).collect();
    format!("({})", names.join(","))
}

/// matrix of a composite `maps[0] ∘ maps[1] ∘ …`, checking that the ends match
pub fn comp<F: Field>(maps: &[&BimodMap<F>]) -> Result<Mat<F>> {
    Ok(BimodMap::chain(maps)?.mat)
}

/// evaluate `f` on every item in parallel and merge the reports in a stable order
pub(crate) fn par_report<T: Sync>(items: &[T], f: impl Fn(&T) -> Report + Sync + Send) -> Report {
    let parts: Vec<Report> = items.par_iter().map(f).collect();
    let mut rep = Report::new();
    for p in parts {
        rep.extend(p);
    }
    rep
}

#[cfg(test)]
pub(crate) mod testing {
    //! the tensor product over the ground field, a strict monoidal structure

    use std::sync::Arc;

    use super::SkewMonoidal;
    use crate::error::Result;
    use crate::exactlin::{Field, Mat};
    use crate::ringmod::{Algebra, BimodMap, Bimodule, Obj};

    pub struct GroundTensor<F: Field> {
        pub field: F,
        pub k: Arc<Algebra<F>>,
    }

    impl<F: Field> GroundTensor<F> {
        pub fn new(field: &F) -> Self {
            GroundTensor {
                field: field.clone(),
                k: Arc::new(Algebra::ground(field)),
            }
        }

        pub fn space(&self, n: usize, label: &str) -> Obj<F> {
            Arc::new(Bimodule::right_module(self.k.clone(), vec![Mat::identity(&self.field, n)], label).unwrap())
        }
    }

    impl<F: Field> SkewMonoidal<F> for GroundTensor<F> {
        fn name(&self) -> String {
            "vect".into()
        }
        fn unit(&self) -> Obj<F> {
            self.space(1, "k")
        }
        fn product(&self, a: &Obj<F>, b: &Obj<F>) -> Result<Obj<F>> {
            Ok(self.space(a.dim() * b.dim(), &format!("({}⊛{})", a.label(), b.label())))
        }
        fn product_map(&self, f: &BimodMap<F>, g: &BimodMap<F>) -> Result<BimodMap<F>> {
            BimodMap::new(
                f.mat.kron(&g.mat)?,
                self.product(&f.source, &g.source)?,
                self.product(&f.target, &g.target)?,
            )
        }
        fn gamma(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
            let s = self.product(l, &self.product(m, n)?)?;
            let t = self.product(&self.product(l, m)?, n)?;
            BimodMap::new(Mat::identity(&self.field, s.dim()), s, t)
        }
        fn eta(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
            BimodMap::new(Mat::identity(&self.field, m.dim()), m.clone(), self.product(&self.unit(), m)?)
        }
        fn eps(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
            BimodMap::new(Mat::identity(&self.field, m.dim()), self.product(m, &self.unit())?, m.clone())
        }
        fn e_basis(&self) -> Vec<Mat<F>> {
            vec![Mat::identity(&self.field, 1)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::testing::GroundTensor;
    use super::*;
    use crate::exactlin::PrimeField;

    fn setup() -> (GroundTensor<PrimeField>, ProbeSet<PrimeField>) {
        let s = GroundTensor::new(&PrimeField::new(3).unwrap());
        let objs = vec![s.unit(), s.space(2, "V"), s.space(3, "W")];
        let p = ProbeSet::with_hom_bases(objs).unwrap().thin_maps(12);
        (s, p)
    }

    #[test]
    fn ground_tensor_satisfies_everything() {
        let (s, p) = setup();
        let rep = check_smc(&s, &p);
        assert!(rep.all_passed(), "{rep}");
        assert!(rep.passed(SMC1.id));
        let rep = check_derived(&s, &p);
        assert!(rep.all_passed(), "{rep}");
        assert!(!naive_coherence_fails(&s).unwrap());
    }

    #[test]
    fn corruption_is_named() {
        let (s, p) = setup();
        let bad = Corrupted { inner: s, part: Part::Gamma };
        let rep = check_smc_axioms(&bad, &p);
        assert!(rep.failed_ids().contains(SMC1.id));
        let rep = check_distributive_law(&bad, &p);
        assert!(rep.failed_ids().contains(SMC14.id));
        let (s, p) = setup();
        let bad = Corrupted { inner: s, part: Part::Eps };
        let rep = check_smc_axioms(&bad, &p);
        assert!(rep.failed_ids().contains(SMC5.id) || rep.failed_ids().contains(SMC3.id));
    }

    #[test]
    fn op_rev_is_an_involution() {
        let (s, p) = setup();
        let d = OpRev::new(OpRev::new(GroundTensor::new(&s.field)));
        for (a, b) in p.pairs() {
            assert_eq!(d.product(&a, &b).unwrap().fingerprint(), s.product(&a, &b).unwrap().fingerprint());
        }
        for [a, b, c] in p.triples() {
            assert_eq!(d.gamma(&a, &b, &c).unwrap().mat, s.gamma(&a, &b, &c).unwrap().mat);
        }
        let single = OpRev::new(GroundTensor::new(&s.field));
        let dp = ProbeSet::with_hom_bases(p.objects.iter().map(dual_object).collect()).unwrap().thin_maps(8);
        assert!(check_smc(&single, &dp).all_passed());
    }

    struct BadF2<'a>(IdentityFunctor<'a, PrimeField>);

    impl FunctorData<PrimeField> for BadF2<'_> {
        fn obj(&self, x: &Obj<PrimeField>) -> Result<Obj<PrimeField>> {
            self.0.obj(x)
        }
        fn arrow(&self, f: &BimodMap<PrimeField>) -> Result<BimodMap<PrimeField>> {
            self.0.arrow(f)
        }
    }

    impl SkewMonFunctor<PrimeField> for BadF2<'_> {
        fn f2(&self, x: &Obj<PrimeField>, y: &Obj<PrimeField>) -> Result<BimodMap<PrimeField>> {
            let mut m = self.0.f2(x, y)?;
            let v = if *m.mat.get(0, 0) == 1 { 2 } else { 1 };
            m.mat.set(0, 0, v);
            Ok(m)
        }
        fn f0(&self) -> Result<BimodMap<PrimeField>> {
            self.0.f0()
        }
    }

    #[test]
    fn functor_checks() {
        let (s, p) = setup();
        let id = IdentityFunctor { on: &s };
        assert!(check_skewmon_functor(&id, &s, &s, &p).all_passed());
        assert!(check_skewopmon_functor(&id, &s, &s, &p).all_passed());
        assert!(check_monad_morphism(&id, &s, &s, &p).all_passed());
        assert!(check_comonad_morphism(&id, &s, &s, &p).all_passed());
        for x in &p.objects {
            assert!(monad_morphism_from_functor(&id, &s, &s, x).unwrap().mat.is_identity());
        }
        let nu = |x: &Obj<PrimeField>| Ok(x.identity());
        assert!(check_monoidal_nat(&nu, &id, &id, &s, &s, &p).all_passed());
        let bad = BadF2(IdentityFunctor { on: &s });
        let rep = check_skewmon_functor(&bad, &s, &s, &p);
        assert!(rep.failed_ids().contains(SMF1.id));
        assert!(!check_monad_morphism(&bad, &s, &s, &p).all_passed());
    }
}
