//! bimonads, fusion operators and the representability of a right-monoidal
//! structure `⊛` by a bimonad on a monoidal structure `⊗` with the same unit
//!
//! the monoidal structure is any [`SkewMonoidal`] whose comparison maps are
//! invertible: `γ` plays the associator `L⊗(M⊗N) → (L⊗M)⊗N`, `η` the inverse left
//! unitor and `ε` the right unitor. families of arrows indexed by objects (`w`, `t`,
//! twists) are closures.

mod bimonad;
mod duality;
mod pipeline;
mod tetra;

#[cfg(test)]
mod tests;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::ringmod::{BimodMap, Obj};
use crate::skewcat::{mu, FunctorData, SkewMonoidal};

pub use bimonad::*;
pub use duality::*;
pub use pipeline::*;
pub use tetra::*;

/// `(M, N) ↦ arrow`
pub type Family2<F> = Arc<dyn Fn(&Obj<F>, &Obj<F>) -> Result<BimodMap<F>> + Send + Sync>;
/// `(L, M, N) ↦ arrow`
pub type Family3<F> = Arc<dyn Fn(&Obj<F>, &Obj<F>, &Obj<F>) -> Result<BimodMap<F>> + Send + Sync>;

/// a right-monoidal `⊛` and a monoidal `⊗` on the same objects, with the same unit
#[derive(Clone)]
pub struct Ambient<F: Field> {
    pub skew: Arc<dyn SkewMonoidal<F>>,
    pub tensor: Arc<dyn SkewMonoidal<F>>,
}

impl<F: Field> Ambient<F> {
    pub fn new(skew: Arc<dyn SkewMonoidal<F>>, tensor: Arc<dyn SkewMonoidal<F>>) -> Result<Self> {
        if skew.unit().fingerprint() != tensor.unit().fingerprint() {
            return Err(Error::Invalid(format!("units of {} and {} differ", skew.name(), tensor.name())));
        }
        Ok(Ambient { skew, tensor })
    }

    pub fn unit(&self) -> Obj<F> {
        self.skew.unit()
    }

    /// `TN = R⊛N`
    pub fn t(&self, n: &Obj<F>) -> Result<Obj<F>> {
        self.skew.product(&self.unit(), n)
    }

    /// `Tf = R⊛f`
    pub fn t_map(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        self.skew.map_right(&self.unit(), f)
    }

    /// multiplication of `T`
    pub fn mu(&self, n: &Obj<F>) -> Result<BimodMap<F>> {
        mu(&*self.skew, n)
    }

    /// `L⊗(M⊗N) → (L⊗M)⊗N`
    pub fn asso(&self, l: &Obj<F>, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.gamma(l, m, n)
    }

    /// `M → R⊗M`
    pub fn luni_inv(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.eta(m)
    }

    /// `R⊗M → M`
    pub fn luni(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.eta(m)?.inverse()
    }

    /// `M⊗R → M`
    pub fn runi(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.eps(m)
    }
}

/// `⟨O, ω, ι⟩` on a category of bimodules
pub trait Monad<F: Field>: FunctorData<F> {
    /// `ω_M: OOM → OM`
    fn omega(&self, m: &Obj<F>) -> Result<BimodMap<F>>;
    /// `ι_M: M → OM`
    fn iota(&self, m: &Obj<F>) -> Result<BimodMap<F>>;
}

/// a monad with an opmonoidal structure `O^{M,N}: O(M⊗N) → OM⊗ON`, `O⁰: OR → R`
pub trait Bimonad<F: Field>: Monad<F> {
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>>;
    fn o0(&self) -> Result<BimodMap<F>>;
}

/// a monad with a fusion operator `h_{M,N}: O(M⊗ON) → OM⊗ON` and `O⁰: OR → R`
pub trait Fusion<F: Field>: Monad<F> {
    fn h(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>>;
    fn h0(&self) -> Result<BimodMap<F>>;
}

/// the identity monad with identity structure maps
pub struct IdentityBimonad<F: Field> {
    pub tensor: Arc<dyn SkewMonoidal<F>>,
}

impl<F: Field> FunctorData<F> for IdentityBimonad<F> {
    fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
        Ok(x.clone())
    }
    fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
        Ok(f.clone())
    }
}

impl<F: Field> Monad<F> for IdentityBimonad<F> {
    fn omega(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(m.identity())
    }
    fn iota(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
        Ok(m.identity())
    }
}

impl<F: Field> Bimonad<F> for IdentityBimonad<F> {
    fn o2(&self, m: &Obj<F>, n: &Obj<F>) -> Result<BimodMap<F>> {
        self.tensor.id2(m, n)
    }
    fn o0(&self) -> Result<BimodMap<F>> {
        Ok(self.tensor.unit().identity())
    }
}

/// forward the monad part of a wrapped bimonad or fusion operator
macro_rules! forward_monad {
    ($ty:ident, $field:ident) => {
        impl<F: Field> crate::skewcat::FunctorData<F> for $ty<F> {
            fn obj(&self, x: &Obj<F>) -> Result<Obj<F>> {
                self.$field.obj(x)
            }
            fn arrow(&self, f: &BimodMap<F>) -> Result<BimodMap<F>> {
                self.$field.arrow(f)
            }
        }

        impl<F: Field> crate::represent::Monad<F> for $ty<F> {
            fn omega(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
                self.$field.omega(m)
            }
            fn iota(&self, m: &Obj<F>) -> Result<BimodMap<F>> {
                self.$field.iota(m)
            }
        }
    };
}
pub(crate) use forward_monad;
