//! the lax comonad `𝐐` of a right-monoidal category, its comodules, and its
//! monoidal structure on bimodules
//!
//! `𝐐_n M` is the joint equalizer of `λ_i` and `ρ_i`, `i = 1..n`, inside `Qⁿ φM`.
//! the simplicial structure comes from finite ordinals: a monotone map `f: m → n`
//! acts contravariantly as `𝐐_f: 𝐐_n → 𝐐_m`.

mod comodule;
mod comonad;
mod monoidal;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use comodule::*;
pub use comonad::*;
pub use monoidal::*;

/// an order-preserving map `{0..source} → {0..target}`
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonotoneMap {
    pub source: usize,
    pub target: usize,
    pub values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: usize, target: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source {
            return Err(Error::Invalid(format!("{} values for a map out of {source}", values.len())));
        }
        if values.iter().any(|&v| v >= target) {
            return Err(Error::Invalid(format!("value out of range {target}: {values:?}")));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("not monotone: {values:?}")));
        }
        Ok(MonotoneMap { source, target, values })
    }

    pub fn identity(n: usize) -> Self {
        MonotoneMap {
            source: n,
            target: n,
            values: (0..n).collect(),
        }
    }

    /// `self∘g`
    pub fn after(&self, g: &MonotoneMap) -> Result<Self> {
        if g.target != self.source {
            return Err(Error::Invalid(format!("cannot compose {self} after {g}")));
        }
        Ok(MonotoneMap {
            source: g.source,
            target: self.target,
            values: g.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    /// all monotone maps `m → n`
    pub fn all(m: usize, n: usize) -> Vec<Self> {
        fn go(m: usize, n: usize, from: usize, acc: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
            if acc.len() == m {
                out.push(MonotoneMap {
                    source: m,
                    target: n,
                    values: acc.clone(),
                });
                return;
            }
            for v in from..n {
                acc.push(v);
                go(m, n, v, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(m, n, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}{:?}", self.source, self.target, self.values)
    }
}

/// `i+(2→1)+j` or `i+(0→1)+j`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Elementary {
    /// merges positions `i` and `i+1`
    Merge { i: usize, j: usize },
    /// misses the value `i`
    Insert { i: usize, j: usize },
}

impl Elementary {
    pub fn source(&self) -> usize {
        match *self {
            Elementary::Merge { i, j } => i + 2 + j,
            Elementary::Insert { i, j } => i + j,
        }
    }

    pub fn target(&self) -> usize {
        match *self {
            Elementary::Merge { i, j } | Elementary::Insert { i, j } => i + 1 + j,
        }
    }

    pub fn as_map(&self) -> MonotoneMap {
        let values = match *self {
            Elementary::Merge { i, .. } => (0..self.source()).map(|p| if p <= i { p } else { p - 1 }).collect(),
            Elementary::Insert { i, .. } => (0..self.source()).map(|p| if p < i { p } else { p + 1 }).collect(),
        };
        MonotoneMap {
            source: self.source(),
            target: self.target(),
            values,
        }
    }

    /// every elementary map with source and target at most `n`
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for t in 1..=n {
            for i in 0..t {
                if t < n {
                    out.push(Elementary::Merge { i, j: t - 1 - i });
                }
                out.push(Elementary::Insert { i, j: t - 1 - i });
            }
        }
        out
    }
}

impl fmt::Display for Elementary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elementary::Merge { i, j } => write!(f, "{i}+(2→1)+{j}"),
            Elementary::Insert { i, j } => write!(f, "{i}+(0→1)+{j}"),
        }
    }
}

/// normal form `f = e_k∘…∘e_1`, listed in the order of application: merges first
/// (leftmost pair first), then insertions (smallest missed value first)
pub fn decompose(f: &MonotoneMap) -> Vec<Elementary> {
    let mut merges = Vec::new();
    let mut vals = f.values.clone();
    // f = g∘merge_p whenever positions p, p+1 agree
    while let Some(p) = vals.windows(2).position(|w| w[0] == w[1]) {
        merges.push(Elementary::Merge { i: p, j: vals.len() - 2 - p });
        vals.remove(p + 1);
    }
    // vals is now injective into f.target; peel off missed values from the top
    let mut inserts = Vec::new();
    let mut target = f.target;
    while vals.len() < target {
        let v = (0..target).rev().find(|v| !vals.contains(v)).expect("a missed value");
        inserts.push(Elementary::Insert { i: v, j: target - 1 - v });
        for x in vals.iter_mut() {
            if *x > v {
                *x -= 1;
            }
        }
        target -= 1;
    }
    inserts.reverse();
    merges.extend(inserts);
    merges
}

/// the composite of a list of elementary maps in order of application
pub fn compose_all(source: usize, list: &[Elementary]) -> Result<MonotoneMap> {
    list.iter().try_fold(MonotoneMap::identity(source), |acc, e| e.as_map().after(&acc))
}

#[cfg(test)]
mod tests;
