use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Cokernel, Field, Mat, Subspace};

use super::{Algebra, BimodMap, Bimodule, Obj};

fn acts_unitally<F: Field>(alg: &Algebra<F>, fam: &[Mat<F>]) -> bool {
    alg.combine(fam, alg.unit()).map(|m| m.is_identity()).unwrap_or(false)
}

/// indices of basis elements whose relations span the whole family
fn relation_indices<F: Field>(alg: &Algebra<F>, a: &[Mat<F>], b: &[Mat<F>]) -> Vec<usize> {
    if acts_unitally(alg, a) && acts_unitally(alg, b) {
        alg.generators_mod_unit()
    } else {
        (0..alg.dim()).collect()
    }
}

/// `A ⊗_B C` as a quotient of `A ⊗_k C`
///
/// `right_act[b]` is the right action of `e_b` on the left factor and `left_act[b]`
/// the left action on the right factor. the relations are `a·b ⊗ c − a ⊗ b·c`.
pub fn tensor_quotient<F: Field>(alg: &Algebra<F>, right_act: &[Mat<F>], left_act: &[Mat<F>], da: usize, db: usize) -> Result<Cokernel<F>> {
    let f = alg.field();
    if right_act.len() != alg.dim() || left_act.len() != alg.dim() {
        return Err(Error::AlgebraMismatch(format!("{} action matrices for {}", right_act.len(), alg.name())));
    }
    let ia = Mat::identity(f, da);
    let ib = Mat::identity(f, db);
    let mut parts = Vec::new();
    for b in relation_indices(alg, right_act, left_act) {
        let rel = right_act[b].kron(&ib)?.sub(&ia.kron(&left_act[b])?)?;
        if !rel.is_zero() {
            parts.push(rel);
        }
    }
    let refs: Vec<&Mat<F>> = parts.iter().collect();
    let rels = Mat::hstack(f, da * db, &refs)?;
    Ok(rels.cokernel_projection())
}

/// `M ⊗_B N` with the residual outer actions
pub fn tensor_over<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<(Bimodule<F>, Cokernel<F>)> {
    if m.right_alg().fingerprint() != n.left_alg().fingerprint() {
        return Err(Error::AlgebraMismatch(format!(
            "{} is over {} on the right, {} is over {} on the left",
            m.label(),
            m.right_alg().name(),
            n.label(),
            n.left_alg().name()
        )));
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let q = tensor_quotient(m.right_alg(), m.right(), n.left(), dm, dn)?;
    let im = Mat::identity(f, dm);
    let inn = Mat::identity(f, dn);
    let left = m
        .left()
        .iter()
        .map(|a| q.transport(&a.kron(&inn)?))
        .collect::<Result<Vec<_>>>()?;
    let right = n
        .right()
        .iter()
        .map(|b| q.transport(&im.kron(b)?))
        .collect::<Result<Vec<_>>>()?;
    let out = Bimodule::new(
        q.dim(),
        m.left_alg().clone(),
        n.right_alg().clone(),
        left,
        right,
        format!("{}⊗{}", m.label(), n.label()),
    )?;
    Ok((out, q))
}

/// linear maps `X: k^dm → k^dn` with `X·a = b·X` for every pair `(a, b)`
///
/// the constraints are imposed one pair at a time, shrinking the solution space.
pub fn intertwiners<F: Field>(field: &F, dm: usize, dn: usize, pairs: &[(&Mat<F>, &Mat<F>)]) -> Result<Vec<Mat<F>>> {
    let im = Mat::identity(field, dm);
    let inn = Mat::identity(field, dn);
    // columns span the current solution space, X flattened row-major
    let mut basis = Mat::identity(field, dm * dn);
    for (a, b) in pairs {
        if a.shape() != (dm, dm) || b.shape() != (dn, dn) {
            return Err(Error::Shape {
                op: "intertwiner constraint",
                left: (dm, dn),
                right: (a.rows(), b.rows()),
            });
        }
        if basis.cols() == 0 {
            break;
        }
        let c = inn.kron(&a.transpose())?.sub(&b.kron(&im)?)?;
        let restricted = c.mul(&basis)?;
        basis = basis.mul(&restricted.kernel_basis())?;
    }
    Ok((0..basis.cols())
        .map(|j| Mat::from_fn(field, dn, dm, |r, c| basis.get(r * dm + c, j).clone()))
        .collect())
}

/// basis of the bimodule maps `m → n`
pub fn hom_over<F: Field>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<Vec<Mat<F>>> {
    if m.left_alg().fingerprint() != n.left_alg().fingerprint() || m.right_alg().fingerprint() != n.right_alg().fingerprint() {
        return Err(Error::AlgebraMismatch(format!("hom from {} to {}", m.label(), n.label())));
    }
    let mut pairs = Vec::new();
    for i in relation_indices(m.left_alg(), m.left(), n.left()) {
        pairs.push((&m.left()[i], &n.left()[i]));
    }
    for j in relation_indices(m.right_alg(), m.right(), n.right()) {
        pairs.push((&m.right()[j], &n.right()[j]));
    }
    intertwiners(m.field(), m.dim(), n.dim(), &pairs)
}

fn differences<F: Field>(fs: &[Mat<F>], gs: &[Mat<F>]) -> Result<Vec<Mat<F>>> {
    if fs.len() != gs.len() {
        return Err(Error::Invalid(format!("{} maps against {}", fs.len(), gs.len())));
    }
    fs.iter().zip(gs).map(|(f, g)| f.sub(g)).collect()
}

/// common kernel of `f_i − g_i`, all maps out of `source`
///
/// the source actions are restricted to the subspace and must preserve it.
pub fn equalizer_mats<F: Field>(source: &Bimodule<F>, fs: &[Mat<F>], gs: &[Mat<F>]) -> Result<(Bimodule<F>, Subspace<F>)> {
    let f = source.field();
    let diffs = differences(fs, gs)?;
    for d in &diffs {
        if d.cols() != source.dim() {
            return Err(Error::Shape {
                op: "equalizer",
                left: (d.rows(), source.dim()),
                right: d.shape(),
            });
        }
    }
    let refs: Vec<&Mat<F>> = diffs.iter().collect();
    let stacked = Mat::vstack(f, source.dim(), &refs)?;
    let sub = stacked.kernel_subspace();
    let left = source.left().iter().map(|a| sub.restrict(a)).collect::<Result<Vec<_>>>()?;
    let right = source.right().iter().map(|a| sub.restrict(a)).collect::<Result<Vec<_>>>()?;
    let eq = Bimodule::new(
        sub.dim(),
        source.left_alg().clone(),
        source.right_alg().clone(),
        left,
        right,
        format!("eq({})", source.label()),
    )?;
    Ok((eq, sub))
}

/// common cokernel of `f_i − g_i`, all maps into `target`
pub fn coequalizer_mats<F: Field>(target: &Bimodule<F>, fs: &[Mat<F>], gs: &[Mat<F>]) -> Result<(Bimodule<F>, Cokernel<F>)> {
    let f = target.field();
    let diffs = differences(fs, gs)?;
    for d in &diffs {
        if d.rows() != target.dim() {
            return Err(Error::Shape {
                op: "coequalizer",
                left: (target.dim(), d.cols()),
                right: d.shape(),
            });
        }
    }
    let refs: Vec<&Mat<F>> = diffs.iter().collect();
    let stacked = Mat::hstack(f, target.dim(), &refs)?;
    let q = stacked.cokernel_projection();
    let left = target.left().iter().map(|a| q.descend(a)).collect::<Result<Vec<_>>>()?;
    let right = target.right().iter().map(|a| q.descend(a)).collect::<Result<Vec<_>>>()?;
    let co = Bimodule::new(
        q.dim(),
        target.left_alg().clone(),
        target.right_alg().clone(),
        left,
        right,
        format!("coeq({})", target.label()),
    )?;
    Ok((co, q))
}

fn common_ends<F: Field>(fs: &[BimodMap<F>], gs: &[BimodMap<F>]) -> Result<(Obj<F>, Obj<F>)> {
    let first = fs.first().or(gs.first()).ok_or_else(|| Error::Invalid("empty map family".into()))?;
    let (s, t) = (first.source.clone(), first.target.clone());
    for m in fs.iter().chain(gs) {
        if m.source.fingerprint() != s.fingerprint() || m.target.fingerprint() != t.fingerprint() {
            return Err(Error::Invalid("maps are not parallel".into()));
        }
    }
    Ok((s, t))
}

/// equalizer of parallel families, with its inclusion
pub fn equalizer<F: Field>(fs: &[BimodMap<F>], gs: &[BimodMap<F>]) -> Result<(Obj<F>, BimodMap<F>)> {
    let (s, _) = common_ends(fs, gs)?;
    let fm: Vec<Mat<F>> = fs.iter().map(|m| m.mat.clone()).collect();
    let gm: Vec<Mat<F>> = gs.iter().map(|m| m.mat.clone()).collect();
    let (eq, sub) = equalizer_mats(&s, &fm, &gm)?;
    let eq = Arc::new(eq);
    let inc = BimodMap::new(sub.inclusion, eq.clone(), s)?;
    Ok((eq, inc))
}

/// coequalizer of parallel families, with its projection
pub fn coequalizer<F: Field>(fs: &[BimodMap<F>], gs: &[BimodMap<F>]) -> Result<(Obj<F>, BimodMap<F>)> {
    let (_, t) = common_ends(fs, gs)?;
    let fm: Vec<Mat<F>> = fs.iter().map(|m| m.mat.clone()).collect();
    let gm: Vec<Mat<F>> = gs.iter().map(|m| m.mat.clone()).collect();
    let (co, q) = coequalizer_mats(&t, &fm, &gm)?;
    let co = Arc::new(co);
    let proj = BimodMap::new(q.projection, t, co.clone())?;
    Ok((co, proj))
}

/// the combinations of `basis` on which the linear condition `cond` vanishes
pub fn restrict_homs<F: Field>(field: &F, basis: &[Mat<F>], cond: impl Fn(&Mat<F>) -> Result<Mat<F>>) -> Result<Vec<Mat<F>>> {
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    let mut cols = Vec::with_capacity(basis.len());
    for b in basis {
        cols.push(cond(b)?.data().to_vec());
    }
    let len = cols[0].len();
    let kernel = Mat::from_columns(field, len, &cols)?.kernel_basis();
    let (rows, ncols) = first.shape();
    Ok((0..kernel.cols())
        .map(|j| {
            let mut acc = Mat::zeros(field, rows, ncols);
            for (i, b) in basis.iter().enumerate() {
                let c = kernel.get(i, j);
                if !field.is_zero(c) {
                    acc = acc.add(&b.scale(c)).expect("same shape");
                }
            }
            acc
        })
        .collect())
}
