use alloc::format;
use alloc::vec::Vec;

use super::index_of;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lie::StructureConstants;

/// The bracket `[,]_t = [,]_0 + sum_k t^k [,]_k`, truncated to finitely many
/// terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deformation {
    base: StructureConstants,
    perturbations: Vec<(u32, StructureConstants)>,
}

impl Deformation {
    pub fn new(base: StructureConstants, perturbations: Vec<(u32, StructureConstants)>) -> Result<Self> {
        for (k, p) in &perturbations {
            if *k == 0 {
                return Err(Error::BadDeformation("perturbation degree must be at least 1".into()));
            }
            if p.dim() != base.dim() {
                return Err(Error::DimensionMismatch { expected: base.dim(), got: p.dim() });
            }
        }
        Ok(Deformation { base, perturbations })
    }

    pub fn base(&self) -> &StructureConstants {
        &self.base
    }

    pub fn perturbations(&self) -> &[(u32, StructureConstants)] {
        &self.perturbations
    }

    /// Structure constants of `[,]_t`.
    pub fn specialize(&self, t: &Rational) -> StructureConstants {
        let mut out = self.base.clone();
        for (k, p) in &self.perturbations {
            let w = t.pow(*k);
            for ((i, j, s), c) in p.entries() {
                out.add(i, j, s, &(c * &w)).expect("same dimension");
            }
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeformationReport {
    pub index_at_zero: usize,
    pub samples: Vec<(Rational, usize)>,
    /// Minimum over the samples.
    pub generic_index: usize,
    /// `generic_index <= index_at_zero`.
    pub monotone: bool,
}

/// Indices of the specializations at `0` and at each sample. Needs at least
/// three distinct nonzero samples; every specialization must be a Lie algebra.
pub fn deformation_index(def: &Deformation, t_samples: &[Rational]) -> Result<DeformationReport> {
    let mut distinct: Vec<&Rational> = t_samples.iter().collect();
    distinct.sort();
    distinct.dedup();
    if t_samples.iter().any(Rational::is_zero) {
        return Err(Error::BadDeformation("samples must be nonzero".into()));
    }
    if distinct.len() < 3 {
        return Err(Error::BadDeformation(format!(
            "need at least 3 distinct samples, got {}",
            distinct.len()
        )));
    }
    let at = |t: &Rational| -> Result<usize> {
        let alg = def.specialize(t);
        match index_of(&alg) {
            Err(Error::InvalidAlgebra { i, j, k, .. }) => Err(Error::BadDeformation(format!(
                "specialization at t = {t} fails the Jacobi identity on (x{i}, x{j}, x{k})"
            ))),
            other => other,
        }
    };
    let index_at_zero = at(&Rational::zero())?;
    let mut samples = Vec::with_capacity(t_samples.len());
    for t in t_samples {
        samples.push((t.clone(), at(t)?));
    }
    let generic_index = samples.iter().map(|(_, c)| *c).min().expect("nonempty");
    Ok(DeformationReport { index_at_zero, samples, generic_index, monotone: generic_index <= index_at_zero })
}
