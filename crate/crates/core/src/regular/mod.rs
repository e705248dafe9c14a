//! Kernels `G^f` at functionals, regularity and the regular set.

mod family;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Polynomial, Rational, RationalMatrix, Subspace};
use crate::error::{Error, Result};
use crate::index::{index_of, polynomial_determinant, StructureMatrix};
use crate::lie::{StructureConstants, SAMPLE_RANGE};

pub use family::{verify_family, BranchReport, FamilyReport, FunctionalFamily, TiedGroup, Verdict};

/// Coordinates `p` of `f = sum_s p_s x_s*`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Functional(pub Vec<Rational>);

impl Functional {
    pub fn zero(n: usize) -> Self {
        Functional(alloc::vec![Rational::zero(); n])
    }

    pub fn dual_basis(n: usize, k: u32) -> Self {
        Functional(crate::lie::basis_vector(n, k))
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, c: &Rational) -> Functional {
        Functional(self.0.iter().map(|p| p * c).collect())
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegularityReport {
    pub functional: Functional,
    pub kernel_dim: usize,
    pub kernel_basis: Subspace,
    pub is_regular: bool,
    pub algebra_index: usize,
}

/// `M(p)_ij = sum_s p_s C_ij^s`.
pub fn evaluated_matrix(alg: &StructureConstants, f: &Functional) -> Result<RationalMatrix> {
    let n = alg.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: f.dim() });
    }
    let mut m = RationalMatrix::zeros(n, n);
    for ((i, j, s), c) in alg.entries() {
        let p = &f.0[s as usize - 1];
        if p.is_zero() {
            continue;
        }
        let (i, j) = (i as usize - 1, j as usize - 1);
        let v = m.get(i, j) + &(c * p);
        m.set(j, i, -&v);
        m.set(i, j, v);
    }
    Ok(m)
}

/// Kernel report for an algebra whose index is already known.
pub fn kernel_with_index(alg: &StructureConstants, f: &Functional, algebra_index: usize) -> Result<RegularityReport> {
    let kernel_basis = evaluated_matrix(alg, f)?.kernel();
    let kernel_dim = kernel_basis.dim();
    if kernel_dim < algebra_index {
        return Err(Error::Internal(alloc::format!(
            "kernel dimension {kernel_dim} below index {algebra_index}"
        )));
    }
    Ok(RegularityReport { functional: f.clone(), kernel_dim, kernel_basis, is_regular: kernel_dim == algebra_index, algebra_index })
}

/// `G^f = {x : f([x, y]) = 0 for all y}` and whether `f` is regular.
pub fn kernel_at(alg: &StructureConstants, f: &Functional) -> Result<RegularityReport> {
    let chi = index_of(alg)?;
    kernel_with_index(alg, f, chi)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RegularSearch {
    pub report: RegularityReport,
    pub attempts: usize,
    pub seed: u64,
}

/// Tries the zero functional, each dual basis vector, each sum of two dual
/// basis vectors, then random functionals in `[-99, 99]^n`.
pub fn find_regular(alg: &StructureConstants, seed: u64, max_attempts: usize) -> Result<RegularSearch> {
    let n = alg.dim();
    let chi = index_of(alg)?;
    let mut attempts = 0;
    let mut sparse = alloc::vec![Functional::zero(n)];
    sparse.extend((1..=n as u32).map(|k| Functional::dual_basis(n, k)));
    for a in 1..=n as u32 {
        for b in a + 1..=n as u32 {
            let mut f = Functional::dual_basis(n, a);
            f.0[b as usize - 1] = Rational::one();
            sparse.push(f);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sparse = sparse.into_iter();
    loop {
        if attempts >= max_attempts {
            return Err(Error::AttemptsExhausted(attempts));
        }
        let f = sparse.next().unwrap_or_else(|| {
            Functional((0..n).map(|_| Rational::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))).collect())
        });
        attempts += 1;
        let report = kernel_with_index(alg, &f, chi)?;
        if report.is_regular {
            return Ok(RegularSearch { report, attempts, seed });
        }
    }
}

/// Largest number of minors `regular_set_minors` will enumerate.
pub const MINOR_LIMIT: u128 = 1_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&i| cur[i] < n - k + i) else { break };
        cur[pos] += 1;
        for i in pos + 1..k {
            cur[i] = cur[i - 1] + 1;
        }
    }
    out
}

/// All distinct nonzero minors of order `n - index` of the structure matrix,
/// as polynomials in `p_1..p_n`. A functional is regular exactly when one of
/// them is nonzero at it; an empty list means every functional is regular.
pub fn regular_set_minors(alg: &StructureConstants) -> Result<Vec<Polynomial>> {
    let n = alg.dim();
    let chi = index_of(alg)?;
    let r = n - chi;
    if r == 0 {
        return Ok(Vec::new());
    }
    let count = binomial(n, r).pow(2);
    if count > MINOR_LIMIT {
        return Err(Error::MinorGuard { count, limit: MINOR_LIMIT });
    }
    let polys = StructureMatrix::new(alg).to_polynomials();
    let subs = subsets(n, r);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rows in &subs {
        for cols in &subs {
            let sub: Vec<Vec<Polynomial>> =
                rows.iter().map(|&i| cols.iter().map(|&j| polys[i][j].clone()).collect()).collect();
            let det = polynomial_determinant(sub)?;
            if !det.is_zero() && seen.insert(alloc::format!("{det}")) {
                out.push(det);
            }
        }
    }
    Ok(out)
}

/// Whether some minor is nonzero at `f`.
pub fn regular_by_minors(minors: &[Polynomial], f: &Functional) -> Result<bool> {
    if minors.is_empty() {
        return Ok(true);
    }
    for m in minors {
        if !m.eval(f.coords())?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}
