use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{LinearForm, Polynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::lie::StructureConstants;

/// The skew matrix with entry `(i, j) = sum_s C_ij^s x_s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureMatrix {
    dim: usize,
    entries: Vec<LinearForm>,
}

impl StructureMatrix {
    pub fn new(alg: &StructureConstants) -> Self {
        let n = alg.dim();
        let mut entries = alloc::vec![LinearForm::zero(); n * n];
        for ((i, j, s), c) in alg.entries() {
            let (i, j) = (i as usize - 1, j as usize - 1);
            entries[i * n + j].add_term(s, c);
            entries[j * n + i].add_term(s, &-c);
        }
        StructureMatrix { dim: n, entries }
    }

    /// Builds a matrix from the strictly upper triangle, filling the rest by
    /// skew-symmetry. `upper(i, j)` is called for `0 <= i < j < dim`.
    pub fn from_upper(dim: usize, mut upper: impl FnMut(usize, usize) -> LinearForm) -> Self {
        let mut entries = alloc::vec![LinearForm::zero(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let f = upper(i, j);
                entries[j * dim + i] = f.neg();
                entries[i * dim + j] = f;
            }
        }
        StructureMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at 0-based `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &LinearForm {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LinearForm::is_zero)
    }

    /// Substitutes `x_s = point[s - 1]` in every entry.
    pub fn evaluate(&self, point: &[Rational]) -> Result<RationalMatrix> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: point.len() });
        }
        Ok(RationalMatrix::from_fn(self.dim, self.dim, |i, j| {
            self.entry(i, j).eval(point).expect("point covers every variable")
        }))
    }

    pub fn to_polynomials(&self) -> Vec<Vec<Polynomial>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.entry(i, j).to_polynomial()).collect())
            .collect()
    }
}

/// Rank of a polynomial matrix over the field of rational functions.
///
/// Fraction-free elimination: after step `k` every live entry is a
/// `(k+1)`-minor of the input, so dividing by the previous pivot is exact.
/// Pivots minimize (total degree, term count, row, column).
pub fn polynomial_rank(mut m: Vec<Vec<Polynomial>>) -> Result<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = Polynomial::one();
    let mut k = 0;
    while k < rows.min(cols) {
        let mut pivot: Option<(u32, usize, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, p) in row.iter().enumerate().skip(k) {
                if let Some(d) = p.degree() {
                    let key = (d, p.num_terms(), i, j);
                    if pivot.is_none_or(|best| key < best) {
                        pivot = Some(key);
                    }
                }
            }
        }
        let Some((_, _, pi, pj)) = pivot else { break };
        m.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        let piv = m[k][k].clone();
        for i in k + 1..rows {
            let lead = core::mem::replace(&mut m[i][k], Polynomial::zero());
            for j in k + 1..cols {
                let mut v = piv.mul(&m[i][j]);
                if !lead.is_zero() && !m[k][j].is_zero() {
                    v = v.sub(&lead.mul(&m[k][j]));
                }
                m[i][j] = v.exact_div(&prev).map_err(|e| Error::Internal(format!("Bareiss division: {e}")))?;
            }
            // Scaling a row that has not been a pivot yet amounts to scaling
            // the same input row, so later divisions stay exact.
            let content = m[i][k + 1..].iter().fold(Rational::zero(), |g, p| Rational::content_gcd(&g, &p.content()));
            if !content.is_zero() && !content.is_one() {
                let inv = content.recip().expect("nonzero");
                for p in &mut m[i][k + 1..] {
                    *p = p.scale(&inv);
                }
            }
        }
        prev = piv;
        k += 1;
    }
    Ok(k)
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn polynomial_determinant(mut m: Vec<Vec<Polynomial>>) -> Result<Polynomial> {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "square matrix required");
    if n == 0 {
        return Ok(Polynomial::one());
    }
    let mut prev = Polynomial::one();
    let mut negate = false;
    for k in 0..n {
        let pivot = (k..n)
            .filter_map(|i| m[i][k].degree().map(|d| ((d, m[i][k].num_terms(), i), i)))
            .min()
            .map(|(_, i)| i);
        let Some(p) = pivot else { return Ok(Polynomial::zero()) };
        if p != k {
            m.swap(k, p);
            negate = !negate;
        }
        let piv = m[k][k].clone();
        for i in k + 1..n {
            let lead = core::mem::replace(&mut m[i][k], Polynomial::zero());
            for j in k + 1..n {
                let mut v = piv.mul(&m[i][j]);
                if !lead.is_zero() && !m[k][j].is_zero() {
                    v = v.sub(&lead.mul(&m[k][j]));
                }
                m[i][j] = v.exact_div(&prev).map_err(|e| Error::Internal(format!("Bareiss division: {e}")))?;
            }
        }
        prev = piv;
    }
    Ok(if negate { -&prev } else { prev })
}

pub fn symbolic_rank(m: &StructureMatrix) -> Result<usize> {
    polynomial_rank(m.to_polynomials())
}

/// Sampling parameters for the randomized rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RandomizedParams {
    pub trials: usize,
    pub bound: u64,
    pub seed: u64,
}

impl Default for RandomizedParams {
    fn default() -> Self {
        RandomizedParams { trials: 3, bound: 1 << 16, seed: 0 }
    }
}

/// Largest rank seen at `trials` integer points of `[-bound, bound]^n`,
/// together with the first point attaining it.
pub fn randomized_rank_with_witness(
    m: &StructureMatrix,
    params: &RandomizedParams,
) -> Result<(usize, Vec<Rational>)> {
    let n = m.dim();
    if params.trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if (params.bound as u128) < (n as u128) * (n as u128) {
        return Err(Error::InvalidArgument(format!("bound {} is below n^2 = {}", params.bound, n * n)));
    }
    let bound = i64::try_from(params.bound).map_err(|_| Error::InvalidArgument("bound too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut best: Option<(usize, Vec<Rational>)> = None;
    for _ in 0..params.trials {
        let point: Vec<Rational> = (0..n).map(|_| Rational::from(rng.gen_range(-bound..=bound))).collect();
        let r = m.evaluate(&point)?.rank();
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, point));
        }
    }
    Ok(best.expect("at least one trial"))
}

pub fn randomized_rank(m: &StructureMatrix, params: &RandomizedParams) -> Result<usize> {
    randomized_rank_with_witness(m, params).map(|(r, _)| r)
}
