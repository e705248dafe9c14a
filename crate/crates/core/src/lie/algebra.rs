use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Structure constants `C_ij^s` of a Lie bracket `[x_i, x_j] = sum_s C_ij^s x_s`
/// on the basis `x_1, ..., x_n`.
///
/// Only `i < j` is stored; the other half follows from antisymmetry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureConstants {
    dim: usize,
    entries: BTreeMap<(u32, u32, u32), Rational>,
}

/// One nonzero coordinate of a Jacobi sum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiViolation {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub t: u32,
    pub residual: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<JacobiViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidAlgebra {
                count: self.violations.len(),
                i: v.i,
                j: v.j,
                k: v.k,
                t: v.t,
                residual: v.residual.clone(),
            }),
        }
    }
}

impl StructureConstants {
    /// The abelian algebra of dimension `dim`.
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(StructureConstants { dim, entries: BTreeMap::new() })
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, index: u32) -> Result<()> {
        if index == 0 || index as usize > self.dim {
            return Err(Error::IndexOutOfRange { index, dim: self.dim });
        }
        Ok(())
    }

    /// Adds `c` to the coefficient of `x_s` in `[x_i, x_j]`, accepting either
    /// order of `i` and `j`.
    pub fn add(&mut self, i: u32, j: u32, s: u32, c: &Rational) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(s)?;
        if c.is_zero() {
            return Ok(());
        }
        if i == j {
            return Err(Error::DiagonalBracket(i));
        }
        let (key, value) = if i < j { ((i, j, s), c.clone()) } else { ((j, i, s), -c) };
        let entry = self.entries.entry(key).or_insert_with(Rational::zero);
        *entry += &value;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
        Ok(())
    }

    /// Builder form of [`add`](Self::add) for integer coefficients; panics on
    /// out-of-range indices.
    pub fn with(mut self, i: u32, j: u32, s: u32, c: impl Into<Rational>) -> Self {
        self.add(i, j, s, &c.into()).expect("valid bracket term");
        self
    }

    /// `C_ij^s` for any `i`, `j`.
    pub fn get(&self, i: u32, j: u32, s: u32) -> Rational {
        match i.cmp(&j) {
            core::cmp::Ordering::Equal => Rational::zero(),
            core::cmp::Ordering::Less => self.entries.get(&(i, j, s)).cloned().unwrap_or_else(Rational::zero),
            core::cmp::Ordering::Greater => -self.get(j, i, s),
        }
    }

    /// Stored entries `((i, j, s), C_ij^s)` with `i < j`, ordered by key.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32, u32), &Rational)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn basis_bracket(&self, i: u32, j: u32) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        if i == j {
            return out;
        }
        let (a, b, sign) = if i < j { (i, j, false) } else { (j, i, true) };
        for (&(_, _, s), c) in self.entries.range((a, b, 0)..=(a, b, u32::MAX)) {
            out[s as usize - 1] = if sign { -c } else { c.clone() };
        }
        out
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// `[x, y]` for coordinate vectors in the fixed basis.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j, s), c) in &self.entries {
            let (xi, xj) = (&x[i as usize - 1], &x[j as usize - 1]);
            let (yi, yj) = (&y[i as usize - 1], &y[j as usize - 1]);
            // [x_i, x_j] contributes with weight x_i y_j - x_j y_i.
            let w = &(xi * yj) - &(xj * yi);
            if !w.is_zero() {
                out[s as usize - 1] += &(&w * c);
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x`; column `j` holds `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<RationalMatrix> {
        self.check_len(x)?;
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for (&(i, j, s), c) in &self.entries {
            let (i, j, s) = (i as usize - 1, j as usize - 1, s as usize - 1);
            // [x, e_j] picks up x_i C_ij^s; [x, e_i] picks up -x_j C_ij^s.
            if !x[i].is_zero() {
                let v = m.get(s, j) + &(&x[i] * c);
                m.set(s, j, v);
            }
            if !x[j].is_zero() {
                let v = m.get(s, i) - &(&x[j] * c);
                m.set(s, i, v);
            }
        }
        Ok(m)
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim as u32;
        let table: Vec<Vec<Vec<Rational>>> = (1..=n)
            .map(|i| (1..=n).map(|j| self.basis_bracket(i, j)).collect())
            .collect();
        let br = |a: u32, b: u32| &table[a as usize - 1][b as usize - 1];
        let mut violations = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let mut sum = vec![Rational::zero(); self.dim];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [x_a, [x_b, x_c]] = sum_s C_bc^s [x_a, x_s]
                        for (s, coeff) in br(b, c).iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            for (t, d) in br(a, s as u32 + 1).iter().enumerate() {
                                if !d.is_zero() {
                                    sum[t] += &(coeff * d);
                                }
                            }
                        }
                    }
                    for (t, r) in sum.into_iter().enumerate() {
                        if !r.is_zero() {
                            violations.push(JacobiViolation { i, j, k, t: t as u32 + 1, residual: r });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `self ⊕ Q^k` with the new basis vectors `x_{n+1}, ..., x_{n+k}` central.
    pub fn direct_sum_with_abelian(&self, k: usize) -> StructureConstants {
        StructureConstants { dim: self.dim + k, entries: self.entries.clone() }
    }

    /// Structure constants in the basis `y_a = sum_i P_ia x_i` (the columns of
    /// `p`). Composes as `change_basis(change_basis(g, P), R) = change_basis(g, P R)`.
    pub fn change_basis(&self, p: &RationalMatrix) -> Result<StructureConstants> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.rows().max(p.cols()) });
        }
        if p.determinant().is_zero() {
            return Err(Error::SingularBasisChange);
        }
        let inv = p.inverse().ok_or(Error::SingularBasisChange)?;
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|a| p.column(a)).collect();
        let mut out = StructureConstants::new(self.dim)?;
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let v = self.bracket(&cols[a], &cols[b])?;
                let w = inv.mul_vec(&v);
                for (s, c) in w.iter().enumerate() {
                    out.add(a as u32 + 1, b as u32 + 1, s as u32 + 1, c)?;
                }
            }
        }
        Ok(out)
    }
}

/// The `k`-th standard basis vector `e_k` (1-based) of `Q^n`.
pub fn basis_vector(n: usize, k: u32) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k as usize - 1] = Rational::one();
    v
}
