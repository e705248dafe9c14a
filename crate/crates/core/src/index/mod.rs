//! The index `n - rank` of the structure matrix.

mod deform;
mod matrix;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lie::StructureConstants;

pub use deform::{deformation_index, Deformation, DeformationReport};
pub use matrix::{
    polynomial_determinant, polynomial_rank, randomized_rank, randomized_rank_with_witness, symbolic_rank, RandomizedParams,
    StructureMatrix,
};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Method {
    Symbolic,
    Randomized,
    #[default]
    Both,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Symbolic => "symbolic",
            Method::Randomized => "randomized",
            Method::Both => "both",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Method::Symbolic),
            "randomized" => Ok(Method::Randomized),
            "both" => Ok(Method::Both),
            other => Err(Error::InvalidArgument(alloc::format!("unknown method `{other}`"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexReport {
    pub dim: usize,
    pub index: usize,
    pub rank: usize,
    pub method: Method,
    /// Point where the evaluated matrix reaches `rank`; set when the
    /// randomized path ran.
    pub witness_point: Option<Vec<Rational>>,
    /// Sampling parameters of the randomized path.
    pub certification: Option<RandomizedParams>,
}

/// Index of `alg`, refusing algebras that fail the Jacobi identity.
pub fn index(alg: &StructureConstants, method: Method, params: &RandomizedParams) -> Result<IndexReport> {
    alg.validate().into_result()?;
    raw_index(alg, method, params)
}

/// `n - rank` of the structure matrix without checking the Jacobi identity.
pub fn raw_index(alg: &StructureConstants, method: Method, params: &RandomizedParams) -> Result<IndexReport> {
    let n = alg.dim();
    let m = StructureMatrix::new(alg);
    let symbolic = match method {
        Method::Symbolic | Method::Both => Some(symbolic_rank(&m)?),
        Method::Randomized => None,
    };
    let randomized = match method {
        Method::Randomized | Method::Both => Some(randomized_rank_with_witness(&m, params)?),
        Method::Symbolic => None,
    };
    let rank = match (symbolic, &randomized) {
        (Some(s), Some((r, _))) if s != *r => {
            return Err(Error::RankDisagreement { symbolic: s, randomized: *r });
        }
        (Some(s), _) => s,
        (None, Some((r, _))) => *r,
        (None, None) => unreachable!("every method computes a rank"),
    };
    if rank % 2 != 0 {
        return Err(Error::Internal(alloc::format!("odd rank {rank} of a skew matrix")));
    }
    Ok(IndexReport {
        dim: n,
        index: n - rank,
        rank,
        method,
        witness_point: randomized.map(|(_, p)| p),
        certification: matches!(method, Method::Randomized | Method::Both).then_some(*params),
    })
}

/// Exact symbolic index of a valid algebra.
pub fn index_of(alg: &StructureConstants) -> Result<usize> {
    index(alg, Method::Symbolic, &RandomizedParams::default()).map(|r| r.index)
}

/// Index zero.
pub fn is_frobenius(alg: &StructureConstants) -> Result<bool> {
    Ok(index_of(alg)? == 0)
}

/// `(index(alg), index(alg ⊕ Q))`; the second always exceeds the first by one.
pub fn central_extension_index_check(alg: &StructureConstants) -> Result<(usize, usize)> {
    let base = index_of(alg)?;
    let extended = index_of(&alg.direct_sum_with_abelian(1))?;
    if extended != base + 1 {
        return Err(Error::Internal(alloc::format!(
            "central extension index {extended} is not {base} + 1"
        )));
    }
    Ok((base, extended))
}

/// Human-readable one-line summary.
pub fn summary(report: &IndexReport) -> String {
    alloc::format!("rank {}, index {}", report.rank, report.index)
}
