use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{basis_vector, StructureConstants};
use crate::arith::{Rational, RationalMatrix, Subspace};
use crate::error::{Error, Result};

/// Range of the random integer coordinates used for sampling.
pub const SAMPLE_RANGE: i64 = 99;

/// `C^0 ⊇ C^1 ⊇ ...` with `C^k = [C^{k-1}, G]`, stopping at the first term
/// equal to its predecessor (which is not repeated).
pub fn lower_central_series(alg: &StructureConstants) -> Vec<Subspace> {
    let n = alg.dim();
    let mut series = vec![Subspace::full(n)];
    loop {
        let prev = series.last().expect("nonempty");
        if prev.is_zero() {
            break;
        }
        let mut gens = Vec::new();
        for v in prev.basis() {
            for j in 1..=n as u32 {
                let w = alg.bracket(v, &basis_vector(n, j)).expect("dimensions match");
                if w.iter().any(|c| !c.is_zero()) {
                    gens.push(w);
                }
            }
        }
        let next = Subspace::span(n, gens);
        if &next == prev {
            break;
        }
        series.push(next);
    }
    series
}

/// The derived algebra `[G, G]`.
pub fn derived_algebra(alg: &StructureConstants) -> Subspace {
    lower_central_series(alg).into_iter().nth(1).unwrap_or_else(|| Subspace::full(alg.dim()))
}

/// Smallest `p` with `C^p = 0`, or `None` when the algebra is not nilpotent.
pub fn nilindex(alg: &StructureConstants) -> Option<usize> {
    let series = lower_central_series(alg);
    let last = series.last().expect("nonempty");
    last.is_zero().then(|| series.len() - 1)
}

pub fn is_nilpotent(alg: &StructureConstants) -> bool {
    nilindex(alg).is_some()
}

/// Nilindex `n - 1`.
pub fn is_filiform(alg: &StructureConstants) -> Result<bool> {
    let p = nilindex(alg).ok_or(Error::NotNilpotent)?;
    Ok(p + 1 == alg.dim())
}

/// `C^{n-3} != 0` and `C^{n-2} = 0`; false below dimension 3.
pub fn is_quasi_filiform(alg: &StructureConstants) -> Result<bool> {
    let p = nilindex(alg).ok_or(Error::NotNilpotent)?;
    let n = alg.dim();
    Ok(n >= 3 && p + 2 == n)
}

/// `{x : [x, y] = 0 for all y}`.
pub fn center(alg: &StructureConstants) -> Subspace {
    let n = alg.dim();
    // Row (j, s), column i: coefficient of x_s in [x_i, x_j].
    let mut stacked = RationalMatrix::zeros(n * n, n);
    for ((i, j, s), c) in alg.entries() {
        let (i, j, s) = (i as usize - 1, j as usize - 1, s as usize - 1);
        stacked.set(j * n + s, i, c.clone());
        stacked.set(i * n + s, j, -c);
    }
    stacked.kernel()
}

/// Jordan block sizes of a nilpotent operator, in decreasing order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CharacteristicSequence(Vec<usize>);

impl CharacteristicSequence {
    /// Reads the block sizes of nilpotent `a` from the ranks of its powers.
    pub fn of_operator(a: &RationalMatrix) -> Result<Self> {
        let n = a.rows();
        let mut ranks = vec![n];
        let mut power = RationalMatrix::identity(n);
        while *ranks.last().expect("nonempty") > 0 {
            if ranks.len() > n {
                return Err(Error::NotNilpotent);
            }
            power = power.mul(a);
            ranks.push(power.rank());
        }
        ranks.push(0);
        // at_least[k] = number of blocks of size >= k + 1
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::with_capacity(n);
        for k in (0..at_least.len()).rev() {
            let exact = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
            parts.extend(core::iter::repeat_n(k + 1, exact));
        }
        Ok(CharacteristicSequence(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for CharacteristicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// `c(x)` for one element.
pub fn characteristic_sequence_at(alg: &StructureConstants, x: &[Rational]) -> Result<CharacteristicSequence> {
    CharacteristicSequence::of_operator(&alg.ad_matrix(x)?)
}

/// Sampled supremum of `c(x)` over the basis vectors outside `[G, G]` and
/// `samples` random vectors outside `[G, G]`.
pub fn characteristic_sequence(
    alg: &StructureConstants,
    samples: usize,
    seed: u64,
) -> Result<CharacteristicSequence> {
    if !is_nilpotent(alg) {
        return Err(Error::NotNilpotent);
    }
    let n = alg.dim();
    let derived = derived_algebra(alg);
    let mut best: Option<CharacteristicSequence> = None;
    let mut consider = |x: &[Rational]| -> Result<()> {
        let c = characteristic_sequence_at(alg, x)?;
        if best.as_ref().is_none_or(|b| c > *b) {
            best = Some(c);
        }
        Ok(())
    };
    for k in 1..=n as u32 {
        let e = basis_vector(n, k);
        if !derived.contains(&e) {
            consider(&e)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    while drawn < samples {
        let x: Vec<Rational> = (0..n).map(|_| Rational::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))).collect();
        if derived.contains(&x) {
            continue;
        }
        consider(&x)?;
        drawn += 1;
    }
    Ok(best.expect("a nilpotent algebra has a basis vector outside [G, G]"))
}
