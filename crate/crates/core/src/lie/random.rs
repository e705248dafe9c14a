use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::algebra::StructureConstants;
use crate::arith::{Rational, RationalMatrix};

/// A random Lie algebra of dimension `n`, valid by construction: either
/// two-step nilpotent (brackets land in central coordinates) or an abelian
/// ideal extended by commuting diagonal derivations, expressed in a random
/// unimodular basis.
pub fn random_algebra<R: Rng + ?Sized>(rng: &mut R, n: usize) -> StructureConstants {
    assert!(n >= 1, "dimension must be positive");
    let mut g = StructureConstants::new(n).expect("positive dimension");
    let coeff = |rng: &mut R| -> i64 {
        let c = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) { c } else { -c }
    };
    if n >= 2 {
        if rng.gen_bool(0.5) {
            let central = rng.gen_range(1..n) as u32;
            let free = n as u32 - central;
            for i in 1..=free {
                for j in i + 1..=free {
                    for s in free + 1..=n as u32 {
                        if rng.gen_bool(0.3) {
                            let c = coeff(rng);
                            g.add(i, j, s, &Rational::from(c)).expect("in range");
                        }
                    }
                }
            }
        } else {
            let ext = rng.gen_range(1..=(n / 2).max(1)) as u32;
            for y in n as u32 - ext + 1..=n as u32 {
                for x in 1..=n as u32 - ext {
                    if rng.gen_bool(0.6) {
                        let c = coeff(rng);
                        g.add(y, x, x, &Rational::from(c)).expect("in range");
                    }
                }
            }
        }
    }
    g.change_basis(&random_unimodular(rng, n)).expect("unimodular")
}

/// A permuted unit upper-triangular integer matrix (determinant ±1) with
/// about `n / 4` off-diagonal entries.
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> RationalMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut u = RationalMatrix::identity(n);
    for _ in 0..n / 2 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i < j {
            u.set(i, j, Rational::from(rng.gen_range(-2..=2)));
        }
    }
    RationalMatrix::from_fn(n, n, |i, j| u.get(perm[i], j).clone())
}
