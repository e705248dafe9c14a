use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{kernel_with_index, Functional};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::index::index_of;
use crate::lie::{StructureConstants, SAMPLE_RANGE};

/// Coordinates sharing one parameter, as in `p (x_3* + x_4* + x_5*)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TiedGroup {
    pub indices: BTreeSet<u32>,
    /// `Some(true)`: the shared value is nonzero. `Some(false)`: it is
    /// unconstrained. `None`: not stated, so both the nonzero and the zero
    /// branch are checked.
    pub nonzero: Option<bool>,
}

/// A parametric set of functionals. Each coordinate is the sum of the
/// contributions of the roles it appears in; coordinates with no role are 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FunctionalFamily {
    pub dim: usize,
    pub free: BTreeSet<u32>,
    pub zero: BTreeSet<u32>,
    /// At least one coordinate of each set is nonzero.
    pub nonzero_sets: Vec<BTreeSet<u32>>,
    pub tied: Vec<TiedGroup>,
}

impl FunctionalFamily {
    pub fn new(dim: usize) -> Self {
        FunctionalFamily { dim, free: BTreeSet::new(), zero: BTreeSet::new(), nonzero_sets: Vec::new(), tied: Vec::new() }
    }

    pub fn free(mut self, idx: impl IntoIterator<Item = u32>) -> Self {
        self.free.extend(idx);
        self
    }

    pub fn zero(mut self, idx: impl IntoIterator<Item = u32>) -> Self {
        self.zero.extend(idx);
        self
    }

    /// Some coordinate of `idx` is nonzero.
    pub fn some_nonzero(mut self, idx: impl IntoIterator<Item = u32>) -> Self {
        self.nonzero_sets.push(idx.into_iter().collect());
        self
    }

    /// Every coordinate of `idx` is nonzero.
    pub fn all_nonzero(mut self, idx: impl IntoIterator<Item = u32>) -> Self {
        for k in idx {
            self.nonzero_sets.push(BTreeSet::from([k]));
        }
        self
    }

    pub fn tied(mut self, idx: impl IntoIterator<Item = u32>, nonzero: Option<bool>) -> Self {
        self.tied.push(TiedGroup { indices: idx.into_iter().collect(), nonzero });
        self
    }

    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BadFamily(m));
        let all = self
            .free
            .iter()
            .chain(&self.zero)
            .chain(self.nonzero_sets.iter().flatten())
            .chain(self.tied.iter().flat_map(|g| &g.indices));
        for &k in all {
            if k == 0 || k as usize > self.dim {
                return bad(format!("coordinate {k} outside 1..={}", self.dim));
            }
        }
        if self.nonzero_sets.iter().any(BTreeSet::is_empty) || self.tied.iter().any(|g| g.indices.is_empty()) {
            return bad("empty coordinate set".into());
        }
        let others: BTreeSet<u32> = self
            .free
            .iter()
            .chain(self.nonzero_sets.iter().flatten())
            .chain(self.tied.iter().flat_map(|g| &g.indices))
            .copied()
            .collect();
        if let Some(k) = self.zero.intersection(&others).next() {
            return bad(format!("coordinate {k} is both zero and constrained"));
        }
        Ok(())
    }

    /// Parses clauses such as `free:1,2;nonzero:3-8;zero:9;tied:3,4,5`.
    ///
    /// `nonzero` asks for some nonzero coordinate of the set; `allnonzero`
    /// for all of them. `tied!` marks a nonzero shared value, `tied?` an
    /// unconstrained one and plain `tied` leaves it unstated.
    pub fn parse(dim: usize, spec: &str) -> Result<Self> {
        let mut fam = FunctionalFamily::new(dim);
        for clause in spec.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (key, list) =
                clause.split_once(':').ok_or_else(|| Error::BadFamily(format!("clause `{clause}` lacks `:`")))?;
            let idx = parse_indices(list)?;
            fam = match key.trim() {
                "free" => fam.free(idx),
                "zero" => fam.zero(idx),
                "nonzero" => fam.some_nonzero(idx),
                "allnonzero" => fam.all_nonzero(idx),
                "tied" => fam.tied(idx, None),
                "tied!" => fam.tied(idx, Some(true)),
                "tied?" => fam.tied(idx, Some(false)),
                other => return Err(Error::BadFamily(format!("unknown clause `{other}`"))),
            };
        }
        fam.check()?;
        Ok(fam)
    }
}

fn parse_indices(list: &str) -> Result<Vec<u32>> {
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| Error::BadFamily(format!("bad index `{s}`")));
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(Error::BadFamily(format!("empty range `{item}`")));
                }
                out.extend(a..=b);
            }
            None => out.push(num(item)?),
        }
    }
    if out.is_empty() {
        return Err(Error::BadFamily(format!("empty index list `{list}`")));
    }
    Ok(out)
}

fn join(set: &BTreeSet<u32>) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FunctionalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut clauses = Vec::new();
        if !self.free.is_empty() {
            clauses.push(format!("free:{}", join(&self.free)));
        }
        if !self.zero.is_empty() {
            clauses.push(format!("zero:{}", join(&self.zero)));
        }
        for s in &self.nonzero_sets {
            clauses.push(format!("nonzero:{}", join(s)));
        }
        for g in &self.tied {
            let key = match g.nonzero {
                None => "tied",
                Some(true) => "tied!",
                Some(false) => "tied?",
            };
            clauses.push(format!("{key}:{}", join(&g.indices)));
        }
        f.write_str(&clauses.join(";"))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Supported,
    RefutedSufficiency,
    RefutedNecessitySample,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Supported => "supported",
            Verdict::RefutedSufficiency => "refuted-sufficiency",
            Verdict::RefutedNecessitySample => "refuted-necessity-sample",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome for one choice of the unstated tied-group constraints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BranchReport {
    /// Empty when the family has no unstated tied group.
    pub label: String,
    pub verdict: Verdict,
    pub sufficiency_samples: usize,
    pub boundary_samples: usize,
    /// A family member that is not regular.
    pub sufficiency_counterexample: Option<Functional>,
    /// A regular functional violating the given nonzero set.
    pub necessity_witness: Option<(usize, Functional)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyReport {
    pub family: FunctionalFamily,
    pub algebra_index: usize,
    pub seed: u64,
    pub branches: Vec<BranchReport>,
}

impl FamilyReport {
    pub fn all_supported(&self) -> bool {
        self.branches.iter().all(|b| b.verdict == Verdict::Supported)
    }
}

fn nonzero_value(rng: &mut ChaCha8Rng) -> Rational {
    let v = rng.gen_range(1..=SAMPLE_RANGE);
    Rational::from(if rng.gen_bool(0.5) { v } else { -v })
}

fn any_value(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))
}

/// One member of the family; `skip` names a nonzero set forced to zero.
fn sample(fam: &FunctionalFamily, tied_nonzero: &[bool], skip: Option<usize>, rng: &mut ChaCha8Rng) -> Functional {
    let mut p = alloc::vec![Rational::zero(); fam.dim];
    for &k in &fam.free {
        p[k as usize - 1] += &any_value(rng);
    }
    for (s, set) in fam.nonzero_sets.iter().enumerate() {
        if skip == Some(s) {
            continue;
        }
        let members: Vec<u32> = set.iter().copied().collect();
        let mut chosen: Vec<u32> = members.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if chosen.is_empty() {
            chosen.push(members[rng.gen_range(0..members.len())]);
        }
        for k in chosen {
            p[k as usize - 1] += &nonzero_value(rng);
        }
    }
    for (g, group) in fam.tied.iter().enumerate() {
        let v = match group.nonzero {
            Some(false) => any_value(rng),
            _ if tied_nonzero[g] => nonzero_value(rng),
            _ => Rational::zero(),
        };
        for &k in &group.indices {
            p[k as usize - 1] += &v;
        }
    }
    for &k in skip.map(|s| &fam.nonzero_sets[s]).into_iter().flatten() {
        p[k as usize - 1] = Rational::zero();
    }
    Functional(p)
}

/// Samples the family: `samples` members must all be regular, and for each
/// nonzero set `samples` functionals with that set zeroed must all be
/// irregular. Unstated tied groups are checked in both branches.
pub fn verify_family(alg: &StructureConstants, fam: &FunctionalFamily, samples: usize, seed: u64) -> Result<FamilyReport> {
    if fam.dim != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), got: fam.dim });
    }
    fam.check()?;
    let chi = index_of(alg)?;
    let open: Vec<usize> = (0..fam.tied.len()).filter(|&g| fam.tied[g].nonzero.is_none()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut branches = Vec::new();
    for mask in 0u32..(1 << open.len()) {
        let mut tied_nonzero: Vec<bool> = fam.tied.iter().map(|g| g.nonzero == Some(true)).collect();
        let mut label = Vec::new();
        for (bit, &g) in open.iter().enumerate() {
            let nz = mask & (1 << bit) == 0;
            tied_nonzero[g] = nz;
            label.push(format!("tied {{{}}} {}", join(&fam.tied[g].indices), if nz { "!= 0" } else { "= 0" }));
        }
        let mut sufficiency_counterexample = None;
        for _ in 0..samples {
            let f = sample(fam, &tied_nonzero, None, &mut rng);
            if !kernel_with_index(alg, &f, chi)?.is_regular {
                sufficiency_counterexample = Some(f);
                break;
            }
        }
        let mut necessity_witness = None;
        'sets: for s in 0..fam.nonzero_sets.len() {
            for _ in 0..samples {
                let f = sample(fam, &tied_nonzero, Some(s), &mut rng);
                if kernel_with_index(alg, &f, chi)?.is_regular {
                    necessity_witness = Some((s, f));
                    break 'sets;
                }
            }
        }
        let verdict = if sufficiency_counterexample.is_some() {
            Verdict::RefutedSufficiency
        } else if necessity_witness.is_some() {
            Verdict::RefutedNecessitySample
        } else {
            Verdict::Supported
        };
        branches.push(BranchReport {
            label: label.join(", "),
            verdict,
            sufficiency_samples: samples,
            boundary_samples: samples * fam.nonzero_sets.len(),
            sufficiency_counterexample,
            necessity_witness,
        });
    }
    Ok(FamilyReport { family: fam.clone(), algebra_index: chi, seed, branches })
}
