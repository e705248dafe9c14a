//! Acceptance criteria, one test per criterion. Each test prints a
//! `PASS`/`FAIL` line with the failing checks and the flagged entries.
//!
//! Entries whose transcription fails the Jacobi identity are never used as
//! evidence. Where a criterion makes its claim conditional on validation
//! they are reported as flagged; where the claim is unconditional they count
//! as failures, since the stated value cannot hold for a non-Lie bracket.

use lie_index_core::arith::{Polynomial, Rational};
use lie_index_core::catalog::{construct, expected_regular_families, expected_results, CatalogEntry, Kind, Params};
use lie_index_core::index::{
    deformation_index, index, index_of, is_frobenius, polynomial_rank, randomized_rank, raw_index, symbolic_rank,
    Deformation, Method, RandomizedParams, StructureMatrix,
};
use lie_index_core::lie::{center, random_algebra, random_unimodular, StructureConstants};
use lie_index_core::regular::{
    find_regular, kernel_with_index, regular_by_minors, regular_set_minors, verify_family, Functional,
};
use lie_index_suite::{catalog_entries, minor_rank, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 2024;
const SAMPLES: usize = 20;

/// How to treat entries that fail validation.
#[derive(Clone, Copy, PartialEq)]
enum Unverified {
    Fail,
    Flag,
}

fn raw(entry: &CatalogEntry) -> usize {
    raw_index(&entry.algebra, Method::Symbolic, &RandomizedParams::default()).expect("skew rank").index
}

fn unverified_text(entry: &CatalogEntry, expected: usize) -> String {
    format!(
        "{}: unverified-transcription ({} Jacobi residual coordinates), expected {expected}, raw n - rank {}",
        entry.label(),
        entry.violations,
        raw(entry)
    )
}

/// Checks every expected index value whose entry satisfies `pick`.
fn index_checks(c: &mut Criterion, pick: impl Fn(&str, &Params) -> bool, policy: impl Fn(&str) -> Unverified) {
    for e in expected_results().into_iter().filter(|e| pick(e.name, &e.params)) {
        let entry = construct(e.name, &e.params).expect("legal parameters");
        if e.source == "regression" {
            // computed once and pinned; the value is not a published claim
            let got = raw(&entry);
            c.expect_eq(&format!("{} (pinned regression, raw n - rank)", entry.label()), got, e.index);
            if !entry.is_verified() {
                c.note(format!("{}: pinned value {got} is for an algebra failing the Jacobi identity", entry.label()));
            }
            continue;
        }
        if !entry.is_verified() {
            match policy(e.name) {
                Unverified::Fail => c.fail(unverified_text(&entry, e.index)),
                Unverified::Flag => c.note(unverified_text(&entry, e.index)),
            }
            continue;
        }
        match index(&entry.algebra, Method::Both, &RandomizedParams { seed: SEED, ..Default::default() }) {
            Ok(r) => c.expect_eq(&entry.label(), r.index, e.index),
            Err(err) => c.fail(format!("{}: {err}", entry.label())),
        }
    }
}

/// Verifies every expected regular family whose entry satisfies `pick`.
fn family_checks(c: &mut Criterion, pick: impl Fn(&str, &Params) -> bool) {
    for e in expected_regular_families().into_iter().filter(|e| pick(e.name, &e.params)) {
        let entry = construct(e.name, &e.params).expect("legal parameters");
        if !entry.is_verified() {
            c.fail(format!("{} family: algebra is unverified-transcription", entry.label()));
            continue;
        }
        match verify_family(&entry.algebra, &e.family, SAMPLES, SEED) {
            Ok(report) => {
                for b in &report.branches {
                    let branch = if b.label.is_empty() { String::new() } else { format!(" [{}]", b.label) };
                    let mut detail = format!("{} family {}{branch}: {}", entry.label(), e.family, b.verdict);
                    if let Some(f) = &b.sufficiency_counterexample {
                        detail.push_str(&format!(", non-regular member {f}"));
                    }
                    if let Some((k, f)) = &b.necessity_witness {
                        detail.push_str(&format!(", regular functional {f} outside nonzero set {k}"));
                    }
                    c.check(b.verdict.as_str() == "supported", || detail);
                }
            }
            Err(err) => c.fail(format!("{} family {}: {err}", entry.label(), e.family)),
        }
    }
}

fn n_of(p: &Params) -> Option<i64> {
    p.get("n").map(|v| v.to_i64().expect("integral n"))
}

#[test]
fn criterion_01_filiform_l() {
    let mut c = Criterion::new(1, "index of L_n and its regular family");
    index_checks(&mut c, |name, _| name == "L", |_| Unverified::Fail);
    family_checks(&mut c, |name, _| name == "L");
    c.finish();
}

#[test]
fn criterion_02_filiform_q() {
    let mut c = Criterion::new(2, "index of Q_n and its regular family");
    index_checks(&mut c, |name, _| name == "Q", |_| Unverified::Fail);
    family_checks(&mut c, |name, _| name == "Q");
    c.finish();
}

#[test]
fn criterion_03_filiform_dim5() {
    let mut c = Criterion::new(3, "filiform algebras of dimension at most 5");
    index_checks(&mut c, |name, _| ["F3_1", "F4_1", "F5_1", "F5_2"].contains(&name), |_| Unverified::Fail);
    c.finish();
}

#[test]
fn criterion_04_filiform_dim6() {
    let mut c = Criterion::new(4, "filiform algebras of dimension 6");
    index_checks(&mut c, |name, _| name.starts_with("F6_"), |_| Unverified::Fail);
    family_checks(&mut c, |name, _| name == "F6_4");
    c.finish();
}

#[test]
fn criterion_05_filiform_dim7() {
    let mut c = Criterion::new(5, "filiform algebras of dimension 7");
    index_checks(&mut c, |name, _| name.starts_with("F7_"), |_| Unverified::Fail);
    c.finish();
}

#[test]
fn criterion_06_quasi_filiform() {
    let mut c = Criterion::new(6, "naturally graded quasi-filiform algebras");
    let names = ["Lsplit(n)", "Qsplit(n)", "L(n,r)", "Q(n,r)", "T(n,n-3)", "T(n,n-4)"];
    index_checks(&mut c, |name, _| names.contains(&name) || name.starts_with("eps"), |_| Unverified::Flag);
    c.finish();
}

#[test]
fn criterion_07_solvable_over_l() {
    let mut c = Criterion::new(7, "solvable algebras with nilradical L_n");
    index_checks(&mut c, |name, p| name.starts_with("tau(n+") && (4..=9).contains(&n_of(p).unwrap()), |_| {
        Unverified::Fail
    });
    c.finish();
}

#[test]
fn criterion_08_solvable_over_q() {
    let mut c = Criterion::new(8, "solvable algebras of dimension 2n+1");
    let policy = |name: &str| if name == "tau(2n+1,lam5..)" { Unverified::Flag } else { Unverified::Fail };
    index_checks(&mut c, |name, _| name.starts_with("tau(2n+1"), policy);
    c.finish();
}

/// Index of `alg + Q` and regularity of `g + rho c*` for a regular `g`.
fn extension_checks(c: &mut Criterion, label: &str, alg: &StructureConstants, seed: u64) {
    let n = alg.dim();
    let (chi, ext) = match (index_of(alg), index_of(&alg.direct_sum_with_abelian(1))) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => return c.fail(format!("{label}: {a:?} / {b:?}")),
    };
    c.expect_eq(&format!("{label} + Q index"), ext, chi + 1);
    let g = match find_regular(alg, seed, 1000) {
        Ok(s) => s.report.functional,
        Err(err) => return c.fail(format!("{label}: {err}")),
    };
    let extended = alg.direct_sum_with_abelian(1);
    for rho in [0, 1, -2] {
        let mut coords = g.coords().to_vec();
        coords.push(Rational::from(rho));
        let regular = kernel_with_index(&extended, &Functional(coords), ext).map(|r| r.is_regular);
        c.check(regular == Ok(true), || format!("{label}: g + {rho} c* on the extension gives {regular:?}, n = {n}"));
    }
}

#[test]
fn criterion_09_central_extension() {
    let mut c = Criterion::new(9, "central extension adds one to the index");
    for entry in catalog_entries().iter().filter(|e| e.is_verified()) {
        extension_checks(&mut c, &entry.label(), &entry.algebra, SEED);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for k in 0..50 {
        let n = rng.gen_range(1..=7);
        let alg = random_algebra(&mut rng, n);
        c.check(alg.validate().is_valid(), || format!("random algebra {k} is not a Lie algebra"));
        extension_checks(&mut c, &format!("random algebra {k} (n = {n})"), &alg, SEED + k);
    }
    c.finish();
}

/// Brackets of `target` minus those of `base`.
fn difference(target: &StructureConstants, base: &StructureConstants) -> StructureConstants {
    let mut out = StructureConstants::new(target.dim()).expect("positive dimension");
    for ((i, j, s), v) in target.entries() {
        out.add(i, j, s, v).expect("in range");
    }
    for ((i, j, s), v) in base.entries() {
        out.add(i, j, s, &-v).expect("in range");
    }
    out
}

#[test]
fn criterion_10_deformation() {
    let mut c = Criterion::new(10, "deformations do not raise the index");
    let samples: Vec<Rational> = [1, 2, -1].into_iter().map(Rational::from).chain([Rational::new(1, 3)]).collect();
    for (base_name, n, target_name) in [("L", 6, "F6_2"), ("L", 7, "F7_7"), ("L", 7, "F7_2")] {
        let base = construct(base_name, &Params::n(n)).expect("legal").algebra;
        let target = construct(target_name, &Params::new()).expect("legal");
        let label = format!("{base_name}{n} -> {target_name}");
        if !target.is_verified() {
            c.fail(format!("{label}: target is unverified-transcription"));
            continue;
        }
        let def = Deformation::new(base.clone(), vec![(1, difference(&target.algebra, &base))]).expect("same dim");
        c.check(def.specialize(&Rational::one()) == target.algebra, || format!("{label}: t = 1 is not the target"));
        match deformation_index(&def, &samples) {
            Ok(r) => {
                c.check(r.monotone && r.generic_index <= r.index_at_zero, || {
                    format!("{label}: generic {} above index at zero {}", r.generic_index, r.index_at_zero)
                });
                c.expect_eq(&format!("{label} index at zero"), r.index_at_zero, n as usize - 2);
            }
            Err(err) => c.fail(format!("{label}: {err}")),
        }
    }
    for entry in catalog_entries().iter().filter(|e| e.kind == Kind::Filiform && e.is_verified()) {
        let n = entry.algebra.dim();
        match index_of(&entry.algebra) {
            Ok(chi) => c.check(chi + 2 <= n, || format!("{}: index {chi} above n - 2 = {}", entry.label(), n - 2)),
            Err(err) => c.fail(format!("{}: {err}", entry.label())),
        }
    }
    c.finish();
}

fn random_skew_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<Polynomial>> {
    let n = rng.gen_range(1..=5usize);
    let mut m = vec![vec![Polynomial::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let mut p = Polynomial::zero();
            for _ in 0..rng.gen_range(0..3) {
                let v = rng.gen_range(1..=n as u32);
                p = p.add(&Polynomial::var(v).scale(&Rational::from(rng.gen_range(-2..=2))));
            }
            m[j][i] = p.scale(&Rational::from(-1));
            m[i][j] = p;
        }
    }
    m
}

fn sparse_functional(rng: &mut ChaCha8Rng, n: usize) -> Functional {
    Functional(
        (0..n)
            .map(|_| if rng.gen_bool(0.5) { Rational::zero() } else { Rational::from(rng.gen_range(-3..=3)) })
            .collect(),
    )
}

#[test]
fn criterion_11_properties() {
    let mut c = Criterion::new(11, "parity, center bound, basis invariance, method agreement, oracles");
    let params = RandomizedParams { trials: 3, bound: 1 << 16, seed: SEED };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for entry in catalog_entries() {
        let label = entry.label();
        let alg = &entry.algebra;
        let n = alg.dim();
        let m = StructureMatrix::new(alg);
        let (Ok(s), Ok(r)) = (symbolic_rank(&m), randomized_rank(&m, &params)) else {
            c.fail(format!("{label}: rank computation failed"));
            continue;
        };
        c.check(s % 2 == 0, || format!("{label}: odd rank {s}"));
        c.expect_eq(&format!("{label} symbolic vs randomized"), s, r);
        let z = center(alg).dim();
        c.check(n - s >= z, || format!("{label}: n - rank {} below center dimension {z}", n - s));
        if n <= 9 {
            for k in 0..30 {
                let p = random_unimodular(&mut rng, n);
                let changed = alg.change_basis(&p).expect("unimodular");
                let got = symbolic_rank(&StructureMatrix::new(&changed));
                c.check(got == Ok(s), || format!("{label}: basis change {k} gives rank {got:?}, not {s}"));
            }
        }
        if n <= 8 && entry.is_verified() {
            let minors = match regular_set_minors(alg) {
                Ok(m) => m,
                Err(err) => {
                    c.fail(format!("{label}: {err}"));
                    continue;
                }
            };
            for _ in 0..50 {
                let f = sparse_functional(&mut rng, n);
                let by_kernel = kernel_with_index(alg, &f, n - s).map(|r| r.is_regular);
                let by_minors = regular_by_minors(&minors, &f);
                c.check(by_kernel.is_ok() && by_kernel == by_minors, || {
                    format!("{label}: at {f} kernel says {by_kernel:?}, minors say {by_minors:?}")
                });
            }
        }
    }
    for k in 0..100 {
        let n = rng.gen_range(1..=8);
        let alg = random_algebra(&mut rng, n);
        c.check(alg.validate().is_valid(), || format!("random algebra {k} is not a Lie algebra"));
        let m = StructureMatrix::new(&alg);
        let (s, r) = (symbolic_rank(&m), randomized_rank(&m, &params));
        c.check(s.is_ok() && s == r, || format!("random algebra {k} (n = {n}): symbolic {s:?}, randomized {r:?}"));
    }
    for k in 0..50 {
        let m = random_skew_matrix(&mut rng);
        let (got, oracle) = (polynomial_rank(m.clone()), minor_rank(&m));
        c.check(got == Ok(oracle), || format!("skew matrix {k}: Bareiss {got:?}, minors {oracle}"));
    }
    c.finish();
}

#[test]
fn criterion_12_extremes() {
    let mut c = Criterion::new(12, "abelian index and Frobenius detection");
    index_checks(&mut c, |name, _| name == "abelian", |_| Unverified::Fail);
    for entry in catalog_entries().iter().filter(|e| e.kind == Kind::QuasiFiliform) {
        if !entry.is_verified() {
            c.note(format!("{}: unverified-transcription, skipped", entry.label()));
            continue;
        }
        let got = is_frobenius(&entry.algebra);
        c.check(got == Ok(false), || format!("{}: is_frobenius {got:?}", entry.label()));
    }
    let aff = StructureConstants::new(2).expect("positive").with(1, 2, 2, 1);
    c.expect_eq("two-dimensional non-abelian algebra is Frobenius", is_frobenius(&aff), Ok(true));
    c.finish();
}
