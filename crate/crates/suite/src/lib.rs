//! Shared helpers for the acceptance checks in `tests/acceptance.rs`.

use std::io::Write;

use lie_index_core::arith::Polynomial;
use lie_index_core::catalog::{construct, expected_results, CatalogEntry};

/// Collects the checks of one acceptance criterion and prints a single
/// `PASS`/`FAIL` line followed by indented details.
///
/// The lines go straight to the process stderr handle, so they show up
/// whether or not the test harness captures output.
pub struct Criterion {
    number: u32,
    title: &'static str,
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    pub fn new(number: u32, title: &'static str) -> Self {
        Criterion { number, title, checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Checks `got == expected`, describing the mismatch by `label`.
    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, expected: T) {
        let ok = got == expected;
        self.check(ok, || format!("{label}: expected {expected:?}, got {got:?}"));
    }

    pub fn fail(&mut self, what: String) {
        self.check(false, || what);
    }

    /// Reported but not asserted.
    pub fn note(&mut self, what: String) {
        self.notes.push(what);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Prints the verdict and panics when a check failed.
    pub fn finish(self) {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut text = format!(
            "{verdict} criterion {:>2} ({}): {} checks, {} failed, {} flagged\n",
            self.number,
            self.title,
            self.checks,
            self.failures.len(),
            self.notes.len()
        );
        for f in &self.failures {
            text.push_str(&format!("    fail: {f}\n"));
        }
        for n in &self.notes {
            text.push_str(&format!("    flagged: {n}\n"));
        }
        let _ = std::io::stderr().lock().write_all(text.as_bytes());
        assert!(self.failures.is_empty(), "criterion {} failed {} of {} checks", self.number, self.failures.len(), self.checks);
    }
}

/// Every distinct catalog entry named by the expectation table, in table
/// order.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    for e in expected_results() {
        let entry = construct(e.name, &e.params).expect("expectation parameters are legal");
        if !out.iter().any(|o| o.name == entry.name && o.params == entry.params) {
            out.push(entry);
        }
    }
    out
}

/// Rank of a square polynomial matrix as the largest order of a nonzero
/// minor, each minor expanded along its first row.
pub fn minor_rank(m: &[Vec<Polynomial>]) -> usize {
    fn det(m: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one();
        }
        let mut total = Polynomial::zero();
        for (k, &c) in cols.iter().enumerate() {
            if m[rows[0]][c].is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = m[rows[0]][c].mul(&det(m, &rows[1..], &rest));
            total = if k % 2 == 0 { total.add(&term) } else { total.sub(&term) };
        }
        total
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }
    let n = m.len();
    (1..=n)
        .rev()
        .find(|&k| {
            let subs = subsets(n, k);
            subs.iter().any(|r| subs.iter().any(|c| !det(m, r, c).is_zero()))
        })
        .unwrap_or(0)
}
