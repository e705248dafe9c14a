//! Published index values and regular-functional families, with the
//! parameter sweeps used to check them.

use alloc::vec::Vec;

use super::Params;
use crate::arith::Rational;
use crate::regular::FunctionalFamily;

/// A claimed index value. `source` is a short claim slug such as
/// `"filiform-L"`; `"regression"` marks an engine-computed value pinned to
/// catch changes, not a published claim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expectation {
    pub name: &'static str,
    pub params: Params,
    pub index: usize,
    pub source: &'static str,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyExpectation {
    pub name: &'static str,
    pub params: Params,
    pub family: FunctionalFamily,
    pub source: &'static str,
    /// How an ambiguous statement was read.
    pub note: Option<&'static str>,
}

fn betas(n: u32) -> [Rational; 4] {
    [Rational::zero(), Rational::one(), Rational::new(1, 2), Rational::from(2 - n as i64)]
}

fn lambdas() -> [Rational; 3] {
    [Rational::zero(), Rational::one(), Rational::new(3, 2)]
}

/// Legal `r` values of `L(n,r)`.
pub(crate) fn l_nr_range(n: u32) -> impl Iterator<Item = u32> {
    (3..=2 * ((n - 1) / 2) - 1).step_by(2)
}

pub fn expected_results() -> Vec<Expectation> {
    let mut out = Vec::new();
    let mut push = |name, params, index, source| out.push(Expectation { name, params, index, source });
    for n in 3..=12 {
        push("L", Params::n(n), n as usize - 2, "filiform-L");
    }
    for n in (4..=12).step_by(2) {
        push("Q", Params::n(n), 2, "filiform-Q");
    }
    for (name, chi) in [("F3_1", 1), ("F4_1", 2), ("F5_1", 3), ("F5_2", 1)] {
        push(name, Params::new(), chi, "filiform-dim5");
    }
    for (name, chi) in [("F6_1", 4), ("F6_2", 2), ("F6_3", 2), ("F6_4", 2), ("F6_5", 2)] {
        push(name, Params::new(), chi, "filiform-dim6");
    }
    for (name, chi) in [("F7_2", 3), ("F7_3", 3), ("F7_4", 1), ("F7_5", 3), ("F7_6", 3), ("F7_7", 3), ("F7_8", 5)] {
        push(name, Params::new(), chi, "filiform-dim7");
    }
    for (alpha, chi) in [(1, 1), (2, 1), (5, 1), (0, 3)] {
        push("F7_1", Params::new().with("alpha", alpha), chi, "filiform-dim7");
    }
    push("F7_1", Params::new().with("alpha", -1), 3, "regression");
    for n in 7..=11 {
        push("Lsplit(n)", Params::n(n), n as usize - 2, "quasi-filiform");
    }
    for n in [7, 9, 11] {
        push("Qsplit(n)", Params::n(n), 3, "quasi-filiform");
    }
    for n in 5..=11 {
        for r in l_nr_range(n) {
            let chi = if n % 2 == 1 && r == n - 2 { 3 } else { (n - r - 1) as usize };
            push("L(n,r)", Params::n(n).with("r", r as i64), chi, "quasi-filiform");
        }
    }
    for n in [7, 9, 11] {
        for r in (3..=n - 4).step_by(2) {
            push("Q(n,r)", Params::n(n).with("r", r as i64), 3, "quasi-filiform");
        }
    }
    for n in [6, 8, 10] {
        push("T(n,n-3)", Params::n(n), 2, "quasi-filiform");
    }
    for n in [7, 9, 11] {
        push("T(n,n-4)", Params::n(n), 3, "quasi-filiform");
    }
    push("eps(7,3)", Params::new(), 3, "quasi-filiform");
    push("eps1(9,5)", Params::new(), 3, "quasi-filiform");
    push("eps2(9,5)", Params::new(), 2, "quasi-filiform");
    push("eps3(9,5)", Params::new(), 2, "quasi-filiform");
    for n in 4..=9 {
        for beta in betas(n) {
            push("tau(n+1,1)", Params::n(n).with("beta", beta), n as usize - 1, "solvable-Ln");
        }
        push("tau(n+1,2)", Params::n(n), n as usize - 1, "solvable-Ln");
        push("tau(n+1,3)", Params::n(n), n as usize - 1, "solvable-Ln");
        push("tau(n+2,1)", Params::n(n), n as usize - 2, "solvable-Ln");
    }
    for n in 3..=5 {
        for lambda in lambdas() {
            push("tau(2n+1,lam2)", Params::n(n).with("lambda", lambda), 1, "solvable-Q2n");
        }
        for eps in [-1, 0, 1] {
            push("tau(2n+1,2-n,eps)", Params::n(n).with("eps", eps), 1, "solvable-Q2n");
        }
        push("tau(2n+1,lam5..)", Params::n(n), 1, "solvable-Q2n");
        push("tau(2n+1,lam5..)", Params::n(n).with("lam5", 1), 1, "solvable-Q2n");
    }
    for n in 1..=10 {
        push("abelian", Params::n(n), n as usize, "abelian");
    }
    out
}

pub fn expected_regular_families() -> Vec<FamilyExpectation> {
    let mut out = Vec::new();
    let mut push = |name, params, family, source, note| out.push(FamilyExpectation { name, params, family, source, note });
    let fam = FunctionalFamily::new;
    for n in 3..=12u32 {
        push("L", Params::n(n), fam(n as usize).free([1, 2]).some_nonzero(3..=n), "filiform-L", None);
    }
    for n in (4..=12u32).step_by(2) {
        push("Q", Params::n(n), fam(n as usize).free(1..n).all_nonzero([n]), "filiform-Q", None);
    }
    for (name, n) in [("F3_1", 3u32), ("F4_1", 4), ("F5_1", 5)] {
        push(name, Params::new(), fam(n as usize).free([1, 2]).some_nonzero(3..=n), "filiform-dim5", None);
    }
    push(
        "F5_2",
        Params::new(),
        fam(5).free([1, 2]).all_nonzero(3..=5),
        "filiform-dim5",
        Some("`p_i != 0, i in {3,4,5}` read as every p_i nonzero"),
    );
    push(
        "F5_2",
        Params::new(),
        fam(5).free([1, 2]).some_nonzero(3..=5),
        "filiform-dim5",
        Some("`p_i != 0, i in {3,4,5}` read as some p_i nonzero"),
    );
    for name in ["F6_1", "F6_3", "F6_5"] {
        push(name, Params::new(), fam(6).free([1, 2]).some_nonzero(3..=6), "filiform-dim6", None);
    }
    push(
        "F6_2",
        Params::new(),
        fam(6).free([1, 2, 5]).tied([3, 4, 5], None),
        "filiform-dim6",
        Some("the shared parameter carries no stated constraint"),
    );
    push("F6_4", Params::new(), fam(6).free(1..=5).zero([6]), "filiform-dim6", None);
    push(
        "F7_1",
        Params::new().with("alpha", 0),
        fam(7).free(1..=5).tied([6, 7], None),
        "filiform-dim7",
        None,
    );
    for alpha in [1, 2, 5] {
        push("F7_1", Params::new().with("alpha", alpha), fam(7).all_nonzero(1..=6), "filiform-dim7", None);
    }
    push("F7_2", Params::new(), fam(7).free([1, 2]).tied([4, 5, 6], Some(true)), "filiform-dim7", None);
    push("F7_3", Params::new(), fam(7).free(1..=4), "filiform-dim7", None);
    push("F7_4", Params::new(), fam(7).free([1, 2, 5, 6, 7]).zero([3, 4]), "filiform-dim7", None);
    push("F7_5", Params::new(), fam(7).free(1..=4).tied([5, 6], None), "filiform-dim7", None);
    push("F7_6", Params::new(), fam(7).free(1..=3).tied([4, 5], None), "filiform-dim7", None);
    push("F7_7", Params::new(), fam(7).free(1..=4).tied([6, 7], None), "filiform-dim7", None);
    push("F7_8", Params::new(), fam(7).free([1, 2]).some_nonzero(3..=7), "filiform-dim7", None);
    // Quasi-filiform families use the shifted basis: published p_k is p_{k+1}.
    let all_but = |n: u32, k: u32| fam(n as usize).free((1..=n).filter(move |&i| i != k)).all_nonzero([k]);
    for n in [6, 8, 10] {
        push("T(n,n-3)", Params::n(n), all_but(n, n - 1), "quasi-filiform", None);
    }
    for n in [7, 9, 11] {
        push("T(n,n-4)", Params::n(n), all_but(n, n - 1), "quasi-filiform", None);
        for r in (3..=n - 4).step_by(2) {
            push("Q(n,r)", Params::n(n).with("r", r as i64), all_but(n, n - 1), "quasi-filiform", None);
        }
    }
    for n in 5..=11u32 {
        for r in l_nr_range(n).filter(|&r| r < n - 2) {
            let f = fam(n as usize)
                .free(1..r + 2)
                .some_nonzero(r + 2..=n - 1)
                .all_nonzero([n]);
            push("L(n,r)", Params::n(n).with("r", r as i64), f, "quasi-filiform", None);
        }
    }
    let solvable_note = Some("the coordinates of the adjoined elements are not mentioned and are taken as zero");
    for n in [4, 6, 9u32] {
        let d = n as usize + 1;
        push("tau(n+1,1)", Params::n(n).with("beta", 1), fam(d).all_nonzero(1..=n), "solvable-Ln", solvable_note);
        push("tau(n+1,2)", Params::n(n), fam(d).all_nonzero(1..n), "solvable-Ln", solvable_note);
        push("tau(n+1,3)", Params::n(n), fam(d).all_nonzero(1..=n), "solvable-Ln", solvable_note);
        push("tau(n+2,1)", Params::n(n), fam(d + 1).all_nonzero(1..=n), "solvable-Ln", solvable_note);
    }
    out
}
