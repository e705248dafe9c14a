//! Bracket tables of the catalog families, entered as published. The
//! quasi-filiform families are published on `x_0..x_{n-1}` and are stored on
//! `x_1..x_n` through [`q`].

use crate::arith::Rational;
use crate::lie::StructureConstants;

struct Builder(StructureConstants);

impl Builder {
    fn new(n: usize) -> Self {
        Builder(StructureConstants::new(n).expect("positive dimension"))
    }

    fn br(&mut self, i: u32, j: u32, s: u32, c: impl Into<Rational>) -> &mut Self {
        self.0.add(i, j, s, &c.into()).expect("catalog indices in range");
        self
    }

    fn done(self) -> StructureConstants {
        self.0
    }
}

/// Shift from the `x_0`-based published basis.
fn q(k: u32) -> u32 {
    k + 1
}

fn sign(k: u32) -> i64 {
    if k.is_multiple_of(2) { 1 } else { -1 }
}

fn half(num: i64) -> Rational {
    Rational::new(num, 2)
}

fn chain(n: u32) -> Builder {
    let mut b = Builder::new(n as usize);
    for i in 2..n {
        b.br(1, i, i + 1, 1);
    }
    b
}

/// `[x_1, x_i] = x_{i+1}`, `2 <= i <= n-1`.
pub fn l(n: u32) -> StructureConstants {
    chain(n).done()
}

/// `L_n` plus `[x_i, x_{n-i+1}] = (-1)^{i+1} x_n`, `2 <= i <= n/2`.
pub fn q_filiform(n: u32) -> StructureConstants {
    let mut b = chain(n);
    for i in 2..=n / 2 {
        b.br(i, n - i + 1, n, sign(i + 1));
    }
    b.done()
}

/// Low-dimensional filiform algebras: `L_n` plus the listed extra brackets.
pub fn filiform_extra(n: u32, extra: &[(u32, u32, u32, i64)]) -> StructureConstants {
    let mut b = chain(n);
    for &(i, j, s, c) in extra {
        b.br(i, j, s, c);
    }
    b.done()
}

/// The one-parameter 7-dimensional family.
pub fn f7_1(alpha: &Rational) -> StructureConstants {
    let one_plus = alpha + &Rational::one();
    let mut b = Builder::new(7);
    for i in 2..=5 {
        b.br(1, i, i + 1, 1);
    }
    b.br(1, 6, 7, alpha.clone())
        .br(2, 3, 5, one_plus.clone())
        .br(2, 4, 6, one_plus)
        .br(3, 4, 7, 1);
    b.done()
}

/// `[x_0, x_i] = x_{i+1}`, `1 <= i <= n-3`.
fn qf_chain(n: u32) -> Builder {
    let mut b = Builder::new(n as usize);
    for i in 1..=n - 3 {
        b.br(q(0), q(i), q(i + 1), 1);
    }
    b
}

pub fn lsplit(n: u32) -> StructureConstants {
    qf_chain(n).done()
}

pub fn qsplit(n: u32) -> StructureConstants {
    let mut b = qf_chain(n);
    for i in 1..=(n - 3) / 2 {
        b.br(q(i), q(n - 2 - i), q(n - 2), sign(i - 1));
    }
    b.done()
}

pub fn l_nr(n: u32, r: u32) -> StructureConstants {
    let mut b = qf_chain(n);
    for i in 1..=(r - 1) / 2 {
        b.br(q(i), q(r - i), q(n - 1), sign(i - 1));
    }
    b.done()
}

pub fn q_nr(n: u32, r: u32) -> StructureConstants {
    let mut b = qf_chain(n);
    for i in 1..=(r - 1) / 2 {
        b.br(q(i), q(r - i), q(n - 1), sign(i - 1));
    }
    for i in 1..=(n - 3) / 2 {
        b.br(q(i), q(n - 2 - i), q(n - 2), sign(i - 1));
    }
    b.done()
}

pub fn t_n3(n: u32) -> StructureConstants {
    let mut b = qf_chain(n);
    b.br(q(n - 1), q(1), q(n - 2), half(n as i64 - 4));
    for i in 1..=(n - 4) / 2 {
        b.br(q(i), q(n - 3 - i), q(n - 3), sign(i - 1));
        b.br(q(i), q(n - 3 - i), q(n - 1), sign(i - 1));
        b.br(q(i), q(n - 2 - i), q(n - 2), half(sign(i - 1) * (n as i64 - 2 - 2 * i as i64)));
    }
    b.done()
}

/// The range `1 <= i <= 2` printed on `[x_{n-1}, x_1]` is read as
/// `[x_{n-1}, x_i] = (n-5)/2 x_{n-4+i}`, which is also what the published
/// structure matrix shows.
pub fn t_n4(n: u32) -> StructureConstants {
    let mut b = qf_chain(n);
    for i in 1..=2 {
        b.br(q(n - 1), q(i), q(n - 4 + i), half(n as i64 - 5));
    }
    for i in 1..=(n - 5) / 2 {
        b.br(q(i), q(n - 4 - i), q(n - 4), sign(i - 1));
        b.br(q(i), q(n - 4 - i), q(n - 1), sign(i - 1));
        b.br(q(i), q(n - 3 - i), q(n - 2), half(sign(i - 1) * (n as i64 - 3 - 2 * i as i64)));
    }
    for i in 1..=(n - 3) / 2 {
        let c = sign(i - 1) * (i as i64 - 1) * (n as i64 - 3 - i as i64);
        b.br(q(i), q(n - 2 - i), q(n - 2), half(c));
    }
    b.done()
}

pub fn eps73() -> StructureConstants {
    let mut b = Builder::new(7);
    for i in 1..=4 {
        b.br(q(0), q(i), q(i + 1), 1);
    }
    for i in 1..=2 {
        b.br(q(6), q(i), q(3 + i), 1);
    }
    b.br(q(1), q(2), q(3), 1).br(q(1), q(2), q(6), 1);
    for i in 3..=4 {
        b.br(q(1), q(i), q(i + 1), 1);
    }
    b.done()
}

/// `variant` is 1, 2 or 3. In the third table the line `[x_0, x_8] = x_6`
/// carries a stray range `1 <= i <= 2` and is read as a single bracket.
pub fn eps95(variant: u32) -> StructureConstants {
    let mut b = Builder::new(9);
    for i in 1..=6 {
        b.br(q(0), q(i), q(i + 1), 1);
    }
    match variant {
        1 | 2 => {
            for i in 1..=2 {
                b.br(q(8), q(i), q(5 + i), 2);
            }
            b.br(q(1), q(4), q(5), 1).br(q(1), q(4), q(8), 1);
            b.br(q(1), q(5), q(6), 2);
            b.br(q(1), q(6), q(7), if variant == 1 { 3 } else { 1 });
            b.br(q(2), q(3), q(5), -1).br(q(2), q(3), q(8), -1);
            b.br(q(2), q(4), q(6), -1);
            b.br(q(2), q(5), q(7), if variant == 1 { -1 } else { 1 });
            if variant == 2 {
                b.br(q(3), q(4), q(7), -2);
            }
        }
        _ => {
            b.br(q(0), q(8), q(6), 1);
            b.br(q(1), q(4), q(8), 1).br(q(3), q(4), q(7), -3);
            b.br(q(2), q(4), q(6), -1).br(q(1), q(5), q(6), 2);
            b.br(q(2), q(3), q(8), -1).br(q(2), q(5), q(7), 2);
        }
    }
    b.done()
}

/// `L_n` on `x_1..x_n` with `f = x_{n+1}`.
fn solvable_l(n: u32, extra: usize) -> Builder {
    let mut b = Builder::new(n as usize + extra);
    for i in 2..n {
        b.br(1, i, i + 1, 1);
    }
    b
}

pub fn tau_n1_1(n: u32, beta: &Rational) -> StructureConstants {
    let f = n + 1;
    let w = beta + &Rational::from(n as i64 - 2);
    let mut b = solvable_l(n, 1);
    for i in 1..n {
        b.br(f, i, i, w.clone());
    }
    b.br(f, n, n, 1);
    b.done()
}

pub fn tau_n1_2(n: u32) -> StructureConstants {
    let f = n + 1;
    let mut b = solvable_l(n, 1);
    for i in 1..n {
        b.br(f, i, i, 1);
    }
    b.done()
}

pub fn tau_n1_3(n: u32) -> StructureConstants {
    let f = n + 1;
    let mut b = solvable_l(n, 1);
    for i in 1..n {
        b.br(f, i, i, (n - i) as i64);
    }
    b.br(f, n, n, 1).br(f, n, n - 1, 1);
    b.done()
}

/// The stray range on `[f_1, x_n] = x_n` is dropped.
pub fn tau_n2_1(n: u32) -> StructureConstants {
    let (f1, f2) = (n + 1, n + 2);
    let mut b = solvable_l(n, 2);
    for i in 1..n {
        b.br(f1, i, i, n as i64 - 1 - i as i64);
        b.br(f2, i, i, 1);
    }
    b.br(f1, n, n, 1);
    b.done()
}

/// Nilradical of the `2n+1`-dimensional families as printed:
/// `[x_1, x_k] = x_{k+1}` for `2 <= k <= 2n-2` and
/// `[x_k, x_{2n+1-k}] = (-1)^k x_{2n}` for `2 <= k <= n`; `y = x_{2n+1}`.
fn solvable_q(n: u32) -> Builder {
    let m = 2 * n;
    let mut b = Builder::new(m as usize + 1);
    for k in 2..=m - 2 {
        b.br(1, k, k + 1, 1);
    }
    for k in 2..=n {
        b.br(k, m + 1 - k, m, sign(k));
    }
    b
}

pub fn tau_lam2(n: u32, lambda: &Rational) -> StructureConstants {
    let (m, y) = (2 * n, 2 * n + 1);
    let mut b = solvable_q(n);
    b.br(y, 1, 1, 1);
    for k in 2..=m - 2 {
        b.br(y, k, k, lambda + &Rational::from(k as i64 - 2));
    }
    b.br(y, m, m, &(lambda + lambda) + &Rational::from(m as i64 - 3));
    b.done()
}

pub fn tau_eps(n: u32, eps: &Rational) -> StructureConstants {
    let (m, y) = (2 * n, 2 * n + 1);
    let mut b = solvable_q(n);
    b.br(y, 1, 1, 1).br(y, 1, m, eps.clone());
    for k in 2..=m - 1 {
        b.br(y, k, k, k as i64 - n as i64);
    }
    b.br(y, m, m, 1);
    b.done()
}

/// `lams[j]` is the coefficient written `lambda_2^{2j+5}`; missing entries
/// are zero.
pub fn tau_lam5(n: u32, lams: &[Rational]) -> StructureConstants {
    let (m, y) = (2 * n, 2 * n + 1);
    let mut b = solvable_q(n);
    let lam = |odd: u32| -> Rational {
        lams.get(((odd - 5) / 2) as usize).cloned().unwrap_or_else(Rational::zero)
    };
    for t in 0..=m.saturating_sub(6) {
        b.br(y, 2 + t, 2 + t, 1);
        for k in 2..=(m - 3 - t) / 2 {
            b.br(y, 2 + t, 2 * k + 1 + t, lam(2 * k + 1));
        }
    }
    for k in 1..=3 {
        b.br(y, m - k, m - k, 1);
    }
    b.br(y, m, m, 2);
    b.done()
}
