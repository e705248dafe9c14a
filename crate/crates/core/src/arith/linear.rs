use alloc::collections::BTreeMap;
use core::fmt;

use super::{Monomial, Polynomial, Rational};

/// `sum_s c_s x_s` with no constant term.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    coeffs: BTreeMap<u32, Rational>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * x_v`, removing the entry if it cancels.
    pub fn add_term(&mut self, v: u32, c: &Rational) {
        assert!(v >= 1, "variables are 1-based");
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(v).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    pub fn coefficient(&self, v: u32) -> Rational {
        self.coeffs.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&v, c)| (v, c))
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|(&v, c)| (v, -c)).collect(),
        }
    }

    /// Value at `point` (`point[v - 1]` is `x_v`); missing coordinates are an
    /// error reported as `None`.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (&v, c) in &self.coeffs {
            acc += &(c * point.get(v as usize - 1)?);
        }
        Some(acc)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.coeffs.iter().map(|(&v, c)| (Monomial::var(v), c.clone())))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_polynomial(), f)
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn embeds_as_degree_one() {
        let mut l = LinearForm::zero();
        l.add_term(3, &Rational::from(2));
        l.add_term(1, &Rational::new(-1, 2));
        let p = l.to_polynomial();
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.to_string(), "-1/2*x1 + 2*x3");
        l.add_term(3, &Rational::from(-2));
        assert_eq!(l.to_string(), "-1/2*x1");
    }
}
