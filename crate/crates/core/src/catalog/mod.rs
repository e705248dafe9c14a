//! Named families of nilpotent and solvable Lie algebras.

mod expect;
mod families;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::lie::StructureConstants;

pub use expect::{expected_regular_families, expected_results, Expectation, FamilyExpectation};

/// Named rational parameters of a family.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug, PartialOrd, Ord)]
pub struct Params(BTreeMap<String, Rational>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<Rational>) -> Self {
        self.0.insert(name.into(), value.into());
        self
    }

    pub fn n(n: u32) -> Self {
        Params::new().with("n", n as i64)
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `key=value` words.
    pub fn parse<'a>(words: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut p = Params::new();
        for w in words {
            let (k, v) = w
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("parameter `{w}` is not key=value")))?;
            let value: Rational =
                v.parse().map_err(|e| Error::InvalidArgument(format!("parameter `{k}`: {e}")))?;
            if p.0.insert(k.to_string(), value).is_some() {
                return Err(Error::InvalidArgument(format!("parameter `{k}` given twice")));
            }
        }
        Ok(p)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (name, v)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Status {
    Verified,
    UnverifiedTranscription,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::UnverifiedTranscription => "unverified-transcription",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Kind {
    Abelian,
    Filiform,
    QuasiFiliform,
    Solvable,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Abelian => "abelian",
            Kind::Filiform => "filiform",
            Kind::QuasiFiliform => "quasi-filiform",
            Kind::Solvable => "solvable",
        }
    }
}

/// Description of one family for listings.
#[derive(Clone, Copy, Debug)]
pub struct Schema {
    pub name: &'static str,
    pub kind: Kind,
    /// `(parameter, allowed values)`.
    pub params: &'static [(&'static str, &'static str)],
    pub summary: &'static str,
}

pub const BASIS_SHIFT_NOTE: &str = "published basis x_0..x_{n-1} stored as x_1..x_n (index + 1)";

const N_ONLY: &[(&str, &str)] = &[];

pub const SCHEMAS: &[Schema] = &[
    Schema { name: "abelian", kind: Kind::Abelian, params: &[("n", "n >= 1")], summary: "abelian algebra" },
    Schema { name: "L", kind: Kind::Filiform, params: &[("n", "n >= 3")], summary: "[x1,xi] = x(i+1)" },
    Schema { name: "Q", kind: Kind::Filiform, params: &[("n", "n even, n >= 4")], summary: "L plus [xi,x(n-i+1)] = (-1)^(i+1) xn" },
    Schema { name: "F3_1", kind: Kind::Filiform, params: N_ONLY, summary: "Heisenberg" },
    Schema { name: "F4_1", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 4" },
    Schema { name: "F5_1", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 5" },
    Schema { name: "F5_2", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 5" },
    Schema { name: "F6_1", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 6" },
    Schema { name: "F6_2", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 6" },
    Schema { name: "F6_3", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 6" },
    Schema { name: "F6_4", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 6" },
    Schema { name: "F6_5", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 6" },
    Schema { name: "F7_1", kind: Kind::Filiform, params: &[("alpha", "any rational")], summary: "filiform, dimension 7" },
    Schema { name: "F7_2", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_3", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_4", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_5", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_6", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_7", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7" },
    Schema { name: "F7_8", kind: Kind::Filiform, params: N_ONLY, summary: "filiform, dimension 7 (L7)" },
    Schema { name: "Lsplit(n)", kind: Kind::QuasiFiliform, params: &[("n", "n >= 4")], summary: "L(n-1) + C" },
    Schema { name: "Qsplit(n)", kind: Kind::QuasiFiliform, params: &[("n", "n odd, n >= 7")], summary: "Q(n-1) + C" },
    Schema { name: "L(n,r)", kind: Kind::QuasiFiliform, params: &[("n", "n >= 5"), ("r", "r odd, 3 <= r <= 2*floor((n-1)/2) - 1")], summary: "principal family" },
    Schema { name: "Q(n,r)", kind: Kind::QuasiFiliform, params: &[("n", "n odd, n >= 7"), ("r", "r odd, 3 <= r <= n-4")], summary: "principal family" },
    Schema { name: "T(n,n-3)", kind: Kind::QuasiFiliform, params: &[("n", "n even, n >= 6")], summary: "terminal family" },
    Schema { name: "T(n,n-4)", kind: Kind::QuasiFiliform, params: &[("n", "n odd, n >= 7")], summary: "terminal family" },
    Schema { name: "eps(7,3)", kind: Kind::QuasiFiliform, params: N_ONLY, summary: "exceptional, dimension 7" },
    Schema { name: "eps1(9,5)", kind: Kind::QuasiFiliform, params: N_ONLY, summary: "exceptional, dimension 9" },
    Schema { name: "eps2(9,5)", kind: Kind::QuasiFiliform, params: N_ONLY, summary: "exceptional, dimension 9" },
    Schema { name: "eps3(9,5)", kind: Kind::QuasiFiliform, params: N_ONLY, summary: "exceptional, dimension 9" },
    Schema { name: "tau(n+1,1)", kind: Kind::Solvable, params: &[("n", "n >= 3"), ("beta", "any rational")], summary: "L(n) extended by f" },
    Schema { name: "tau(n+1,2)", kind: Kind::Solvable, params: &[("n", "n >= 3")], summary: "L(n) extended by f" },
    Schema { name: "tau(n+1,3)", kind: Kind::Solvable, params: &[("n", "n >= 3")], summary: "L(n) extended by f" },
    Schema { name: "tau(n+2,1)", kind: Kind::Solvable, params: &[("n", "n >= 3")], summary: "L(n) extended by f1, f2" },
    Schema { name: "tau(2n+1,lam2)", kind: Kind::Solvable, params: &[("n", "n >= 3"), ("lambda", "any rational")], summary: "Q-type nilradical extended by y" },
    Schema { name: "tau(2n+1,2-n,eps)", kind: Kind::Solvable, params: &[("n", "n >= 3"), ("eps", "-1, 0 or 1")], summary: "Q-type nilradical extended by y" },
    Schema { name: "tau(2n+1,lam5..)", kind: Kind::Solvable, params: &[("n", "n >= 3"), ("lam5, lam7, ...", "optional rationals, default 0")], summary: "Q-type nilradical extended by y" },
];

pub fn schema(name: &str) -> Option<&'static Schema> {
    SCHEMAS.iter().find(|s| s.name == name)
}

/// A constructed family member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Params,
    pub algebra: StructureConstants,
    pub status: Status,
    pub kind: Kind,
    pub basis_note: Option<&'static str>,
    /// Number of nonzero Jacobi residual coordinates.
    pub violations: usize,
}

impl CatalogEntry {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.name.clone()
        } else {
            format!("{} {}", self.name, self.params)
        }
    }
}

struct Reader<'a> {
    entry: &'a str,
    params: &'a Params,
    allowed: Vec<String>,
}

impl<'a> Reader<'a> {
    fn err(&self, name: &str, reason: impl Into<String>) -> Error {
        Error::BadParameter { entry: self.entry.into(), name: name.into(), reason: reason.into() }
    }

    fn rational(&mut self, name: &str) -> Result<Rational> {
        self.allowed.push(name.into());
        self.params.get(name).cloned().ok_or_else(|| self.err(name, "missing"))
    }

    fn optional(&mut self, name: &str) -> Rational {
        self.allowed.push(name.into());
        self.params.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    fn int(&mut self, name: &str, ok: impl Fn(u32) -> bool, range: &str) -> Result<u32> {
        let v = self.rational(name)?;
        let k = v
            .to_i64()
            .filter(|_| v.is_integer())
            .and_then(|k| u32::try_from(k).ok())
            .ok_or_else(|| self.err(name, "must be a non-negative integer"))?;
        if !ok(k) || k > 64 {
            return Err(self.err(name, format!("{k} outside {range}")));
        }
        Ok(k)
    }

    fn finish(&self) -> Result<()> {
        for (k, _) in self.params.iter() {
            if !self.allowed.iter().any(|a| a == k) {
                return Err(self.err(k, "unknown parameter"));
            }
        }
        Ok(())
    }
}

const F_EXTRA: &[(&str, u32, &[(u32, u32, u32, i64)])] = &[
    ("F3_1", 3, &[]),
    ("F4_1", 4, &[]),
    ("F5_1", 5, &[]),
    ("F5_2", 5, &[(2, 3, 5, 1)]),
    ("F6_1", 6, &[]),
    ("F6_2", 6, &[(2, 3, 6, 1)]),
    ("F6_3", 6, &[(2, 5, 6, 1), (3, 4, 6, -1)]),
    ("F6_4", 6, &[(2, 3, 5, 1), (2, 4, 6, 1)]),
    ("F6_5", 6, &[(2, 3, 5, 1), (2, 3, 6, -1), (2, 4, 6, 1), (2, 5, 6, 1), (3, 4, 6, -1)]),
    ("F7_2", 7, &[(2, 3, 5, 1), (2, 4, 6, 1), (2, 5, 7, 1)]),
    ("F7_3", 7, &[(2, 3, 5, 1), (2, 3, 6, 1), (2, 4, 6, 1), (2, 5, 7, 1)]),
    ("F7_4", 7, &[(2, 3, 6, 1), (2, 4, 7, 1), (2, 5, 7, 1), (3, 4, 7, -1)]),
    ("F7_5", 7, &[(2, 3, 6, 1), (2, 3, 7, 1), (2, 4, 7, 1)]),
    ("F7_6", 7, &[(2, 3, 6, 1), (2, 4, 7, 1)]),
    ("F7_7", 7, &[(2, 3, 7, 1)]),
    ("F7_8", 7, &[]),
];

/// Builds a family member and checks the Jacobi identity; members that fail
/// are returned with status `UnverifiedTranscription`.
pub fn construct(name: &str, params: &Params) -> Result<CatalogEntry> {
    let schema = schema(name).ok_or_else(|| Error::UnknownEntry(name.into()))?;
    let mut rd = Reader { entry: name, params, allowed: Vec::new() };
    let odd = |k: u32| k % 2 == 1;
    let mut basis_note = None;
    let algebra = match name {
        "abelian" => StructureConstants::abelian(rd.int("n", |n| n >= 1, "n >= 1")? as usize)?,
        "L" => families::l(rd.int("n", |n| n >= 3, "n >= 3")?),
        "Q" => families::q_filiform(rd.int("n", |n| n >= 4 && n % 2 == 0, "even n >= 4")?),
        "F7_1" => families::f7_1(&rd.rational("alpha")?),
        f if f.starts_with('F') => {
            let (_, n, extra) = F_EXTRA.iter().find(|(k, _, _)| *k == f).expect("schema lists only known F entries");
            families::filiform_extra(*n, extra)
        }
        "Lsplit(n)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::lsplit(rd.int("n", |n| n >= 4, "n >= 4")?)
        }
        "Qsplit(n)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::qsplit(rd.int("n", |n| n >= 7 && odd(n), "odd n >= 7")?)
        }
        "L(n,r)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            let n = rd.int("n", |n| n >= 5, "n >= 5")?;
            let top = 2 * ((n - 1) / 2) - 1;
            let r = rd.int("r", |r| odd(r) && (3..=top).contains(&r), &format!("odd r in 3..={top}"))?;
            families::l_nr(n, r)
        }
        "Q(n,r)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            let n = rd.int("n", |n| n >= 7 && odd(n), "odd n >= 7")?;
            let r = rd.int("r", |r| odd(r) && r >= 3 && r + 4 <= n, &format!("odd r in 3..={}", n - 4))?;
            families::q_nr(n, r)
        }
        "T(n,n-3)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::t_n3(rd.int("n", |n| n >= 6 && n % 2 == 0, "even n >= 6")?)
        }
        "T(n,n-4)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::t_n4(rd.int("n", |n| n >= 7 && odd(n), "odd n >= 7")?)
        }
        "eps(7,3)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::eps73()
        }
        "eps1(9,5)" | "eps2(9,5)" | "eps3(9,5)" => {
            basis_note = Some(BASIS_SHIFT_NOTE);
            families::eps95(name[3..4].parse().expect("digit"))
        }
        "tau(n+1,1)" => {
            let n = rd.int("n", |n| n >= 3, "n >= 3")?;
            families::tau_n1_1(n, &rd.rational("beta")?)
        }
        "tau(n+1,2)" => families::tau_n1_2(rd.int("n", |n| n >= 3, "n >= 3")?),
        "tau(n+1,3)" => families::tau_n1_3(rd.int("n", |n| n >= 3, "n >= 3")?),
        "tau(n+2,1)" => families::tau_n2_1(rd.int("n", |n| n >= 3, "n >= 3")?),
        "tau(2n+1,lam2)" => {
            let n = rd.int("n", |n| n >= 3, "n >= 3")?;
            families::tau_lam2(n, &rd.rational("lambda")?)
        }
        "tau(2n+1,2-n,eps)" => {
            let n = rd.int("n", |n| n >= 3, "n >= 3")?;
            let eps = rd.rational("eps")?;
            if !(eps.is_zero() || eps.abs().is_one()) {
                return Err(rd.err("eps", "must be -1, 0 or 1"));
            }
            families::tau_eps(n, &eps)
        }
        "tau(2n+1,lam5..)" => {
            let n = rd.int("n", |n| n >= 3, "n >= 3")?;
            let lams: Vec<Rational> = (5..=2 * n - 1).step_by(2).map(|k| rd.optional(&format!("lam{k}"))).collect();
            families::tau_lam5(n, &lams)
        }
        _ => unreachable!("every schema has a constructor"),
    };
    rd.finish()?;
    let violations = algebra.validate().violations.len();
    Ok(CatalogEntry {
        name: name.into(),
        params: params.clone(),
        algebra,
        status: if violations == 0 { Status::Verified } else { Status::UnverifiedTranscription },
        kind: schema.kind,
        basis_note,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::index_of;
    use crate::lie::{is_filiform, is_quasi_filiform};

    fn c(name: &str, p: Params) -> CatalogEntry {
        construct(name, &p).unwrap()
    }

    #[test]
    fn q6_brackets() {
        let g = c("Q", Params::n(6)).algebra;
        let expect = StructureConstants::new(6)
            .unwrap()
            .with(1, 2, 3, 1)
            .with(1, 3, 4, 1)
            .with(1, 4, 5, 1)
            .with(1, 5, 6, 1)
            .with(2, 5, 6, -1)
            .with(3, 4, 6, 1);
        assert_eq!(g, expect);
    }

    #[test]
    fn principal_shift() {
        let e = c("L(n,r)", Params::n(8).with("r", 3));
        assert_eq!(e.algebra.get(2, 3, 8), Rational::one());
        assert_eq!(e.basis_note, Some(BASIS_SHIFT_NOTE));
        assert!(is_quasi_filiform(&e.algebra).unwrap());
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(construct("nope", &Params::new()), Err(Error::UnknownEntry(_))));
        assert!(matches!(construct("Q", &Params::n(5)), Err(Error::BadParameter { .. })));
        assert!(construct("L", &Params::new()).is_err());
        assert!(construct("L", &Params::n(5).with("r", 1)).is_err());
        assert!(construct("L(n,r)", &Params::n(8).with("r", 7)).is_err());
        assert!(construct("L", &Params::new().with("n", Rational::new(7, 2))).is_err());
        assert!(construct("tau(2n+1,2-n,eps)", &Params::n(3).with("eps", 2)).is_err());
    }

    #[test]
    fn flags() {
        assert!(c("F7_4", Params::new()).is_verified());
        assert!(!c("F7_3", Params::new()).is_verified());
        assert!(!c("F7_1", Params::new().with("alpha", 2)).is_verified());
        assert!(is_filiform(&c("F6_5", Params::new()).algebra).unwrap());
        assert_eq!(index_of(&c("F5_2", Params::new()).algebra).unwrap(), 1);
    }

    #[test]
    fn tau_nilradical_is_l() {
        for name in ["tau(n+1,1)", "tau(n+1,2)", "tau(n+1,3)", "tau(n+2,1)"] {
            let p = if name == "tau(n+1,1)" { Params::n(6).with("beta", 1) } else { Params::n(6) };
            let g = c(name, p).algebra;
            let restricted: Vec<_> = g.entries().filter(|((i, j, _), _)| *i <= 6 && *j <= 6).collect();
            let l6 = c("L", Params::n(6)).algebra;
            assert_eq!(restricted, l6.entries().collect::<Vec<_>>());
        }
    }

    #[test]
    fn params_text() {
        let p = Params::parse(["n=7", "beta=-1/2"]).unwrap();
        assert_eq!(p.to_string(), "beta=-1/2 n=7");
        assert!(Params::parse(["n"]).is_err());
        assert!(Params::parse(["n=1", "n=2"]).is_err());
    }
}
