use lie_index_core::arith::{Monomial, Polynomial, Rational, RationalMatrix};
use lie_index_core::index::{
    index, index_of, polynomial_rank, randomized_rank, symbolic_rank, Method, RandomizedParams, StructureMatrix,
};
use lie_index_core::lie::{
    basis_vector, center, is_nilpotent, lower_central_series, random_algebra, random_unimodular, StructureConstants,
};
use lie_index_core::regular::{kernel_at, Functional};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| Rational::new(a, b))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, rational()), 0..5).prop_map(|terms| {
        Polynomial::from_terms(
            terms.into_iter().map(|(a, b, c, k)| (Monomial::from_pairs([(1, a), (2, b), (3, c)]), k)),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 3)
}

fn algebra(max_dim: usize) -> impl Strategy<Value = StructureConstants> {
    (1..=max_dim, any::<u64>()).prop_map(|(n, seed)| random_algebra(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}

fn algebra_with_vectors(max_dim: usize, k: usize) -> impl Strategy<Value = (StructureConstants, Vec<Vec<Rational>>)> {
    algebra(max_dim).prop_flat_map(move |g| {
        let n = g.dim();
        (Just(g), prop::collection::vec(vector(n), k))
    })
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(c: &Rational, a: &[Rational]) -> Vec<Rational> {
    a.iter().map(|x| c * x).collect()
}

/// Rank of a square polynomial matrix as the largest order of a nonzero
/// minor, each minor expanded by the Leibniz formula.
fn minor_rank(m: &[Vec<Polynomial>]) -> usize {
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

fn skew_linear_matrix() -> impl Strategy<Value = Vec<Vec<Polynomial>>> {
    (1usize..=5).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(prop::collection::vec((1u32..=n as u32, -2i64..=2), 0..3), pairs).prop_map(move |forms| {
            let mut m = vec![vec![Polynomial::zero(); n]; n];
            let mut it = forms.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    let f = it.next().expect("one form per pair");
                    let p = f.into_iter().fold(Polynomial::zero(), |acc, (v, c)| {
                        acc.add(&Polynomial::var(v).scale(&Rational::from(c)))
                    });
                    m[j][i] = p.scale(&Rational::from(-1));
                    m[i][j] = p;
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one()), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(), b in polynomial(), x in point()) {
        let (ea, eb) = (a.eval(&x).unwrap(), b.eval(&x).unwrap());
        prop_assert_eq!(a.add(&b).eval(&x).unwrap(), &ea + &eb);
        prop_assert_eq!(a.mul(&b).eval(&x).unwrap(), &ea * &eb);
    }

    #[test]
    fn exact_division_round_trip(a in polynomial(), b in polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(r in rational()) {
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn bracket_is_bilinear_and_alternating((g, v) in algebra_with_vectors(7, 3), c in rational()) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let br = |a: &[Rational], b: &[Rational]| g.bracket(a, b).unwrap();
        prop_assert_eq!(br(&add(x, y), z), add(&br(x, z), &br(y, z)));
        prop_assert_eq!(br(&scale(&c, x), y), scale(&c, &br(x, y)));
        prop_assert_eq!(br(x, y), scale(&Rational::from(-1), &br(y, x)));
        prop_assert!(br(x, x).iter().all(Rational::is_zero));
    }

    #[test]
    fn jacobi_on_random_triples((g, v) in algebra_with_vectors(7, 3)) {
        let br = |a: &[Rational], b: &[Rational]| g.bracket(a, b).unwrap();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let sum = add(&add(&br(x, &br(y, z)), &br(y, &br(z, x))), &br(z, &br(x, y)));
        prop_assert!(sum.iter().all(Rational::is_zero));
    }

    #[test]
    fn lower_central_series_descends(g in algebra(7)) {
        let series = lower_central_series(&g);
        for w in series.windows(2) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
            prop_assert!(w[1].dim() < w[0].dim());
        }
        prop_assert_eq!(series.last().unwrap().is_zero(), is_nilpotent(&g));
        if is_nilpotent(&g) && g.dim() > 0 && !g.is_abelian() {
            // the last nonzero term is central
            let last = &series[series.len() - 2];
            prop_assert!(last.is_subspace_of(&center(&g)));
        }
    }

    #[test]
    fn index_parity_and_center(g in algebra(8)) {
        let chi = index_of(&g).unwrap();
        prop_assert_eq!((g.dim() - chi) % 2, 0);
        prop_assert!(chi >= center(&g).dim());
    }

    #[test]
    fn basis_change_preserves_index(g in algebra(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_unimodular(&mut rng, g.dim());
        let h = g.change_basis(&p).unwrap();
        prop_assert!(h.validate().is_valid());
        prop_assert_eq!(index_of(&h).unwrap(), index_of(&g).unwrap());
        prop_assert_eq!(is_nilpotent(&h), is_nilpotent(&g));
        prop_assert_eq!(h.change_basis(&p.inverse().unwrap()).unwrap(), g);
    }

    #[test]
    fn symbolic_and_randomized_agree(g in algebra(8), seed in any::<u64>()) {
        let params = RandomizedParams { seed, ..Default::default() };
        let m = StructureMatrix::new(&g);
        prop_assert_eq!(symbolic_rank(&m).unwrap(), randomized_rank(&m, &params).unwrap());
        prop_assert!(index(&g, Method::Both, &params).is_ok());
    }

    #[test]
    fn bareiss_matches_minor_oracle(m in skew_linear_matrix()) {
        prop_assert_eq!(polynomial_rank(m.clone()).unwrap(), minor_rank(&m));
    }

    #[test]
    fn kernel_annihilates((g, v) in algebra_with_vectors(7, 1), c in rational()) {
        let f = Functional(v[0].clone());
        let n = g.dim();
        let report = kernel_at(&g, &f).unwrap();
        for x in report.kernel_basis.basis() {
            for j in 1..=n as u32 {
                let w = g.bracket(x, &basis_vector(n, j)).unwrap();
                let value: Rational = w.iter().zip(f.coords()).map(|(a, b)| a * b).sum();
                prop_assert!(value.is_zero());
            }
        }
        prop_assume!(!c.is_zero());
        prop_assert_eq!(kernel_at(&g, &f.scale(&c)).unwrap().kernel_dim, report.kernel_dim);
    }
}

#[test]
fn evaluated_rank_never_exceeds_symbolic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=7 {
        let g = random_algebra(&mut rng, n);
        let m = StructureMatrix::new(&g);
        let r = symbolic_rank(&m).unwrap();
        for k in 1..=n as i64 {
            let p: Vec<Rational> = (0..n as i64).map(|i| Rational::from((i * k) % 5 - 2)).collect();
            assert!(m.evaluate(&p).unwrap().rank() <= r);
        }
    }
    assert_eq!(RationalMatrix::identity(3).rank(), 3);
}
