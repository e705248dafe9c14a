use std::collections::BTreeMap;

use lie_index_core::catalog::{construct, expected_results, schema, Kind, Params};
use lie_index_core::index::index_of;
use lie_index_core::lie::{is_filiform, is_quasi_filiform, StructureConstants};

/// Brackets among the first `k` basis vectors.
fn restrict(g: &StructureConstants, k: u32) -> StructureConstants {
    let mut out = StructureConstants::new(k as usize).unwrap();
    for ((i, j, s), c) in g.entries().filter(|((i, j, s), _)| *i <= k && *j <= k && *s <= k) {
        out.add(i, j, s, c).unwrap();
    }
    out
}

#[test]
fn kinds_match_the_lower_central_series() {
    for e in expected_results() {
        let entry = construct(e.name, &e.params).unwrap();
        if !entry.is_verified() {
            continue;
        }
        let g = &entry.algebra;
        match entry.kind {
            Kind::Filiform => assert!(is_filiform(g).unwrap(), "{}", entry.label()),
            Kind::QuasiFiliform => assert!(is_quasi_filiform(g).unwrap(), "{}", entry.label()),
            Kind::Abelian => assert!(g.is_abelian()),
            Kind::Solvable => {}
        }
    }
}

#[test]
fn parametrised_families_validate_at_three_settings() {
    let mut verified: BTreeMap<&str, usize> = BTreeMap::new();
    for e in expected_results() {
        if construct(e.name, &e.params).unwrap().is_verified() {
            *verified.entry(e.name).or_default() += 1;
        }
    }
    for (name, count) in verified {
        if !schema(name).unwrap().params.is_empty() {
            assert!(count >= 3, "{name}: only {count} verified settings");
        }
    }
}

#[test]
fn tau_nilradicals() {
    for n in 4..=9u32 {
        let l = construct("L", &Params::n(n)).unwrap().algebra;
        for name in ["tau(n+1,1)", "tau(n+1,2)", "tau(n+1,3)", "tau(n+2,1)"] {
            let g = construct(name, &Params::n(n).with("beta", 1)).or_else(|_| construct(name, &Params::n(n)));
            assert_eq!(restrict(&g.unwrap().algebra, n), l, "{name} n={n}");
        }
    }
    // The printed nilradical of the 2n+1 families is not entrywise Q_2n but
    // shares its invariants.
    for n in 3..=5u32 {
        let g = construct("tau(2n+1,2-n,eps)", &Params::n(n).with("eps", 0)).unwrap().algebra;
        let nil = restrict(&g, 2 * n);
        let q = construct("Q", &Params::n(2 * n)).unwrap().algebra;
        assert!(nil.validate().is_valid());
        assert!(is_filiform(&nil).unwrap());
        assert_eq!(index_of(&nil).unwrap(), index_of(&q).unwrap());
        assert_ne!(nil, q);
    }
}
