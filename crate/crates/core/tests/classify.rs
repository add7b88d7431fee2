use std::sync::Arc;

use semirep::classify::{
    based_actions, builtin_catalog, classify_extreme, enumerate_monoids, enumerate_semimodules,
    finite_actions, monoid_endomorphisms, suite_names, verify_suite, EnumConfig, Kind,
    MonoidClass,
};
use semirep::presets::{self, preset};
use semirep::semimodule::Semimodule;
use semirep::Semiring;

/// Counts action tuples on `m` passing full validation, by trying every tuple
/// of additive maps.
fn brute_force_structures(r: &Arc<Semiring>, m: &semirep::FinMonoid) -> usize {
    let ends = monoid_endomorphisms(m);
    let k = r.action_count();
    let mut count = 0;
    let total = ends.len().pow(k as u32);
    for code in 0..total {
        let actions = (0..k)
            .map(|i| ends[code / ends.len().pow(i as u32) % ends.len()].clone())
            .collect();
        let module = Semimodule::new(r.clone(), m.clone(), actions).unwrap();
        count += usize::from(module.validate().is_valid());
    }
    count
}

#[test]
fn action_search_agrees_with_brute_force() {
    for name in ["kl-hat-s2", "group:s2", "z-nonneg", "boolean", "nat:2"] {
        let r = Arc::new(preset(name).unwrap());
        for n in 1..=4 {
            for m in enumerate_monoids(n, MonoidClass::AllCommutative).unwrap() {
                let found = match r.as_ref() {
                    Semiring::Based(b) => based_actions(b, &m).len(),
                    Semiring::Finite(f) => finite_actions(f, &m).len(),
                };
                assert_eq!(found, brute_force_structures(&r, &m), "{name} on {:?}", m.table());
            }
        }
    }
}

#[test]
fn dihedral_search_agrees_with_brute_force_on_three_points() {
    let r = Arc::new(preset("kl-dihedral:3").unwrap());
    let b = r.as_based().unwrap();
    for m in enumerate_monoids(3, MonoidClass::AllCommutative).unwrap() {
        assert_eq!(based_actions(b, &m).len(), brute_force_structures(&r, &m));
    }
}

#[test]
fn finite_and_based_presentations_agree() {
    // The Boolean semiring and N_1 carry the same semimodules.
    let cfg = EnumConfig {
        max_carrier_size: 4,
        ..EnumConfig::default()
    };
    let a = enumerate_semimodules(&Arc::new(preset("boolean").unwrap()), &cfg).unwrap();
    let b = enumerate_semimodules(&Arc::new(preset("nat:1").unwrap()), &cfg).unwrap();
    assert_eq!(a.len(), b.len());
    // Boolean semimodules are exactly the semilattices.
    let lattices: usize = (1..=4)
        .map(|n| enumerate_monoids(n, MonoidClass::Semilattice).unwrap().len())
        .sum();
    assert_eq!(a.len(), lattices);
    for e in &a.entries {
        assert!(e.module.validate().is_valid());
    }
}

#[test]
fn every_suite_passes() {
    for name in suite_names() {
        let report = verify_suite(&name).unwrap();
        assert!(report.pass, "{name}: missing {:?} extra {:?}", report.missing, report.extra);
        assert!(report.expected.iter().all(|e| e.contains(':')));
    }
}

#[test]
fn semilattice_carriers_give_the_same_minimal_classes() {
    let cat = builtin_catalog("s3-kl").unwrap();
    let mut cfg = cat.config.clone();
    cfg.kinds = vec![Kind::Minimal, Kind::Simple];
    let all = classify_extreme(&cat.semiring, &cfg).unwrap();
    cfg.monoid_class = MonoidClass::Semilattice;
    let lattice = classify_extreme(&cat.semiring, &cfg).unwrap();
    assert!(!lattice.notes.is_empty());
    for k in [Kind::Minimal, Kind::Simple] {
        let a: Vec<_> = all.catalogs[&k].entries.iter().map(|e| &e.canonical).collect();
        let b: Vec<_> = lattice.catalogs[&k].entries.iter().map(|e| &e.canonical).collect();
        assert_eq!(a, b);
    }
    assert!(!lattice.catalogs.contains_key(&Kind::Elementary));
}

#[test]
fn group_semiring_catalog_for_c4_compares_proper_part() {
    let report = verify_suite("group:c4").unwrap();
    assert!(report.pass);
    assert_eq!(report.counts["minimal"], 1);
}

#[test]
fn catalogs_are_sorted_and_deduplicated() {
    let r = Arc::new(Semiring::Based(presets::kl_hat_s2()));
    let cat = enumerate_semimodules(&r, &EnumConfig::default()).unwrap();
    for w in cat.entries.windows(2) {
        assert!((w[0].module.size(), &w[0].canonical) < (w[1].module.size(), &w[1].canonical));
    }
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(
        verify_suite("nope"),
        Err(semirep::Error::UnknownSuite(_))
    ));
}
