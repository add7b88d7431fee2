mod common;

use proptest::prelude::*;
use proptest::sample::Index;
use std::sync::OnceLock;

use common::{s3_pool, BIG};
use semirep::classify::builtin_catalog;
use semirep::io;
use semirep::presets::kl_dihedral;
use semirep::semimodule::{
    canonical_form_bounded, direct_sum, is_hom, principal_congruence, quotient, Semimodule,
};
use semirep::NatVec;

fn pool() -> &'static [(String, Semimodule)] {
    static POOL: OnceLock<Vec<(String, Semimodule)>> = OnceLock::new();
    POOL.get_or_init(|| {
        let (_, mut pool) = s3_pool();
        for name in ["z-s2", "klhat-s2", "group:s3", "dihedral:4"] {
            for e in builtin_catalog(name).unwrap().entries {
                pool.push((format!("{name} {}", e.name), e.module));
            }
        }
        pool
    })
}

fn permutation(n: usize, keys: &[u64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| (keys[i % keys.len()].wrapping_mul(i as u64 + 1), i));
    let mut perm = vec![0; n];
    for (new, &old) in idx.iter().enumerate() {
        perm[old] = new;
    }
    perm
}

fn small_vec(rank: usize) -> impl Strategy<Value = NatVec> {
    proptest::collection::vec(0u64..4, rank).prop_map(NatVec::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(i in any::<Index>(), keys in proptest::collection::vec(any::<u64>(), 1..16)) {
        let (_, m) = i.get(pool());
        let perm = permutation(m.size(), &keys);
        let r = m.relabel(&perm);
        prop_assert!(r.validate().is_valid());
        prop_assert_eq!(canonical_form_bounded(&r, BIG).unwrap(), canonical_form_bounded(m, BIG).unwrap());
        prop_assert_eq!(r.is_minimal(), m.is_minimal());
        prop_assert_eq!(r.is_elementary(), m.is_elementary());
    }

    #[test]
    fn principal_congruences_give_quotients(i in any::<Index>(), a in any::<Index>(), b in any::<Index>()) {
        let (_, m) = i.get(pool());
        let (a, b) = (a.index(m.size()), b.index(m.size()));
        let c = principal_congruence(m, a, b);
        prop_assert!(c.check_on(m).is_ok());
        let class = c.class_map();
        prop_assert_eq!(class[a], class[b]);
        let q = quotient(m, &c).unwrap();
        prop_assert!(q.validate().is_valid());
        prop_assert!(is_hom(m, &q, &class));
    }

    #[test]
    fn generated_subsemimodules_are_closed(i in any::<Index>(), seed in proptest::collection::vec(any::<Index>(), 0..3)) {
        let (_, m) = i.get(pool());
        let seed: Vec<usize> = seed.iter().map(|s| s.index(m.size())).collect();
        let sub = m.generated_subsemimodule(&seed);
        for s in &seed {
            prop_assert!(sub.contains(s));
        }
        prop_assert_eq!(m.generated_subsemimodule(&sub), sub.clone());
        let restricted = m.restrict(&sub).unwrap();
        prop_assert!(restricted.validate().is_valid());
    }

    #[test]
    fn direct_sums(i in 0usize..24, j in 0usize..24) {
        let (_, pool) = s3_pool();
        let (m, n) = (&pool[i % pool.len()].1, &pool[j % pool.len()].1);
        let d = direct_sum(m, n).unwrap();
        prop_assert!(d.sum.validate().is_valid());
        for k in 0..2 {
            let (src, size) = if k == 0 { (m, m.size()) } else { (n, n.size()) };
            prop_assert!(is_hom(src, &d.sum, &d.inclusions[k].map));
            prop_assert!(is_hom(&d.sum, src, &d.projections[k].map));
            let back: Vec<usize> = d.inclusions[k].map.iter().map(|&x| d.projections[k].map[x]).collect();
            prop_assert_eq!(back, (0..size).collect::<Vec<_>>());
        }
    }

    #[test]
    fn json_round_trip(i in any::<Index>(), keys in proptest::collection::vec(any::<u64>(), 1..8)) {
        let (_, m) = i.get(pool());
        let r = m.relabel(&permutation(m.size(), &keys));
        let text = io::semimodule_to_json(&r);
        let back = io::semimodule_from_json(&text, None).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(io::semimodule_to_json(&back), text);
    }

    #[test]
    fn kl_dihedral_is_associative_and_distributive(n in 3usize..9, seeds in proptest::collection::vec(0u64..4, 48)) {
        let r = kl_dihedral(n).unwrap();
        let k = r.rank();
        let v = |o: usize| NatVec::from_coeffs((0..k).map(|i| seeds[(o + i) % seeds.len()]).collect());
        let (a, b, c) = (v(0), v(5), v(11));
        let ab_c = r.mul(&r.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = r.mul(&a, &r.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let left = r.mul(&a, &r.add(&b, &c).unwrap()).unwrap();
        let right = r.add(&r.mul(&a, &b).unwrap(), &r.mul(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn act_vec_is_linear(i in any::<Index>(), x in any::<Index>(), a in small_vec(6), b in small_vec(6)) {
        let (r, pool) = s3_pool();
        let (_, m) = i.get(&pool);
        let x = x.index(m.size());
        let rb = r.as_based().unwrap();
        let sum = rb.add(&a, &b).unwrap();
        prop_assert_eq!(m.act_vec(&sum, x).unwrap(), m.add(m.act_vec(&a, x).unwrap(), m.act_vec(&b, x).unwrap()));
        let prod = rb.mul(&a, &b).unwrap();
        let inner = m.act_vec(&b, x).unwrap();
        prop_assert_eq!(m.act_vec(&prod, x).unwrap(), m.act_vec(&a, inner).unwrap());
    }
}
