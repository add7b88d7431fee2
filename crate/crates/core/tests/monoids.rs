use semirep::classify::{abelian_groups, enumerate_monoids, monoid_endomorphisms, MonoidClass};
use semirep::{Error, FinMonoid};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Counts commutative monoids with identity 0 on `n` points by trying every
/// table, then collapsing relabelings that fix 0.
fn brute_force(n: usize, semilattice: bool) -> usize {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let perms: Vec<Vec<usize>> = permutations(&(1..n).collect::<Vec<_>>())
        .into_iter()
        .map(|p| std::iter::once(0).chain(p).collect())
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let total = n.pow(cells.len() as u32);
    for code in 0..total {
        let mut t = vec![vec![0; n]; n];
        for x in 0..n {
            t[0][x] = x;
            t[x][0] = x;
        }
        let mut c = code;
        for &(i, j) in &cells {
            t[i][j] = c % n;
            t[j][i] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|d| t[t[a][b]][d] == t[a][t[b][d]])));
        if !assoc || (semilattice && (0..n).any(|a| t[a][a] != a)) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut u = vec![vec![0; n]; n];
                for a in 0..n {
                    for b in 0..n {
                        u[p[a]][p[b]] = p[t[a][b]];
                    }
                }
                u
            })
            .min()
            .unwrap();
        seen.insert(canon);
    }
    seen.len()
}

#[test]
fn counts_agree_with_brute_force() {
    for n in 1..=4 {
        assert_eq!(
            enumerate_monoids(n, MonoidClass::AllCommutative).unwrap().len(),
            brute_force(n, false),
            "n={n}"
        );
        assert_eq!(
            enumerate_monoids(n, MonoidClass::Semilattice).unwrap().len(),
            brute_force(n, true),
            "n={n}"
        );
    }
}

#[test]
fn known_counts() {
    let all: Vec<usize> = (1..=6)
        .map(|n| enumerate_monoids(n, MonoidClass::AllCommutative).unwrap().len())
        .collect();
    assert_eq!(all, [1, 2, 5, 19, 78, 421]);
    let lattices: Vec<usize> = (1..=7)
        .map(|n| enumerate_monoids(n, MonoidClass::Semilattice).unwrap().len())
        .collect();
    assert_eq!(lattices, [1, 1, 1, 2, 5, 15, 53]);
}

#[test]
fn enumerated_monoids_are_valid_and_of_the_right_class() {
    for n in 1..=5 {
        for m in enumerate_monoids(n, MonoidClass::AllCommutative).unwrap() {
            assert_eq!(m.size(), n);
            assert_eq!(m.zero(), 0);
            assert!(m.validate().is_valid());
        }
        for m in enumerate_monoids(n, MonoidClass::Semilattice).unwrap() {
            assert!(m.is_semilattice());
        }
    }
}

#[test]
fn bounds_are_enforced() {
    assert!(matches!(
        enumerate_monoids(7, MonoidClass::AllCommutative),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(matches!(
        enumerate_monoids(8, MonoidClass::Semilattice),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(enumerate_monoids(0, MonoidClass::AllCommutative).is_err());
}

#[test]
fn groups_among_small_monoids() {
    // Commutative groups of order n up to isomorphism.
    for n in 1..=6 {
        let groups = enumerate_monoids(n, MonoidClass::AllCommutative)
            .unwrap()
            .into_iter()
            .filter(FinMonoid::is_group)
            .count();
        assert_eq!(groups, abelian_groups(n).unwrap().len(), "n={n}");
    }
}

#[test]
fn endomorphisms_are_additive() {
    for m in enumerate_monoids(4, MonoidClass::AllCommutative).unwrap() {
        let ends = monoid_endomorphisms(&m);
        assert!(ends.iter().any(|f| f.iter().enumerate().all(|(i, &y)| i == y)));
        for f in &ends {
            assert_eq!(f[m.zero()], m.zero());
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(f[m.add(a, b)], m.add(f[a], f[b]));
                }
            }
        }
        // Every map is checked against the additive ones found by extension.
        let mut count = 0;
        for code in 0..4usize.pow(4) {
            let f: Vec<usize> = (0..4).map(|i| code / 4usize.pow(i) % 4).collect();
            let additive = f[0] == 0
                && (0..4).all(|a| (0..4).all(|b| f[m.add(a, b)] == m.add(f[a], f[b])));
            count += usize::from(additive);
        }
        assert_eq!(ends.len(), count);
    }
}
