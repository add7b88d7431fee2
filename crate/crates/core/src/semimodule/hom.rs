use super::{same_semiring, Congruence, Semimodule};
use crate::error::{Error, Result};
use crate::monoid::FinMonoid;

/// A map between carriers, `map[m]` being the image of `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hom {
    pub map: Vec<usize>,
}

impl Hom {
    pub fn is_injective(&self, target_size: usize) -> bool {
        let mut seen = vec![false; target_size];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self, target_size: usize) -> bool {
        let mut seen = vec![false; target_size];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_zero(&self, target_zero: usize) -> bool {
        self.map.iter().all(|&y| y == target_zero)
    }
}

/// Whether `map` is a semimodule homomorphism from `m` to `n`.
pub fn is_hom(m: &Semimodule, n: &Semimodule, map: &[usize]) -> bool {
    if map.len() != m.size() || map.iter().any(|&y| y >= n.size()) {
        return false;
    }
    if !same_semiring(m.semiring(), n.semiring()) || map[m.zero()] != n.zero() {
        return false;
    }
    for x in 0..m.size() {
        for y in x..m.size() {
            if map[m.add(x, y)] != n.add(map[x], map[y]) {
                return false;
            }
        }
        for i in 0..m.action_count() {
            if map[m.act(i, x)] != n.act(i, map[x]) {
                return false;
            }
        }
    }
    true
}

/// A small generating set: repeatedly add the least element outside the
/// current subsemimodule.
fn generators(m: &Semimodule) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = m.generated_subsemimodule(&[]);
    while sub.len() < m.size() {
        let mut inside = vec![false; m.size()];
        for &x in &sub {
            inside[x] = true;
        }
        let g = (0..m.size()).find(|&x| !inside[x]).unwrap();
        gens.push(g);
        sub = m.generated_subsemimodule(&gens);
    }
    gens
}

/// Propagates generator images along sums and actions. Returns `None` on
/// conflict; a complete propagation is a homomorphism.
fn extend(m: &Semimodule, n: &Semimodule, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; m.size()];
    let mut list = Vec::with_capacity(m.size());
    let set = |x: usize, y: usize, map: &mut Vec<usize>, list: &mut Vec<usize>| -> bool {
        if map[x] == usize::MAX {
            map[x] = y;
            list.push(x);
            true
        } else {
            map[x] == y
        }
    };
    if !set(m.zero(), n.zero(), &mut map, &mut list) {
        return None;
    }
    for (&g, &y) in gens.iter().zip(imgs) {
        if !set(g, y, &mut map, &mut list) {
            return None;
        }
    }
    let mut p = 0;
    while p < list.len() {
        let x = list[p];
        for q in 0..=p {
            let y = list[q];
            let img = n.add(map[x], map[y]);
            if !set(m.add(x, y), img, &mut map, &mut list) {
                return None;
            }
        }
        for i in 0..m.action_count() {
            let img = n.act(i, map[x]);
            if !set(m.act(i, x), img, &mut map, &mut list) {
                return None;
            }
        }
        p += 1;
    }
    Some(map)
}

/// Every homomorphism from `m` to `n`, in lexicographic order of maps.
pub fn homs(m: &Semimodule, n: &Semimodule, bound: usize) -> Result<Vec<Hom>> {
    if !same_semiring(m.semiring(), n.semiring()) {
        return Err(Error::SemiringMismatch);
    }
    if m.size() > bound {
        return Err(Error::BoundExceeded {
            what: "homs",
            size: m.size(),
            bound,
        });
    }
    let gens = generators(m);
    let mut out = Vec::new();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend(m, n, &gens, &imgs) {
            out.push(Hom { map });
        }
        // Odometer over all image tuples.
        let mut i = 0;
        loop {
            if i == imgs.len() {
                out.sort();
                return Ok(out);
            }
            imgs[i] += 1;
            if imgs[i] < n.size() {
                break;
            }
            imgs[i] = 0;
            i += 1;
        }
    }
}

/// Kernel congruence and image subset of a homomorphism.
pub fn kernel_image(h: &Hom) -> (Congruence, Vec<usize>) {
    let kernel = Congruence::from_fibers(&h.map);
    let mut image = h.map.clone();
    image.sort_unstable();
    image.dedup();
    (kernel, image)
}

/// `M ⊕ N` together with its canonical inclusions and projections. The pair
/// `(a, b)` has index `a + |M|·b`.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub sum: Semimodule,
    pub inclusions: [Hom; 2],
    pub projections: [Hom; 2],
}

pub fn direct_sum(m: &Semimodule, n: &Semimodule) -> Result<DirectSum> {
    if !same_semiring(m.semiring(), n.semiring()) {
        return Err(Error::SemiringMismatch);
    }
    let (p, q) = (m.size(), n.size());
    let monoid: FinMonoid = m.monoid().product(n.monoid());
    let actions = (0..m.action_count())
        .map(|i| (0..p * q).map(|x| m.act(i, x % p) + p * n.act(i, x / p)).collect())
        .collect();
    let mut sum = Semimodule::new(m.semiring().clone(), monoid, actions)?;
    if let (Some(lm), Some(ln)) = (m.labels(), n.labels()) {
        sum = sum.with_labels(
            (0..p * q)
                .map(|x| format!("({},{})", lm[x % p], ln[x / p]))
                .collect(),
        )?;
    }
    let inclusions = [
        Hom {
            map: (0..p).map(|a| a + p * n.zero()).collect(),
        },
        Hom {
            map: (0..q).map(|b| m.zero() + p * b).collect(),
        },
    ];
    let projections = [
        Hom {
            map: (0..p * q).map(|x| x % p).collect(),
        },
        Hom {
            map: (0..p * q).map(|x| x / p).collect(),
        },
    ];
    Ok(DirectSum {
        sum,
        inclusions,
        projections,
    })
}
