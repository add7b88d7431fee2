use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::Semimodule;
use crate::error::{Error, Result};

/// A partition of the carrier, normalized so that each block is sorted and
/// blocks are ordered by their least element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Congruence {
    pub blocks: Vec<Vec<usize>>,
}

impl Congruence {
    /// Builds the partition whose blocks are the fibers of `class_of`.
    pub fn from_fibers(class_of: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = std::collections::HashMap::new();
        for (m, &c) in class_of.iter().enumerate() {
            let b = *slot.entry(c).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(m);
        }
        Self { blocks }
    }

    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        Self { blocks }
    }

    pub fn equality(n: usize) -> Self {
        Self {
            blocks: (0..n).map(|m| vec![m]).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            blocks: vec![(0..n).collect()],
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn is_equality(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Block index of every element.
    pub fn class_map(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.carrier_size()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &m in b {
                out[m] = i;
            }
        }
        out
    }

    /// Checks that this is a partition of `0..n`.
    pub fn check_partition(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::NotACongruence("empty block".into()));
            }
            for &m in b {
                if m >= n {
                    return Err(Error::NotACongruence(format!("element {m} out of range")));
                }
                if seen[m] {
                    return Err(Error::NotACongruence(format!("element {m} in two blocks")));
                }
                seen[m] = true;
            }
        }
        if let Some(m) = seen.iter().position(|s| !s) {
            return Err(Error::NotACongruence(format!("element {m} in no block")));
        }
        Ok(())
    }

    /// Checks compatibility with addition and every action of `module`.
    pub fn check_on(&self, module: &Semimodule) -> Result<()> {
        let n = module.size();
        self.check_partition(n)?;
        let class = self.class_map();
        for b in &self.blocks {
            let x = b[0];
            for &y in &b[1..] {
                for k in 0..n {
                    if class[module.add(x, k)] != class[module.add(y, k)] {
                        return Err(Error::NotACongruence(format!(
                            "{x} ~ {y} but {x}+{k} and {y}+{k} are separated"
                        )));
                    }
                }
                for (i, a) in module.actions().iter().enumerate() {
                    if class[a[x]] != class[a[y]] {
                        return Err(Error::NotACongruence(format!(
                            "{x} ~ {y} but action {i} separates their images"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Congruence::from_fibers(&roots)
    }
}

/// The least congruence containing every pair in `pairs`, by union-find
/// closure: a merge of `x` and `y` schedules `x+k ~ y+k` for all `k` and
/// `a(x) ~ a(y)` for every action `a`.
pub fn congruence_generated_by(module: &Semimodule, pairs: &[(usize, usize)]) -> Congruence {
    let n = module.size();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        if !uf.union(x, y) {
            continue;
        }
        for k in 0..n {
            let (a, b) = (module.add(x, k), module.add(y, k));
            if a != b {
                work.push((a, b));
            }
        }
        for act in module.actions() {
            if act[x] != act[y] {
                work.push((act[x], act[y]));
            }
        }
    }
    uf.into_congruence()
}

pub fn principal_congruence(module: &Semimodule, a: usize, b: usize) -> Congruence {
    congruence_generated_by(module, &[(a, b)])
}

/// Join of two congruences in the lattice of equivalence relations. The join
/// of two congruences is again a congruence.
fn join(c: &Congruence, d: &Congruence) -> Congruence {
    let n = c.carrier_size();
    let mut uf = UnionFind::new(n);
    for b in c.blocks.iter().chain(&d.blocks) {
        for &m in &b[1..] {
            uf.union(b[0], m);
        }
    }
    uf.into_congruence()
}

/// Every congruence on `module`, as joins of principal congruences, sorted by
/// number of blocks (descending) and then by blocks.
pub fn all_congruences(module: &Semimodule, bound: usize) -> Result<Vec<Congruence>> {
    let n = module.size();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "all_congruences",
            size: n,
            bound,
        });
    }
    let mut principals: BTreeSet<Congruence> = BTreeSet::new();
    for a in 0..n {
        for b in (a + 1)..n {
            principals.insert(principal_congruence(module, a, b));
        }
    }
    let principals: Vec<_> = principals.into_iter().collect();
    let mut seen: HashSet<Congruence> = HashSet::new();
    let eq = Congruence::equality(n);
    seen.insert(eq.clone());
    let mut stack = vec![eq];
    while let Some(c) = stack.pop() {
        for p in &principals {
            let j = join(&c, p);
            if seen.insert(j.clone()) {
                stack.push(j);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        b.blocks
            .len()
            .cmp(&a.blocks.len())
            .then_with(|| a.blocks.cmp(&b.blocks))
    });
    Ok(out)
}

/// The quotient semimodule. Block `i` of `c` becomes element `i`.
pub fn quotient(module: &Semimodule, c: &Congruence) -> Result<Semimodule> {
    c.check_on(module)?;
    let class = c.class_map();
    let k = c.blocks.len();
    let reps: Vec<usize> = c.blocks.iter().map(|b| b[0]).collect();
    let add = (0..k)
        .map(|i| (0..k).map(|j| class[module.add(reps[i], reps[j])]).collect())
        .collect();
    let monoid = crate::monoid::FinMonoid::new(add, class[module.zero()])?;
    let actions = module
        .actions()
        .iter()
        .map(|a| reps.iter().map(|&r| class[a[r]]).collect())
        .collect();
    let q = Semimodule::new(module.semiring().clone(), monoid, actions)?;
    match module.labels() {
        Some(l) => q.with_labels(
            c.blocks
                .iter()
                .map(|b| {
                    let parts: Vec<&str> = b.iter().map(|&m| l[m].as_str()).collect();
                    if parts.len() == 1 {
                        parts[0].to_string()
                    } else {
                        format!("[{}]", parts.join("~"))
                    }
                })
                .collect(),
        ),
        None => Ok(q),
    }
}
