//! Backtracking searches: monoid tables, monoid endomorphisms and semimodule
//! structures on a fixed carrier.

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::semimodule::canonical_tables;
use crate::semiring::{BasedSemiring, FiniteSemiring, NatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonoidClass {
    AllCommutative,
    Semilattice,
}

impl MonoidClass {
    pub fn max_size(self) -> usize {
        match self {
            MonoidClass::AllCommutative => 6,
            MonoidClass::Semilattice => 7,
        }
    }
}

const UNSET: usize = usize::MAX;

struct MonoidSearch {
    n: usize,
    semilattice: bool,
    cells: Vec<(usize, usize)>,
}

impl MonoidSearch {
    fn new(n: usize, semilattice: bool) -> Self {
        let mut cells = Vec::new();
        for i in 1..n {
            for j in i..n {
                if !(semilattice && i == j) {
                    cells.push((i, j));
                }
            }
        }
        Self {
            n,
            semilattice,
            cells,
        }
    }

    fn initial(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut t = vec![vec![UNSET; n]; n];
        for x in 0..n {
            t[0][x] = x;
            t[x][0] = x;
            if self.semilattice {
                t[x][x] = x;
            }
        }
        t
    }

    /// Associativity on every triple whose entries are already defined.
    fn consistent(&self, t: &[Vec<usize>], a: usize, b: usize) -> bool {
        let n = self.n;
        // Only triples touching the freshly set cell (a, b) can fail anew.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let touches = (x == a && y == b)
                        || (x == b && y == a)
                        || (y == a && z == b)
                        || (y == b && z == a);
                    let xy = t[x][y];
                    let yz = t[y][z];
                    if xy == UNSET || yz == UNSET {
                        continue;
                    }
                    let l = t[xy][z];
                    let r = t[x][yz];
                    if l == UNSET || r == UNSET {
                        continue;
                    }
                    let uses = touches
                        || (xy == a && z == b)
                        || (xy == b && z == a)
                        || (x == a && yz == b)
                        || (x == b && yz == a);
                    if uses && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&self, t: &mut Vec<Vec<usize>>, k: usize, out: &mut BTreeMap<Vec<u8>, ()>) {
        if k == self.cells.len() {
            out.insert(canonical_tables(t, 0, &[]), ());
            return;
        }
        let (i, j) = self.cells[k];
        for v in 0..self.n {
            t[i][j] = v;
            t[j][i] = v;
            if self.consistent(t, i, j) {
                self.run(t, k + 1, out);
            }
        }
        t[i][j] = UNSET;
        t[j][i] = UNSET;
    }
}

/// Rebuilds the carrier table from a canonical form.
pub(crate) fn decode_monoid(canon: &[u8]) -> FinMonoid {
    let n = canon[0] as usize;
    let add = (0..n)
        .map(|a| (0..n).map(|b| canon[1 + a * n + b] as usize).collect())
        .collect();
    FinMonoid::new(add, 0).expect("canonical tables are well formed")
}

/// Decodes the action tables stored after the carrier table.
pub(crate) fn decode_actions(canon: &[u8], count: usize) -> Vec<Vec<usize>> {
    let n = canon[0] as usize;
    let base = 1 + n * n;
    (0..count)
        .map(|i| (0..n).map(|m| canon[base + i * n + m] as usize).collect())
        .collect()
}

/// Commutative monoids of order `n` up to isomorphism, in canonical-form order.
pub fn enumerate_monoids(n: usize, class: MonoidClass) -> Result<Vec<FinMonoid>> {
    if n == 0 {
        return Err(Error::InvalidParameter("monoid order must be positive".into()));
    }
    if n > class.max_size() {
        return Err(Error::BoundExceeded {
            what: "enumerate_monoids",
            size: n,
            bound: class.max_size(),
        });
    }
    let search = MonoidSearch::new(n, class == MonoidClass::Semilattice);
    if search.cells.is_empty() {
        return Ok(vec![FinMonoid::new(search.initial(), 0)?]);
    }
    let (i, j) = search.cells[0];
    let found: Vec<BTreeMap<Vec<u8>, ()>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut t = search.initial();
            t[i][j] = v;
            t[j][i] = v;
            let mut out = BTreeMap::new();
            if search.consistent(&t, i, j) {
                search.run(&mut t, 1, &mut out);
            }
            out
        })
        .collect();
    let mut all = BTreeMap::new();
    for f in found {
        all.extend(f);
    }
    Ok(all.keys().map(|c| decode_monoid(c)).collect())
}

/// Abelian groups of order `n` up to isomorphism, as products of cyclic groups
/// of prime-power order.
pub fn abelian_groups(n: usize) -> Result<Vec<FinMonoid>> {
    if n == 0 {
        return Err(Error::InvalidParameter("group order must be positive".into()));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while rest > 1 {
        let mut a = 0;
        while rest % p == 0 {
            rest /= p;
            a += 1;
        }
        if a > 0 {
            factors.push((p, a));
        }
        p += 1;
    }
    fn partitions(a: usize, max: usize) -> Vec<Vec<usize>> {
        if a == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=a.min(max)).rev() {
            for mut tail in partitions(a - first, first) {
                tail.insert(0, first);
                out.push(tail);
            }
        }
        out
    }
    let mut groups = vec![FinMonoid::trivial()];
    for (p, a) in factors {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(a, a) {
                let mut h = g.clone();
                for e in part {
                    h = h.product(&FinMonoid::cyclic(p.pow(e as u32))?);
                }
                next.push(h);
            }
        }
        groups = next;
    }
    Ok(groups)
}

/// All additive maps of the carrier fixing zero, sorted.
pub fn monoid_endomorphisms(m: &FinMonoid) -> Vec<Vec<usize>> {
    let n = m.size();
    // Generators of the monoid: greedily add the least element not yet reached.
    let closure = |gens: &[usize]| {
        let mut inside = vec![false; n];
        let mut list = vec![m.zero()];
        inside[m.zero()] = true;
        for &g in gens {
            if !inside[g] {
                inside[g] = true;
                list.push(g);
            }
        }
        let mut p = 0;
        while p < list.len() {
            for q in 0..=p {
                let s = m.add(list[p], list[q]);
                if !inside[s] {
                    inside[s] = true;
                    list.push(s);
                }
            }
            p += 1;
        }
        inside
    };
    let mut gens = Vec::new();
    loop {
        let inside = closure(&gens);
        match (0..n).find(|&x| !inside[x]) {
            Some(x) => gens.push(x),
            None => break,
        }
    }
    let mut out = Vec::new();
    let mut imgs = vec![0usize; gens.len()];
    loop {
        let mut map = vec![UNSET; n];
        map[m.zero()] = m.zero();
        let mut list = vec![m.zero()];
        let mut ok = true;
        for (&g, &y) in gens.iter().zip(&imgs) {
            if map[g] == UNSET {
                map[g] = y;
                list.push(g);
            } else if map[g] != y {
                ok = false;
            }
        }
        let mut p = 0;
        while ok && p < list.len() {
            for q in 0..=p {
                let (x, y) = (list[p], list[q]);
                let s = m.add(x, y);
                let img = m.add(map[x], map[y]);
                if map[s] == UNSET {
                    map[s] = img;
                    list.push(s);
                } else if map[s] != img {
                    ok = false;
                    break;
                }
            }
            p += 1;
        }
        if ok {
            out.push(map);
        }
        let mut i = 0;
        loop {
            if i == imgs.len() {
                out.sort();
                return out;
            }
            imgs[i] += 1;
            if imgs[i] < n {
                break;
            }
            imgs[i] = 0;
            i += 1;
        }
    }
}

fn evaluate(m: &FinMonoid, acts: &[Vec<usize>], v: &NatVec, x: usize) -> usize {
    v.support().into_iter().fold(m.zero(), |acc, h| {
        m.add(acc, m.times(v.get(h), acts[h][x]))
    })
}

enum Slot {
    Fixed,
    Derived(usize, usize),
    Free,
}

/// Every semimodule structure over a based semiring on the carrier `m`.
pub fn based_actions(r: &BasedSemiring, m: &FinMonoid) -> Vec<Vec<Vec<usize>>> {
    let k = r.rank();
    let n = m.size();
    let ends = monoid_endomorphisms(m);
    let id: Vec<usize> = (0..n).collect();
    let slots: Vec<Slot> = (0..k)
        .map(|u| {
            if r.unit().as_basis_element() == Some(u) {
                return Slot::Fixed;
            }
            for i in 0..u {
                for j in 0..u {
                    if r.product(i, j).as_basis_element() == Some(u) {
                        return Slot::Derived(i, j);
                    }
                }
            }
            Slot::Free
        })
        .collect();
    // Relations become checkable at the level of their largest index.
    let mut checks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for i in 0..k {
        for j in 0..k {
            let top = r
                .product(i, j)
                .support()
                .into_iter()
                .chain([i, j])
                .max()
                .unwrap();
            checks[top].push((i, j));
        }
    }
    let unit_level = r.unit().support().into_iter().max().unwrap_or(0);

    struct Ctx<'a> {
        r: &'a BasedSemiring,
        m: &'a FinMonoid,
        ends: &'a [Vec<usize>],
        id: &'a [usize],
        slots: &'a [Slot],
        checks: &'a [Vec<(usize, usize)>],
        unit_level: usize,
    }

    fn level_ok(c: &Ctx, acts: &[Vec<usize>], u: usize) -> bool {
        let n = c.m.size();
        if u == c.unit_level && (0..n).any(|x| evaluate(c.m, acts, c.r.unit(), x) != x) {
            return false;
        }
        c.checks[u].iter().all(|&(i, j)| {
            let v = c.r.product(i, j);
            (0..n).all(|x| acts[i][acts[j][x]] == evaluate(c.m, acts, v, x))
        })
    }

    fn go(c: &Ctx, acts: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let u = acts.len();
        if u == c.slots.len() {
            out.push(acts.clone());
            return;
        }
        let candidates: Vec<Vec<usize>> = match c.slots[u] {
            Slot::Fixed => vec![c.id.to_vec()],
            Slot::Derived(i, j) => vec![acts[j].iter().map(|&x| acts[i][x]).collect()],
            Slot::Free => c.ends.to_vec(),
        };
        for cand in candidates {
            acts.push(cand);
            if level_ok(c, acts, u) {
                go(c, acts, out);
            }
            acts.pop();
        }
    }

    let ctx = Ctx {
        r,
        m,
        ends: &ends,
        id: &id,
        slots: &slots,
        checks: &checks,
        unit_level,
    };
    let mut out = Vec::new();
    go(&ctx, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Greedy semiring generators: starting from the closure of `{0, 1}`, add the
/// least element outside the generated subsemiring until everything is reached.
fn semiring_generators(f: &FiniteSemiring) -> Vec<usize> {
    let size = f.size();
    let closure = |gens: &[usize]| {
        let mut inside = vec![false; size];
        let mut list = Vec::new();
        for &g in [f.zero(), f.one()].iter().chain(gens) {
            if !inside[g] {
                inside[g] = true;
                list.push(g);
            }
        }
        let mut p = 0;
        while p < list.len() {
            for q in 0..=p {
                let (a, b) = (list[p], list[q]);
                for s in [f.add(a, b), f.mul(a, b), f.mul(b, a)] {
                    if !inside[s] {
                        inside[s] = true;
                        list.push(s);
                    }
                }
            }
            p += 1;
        }
        inside
    };
    let mut gens = Vec::new();
    loop {
        let inside = closure(&gens);
        match (0..size).find(|&x| !inside[x]) {
            Some(x) => gens.push(x),
            None => return gens,
        }
    }
}

#[derive(Clone)]
struct FinitePartial {
    acts: Vec<Option<Vec<usize>>>,
    known: Vec<usize>,
}

impl FinitePartial {
    /// Records `act(x) = map` and propagates along sums and products with every
    /// known element. Returns `false` on a conflict.
    fn assign(&mut self, f: &FiniteSemiring, m: &FinMonoid, x: usize, map: Vec<usize>) -> bool {
        let mut queue = vec![(x, map)];
        while let Some((x, map)) = queue.pop() {
            match &self.acts[x] {
                Some(existing) => {
                    if *existing != map {
                        return false;
                    }
                    continue;
                }
                None => {
                    self.acts[x] = Some(map);
                    self.known.push(x);
                }
            }
            let ax = self.acts[x].clone().unwrap();
            for idx in 0..self.known.len() {
                let y = self.known[idx];
                let ay = self.acts[y].as_ref().unwrap();
                let sum: Vec<usize> = ax.iter().zip(ay).map(|(&a, &b)| m.add(a, b)).collect();
                let xy: Vec<usize> = ay.iter().map(|&v| ax[v]).collect();
                let yx: Vec<usize> = ax.iter().map(|&v| ay[v]).collect();
                for (target, val) in [(f.add(x, y), sum), (f.mul(x, y), xy), (f.mul(y, x), yx)] {
                    match &self.acts[target] {
                        Some(existing) if *existing != val => return false,
                        Some(_) => {}
                        None => queue.push((target, val)),
                    }
                }
            }
        }
        true
    }
}

/// Every semimodule structure over a finite semiring on the carrier `m`.
pub fn finite_actions(f: &FiniteSemiring, m: &FinMonoid) -> Vec<Vec<Vec<usize>>> {
    let n = m.size();
    let ends = monoid_endomorphisms(m);
    let gens = semiring_generators(f);
    let mut start = FinitePartial {
        acts: vec![None; f.size()],
        known: Vec::new(),
    };
    let zero_map = vec![m.zero(); n];
    let id: Vec<usize> = (0..n).collect();
    if !start.assign(f, m, f.zero(), zero_map) || !start.assign(f, m, f.one(), id) {
        return Vec::new();
    }
    fn go(
        f: &FiniteSemiring,
        m: &FinMonoid,
        ends: &[Vec<usize>],
        gens: &[usize],
        state: FinitePartial,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        match gens.split_first() {
            None => {
                if state.acts.iter().all(Option::is_some) {
                    out.push(state.acts.into_iter().map(Option::unwrap).collect());
                }
            }
            Some((&g, rest)) => {
                if state.acts[g].is_some() {
                    go(f, m, ends, rest, state, out);
                    return;
                }
                for e in ends {
                    let mut next = state.clone();
                    if next.assign(f, m, g, e.clone()) {
                        go(f, m, ends, rest, next, out);
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    go(f, m, &ends, &gens, start, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_monoid_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_monoids(n, MonoidClass::AllCommutative).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 2, 5, 19, 78]);
        let lattices: Vec<usize> = (1..=6)
            .map(|n| enumerate_monoids(n, MonoidClass::Semilattice).unwrap().len())
            .collect();
        assert_eq!(lattices, [1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn abelian_group_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| abelian_groups(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2]);
        for n in 1..=12 {
            for g in abelian_groups(n).unwrap() {
                assert_eq!(g.size(), n);
                assert!(g.is_group());
                assert!(g.validate().is_valid());
            }
        }
    }

    #[test]
    fn endomorphisms_of_cyclic_groups() {
        for n in 1..=8 {
            let z = FinMonoid::cyclic(n).unwrap();
            assert_eq!(monoid_endomorphisms(&z).len(), n);
        }
        // Additive maps of the four-element Boolean lattice are determined by
        // the images of the two atoms.
        assert_eq!(monoid_endomorphisms(&FinMonoid::powerset(2)).len(), 16);
    }
}
