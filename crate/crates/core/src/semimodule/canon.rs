//! Canonical forms by breadth-first labeling with individualization.
//!
//! Starting from zero, elements receive labels in the order they are produced
//! by sums with already-processed elements and by the actions. When the
//! process stalls, each unlabeled element of least invariant signature is
//! tried in turn. The canonical form is the least serialization over all
//! leaves; every step is isomorphism-equivariant, so equal forms are equivalent
//! to isomorphism.

use super::{same_semiring, Semimodule};
use crate::error::{Error, Result};

pub const CANON_BOUND: usize = 12;

struct Tables<'a> {
    add: &'a [Vec<usize>],
    actions: &'a [Vec<usize>],
    signature: Vec<Vec<usize>>,
}

impl Tables<'_> {
    fn n(&self) -> usize {
        self.add.len()
    }

    fn serialize(&self, order: &[usize], label: &[usize]) -> Vec<u8> {
        let n = self.n();
        let mut out = Vec::with_capacity(1 + n * n + self.actions.len() * n);
        out.push(n as u8);
        for &x in order {
            for &y in order {
                out.push(label[self.add[x][y]] as u8);
            }
        }
        for a in self.actions {
            for &x in order {
                out.push(label[a[x]] as u8);
            }
        }
        out
    }

    fn search(&self, mut order: Vec<usize>, mut label: Vec<usize>, mut p: usize, best: &mut Option<Vec<u8>>) {
        let n = self.n();
        let assign = |x: usize, order: &mut Vec<usize>, label: &mut Vec<usize>| {
            if label[x] == usize::MAX {
                label[x] = order.len();
                order.push(x);
            }
        };
        while p < order.len() {
            let x = order[p];
            for q in 0..=p {
                let y = order[q];
                assign(self.add[x][y], &mut order, &mut label);
            }
            for a in self.actions {
                assign(a[x], &mut order, &mut label);
            }
            p += 1;
        }
        if order.len() == n {
            let s = self.serialize(&order, &label);
            if best.as_ref().map_or(true, |b| s < *b) {
                *best = Some(s);
            }
            return;
        }
        let unlabeled = (0..n).filter(|&x| label[x] == usize::MAX);
        let min_sig = unlabeled
            .clone()
            .map(|x| &self.signature[x])
            .min()
            .unwrap()
            .clone();
        for u in unlabeled.filter(|&x| self.signature[x] == min_sig) {
            let mut o = order.clone();
            let mut l = label.clone();
            l[u] = o.len();
            o.push(u);
            self.search(o, l, p, best);
        }
    }
}

/// Invariant data of each element, used to narrow individualization.
fn signatures(add: &[Vec<usize>], zero: usize, actions: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = add.len();
    (0..n)
        .map(|x| {
            let mut sig = Vec::with_capacity(4 + 2 * actions.len());
            // Size of the cyclic submonoid generated by x.
            let mut seen = vec![false; n];
            let mut y = zero;
            let mut k = 0;
            while !seen[y] {
                seen[y] = true;
                y = add[y][x];
                k += 1;
            }
            sig.push(k);
            sig.push((0..n).filter(|&y| add[x][y] == x).count());
            sig.push((0..n).filter(|&y| add[y][y] == x).count());
            sig.push((0..n).filter(|&y| add[x][y] == zero).count());
            for a in actions {
                sig.push(usize::from(a[x] == x));
                sig.push(usize::from(a[x] == zero));
            }
            sig
        })
        .collect()
}

/// Canonical form of raw tables. Callers enforce the size bound.
pub(crate) fn canonical_tables(add: &[Vec<usize>], zero: usize, actions: &[Vec<usize>]) -> Vec<u8> {
    let n = add.len();
    assert!(n <= u8::MAX as usize, "carrier too large for byte encoding");
    let tables = Tables {
        add,
        actions,
        signature: signatures(add, zero, actions),
    };
    let mut label = vec![usize::MAX; n];
    label[zero] = 0;
    let mut best = None;
    tables.search(vec![zero], label, 0, &mut best);
    best.unwrap()
}

pub fn canonical_form_bounded(m: &Semimodule, bound: usize) -> Result<Vec<u8>> {
    if m.size() > bound || m.size() > u8::MAX as usize {
        return Err(Error::BoundExceeded {
            what: "canonical_form",
            size: m.size(),
            bound: bound.min(u8::MAX as usize),
        });
    }
    Ok(canonical_tables(m.monoid().table(), m.zero(), m.actions()))
}

pub fn canonical_form(m: &Semimodule) -> Result<Vec<u8>> {
    canonical_form_bounded(m, CANON_BOUND)
}

/// Isomorphism test via canonical forms.
pub fn are_isomorphic(m: &Semimodule, n: &Semimodule, bound: usize) -> Result<bool> {
    if !same_semiring(m.semiring(), n.semiring()) {
        return Err(Error::SemiringMismatch);
    }
    if m.size() != n.size() {
        return Ok(false);
    }
    Ok(canonical_form_bounded(m, bound)? == canonical_form_bounded(n, bound)?)
}
