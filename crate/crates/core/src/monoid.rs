//! Finite commutative monoids given by Cayley tables.

use std::fmt;

use crate::error::{Error, Result};
use crate::validation::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMonoid {
    add: Vec<Vec<usize>>,
    zero: usize,
}

impl FinMonoid {
    /// Checks shape and index ranges; the axioms are checked by [`FinMonoid::validate`].
    pub fn new(add: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        let n = add.len();
        if n == 0 {
            return Err(Error::MalformedTable("monoid carrier is empty".into()));
        }
        for (i, row) in add.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "add row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::MalformedTable(format!(
                    "add row {i} contains index {bad} out of range"
                )));
            }
        }
        if zero >= n {
            return Err(Error::MalformedTable(format!("zero index {zero} out of range")));
        }
        Ok(Self { add, zero })
    }

    pub fn trivial() -> Self {
        Self {
            add: vec![vec![0]],
            zero: 0,
        }
    }

    /// The cyclic group of order `n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic group of order 0".into()));
        }
        let add = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Ok(Self { add, zero: 0 })
    }

    /// The two-element monoid {0, 1} with 1 + 1 = 1.
    pub fn boolean() -> Self {
        Self {
            add: vec![vec![0, 1], vec![1, 1]],
            zero: 0,
        }
    }

    /// Subsets of an `bits`-element set under union, indexed by bitmask.
    pub fn powerset(bits: usize) -> Self {
        let n = 1usize << bits;
        let add = (0..n).map(|a| (0..n).map(|b| a | b).collect()).collect();
        Self { add, zero: 0 }
    }

    /// Product monoid; the pair `(a, b)` has index `a + |self| * b`.
    pub fn product(&self, other: &FinMonoid) -> FinMonoid {
        let (m, n) = (self.size(), other.size());
        let mut add = vec![vec![0; m * n]; m * n];
        for x in 0..m * n {
            for y in 0..m * n {
                let a = self.add[x % m][y % m];
                let b = other.add[x / m][y / m];
                add[x][y] = a + m * b;
            }
        }
        FinMonoid {
            add,
            zero: self.zero + m * other.zero,
        }
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.add
    }

    /// `k·m` by doubling.
    pub fn times(&self, mut k: u64, m: usize) -> usize {
        let mut acc = self.zero;
        let mut pow = m;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add[acc][pow];
            }
            pow = self.add[pow][pow];
            k >>= 1;
        }
        acc
    }

    /// Elements with an additive inverse, in index order.
    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&m| self.add[m].iter().any(|&s| s == self.zero))
            .collect()
    }

    pub fn is_group(&self) -> bool {
        self.invertibles().len() == self.size()
    }

    pub fn is_idempotent(&self, m: usize) -> bool {
        self.add[m][m] == m
    }

    pub fn is_semilattice(&self) -> bool {
        (0..self.size()).all(|m| self.is_idempotent(m))
    }

    /// Natural order of a semilattice: `a ≤ b` iff `a + b = b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.add[a][b] == b
    }

    pub fn validate(&self) -> ValidationReport<MonoidViolation> {
        let mut report = ValidationReport::new();
        let n = self.size();
        let a = &self.add;
        for x in 0..n {
            if a[self.zero][x] != x || a[x][self.zero] != x {
                report.push(MonoidViolation::ZeroNotIdentity(x));
            }
            for y in (x + 1)..n {
                if a[x][y] != a[y][x] {
                    report.push(MonoidViolation::NotCommutative(x, y));
                }
            }
            for y in 0..n {
                for z in 0..n {
                    if a[a[x][y]][z] != a[x][a[y][z]] {
                        report.push(MonoidViolation::NotAssociative(x, y, z));
                    }
                }
            }
        }
        report
    }

    /// Relabels the carrier: element `i` of `self` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> FinMonoid {
        let n = self.size();
        let mut add = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                add[perm[x]][perm[y]] = perm[self.add[x][y]];
            }
        }
        FinMonoid {
            add,
            zero: perm[self.zero],
        }
    }

    /// Restriction of the table to a subset closed under addition; element
    /// `subset[i]` becomes index `i`.
    pub fn restrict(&self, subset: &[usize]) -> Result<FinMonoid> {
        let mut pos = vec![usize::MAX; self.size()];
        for (i, &m) in subset.iter().enumerate() {
            pos[m] = i;
        }
        let mut add = vec![vec![0; subset.len()]; subset.len()];
        for (i, &x) in subset.iter().enumerate() {
            for (j, &y) in subset.iter().enumerate() {
                let s = pos[self.add[x][y]];
                if s == usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "subset not closed under addition: {x} + {y}"
                    )));
                }
                add[i][j] = s;
            }
        }
        let zero = pos[self.zero];
        if zero == usize::MAX {
            return Err(Error::InvalidParameter("subset does not contain zero".into()));
        }
        Ok(FinMonoid { add, zero })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidViolation {
    ZeroNotIdentity(usize),
    NotCommutative(usize, usize),
    NotAssociative(usize, usize, usize),
}

impl fmt::Display for MonoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidViolation::ZeroNotIdentity(x) => write!(f, "zero is not an identity for {x}"),
            MonoidViolation::NotCommutative(x, y) => {
                write!(f, "addition not commutative at ({x}, {y})")
            }
            MonoidViolation::NotAssociative(x, y, z) => {
                write!(f, "addition not associative at ({x}, {y}, {z})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_is_group() {
        let z5 = FinMonoid::cyclic(5).unwrap();
        assert!(z5.validate().is_valid());
        assert_eq!(z5.invertibles().len(), 5);
        assert_eq!(z5.times(3, 2), 1);
        assert_eq!(z5.times(0, 4), 0);
    }

    #[test]
    fn boolean_is_semilattice() {
        let b = FinMonoid::boolean();
        assert!(b.validate().is_valid());
        assert!(b.is_semilattice());
        assert_eq!(b.invertibles(), vec![0]);
    }

    #[test]
    fn product_indexing() {
        let b = FinMonoid::boolean();
        let bb = b.product(&b);
        assert_eq!(bb, FinMonoid::powerset(2));
        assert!(bb.validate().is_valid());
    }

    #[test]
    fn restrict_rejects_open_subsets() {
        let z4 = FinMonoid::cyclic(4).unwrap();
        assert!(z4.restrict(&[0, 1]).is_err());
        assert_eq!(z4.restrict(&[0, 2]).unwrap().size(), 2);
    }
}
