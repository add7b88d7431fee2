//! Semirings given by finite data.
//!
//! Two representations are supported:
//!
//! * [`BasedSemiring`]: a semiring that is free over the non-negative integers
//!   on a finite basis, stored as structure constants. Elements are
//!   [`NatVec`]s of coefficients with respect to that basis.
//! * [`FiniteSemiring`]: a semiring with finitely many elements, stored as full
//!   addition and multiplication tables.
//!
//! All coefficient arithmetic is checked; overflow is reported as
//! [`Error::Overflow`] rather than wrapping.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::validation::ValidationReport;

/// Coefficient vector of a semiring element with respect to a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NatVec(Vec<u64>);

impl NatVec {
    pub fn zero(rank: usize) -> Self {
        NatVec(vec![0; rank])
    }

    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        NatVec(v)
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        NatVec(coeffs)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Indices of the basis elements occurring with non-zero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of basis elements in the support.
    pub fn size(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    /// If this vector is exactly one basis element, its index.
    pub fn as_basis_element(&self) -> Option<usize> {
        let supp = self.support();
        match supp.as_slice() {
            [i] if self.0[*i] == 1 => Some(*i),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &NatVec) -> Result<NatVec> {
        if self.len() != other.len() {
            return Err(Error::MalformedTable(format!(
                "vector lengths differ: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(NatVec)
    }

    pub fn checked_scale(&self, n: u64) -> Result<NatVec> {
        self.0
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(NatVec)
    }
}

/// A semiring with a finite basis over the non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedSemiring {
    basis_names: Vec<String>,
    unit: NatVec,
    mult: Vec<Vec<NatVec>>,
}

impl BasedSemiring {
    /// Checks table dimensions only; use [`BasedSemiring::validate`] for the axioms.
    pub fn new(basis_names: Vec<String>, unit: NatVec, mult: Vec<Vec<NatVec>>) -> Result<Self> {
        let k = basis_names.len();
        if k == 0 {
            return Err(Error::MalformedTable("basis is empty".into()));
        }
        if unit.len() != k {
            return Err(Error::MalformedTable(format!(
                "unit has length {}, basis has {k} elements",
                unit.len()
            )));
        }
        if mult.len() != k {
            return Err(Error::MalformedTable(format!(
                "mult has {} rows, expected {k}",
                mult.len()
            )));
        }
        for (i, row) in mult.iter().enumerate() {
            if row.len() != k {
                return Err(Error::MalformedTable(format!(
                    "mult row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != k {
                    return Err(Error::MalformedTable(format!(
                        "mult[{i}][{j}] has length {}, expected {k}",
                        v.len()
                    )));
                }
            }
        }
        Ok(Self {
            basis_names,
            unit,
            mult,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis_names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn unit(&self) -> &NatVec {
        &self.unit
    }

    /// Structure constants of `r_i · r_j`.
    pub fn product(&self, i: usize, j: usize) -> &NatVec {
        &self.mult[i][j]
    }

    pub fn mult_table(&self) -> &[Vec<NatVec>] {
        &self.mult
    }

    pub fn basis_vec(&self, i: usize) -> NatVec {
        NatVec::basis(self.rank(), i)
    }

    fn conform(&self, a: &NatVec) -> Result<()> {
        if a.len() != self.rank() {
            return Err(Error::MalformedTable(format!(
                "vector of length {} does not conform to rank {}",
                a.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &NatVec, b: &NatVec) -> Result<NatVec> {
        self.conform(a)?;
        self.conform(b)?;
        a.checked_add(b)
    }

    /// Bilinear extension of the structure constants.
    pub fn mul(&self, a: &NatVec, b: &NatVec) -> Result<NatVec> {
        self.conform(a)?;
        self.conform(b)?;
        let k = self.rank();
        let mut out = vec![0u64; k];
        for i in a.support() {
            for j in b.support() {
                let ab = a.get(i).checked_mul(b.get(j)).ok_or(Error::Overflow)?;
                for h in self.mult[i][j].support() {
                    let term = ab
                        .checked_mul(self.mult[i][j].get(h))
                        .ok_or(Error::Overflow)?;
                    out[h] = out[h].checked_add(term).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(NatVec(out))
    }

    /// Scans associativity on basis triples, the unit law on basis elements and
    /// distinctness of names. Bilinearity makes the basis checks sufficient.
    pub fn validate(&self) -> ValidationReport<SemiringViolation> {
        let mut report = ValidationReport::new();
        let mut seen = HashSet::new();
        for name in &self.basis_names {
            if !seen.insert(name) {
                report.push(SemiringViolation::DuplicateName(name.clone()));
            }
        }
        let k = self.rank();
        for i in 0..k {
            let ei = self.basis_vec(i);
            match (self.mul(&self.unit, &ei), self.mul(&ei, &self.unit)) {
                (Ok(l), Ok(r)) => {
                    if l != ei || r != ei {
                        report.push(SemiringViolation::UnitNotIdentity(i));
                    }
                }
                _ => report.push(SemiringViolation::Overflow(i, i, i)),
            }
        }
        for i in 0..k {
            for j in 0..k {
                for h in 0..k {
                    let left = self.mul(&self.mult[i][j], &self.basis_vec(h));
                    let right = self.mul(&self.basis_vec(i), &self.mult[j][h]);
                    match (left, right) {
                        (Ok(l), Ok(r)) if l == r => {}
                        (Ok(_), Ok(_)) => {
                            report.push(SemiringViolation::MulNotAssociative(i, j, h))
                        }
                        _ => report.push(SemiringViolation::Overflow(i, j, h)),
                    }
                }
            }
        }
        report
    }
}

/// A semiring given by complete Cayley tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemiring {
    element_names: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

fn check_square(name: &str, t: &[Vec<usize>], n: usize) -> Result<()> {
    if t.len() != n {
        return Err(Error::MalformedTable(format!(
            "{name} has {} rows, expected {n}",
            t.len()
        )));
    }
    for (i, row) in t.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!(
                "{name} row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::MalformedTable(format!(
                "{name} row {i} contains index {bad} out of range"
            )));
        }
    }
    Ok(())
}

impl FiniteSemiring {
    pub fn new(
        element_names: Vec<String>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = element_names.len();
        if n == 0 {
            return Err(Error::MalformedTable("no elements".into()));
        }
        check_square("add", &add, n)?;
        check_square("mul", &mul, n)?;
        if zero >= n || one >= n {
            return Err(Error::MalformedTable("zero/one index out of range".into()));
        }
        Ok(Self {
            element_names,
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn size(&self) -> usize {
        self.element_names.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.element_names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn validate(&self) -> ValidationReport<SemiringViolation> {
        use SemiringViolation::*;
        let mut report = ValidationReport::new();
        let mut seen = HashSet::new();
        for name in &self.element_names {
            if !seen.insert(name) {
                report.push(DuplicateName(name.clone()));
            }
        }
        let n = self.size();
        let (a, m) = (&self.add, &self.mul);
        for x in 0..n {
            if a[self.zero][x] != x || a[x][self.zero] != x {
                report.push(ZeroNotAdditiveIdentity(x));
            }
            if m[self.one][x] != x || m[x][self.one] != x {
                report.push(OneNotIdentity(x));
            }
            if m[self.zero][x] != self.zero || m[x][self.zero] != self.zero {
                report.push(ZeroNotAbsorbing(x));
            }
            for y in 0..n {
                if x < y && a[x][y] != a[y][x] {
                    report.push(AddNotCommutative(x, y));
                }
                for z in 0..n {
                    if a[a[x][y]][z] != a[x][a[y][z]] {
                        report.push(AddNotAssociative(x, y, z));
                    }
                    if m[m[x][y]][z] != m[x][m[y][z]] {
                        report.push(MulNotAssociative(x, y, z));
                    }
                    if m[a[x][y]][z] != a[m[x][z]][m[y][z]] {
                        report.push(RightDistributivity(x, y, z));
                    }
                    if m[z][a[x][y]] != a[m[z][x]][m[z][y]] {
                        report.push(LeftDistributivity(z, x, y));
                    }
                }
            }
        }
        report
    }
}

/// One failed axiom instance, with the witnessing element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiringViolation {
    DuplicateName(String),
    AddNotCommutative(usize, usize),
    AddNotAssociative(usize, usize, usize),
    ZeroNotAdditiveIdentity(usize),
    MulNotAssociative(usize, usize, usize),
    OneNotIdentity(usize),
    UnitNotIdentity(usize),
    /// `z(x+y) != zx + zy`, fields `(z, x, y)`.
    LeftDistributivity(usize, usize, usize),
    /// `(x+y)z != xz + yz`, fields `(x, y, z)`.
    RightDistributivity(usize, usize, usize),
    ZeroNotAbsorbing(usize),
    Overflow(usize, usize, usize),
}

impl fmt::Display for SemiringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SemiringViolation::*;
        match self {
            DuplicateName(n) => write!(f, "duplicate element name `{n}`"),
            AddNotCommutative(a, b) => write!(f, "addition not commutative at ({a}, {b})"),
            AddNotAssociative(a, b, c) => {
                write!(f, "addition not associative at ({a}, {b}, {c})")
            }
            ZeroNotAdditiveIdentity(a) => write!(f, "zero is not an additive identity for {a}"),
            MulNotAssociative(a, b, c) => {
                write!(f, "multiplication not associative at ({a}, {b}, {c})")
            }
            OneNotIdentity(a) => write!(f, "one is not a multiplicative identity for {a}"),
            UnitNotIdentity(i) => write!(f, "unit does not act as identity on basis element {i}"),
            LeftDistributivity(z, x, y) => {
                write!(f, "left distributivity fails: {z}({x}+{y})")
            }
            RightDistributivity(x, y, z) => {
                write!(f, "right distributivity fails: ({x}+{y}){z}")
            }
            ZeroNotAbsorbing(a) => write!(f, "zero does not absorb {a}"),
            Overflow(a, b, c) => write!(f, "coefficient overflow while checking ({a}, {b}, {c})"),
        }
    }
}

/// Either kind of semiring. Semimodules hold one of these by reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Semiring {
    Based(BasedSemiring),
    Finite(FiniteSemiring),
}

impl Semiring {
    /// Number of stored actions a semimodule over this semiring carries: one
    /// per basis element, or one per element for a finite semiring.
    pub fn action_count(&self) -> usize {
        match self {
            Semiring::Based(b) => b.rank(),
            Semiring::Finite(f) => f.size(),
        }
    }

    pub fn action_names(&self) -> &[String] {
        match self {
            Semiring::Based(b) => b.basis_names(),
            Semiring::Finite(f) => f.element_names(),
        }
    }

    pub fn action_index(&self, name: &str) -> Option<usize> {
        self.action_names().iter().position(|n| n == name)
    }

    pub fn as_based(&self) -> Option<&BasedSemiring> {
        match self {
            Semiring::Based(b) => Some(b),
            Semiring::Finite(_) => None,
        }
    }

    pub fn as_finite(&self) -> Option<&FiniteSemiring> {
        match self {
            Semiring::Finite(f) => Some(f),
            Semiring::Based(_) => None,
        }
    }

    pub fn validate(&self) -> ValidationReport<SemiringViolation> {
        match self {
            Semiring::Based(b) => b.validate(),
            Semiring::Finite(f) => f.validate(),
        }
    }
}

impl From<BasedSemiring> for Semiring {
    fn from(b: BasedSemiring) -> Self {
        Semiring::Based(b)
    }
}

impl From<FiniteSemiring> for Semiring {
    fn from(f: FiniteSemiring) -> Self {
        Semiring::Finite(f)
    }
}

/// Axiom scan for either representation.
pub fn validate_semiring(s: &Semiring) -> ValidationReport<SemiringViolation> {
    s.validate()
}

/// Isomorphism test for two semirings of the same kind, by backtracking over
/// bijections that fix zero and one (finite case) or the unit (based case).
pub fn semirings_isomorphic(a: &Semiring, b: &Semiring) -> bool {
    match (a, b) {
        (Semiring::Finite(x), Semiring::Finite(y)) => finite_isomorphic(x, y),
        (Semiring::Based(x), Semiring::Based(y)) => based_isomorphic(x, y),
        _ => false,
    }
}

fn finite_isomorphic(a: &FiniteSemiring, b: &FiniteSemiring) -> bool {
    let n = a.size();
    if n != b.size() {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero] = b.zero;
    used[b.zero] = true;
    if a.one != a.zero {
        if b.one == b.zero {
            return false;
        }
        map[a.one] = b.one;
        used[b.one] = true;
    } else if b.one != b.zero {
        return false;
    }
    fn consistent(a: &FiniteSemiring, b: &FiniteSemiring, map: &[usize]) -> bool {
        let n = a.size();
        for x in 0..n {
            if map[x] == usize::MAX {
                continue;
            }
            for y in 0..n {
                if map[y] == usize::MAX {
                    continue;
                }
                let s = a.add[x][y];
                if map[s] != usize::MAX && map[s] != b.add[map[x]][map[y]] {
                    return false;
                }
                let p = a.mul[x][y];
                if map[p] != usize::MAX && map[p] != b.mul[map[x]][map[y]] {
                    return false;
                }
            }
        }
        true
    }
    fn go(a: &FiniteSemiring, b: &FiniteSemiring, map: &mut [usize], used: &mut [bool]) -> bool {
        if !consistent(a, b, map) {
            return false;
        }
        let Some(x) = map.iter().position(|&v| v == usize::MAX) else {
            return true;
        };
        for y in 0..used.len() {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if go(a, b, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
        false
    }
    go(a, b, &mut map, &mut used)
}

fn based_isomorphic(a: &BasedSemiring, b: &BasedSemiring) -> bool {
    let k = a.rank();
    if k != b.rank() {
        return false;
    }
    // The basis is unique, so an isomorphism permutes basis elements.
    let mut perm: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn permute(v: &NatVec, perm: &[usize]) -> Option<NatVec> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.coeffs().iter().enumerate() {
            if c != 0 {
                out[*perm.get(i)?] = c;
            }
        }
        Some(NatVec(out))
    }
    fn go(a: &BasedSemiring, b: &BasedSemiring, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let k = a.rank();
        let i = perm.len();
        if i == k {
            if permute(&a.unit, perm).as_ref() != Some(&b.unit) {
                return false;
            }
            return (0..k).all(|x| {
                (0..k).all(|y| permute(&a.mult[x][y], perm).as_ref() == Some(&b.mult[perm[x]][perm[y]]))
            });
        }
        for t in 0..k {
            if used[t] {
                continue;
            }
            perm.push(t);
            used[t] = true;
            let ok = (0..=i).all(|x| {
                (0..=i).all(|y| {
                    let src = &a.mult[x][y];
                    // Only compare when the whole support is already mapped.
                    if src.support().iter().any(|&h| h > i) {
                        return true;
                    }
                    permute(src, perm).as_ref() == Some(&b.mult[perm[x]][perm[y]])
                })
            });
            if ok && go(a, b, perm, used) {
                return true;
            }
            perm.pop();
            used[t] = false;
        }
        false
    }
    go(a, b, &mut perm, &mut used)
}
