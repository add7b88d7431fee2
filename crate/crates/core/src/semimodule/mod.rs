//! Finite semimodules over a [`Semiring`].
//!
//! Over a based semiring one action is stored per basis element; over a finite
//! semiring one action is stored per element. The carrier is a [`FinMonoid`].

mod canon;
mod congruence;
pub mod fixtures;
mod hom;

use std::fmt;
use std::sync::Arc;

pub(crate) use canon::canonical_tables;
pub use canon::{are_isomorphic, canonical_form, canonical_form_bounded, CANON_BOUND};
pub use congruence::{
    all_congruences, congruence_generated_by, principal_congruence, quotient, Congruence,
};
pub use hom::{direct_sum, homs, is_hom, kernel_image, DirectSum, Hom};

use crate::error::{Error, Result};
use crate::monoid::{FinMonoid, MonoidViolation};
use crate::semiring::{NatVec, Semiring};
use crate::validation::ValidationReport;

/// Default bound on carrier sizes for exhaustive operations.
pub const DEFAULT_BOUND: usize = 12;

#[derive(Clone, Debug)]
pub struct Semimodule {
    semiring: Arc<Semiring>,
    monoid: FinMonoid,
    actions: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Semimodule {
    fn eq(&self, other: &Self) -> bool {
        same_semiring(&self.semiring, &other.semiring)
            && self.monoid == other.monoid
            && self.actions == other.actions
            && self.labels == other.labels
    }
}

impl Eq for Semimodule {}

/// Whether two semiring handles denote the same semiring.
pub fn same_semiring(a: &Arc<Semiring>, b: &Arc<Semiring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Semimodule {
    /// Checks shapes only; the axioms are checked by [`Semimodule::validate`].
    pub fn new(semiring: Arc<Semiring>, monoid: FinMonoid, actions: Vec<Vec<usize>>) -> Result<Self> {
        let k = semiring.action_count();
        if actions.len() != k {
            return Err(Error::InvalidSemimodule(format!(
                "{} action tables given, semiring needs {k}",
                actions.len()
            )));
        }
        let n = monoid.size();
        for (i, a) in actions.iter().enumerate() {
            if a.len() != n {
                return Err(Error::InvalidSemimodule(format!(
                    "action {i} has {} entries, carrier has {n}",
                    a.len()
                )));
            }
            if let Some(&bad) = a.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidSemimodule(format!(
                    "action {i} maps to index {bad} out of range"
                )));
            }
        }
        Ok(Self {
            semiring,
            monoid,
            actions,
            labels: None,
        })
    }

    /// Shape check plus full axiom check.
    pub fn new_validated(
        semiring: Arc<Semiring>,
        monoid: FinMonoid,
        actions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = Self::new(semiring, monoid, actions)?;
        let report = m.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidSemimodule(v.to_string()));
        }
        Ok(m)
    }

    pub fn zero_module(semiring: Arc<Semiring>) -> Self {
        let k = semiring.action_count();
        Self {
            semiring,
            monoid: FinMonoid::trivial(),
            actions: vec![vec![0]; k],
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::InvalidSemimodule(format!(
                "{} labels for a carrier of size {}",
                labels.len(),
                self.size()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, m: usize) -> String {
        match &self.labels {
            Some(l) => l[m].clone(),
            None => m.to_string(),
        }
    }

    pub fn semiring(&self) -> &Arc<Semiring> {
        &self.semiring
    }

    pub fn monoid(&self) -> &FinMonoid {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    pub fn zero(&self) -> usize {
        self.monoid.zero()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.monoid.add(a, b)
    }

    #[inline]
    pub fn act(&self, i: usize, m: usize) -> usize {
        self.actions[i][m]
    }

    pub fn actions(&self) -> &[Vec<usize>] {
        &self.actions
    }

    pub fn action_count(&self) -> usize {
        self.actions.len()
    }

    /// Action of a general element `Σ c_i r_i` of a based semiring.
    pub fn act_vec(&self, r: &NatVec, m: usize) -> Result<usize> {
        if self.semiring.as_based().is_none() {
            return Err(Error::NotBased);
        }
        if r.len() != self.actions.len() {
            return Err(Error::MalformedTable(format!(
                "vector of length {} does not conform to rank {}",
                r.len(),
                self.actions.len()
            )));
        }
        Ok(r.support().into_iter().fold(self.zero(), |acc, i| {
            self.add(acc, self.monoid.times(r.get(i), self.act(i, m)))
        }))
    }

    pub fn validate(&self) -> ValidationReport<SemimoduleViolation> {
        use SemimoduleViolation::*;
        let mut report = ValidationReport::new();
        for v in self.monoid.validate().violations {
            report.push(Monoid(v));
        }
        if !report.is_empty() {
            return report;
        }
        let n = self.size();
        let z = self.zero();
        let names = self.semiring.action_names();
        for (i, a) in self.actions.iter().enumerate() {
            if a[z] != z {
                report.push(ZeroNotFixed(names[i].clone()));
            }
            for x in 0..n {
                for y in x..n {
                    if a[self.add(x, y)] != self.add(a[x], a[y]) {
                        report.push(NotAdditive(names[i].clone(), x, y));
                    }
                }
            }
        }
        match self.semiring.as_ref() {
            Semiring::Based(r) => {
                for m in 0..n {
                    if self.act_vec(r.unit(), m).ok() != Some(m) {
                        report.push(UnitNotIdentity(m));
                    }
                }
                for i in 0..r.rank() {
                    for j in 0..r.rank() {
                        for m in 0..n {
                            let lhs = self.act(i, self.act(j, m));
                            let rhs = self.act_vec(r.product(i, j), m).unwrap_or(usize::MAX);
                            if lhs != rhs {
                                report.push(ProductRelation(names[i].clone(), names[j].clone(), m));
                            }
                        }
                    }
                }
            }
            Semiring::Finite(f) => {
                for m in 0..n {
                    if self.act(f.one(), m) != m {
                        report.push(UnitNotIdentity(m));
                    }
                    if self.act(f.zero(), m) != z {
                        report.push(ZeroActionNotZero(m));
                    }
                }
                for a in 0..f.size() {
                    for b in 0..f.size() {
                        for m in 0..n {
                            if self.act(f.add(a, b), m) != self.add(self.act(a, m), self.act(b, m)) {
                                report.push(SumRelation(names[a].clone(), names[b].clone(), m));
                            }
                            if self.act(f.mul(a, b), m) != self.act(a, self.act(b, m)) {
                                report.push(ProductRelation(names[a].clone(), names[b].clone(), m));
                            }
                        }
                    }
                }
            }
        }
        report
    }

    pub fn invertible_elements(&self) -> Vec<usize> {
        self.monoid.invertibles()
    }

    pub fn is_proper(&self) -> bool {
        self.invertible_elements().len() != self.size()
    }

    /// Least subset containing zero and `seed`, closed under addition and
    /// every action. Returned in increasing index order.
    pub fn generated_subsemimodule(&self, seed: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.size()];
        let mut list = Vec::with_capacity(self.size());
        let push = |x: usize, inside: &mut Vec<bool>, list: &mut Vec<usize>| {
            if !inside[x] {
                inside[x] = true;
                list.push(x);
            }
        };
        push(self.zero(), &mut inside, &mut list);
        for &s in seed {
            push(s, &mut inside, &mut list);
        }
        let mut p = 0;
        while p < list.len() {
            let x = list[p];
            for q in 0..=p {
                let y = list[q];
                push(self.add(x, y), &mut inside, &mut list);
            }
            for a in &self.actions {
                push(a[x], &mut inside, &mut list);
            }
            p += 1;
        }
        list.sort_unstable();
        list
    }

    /// All subsemimodules, sorted by size and then elementwise.
    pub fn all_subsemimodules(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        if self.size() > bound {
            return Err(Error::BoundExceeded {
                what: "all_subsemimodules",
                size: self.size(),
                bound,
            });
        }
        let mut found = std::collections::BTreeSet::new();
        let mut stack = vec![self.generated_subsemimodule(&[])];
        while let Some(sub) = stack.pop() {
            if !found.insert(sub.clone()) {
                continue;
            }
            let mut member = vec![false; self.size()];
            for &x in &sub {
                member[x] = true;
            }
            for m in (0..self.size()).filter(|&m| !member[m]) {
                let mut seed = sub.clone();
                seed.push(m);
                let next = self.generated_subsemimodule(&seed);
                if !found.contains(&next) {
                    stack.push(next);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The subsemimodule on `subset`; element `subset[i]` becomes index `i`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Semimodule> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != subset.len() {
            return Err(Error::InvalidParameter("subset has repeated elements".into()));
        }
        let mut pos = vec![usize::MAX; self.size()];
        for (i, &m) in subset.iter().enumerate() {
            pos[m] = i;
        }
        let monoid = self.monoid.restrict(subset)?;
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let row: Option<Vec<usize>> = subset
                .iter()
                .map(|&m| Some(pos[a[m]]).filter(|&p| p != usize::MAX))
                .collect();
            actions.push(row.ok_or_else(|| {
                Error::InvalidParameter("subset not closed under the action".into())
            })?);
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| subset.iter().map(|&m| l[m].clone()).collect());
        Ok(Semimodule {
            semiring: self.semiring.clone(),
            monoid,
            actions,
            labels,
        })
    }

    /// Renames element `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Semimodule {
        let n = self.size();
        let monoid = self.monoid.relabel(perm);
        let actions = self
            .actions
            .iter()
            .map(|a| {
                let mut out = vec![0; n];
                for m in 0..n {
                    out[perm[m]] = perm[a[m]];
                }
                out
            })
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for m in 0..n {
                out[perm[m]] = l[m].clone();
            }
            out
        });
        Semimodule {
            semiring: self.semiring.clone(),
            monoid,
            actions,
            labels,
        }
    }

    pub fn is_minimal(&self) -> bool {
        let n = self.size();
        n > 1
            && (0..n)
                .filter(|&m| m != self.zero())
                .all(|m| self.generated_subsemimodule(&[m]).len() == n)
    }

    pub fn is_elementary(&self) -> bool {
        let n = self.size();
        if n <= 1 {
            return false;
        }
        (0..n).all(|a| {
            ((a + 1)..n).all(|b| principal_congruence(self, a, b).is_full())
        })
    }

    pub fn is_simple(&self) -> bool {
        self.is_minimal() && self.is_elementary()
    }

    /// Whether every element is additively idempotent.
    pub fn is_idempotent(&self) -> bool {
        self.monoid.is_semilattice()
    }
}

/// One failed semimodule axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemimoduleViolation {
    Monoid(MonoidViolation),
    ZeroNotFixed(String),
    NotAdditive(String, usize, usize),
    UnitNotIdentity(usize),
    ZeroActionNotZero(usize),
    /// `act(a+b)(m) != act(a)(m) + act(b)(m)`.
    SumRelation(String, String, usize),
    /// `act(a·b)(m) != act(a)(act(b)(m))`.
    ProductRelation(String, String, usize),
}

impl fmt::Display for SemimoduleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SemimoduleViolation::*;
        match self {
            Monoid(v) => write!(f, "carrier: {v}"),
            ZeroNotFixed(r) => write!(f, "action of {r} does not fix zero"),
            NotAdditive(r, x, y) => write!(f, "action of {r} is not additive at ({x}, {y})"),
            UnitNotIdentity(m) => write!(f, "unit does not act as identity on {m}"),
            ZeroActionNotZero(m) => write!(f, "zero of the semiring does not send {m} to zero"),
            SumRelation(a, b, m) => write!(f, "sum relation fails for ({a}, {b}) at {m}"),
            ProductRelation(a, b, m) => write!(f, "product relation fails for ({a}, {b}) at {m}"),
        }
    }
}
