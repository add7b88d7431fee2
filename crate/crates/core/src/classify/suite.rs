//! Regression suites comparing enumerations against the reference catalogs.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{builtin_catalog, classify_extreme, Kind};
use crate::cells::{cell_decomposition, cell_semimodule, reduced_cell_semimodule};
use crate::error::{Error, Result};
use crate::semimodule::{all_congruences, canonical_form_bounded, quotient, Semimodule};
use crate::semiring::Semiring;

/// Suites run by `verify_suite`, as concrete names.
pub fn suite_names() -> Vec<String> {
    let mut out: Vec<String> = [
        "boolean",
        "boolean-group:s2",
        "nat:2",
        "nat-group:1:s2",
        "z-nonneg",
        "z-s2",
        "klhat-s2",
        "group:s2",
        "group:s3",
        "s3-kl",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for n in 3..=6 {
        out.push(format!("dihedral:{n}"));
    }
    out
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub suite: String,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub pass: bool,
    pub counts: BTreeMap<String, usize>,
    pub bound: usize,
}

fn tag(kind: Kind, canon: &[u8]) -> String {
    format!("{}:{}", kind, hex::encode(canon))
}

pub fn verify_suite(name: &str) -> Result<SuiteReport> {
    let cat = builtin_catalog(name).map_err(|e| match e {
        Error::UnknownCatalog(n) => Error::UnknownSuite(n),
        other => other,
    })?;
    let report = classify_extreme(&cat.semiring, &cat.config)?;
    let mut expected = BTreeSet::new();
    let mut computed = BTreeSet::new();
    let mut counts = BTreeMap::new();
    for kind in Kind::ALL {
        for e in cat.expected_entries(kind) {
            expected.insert(tag(kind, &e.canonical));
        }
        let found = report.catalogs.get(&kind).cloned().unwrap_or_default();
        let found = if cat.compare_proper_only {
            found.only_proper()
        } else {
            found
        };
        counts.insert(kind.to_string(), found.len());
        for e in &found.entries {
            computed.insert(tag(kind, &e.canonical));
        }
    }
    let missing: Vec<String> = expected.difference(&computed).cloned().collect();
    let extra: Vec<String> = computed.difference(&expected).cloned().collect();
    let bound = cat
        .config
        .extra_group_orders
        .iter()
        .copied()
        .chain([cat.config.max_carrier_size])
        .max()
        .unwrap();
    Ok(SuiteReport {
        suite: name.to_string(),
        pass: missing.is_empty() && extra.is_empty(),
        expected: expected.into_iter().collect(),
        computed: computed.into_iter().collect(),
        missing,
        extra,
        counts,
        bound,
    })
}

fn non_full_quotient_forms(m: &Semimodule, out: &mut BTreeSet<Vec<u8>>) -> Result<()> {
    let bound = u8::MAX as usize;
    for c in all_congruences(m, bound)? {
        if !c.is_full() {
            out.insert(canonical_form_bounded(&quotient(m, &c)?, bound)?);
        }
    }
    Ok(())
}

fn idempotent_left_cells(r: &Arc<Semiring>) -> Result<Vec<Vec<usize>>> {
    let rb = r.as_based().ok_or(Error::NotBased)?;
    let d = cell_decomposition(rb);
    Ok(d.two_sided_cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.idempotent)
        .flat_map(|(j, _)| d.left_cells_in(j))
        .map(|l| d.left_cells[l].clone())
        .collect())
}

/// Canonical forms of all non-zero quotients of cell semimodules of left cells
/// in idempotent two-sided cells.
pub fn cell_quotient_forms(r: &Arc<Semiring>) -> Result<BTreeSet<Vec<u8>>> {
    let mut out = BTreeSet::new();
    for cell in idempotent_left_cells(r)? {
        non_full_quotient_forms(&cell_semimodule(r, &cell)?, &mut out)?;
    }
    Ok(out)
}

/// Same as [`cell_quotient_forms`] for the reduced cell semimodules.
pub fn reduced_cell_quotient_forms(r: &Arc<Semiring>) -> Result<BTreeSet<Vec<u8>>> {
    let mut out = BTreeSet::new();
    for cell in idempotent_left_cells(r)? {
        non_full_quotient_forms(&reduced_cell_semimodule(r, &cell)?, &mut out)?;
    }
    Ok(out)
}
