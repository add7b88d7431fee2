//! Exhaustive classification of small semimodules up to isomorphism.

mod catalog;
mod search;
mod suite;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use catalog::{builtin_catalog, dihedral_fixtures, s3_kl_fixtures, CATALOG_NAMES};
pub use search::{
    abelian_groups, based_actions, enumerate_monoids, finite_actions, monoid_endomorphisms,
    MonoidClass,
};
pub use suite::{
    cell_quotient_forms, reduced_cell_quotient_forms, suite_names, verify_suite, SuiteReport,
};

use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::semimodule::{
    all_congruences, canonical_form_bounded, quotient, Congruence, Semimodule,
};
use crate::semiring::Semiring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Minimal,
    Elementary,
    Simple,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::Minimal, Kind::Elementary, Kind::Simple];

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Minimal => "minimal",
            Kind::Elementary => "elementary",
            Kind::Simple => "simple",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" => Ok(Kind::Minimal),
            "elementary" => Ok(Kind::Elementary),
            "simple" => Ok(Kind::Simple),
            _ => Err(Error::InvalidParameter(format!("unknown kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_carrier_size: usize,
    pub monoid_class: MonoidClass,
    pub require_proper: bool,
    pub kinds: Vec<Kind>,
    /// Orders of extra abelian-group carriers beyond `max_carrier_size`.
    pub extra_group_orders: Vec<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        Self {
            max_carrier_size: 4,
            monoid_class: MonoidClass::AllCommutative,
            require_proper: false,
            kinds: Kind::ALL.to_vec(),
            extra_group_orders: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub module: Semimodule,
    pub canonical: Vec<u8>,
    pub minimal: bool,
    pub elementary: bool,
    pub simple: bool,
    pub proper: bool,
}

impl CatalogEntry {
    /// Computes the canonical form and the classification flags.
    pub fn new(name: impl Into<String>, module: Semimodule) -> Result<Self> {
        let canonical = canonical_form_bounded(&module, u8::MAX as usize)?;
        let minimal = module.is_minimal();
        let elementary = module.is_elementary();
        Ok(Self {
            name: name.into(),
            proper: module.is_proper(),
            simple: minimal && elementary,
            minimal,
            elementary,
            canonical,
            module,
        })
    }

    pub fn is(&self, kind: Kind) -> bool {
        match kind {
            Kind::Minimal => self.minimal,
            Kind::Elementary => self.elementary,
            Kind::Simple => self.simple,
        }
    }

    pub fn hex(&self) -> String {
        hex::encode(&self.canonical)
    }
}

/// Isomorphism classes, sorted by carrier size and then canonical form.
#[derive(Clone, Debug, Default)]
pub struct IsoClassCatalog {
    pub entries: Vec<CatalogEntry>,
}

impl IsoClassCatalog {
    pub fn from_entries(mut entries: Vec<CatalogEntry>) -> Self {
        entries.sort_by(|a, b| {
            (a.module.size(), &a.canonical).cmp(&(b.module.size(), &b.canonical))
        });
        entries.dedup_by(|a, b| a.canonical == b.canonical);
        Self { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn filter(&self, kind: Kind) -> IsoClassCatalog {
        Self {
            entries: self.entries.iter().filter(|e| e.is(kind)).cloned().collect(),
        }
    }

    pub fn only_proper(&self) -> IsoClassCatalog {
        Self {
            entries: self.entries.iter().filter(|e| e.proper).cloned().collect(),
        }
    }

    pub fn find(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn contains_form(&self, canonical: &[u8]) -> bool {
        self.entries.iter().any(|e| e.canonical == canonical)
    }
}

/// Candidate carriers for a configuration.
pub fn carriers(cfg: &EnumConfig) -> Result<Vec<FinMonoid>> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_carrier_size {
        out.extend(enumerate_monoids(n, cfg.monoid_class)?);
    }
    for &n in &cfg.extra_group_orders {
        if n > cfg.max_carrier_size {
            out.extend(abelian_groups(n)?);
        }
    }
    if cfg.require_proper {
        out.retain(|m| !m.is_group());
    }
    Ok(out)
}

/// All semimodule structures on the given carriers, up to isomorphism.
pub fn enumerate_on_carriers(r: &Arc<Semiring>, carriers: &[FinMonoid]) -> Result<IsoClassCatalog> {
    let found: Vec<(Vec<u8>, Semimodule)> = carriers
        .par_iter()
        .map(|m| {
            let tables = match r.as_ref() {
                Semiring::Based(b) => based_actions(b, m),
                Semiring::Finite(f) => finite_actions(f, m),
            };
            let mut local = BTreeMap::new();
            for actions in tables {
                let module = Semimodule::new(r.clone(), m.clone(), actions)?;
                debug_assert!(module.validate().is_valid());
                let canon = canonical_form_bounded(&module, u8::MAX as usize)?;
                local.entry(canon).or_insert(module);
            }
            Ok(local.into_iter().collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut classes: BTreeMap<(usize, Vec<u8>), ()> = BTreeMap::new();
    for (canon, module) in &found {
        classes.insert((module.size(), canon.clone()), ());
    }
    let entries = classes
        .into_keys()
        .enumerate()
        .map(|(i, (_, canon))| {
            let module = decode_module(r, &canon)?;
            CatalogEntry::new(format!("#{}", i + 1), module)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IsoClassCatalog::from_entries(entries))
}

/// The representative stored in a canonical form.
pub fn decode_module(r: &Arc<Semiring>, canon: &[u8]) -> Result<Semimodule> {
    let monoid = search::decode_monoid(canon);
    let actions = search::decode_actions(canon, r.action_count());
    Semimodule::new(r.clone(), monoid, actions)
}

pub fn enumerate_semimodules(r: &Arc<Semiring>, cfg: &EnumConfig) -> Result<IsoClassCatalog> {
    enumerate_on_carriers(r, &carriers(cfg)?)
}

/// Classification results per kind.
#[derive(Clone, Debug, Default)]
pub struct ExtremeReport {
    pub catalogs: BTreeMap<Kind, IsoClassCatalog>,
    pub notes: Vec<String>,
}

/// Minimal, elementary and simple semimodules within the configured bound.
///
/// The minimal and simple searches use the configured carrier class. The
/// elementary search always runs over all commutative monoids.
pub fn classify_extreme(r: &Arc<Semiring>, cfg: &EnumConfig) -> Result<ExtremeReport> {
    let mut report = ExtremeReport::default();
    let wants = |k| cfg.kinds.contains(&k);
    if wants(Kind::Minimal) || wants(Kind::Simple) {
        let all = enumerate_semimodules(r, cfg)?;
        if cfg.monoid_class == MonoidClass::Semilattice {
            report.notes.push(
                "carriers restricted to semilattices: a minimal proper semimodule over a \
                 finitely generated semiring is additively idempotent"
                    .into(),
            );
            if cfg.require_proper && all.filter(Kind::Minimal).entries.iter().any(|e| !e.module.is_idempotent()) {
                report.notes.push("idempotency check failed for a minimal entry".into());
            }
        }
        for k in [Kind::Minimal, Kind::Simple] {
            if wants(k) {
                report.catalogs.insert(k, all.filter(k));
            }
        }
    }
    if wants(Kind::Elementary) {
        let all = if cfg.monoid_class == MonoidClass::AllCommutative {
            enumerate_semimodules(r, cfg)?
        } else {
            let widened = EnumConfig {
                monoid_class: MonoidClass::AllCommutative,
                ..cfg.clone()
            };
            enumerate_semimodules(r, &widened)?
        };
        report.catalogs.insert(Kind::Elementary, all.filter(Kind::Elementary));
    }
    Ok(report)
}

/// One isomorphism class of quotients together with the congruences giving it.
#[derive(Clone, Debug)]
pub struct QuotientClass {
    pub entry: CatalogEntry,
    pub congruences: Vec<Congruence>,
}

impl QuotientClass {
    /// Neither the module itself nor the zero module.
    pub fn is_nontrivial(&self, original_size: usize) -> bool {
        let n = self.entry.module.size();
        n > 1 && n < original_size
    }
}

/// Quotients of `m` by all congruences, grouped up to isomorphism and sorted
/// by size and canonical form.
pub fn quotients_up_to_iso(m: &Semimodule, bound: usize) -> Result<Vec<QuotientClass>> {
    let mut classes: BTreeMap<(usize, Vec<u8>), QuotientClass> = BTreeMap::new();
    for c in all_congruences(m, bound)? {
        let q = quotient(m, &c)?;
        let entry = CatalogEntry::new(String::new(), q)?;
        let key = (entry.module.size(), entry.canonical.clone());
        classes
            .entry(key)
            .or_insert_with(|| QuotientClass {
                entry,
                congruences: Vec::new(),
            })
            .congruences
            .push(c);
    }
    Ok(classes
        .into_values()
        .enumerate()
        .map(|(i, mut q)| {
            q.entry.name = format!("Q{}", i + 1);
            q
        })
        .collect())
}
