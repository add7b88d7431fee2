//! Reference catalogs of extreme semimodules for the built-in semirings.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{CatalogEntry, EnumConfig, Kind, MonoidClass};
use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::presets::{self, DihedralGroup, Letter};
use crate::semimodule::fixtures::{
    cyclic_module, kl_hat_boolean_zero, kl_hat_cyclic, s2_cyclic, s3_cyclic, s3_two_dim,
    trivial_boolean,
};
use crate::semimodule::{congruence_generated_by, principal_congruence, quotient, Semimodule};
use crate::semiring::Semiring;

/// Name patterns accepted by [`builtin_catalog`].
pub const CATALOG_NAMES: &[&str] = &[
    "boolean",
    "boolean-group:<g>",
    "nat:<k>",
    "nat-group:<k>:<g>",
    "z-nonneg",
    "z-s2",
    "klhat-s2",
    "group:<g>",
    "s3-kl",
    "dihedral:<n>",
];

/// A reference catalog: the semiring, the named modules, the expected names
/// per kind and the search configuration under which they are expected.
#[derive(Clone, Debug)]
pub struct BuiltinCatalog {
    pub name: String,
    pub semiring: Arc<Semiring>,
    pub entries: Vec<CatalogEntry>,
    pub expected: BTreeMap<Kind, Vec<String>>,
    pub config: EnumConfig,
    /// Only proper classes are compared against the expectation.
    pub compare_proper_only: bool,
}

impl BuiltinCatalog {
    pub fn entry(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn expected_entries(&self, kind: Kind) -> Vec<&CatalogEntry> {
        self.expected
            .get(&kind)
            .map(|names| names.iter().filter_map(|n| self.entry(n)).collect())
            .unwrap_or_default()
    }
}

fn labeled(m: Semimodule, labels: &[&str]) -> Result<Semimodule> {
    m.with_labels(labels.iter().map(|s| s.to_string()).collect())
}

fn all_kinds(names: &[&str]) -> BTreeMap<Kind, Vec<String>> {
    Kind::ALL
        .iter()
        .map(|&k| (k, names.iter().map(|s| s.to_string()).collect()))
        .collect()
}

fn kinds(minimal: &[&str], elementary: &[&str], simple: &[&str]) -> BTreeMap<Kind, Vec<String>> {
    let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
    BTreeMap::from([
        (Kind::Minimal, own(minimal)),
        (Kind::Elementary, own(elementary)),
        (Kind::Simple, own(simple)),
    ])
}

/// Modules over the dihedral Kazhdan–Lusztig semiring `KL(I2(n))`, keyed by
/// name: `C_e`, `C_w0`, `C~_Ls`, `N1`, `N2`, `N3`, `K`, `K1`, `K2`, `K3`.
///
/// The four-element carrier is `{0, x, y, x+y}` with index `0, 1, 2, 3`.
pub fn dihedral_fixtures(r: &Arc<Semiring>, n: usize) -> Result<Vec<(String, Semimodule)>> {
    let g = DihedralGroup::new(n)?;
    let rank = g.order();
    let based = r.as_based().ok_or(Error::NotBased)?;
    if based.rank() != rank {
        return Err(Error::SemiringMismatch);
    }
    let w0 = g.longest();
    let e = 0;
    let boolean = |f: &dyn Fn(usize) -> bool| -> Result<Semimodule> {
        let actions = (0..rank)
            .map(|w| if f(w) { vec![0, 1] } else { vec![0, 0] })
            .collect();
        labeled(
            Semimodule::new_validated(r.clone(), FinMonoid::boolean(), actions)?,
            &["0", "1"],
        )
    };
    let square = FinMonoid::powerset(2);
    let four = ["0", "x", "y", "x+y"];

    let c_e = boolean(&|w| w == e)?;
    let c_w0 = boolean(&|_| true)?;

    // Right descents decide where x and y go.
    let tilde_actions = (0..rank)
        .map(|w| {
            let x = if w == w0 {
                0
            } else if g.starts_with(w, Letter::T) {
                2
            } else {
                1
            };
            let y = if w == w0 {
                0
            } else if g.starts_with(w, Letter::S) {
                1
            } else {
                2
            };
            vec![0, x, y, square.add(x, y)]
        })
        .collect();
    let tilde = labeled(
        Semimodule::new_validated(r.clone(), square.clone(), tilde_actions)?,
        &four,
    )?;
    let n1 = quotient(&tilde, &principal_congruence(&tilde, 3, 1))?;
    let n2 = quotient(&tilde, &principal_congruence(&tilde, 3, 2))?;
    let n3 = quotient(&tilde, &congruence_generated_by(&tilde, &[(3, 1), (3, 2)]))?;

    let k_actions = (0..rank)
        .map(|w| {
            if w == w0 {
                vec![0; 4]
            } else if w == e {
                vec![0, 1, 2, 3]
            } else if g.ends_with(w, Letter::S) {
                vec![0, 3, 0, 3]
            } else {
                vec![0, 0, 3, 3]
            }
        })
        .collect();
    let k = labeled(
        Semimodule::new_validated(r.clone(), square, k_actions)?,
        &four,
    )?;
    let k1 = k.restrict(&[0, 1, 3])?;
    let k2 = k.restrict(&[0, 2, 3])?;
    let k3 = k.restrict(&[0, 3])?;

    Ok([
        ("C_e", c_e),
        ("C_w0", c_w0),
        ("C~_Ls", tilde),
        ("N1", n1),
        ("N2", n2),
        ("N3", n3),
        ("K", k),
        ("K1", k1),
        ("K2", k2),
        ("K3", k3),
    ]
    .into_iter()
    .map(|(s, m)| (s.to_string(), m))
    .collect())
}

/// Modules `M1` to `M9` over `KL(S3)`, given in the basis order
/// `e, s, t, st, ts, w0`. Four-element carriers use the pairs
/// `(0,0), (1,0), (0,1), (1,1)` at indices `0, 1, 2, 3`.
pub fn s3_kl_fixtures(r: &Arc<Semiring>) -> Result<Vec<(String, Semimodule)>> {
    let based = r.as_based().ok_or(Error::NotBased)?;
    if based.rank() != 6 {
        return Err(Error::SemiringMismatch);
    }
    let boolean = |acts: [bool; 6]| -> Result<Semimodule> {
        let actions = acts
            .iter()
            .map(|&a| if a { vec![0, 1] } else { vec![0, 0] })
            .collect();
        labeled(
            Semimodule::new_validated(r.clone(), FinMonoid::boolean(), actions)?,
            &["0", "1"],
        )
    };
    let pairs = ["(0,0)", "(1,0)", "(0,1)", "(1,1)"];
    let square = |acts: [[usize; 4]; 6]| -> Result<Semimodule> {
        labeled(
            Semimodule::new_validated(
                r.clone(),
                FinMonoid::powerset(2),
                acts.iter().map(|a| a.to_vec()).collect(),
            )?,
            &pairs,
        )
    };
    let id = [0, 1, 2, 3];
    let zero = [0; 4];

    let m1 = boolean([true; 6])?;
    let m2 = boolean([true, false, false, false, false, false])?;
    let m3 = boolean([true, true, true, true, true, false])?;
    let to_x = [0, 1, 1, 1];
    let to_y = [0, 2, 2, 2];
    let m4 = square([id, to_x, to_y, to_x, to_y, zero])?;
    let m5 = quotient(&m4, &principal_congruence(&m4, 1, 3))?;
    let m6 = quotient(&m4, &principal_congruence(&m4, 2, 3))?;
    let a = [0, 3, 0, 3];
    let b = [0, 0, 3, 3];
    let m7 = square([id, a, b, b, a, zero])?;
    let m8 = m7.restrict(&[0, 1, 3])?;
    let m9 = m7.restrict(&[0, 2, 3])?;
    Ok([m1, m2, m3, m4, m5, m6, m7, m8, m9]
        .into_iter()
        .enumerate()
        .map(|(i, m)| (format!("M{}", i + 1), m))
        .collect())
}

fn entries(list: Vec<(String, Semimodule)>) -> Result<Vec<CatalogEntry>> {
    list.into_iter()
        .map(|(name, m)| CatalogEntry::new(name, m))
        .collect()
}

fn proper_config(max: usize) -> EnumConfig {
    EnumConfig {
        max_carrier_size: max,
        monoid_class: MonoidClass::AllCommutative,
        require_proper: true,
        ..EnumConfig::default()
    }
}

fn full_config(max: usize, groups: std::ops::RangeInclusive<usize>) -> EnumConfig {
    EnumConfig {
        max_carrier_size: max,
        extra_group_orders: groups.collect(),
        ..EnumConfig::default()
    }
}

/// Trivial-Boolean catalog: the only extreme module is `B` with every nonzero
/// element acting as the identity.
fn trivial_only(name: &str, r: Arc<Semiring>) -> Result<BuiltinCatalog> {
    let b = labeled(trivial_boolean(r.clone())?, &["0", "1"])?;
    Ok(BuiltinCatalog {
        name: name.to_string(),
        semiring: r,
        entries: entries(vec![("B".into(), b)])?,
        expected: all_kinds(&["B"]),
        config: full_config(4, 1..=0),
        compare_proper_only: false,
    })
}

pub fn builtin_catalog(name: &str) -> Result<BuiltinCatalog> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    if name == "boolean"
        || name.starts_with("boolean-group:")
        || name.starts_with("nat:")
        || name.starts_with("nat-group:")
    {
        let r = Arc::new(presets::preset(name).map_err(|_| unknown())?);
        return trivial_only(name, r);
    }
    if name == "z-nonneg" {
        let r = Arc::new(Semiring::Based(presets::z_nonneg()));
        let mut list = vec![("B".to_string(), trivial_boolean(r.clone())?)];
        for p in [2, 3, 5, 7, 11] {
            list.push((format!("Z{p}"), cyclic_module(p)?));
        }
        let names: Vec<String> = list.iter().map(|(n, _)| n.clone()).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        return Ok(BuiltinCatalog {
            name: name.into(),
            semiring: r,
            expected: all_kinds(&names),
            entries: entries(list)?,
            config: full_config(5, 6..=12),
            compare_proper_only: false,
        });
    }
    if name == "z-s2" {
        let r = Arc::new(Semiring::Based(presets::group_semiring(&presets::s2_group())));
        let mut list = vec![("B".to_string(), trivial_boolean(r.clone())?)];
        for p in [2, 3, 5, 7] {
            list.push((format!("Z{p}"), s2_cyclic(p, false)?));
        }
        for p in [3, 5, 7] {
            list.push((format!("Z{p}-twisted"), s2_cyclic(p, true)?));
        }
        let names: Vec<String> = list.iter().map(|(n, _)| n.clone()).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        return Ok(BuiltinCatalog {
            name: name.into(),
            semiring: r,
            expected: all_kinds(&names),
            entries: entries(list)?,
            config: full_config(4, 5..=7),
            compare_proper_only: false,
        });
    }
    if name == "klhat-s2" {
        let r = Arc::new(Semiring::Based(presets::kl_hat_s2()));
        let mut list = vec![
            ("B0".to_string(), kl_hat_boolean_zero()?),
            ("B".to_string(), trivial_boolean(r.clone())?),
        ];
        for p in [2, 3, 5, 7] {
            list.push((format!("Z{p}-theta2"), kl_hat_cyclic(p, false)?));
        }
        for p in [3, 5, 7] {
            list.push((format!("Z{p}-theta0"), kl_hat_cyclic(p, true)?));
        }
        let names: Vec<String> = list.iter().map(|(n, _)| n.clone()).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        return Ok(BuiltinCatalog {
            name: name.into(),
            semiring: r,
            expected: all_kinds(&names),
            entries: entries(list)?,
            config: full_config(4, 5..=7),
            compare_proper_only: false,
        });
    }
    if let Some(g) = name.strip_prefix("group:") {
        let group = presets::parse_group(g).map_err(|_| unknown())?;
        let r = Arc::new(Semiring::Based(presets::group_semiring(&group)));
        let mut list = vec![("B".to_string(), trivial_boolean(r.clone())?)];
        let mut proper_only = false;
        match g {
            "s2" => {
                list.push(("Z2".into(), s2_cyclic(2, false)?));
                list.push(("Z3".into(), s2_cyclic(3, false)?));
                list.push(("Z3-twisted".into(), s2_cyclic(3, true)?));
            }
            "s3" => {
                list.push(("Z2".into(), s3_cyclic(2, false)?));
                list.push(("Z3".into(), s3_cyclic(3, false)?));
                list.push(("Z3-sign".into(), s3_cyclic(3, true)?));
                list.push(("Z2^2".into(), s3_two_dim(2)?));
            }
            _ => proper_only = true,
        }
        let names: Vec<String> = list.iter().map(|(n, _)| n.clone()).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        return Ok(BuiltinCatalog {
            name: name.into(),
            semiring: r,
            expected: all_kinds(&names),
            entries: entries(list)?,
            config: full_config(4, 1..=0),
            compare_proper_only: proper_only,
        });
    }
    if name == "s3-kl" {
        let r = Arc::new(Semiring::Based(presets::kl_dihedral(3)?));
        return Ok(BuiltinCatalog {
            name: name.into(),
            entries: entries(s3_kl_fixtures(&r)?)?,
            semiring: r,
            expected: kinds(
                &["M1", "M2", "M3", "M4", "M5", "M6"],
                &["M1", "M2", "M3", "M7", "M8", "M9"],
                &["M1", "M2", "M3"],
            ),
            config: proper_config(4),
            compare_proper_only: false,
        });
    }
    if let Some(n) = name.strip_prefix("dihedral:") {
        let n: usize = n.parse().map_err(|_| unknown())?;
        let r = Arc::new(Semiring::Based(presets::kl_dihedral(n)?));
        return Ok(BuiltinCatalog {
            name: name.into(),
            entries: entries(dihedral_fixtures(&r, n)?)?,
            semiring: r,
            expected: kinds(
                &["C_e", "C_w0", "C~_Ls", "N1", "N2", "N3"],
                &["C_e", "C_w0", "K", "K1", "K2", "K3"],
                &["C_e", "C_w0", "N3"],
            ),
            config: proper_config(4),
            compare_proper_only: false,
        });
    }
    Err(unknown())
}
