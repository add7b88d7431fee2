#![allow(dead_code)]

use std::sync::Arc;

use semirep::cells::{annihilator_cells, cell_decomposition, cell_semimodule};
use semirep::classify::{builtin_catalog, classify_extreme, EnumConfig, Kind};
use semirep::semimodule::{
    all_congruences, are_isomorphic, homs, kernel_image, quotient, Semimodule,
};
use semirep::{presets, Semiring};

pub const BIG: usize = 255;

/// Every catalog fixture over `KL(S3)` plus its cell semimodules, all sharing
/// one semiring handle.
pub fn s3_pool() -> (Arc<Semiring>, Vec<(String, Semimodule)>) {
    let s3 = builtin_catalog("s3-kl").unwrap();
    let r = s3.semiring.clone();
    let mut pool: Vec<(String, Semimodule)> = s3
        .entries
        .iter()
        .map(|e| (e.name.clone(), e.module.clone()))
        .collect();
    for e in builtin_catalog("dihedral:3").unwrap().entries {
        pool.push((format!("I2(3) {}", e.name), rebind(&e.module, &r)));
    }
    let d = cell_decomposition(r.as_based().unwrap());
    for cell in &d.left_cells {
        pool.push((format!("C{cell:?}"), cell_semimodule(&r, cell).unwrap()));
    }
    (r, pool)
}

fn rebind(m: &Semimodule, r: &Arc<Semiring>) -> Semimodule {
    Semimodule::new(r.clone(), m.monoid().clone(), m.actions().to_vec()).unwrap()
}

/// Nonzero homs out of elementary modules are injective; nonzero homs into
/// minimal modules are surjective.
pub fn schur_violations(pool: &[(String, Semimodule)]) -> Vec<String> {
    let mut out = Vec::new();
    for (a, m) in pool {
        for (b, n) in pool {
            for h in homs(m, n, BIG).unwrap() {
                if h.is_zero(n.zero()) {
                    continue;
                }
                if m.is_elementary() && !h.is_injective(n.size()) {
                    out.push(format!("{a} -> {b}: {:?} not injective", h.map));
                }
                if n.is_minimal() && !h.is_surjective(n.size()) {
                    out.push(format!("{a} -> {b}: {:?} not surjective", h.map));
                }
            }
        }
    }
    out
}

/// The quotient by the kernel of a hom is isomorphic to its image.
pub fn kernel_image_violations(pool: &[(String, Semimodule)]) -> (usize, Vec<String>) {
    let mut out = Vec::new();
    let mut checked = 0;
    for (a, m) in pool {
        for (b, n) in pool {
            for h in homs(m, n, BIG).unwrap() {
                checked += 1;
                let (kernel, image) = kernel_image(&h);
                let ok = kernel.check_on(m).is_ok()
                    && are_isomorphic(&quotient(m, &kernel).unwrap(), &n.restrict(&image).unwrap(), BIG)
                        .unwrap();
                if !ok {
                    out.push(format!("{a} -> {b}: {:?}", h.map));
                }
            }
        }
    }
    (checked, out)
}

/// Nonzero quotients of minimal modules are minimal.
pub fn quotient_minimality_violations(pool: &[(String, Semimodule)]) -> Vec<String> {
    let mut out = Vec::new();
    for (a, m) in pool.iter().filter(|(_, m)| m.is_minimal()) {
        for c in all_congruences(m, BIG).unwrap() {
            if c.is_full() {
                continue;
            }
            if !quotient(m, &c).unwrap().is_minimal() {
                out.push(format!("{a} / {:?}", c.blocks));
            }
        }
    }
    out
}

/// Mixed annihilation of a two-sided cell on idempotent proper fixtures.
pub fn annihilation_violations(pool: &[(String, Semimodule)]) -> Vec<String> {
    pool.iter()
        .filter(|(_, m)| m.is_idempotent() && m.is_proper())
        .filter_map(|(a, m)| annihilator_cells(m).err().map(|e| format!("{a}: {e}")))
        .collect()
}

/// Incomparable left and right cells inside idempotent two-sided cells, for
/// every based preset.
pub fn incomparability_violations() -> Vec<String> {
    let names = [
        "z-nonneg",
        "kl-hat-s2",
        "group:s2",
        "group:s3",
        "group:c5",
        "group:d8",
        "kl-dihedral:3",
        "kl-dihedral:4",
        "kl-dihedral:5",
        "kl-dihedral:6",
        "kl-dihedral:7",
        "kl-dihedral:8",
    ];
    let mut out = Vec::new();
    for name in names {
        let r = presets::preset(name).unwrap();
        let d = cell_decomposition(r.as_based().unwrap());
        for (kind, a, b) in d.comparable_cells_in_idempotent() {
            out.push(format!("{name}: {kind} cells {a} and {b}"));
        }
    }
    out
}

/// Idempotency of minimal proper classes and triviality of the group of units
/// of extreme proper classes, over the enumerated catalogs.
pub fn extreme_class_violations(suites: &[&str]) -> (usize, Vec<String>) {
    let mut out = Vec::new();
    let mut checked = 0;
    for &name in suites {
        let cat = builtin_catalog(name).unwrap();
        let cfg = EnumConfig {
            require_proper: true,
            ..cat.config.clone()
        };
        let report = classify_extreme(&cat.semiring, &cfg).unwrap();
        for (kind, c) in &report.catalogs {
            for e in &c.entries {
                checked += 1;
                if *kind == Kind::Minimal && !e.module.is_idempotent() {
                    out.push(format!("{name} {kind} {}: not idempotent", e.hex()));
                }
                if e.module.invertible_elements() != [e.module.zero()] {
                    out.push(format!("{name} {kind} {}: nonzero invertible", e.hex()));
                }
            }
        }
    }
    (checked, out)
}
