mod common;

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use common::*;
use semirep::cells::cell_decomposition;
use semirep::classify::{
    builtin_catalog, classify_extreme, quotients_up_to_iso, reduced_cell_quotient_forms,
    verify_suite, Kind,
};
use semirep::presets::{kl_dihedral, kl_generator_oracle, DihedralGroup, Letter};
use semirep::semimodule::fixtures::cyclic_module;
use semirep::semimodule::canonical_form_bounded;
use semirep::NatVec;

struct Outcome {
    pass: bool,
    detail: String,
}

fn run(n: usize, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let pass = out.pass && elapsed <= limit;
    let line = format!(
        "ACCEPTANCE [{n}] {title}: {} ({}; {:.2?})\n",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed
    );
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    pass
}

fn kl_table() -> Outcome {
    let r = kl_dihedral(3).unwrap();
    let table: [[&[(usize, u64)]; 6]; 6] = [
        [&[(0, 1)], &[(1, 1)], &[(2, 1)], &[(3, 1)], &[(4, 1)], &[(5, 1)]],
        [&[(1, 1)], &[(1, 2)], &[(3, 1)], &[(3, 2)], &[(1, 1), (5, 1)], &[(5, 2)]],
        [&[(2, 1)], &[(4, 1)], &[(2, 2)], &[(2, 1), (5, 1)], &[(4, 2)], &[(5, 2)]],
        [&[(3, 1)], &[(1, 1), (5, 1)], &[(3, 2)], &[(3, 1), (5, 2)], &[(1, 2), (5, 2)], &[(5, 4)]],
        [&[(4, 1)], &[(4, 2)], &[(2, 1), (5, 1)], &[(2, 2), (5, 2)], &[(4, 1), (5, 2)], &[(5, 4)]],
        [&[(5, 1)], &[(5, 2)], &[(5, 2)], &[(5, 4)], &[(5, 4)], &[(5, 6)]],
    ];
    let mut wrong = 0;
    for a in 0..6 {
        for b in 0..6 {
            let mut c = vec![0; 6];
            for &(i, k) in table[a][b] {
                c[i] = k;
            }
            wrong += usize::from(r.product(a, b) != &NatVec::from_coeffs(c));
        }
    }
    let mut oracle_wrong = 0;
    for n in 3..=8 {
        let r = kl_dihedral(n).unwrap();
        let g = DihedralGroup::new(n).unwrap();
        for w in 0..2 * n {
            let (sw, tw) = kl_generator_oracle(n, w).unwrap();
            oracle_wrong += usize::from(r.product(g.generator(Letter::S), w) != &sw);
            oracle_wrong += usize::from(r.product(g.generator(Letter::T), w) != &tw);
        }
    }
    Outcome {
        pass: wrong == 0 && oracle_wrong == 0,
        detail: format!("{wrong} table mismatches, {oracle_wrong} oracle mismatches"),
    }
}

fn cell_structure() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in 3..=6 {
        let r = kl_dihedral(n).unwrap();
        let d = cell_decomposition(&r);
        let mid = d.two_sided_cell_of(1);
        let ok = d.two_sided_cells.len() == 3
            && d.left_cells_in(mid).len() == 2
            && d.right_cells_in(mid).len() == 2
            && d.two_sided_cells.iter().all(|c| c.idempotent)
            && d.two_sided_cells[mid].strongly_regular == (n == 3);
        pass &= ok;
        notes.push(format!(
            "n={n}: {} cells, regular={}",
            d.two_sided_cells.len(),
            d.two_sided_cells[mid].strongly_regular
        ));
    }
    Outcome {
        pass,
        detail: notes.join(", "),
    }
}

fn suite_outcome(names: &[&str]) -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for name in names {
        let r = verify_suite(name).unwrap();
        pass &= r.pass;
        notes.push(format!(
            "{name}: {}/{}/{} missing {} extra {}",
            r.counts["minimal"],
            r.counts["elementary"],
            r.counts["simple"],
            r.missing.len(),
            r.extra.len()
        ));
    }
    Outcome {
        pass,
        detail: notes.join("; "),
    }
}

fn s3_classification() -> Outcome {
    let out = suite_outcome(&["s3-kl"]);
    let r = verify_suite("s3-kl").unwrap();
    let counts = [r.counts["minimal"], r.counts["elementary"], r.counts["simple"]];
    Outcome {
        pass: out.pass && counts == [6, 6, 3],
        detail: out.detail,
    }
}

fn dihedral_classification() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for n in [4, 5] {
        let name = format!("dihedral:{n}");
        let cat = builtin_catalog(&name).unwrap();
        let tilde = &cat.entry("C~_Ls").unwrap().module;
        let nontrivial = quotients_up_to_iso(tilde, BIG)
            .unwrap()
            .iter()
            .filter(|q| q.is_nontrivial(tilde.size()))
            .count();
        let r = verify_suite(&name).unwrap();
        let counts = [r.counts["minimal"], r.counts["elementary"]];
        pass &= nontrivial == 3 && r.pass && counts == [6, 6];
        notes.push(format!(
            "n={n}: {nontrivial} quotients, {} minimal, {} elementary",
            counts[0], counts[1]
        ));
    }
    Outcome {
        pass,
        detail: notes.join(", "),
    }
}

fn cell_quotients() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for name in ["s3-kl", "dihedral:4", "dihedral:5"] {
        let cat = builtin_catalog(name).unwrap();
        let forms = reduced_cell_quotient_forms(&cat.semiring).unwrap();
        let mut cfg = cat.config.clone();
        cfg.kinds = vec![Kind::Minimal];
        let report = classify_extreme(&cat.semiring, &cfg).unwrap();
        let minimal: BTreeSet<Vec<u8>> = report.catalogs[&Kind::Minimal]
            .entries
            .iter()
            .map(|e| e.canonical.clone())
            .collect();
        pass &= forms == minimal;
        notes.push(format!("{name}: {} vs {}", forms.len(), minimal.len()));
    }
    Outcome {
        pass,
        detail: notes.join(", "),
    }
}

fn boolean_family() -> Outcome {
    let names = ["boolean", "boolean-group:s3", "nat:3", "nat-group:3:s2"];
    let out = suite_outcome(&names);
    let single = names.iter().all(|n| {
        let r = verify_suite(n).unwrap();
        r.counts.values().all(|&c| c == 1)
    });
    Outcome {
        pass: out.pass && single,
        detail: out.detail,
    }
}

fn integer_family() -> Outcome {
    let cyclic = (2..=12usize).all(|n| {
        let z = cyclic_module(n).unwrap();
        let prime = (2..n).all(|d| n % d != 0);
        z.is_minimal() == prime && z.is_elementary() == prime && z.is_simple() == prime
    });
    let out = suite_outcome(&["z-nonneg", "z-s2", "klhat-s2"]);
    let cat = builtin_catalog("klhat-s2").unwrap();
    let report = classify_extreme(&cat.semiring, &cat.config).unwrap();
    let proper: BTreeSet<Vec<u8>> = report
        .catalogs
        .values()
        .flat_map(|c| c.only_proper().entries)
        .map(|e| e.canonical)
        .collect();
    let expected: BTreeSet<Vec<u8>> = ["B0", "B"]
        .iter()
        .map(|n| canonical_form_bounded(&cat.entry(n).unwrap().module, BIG).unwrap())
        .collect();
    Outcome {
        pass: cyclic && out.pass && proper == expected,
        detail: format!("cyclic prime check {cyclic}; {}; proper over kl-hat: {}", out.detail, proper.len()),
    }
}

fn invariant_sweeps() -> Outcome {
    let (_, pool) = s3_pool();
    let schur = schur_violations(&pool);
    let (homs, kernel) = kernel_image_violations(&pool);
    let quotients = quotient_minimality_violations(&pool);
    let annihilation = annihilation_violations(&pool);
    let incomparable = incomparability_violations();
    let (classes, extreme) = extreme_class_violations(&["s3-kl", "dihedral:4", "dihedral:5", "klhat-s2", "z-s2"]);
    let total = schur.len()
        + kernel.len()
        + quotients.len()
        + annihilation.len()
        + incomparable.len()
        + extreme.len();
    for v in schur.iter().chain(&kernel).chain(&quotients).chain(&annihilation).chain(&incomparable).chain(&extreme) {
        println!("  violation: {v}");
    }
    Outcome {
        pass: total == 0 && pool.len() >= 20,
        detail: format!(
            "{} fixtures, {homs} homs, {classes} extreme classes, {total} violations",
            pool.len()
        ),
    }
}

#[test]
fn acceptance() {
    let results = [
        run(1, "KL(S3) table and generator oracle", Duration::from_secs(1), kl_table),
        run(2, "dihedral cell structure", Duration::from_secs(1), cell_structure),
        run(3, "KL(S3) extreme classification", Duration::from_secs(300), s3_classification),
        run(4, "dihedral extreme classification", Duration::from_secs(1200), dihedral_classification),
        run(5, "minimal modules from reduced cell quotients", Duration::from_secs(600), cell_quotients),
        run(6, "Boolean family", Duration::from_secs(120), boolean_family),
        run(7, "integer and S2 families", Duration::from_secs(120), integer_family),
        run(8, "invariant sweeps", Duration::from_secs(600), invariant_sweeps),
    ];
    let failed: Vec<usize> = (0..results.len()).filter(|&i| !results[i]).map(|i| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
