use semirep::cells::cell_decomposition;
use semirep::presets::{kl_dihedral, kl_generator_oracle, DihedralGroup, Letter};
use semirep::{BasedSemiring, NatVec};

/// Parses sums such as `st+2w0` over the basis names of `r`.
fn vec_of(r: &BasedSemiring, text: &str) -> NatVec {
    let mut c = vec![0u64; r.rank()];
    for term in text.split('+') {
        let split = term.find(|ch: char| !ch.is_ascii_digit()).unwrap();
        let (k, name) = term.split_at(split);
        let k = if k.is_empty() { 1 } else { k.parse().unwrap() };
        c[r.index_of(name).unwrap_or_else(|| panic!("no basis element {name}"))] += k;
    }
    NatVec::from_coeffs(c)
}

const S3_TABLE: [[&str; 6]; 6] = [
    ["e", "s", "t", "st", "ts", "w0"],
    ["s", "2s", "st", "2st", "s+w0", "2w0"],
    ["t", "ts", "2t", "t+w0", "2ts", "2w0"],
    ["st", "s+w0", "2st", "st+2w0", "2s+2w0", "4w0"],
    ["ts", "2ts", "t+w0", "2t+2w0", "ts+2w0", "4w0"],
    ["w0", "2w0", "2w0", "4w0", "4w0", "6w0"],
];

#[test]
fn s3_multiplication_table() {
    let r = kl_dihedral(3).unwrap();
    assert_eq!(r.basis_names(), ["e", "s", "t", "st", "ts", "w0"]);
    for (a, row) in S3_TABLE.iter().enumerate() {
        for (b, cell) in row.iter().enumerate() {
            assert_eq!(r.product(a, b), &vec_of(&r, cell), "{} * {}", r.name(a), r.name(b));
        }
    }
    assert!(r.validate().is_valid());
}

#[test]
fn generator_products_match_case_formulas() {
    for n in 3..=8 {
        let r = kl_dihedral(n).unwrap();
        let g = DihedralGroup::new(n).unwrap();
        let s = g.generator(Letter::S);
        let t = g.generator(Letter::T);
        for w in 0..2 * n {
            let (sw, tw) = kl_generator_oracle(n, w).unwrap();
            assert_eq!(r.product(s, w), &sw, "n={n} s*{}", g.name(w));
            assert_eq!(r.product(t, w), &tw, "n={n} t*{}", g.name(w));
        }
    }
}

#[test]
fn case_formula_examples() {
    let r = kl_dihedral(4).unwrap();
    let (_, t_st) = kl_generator_oracle(4, r.index_of("st").unwrap()).unwrap();
    assert_eq!(t_st, vec_of(&r, "t+tst"));
    let (s_ts, _) = kl_generator_oracle(4, r.index_of("ts").unwrap()).unwrap();
    assert_eq!(s_ts, vec_of(&r, "s+sts"));
}

#[test]
fn longest_element_is_a_quasi_idempotent() {
    for n in 3..=8 {
        let r = kl_dihedral(n).unwrap();
        let w0 = 2 * n - 1;
        let mut expected = vec![0u64; 2 * n];
        expected[w0] = 2 * n as u64;
        assert_eq!(r.product(w0, w0), &NatVec::from_coeffs(expected));
    }
}

#[test]
fn three_two_sided_cells() {
    for n in 3..=6 {
        let r = kl_dihedral(n).unwrap();
        let d = cell_decomposition(&r);
        assert_eq!(d.two_sided_cells.len(), 3, "n={n}");
        let e = d.two_sided_cell_of(0);
        let w0 = d.two_sided_cell_of(2 * n - 1);
        let mid = (0..3).find(|&j| j != e && j != w0).unwrap();
        assert_eq!(d.two_sided_cells[mid].members.len(), 2 * n - 2);
        assert_eq!(d.left_cells_in(mid).len(), 2);
        assert_eq!(d.right_cells_in(mid).len(), 2);
        assert!(d.two_sided_cells.iter().all(|c| c.idempotent));
        assert_eq!(d.two_sided_cells[mid].strongly_regular, n == 3, "n={n}");
        assert!(d.two_sided_cell_leq(e, mid) && d.two_sided_cell_leq(mid, w0));
        assert!(d.comparable_cells_in_idempotent().is_empty());
    }
}

#[test]
fn h_cell_of_s_for_four() {
    let r = kl_dihedral(4).unwrap();
    let d = cell_decomposition(&r);
    let s = r.index_of("s").unwrap();
    let h = d
        .h_cells
        .iter()
        .find(|h| h.members.contains(&s))
        .unwrap();
    let names: Vec<&str> = h.members.iter().map(|&i| r.name(i)).collect();
    assert_eq!(names, ["s", "sts"]);
}

#[test]
fn left_cells_of_s3_by_last_letter() {
    let r = kl_dihedral(3).unwrap();
    let d = cell_decomposition(&r);
    let named: Vec<Vec<&str>> = d
        .left_cells
        .iter()
        .map(|c| c.iter().map(|&i| r.name(i)).collect())
        .collect();
    assert_eq!(named, [vec!["e"], vec!["s", "ts"], vec!["t", "st"], vec!["w0"]]);
}
