//! Dihedral groups as Coxeter groups of type I₂(n) and their Kazhdan-Lusztig
//! semirings.
//!
//! Elements are indexed `e, s, t, st, ts, sts, tst, …, w0`: index 0 is the
//! identity, index `2n-1` the longest element, and for `0 < ℓ < n` the two
//! elements of length `ℓ` sit at `2ℓ-1` (starting with `s`) and `2ℓ`
//! (starting with `t`).

use crate::error::{Error, Result};
use crate::semiring::{BasedSemiring, NatVec};

use super::group::GroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    S,
    T,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::S => Letter::T,
            Letter::T => Letter::S,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::S => 's',
            Letter::T => 't',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralGroup {
    n: usize,
    table: GroupTable,
}

impl DihedralGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!(
                "dihedral group needs n >= 2, got {n}"
            )));
        }
        let order = 2 * n;
        let names = (0..order).map(|i| element_name(n, i)).collect();
        let mut cayley = vec![vec![0; order]; order];
        for x in 0..order {
            for y in 0..order {
                let mut acc = y;
                for &l in letters(n, x).iter().rev() {
                    acc = left_mul(n, l, acc);
                }
                cayley[x][y] = acc;
            }
        }
        let table = GroupTable::new(names, cayley, 0)?;
        Ok(Self { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        2 * self.n
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn name(&self, w: usize) -> &str {
        self.table.name(w)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.table.index_of(name)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn length(&self, w: usize) -> usize {
        length(self.n, w)
    }

    pub fn longest(&self) -> usize {
        2 * self.n - 1
    }

    pub fn generator(&self, l: Letter) -> usize {
        index(self.n, 1, l)
    }

    /// Whether some reduced expression of `w` begins with `l`.
    pub fn starts_with(&self, w: usize, l: Letter) -> bool {
        starts_with(self.n, w, l)
    }

    /// Whether some reduced expression of `w` ends with `l`.
    pub fn ends_with(&self, w: usize, l: Letter) -> bool {
        let len = self.length(w);
        if len == 0 {
            return false;
        }
        if len == self.n {
            return true;
        }
        let first = first_letter(self.n, w);
        let last = if len % 2 == 1 { first } else { first.other() };
        last == l
    }

    /// The reduced word of `w`; for the longest element, the one starting with `s`.
    pub fn letters(&self, w: usize) -> Vec<Letter> {
        letters(self.n, w)
    }
}

fn length(n: usize, w: usize) -> usize {
    if w == 0 {
        0
    } else if w == 2 * n - 1 {
        n
    } else {
        (w + 1) / 2
    }
}

fn first_letter(n: usize, w: usize) -> Letter {
    if w == 2 * n - 1 || w % 2 == 1 {
        Letter::S
    } else {
        Letter::T
    }
}

fn starts_with(n: usize, w: usize, l: Letter) -> bool {
    match length(n, w) {
        0 => false,
        len if len == n => true,
        _ => first_letter(n, w) == l,
    }
}

fn index(n: usize, len: usize, first: Letter) -> usize {
    if len == 0 {
        0
    } else if len == n {
        2 * n - 1
    } else {
        2 * len - 1 + usize::from(first == Letter::T)
    }
}

fn letters(n: usize, w: usize) -> Vec<Letter> {
    let len = length(n, w);
    let mut l = first_letter(n, w);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(l);
        l = l.other();
    }
    out
}

fn element_name(n: usize, w: usize) -> String {
    match length(n, w) {
        0 => "e".into(),
        len if len == n => "w0".into(),
        _ => letters(n, w).iter().map(|l| l.as_char()).collect(),
    }
}

fn left_mul(n: usize, g: Letter, w: usize) -> usize {
    let len = length(n, w);
    if len == 0 {
        return index(n, 1, g);
    }
    if len == n {
        return index(n, n - 1, g.other());
    }
    if first_letter(n, w) == g {
        index(n, len - 1, g.other())
    } else {
        index(n, len + 1, g)
    }
}

/// The Kazhdan-Lusztig semiring of the dihedral group of order `2n`: the
/// subsemiring of the integral group ring spanned by `w̲ = Σ_{x ⪯ w} x`.
pub fn kl_dihedral(n: usize) -> Result<BasedSemiring> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "kl-dihedral needs n >= 3, got {n}"
        )));
    }
    let group = DihedralGroup::new(n)?;
    let k = group.order();
    let kl: Vec<Vec<usize>> = (0..k)
        .map(|w| {
            (0..k)
                .filter(|&x| x == w || group.length(x) < group.length(w))
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&w| std::cmp::Reverse(group.length(w)));

    let names: Vec<String> = (0..k).map(|w| group.name(w).to_string()).collect();
    let mut mult = vec![vec![NatVec::zero(k); k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut v = vec![0i128; k];
            for &x in &kl[a] {
                for &y in &kl[b] {
                    v[group.mul(x, y)] += 1;
                }
            }
            let mut coeffs = vec![0u64; k];
            for &w in &order {
                let c = v[w];
                if c < 0 {
                    return Err(Error::NegativeCoefficient {
                        row: names[a].clone(),
                        col: names[b].clone(),
                        basis: names[w].clone(),
                        value: c,
                    });
                }
                if c == 0 {
                    continue;
                }
                for &x in &kl[w] {
                    v[x] -= c;
                }
                coeffs[w] = u64::try_from(c).map_err(|_| Error::Overflow)?;
            }
            debug_assert!(v.iter().all(|&c| c == 0));
            mult[a][b] = NatVec::from_coeffs(coeffs);
        }
    }
    BasedSemiring::new(names, NatVec::basis(k, 0), mult)
}

/// `s̲·w̲` and `t̲·w̲` in the Kazhdan-Lusztig basis, read off the case formulas
/// for generator products without any group-ring arithmetic.
pub fn kl_generator_oracle(n: usize, w: usize) -> Result<(NatVec, NatVec)> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "kl-dihedral needs n >= 3, got {n}"
        )));
    }
    if w >= 2 * n {
        return Err(Error::InvalidParameter(format!(
            "element index {w} out of range for order {}",
            2 * n
        )));
    }
    let k = 2 * n;
    let len = length(n, w);
    let product = |g: Letter| {
        let mut v = vec![0u64; k];
        if len == 0 || (len == 1 && !starts_with(n, w, g)) {
            // w ∈ {e, other generator}: g̲·w̲ is the KL element of gw.
            v[index(n, len + 1, g)] += 1;
        } else if starts_with(n, w, g) {
            v[w] += 2;
        } else {
            v[index(n, len + 1, g)] += 1;
            v[index(n, len - 1, g)] += 1;
        }
        NatVec::from_coeffs(v)
    };
    Ok((product(Letter::S), product(Letter::T)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_names_and_lengths() {
        let d = DihedralGroup::new(4).unwrap();
        let names: Vec<_> = (0..8).map(|w| d.name(w).to_string()).collect();
        assert_eq!(names, ["e", "s", "t", "st", "ts", "sts", "tst", "w0"]);
        assert_eq!(d.length(d.longest()), 4);
    }

    #[test]
    fn coxeter_relations() {
        for n in 2..=9 {
            let d = DihedralGroup::new(n).unwrap();
            let s = d.generator(Letter::S);
            let t = d.generator(Letter::T);
            assert_eq!(d.mul(s, s), 0);
            assert_eq!(d.mul(t, t), 0);
            let st = d.mul(s, t);
            let mut p = 0;
            for _ in 0..n {
                p = d.mul(st, p);
            }
            assert_eq!(p, 0);
            let mut q = 0;
            for i in 1..n {
                q = d.mul(st, q);
                assert_ne!(q, 0, "(st)^{i} = e for n = {n}");
            }
            for w in 0..2 * n {
                let diff = d.length(d.mul(s, w)) as i64 - d.length(w) as i64;
                assert_eq!(diff.abs(), 1);
            }
        }
    }

    #[test]
    fn oracle_spot_checks() {
        // n = 4, w = st: t̲·st̲ = t̲ + tst̲.
        let d = DihedralGroup::new(4).unwrap();
        let st = d.index_of("st").unwrap();
        let (_, t_st) = kl_generator_oracle(4, st).unwrap();
        let mut want = vec![0; 8];
        want[d.index_of("t").unwrap()] = 1;
        want[d.index_of("tst").unwrap()] = 1;
        assert_eq!(t_st.coeffs(), want.as_slice());
        // n = 4, w = ts: s̲·ts̲ = s̲ + sts̲.
        let ts = d.index_of("ts").unwrap();
        let (s_ts, _) = kl_generator_oracle(4, ts).unwrap();
        let mut want = vec![0; 8];
        want[d.index_of("s").unwrap()] = 1;
        want[d.index_of("sts").unwrap()] = 1;
        assert_eq!(s_ts.coeffs(), want.as_slice());
    }
}
