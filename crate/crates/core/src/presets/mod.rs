//! Concrete semirings: Boolean, truncated naturals, group semirings and
//! Kazhdan-Lusztig semirings.

mod dihedral;
mod group;

pub use dihedral::{kl_dihedral, kl_generator_oracle, DihedralGroup, Letter};
pub use group::{cyclic_group, extend_group_action, s2_group, s3_group, trivial_group, GroupTable};

use crate::error::{Error, Result};
use crate::semiring::{BasedSemiring, FiniteSemiring, NatVec, Semiring};

/// Cap on the number of elements of table-based presets.
pub const MAX_FINITE_SEMIRING: usize = 256;

/// The two-element semiring with `1 + 1 = 1`.
pub fn boolean_semiring() -> FiniteSemiring {
    FiniteSemiring::new(
        vec!["0".into(), "1".into()],
        vec![vec![0, 1], vec![1, 1]],
        vec![vec![0, 0], vec![0, 1]],
        0,
        1,
    )
    .unwrap()
}

/// The quotient of the naturals identifying all integers `≥ k` to a single
/// absorbing class `I<k>`. Elements are `0, 1, …, k-1, I<k>` in that order.
pub fn nat_rees(k: usize) -> Result<FiniteSemiring> {
    if k == 0 {
        return Err(Error::InvalidParameter("nat_rees needs k >= 1".into()));
    }
    let names = (0..k)
        .map(|i| i.to_string())
        .chain(std::iter::once(format!("I{k}")))
        .collect();
    let add = (0..=k)
        .map(|a| (0..=k).map(|b| (a + b).min(k)).collect())
        .collect();
    let mul = (0..=k)
        .map(|a| (0..=k).map(|b| (a * b).min(k)).collect())
        .collect();
    FiniteSemiring::new(names, add, mul, 0, 1.min(k))
}

/// The group semiring over the non-negative integers, with the group
/// elements as basis.
pub fn group_semiring(g: &GroupTable) -> BasedSemiring {
    let k = g.order();
    let mult = (0..k)
        .map(|a| (0..k).map(|b| NatVec::basis(k, g.mul(a, b))).collect())
        .collect();
    BasedSemiring::new(
        g.element_names().to_vec(),
        NatVec::basis(k, g.identity()),
        mult,
    )
    .expect("group tables give well-formed structure constants")
}

/// The non-negative integers, as the group semiring of the trivial group.
pub fn z_nonneg() -> BasedSemiring {
    group_semiring(&trivial_group())
}

/// The subsemiring of the group semiring of S2 spanned by `e` and `θ = e + s`,
/// so that `θ² = 2θ`.
pub fn kl_hat_s2() -> BasedSemiring {
    let e = NatVec::from_coeffs(vec![1, 0]);
    let th = NatVec::from_coeffs(vec![0, 1]);
    let two_th = NatVec::from_coeffs(vec![0, 2]);
    BasedSemiring::new(
        vec!["e".into(), "theta".into()],
        e.clone(),
        vec![vec![e, th.clone()], vec![th, two_th]],
    )
    .unwrap()
}

fn subset_name(g: &GroupTable, mask: usize) -> String {
    if mask == 0 {
        return "0".into();
    }
    let parts: Vec<&str> = (0..g.order())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| g.name(i))
        .collect();
    parts.join("+")
}

/// The group semiring over the Boolean semiring: subsets of `G` under union
/// and elementwise product. Element index is the subset bitmask.
pub fn boolean_group_semiring(g: &GroupTable) -> Result<FiniteSemiring> {
    let k = g.order();
    let size = 1usize << k.min(usize::BITS as usize - 1);
    if k >= usize::BITS as usize - 1 || size > MAX_FINITE_SEMIRING {
        return Err(Error::BoundExceeded {
            what: "boolean group semiring",
            size,
            bound: MAX_FINITE_SEMIRING,
        });
    }
    let names = (0..size).map(|m| subset_name(g, m)).collect();
    let add = (0..size).map(|a| (0..size).map(|b| a | b).collect()).collect();
    let mul = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| {
                    let mut out = 0usize;
                    for x in (0..k).filter(|x| a >> x & 1 == 1) {
                        for y in (0..k).filter(|y| b >> y & 1 == 1) {
                            out |= 1 << g.mul(x, y);
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    FiniteSemiring::new(names, add, mul, 0, 1 << g.identity())
}

/// The group semiring over `nat_rees(k)`. The element `Σ c_g g` has index
/// `Σ c_g (k+1)^g`, where `c_g = k` stands for the absorbing class.
pub fn nat_group_semiring(k: usize, g: &GroupTable) -> Result<FiniteSemiring> {
    let base = nat_rees(k)?;
    let b = k + 1;
    let order = g.order();
    let size = (0..order).try_fold(1usize, |acc, _| acc.checked_mul(b));
    let size = match size {
        Some(s) if s <= MAX_FINITE_SEMIRING => s,
        other => {
            return Err(Error::BoundExceeded {
                what: "truncated group semiring",
                size: other.unwrap_or(usize::MAX),
                bound: MAX_FINITE_SEMIRING,
            })
        }
    };
    let digits = |mut x: usize| {
        let mut d = vec![0usize; order];
        for slot in d.iter_mut() {
            *slot = x % b;
            x /= b;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &c| acc * b + c);
    let all: Vec<Vec<usize>> = (0..size).map(digits).collect();
    let names = all
        .iter()
        .map(|d| {
            let terms: Vec<String> = d
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| {
                    if c == 1 {
                        g.name(i).to_string()
                    } else {
                        format!("{}{}", base.name(c), g.name(i))
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    let mut add = vec![vec![0; size]; size];
    let mut mul = vec![vec![0; size]; size];
    for x in 0..size {
        for y in 0..size {
            let s: Vec<usize> = (0..order).map(|i| base.add(all[x][i], all[y][i])).collect();
            add[x][y] = encode(&s);
            let mut p = vec![0usize; order];
            for i in 0..order {
                for j in 0..order {
                    let h = g.mul(i, j);
                    p[h] = base.add(p[h], base.mul(all[x][i], all[y][j]));
                }
            }
            mul[x][y] = encode(&p);
        }
    }
    let mut one = vec![0usize; order];
    one[g.identity()] = base.one();
    FiniteSemiring::new(names, add, mul, 0, encode(&one))
}

/// Parses a group name: `s2`, `s3`, `c<n>` or `d<2n>`.
pub fn parse_group(name: &str) -> Result<GroupTable> {
    let bad = || Error::UnknownPreset(format!("group `{name}`"));
    match name {
        "s2" => Ok(s2_group()),
        "s3" => Ok(s3_group()),
        _ => {
            if let Some(n) = name.strip_prefix('c') {
                let n: usize = n.parse().map_err(|_| bad())?;
                cyclic_group(n)
            } else if let Some(m) = name.strip_prefix('d') {
                let m: usize = m.parse().map_err(|_| bad())?;
                if m % 2 != 0 || m < 4 {
                    return Err(Error::InvalidParameter(format!(
                        "dihedral group order must be even and at least 4, got {m}"
                    )));
                }
                Ok(DihedralGroup::new(m / 2)?.table().clone())
            } else {
                Err(bad())
            }
        }
    }
}

/// Builds a semiring from its preset name.
///
/// Recognised names: `boolean`, `nat:<k>`, `z-nonneg`, `group:<g>`,
/// `boolean-group:<g>`, `nat-group:<k>:<g>`, `kl-dihedral:<n>`, `kl-hat-s2`,
/// where `<g>` is accepted by [`parse_group`].
pub fn preset(name: &str) -> Result<Semiring> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let parse_usize = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    if name == "boolean" {
        return Ok(boolean_semiring().into());
    }
    if name == "kl-hat-s2" {
        return Ok(kl_hat_s2().into());
    }
    if name == "z-nonneg" {
        return Ok(z_nonneg().into());
    }
    if let Some(k) = name.strip_prefix("nat:") {
        return Ok(nat_rees(parse_usize(k)?)?.into());
    }
    if let Some(g) = name.strip_prefix("group:") {
        return Ok(group_semiring(&parse_group(g)?).into());
    }
    if let Some(g) = name.strip_prefix("boolean-group:") {
        return Ok(boolean_group_semiring(&parse_group(g)?)?.into());
    }
    if let Some(rest) = name.strip_prefix("nat-group:") {
        let (k, g) = rest.split_once(':').ok_or_else(unknown)?;
        return Ok(nat_group_semiring(parse_usize(k)?, &parse_group(g)?)?.into());
    }
    if let Some(n) = name.strip_prefix("kl-dihedral:") {
        return Ok(kl_dihedral(parse_usize(n)?)?.into());
    }
    Err(unknown())
}
