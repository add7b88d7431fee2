//! Cells of a based semiring and the semimodules built from them.
//!
//! For basis elements `r_i, r_j`, `r_i ≤_L r_j` when `r_j` occurs with
//! nonzero coefficient in `r_k r_i` for some basis element `r_k`, closed
//! reflexively and transitively; `≤_R` uses `r_i r_k`, and `≤_J` is generated by
//! both. Cells are the equivalence classes of these preorders.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::FinMonoid;
use crate::semimodule::{Hom, Semimodule};
use crate::semiring::{BasedSemiring, Semiring};

/// The support of every product of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolSupportAlgebra {
    pub rank: usize,
    pub supp_mult: Vec<Vec<Vec<usize>>>,
}

impl BoolSupportAlgebra {
    pub fn supp(&self, i: usize, j: usize) -> &[usize] {
        &self.supp_mult[i][j]
    }
}

pub fn booleanize(r: &BasedSemiring) -> BoolSupportAlgebra {
    let k = r.rank();
    BoolSupportAlgebra {
        rank: k,
        supp_mult: (0..k)
            .map(|i| (0..k).map(|j| r.product(i, j).support()).collect())
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoSidedCell {
    pub members: Vec<usize>,
    pub idempotent: bool,
    pub strongly_regular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HCell {
    pub left: usize,
    pub right: usize,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecomposition {
    pub left_leq: Vec<Vec<bool>>,
    pub right_leq: Vec<Vec<bool>>,
    pub two_sided_leq: Vec<Vec<bool>>,
    pub left_cells: Vec<Vec<usize>>,
    pub right_cells: Vec<Vec<usize>>,
    pub two_sided_cells: Vec<TwoSidedCell>,
    pub h_cells: Vec<HCell>,
}

fn closure(mut rel: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let k = rel.len();
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for m in 0..k {
        for i in 0..k {
            if rel[i][m] {
                for j in 0..k {
                    if rel[m][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
    }
    rel
}

fn classes(leq: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let k = leq.len();
    let mut assigned = vec![false; k];
    let mut out = Vec::new();
    for i in 0..k {
        if assigned[i] {
            continue;
        }
        let class: Vec<usize> = (i..k).filter(|&j| leq[i][j] && leq[j][i]).collect();
        for &j in &class {
            assigned[j] = true;
        }
        out.push(class);
    }
    out
}

fn index_of_class(cells: &[Vec<usize>], i: usize) -> usize {
    cells.iter().position(|c| c.contains(&i)).expect("cells partition the basis")
}

pub fn cell_decomposition(r: &BasedSemiring) -> CellDecomposition {
    let b = booleanize(r);
    let k = b.rank;
    let mut left = vec![vec![false; k]; k];
    let mut right = vec![vec![false; k]; k];
    for i in 0..k {
        for m in 0..k {
            for &j in b.supp(m, i) {
                left[i][j] = true;
            }
            for &j in b.supp(i, m) {
                right[i][j] = true;
            }
        }
    }
    let both: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| left[i][j] || right[i][j]).collect())
        .collect();
    let left_leq = closure(left);
    let right_leq = closure(right);
    let two_sided_leq = closure(both);
    let left_cells = classes(&left_leq);
    let right_cells = classes(&right_leq);
    let j_cells = classes(&two_sided_leq);

    let mut h_cells = Vec::new();
    for (li, l) in left_cells.iter().enumerate() {
        for (ri, rc) in right_cells.iter().enumerate() {
            let members: Vec<usize> = l.iter().copied().filter(|x| rc.contains(x)).collect();
            if !members.is_empty() {
                h_cells.push(HCell {
                    left: li,
                    right: ri,
                    members,
                });
            }
        }
    }
    h_cells.sort_by_key(|h| h.members[0]);

    let two_sided_cells = j_cells
        .into_iter()
        .map(|members| {
            let idempotent = members.iter().any(|&x| {
                members
                    .iter()
                    .any(|&y| b.supp(x, y).iter().any(|z| members.contains(z)))
            });
            let strongly_regular = h_cells
                .iter()
                .filter(|h| members.contains(&h.members[0]))
                .all(|h| h.members.len() == 1);
            TwoSidedCell {
                members,
                idempotent,
                strongly_regular,
            }
        })
        .collect();

    CellDecomposition {
        left_leq,
        right_leq,
        two_sided_leq,
        left_cells,
        right_cells,
        two_sided_cells,
        h_cells,
    }
}

impl CellDecomposition {
    pub fn left_cell_of(&self, i: usize) -> usize {
        index_of_class(&self.left_cells, i)
    }

    pub fn right_cell_of(&self, i: usize) -> usize {
        index_of_class(&self.right_cells, i)
    }

    pub fn two_sided_cell_of(&self, i: usize) -> usize {
        self.two_sided_cells
            .iter()
            .position(|c| c.members.contains(&i))
            .expect("cells partition the basis")
    }

    /// `J ≤_J J'` for two-sided cell indices.
    pub fn two_sided_cell_leq(&self, a: usize, b: usize) -> bool {
        self.two_sided_leq[self.two_sided_cells[a].members[0]][self.two_sided_cells[b].members[0]]
    }

    /// Left cells contained in the given two-sided cell.
    pub fn left_cells_in(&self, j: usize) -> Vec<usize> {
        let members = &self.two_sided_cells[j].members;
        (0..self.left_cells.len())
            .filter(|&l| members.contains(&self.left_cells[l][0]))
            .collect()
    }

    pub fn right_cells_in(&self, j: usize) -> Vec<usize> {
        let members = &self.two_sided_cells[j].members;
        (0..self.right_cells.len())
            .filter(|&r| members.contains(&self.right_cells[r][0]))
            .collect()
    }

    /// H-cells inside a left cell, ordered by least member.
    pub fn h_cells_in_left(&self, l: usize) -> Vec<&HCell> {
        self.h_cells.iter().filter(|h| h.left == l).collect()
    }

    /// Pairs of distinct comparable left (or right) cells inside an
    /// idempotent two-sided cell. Such pairs never occur for the presets.
    pub fn comparable_cells_in_idempotent(&self) -> Vec<(String, usize, usize)> {
        let mut out = Vec::new();
        for (j, cell) in self.two_sided_cells.iter().enumerate() {
            if !cell.idempotent {
                continue;
            }
            for (kind, cells, leq, inside) in [
                ("left", &self.left_cells, &self.left_leq, self.left_cells_in(j)),
                ("right", &self.right_cells, &self.right_leq, self.right_cells_in(j)),
            ] {
                for &a in &inside {
                    for &b in &inside {
                        if a != b && leq[cells[a][0]][cells[b][0]] {
                            out.push((kind.to_string(), a, b));
                        }
                    }
                }
            }
        }
        out
    }
}

fn based(r: &Arc<Semiring>) -> Result<&BasedSemiring> {
    r.as_based().ok_or(Error::NotBased)
}

fn subset_label(names: &[String], items: &[usize], mask: usize) -> String {
    let parts: Vec<&str> = items
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &x)| names[x].as_str())
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

fn check_left_cell(d: &CellDecomposition, cell: &[usize]) -> Result<usize> {
    let mut sorted = cell.to_vec();
    sorted.sort_unstable();
    d.left_cells
        .iter()
        .position(|c| *c == sorted)
        .ok_or_else(|| Error::NotALeftCell(cell.to_vec()))
}

/// Maximum number of elements of a cell for the bitmask carriers.
const MAX_CELL_BITS: usize = 16;

fn check_bits(n: usize) -> Result<()> {
    if n > MAX_CELL_BITS {
        return Err(Error::BoundExceeded {
            what: "cell semimodule",
            size: n,
            bound: MAX_CELL_BITS,
        });
    }
    Ok(())
}

/// Subsets of the left cell under union. Bit `b` of an element stands for the
/// `b`-th member of the cell in increasing basis order; the action of `r_j` on
/// a subset is the union of the supports of `r_j x`, intersected with the cell.
pub fn cell_semimodule(r: &Arc<Semiring>, left_cell: &[usize]) -> Result<Semimodule> {
    let rb = based(r)?;
    let d = cell_decomposition(rb);
    let li = check_left_cell(&d, left_cell)?;
    let cell = &d.left_cells[li];
    check_bits(cell.len())?;
    let b = booleanize(rb);
    let pos = |y: usize| cell.iter().position(|&x| x == y);
    let single: Vec<Vec<usize>> = (0..rb.rank())
        .map(|j| {
            cell.iter()
                .map(|&x| {
                    b.supp(j, x)
                        .iter()
                        .filter_map(|&y| pos(y))
                        .fold(0usize, |acc, p| acc | 1 << p)
                })
                .collect()
        })
        .collect();
    let size = 1usize << cell.len();
    let actions = single
        .iter()
        .map(|img| {
            (0..size)
                .map(|mask| {
                    (0..cell.len())
                        .filter(|&p| mask >> p & 1 == 1)
                        .fold(0, |acc, p| acc | img[p])
                })
                .collect()
        })
        .collect();
    let labels = (0..size).map(|m| subset_label(rb.basis_names(), cell, m)).collect();
    Semimodule::new_validated(r.clone(), FinMonoid::powerset(cell.len()), actions)?.with_labels(labels)
}

/// The reduced cell semimodule: subsets of the set of H-cells in the left cell
/// under union, H-cells ordered by least member. Also returns the collapse map
/// from the cell semimodule, sending a subset of the cell to the H-cells it meets.
pub fn reduced_cell_semimodule_with_collapse(
    r: &Arc<Semiring>,
    left_cell: &[usize],
) -> Result<(Semimodule, Hom)> {
    let rb = based(r)?;
    let d = cell_decomposition(rb);
    let li = check_left_cell(&d, left_cell)?;
    let cell = &d.left_cells[li];
    let j = d.two_sided_cell_of(cell[0]);
    if !d.two_sided_cells[j].idempotent {
        return Err(Error::NilpotentCell(
            d.two_sided_cells[j]
                .members
                .iter()
                .map(|&x| rb.name(x).to_string())
                .collect(),
        ));
    }
    let hs: Vec<&[usize]> = d.h_cells_in_left(li).iter().map(|h| h.members.as_slice()).collect();
    check_bits(hs.len())?;
    check_bits(cell.len())?;
    let h_of = |y: usize| hs.iter().position(|h| h.contains(&y));
    let b = booleanize(rb);
    let single: Vec<Vec<usize>> = (0..rb.rank())
        .map(|jj| {
            hs.iter()
                .map(|h| {
                    h.iter()
                        .flat_map(|&x| b.supp(jj, x).iter())
                        .filter_map(|&y| h_of(y))
                        .fold(0usize, |acc, s| acc | 1 << s)
                })
                .collect()
        })
        .collect();
    let size = 1usize << hs.len();
    let actions = single
        .iter()
        .map(|img| {
            (0..size)
                .map(|mask| {
                    (0..hs.len())
                        .filter(|&s| mask >> s & 1 == 1)
                        .fold(0, |acc, s| acc | img[s])
                })
                .collect()
        })
        .collect();
    let reps: Vec<usize> = hs.iter().map(|h| h[0]).collect();
    let labels = (0..size)
        .map(|m| {
            let l = subset_label(rb.basis_names(), &reps, m);
            if m == 0 {
                l
            } else {
                l.split('+').map(|s| format!("H({s})")).collect::<Vec<_>>().join("+")
            }
        })
        .collect();
    let module = Semimodule::new_validated(r.clone(), FinMonoid::powerset(hs.len()), actions)?
        .with_labels(labels)?;
    let collapse = Hom {
        map: (0..1usize << cell.len())
            .map(|mask| {
                (0..cell.len())
                    .filter(|&p| mask >> p & 1 == 1)
                    .filter_map(|p| h_of(cell[p]))
                    .fold(0, |acc, s| acc | 1 << s)
            })
            .collect(),
    };
    Ok((module, collapse))
}

pub fn reduced_cell_semimodule(r: &Arc<Semiring>, left_cell: &[usize]) -> Result<Semimodule> {
    reduced_cell_semimodule_with_collapse(r, left_cell).map(|(m, _)| m)
}

fn annihilates(m: &Semimodule, i: usize) -> bool {
    m.actions()[i].iter().all(|&y| y == m.zero())
}

/// The unique maximal two-sided cell whose elements do not annihilate a
/// minimal proper semimodule. Returns the cell's index in the decomposition.
pub fn apex(m: &Semimodule) -> Result<usize> {
    let rb = based(m.semiring())?;
    if !m.is_proper() || !m.is_minimal() {
        return Err(Error::Precondition(
            "apex is defined for minimal proper semimodules".into(),
        ));
    }
    let d = cell_decomposition(rb);
    let alive: Vec<usize> = (0..d.two_sided_cells.len())
        .filter(|&j| !d.two_sided_cells[j].members.iter().all(|&i| annihilates(m, i)))
        .collect();
    if alive.is_empty() {
        return Err(Error::AllAnnihilated);
    }
    let maximal: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&a| {
            !alive
                .iter()
                .any(|&b| b != a && d.two_sided_cell_leq(a, b))
        })
        .collect();
    if maximal.len() != 1 {
        return Err(Error::ApexNotUnique(maximal));
    }
    let j = maximal[0];
    if !d.two_sided_cells[j].idempotent {
        return Err(Error::ApexNotIdempotent(
            d.two_sided_cells[j]
                .members
                .iter()
                .map(|&x| rb.name(x).to_string())
                .collect(),
        ));
    }
    Ok(j)
}

/// For each two-sided cell, whether all of its elements act as zero.
/// Requires every element of the carrier to be additively idempotent.
pub fn annihilator_cells(m: &Semimodule) -> Result<Vec<bool>> {
    let rb = based(m.semiring())?;
    if !m.is_idempotent() {
        return Err(Error::Precondition(
            "annihilator cells need an additively idempotent carrier".into(),
        ));
    }
    let d = cell_decomposition(rb);
    d.two_sided_cells
        .iter()
        .map(|c| {
            let count = c.members.iter().filter(|&&i| annihilates(m, i)).count();
            if count == 0 {
                Ok(false)
            } else if count == c.members.len() {
                Ok(true)
            } else {
                Err(Error::MixedAnnihilation(
                    c.members.iter().map(|&x| rb.name(x).to_string()).collect(),
                ))
            }
        })
        .collect()
}
