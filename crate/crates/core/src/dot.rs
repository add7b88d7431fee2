//! Graphviz output.

use std::fmt::Write;

use crate::cells::CellDecomposition;
use crate::error::{Error, Result};
use crate::semimodule::Semimodule;
use crate::semiring::BasedSemiring;

const STYLES: [&str; 4] = ["dashed", "dotted", "bold", "tapered"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Actions drawn by default: `s` and `t` when the semiring has them, otherwise
/// the first two actions other than the identity.
pub fn default_generators(m: &Semimodule) -> Vec<usize> {
    let s = m.semiring();
    if let (Some(a), Some(b)) = (s.action_index("s"), s.action_index("t")) {
        return vec![a, b];
    }
    let id: Vec<usize> = (0..m.size()).collect();
    (0..m.action_count())
        .filter(|&i| m.actions()[i] != id)
        .take(2)
        .collect()
}

/// Hasse diagram of the natural order `m ≤ n` iff `m + n = n` as solid edges,
/// with one arrow family per selected action.
pub fn export_dot(m: &Semimodule, generators: &[usize]) -> Result<String> {
    if !m.is_idempotent() {
        return Err(Error::Precondition(
            "the carrier is not a semilattice".into(),
        ));
    }
    if generators.len() > STYLES.len() {
        return Err(Error::InvalidParameter(format!(
            "at most {} generators can be drawn",
            STYLES.len()
        )));
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= m.action_count()) {
        return Err(Error::InvalidParameter(format!("no action with index {g}")));
    }
    let n = m.size();
    let mut out = String::from("graph semimodule {\n");
    for x in 0..n {
        let _ = writeln!(out, "  n{x} [label={}];", quote(&m.label(x)));
    }
    for (a, b) in hasse_edges(m)? {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    let names = m.semiring().action_names();
    for (k, &g) in generators.iter().enumerate() {
        for x in 0..n {
            let _ = writeln!(
                out,
                "  n{x} -- n{} [dir=forward, style={}, label={}];",
                m.act(g, x),
                STYLES[k],
                quote(&names[g])
            );
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// The two-sided order on cells as a directed graph, lower cells pointing to
/// the cells covering them.
pub fn cells_dot(r: &BasedSemiring, d: &CellDecomposition) -> String {
    let cells = &d.two_sided_cells;
    let mut out = String::from("digraph cells {\n");
    for (j, c) in cells.iter().enumerate() {
        let members: Vec<&str> = c.members.iter().map(|&i| r.name(i)).collect();
        let shape = if c.idempotent { "box" } else { "ellipse" };
        let _ = writeln!(
            out,
            "  J{j} [label={}, shape={shape}];",
            quote(&members.join(", "))
        );
    }
    let k = cells.len();
    let lt = |a: usize, b: usize| a != b && d.two_sided_cell_leq(a, b);
    for a in 0..k {
        for b in 0..k {
            if lt(a, b) && !(0..k).any(|c| lt(a, c) && lt(c, b)) {
                let _ = writeln!(out, "  J{a} -> J{b};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse edges of the natural order, as pairs `(smaller, larger)`.
pub fn hasse_edges(m: &Semimodule) -> Result<Vec<(usize, usize)>> {
    if !m.is_idempotent() {
        return Err(Error::Precondition("the carrier is not a semilattice".into()));
    }
    let n = m.size();
    let leq = |a: usize, b: usize| m.add(a, b) == b;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(a, b) && !(0..n).any(|c| c != a && c != b && leq(a, c) && leq(c, b)) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}
