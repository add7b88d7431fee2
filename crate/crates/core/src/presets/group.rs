use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    element_names: Vec<String>,
    cayley: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupTable {
    pub fn new(element_names: Vec<String>, cayley: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = element_names.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if cayley.len() != n || cayley.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroup("cayley table is not a square table over the elements".into()));
        }
        if identity >= n {
            return Err(Error::InvalidGroup("identity index out of range".into()));
        }
        let names: HashSet<_> = element_names.iter().collect();
        if names.len() != n {
            return Err(Error::InvalidGroup("element names are not distinct".into()));
        }
        for x in 0..n {
            if cayley[identity][x] != x || cayley[x][identity] != x {
                return Err(Error::InvalidGroup(format!("identity law fails at {x}")));
            }
            if !(0..n).any(|y| cayley[x][y] == identity && cayley[y][x] == identity) {
                return Err(Error::InvalidGroup(format!("{x} has no inverse")));
            }
            for y in 0..n {
                for z in 0..n {
                    if cayley[cayley[x][y]][z] != cayley[x][cayley[y][z]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        Ok(Self {
            element_names,
            cayley,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.element_names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.element_names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn cayley(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.cayley[a][b] == self.identity)
            .expect("validated group has inverses")
    }
}

pub fn trivial_group() -> GroupTable {
    GroupTable::new(vec!["e".into()], vec![vec![0]], 0).unwrap()
}

/// Cyclic group of order `n` with elements `e, g, g^2, …`.
pub fn cyclic_group(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group of order 0".into()));
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupTable::new(names, table, 0)
}

pub fn s2_group() -> GroupTable {
    GroupTable::new(
        vec!["e".into(), "s".into()],
        vec![vec![0, 1], vec![1, 0]],
        0,
    )
    .unwrap()
}

/// Permutations of {1,2,3} in cycle notation; the product `στ` applies `τ` first.
pub fn s3_group() -> GroupTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let names = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| idx([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    GroupTable::new(names.iter().map(|s| s.to_string()).collect(), table, 0).unwrap()
}

/// Extends generator actions on a finite set to the whole group by breadth-first
/// search: `act(h·g) = act(h) ∘ act(g)`. Fails if the generators do not
/// generate the group or the maps do not satisfy its relations.
pub fn extend_group_action(
    group: &GroupTable,
    generators: &[(usize, Vec<usize>)],
    set_size: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = group.order();
    let mut acts: Vec<Option<Vec<usize>>> = vec![None; n];
    acts[group.identity()] = Some((0..set_size).collect());
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(g) = queue.pop_front() {
        let ag = acts[g].clone().unwrap();
        for (h, ah) in generators {
            let hg = group.mul(*h, g);
            let composed: Vec<usize> = ag.iter().map(|&m| ah[m]).collect();
            match &acts[hg] {
                Some(existing) if *existing != composed => {
                    return Err(Error::InvalidParameter(format!(
                        "generator maps violate a relation at {}",
                        group.name(hg)
                    )))
                }
                Some(_) => {}
                None => {
                    acts[hg] = Some(composed);
                    queue.push_back(hg);
                }
            }
        }
    }
    acts.into_iter()
        .enumerate()
        .map(|(g, a)| {
            a.ok_or_else(|| {
                Error::InvalidParameter(format!("generators do not reach {}", group.name(g)))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_products() {
        let g = s3_group();
        let a = g.index_of("(12)").unwrap();
        let b = g.index_of("(23)").unwrap();
        // (12)(23) sends 1→2→... applying (23) first: 1→1→2, 2→3→3, 3→2→1.
        assert_eq!(g.name(g.mul(a, b)), "(123)");
        assert_eq!(g.mul(a, a), g.identity());
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn bad_tables_rejected() {
        let r = GroupTable::new(
            vec!["e".into(), "a".into()],
            vec![vec![0, 1], vec![1, 1]],
            0,
        );
        assert!(matches!(r, Err(Error::InvalidGroup(_))));
    }

    #[test]
    fn action_extension_checks_relations() {
        let g = s2_group();
        assert!(extend_group_action(&g, &[(1, vec![1, 0])], 2).is_ok());
        assert!(extend_group_action(&g, &[(1, vec![1, 2, 0])], 3).is_err());
    }
}
