//! Root systems of the simple Lie algebras, Chevalley bases, markings of
//! Dynkin diagrams with `α_max(h) = 2`, and the sl2-triple existence decision.
//!
//! Node numbering follows the highest-root coefficient lists
//!
//! | type | highest root            | numbering relative to Bourbaki            |
//! |------|-------------------------|-------------------------------------------|
//! | A_n  | (1, ..., 1)             | same                                      |
//! | B_n  | (1, 2, ..., 2)          | same, `α_n` short                         |
//! | C_n  | (2, ..., 2, 1)          | same, `α_n` long                          |
//! | D_n  | (1, 2, ..., 2, 1, 1)    | same                                      |
//! | G2   | (3, 2)                  | same, `α_1` short                         |
//! | F4   | (2, 4, 3, 2)            | reversed: `α_1, α_2` short                |
//! | E6   | (1, 2, 3, 2, 1, 2)      | chain 1-2-3-4-5, branch node 6 at 3       |
//! | E7   | (1, 2, 3, 4, 3, 2, 2)   | chain 1-...-6, branch node 7 at 4         |
//! | E8   | (2, 3, 4, 5, 6, 4, 2, 3)| chain 1-...-7, branch node 8 at 5         |

mod chevalley;
mod classify;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use chevalley::{chevalley_algebra, ChevalleyIndex};
pub use classify::{
    cartan_element, classify, classify_with, diagram_automorphisms, enumerate_markings, g2_module_info, sl2_exists,
    sl2_exists_in, ClassificationRow, Decision, Marking, Witness,
};

/// Cartan-Killing type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            "F" => Ok(RootType::F),
            "G" => Ok(RootType::G),
            _ => Err(Error::InvalidType(s.to_string())),
        }
    }
}

/// Simple-root data and the positive roots as coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub kind: RootType,
    pub rank: usize,
    /// `cartan[i][j] = α_i(h_j) = 2 (α_i, α_j) / (α_j, α_j)`.
    pub cartan: Vec<Vec<i64>>,
    /// `(α_i, α_j)` with short roots of squared length 2.
    pub gram: Vec<Vec<i64>>,
    /// Ordered by height, then descending lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
}

fn edges_and_lengths(kind: RootType, n: usize) -> Result<(Vec<(usize, usize)>, Vec<i64>), Error> {
    let bad = || Error::InvalidType(format!("{kind}{n}"));
    let chain = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    Ok(match kind {
        RootType::A => {
            if n < 1 {
                return Err(bad());
            }
            (chain(n), vec![2; n])
        }
        RootType::B => {
            if n < 2 {
                return Err(bad());
            }
            let mut l = vec![4; n];
            l[n - 1] = 2;
            (chain(n), l)
        }
        RootType::C => {
            if n < 2 {
                return Err(bad());
            }
            let mut l = vec![2; n];
            l[n - 1] = 4;
            (chain(n), l)
        }
        RootType::D => {
            if n < 4 {
                return Err(bad());
            }
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (e, vec![2; n])
        }
        RootType::G => {
            if n != 2 {
                return Err(bad());
            }
            (vec![(0, 1)], vec![2, 6])
        }
        RootType::F => {
            if n != 4 {
                return Err(bad());
            }
            (chain(4), vec![2, 2, 4, 4])
        }
        RootType::E => match n {
            6 => {
                let mut e = chain(5);
                e.push((2, 5));
                (e, vec![2; 6])
            }
            7 => {
                let mut e = chain(6);
                e.push((3, 6));
                (e, vec![2; 7])
            }
            8 => {
                let mut e = chain(7);
                e.push((4, 7));
                (e, vec![2; 8])
            }
            _ => return Err(bad()),
        },
    })
}

/// Root system of the given type and rank.
pub fn build_root_system(kind: RootType, rank: usize) -> Result<RootSystem, Error> {
    let (edges, lengths) = edges_and_lengths(kind, rank)?;
    let n = rank;
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = lengths[i];
    }
    for &(i, j) in &edges {
        let v = -lengths[i].max(lengths[j]) / 2;
        gram[i][j] = v;
        gram[j][i] = v;
    }
    let cartan: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect()).collect();

    let mut roots: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let mut layer: Vec<Vec<i64>> = roots.clone();
    while !layer.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // Largest r with beta - r α_i a root.
                let mut r = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if index.contains_key(&probe) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !index.contains_key(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        for r in &next {
            index.insert(r.clone(), roots.len());
            roots.push(r.clone());
        }
        layer = next;
    }
    let highest_root = roots.last().cloned().expect("at least one root");
    Ok(RootSystem { kind, rank, cartan, gram, positive_roots: roots, highest_root, index })
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl RootSystem {
    /// Simple roots as coefficient vectors (the unit vectors).
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| unit(self.rank, i)).collect()
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    /// `2 |Φ+| + rank`.
    pub fn algebra_dim(&self) -> usize {
        2 * self.num_positive() + self.rank
    }

    /// `(α, β)` for coefficient vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    /// Position of a positive root.
    pub fn positive_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    /// `α(h_j)` for a coefficient vector `α`.
    pub fn coroot_pairing(&self, a: &[i64], j: usize) -> i64 {
        (0..self.rank).map(|i| a[i] * self.cartan[i][j]).sum()
    }

    /// Height of a root.
    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    /// Type and rank as a short name such as `E6`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }
}
