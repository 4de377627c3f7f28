//! Brute-force enumeration of subgroup elements inside a finite box.
//!
//! This is a test oracle, not a decision procedure: it lists every reduced
//! word up to a length bound, every vector up to a sup-norm bound, and keeps
//! the pairs that pass membership.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::ftfa::{Completion, FtfaElement};
use crate::par;
use crate::words::Word;
use crate::zlattice::{zero_vec, AffineCoset, IntVec, Lattice};

pub const DEFAULT_CELL_CAP: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs {cells} cells, above the cap of {cap}")]
    BoundsTooLarge { cells: u128, cap: u128 },
    #[error("subgroups live in different ambient groups")]
    AmbientMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_word_len: usize,
    pub max_vec_norm: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub bounds: Bounds,
    pub elements: BTreeSet<FtfaElement>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The normal closure of some generators, `{w : w with those letters deleted is trivial}`,
/// sitting in `F_n × {0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalClosure {
    pub n: usize,
    pub m: usize,
    pub closed: Vec<i32>,
}

impl Completion for NormalClosure {
    fn ambient(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    fn completion(&self, w: &Word) -> Option<AffineCoset> {
        w.delete_generators(&self.closed)
            .is_identity()
            .then(|| AffineCoset::new(zero_vec(self.m), Lattice::trivial(self.m)))
    }
}

/// Reduced words of length ≤ `len` over `n` generators, by length and then
/// lexicographically with letters ordered `1, -1, 2, -2, …`.
pub fn words_up_to(n: usize, len: usize) -> Vec<Word> {
    let alphabet: Vec<i32> = (1..=n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Word::identity()];
    let mut layer = vec![Vec::<i32>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &a in &alphabet {
                if w.last() == Some(&-a) {
                    continue;
                }
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::from_letters(v.iter().copied())));
        layer = next;
    }
    out
}

/// Vectors of `Z^m` with sup-norm ≤ `norm`, shell by shell, each shell in
/// lexicographic order.
pub fn vectors_in_box(m: usize, norm: u32) -> Vec<IntVec> {
    let n = norm as i64;
    let side = (2 * n + 1) as usize;
    let total = side.pow(m as u32);
    let mut all: Vec<Vec<i64>> = (0..total)
        .map(|mut idx| {
            let mut v = vec![0i64; m];
            for slot in v.iter_mut().rev() {
                *slot = (idx % side) as i64 - n;
                idx /= side;
            }
            v
        })
        .collect();
    all.sort_by_key(|v| (v.iter().map(|x| x.abs()).max().unwrap_or(0), v.clone()));
    all.into_iter()
        .map(|v| v.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Elements within `bounds` lying in every one of `specs`.
pub fn ball_filtered(
    specs: &[&(dyn Completion + Sync)],
    bounds: Bounds,
    cap: u128,
    parallel: bool,
) -> Result<Ball, OracleError> {
    let (n, m) = specs
        .first()
        .map(|s| s.ambient())
        .ok_or(OracleError::AmbientMismatch)?;
    if specs.iter().any(|s| s.ambient() != (n, m)) {
        return Err(OracleError::AmbientMismatch);
    }
    let word_count: u128 = 1
        + (1..=bounds.max_word_len as u32)
            .map(|l| 2 * n as u128 * (2 * n as u128 - 1).pow(l - 1))
            .sum::<u128>();
    let vec_count = (2 * bounds.max_vec_norm as u128 + 1).pow(m as u32);
    let cells = word_count * vec_count;
    if cells > cap {
        return Err(OracleError::BoundsTooLarge { cells, cap });
    }
    let words = words_up_to(n, bounds.max_word_len);
    let vectors = vectors_in_box(m, bounds.max_vec_norm);
    let per_word = par::map(&words, parallel, |w| {
        let Some(cosets) = specs
            .iter()
            .map(|s| s.completion(w))
            .collect::<Option<Vec<_>>>()
        else {
            return Vec::new();
        };
        vectors
            .iter()
            .filter(|v| cosets.iter().all(|c| c.contains(v)))
            .map(|v| FtfaElement::new(w.clone(), v.clone()))
            .collect()
    });
    Ok(Ball {
        bounds,
        elements: per_word.into_iter().flatten().collect(),
    })
}

pub fn ball(spec: &(dyn Completion + Sync), bounds: Bounds) -> Result<Ball, OracleError> {
    ball_filtered(&[spec], bounds, DEFAULT_CELL_CAP, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ftfa::{subgroup_basis, SubgroupBasis};

    fn el(s: &str, v: &[i64]) -> FtfaElement {
        FtfaElement::from_i64(Word::parse(s, 2).unwrap(), v)
    }

    #[test]
    fn word_counts() {
        let ws = words_up_to(2, 3);
        assert_eq!(ws.len(), 1 + 4 + 12 + 36);
        assert_eq!(ws[1], Word::letter(1));
        assert_eq!(ws[2], Word::letter(-1));
    }

    #[test]
    fn vector_shells() {
        let vs = vectors_in_box(2, 1);
        assert_eq!(vs.len(), 9);
        assert_eq!(vs[0], zero_vec(2));
    }

    #[test]
    fn trivial_ball() {
        let t = SubgroupBasis::trivial(2, 1);
        let b = ball(
            &t,
            Bounds {
                max_word_len: 3,
                max_vec_norm: 2,
            },
        )
        .unwrap();
        assert_eq!(b.elements, BTreeSet::from([FtfaElement::identity(1)]));
    }

    #[test]
    fn cyclic_with_lattice() {
        let h = subgroup_basis(2, 1, &[el("x", &[0]), el("x", &[2])]).unwrap();
        let b = ball(
            &h,
            Bounds {
                max_word_len: 2,
                max_vec_norm: 2,
            },
        )
        .unwrap();
        let mut expected = BTreeSet::new();
        for w in ["", "x", "X", "xx", "XX"] {
            for a in [-2, 0, 2] {
                expected.insert(el(w, &[a]));
            }
        }
        assert_eq!(b.elements, expected);
    }

    #[test]
    fn cell_cap() {
        let t = SubgroupBasis::trivial(2, 3);
        let err = ball_filtered(
            &[&t],
            Bounds {
                max_word_len: 8,
                max_vec_norm: 9,
            },
            1000,
            false,
        );
        assert!(matches!(err, Err(OracleError::BoundsTooLarge { .. })));
    }
}
