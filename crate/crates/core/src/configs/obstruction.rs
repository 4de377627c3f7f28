//! Lower bounds on the abelian rank needed to realize a configuration.
//!
//! A family `I_1..I_r` (r ≥ 2) whose full union has value 1 while every
//! union of `r-1` members has value 0 rules out realizations in
//! `F_n × Z^m` for `m < r-1`. Writing `S` for the full union and
//! `P_j = S ∖ ⋃_{l≠j} I_l`, such families correspond to packings of
//! pairwise disjoint nonempty `P ⊊ S` with `c(S ∖ P) = 0`.

use super::{set_of, Configuration};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    /// No realization exists in `F_n × Z^m` for `m` below this.
    pub bound: usize,
    /// The family attaining the bound, as masks.
    pub witness: Option<Vec<u32>>,
}

impl Obstruction {
    pub fn witness_sets(&self) -> Option<Vec<Vec<usize>>> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|&m| set_of(m)).collect())
    }
}

pub fn obstruction_bound(c: &Configuration) -> Obstruction {
    let mut best = Obstruction {
        bound: 0,
        witness: None,
    };
    for s in c.support_masks() {
        let candidates = minimal_parts(c, s);
        if candidates.len() < 2 || candidates.len() - 1 <= best.bound {
            continue;
        }
        let mut chosen = Vec::new();
        let mut packing = Vec::new();
        max_packing(&candidates, 0, 0, &mut chosen, &mut packing);
        if packing.len() >= 2 && packing.len() - 1 > best.bound {
            let rest = packing.iter().fold(s, |acc, p| acc & !p);
            best = Obstruction {
                bound: packing.len() - 1,
                witness: Some(packing.iter().map(|p| p | rest).collect()),
            };
        }
    }
    best
}

/// Inclusion-minimal nonempty `P ⊊ s` with `c(s ∖ P) = 0`.
fn minimal_parts(c: &Configuration, s: u32) -> Vec<u32> {
    let mut found: Vec<u32> = Vec::new();
    let mut subsets: Vec<u32> = submasks(s).filter(|&p| p != s).collect();
    subsets.sort_by_key(|p| (p.count_ones(), *p));
    for p in subsets {
        if !c.value(s & !p) && !found.iter().any(|&q| q & !p == 0) {
            found.push(p);
        }
    }
    found
}

fn submasks(s: u32) -> impl Iterator<Item = u32> {
    let mut sub = s;
    let mut done = s == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
            return None;
        }
        sub = (sub - 1) & s;
        Some(cur)
    })
}

fn max_packing(cands: &[u32], start: usize, used: u32, chosen: &mut Vec<u32>, best: &mut Vec<u32>) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    let free = cands[start..]
        .iter()
        .fold(0u32, |acc, &p| acc | (p & !used))
        .count_ones() as usize;
    if chosen.len() + free <= best.len() {
        return;
    }
    for i in start..cands.len() {
        let p = cands[i];
        if p & used == 0 {
            chosen.push(p);
            max_packing(cands, i + 1, used | p, chosen, best);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::mask_of;

    #[test]
    fn full_set_needs_k_minus_one() {
        for k in 2..=5 {
            let all: Vec<usize> = (1..=k).collect();
            let c = Configuration::almost_zero(k, &all).unwrap();
            let o = obstruction_bound(&c);
            assert_eq!(o.bound, k - 1);
            let singletons: Vec<u32> = (1..=k).map(|i| mask_of(&[i])).collect();
            assert_eq!(o.witness, Some(singletons));
        }
    }

    #[test]
    fn zero_has_no_obstruction() {
        assert_eq!(
            obstruction_bound(&Configuration::zero(3)),
            Obstruction {
                bound: 0,
                witness: None
            }
        );
    }

    #[test]
    fn one_has_no_obstruction() {
        assert_eq!(obstruction_bound(&Configuration::one(3)).bound, 0);
    }

    #[test]
    fn submask_enumeration() {
        let mut v: Vec<u32> = submasks(0b101).collect();
        v.sort();
        assert_eq!(v, vec![0b001, 0b100, 0b101]);
    }
}
