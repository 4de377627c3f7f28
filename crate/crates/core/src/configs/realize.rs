//! Explicit realizations of configurations.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::spec::{FactorPiece, Realization, SubgroupSpec};
use super::{check_k, mask_of, set_of, ConfigError, Configuration};
use crate::ftfa::{subgroup_basis, FtfaElement, SubgroupBasis};
use crate::words::Word;
use crate::zlattice::{zero_vec, IntVec, Lattice};

fn unit(m: usize, i: usize) -> IntVec {
    let mut v = zero_vec(m);
    v[i] = BigInt::from(1);
    v
}

fn diff(m: usize, i: usize, j: usize) -> IntVec {
    let mut v = unit(m, i);
    v[j] -= 1;
    v
}

/// The family `H_1..H_k` of `F_2 × Z^{k-1}` whose only non-finitely
/// generated intersection is the full one.
pub fn almost_zero_family(k: usize) -> Vec<SubgroupBasis> {
    assert!(k >= 2, "the family needs k ≥ 2");
    let m = k - 1;
    let (x, y) = (Word::letter(1), Word::letter(2));
    let el = |w: &Word, v: IntVec| FtfaElement::new(w.clone(), v);
    let mut out = Vec::with_capacity(k);
    for l in 0..m {
        let mut gens = vec![el(&x, zero_vec(m)), el(&y, zero_vec(m))];
        gens.extend(
            (0..m)
                .filter(|&j| j != l)
                .map(|j| el(&Word::identity(), unit(m, j))),
        );
        out.push(subgroup_basis(2, m, &gens).expect("block generators fit the ambient"));
    }
    let mut gens = vec![el(&x, zero_vec(m)), el(&y, unit(m, 0))];
    gens.extend((1..m).map(|j| el(&Word::identity(), diff(m, j, 0))));
    out.push(subgroup_basis(2, m, &gens).expect("block generators fit the ambient"));
    out
}

/// `b` moved into `F_2 × Z^m`, its coordinates starting at `offset`.
fn embed(b: &SubgroupBasis, m: usize, offset: usize) -> SubgroupBasis {
    let shift = |v: &[BigInt]| {
        let mut out = zero_vec(m);
        out[offset..offset + v.len()].clone_from_slice(v);
        out
    };
    let pairs = b
        .pairs()
        .iter()
        .map(|(w, a)| (w.clone(), shift(a)))
        .collect();
    let rows = b.lattice().basis().rows().map(shift).collect();
    SubgroupBasis::from_parts(2, m, pairs, Lattice::from_generators(rows, m))
        .expect("embedding keeps a basis")
}

/// Realization in `F_2 × Z^m` with `m = Σ_{I in support} (|I| - 1)`.
///
/// Support sets are taken in increasing mask order. A set of size at least
/// two gets the next two unused letters `u_{2b}, u_{2b+1}` and `|I| - 1`
/// fresh coordinates; singletons share out the letters `u_j`, `j < 0`.
pub fn realize_ftfa(c: &Configuration) -> Result<Realization, ConfigError> {
    check_k(c.k())?;
    let k = c.k();
    let support = c.support_masks();
    let m: usize = support.iter().map(|s| s.count_ones() as usize - 1).sum();
    let singletons: Vec<u32> = support
        .iter()
        .copied()
        .filter(|s| s.count_ones() == 1)
        .collect();
    let mut pieces: Vec<Vec<FactorPiece>> = vec![Vec::new(); k];
    let mut block = 0i64;
    let mut next_coord = 0usize;
    let mut families: BTreeMap<usize, Vec<SubgroupBasis>> = BTreeMap::new();
    for &s in &support {
        let members = set_of(s);
        if members.len() == 1 {
            let residue = singletons.iter().position(|&t| t == s).expect("listed") as u32;
            pieces[members[0] - 1].push(FactorPiece::Ray {
                modulus: singletons.len() as u32,
                residue,
            });
            continue;
        }
        let offset = next_coord;
        next_coord += members.len() - 1;
        let letters = vec![2 * block, 2 * block + 1];
        block += 1;
        let family = families
            .entry(members.len())
            .or_insert_with(|| almost_zero_family(members.len()));
        let local = family.iter().map(|b| embed(b, m, offset));
        for (i, basis) in members.iter().zip(local) {
            pieces[i - 1].push(FactorPiece::Finite {
                letters: letters.clone(),
                basis,
            });
        }
    }
    let subgroups = pieces
        .into_iter()
        .map(|p| SubgroupSpec::from_pieces(m, p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| ConfigError::Realization(e.to_string()))?;
    Ok(Realization { m, subgroups })
}

/// Realization inside `F_2` of a Howson configuration.
pub fn realize_free(c: &Configuration) -> Result<Realization, ConfigError> {
    check_k(c.k())?;
    if !c.is_howson() {
        return Err(ConfigError::NotHowson);
    }
    let mut next_block = 0i64;
    let pieces = free_pieces(c, &mut next_block);
    let subgroups = pieces
        .into_iter()
        .map(|p| SubgroupSpec::from_pieces(0, p))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| ConfigError::Realization(e.to_string()))?;
    Ok(Realization { m: 0, subgroups })
}

fn full_piece(letters: &[i64]) -> FactorPiece {
    let gens = [
        FtfaElement::new(Word::letter(1), Vec::new()),
        FtfaElement::new(Word::letter(2), Vec::new()),
    ];
    FactorPiece::Finite {
        letters: letters.to_vec(),
        basis: subgroup_basis(2, 0, &gens).expect("rank-2 generators"),
    }
}

fn closure_piece(letters: &[i64]) -> FactorPiece {
    FactorPiece::NormalClosure {
        letters: letters.to_vec(),
        closed: vec![letters[1]],
    }
}

fn alloc(next_block: &mut i64) -> Vec<i64> {
    let b = *next_block;
    *next_block += 1;
    vec![2 * b, 2 * b + 1]
}

/// Pieces of each subgroup, by induction on the support size.
fn free_pieces(c: &Configuration, next_block: &mut i64) -> Vec<Vec<FactorPiece>> {
    let k = c.k();
    if c.is_zero() {
        return vec![Vec::new(); k];
    }
    let maximal = c.maximal_support();
    if maximal.len() >= 2 {
        let mut out = vec![Vec::new(); k];
        for &top in &maximal {
            let cone = c.cone(top).expect("support sets are nonempty");
            for (acc, p) in out.iter_mut().zip(free_pieces(&cone, next_block)) {
                acc.extend(p);
            }
        }
        return out;
    }
    let top = maximal[0];
    if top != c.full_mask() {
        // indices outside the only maximal set get the trivial subgroup
        let keep = set_of(top);
        let sub = squeeze(c, &keep);
        let inner = free_pieces(&sub, next_block);
        let mut out = vec![Vec::new(); k];
        for (i, p) in keep.into_iter().zip(inner) {
            out[i - 1] = p;
        }
        return out;
    }
    if c.is_one() {
        let letters = alloc(next_block);
        return vec![vec![closure_piece(&letters)]; k];
    }
    let zero_sets = c.masks().filter(|&s| !c.value(s));
    let biggest = zero_sets
        .max_by_key(|s| (s.count_ones(), std::cmp::Reverse(*s)))
        .expect("not every set has value 1");
    let j = (1..=k)
        .find(|&i| biggest & mask_of(&[i]) == 0)
        .expect("zero set is proper");
    let rest = c.restrict(j).expect("k ≥ 2 here");
    let inner = free_pieces(&rest, next_block);
    let letters = alloc(next_block);
    let mut out = Vec::with_capacity(k);
    let mut inner = inner.into_iter();
    for i in 1..=k {
        if i == j {
            out.push(vec![closure_piece(&letters)]);
        } else {
            let mut p = inner.next().expect("one entry per remaining index");
            p.push(full_piece(&letters));
            out.push(p);
        }
    }
    out
}

/// Restriction of `c` to the indices in `keep`, renumbered in order.
fn squeeze(c: &Configuration, keep: &[usize]) -> Configuration {
    let mut cur = c.clone();
    for i in (1..=c.k()).rev() {
        if !keep.contains(&i) {
            cur = cur.restrict(i).expect("index in range");
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::u_word;
    use crate::ftfa::Completion;

    #[test]
    fn worked_example_dimensions() {
        let c =
            Configuration::new(4, &[vec![1], vec![2, 3], vec![1, 3, 4], vec![2, 3, 4]]).unwrap();
        let r = realize_ftfa(&c).unwrap();
        assert_eq!(r.m, 5);
        assert!(!r.subgroups[0].is_finite());
        assert!(r.subgroups[1..].iter().all(SubgroupSpec::is_finite));
        let h1 = &r.subgroups[0];
        assert!(h1.completion(&u_word(-3)).is_some());
        assert!(h1.completion(&u_word(0)).is_none());
    }

    #[test]
    fn zero_realizes_trivially() {
        let r = realize_ftfa(&Configuration::zero(3)).unwrap();
        assert_eq!(r.m, 0);
        for s in &r.subgroups {
            let b = s.as_finite().unwrap();
            assert_eq!(b.free_rank(), 0);
        }
    }

    #[test]
    fn free_realizer_rejects_non_howson() {
        let c = Configuration::new(2, &[vec![1, 2]]).unwrap();
        assert_eq!(realize_free(&c), Err(ConfigError::NotHowson));
    }

    #[test]
    fn free_realizer_strips_unused_indices() {
        let c = Configuration::new(2, &[vec![1]]).unwrap();
        let r = realize_free(&c).unwrap();
        assert!(!r.subgroups[0].is_finite());
        assert_eq!(r.subgroups[1].as_finite().unwrap().free_rank(), 0);
    }
}
