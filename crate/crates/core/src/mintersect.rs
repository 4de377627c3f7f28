//! Intersections of several finitely generated subgroups of `F_n × Z^m`.
//!
//! With `v_1..v_r` a free basis of `∩ H_iπ`, a word `w` over the `v_j` lifts
//! to the intersection exactly when its completions in all `H_i` meet. Those
//! completions are `ρ(w)·P_i·A_i + L_i`, so the lifting words form the
//! normal subgroup `{w : ρ(w)·R ∈ Im(Lblock)}` of `F_r`. It is finitely
//! generated iff `r ≤ 1` or its abelian image `Λ` has full rank, in which
//! case it has finite index and a Schreier basis.

use num_bigint::BigInt;
use thiserror::Error;

use crate::ftfa::{to_big, Completion, FtfaError, SubgroupBasis};
use crate::stallings::{self, StallingsError};
use crate::words::Word;
use crate::zlattice::{self, IndexReps, IntMatrix, Lattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MintersectError {
    #[error("no subgroups given")]
    Empty,
    #[error("ambient mismatch: subgroup {index} lives in F_{}×Z^{}, expected F_{}×Z^{}", .got.0, .got.1, .expected.0, .expected.1)]
    AmbientMismatch {
        index: usize,
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("the intersection is not finitely generated")]
    NotFinitelyGenerated,
    #[error(transparent)]
    Stallings(#[from] StallingsError),
    #[error(transparent)]
    Ftfa(#[from] FtfaError),
}

/// The data of the intersection diagram.
#[derive(Debug, Clone)]
pub struct Diagram {
    pub subgroups: Vec<SubgroupBasis>,
    pub n: usize,
    pub m: usize,
    /// Free basis of `∩ H_iπ`.
    pub v_basis: Vec<Word>,
    /// `P_i`, row `j` the abelianised expression of `v_j` in `H_iπ`.
    pub p: Vec<IntMatrix>,
    /// `(P_2A_2 - P_1A_1 | … | P_kA_k - P_{k-1}A_{k-1})`.
    pub r_matrix: IntMatrix,
    pub l_block: IntMatrix,
}

impl Diagram {
    pub fn r(&self) -> usize {
        self.v_basis.len()
    }

    pub fn k(&self) -> usize {
        self.subgroups.len()
    }
}

/// Evidence that the intersection is not finitely generated (or the data
/// behind the positive answer).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub r: usize,
    /// `Λ = {v ∈ Z^r : v·R ∈ Im(Lblock)}`.
    pub lambda: Lattice,
    pub rank: usize,
    pub rank_deficit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub fg: bool,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intersection {
    pub fg: bool,
    pub basis: Option<SubgroupBasis>,
    pub certificate: Option<Certificate>,
}

pub fn build_diagram(subgroups: &[SubgroupBasis]) -> Result<Diagram, MintersectError> {
    let first = subgroups.first().ok_or(MintersectError::Empty)?;
    let (n, m) = (first.n(), first.m());
    for (index, h) in subgroups.iter().enumerate() {
        if (h.n(), h.m()) != (n, m) {
            return Err(MintersectError::AmbientMismatch {
                index,
                expected: (n, m),
                got: (h.n(), h.m()),
            });
        }
    }
    let automata: Vec<_> = subgroups.iter().map(|h| h.automaton()).collect();
    let v_basis = stallings::multi_pullback(&automata)
        .spanning_basis()
        .basis_words;
    let r = v_basis.len();
    let p: Vec<IntMatrix> = subgroups
        .iter()
        .map(|h| {
            let rows = v_basis
                .iter()
                .map(|v| {
                    let e = h.express(v).expect("pullback words lie in every subgroup");
                    to_big(&e.exponent_vector(h.free_rank()).0)
                })
                .collect();
            IntMatrix::from_rows(rows, h.free_rank())
        })
        .collect();
    let k = subgroups.len();
    let pa: Vec<IntMatrix> = p
        .iter()
        .zip(subgroups)
        .map(|(pi, h)| pi.mul(h.completion_matrix()))
        .collect();
    let mut r_matrix = IntMatrix::zeros(r, (k - 1) * m);
    for i in 0..k.saturating_sub(1) {
        r_matrix.set_block(0, i * m, &pa[i + 1].sub(&pa[i]));
    }
    let lattices: Vec<&Lattice> = subgroups.iter().map(|h| h.lattice()).collect();
    let l_block = zlattice::coset_block_matrix(&lattices, m);
    Ok(Diagram {
        subgroups: subgroups.to_vec(),
        n,
        m,
        v_basis,
        p,
        r_matrix,
        l_block,
    })
}

pub fn decide(d: &Diagram) -> Decision {
    let r = d.r();
    let lambda = zlattice::preimage(&d.r_matrix, &Lattice::from_matrix(&d.l_block));
    let rank = lambda.rank();
    let fg = r <= 1 || rank == r;
    Decision {
        fg,
        certificate: Certificate {
            r,
            lambda,
            rank,
            rank_deficit: r - rank,
        },
    }
}

/// Basis of the intersection; `cap` bounds the Schreier coset enumeration.
pub fn intersection_basis(d: &Diagram, cap: usize) -> Result<SubgroupBasis, MintersectError> {
    let decision = decide(d);
    if !decision.fg {
        return Err(MintersectError::NotFinitelyGenerated);
    }
    let lattices: Vec<Lattice> = d.subgroups.iter().map(|h| h.lattice().clone()).collect();
    let meet = zlattice::lattice_meet(&lattices);
    let lambda = decision.certificate.lambda;
    let r = d.r();
    if r == 0 || lambda.rank() < r {
        return Ok(SubgroupBasis::from_parts(d.n, d.m, Vec::new(), meet)?);
    }
    let IndexReps::Finite { index, .. } = zlattice::index_and_reps(&lambda) else {
        unreachable!("full-rank lattice has finite index");
    };
    if index > BigInt::from(cap) {
        return Err(StallingsError::IndexCapExceeded { cap }.into());
    }
    let key = |w: &Word| lambda.reduce(&to_big(&w.exponent_vector(r).0));
    let schreier = stallings::schreier_basis_keyed(r, key, cap)?;
    assert_eq!(
        BigInt::from(schreier.index()),
        index,
        "coset enumeration disagrees with the lattice index"
    );
    let mut pairs = Vec::with_capacity(schreier.basis.len());
    for b in &schreier.basis {
        let u = b
            .substitute(&d.v_basis)
            .expect("basis words use the v symbols");
        let cosets: Vec<_> = d
            .subgroups
            .iter()
            .map(|h| {
                h.completion(&u)
                    .expect("pullback words lie in every subgroup")
            })
            .collect();
        let common =
            zlattice::affine_meet(&cosets).expect("Schreier words have a common completion");
        pairs.push((u, common.point().to_vec()));
    }
    Ok(SubgroupBasis::from_parts(d.n, d.m, pairs, meet)?)
}

/// Decides finite generation and, when it holds, computes a basis.
pub fn intersect(subgroups: &[SubgroupBasis], cap: usize) -> Result<Intersection, MintersectError> {
    let d = build_diagram(subgroups)?;
    let decision = decide(&d);
    if decision.fg {
        Ok(Intersection {
            fg: true,
            basis: Some(intersection_basis(&d, cap)?),
            certificate: None,
        })
    } else {
        Ok(Intersection {
            fg: false,
            basis: None,
            certificate: Some(decision.certificate),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ftfa::{subgroup_basis, FtfaElement};
    use crate::stallings::DEFAULT_COSET_CAP;
    use crate::zlattice::int_vec;

    fn h(m: usize, gens: &[(&str, &[i64])]) -> SubgroupBasis {
        let g: Vec<FtfaElement> = gens
            .iter()
            .map(|(w, v)| FtfaElement::from_i64(Word::parse(w, 2).unwrap(), v))
            .collect();
        subgroup_basis(2, m, &g).unwrap()
    }

    #[test]
    fn diagram_of_the_non_howson_pair() {
        let a = h(1, &[("x", &[0]), ("y", &[0])]);
        let b = h(1, &[("x", &[1]), ("y", &[0])]);
        let d = build_diagram(&[a, b]).unwrap();
        assert_eq!(d.r(), 2);
        assert_eq!(d.p[0], IntMatrix::identity(2));
        assert_eq!(d.p[1], IntMatrix::identity(2));
        assert_eq!(d.r_matrix, IntMatrix::from_i64(&[&[1], &[0]], 1));
        let dec = decide(&d);
        assert!(!dec.fg);
        assert_eq!(
            dec.certificate.lambda,
            Lattice::from_generators(vec![int_vec([0, 1])], 2)
        );
    }

    #[test]
    fn trivial_free_intersection() {
        let d = build_diagram(&[h(0, &[("x", &[])]), h(0, &[("y", &[])])]).unwrap();
        assert_eq!(d.r(), 0);
        assert_eq!(d.r_matrix.ncols(), 0);
        assert!(decide(&d).fg);
    }

    #[test]
    fn single_subgroup() {
        let a = h(1, &[("xy", &[1]), ("yyx", &[2])]);
        let out = intersect(std::slice::from_ref(&a), DEFAULT_COSET_CAP).unwrap();
        assert!(out.fg);
        assert!(out.basis.unwrap().same_subgroup(&a));
    }

    #[test]
    fn self_intersection() {
        let a = h(1, &[("x", &[0]), ("y", &[0])]);
        let d = build_diagram(&[a.clone(), a.clone()]).unwrap();
        let dec = decide(&d);
        assert!(dec.fg);
        assert_eq!(dec.certificate.lambda, Lattice::full(2));
        assert!(intersection_basis(&d, DEFAULT_COSET_CAP)
            .unwrap()
            .same_subgroup(&a));
    }

    #[test]
    fn lattice_only_intersection() {
        let a = h(1, &[("x", &[0])]);
        let b = h(1, &[("", &[1])]);
        let out = intersect(&[a, b], DEFAULT_COSET_CAP).unwrap();
        let basis = out.basis.unwrap();
        assert_eq!(basis.free_rank(), 0);
        assert!(basis.lattice().is_trivial());
    }

    #[test]
    fn finite_index_intersection() {
        // lifts are the words with even x-exponent
        let a = h(1, &[("x", &[1]), ("y", &[0]), ("", &[2])]);
        let b = h(1, &[("x", &[0]), ("y", &[0])]);
        let out = intersect(&[a.clone(), b.clone()], DEFAULT_COSET_CAP).unwrap();
        assert!(out.fg);
        let basis = out.basis.unwrap();
        assert_eq!(basis.free_rank(), 3);
        for g in basis.generators() {
            assert!(a.contains(&g) && b.contains(&g));
        }
    }
}
