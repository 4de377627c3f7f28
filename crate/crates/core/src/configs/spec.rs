//! Subgroups used by realizations, including non-finitely generated ones.
//!
//! Every free part lives inside the normal closure of `x` in `F_2 = ⟨x, y⟩`,
//! which is free on the words `u_j = y^{-j} x y^j` (`j ∈ Z`). A parametric
//! subgroup is a free product of pieces, each owning a set of `u`-letters
//! no other piece uses, with abelian parts in direct sum.

use std::collections::BTreeSet;

use crate::ftfa::{Completion, FtfaError, SubgroupBasis};
use crate::words::Word;
use crate::zlattice::{vec_add, zero_vec, AffineCoset, Lattice};

/// `y^{-j} x y^j`.
pub fn u_word(j: i64) -> Word {
    let y = Word::letter(2);
    y.pow(-j).concat(&Word::letter(1)).concat(&y.pow(j))
}

/// The expression of `w ∈ ⟨⟨x⟩⟩` over the letters `u_j`, as signed
/// `(j, ±1)` pairs; `None` when the total `y`-exponent is nonzero.
pub fn u_expression(w: &Word) -> Option<Vec<(i64, i32)>> {
    let mut s: i64 = 0;
    let mut out = Vec::new();
    for &l in w.letters() {
        match l.abs() {
            1 => out.push((-s, l.signum())),
            2 => s += l.signum() as i64,
            _ => return None,
        }
    }
    (s == 0).then_some(out)
}

/// Word over `x, y` for a signed sequence of `u`-letters.
fn expand(letters: &[(i64, i32)]) -> Word {
    letters.iter().fold(Word::identity(), |acc, &(j, e)| {
        let u = u_word(j);
        acc.concat(&if e > 0 { u } else { u.inverse() })
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorPiece {
    /// A finitely generated subgroup of `⟨u_j : j ∈ letters⟩ × Z^m`, given by
    /// a basis over local symbols (local symbol `l` is `u_{letters[l-1]}`).
    Finite {
        letters: Vec<i64>,
        basis: SubgroupBasis,
    },
    /// The normal closure of the `closed` letters inside `⟨u_j : j ∈ letters⟩`.
    NormalClosure { letters: Vec<i64>, closed: Vec<i64> },
    /// `⟨u_j : j < 0, (-1-j) mod modulus = residue⟩`.
    Ray { modulus: u32, residue: u32 },
}

impl FactorPiece {
    pub fn owns(&self, j: i64) -> bool {
        match self {
            FactorPiece::Finite { letters, .. } | FactorPiece::NormalClosure { letters, .. } => {
                letters.contains(&j)
            }
            FactorPiece::Ray { modulus, residue } => {
                j < 0 && (-1 - j).rem_euclid(*modulus as i64) == *residue as i64
            }
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FactorPiece::Finite { .. })
    }

    /// The piece as a basis in `F_2 × Z^m` (finite pieces only).
    pub fn global_basis(&self) -> Option<SubgroupBasis> {
        let FactorPiece::Finite { letters, basis } = self else {
            return None;
        };
        let images: Vec<Word> = letters.iter().map(|&j| u_word(j)).collect();
        let pairs = basis
            .pairs()
            .iter()
            .map(|(w, a)| {
                (
                    w.substitute(&images)
                        .expect("local words use the piece letters"),
                    a.clone(),
                )
            })
            .collect();
        Some(
            SubgroupBasis::from_parts(2, basis.m(), pairs, basis.lattice().clone())
                .expect("u-letters are free"),
        )
    }

    fn local_index(&self, j: i64) -> i32 {
        match self {
            FactorPiece::Finite { letters, .. } | FactorPiece::NormalClosure { letters, .. } => {
                letters.iter().position(|&l| l == j).expect("owned letter") as i32 + 1
            }
            FactorPiece::Ray { .. } => unreachable!("rays have no local alphabet"),
        }
    }

    /// Completion of a syllable made only of letters this piece owns.
    fn syllable_completion(&self, syllable: &[(i64, i32)], m: usize) -> Option<AffineCoset> {
        match self {
            FactorPiece::Ray { .. } => Some(AffineCoset::new(zero_vec(m), Lattice::trivial(m))),
            FactorPiece::NormalClosure { closed, .. } => {
                let rest: Vec<(i64, i32)> = syllable
                    .iter()
                    .copied()
                    .filter(|(j, _)| !closed.contains(j))
                    .collect();
                let local = Word::from_letters(rest.iter().map(|&(j, e)| e * self.local_index(j)));
                local
                    .is_identity()
                    .then(|| AffineCoset::new(zero_vec(m), Lattice::trivial(m)))
            }
            FactorPiece::Finite { basis, .. } => {
                let local =
                    Word::from_letters(syllable.iter().map(|&(j, e)| e * self.local_index(j)));
                basis.completion(&local)
            }
        }
    }

    /// Sample words (over `x, y`) lying in the piece, most telling first.
    pub(crate) fn sample_words(&self, count: usize) -> Vec<Word> {
        match self {
            FactorPiece::Ray { modulus, residue } => (0..count as i64)
                .map(|t| u_word(-1 - *residue as i64 - t * *modulus as i64))
                .collect(),
            FactorPiece::NormalClosure { letters, closed } => {
                let mut out = Vec::new();
                for &c in closed {
                    for &a in letters.iter().filter(|l| !closed.contains(l)) {
                        for e in 0..count as i64 {
                            out.push(conjugate_u(c, a, e));
                        }
                    }
                }
                out
            }
            FactorPiece::Finite { letters, .. } => {
                let mut out = Vec::new();
                for &a in letters {
                    for &b in letters.iter().filter(|&&b| b != a) {
                        for e in 0..count as i64 {
                            out.push(conjugate_u(a, b, e));
                        }
                    }
                }
                out
            }
        }
    }
}

/// `u_b^{-e} u_a u_b^e`.
fn conjugate_u(a: i64, b: i64, e: i64) -> Word {
    u_word(a).conjugate_by(&u_word(b).pow(e))
}

/// A subgroup of `F_2 × Z^m` used in a realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    Finite(SubgroupBasis),
    Parametric { m: usize, pieces: Vec<FactorPiece> },
}

impl SubgroupSpec {
    /// A finite basis when every piece is finite, a parametric spec otherwise.
    pub fn from_pieces(m: usize, pieces: Vec<FactorPiece>) -> Result<Self, FtfaError> {
        if !pieces.iter().all(FactorPiece::is_finite) {
            return Ok(SubgroupSpec::Parametric { m, pieces });
        }
        let mut pairs = Vec::new();
        let mut lattice_rows = Vec::new();
        let mut span_rows = Vec::new();
        let mut span_rank = 0;
        for p in &pieces {
            let FactorPiece::Finite { letters, basis } = p else {
                unreachable!("checked above");
            };
            if basis.m() != m {
                return Err(FtfaError::AmbientMismatch {
                    expected: (2, m),
                    got: (2, basis.m()),
                });
            }
            let images: Vec<Word> = letters.iter().map(|&j| u_word(j)).collect();
            for (w, a) in basis.pairs() {
                pairs.push((w.substitute(&images)?, a.clone()));
                span_rows.push(a.clone());
            }
            lattice_rows.extend(basis.lattice().basis().to_rows());
            let span = Lattice::from_generators(
                basis
                    .completion_matrix()
                    .vstack(basis.lattice().basis())
                    .to_rows(),
                m,
            );
            span_rank += span.rank();
        }
        span_rows.extend(lattice_rows.iter().cloned());
        if Lattice::from_generators(span_rows, m).rank() != span_rank {
            return Err(FtfaError::NotStronglyComplementary(
                "abelian parts are not in direct sum".into(),
            ));
        }
        let lattice = Lattice::from_generators(lattice_rows, m);
        match SubgroupBasis::from_parts(2, m, pairs, lattice) {
            Ok(b) => Ok(SubgroupSpec::Finite(b)),
            Err(FtfaError::InvalidBasis(_)) => Err(FtfaError::NotStronglyComplementary(
                "free parts are not in free factor position".into(),
            )),
            Err(e) => Err(e),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, SubgroupSpec::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&SubgroupBasis> {
        match self {
            SubgroupSpec::Finite(b) => Some(b),
            SubgroupSpec::Parametric { .. } => None,
        }
    }

    pub fn pieces(&self) -> &[FactorPiece] {
        match self {
            SubgroupSpec::Finite(_) => &[],
            SubgroupSpec::Parametric { pieces, .. } => pieces,
        }
    }

    pub fn m(&self) -> usize {
        match self {
            SubgroupSpec::Finite(b) => b.m(),
            SubgroupSpec::Parametric { m, .. } => *m,
        }
    }
}

impl Completion for SubgroupSpec {
    fn ambient(&self) -> (usize, usize) {
        (2, self.m())
    }

    fn completion(&self, w: &Word) -> Option<AffineCoset> {
        let (m, pieces) = match self {
            SubgroupSpec::Finite(b) => return b.completion(w),
            SubgroupSpec::Parametric { m, pieces } => (*m, pieces),
        };
        let letters = u_expression(w)?;
        let mut point = zero_vec(m);
        let mut i = 0;
        while i < letters.len() {
            let owner = pieces.iter().position(|p| p.owns(letters[i].0))?;
            let mut end = i + 1;
            while end < letters.len() && pieces[owner].owns(letters[end].0) {
                end += 1;
            }
            let c = pieces[owner].syllable_completion(&letters[i..end], m)?;
            point = vec_add(&point, c.point());
            i = end;
        }
        let lattice = pieces
            .iter()
            .filter_map(|p| match p {
                FactorPiece::Finite { basis, .. } => Some(basis.lattice().clone()),
                _ => None,
            })
            .fold(Lattice::trivial(m), |acc, l| acc.sum(&l));
        Some(AffineCoset::new(point, lattice))
    }
}

/// Subgroups of `F_2 × Z^m` realizing a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub m: usize,
    pub subgroups: Vec<SubgroupSpec>,
}

impl Realization {
    pub fn n(&self) -> usize {
        2
    }

    pub fn k(&self) -> usize {
        self.subgroups.len()
    }

    /// Every `u`-letter index used by a finite or normal-closure piece.
    pub fn used_letters(&self) -> BTreeSet<i64> {
        self.subgroups
            .iter()
            .flat_map(|s| s.pieces())
            .flat_map(|p| match p {
                FactorPiece::Finite { letters, .. }
                | FactorPiece::NormalClosure { letters, .. } => letters.clone(),
                FactorPiece::Ray { .. } => Vec::new(),
            })
            .collect()
    }

    /// Expands a word over signed `u`-letters into `x, y`.
    pub fn expand_u(letters: &[(i64, i32)]) -> Word {
        expand(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_words() {
        assert_eq!(u_word(0), Word::letter(1));
        assert_eq!(u_word(1), Word::from_letters([-2, 1, 2]));
        assert_eq!(u_word(-2), Word::from_letters([2, 2, 1, -2, -2]));
    }

    #[test]
    fn u_expression_round_trip() {
        let seq = [(3, 1), (-1, -1), (0, 1), (3, -1)];
        let w = expand(&seq);
        assert_eq!(u_expression(&w).unwrap(), seq.to_vec());
        assert_eq!(u_expression(&Word::letter(2)), None);
    }

    #[test]
    fn ray_membership() {
        let spec = SubgroupSpec::Parametric {
            m: 0,
            pieces: vec![FactorPiece::Ray {
                modulus: 1,
                residue: 0,
            }],
        };
        assert!(spec.completion(&u_word(-1).concat(&u_word(-5))).is_some());
        assert!(spec.completion(&u_word(0)).is_none());
        assert!(spec.completion(&Word::identity()).is_some());
    }

    #[test]
    fn normal_closure_membership() {
        let spec = SubgroupSpec::Parametric {
            m: 0,
            pieces: vec![FactorPiece::NormalClosure {
                letters: vec![0, 1],
                closed: vec![1],
            }],
        };
        let a = u_word(0);
        let b = u_word(1);
        assert!(spec.completion(&b.conjugate_by(&a.pow(3))).is_some());
        assert!(spec.completion(&a).is_none());
        assert!(spec
            .completion(&a.concat(&b).concat(&a.inverse()))
            .is_some());
    }
}
