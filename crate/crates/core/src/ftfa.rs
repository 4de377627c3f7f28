//! Elements and finitely generated subgroups of `F_n × Z^m`.
//!
//! A subgroup `H` is stored as a basis `{u_1 t^{a_1}, …, u_r t^{a_r}; L_H}`
//! where `u_1..u_r` freely generate the projection `Hπ` and `L_H = H ∩ Z^m`.
//! The set of vectors completing a word `w ∈ Hπ` to an element of `H` is then
//! `ρ(w)·A + L_H`, with `ρ(w)` the abelianised expression of `w` over the `u_j`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::stallings::{self, Automaton, FreeBasisData};
use crate::words::{Word, WordError};
use crate::zlattice::{self, vec_add, zero_vec, AffineCoset, IntMatrix, IntVec, Lattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FtfaError {
    #[error("ambient mismatch: expected F_{}×Z^{}, got F_{}×Z^{}", .expected.0, .expected.1, .got.0, .got.1)]
    AmbientMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("subgroups are not strongly complementary: {0}")]
    NotStronglyComplementary(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// An element `w t^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FtfaElement {
    pub word: Word,
    pub vec: IntVec,
}

impl FtfaElement {
    pub fn new(word: Word, vec: IntVec) -> Self {
        FtfaElement { word, vec }
    }

    pub fn identity(m: usize) -> Self {
        FtfaElement::new(Word::identity(), zero_vec(m))
    }

    pub fn from_i64(word: Word, vec: &[i64]) -> Self {
        FtfaElement::new(word, zlattice::int_vec(vec.iter().copied()))
    }

    /// Free part.
    pub fn pi(&self) -> &Word {
        &self.word
    }

    /// Abelian part.
    pub fn tau(&self) -> &[BigInt] {
        &self.vec
    }

    pub fn mul(&self, other: &FtfaElement) -> FtfaElement {
        FtfaElement::new(
            self.word.concat(&other.word),
            vec_add(&self.vec, &other.vec),
        )
    }

    pub fn inverse(&self) -> FtfaElement {
        FtfaElement::new(self.word.inverse(), self.vec.iter().map(|x| -x).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_identity() && self.vec.iter().all(Zero::is_zero)
    }
}

/// Anything with a decidable completion map: finite bases and the
/// parametric subgroups used by configuration realizations.
pub trait Completion {
    /// `(n, m)` of the ambient group.
    fn ambient(&self) -> (usize, usize);

    /// `{a : w t^a ∈ H}`, or `None` if it is empty.
    fn completion(&self, w: &Word) -> Option<AffineCoset>;

    fn contains(&self, g: &FtfaElement) -> bool {
        self.completion(&g.word).is_some_and(|c| c.contains(&g.vec))
    }
}

/// Basis `{u_j t^{a_j}; L_H}` of a finitely generated subgroup.
#[derive(Clone)]
pub struct SubgroupBasis {
    n: usize,
    m: usize,
    pairs: Vec<(Word, IntVec)>,
    lattice: Lattice,
    completion: IntMatrix,
    automaton: Automaton,
    fold: FreeBasisData,
}

impl PartialEq for SubgroupBasis {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.m) == (other.n, other.m)
            && self.pairs == other.pairs
            && self.lattice == other.lattice
    }
}

impl Eq for SubgroupBasis {}

impl fmt::Debug for SubgroupBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn check_element(n: usize, m: usize, g: &FtfaElement) -> Result<(), FtfaError> {
    if g.word.max_index() > n || g.vec.len() != m {
        return Err(FtfaError::AmbientMismatch {
            expected: (n, m),
            got: (g.word.max_index().max(n), g.vec.len()),
        });
    }
    Ok(())
}

/// Basis of the subgroup generated by `generators`.
pub fn subgroup_basis(
    n: usize,
    m: usize,
    generators: &[FtfaElement],
) -> Result<SubgroupBasis, FtfaError> {
    for g in generators {
        check_element(n, m, g)?;
    }
    let p = generators.len();
    let words: Vec<Word> = generators.iter().map(|g| g.word.clone()).collect();
    let gen_matrix = IntMatrix::from_rows(generators.iter().map(|g| g.vec.clone()).collect(), m);
    let (automaton, fold) = stallings::fold(n, &words);
    let q = fold.rank();
    // relations among the generators, abelianised
    let mut rel_rows = Vec::with_capacity(p);
    for w in &words {
        let expr = stallings::rewrite(&fold, &automaton, w)
            .expect("generator is accepted by its own fold");
        rel_rows.push(to_big(&expr.exponent_vector(q).0));
    }
    let rel = IntMatrix::from_rows(rel_rows, q);
    let lattice = zlattice::kernel(&rel).image(&gen_matrix);
    let pairs: Vec<(Word, IntVec)> = fold
        .basis_words
        .iter()
        .zip(&fold.generator_expressions)
        .map(|(u, e)| {
            let a = gen_matrix.left_mul(&to_big(&e.exponent_vector(p).0));
            (u.clone(), lattice.reduce(&a))
        })
        .collect();
    Ok(SubgroupBasis::assemble(n, m, pairs, lattice))
}

/// Basis of the subgroup generated by `parts`, which must be jointly
/// strongly complementary: free parts in free factor position and abelian
/// parts in direct sum.
pub fn strong_join_all(
    n: usize,
    m: usize,
    parts: &[&SubgroupBasis],
) -> Result<SubgroupBasis, FtfaError> {
    if let Some(p) = parts.iter().find(|p| (p.n, p.m) != (n, m)) {
        return Err(FtfaError::AmbientMismatch {
            expected: (n, m),
            got: (p.n, p.m),
        });
    }
    let words: Vec<Word> = parts.iter().flat_map(|p| p.free_words()).collect();
    let folded = stallings::fold(n, &words);
    if folded.0.subgroup_rank() != words.len() {
        return Err(FtfaError::NotStronglyComplementary(
            "free parts are not in free factor position".into(),
        ));
    }
    let spans: Vec<Lattice> = parts.iter().map(|p| p.abelian_span()).collect();
    let rows: Vec<IntVec> = spans.iter().flat_map(|l| l.basis().to_rows()).collect();
    if Lattice::from_generators(rows, m).rank() != spans.iter().map(Lattice::rank).sum::<usize>() {
        return Err(FtfaError::NotStronglyComplementary(
            "abelian parts are not in direct sum".into(),
        ));
    }
    let rows: Vec<IntVec> = parts
        .iter()
        .flat_map(|p| p.lattice.basis().to_rows())
        .collect();
    let lattice = Lattice::from_generators(rows, m);
    let pairs = parts
        .iter()
        .flat_map(|p| p.pairs.iter())
        .map(|(u, v)| (u.clone(), lattice.reduce(v)))
        .collect();
    Ok(SubgroupBasis::assemble_folded(n, m, pairs, lattice, folded))
}

pub(crate) fn to_big(v: &[i64]) -> IntVec {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl SubgroupBasis {
    /// Builds a basis from its parts, checking that the `u_j` are freely
    /// independent and the dimensions agree.
    pub fn from_parts(
        n: usize,
        m: usize,
        pairs: Vec<(Word, IntVec)>,
        lattice: Lattice,
    ) -> Result<Self, FtfaError> {
        if lattice.dim() != m {
            return Err(FtfaError::AmbientMismatch {
                expected: (n, m),
                got: (n, lattice.dim()),
            });
        }
        for (u, a) in &pairs {
            check_element(n, m, &FtfaElement::new(u.clone(), a.clone()))?;
        }
        let words: Vec<Word> = pairs.iter().map(|(u, _)| u.clone()).collect();
        let folded = stallings::fold(n, &words);
        if folded.0.subgroup_rank() != pairs.len() {
            return Err(FtfaError::InvalidBasis(format!(
                "{} free words span a subgroup of rank {}",
                pairs.len(),
                folded.0.subgroup_rank()
            )));
        }
        let pairs = pairs
            .into_iter()
            .map(|(u, v)| (u, lattice.reduce(&v)))
            .collect();
        Ok(Self::assemble_folded(n, m, pairs, lattice, folded))
    }

    fn assemble(n: usize, m: usize, pairs: Vec<(Word, IntVec)>, lattice: Lattice) -> Self {
        let words: Vec<Word> = pairs.iter().map(|(u, _)| u.clone()).collect();
        let folded = stallings::fold(n, &words);
        Self::assemble_folded(n, m, pairs, lattice, folded)
    }

    /// As [`Self::assemble`], with the fold of the free words already known.
    fn assemble_folded(
        n: usize,
        m: usize,
        pairs: Vec<(Word, IntVec)>,
        lattice: Lattice,
        (automaton, fold): (Automaton, FreeBasisData),
    ) -> Self {
        let completion = IntMatrix::from_rows(pairs.iter().map(|(_, a)| a.clone()).collect(), m);
        SubgroupBasis {
            n,
            m,
            pairs,
            lattice,
            completion,
            automaton,
            fold,
        }
    }

    pub fn trivial(n: usize, m: usize) -> Self {
        Self::assemble(n, m, Vec::new(), Lattice::trivial(m))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of free basis elements.
    pub fn free_rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Word, IntVec)] {
        &self.pairs
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Rows are the completion vectors `a_j`.
    pub fn completion_matrix(&self) -> &IntMatrix {
        &self.completion
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    pub fn free_words(&self) -> Vec<Word> {
        self.pairs.iter().map(|(u, _)| u.clone()).collect()
    }

    /// `w` as a word over the symbols `u_1..u_r`, or `None` if `w ∉ Hπ`.
    pub fn express(&self, w: &Word) -> Option<Word> {
        let e = stallings::rewrite(&self.fold, &self.automaton, w)?;
        Some(
            e.substitute(&self.fold.generator_expressions)
                .expect("expressions cover the fold basis"),
        )
    }

    /// Basis elements followed by the lattice generators.
    pub fn generators(&self) -> Vec<FtfaElement> {
        let mut out: Vec<FtfaElement> = self
            .pairs
            .iter()
            .map(|(u, a)| FtfaElement::new(u.clone(), a.clone()))
            .collect();
        out.extend(
            self.lattice
                .basis()
                .rows()
                .map(|r| FtfaElement::new(Word::identity(), r.to_vec())),
        );
        out
    }

    pub fn member(&self, g: &FtfaElement) -> Result<bool, FtfaError> {
        check_element(self.n, self.m, g)?;
        Ok(self.contains(g))
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_subgroup(&self, other: &SubgroupBasis) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }

    /// Equality as subgroups (mutual containment).
    pub fn same_subgroup(&self, other: &SubgroupBasis) -> bool {
        (self.n, self.m) == (other.n, other.m)
            && self.contains_subgroup(other)
            && other.contains_subgroup(self)
    }

    /// Span of all abelian data `a_j` and `L_H`.
    fn abelian_span(&self) -> Lattice {
        Lattice::from_matrix(&self.completion.vstack(self.lattice.basis()))
    }

    /// Basis of `⟨self, other⟩` when the two are strongly complementary.
    pub fn strong_join(&self, other: &SubgroupBasis) -> Result<SubgroupBasis, FtfaError> {
        strong_join_all(self.n, self.m, &[self, other])
    }

    /// Human-readable form such as `<x, yt^(1,0); t^(0,1)>`.
    pub fn to_text(&self) -> String {
        let show = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(u, a)| {
                let w = if self.n <= 26 {
                    u.to_text(self.n)
                } else {
                    u.to_string()
                };
                if a.iter().all(Zero::is_zero) {
                    w
                } else {
                    format!("{w}t^({})", show(a))
                }
            })
            .collect();
        let lat: Vec<String> = self
            .lattice
            .basis()
            .rows()
            .map(|r| format!("t^({})", show(r)))
            .collect();
        let mut s = format!("<{}", parts.join(", "));
        if !lat.is_empty() {
            s.push_str("; ");
            s.push_str(&lat.join(", "));
        }
        s.push('>');
        s
    }
}

impl Completion for SubgroupBasis {
    fn ambient(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    fn completion(&self, w: &Word) -> Option<AffineCoset> {
        if w.max_index() > self.n {
            return None;
        }
        let expr = self.express(w)?;
        let rho = to_big(&expr.exponent_vector(self.pairs.len()).0);
        Some(AffineCoset::new(
            self.completion.left_mul(&rho),
            self.lattice.clone(),
        ))
    }
}
