//! Checks a realization against its configuration, subset by subset.

use std::collections::BTreeSet;

use super::spec::{Realization, SubgroupSpec};
use super::{set_of, ConfigError, Configuration};
use crate::ftfa::{Completion, FtfaElement, SubgroupBasis};
use crate::mintersect::{self, Certificate};
use crate::par;
use crate::stallings::{self, default_coset_cap};
use crate::words::Word;
use crate::zlattice::affine_meet;

const SAMPLES_PER_PIECE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Size of the free witness sought for non-finitely generated subsets
    /// with a parametric member.
    pub witness_rank: usize,
    pub parallel: bool,
    pub coset_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            witness_rank: 3,
            parallel: false,
            coset_cap: default_coset_cap(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// All members finite; the intersection has this basis.
    VerifiedFg { basis: SubgroupBasis },
    /// All members finite; the intersection is not finitely generated.
    VerifiedNonFg { certificate: Certificate },
    /// Elements of the intersection freely generating a subgroup of rank
    /// `witness.len()`.
    WitnessedNonFg { witness: Vec<FtfaElement> },
    /// Fewer independent elements found than requested.
    WitnessIncomplete {
        found: Vec<FtfaElement>,
        wanted: usize,
    },
    /// Parametric member, value 0: certified by construction only.
    StructuralOnly {
        sampled: usize,
        in_intersection: usize,
    },
    /// The intersection could not be computed.
    Undecided { reason: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::VerifiedFg { .. } => "VerifiedFG",
            Verdict::VerifiedNonFg { .. } => "VerifiedNonFG",
            Verdict::WitnessedNonFg { .. } => "WitnessedNonFG",
            Verdict::WitnessIncomplete { .. } => "WitnessIncomplete",
            Verdict::StructuralOnly { .. } => "StructuralOnly",
            Verdict::Undecided { .. } => "Undecided",
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(
            self,
            Verdict::VerifiedFg { .. } | Verdict::VerifiedNonFg { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    pub mask: u32,
    pub set: Vec<usize>,
    /// The configuration's value on this subset.
    pub expected: bool,
    pub verdict: Verdict,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub k: usize,
    pub pass: bool,
    pub subsets: Vec<SubsetReport>,
}

impl VerifyReport {
    pub fn count(&self, name: &str) -> usize {
        self.subsets
            .iter()
            .filter(|s| s.verdict.name() == name)
            .count()
    }

    pub fn contradictions(&self) -> Vec<&SubsetReport> {
        self.subsets.iter().filter(|s| !s.consistent).collect()
    }
}

pub fn verify(
    c: &Configuration,
    r: &Realization,
    opts: &VerifyOptions,
) -> Result<VerifyReport, ConfigError> {
    if r.k() != c.k() {
        return Err(ConfigError::ArityMismatch {
            expected: c.k(),
            got: r.k(),
        });
    }
    if let Some(s) = r.subgroups.iter().find(|s| s.m() != r.m) {
        return Err(ConfigError::Realization(format!(
            "subgroup lives in Z^{} but the realization uses Z^{}",
            s.m(),
            r.m
        )));
    }
    let masks: Vec<u32> = c.masks().collect();
    let subsets = par::map(&masks, opts.parallel, |&mask| {
        check_subset(c, r, mask, opts)
    });
    let pass = subsets.iter().all(|s| s.consistent);
    Ok(VerifyReport {
        k: c.k(),
        pass,
        subsets,
    })
}

fn check_subset(
    c: &Configuration,
    r: &Realization,
    mask: u32,
    opts: &VerifyOptions,
) -> SubsetReport {
    let set = set_of(mask);
    let expected = c.value(mask);
    let members: Vec<&SubgroupSpec> = set.iter().map(|&i| &r.subgroups[i - 1]).collect();
    let verdict = if let Some(bases) = members
        .iter()
        .map(|s| s.as_finite().cloned())
        .collect::<Option<Vec<_>>>()
    {
        match mintersect::intersect(&bases, opts.coset_cap) {
            Ok(out) if out.fg => Verdict::VerifiedFg {
                basis: out.basis.expect("fg answers carry a basis"),
            },
            Ok(out) => Verdict::VerifiedNonFg {
                certificate: out.certificate.expect("non-fg answers carry a certificate"),
            },
            Err(e) => Verdict::Undecided {
                reason: e.to_string(),
            },
        }
    } else if expected {
        let found = free_witness(&members, opts.witness_rank);
        if found.len() >= opts.witness_rank {
            Verdict::WitnessedNonFg { witness: found }
        } else {
            Verdict::WitnessIncomplete {
                found,
                wanted: opts.witness_rank,
            }
        }
    } else {
        let samples = sample_words(&members);
        let in_intersection = samples
            .iter()
            .filter(|w| common_element(&members, w).is_some())
            .count();
        Verdict::StructuralOnly {
            sampled: samples.len(),
            in_intersection,
        }
    };
    let consistent = match &verdict {
        Verdict::VerifiedFg { .. } => !expected,
        Verdict::VerifiedNonFg { .. } => expected,
        Verdict::Undecided { .. } => false,
        _ => true,
    };
    SubsetReport {
        mask,
        set,
        expected,
        verdict,
        consistent,
    }
}

/// Candidate words drawn from the members' pieces, non-finite pieces first.
fn sample_words(members: &[&SubgroupSpec]) -> Vec<Word> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for finite_pass in [false, true] {
        for s in members {
            for p in s.pieces().iter().filter(|p| p.is_finite() == finite_pass) {
                for w in p.sample_words(SAMPLES_PER_PIECE) {
                    if seen.insert(w.clone()) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// An element of the intersection with free part `w`, if one exists.
fn common_element(members: &[&SubgroupSpec], w: &Word) -> Option<FtfaElement> {
    let cosets = members
        .iter()
        .map(|s| s.completion(w))
        .collect::<Option<Vec<_>>>()?;
    let meet = affine_meet(&cosets)?;
    Some(FtfaElement::new(w.clone(), meet.point().to_vec()))
}

/// Greedily collects intersection elements whose free parts stay independent.
fn free_witness(members: &[&SubgroupSpec], want: usize) -> Vec<FtfaElement> {
    let mut found: Vec<FtfaElement> = Vec::new();
    for w in sample_words(members) {
        if found.len() >= want {
            break;
        }
        let Some(g) = common_element(members, &w) else {
            continue;
        };
        let mut words: Vec<Word> = found.iter().map(|e| e.word.clone()).collect();
        words.push(w);
        if stallings::fold(2, &words).0.subgroup_rank() == words.len() {
            found.push(g);
        }
    }
    found
}
