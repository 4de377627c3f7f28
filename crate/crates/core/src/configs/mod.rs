//! Intersection configurations: which partial intersections of a family of
//! `k` subgroups fail to be finitely generated.
//!
//! Index sets are bitmasks, bit `i-1` standing for index `i`.

mod obstruction;
mod realize;
mod spec;
mod verify;

use std::fmt;

use thiserror::Error;

pub use obstruction::{obstruction_bound, Obstruction};
pub use realize::{almost_zero_family, realize_free, realize_ftfa};
pub use spec::{u_word, FactorPiece, Realization, SubgroupSpec};
pub use verify::{verify, SubsetReport, Verdict, VerifyOptions, VerifyReport};

pub const MAX_K: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("k must be between 1 and {MAX_K}, got {0}")]
    KOutOfRange(usize),
    #[error("index {index} is outside [1, {k}]")]
    BadIndex { index: usize, k: usize },
    #[error("index sets must be nonempty")]
    EmptySet,
    #[error("configurations have different k ({left} and {right})")]
    KMismatch { left: usize, right: usize },
    #[error("configuration is not Howson")]
    NotHowson,
    #[error("expected {expected} subgroups, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("realization error: {0}")]
    Realization(String),
}

/// A map from nonempty subsets of `[k]` to `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    k: usize,
    values: Vec<bool>,
}

pub fn mask_of(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn set_of(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

fn check_k(k: usize) -> Result<(), ConfigError> {
    if k == 0 || k > MAX_K {
        Err(ConfigError::KOutOfRange(k))
    } else {
        Ok(())
    }
}

impl Configuration {
    /// The configuration whose support is `support`.
    pub fn new<S: AsRef<[usize]>>(k: usize, support: &[S]) -> Result<Self, ConfigError> {
        check_k(k)?;
        let mut c = Self::zero(k);
        for set in support {
            let set = set.as_ref();
            if set.is_empty() {
                return Err(ConfigError::EmptySet);
            }
            if let Some(&index) = set.iter().find(|&&i| i == 0 || i > k) {
                return Err(ConfigError::BadIndex { index, k });
            }
            c.values[mask_of(set) as usize] = true;
        }
        Ok(c)
    }

    pub fn from_masks(k: usize, masks: &[u32]) -> Result<Self, ConfigError> {
        let sets: Vec<Vec<usize>> = masks.iter().map(|&m| set_of(m)).collect();
        Self::new(k, &sets)
    }

    /// The 𝟘 configuration.
    ///
    /// Panics if `k` is outside `1..=16`.
    pub fn zero(k: usize) -> Self {
        check_k(k).expect("valid k");
        Configuration {
            k,
            values: vec![false; 1 << k],
        }
    }

    /// The 𝟙 configuration.
    pub fn one(k: usize) -> Self {
        let mut c = Self::zero(k);
        c.values[1..].fill(true);
        c
    }

    /// Support `{set}`.
    pub fn almost_zero(k: usize, set: &[usize]) -> Result<Self, ConfigError> {
        Self::new(k, &[set])
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Value at a nonempty mask.
    pub fn value(&self, mask: u32) -> bool {
        assert!(
            mask != 0 && (mask as usize) < self.values.len(),
            "mask {mask:#b} out of range"
        );
        self.values[mask as usize]
    }

    pub fn value_of(&self, set: &[usize]) -> bool {
        self.value(mask_of(set))
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.k) - 1) as u32
    }

    /// Nonempty masks in increasing numeric order.
    pub fn masks(&self) -> impl Iterator<Item = u32> {
        1..=self.full_mask()
    }

    /// Support masks in increasing numeric order.
    pub fn support_masks(&self) -> Vec<u32> {
        self.masks().filter(|&m| self.value(m)).collect()
    }

    pub fn support_sets(&self) -> Vec<Vec<usize>> {
        self.support_masks().into_iter().map(set_of).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| !v)
    }

    pub fn is_one(&self) -> bool {
        self.values[1..].iter().all(|&v| v)
    }

    fn same_k(&self, other: &Configuration) -> Result<(), ConfigError> {
        if self.k != other.k {
            return Err(ConfigError::KMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    /// Support union.
    pub fn join(&self, other: &Configuration) -> Result<Configuration, ConfigError> {
        self.same_k(other)?;
        Ok(Configuration {
            k: self.k,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a | b)
                .collect(),
        })
    }

    /// The `(k+1)`-configuration equal to `self` away from `k+1`, to `other`
    /// on sets `J ∪ {k+1}`, and to `delta` on `{k+1}`.
    pub fn delta_sum(
        &self,
        other: &Configuration,
        delta: bool,
    ) -> Result<Configuration, ConfigError> {
        self.same_k(other)?;
        check_k(self.k + 1)?;
        let k = self.k;
        let top = 1u32 << k;
        let mut out = Configuration::zero(k + 1);
        for mask in out.masks() {
            out.values[mask as usize] = if mask & top == 0 {
                self.value(mask)
            } else if mask == top {
                delta
            } else {
                other.value(mask & !top)
            };
        }
        Ok(out)
    }

    /// Drops index `i` (sets containing `i` leave the domain).
    pub fn restrict(&self, i: usize) -> Result<Configuration, ConfigError> {
        if i == 0 || i > self.k {
            return Err(ConfigError::BadIndex {
                index: i,
                k: self.k,
            });
        }
        check_k(self.k - 1)?;
        let mut out = Configuration::zero(self.k - 1);
        for mask in out.masks() {
            out.values[mask as usize] = self.value(expand_mask(mask, i));
        }
        Ok(out)
    }

    /// Keeps only the support sets inside `vertex`.
    pub fn cone(&self, vertex: u32) -> Result<Configuration, ConfigError> {
        if vertex == 0 {
            return Err(ConfigError::EmptySet);
        }
        if vertex & !self.full_mask() != 0 {
            return Err(ConfigError::BadIndex {
                index: 32 - vertex.leading_zeros() as usize,
                k: self.k,
            });
        }
        let mut out = self.clone();
        for mask in self.masks() {
            if mask & !vertex != 0 {
                out.values[mask as usize] = false;
            }
        }
        Ok(out)
    }

    /// Whether the sets with value 0 are closed under union.
    pub fn is_howson(&self) -> bool {
        // union[s] = union of the zero-valued subsets of s
        let mut union = vec![0u32; self.values.len()];
        for s in self.masks() {
            union[s as usize] = if !self.value(s) {
                s
            } else {
                let mut u = 0;
                let mut bits = s;
                while bits != 0 {
                    let b = bits & bits.wrapping_neg();
                    u |= union[(s & !b) as usize];
                    bits &= bits - 1;
                }
                if u == s {
                    return false;
                }
                u
            };
        }
        true
    }

    /// Maximal support sets under inclusion, in numeric order.
    pub fn maximal_support(&self) -> Vec<u32> {
        let supp = self.support_masks();
        supp.iter()
            .copied()
            .filter(|&s| !supp.iter().any(|&t| t != s && t & s == s))
            .collect()
    }

    /// All 2^(2^k - 1) configurations on `k` indices (small `k` only).
    pub fn all(k: usize) -> impl Iterator<Item = Configuration> {
        assert!(
            (1..=4).contains(&k),
            "exhaustive enumeration is limited to k ≤ 4"
        );
        let cells = (1usize << k) - 1;
        (0u64..1 << cells).map(move |bits| {
            let mut c = Configuration::zero(k);
            for m in 1..=cells {
                c.values[m] = bits >> (m - 1) & 1 == 1;
            }
            c
        })
    }
}

/// Re-inserts a zero bit at index `i` (1-based) into a `(k-1)`-mask.
pub(crate) fn expand_mask(mask: u32, i: usize) -> u32 {
    let low = mask & ((1 << (i - 1)) - 1);
    let high = mask >> (i - 1);
    low | high << i
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{:?} (k={})", self.support_sets(), self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: usize, support: &[&[usize]]) -> Configuration {
        Configuration::new(k, support).unwrap()
    }

    #[test]
    fn join_examples() {
        let a = c(2, &[&[1], &[1, 2]]);
        let b = c(2, &[&[1, 2]]);
        assert_eq!(a.join(&b).unwrap(), a);
        assert_eq!(a.join(&Configuration::zero(2)).unwrap(), a);
        assert_eq!(a.join(&a).unwrap(), a);
        assert!(a.join(&Configuration::zero(3)).is_err());
    }

    #[test]
    fn delta_sum_examples() {
        let a = c(2, &[&[1], &[1, 2]]);
        let b = c(2, &[&[1, 2]]);
        assert_eq!(
            a.delta_sum(&b, true).unwrap(),
            c(3, &[&[1], &[3], &[1, 2], &[1, 2, 3]])
        );
        let z = Configuration::zero(2);
        assert_eq!(z.delta_sum(&z, false).unwrap(), Configuration::zero(3));
        let one = Configuration::one(2);
        assert_eq!(one.delta_sum(&one, true).unwrap(), Configuration::one(3));
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(
            Configuration::zero(3).restrict(2).unwrap(),
            Configuration::zero(2)
        );
        assert_eq!(c(2, &[&[1], &[1, 2]]).restrict(2).unwrap(), c(1, &[&[1]]));
        assert_eq!(c(2, &[&[2]]).restrict(2).unwrap(), Configuration::zero(1));
        assert_eq!(
            c(3, &[&[3], &[1, 3]]).restrict(2).unwrap(),
            c(2, &[&[2], &[1, 2]])
        );
        assert!(c(2, &[&[2]]).restrict(3).is_err());
    }

    #[test]
    fn cone_examples() {
        let a = c(3, &[&[1], &[2, 3]]);
        assert_eq!(a.cone(mask_of(&[1])).unwrap(), c(3, &[&[1]]));
        assert_eq!(a.cone(a.full_mask()).unwrap(), a);
        assert_eq!(
            Configuration::zero(3).cone(0b101).unwrap(),
            Configuration::zero(3)
        );
        assert_eq!(a.cone(0), Err(ConfigError::EmptySet));
    }

    #[test]
    fn howson_examples() {
        assert!(!c(2, &[&[1, 2]]).is_howson());
        assert!(Configuration::one(3).is_howson());
        assert!(Configuration::zero(3).is_howson());
        assert!(c(2, &[&[1], &[1, 2]]).is_howson());
    }

    #[test]
    fn masks_round_trip() {
        assert_eq!(mask_of(&[1, 3]), 0b101);
        assert_eq!(set_of(0b101), vec![1, 3]);
        assert_eq!(expand_mask(0b11, 2), 0b101);
        assert_eq!(expand_mask(0b11, 3), 0b011);
        assert_eq!(Configuration::all(2).count(), 8);
    }
}
