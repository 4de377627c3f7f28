//! Subgroup intersections in free groups and in free-times-free-abelian
//! groups `F_n × Z^m`.
//!
//! Module map:
//! - [`words`]: reduced words.
//! - [`stallings`]: Stallings automata, pullbacks and Schreier bases.
//! - [`zlattice`]: exact integer lattices and affine cosets.
//! - [`ftfa`]: subgroup bases, completions and membership.
//! - [`mintersect`]: finite generation and bases of multiple intersections.
//! - [`configs`]: intersection configurations and their realizations.
//! - [`oracle`]: brute-force ball enumeration for testing.
//! - [`json`]: JSON encodings used by the command-line tool.
//! - [`cli`]: the `ftfa-kit` command-line tool.

pub mod cli;
pub mod configs;
pub mod ftfa;
pub mod json;
pub mod mintersect;
pub mod oracle;
pub mod par;
pub mod stallings;
pub mod words;
pub mod zlattice;
