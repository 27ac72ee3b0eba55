//! Explicit series-reduced trees: construction, canonical codes, text form
//! and isomorphism-free enumeration.
//!
//! Enumeration is the brute-force counterpart of [`crate::counting`]. Rooted
//! trees are built partition by partition from multisets of smaller trees.
//! Unrooted trees are obtained independently of any centroid argument: every
//! tree with `n >= 2` tips is a rooted tree with `n - 1` leaves plus one extra
//! tip hung on its root, so all such candidates are generated and then
//! deduplicated by canonical code.

mod code;
mod parse;
mod rooted;
mod unrooted;

use std::collections::BTreeMap;

use itertools::Itertools;

pub use code::{code_cmp, CanonicalCode};
pub use parse::{parse, parse_unrooted, serialize, serialize_unrooted};
pub use rooted::{canonical_code, RootedTree};
pub use unrooted::{
    leaf_centroid, unrooted_canonical_code, Centroid, CentroidCandidates, UnrootedTree,
};

use crate::partitions::{conv_part, partitions_of};
use crate::{Error, Result};

/// Default largest tip count accepted by [`Enumerator`].
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10;

/// Generates trees up to a tip-count guard, caching rooted trees by size.
#[derive(Debug, Clone)]
pub struct Enumerator {
    limit: usize,
    rooted: Vec<Vec<RootedTree>>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self::new(DEFAULT_ENUMERATION_LIMIT)
    }
}

impl Enumerator {
    pub fn new(limit: usize) -> Self {
        Enumerator {
            limit,
            rooted: vec![Vec::new()],
        }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::domain("n", 1, 0));
        }
        if n > self.limit {
            return Err(Error::GuardExceeded {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    /// One rooted tree per isomorphism class with `n` leaves, sorted by code.
    pub fn rooted(&mut self, n: usize) -> Result<&[RootedTree]> {
        self.check(n)?;
        while self.rooted.len() <= n {
            let k = self.rooted.len();
            let trees = self.build_rooted(k);
            self.rooted.push(trees);
        }
        Ok(&self.rooted[n])
    }

    fn build_rooted(&self, n: usize) -> Vec<RootedTree> {
        if n == 1 {
            return vec![RootedTree::leaf()];
        }
        let mut out = Vec::new();
        for p in partitions_of(n).expect("n >= 1").filter(|p| p.len() >= 2) {
            // for each distinct part a multiset of trees of that size
            let choices: Vec<Vec<Vec<RootedTree>>> = conv_part(&p)
                .entries()
                .iter()
                .map(|&(part, mult)| {
                    self.rooted[part]
                        .iter()
                        .cloned()
                        .combinations_with_replacement(mult)
                        .collect()
                })
                .collect();
            for pick in choices.iter().multi_cartesian_product() {
                let children = pick.into_iter().flatten().cloned().collect();
                out.push(RootedTree::node(children).expect("at least two parts"));
            }
        }
        out.sort_by(|a, b| a.canonical_code().cmp(b.canonical_code()));
        out
    }

    /// One unrooted tree per homeomorphism class with `n` tips, sorted by
    /// unrooted canonical code.
    pub fn unrooted(&mut self, n: usize) -> Result<Vec<UnrootedTree>> {
        self.check(n)?;
        if n == 1 {
            return Ok(vec![UnrootedTree::single_vertex()]);
        }
        let mut classes = BTreeMap::new();
        for t in self.rooted(n - 1)? {
            let planted = RootedTree::node(vec![t.clone(), RootedTree::leaf()])?;
            let candidate = UnrootedTree::from_rooted(&planted);
            classes
                .entry(candidate.canonical_code())
                .or_insert(candidate);
        }
        Ok(classes.into_values().collect())
    }
}

pub fn generate_rooted(n: usize) -> Result<Vec<RootedTree>> {
    Enumerator::default().rooted(n).map(<[_]>::to_vec)
}

pub fn generate_unrooted(n: usize) -> Result<Vec<UnrootedTree>> {
    Enumerator::default().unrooted(n)
}
