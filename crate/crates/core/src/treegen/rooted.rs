use std::fmt;

use super::code::CanonicalCode;
use crate::{Error, Result};

/// A rooted tree in which every internal node has at least two children.
///
/// Children are kept sorted by canonical code, and the code of every node is
/// computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    children: Vec<RootedTree>,
    leaves: usize,
    code: CanonicalCode,
}

impl RootedTree {
    pub fn leaf() -> Self {
        RootedTree {
            children: Vec::new(),
            leaves: 1,
            code: CanonicalCode::leaf(),
        }
    }

    /// An internal node over `children`, given in any order.
    pub fn node(mut children: Vec<RootedTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::InvalidTree(format!(
                "internal node with {} child(ren)",
                children.len()
            )));
        }
        children.sort_by(|a, b| a.code.cmp(&b.code));
        let code = CanonicalCode::join(children.iter().map(|c| c.code.as_str()));
        let leaves = children.iter().map(|c| c.leaves).sum();
        Ok(RootedTree {
            children,
            leaves,
            code,
        })
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves
    }

    pub fn internal_count(&self) -> usize {
        if self.is_leaf() {
            0
        } else {
            1 + self
                .children
                .iter()
                .map(|c| c.internal_count())
                .sum::<usize>()
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.leaves + self.internal_count()
    }

    pub fn canonical_code(&self) -> &CanonicalCode {
        &self.code
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.code.fmt(f)
    }
}

pub fn canonical_code(t: &RootedTree) -> CanonicalCode {
    t.code.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_codes() {
        let leaf = RootedTree::leaf();
        assert_eq!(leaf.canonical_code().as_str(), "*");
        let cherry = RootedTree::node(vec![leaf.clone(), leaf.clone()]).unwrap();
        assert_eq!(cherry.canonical_code().as_str(), "(**)");
        let t = RootedTree::node(vec![leaf.clone(), cherry.clone(), leaf.clone()]).unwrap();
        assert_eq!(t.canonical_code().as_str(), "((**)**)");
        assert_eq!(t.leaf_count(), 4);
        assert_eq!(t.internal_count(), 2);
        assert_eq!(t.canonical_code().len(), 2 * 2 + 4);
    }

    #[test]
    fn single_child_rejected() {
        assert!(RootedTree::node(vec![RootedTree::leaf()]).is_err());
        assert!(RootedTree::node(vec![]).is_err());
    }
}
