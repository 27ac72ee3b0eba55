use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// Canonical text code of a rooted tree: `*` for a leaf, `(` + sorted child
/// codes + `)` for an internal node.
///
/// Codes compare symbol by symbol with `(` < `*` < `)`, which is the order
/// used for sorting children and for sorting enumeration output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

fn rank(b: u8) -> u8 {
    match b {
        b'(' => 0,
        b'*' => 1,
        b')' => 2,
        other => 3 + other,
    }
}

/// Compares two code strings under the `(` < `*` < `)` symbol order.
pub fn code_cmp(a: &str, b: &str) -> Ordering {
    a.bytes().map(rank).cmp(b.bytes().map(rank))
}

impl CanonicalCode {
    pub(crate) fn leaf() -> Self {
        CanonicalCode("*".to_owned())
    }

    /// Joins already-canonical child codes, sorting them first.
    pub(crate) fn join<'a>(children: impl IntoIterator<Item = &'a str>) -> Self {
        let mut kids: Vec<&str> = children.into_iter().collect();
        kids.sort_by(|a, b| code_cmp(a, b));
        let len = 2 + kids.iter().map(|k| k.len()).sum::<usize>();
        let mut s = String::with_capacity(len);
        s.push('(');
        for k in kids {
            s.push_str(k);
        }
        s.push(')');
        CanonicalCode(s)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for CanonicalCode {
    fn cmp(&self, other: &Self) -> Ordering {
        code_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for CanonicalCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for CanonicalCode {
    fn as_ref(&self) -> &str {
        &self.0
    }
}
