//! Integer partitions and the part-multiplicity view used by the counting
//! recursions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A partition of `n`: positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("number of parts", 1, 0));
        }
        if parts.contains(&0) {
            return Err(Error::domain("partition part", 1, 0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest_part(&self) -> usize {
        self.parts[0]
    }
}

/// Distinct parts in increasing order, each with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartMultiplicity {
    entries: Vec<(usize, usize)>,
}

impl PartMultiplicity {
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.iter().map(|&(part, mult)| part * mult).sum()
    }

    /// Expands back into the weakly decreasing list of parts.
    pub fn expand(&self) -> Partition {
        let parts = self
            .entries
            .iter()
            .rev()
            .flat_map(|&(part, mult)| std::iter::repeat_n(part, mult))
            .collect();
        Partition { parts }
    }
}

/// Groups equal parts, scanning from the smallest part upwards.
pub fn conv_part(p: &Partition) -> PartMultiplicity {
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for &part in p.parts.iter().rev() {
        match entries.last_mut() {
            Some((last, mult)) if *last == part => *mult += 1,
            _ => entries.push((part, 1)),
        }
    }
    PartMultiplicity { entries }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// starting from `[n]` and ending at `[1, 1, ..., 1]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Partition {
                parts: self.current.clone(),
            });
        }
        // Rightmost part greater than one; everything after it is a 1.
        let Some(idx) = self.current.iter().rposition(|&x| x > 1) else {
            self.done = true;
            return None;
        };
        let ones = self.current.len() - idx - 1;
        let k = self.current[idx] - 1;
        let mut rest = ones + 1;
        self.current.truncate(idx);
        self.current.push(k);
        while rest >= k {
            self.current.push(k);
            rest -= k;
        }
        if rest > 0 {
            self.current.push(rest);
        }
        Some(Partition {
            parts: self.current.clone(),
        })
    }
}

pub fn partitions_of(n: usize) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::domain("n", 1, 0));
    }
    Ok(Partitions {
        current: vec![n],
        started: false,
        done: false,
    })
}

/// Number of `m`-element multisets drawn from `t` types, `C(t + m - 1, m)`.
///
/// `m = 0` gives 1 (the empty multiset).
pub fn multiset_coefficient(t: &BigUint, m: usize) -> BigUint {
    // After step i the accumulator is C(t + i, i + 1), so every division is exact.
    let mut acc = BigUint::one();
    for i in 0..m {
        acc *= t + BigUint::from(i);
        acc /= BigUint::from(i + 1);
        if acc.is_zero() {
            break;
        }
    }
    acc
}
