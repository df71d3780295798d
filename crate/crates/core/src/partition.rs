//! Integer partitions stored as a part → multiplicity map.
//!
//! The literal syntax follows the exponent notation used throughout the
//! literature: `5,4,3^2,2^2,1` is the partition (5, 4, 3, 3, 2, 2, 1) and
//! `()` is the empty partition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on the weight accepted by enumeration, counting and series
/// construction.
pub const MAX_WEIGHT: u64 = 100_000;

/// A partition of a nonnegative integer.
///
/// Zero multiplicities are never stored, so two partitions are equal exactly
/// when they have the same parts with the same multiplicities.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: BTreeMap<u64, u64>,
}

impl Partition {
    /// The empty partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from a flat list of parts in any order.
    pub fn from_parts<I: IntoIterator<Item = u64>>(parts: I) -> Result<Self> {
        Self::from_multiplicities(parts.into_iter().map(|p| (p, 1)))
    }

    /// Builds a partition from `(part, multiplicity)` pairs; repeated parts
    /// accumulate.
    pub fn from_multiplicities<I: IntoIterator<Item = (u64, u64)>>(pairs: I) -> Result<Self> {
        let mut out = Self::empty();
        for (part, mult) in pairs {
            if part == 0 || mult == 0 {
                return Err(Error::ZeroEntry);
            }
            out.add(part, mult);
        }
        out.checked_weight()?;
        Ok(out)
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.parts.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.parts.iter().rev().map(|(&p, &m)| (p, m))
    }

    /// The flat nonincreasing sequence of parts.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
    }

    /// Number of distinct part values.
    pub fn distinct_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts, Σ part·multiplicity.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|(&p, &m)| p * m).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.parts.values().sum()
    }

    pub fn largest_part(&self) -> Option<u64> {
        self.parts.keys().next_back().copied()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.parts.values().copied().max().unwrap_or(0)
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.values().all(|&m| m == 1)
    }

    /// Multiset union of the parts of `self` and `other`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add(p, m);
        }
        out
    }

    pub(crate) fn add(&mut self, part: u64, mult: u64) {
        debug_assert!(part > 0 && mult > 0);
        *self.parts.entry(part).or_insert(0) += mult;
    }

    /// Removes `mult` copies of `part`; the caller guarantees they exist.
    pub(crate) fn remove(&mut self, part: u64, mult: u64) {
        let entry = self
            .parts
            .get_mut(&part)
            .expect("removing a part that is not present");
        assert!(*entry >= mult, "removing more copies than present");
        *entry -= mult;
        if *entry == 0 {
            self.parts.remove(&part);
        }
    }

    fn checked_weight(&self) -> Result<u64> {
        let mut total: u64 = 0;
        for (&p, &m) in &self.parts {
            total = p
                .checked_mul(m)
                .and_then(|w| total.checked_add(w))
                .filter(|&w| w <= MAX_WEIGHT)
                .ok_or(Error::WeightLimit { limit: MAX_WEIGHT })?;
        }
        Ok(total)
    }
}

/// Lexicographic order on the nonincreasing part sequences, so
/// `(4,1^6) > (2^2,1^6)` and `(2,1^8) > (1^10)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts().cmp(other.parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        for (i, (p, m)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a partition literal: `()` or `term ("," term)*` with
/// `term := INT ("^" INT)?` and strictly decreasing part values.
/// ASCII whitespace is ignored.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let compact: Vec<(usize, u8)> = text
        .bytes()
        .enumerate()
        .filter(|(_, b)| !b.is_ascii_whitespace())
        .collect();
    let bytes: Vec<u8> = compact.iter().map(|&(_, b)| b).collect();
    let pos_of = |i: usize| compact.get(i).map_or(text.len(), |&(p, _)| p);

    if bytes.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty literal (write \"()\" for the empty partition)".into(),
        });
    }
    if bytes == b"()" {
        return Ok(Partition::empty());
    }

    let mut out = Partition::empty();
    let mut prev: Option<u64> = None;
    let mut i = 0;
    loop {
        let (part, next) = read_int(&bytes, i).ok_or_else(|| Error::Syntax {
            pos: pos_of(i),
            msg: "expected a part".into(),
        })?;
        i = next;
        let mut mult = 1;
        if bytes.get(i) == Some(&b'^') {
            let (m, next) = read_int(&bytes, i + 1).ok_or_else(|| Error::Syntax {
                pos: pos_of(i + 1),
                msg: "expected a multiplicity after '^'".into(),
            })?;
            mult = m;
            i = next;
        }
        if part == 0 || mult == 0 {
            return Err(Error::ZeroEntry);
        }
        if let Some(prev) = prev {
            if part >= prev {
                return Err(Error::NotDecreasing { prev, next: part });
            }
        }
        prev = Some(part);
        out.add(part, mult);
        out.checked_weight()?;

        match bytes.get(i) {
            None => break,
            Some(b',') => i += 1,
            Some(&c) => {
                return Err(Error::Syntax {
                    pos: pos_of(i),
                    msg: format!("unexpected character {:?}", c as char),
                })
            }
        }
    }
    Ok(out)
}

fn read_int(bytes: &[u8], start: usize) -> Option<(u64, usize)> {
    let end = bytes[start.min(bytes.len())..]
        .iter()
        .position(|b| !b.is_ascii_digit())
        .map_or(bytes.len(), |off| start + off);
    if end == start {
        return None;
    }
    let digits = std::str::from_utf8(&bytes[start..end]).ok()?;
    digits.parse().ok().map(|v| (v, end))
}

/// Canonical literal for `partition`; `()` when empty.
pub fn format_partition(partition: &Partition) -> String {
    partition.to_string()
}

pub fn weight(partition: &Partition) -> u64 {
    partition.weight()
}

pub fn length(partition: &Partition) -> u64 {
    partition.length()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parses_exponent_notation() {
        let lambda = p("5,4,3^2,2^2,1");
        assert_eq!(lambda.multiplicity(3), 2);
        assert_eq!(lambda.multiplicity(2), 2);
        assert_eq!(lambda.multiplicity(5), 1);
        assert_eq!(lambda.distinct_parts(), 5);
        assert_eq!(lambda.weight(), 20);
        assert_eq!(lambda.length(), 7);
        assert_eq!(p("7"), Partition::from_parts([7]).unwrap());
    }

    #[test]
    fn rejects_bad_literals() {
        assert_eq!(
            parse_partition("3,5"),
            Err(Error::NotDecreasing { prev: 3, next: 5 })
        );
        assert_eq!(
            parse_partition("3,3"),
            Err(Error::NotDecreasing { prev: 3, next: 3 })
        );
        assert_eq!(parse_partition("3,0"), Err(Error::ZeroEntry));
        assert_eq!(parse_partition("3^0"), Err(Error::ZeroEntry));
        for bad in ["", "3,", ",3", "3^", "a", "3;2", "(3,2)", "3^2^2", "-1"] {
            assert!(
                matches!(parse_partition(bad), Err(Error::Syntax { .. })),
                "{bad:?} should be a syntax error"
            );
        }
        assert!(matches!(
            parse_partition("100001"),
            Err(Error::WeightLimit { .. })
        ));
        assert!(matches!(
            parse_partition("99999999999999999999999"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(p(" 5, 3 ^2 ,1 "), p("5,3^2,1"));
        assert_eq!(p(" ( ) "), Partition::empty());
    }

    #[test]
    fn formats_canonically() {
        let lambda = Partition::from_multiplicities([(5, 1), (3, 2), (2, 4), (1, 1)]).unwrap();
        assert_eq!(format_partition(&lambda), "5,3^2,2^4,1");
        assert_eq!(format_partition(&Partition::empty()), "()");
        let mu = Partition::from_multiplicities([(2, 8), (1, 13)]).unwrap();
        assert_eq!(mu.to_string(), "2^8,1^13");
        assert_eq!(mu.weight(), 29);
        assert_eq!(mu.length(), 21);
        assert_eq!(p("5^1,2^1").to_string(), "5,2");
    }

    #[test]
    fn empty_partition_stats() {
        let e = p("()");
        assert_eq!(e.weight(), 0);
        assert_eq!(e.length(), 0);
        assert_eq!(e.largest_part(), None);
        assert_eq!(e.max_multiplicity(), 0);
    }

    #[test]
    fn lexicographic_order() {
        assert!(p("4,1^6") > p("2^2,1^6"));
        assert!(p("2,1^8") > p("1^10"));
        assert!(p("4,2,1^4") > p("2^3,1^4"));
        assert!(p("5,2,1^3") > p("5,1^5"));
        assert!(p("3") > p("2,1"));
    }

    #[test]
    fn remove_drops_empty_entries() {
        let mut lambda = p("3^2,1");
        lambda.remove(3, 2);
        assert_eq!(lambda, p("1"));
        assert_eq!(lambda.distinct_parts(), 1);
    }

    #[test]
    fn flat_parts_are_nonincreasing() {
        let parts: Vec<u64> = p("4,2^3,1").parts().collect();
        assert_eq!(parts, vec![4, 2, 2, 2, 1]);
    }
}
