//! Exhaustive generation of constrained partitions.
//!
//! [`enumerate_partitions`] is a lazy stream in reverse-lexicographic order.
//! [`tally_lengths`] walks every admissible partition of weight ≤ N once and
//! records (weight, length parity) counts without materialising partitions;
//! the counting module uses it as its enumeration method.

use crate::constraint::PartitionConstraint;
use crate::error::{Error, Result};
use crate::partition::{Partition, MAX_WEIGHT};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Lazy stream of the partitions of `n` satisfying a constraint.
///
/// Partitions come out largest first in lexicographic order of their part
/// sequences, e.g. `4`, `3,1`, `2^2`, `2,1^2`, `1^4` for n = 4.
#[derive(Debug, Clone)]
pub struct PartitionStream {
    constraint: PartitionConstraint,
    n: u64,
    chosen: Vec<(u64, u64)>,
    rem: u64,
    state: State,
}

pub fn enumerate_partitions(n: u64, constraint: &PartitionConstraint) -> Result<PartitionStream> {
    constraint.validate()?;
    check_weight(n)?;
    Ok(PartitionStream {
        constraint: constraint.clone(),
        n,
        chosen: Vec::new(),
        rem: n,
        state: State::Fresh,
    })
}

pub(crate) fn check_weight(n: u64) -> Result<()> {
    if n > MAX_WEIGHT {
        Err(Error::WeightLimit { limit: MAX_WEIGHT })
    } else {
        Ok(())
    }
}

impl PartitionStream {
    fn bound(&self) -> u64 {
        self.chosen.last().map_or(self.n, |&(p, _)| p - 1)
    }

    /// First admissible `(part, mult)` at the current depth, strictly after
    /// `after` in (part desc, mult desc) order.
    fn next_choice(&self, after: Option<(u64, u64)>) -> Option<(u64, u64)> {
        let rem = self.rem;
        let (mut part, mut mult_start) = match after {
            None => (self.bound().min(rem), None),
            Some((p, m)) if m > 1 => (p, Some(m - 1)),
            Some((p, _)) => (p - 1, None),
        };
        while part >= 1 {
            if self.constraint.admits_part(part) {
                let rule = self.constraint.mult_rule(part);
                let mut hi = (rem / part).min(rule.cap());
                if let Some(start) = mult_start {
                    hi = hi.min(start);
                }
                if let Some(m) = (1..=hi).rev().find(|&m| rule.admits(m)) {
                    return Some((part, m));
                }
            }
            mult_start = None;
            part -= 1;
        }
        None
    }

    fn push(&mut self, choice: (u64, u64)) {
        self.rem -= choice.0 * choice.1;
        self.chosen.push(choice);
    }

    fn backtrack(&mut self) -> bool {
        while let Some((p, m)) = self.chosen.pop() {
            self.rem += p * m;
            if let Some(choice) = self.next_choice(Some((p, m))) {
                self.push(choice);
                return true;
            }
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.rem > 0 {
            match self.next_choice(None) {
                Some(choice) => self.push(choice),
                None => {
                    if !self.backtrack() {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn snapshot(&self) -> Partition {
        let mut out = Partition::empty();
        for &(p, m) in &self.chosen {
            out.add(p, m);
        }
        out
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let found = match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.fill()
            }
            State::Running => self.backtrack() && self.fill(),
        };
        if found {
            Some(self.snapshot())
        } else {
            self.state = State::Done;
            None
        }
    }
}

/// Counts of admissible partitions by weight, split by length parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTally {
    pub even: Vec<u64>,
    pub odd: Vec<u64>,
}

impl LengthTally {
    pub fn max_n(&self) -> u64 {
        self.even.len() as u64 - 1
    }

    pub fn total(&self, n: u64) -> u64 {
        self.even[n as usize] + self.odd[n as usize]
    }

    /// even − odd at weight n.
    pub fn signed(&self, n: u64) -> i64 {
        self.even[n as usize] as i64 - self.odd[n as usize] as i64
    }
}

/// Walks every partition of weight ≤ `max_n` admitted by `constraint`.
pub fn tally_lengths(max_n: u64, constraint: &PartitionConstraint) -> Result<LengthTally> {
    constraint.validate()?;
    check_weight(max_n)?;
    let size = max_n as usize + 1;
    let mut tally = LengthTally {
        even: vec![0; size],
        odd: vec![0; size],
    };
    walk(constraint, max_n, 0, 0, max_n, &mut tally);
    Ok(tally)
}

fn walk(
    constraint: &PartitionConstraint,
    max_n: u64,
    weight: u64,
    length: u64,
    bound: u64,
    tally: &mut LengthTally,
) {
    if length % 2 == 0 {
        tally.even[weight as usize] += 1;
    } else {
        tally.odd[weight as usize] += 1;
    }
    let room = max_n - weight;
    for part in 1..=bound.min(room) {
        if !constraint.admits_part(part) {
            continue;
        }
        let rule = constraint.mult_rule(part);
        for mult in 1..=(room / part).min(rule.cap()) {
            if rule.admits(mult) {
                walk(constraint, max_n, weight + part * mult, length + mult, part - 1, tally);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PartitionConstraint::*;

    fn lits(n: u64, c: PartitionConstraint) -> Vec<String> {
        enumerate_partitions(n, &c)
            .unwrap()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn reverse_lexicographic_order() {
        assert_eq!(lits(4, All), ["4", "3,1", "2^2", "2,1^2", "1^4"]);
        assert_eq!(lits(6, SetC(3)), ["5,1"]);
        assert_eq!(lits(5, MaxMultiplicity(1)), ["5", "4,1", "3,2"]);
    }

    #[test]
    fn zero_weight_yields_the_empty_partition() {
        assert_eq!(lits(0, All), ["()"]);
        assert_eq!(lits(0, SetD(4)), ["()"]);
    }

    #[test]
    fn infeasible_weights_yield_nothing() {
        assert!(lits(2, SetC(3)).is_empty());
        assert!(lits(3, SetA(8)).iter().eq(["3"].iter()));
        assert!(lits(2, SetA(8)).is_empty());
        assert!(lits(7, EllRegular(2)).len() == 5);
    }

    #[test]
    fn set_a_even_multiplicity() {
        // 4 ≡ ℓ/2 (mod 8) must appear an even number of times
        assert_eq!(lits(8, SetA(8)), ["7,1", "5,3", "4^2"]);
    }

    #[test]
    fn stream_is_fused() {
        let mut s = enumerate_partitions(1, &All).unwrap();
        assert!(s.next().is_some());
        assert!(s.next().is_none());
        assert!(s.next().is_none());
    }

    #[test]
    fn tally_matches_stream() {
        let cs = [All, EllRegular(3), MaxMultiplicity(2), SetA(6), SetA(8), SetD(6), SetC(5)];
        for c in cs {
            let t = tally_lengths(18, &c).unwrap();
            for n in 0..=18 {
                let (mut even, mut odd) = (0, 0);
                for p in enumerate_partitions(n, &c).unwrap() {
                    if p.length() % 2 == 0 {
                        even += 1
                    } else {
                        odd += 1
                    }
                }
                assert_eq!((t.even[n as usize], t.odd[n as usize]), (even, odd), "{c:?} n={n}");
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(enumerate_partitions(4, &EllRegular(1)).is_err());
        assert!(enumerate_partitions(MAX_WEIGHT + 1, &All).is_err());
        assert!(tally_lengths(4, &SetD(3)).is_err());
    }
}
