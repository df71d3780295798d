//! Declarative partition families.
//!
//! Every family here is *separable*: membership is decided part value by
//! part value, from the value itself and its multiplicity. The enumerator
//! relies on this to prune per part instead of filtering whole partitions.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PartitionConstraint {
    /// Every partition.
    All,
    /// No part divisible by ℓ (ℓ ≥ 2).
    EllRegular(u64),
    /// Each part occurs at most r times (r ≥ 1), the family Q_r.
    MaxMultiplicity(u64),
    /// Distinct parts whose residue modulo `modulus` lies in `residues`.
    DistinctWithAllowedResidues {
        modulus: u64,
        residues: BTreeSet<u64>,
    },
    /// Distinct odd parts not divisible by ℓ.
    DistinctOddNotDivisible(u64),
    /// A_ℓ for even ℓ: the fixed points of the even-case involution.
    ///
    /// For ℓ ≡ 0 (mod 4): distinct odd parts, plus parts ≡ ℓ/2 (mod ℓ) with
    /// even multiplicity. For ℓ ≡ 2 (mod 4): distinct odd parts ≢ ℓ/2
    /// (mod ℓ), plus parts ≡ ℓ/2 (mod ℓ) with any multiplicity.
    SetA(u64),
    /// D_ℓ for even ℓ: distinct parts congruent to 0, 1, 3, …, ℓ−1 mod ℓ.
    SetD(u64),
    /// C_ℓ: distinct odd parts not divisible by ℓ.
    SetC(u64),
}

/// How many copies of a single part value a family admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MultRule {
    Any,
    AtMost(u64),
    Even,
}

impl MultRule {
    pub(crate) fn admits(self, mult: u64) -> bool {
        match self {
            MultRule::Any => true,
            MultRule::AtMost(r) => mult <= r,
            MultRule::Even => mult % 2 == 0,
        }
    }

    pub(crate) fn cap(self) -> u64 {
        match self {
            MultRule::AtMost(r) => r,
            MultRule::Any | MultRule::Even => u64::MAX,
        }
    }
}

impl PartitionConstraint {
    /// D_ℓ expressed through the generic residue family.
    pub fn residue_form_of_set_d(ell: u64) -> Self {
        let mut residues: BTreeSet<u64> = (1..ell).step_by(2).collect();
        residues.insert(0);
        PartitionConstraint::DistinctWithAllowedResidues {
            modulus: ell,
            residues,
        }
    }

    pub fn validate(&self) -> Result<()> {
        use PartitionConstraint::*;
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            All => Ok(()),
            EllRegular(l) if *l < 2 => bad(format!("ℓ-regular needs ℓ ≥ 2, got {l}")),
            MaxMultiplicity(0) => bad("maximum multiplicity must be at least 1".into()),
            DistinctWithAllowedResidues { modulus: 0, .. } => {
                bad("residue modulus must be positive".into())
            }
            DistinctWithAllowedResidues { modulus, residues } => {
                match residues.iter().find(|&&r| r >= *modulus) {
                    Some(r) => bad(format!("residue {r} is not in [0, {modulus})")),
                    None => Ok(()),
                }
            }
            DistinctOddNotDivisible(l) | SetC(l) if *l < 2 => {
                bad(format!("C_ℓ needs ℓ > 1, got {l}"))
            }
            SetA(l) | SetD(l) if *l < 2 || l % 2 != 0 => {
                bad(format!("A_ℓ and D_ℓ need an even ℓ > 1, got {l}"))
            }
            _ => Ok(()),
        }
    }

    /// Whether a single copy of `part` may appear at all.
    pub(crate) fn admits_part(&self, part: u64) -> bool {
        use PartitionConstraint::*;
        match self {
            All | MaxMultiplicity(_) => true,
            EllRegular(l) => part % l != 0,
            DistinctWithAllowedResidues { modulus, residues } => residues.contains(&(part % modulus)),
            DistinctOddNotDivisible(l) | SetC(l) => part % 2 == 1 && part % l != 0,
            SetA(l) => {
                let half = l / 2;
                if half % 2 == 0 {
                    part % 2 == 1 || part % l == half
                } else {
                    part % 2 == 1
                }
            }
            SetD(l) => {
                let r = part % l;
                r == 0 || r % 2 == 1
            }
        }
    }

    pub(crate) fn mult_rule(&self, part: u64) -> MultRule {
        use PartitionConstraint::*;
        match self {
            All | EllRegular(_) => MultRule::Any,
            MaxMultiplicity(r) => MultRule::AtMost(*r),
            DistinctWithAllowedResidues { .. } | DistinctOddNotDivisible(_) | SetC(_) | SetD(_) => {
                MultRule::AtMost(1)
            }
            SetA(l) => {
                let half = l / 2;
                match (part % l == half, half % 2 == 0) {
                    (true, true) => MultRule::Even,
                    (true, false) => MultRule::Any,
                    (false, _) => MultRule::AtMost(1),
                }
            }
        }
    }

    pub(crate) fn admits(&self, part: u64, mult: u64) -> bool {
        self.admits_part(part) && self.mult_rule(part).admits(mult)
    }
}

/// Exact membership of `partition` in the family `constraint`.
pub fn satisfies(partition: &Partition, constraint: &PartitionConstraint) -> Result<bool> {
    constraint.validate()?;
    Ok(partition.iter().all(|(p, m)| constraint.admits(p, m)))
}

pub(crate) fn is_regular(partition: &Partition, ell: u64) -> bool {
    partition.iter().all(|(p, _)| p % ell != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use PartitionConstraint::*;

    fn sat(s: &str, c: PartitionConstraint) -> bool {
        satisfies(&s.parse().unwrap(), &c).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(sat("9^2,7,5,3^3,1", SetA(6)));
        assert!(sat("18,7,6,5,3,1", SetD(6)));
        assert!(sat("5", SetC(3)));
        assert!(!sat("9", SetC(3)));
        assert!(!sat("6,3", EllRegular(3)));
        assert!(sat("5,4,2^3", EllRegular(3)));
    }

    #[test]
    fn set_a_splits_on_ell_mod_four() {
        // ℓ = 8: parts ≡ 4 (mod 8) need even multiplicity
        assert!(sat("12^2,9,7,5,4^4,3", SetA(8)));
        assert!(!sat("12,9,7", SetA(8)));
        assert!(!sat("9^2", SetA(8)));
        assert!(!sat("2^2", SetA(8)));
        // ℓ = 6: parts ≡ 3 (mod 6) any multiplicity, other odd parts distinct
        assert!(sat("9^3,3^5,1", SetA(6)));
        assert!(!sat("5^2", SetA(6)));
        assert!(!sat("4", SetA(6)));
        // ℓ = 2: every odd part, any multiplicity
        assert!(sat("5^2,3^3,1^9", SetA(2)));
    }

    #[test]
    fn set_d_residues() {
        assert!(sat("24,16,9,7,5,3", SetD(8)));
        assert!(!sat("24^2", SetD(8)));
        assert!(!sat("6", SetD(8)));
        assert!(sat("4,3,1", SetD(4)));
        assert!(!sat("2", SetD(4)));
    }

    #[test]
    fn residue_form_matches_set_d() {
        for ell in [2, 4, 6, 8, 10, 12] {
            let generic = PartitionConstraint::residue_form_of_set_d(ell);
            for part in 1..60 {
                for mult in 1..3 {
                    assert_eq!(
                        SetD(ell).admits(part, mult),
                        generic.admits(part, mult),
                        "ℓ={ell} part={part} mult={mult}"
                    );
                }
            }
        }
    }

    #[test]
    fn max_multiplicity() {
        assert!(sat("9,6^2,3,2^2,1", MaxMultiplicity(2)));
        assert!(!sat("2^3", MaxMultiplicity(2)));
        assert!(sat("()", MaxMultiplicity(1)));
    }

    #[test]
    fn malformed_constraints_are_rejected() {
        let e = Partition::empty();
        for c in [
            EllRegular(1),
            MaxMultiplicity(0),
            SetA(3),
            SetD(5),
            SetA(0),
            SetC(1),
            DistinctOddNotDivisible(0),
            DistinctWithAllowedResidues {
                modulus: 4,
                residues: [1, 4].into(),
            },
            DistinctWithAllowedResidues {
                modulus: 0,
                residues: BTreeSet::new(),
            },
        ] {
            assert!(
                matches!(satisfies(&e, &c), Err(Error::InvalidParameter(_))),
                "{c:?}"
            );
        }
    }
}
