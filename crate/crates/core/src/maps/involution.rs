//! The sign-reversing involutions ψ_ℓ on ℓ-regular partitions.
//!
//! Both variants pick between merging two copies of the statistic `t` and
//! splitting one copy of the statistic `e`; they differ only in how `e` and
//! `t` are defined. Each application changes the length by exactly one.

use serde::Serialize;

use crate::constraint::is_regular;
use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    /// 2t > e: two copies of t become one part 2t.
    MergeCase,
    /// 2t ≤ e: the part e becomes two copies of e/2.
    SplitCase,
}

impl CaseLabel {
    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::MergeCase => "MergeCase",
            CaseLabel::SplitCase => "SplitCase",
        }
    }
}

fn require_ell(ell: u64, even: bool) -> Result<()> {
    let ok = ell > 1 && (ell % 2 == 0) == even;
    if ok {
        Ok(())
    } else {
        let kind = if even { "even" } else { "odd" };
        Err(Error::InvalidParameter(format!("ℓ must be an {kind} integer > 1, got {ell}")))
    }
}

fn require_regular(lambda: &Partition, ell: u64) -> Result<()> {
    if is_regular(lambda, ell) {
        Ok(())
    } else {
        Err(Error::NotInDomain {
            partition: lambda.to_string(),
            domain: format!("B_{ell} (some part is divisible by {ell})"),
        })
    }
}

fn largest(lambda: &Partition, pred: impl Fn(u64, u64) -> bool) -> u64 {
    lambda
        .iter()
        .find(|&(p, m)| pred(p, m))
        .map_or(0, |(p, _)| p)
}

/// Even ℓ: largest even part with odd multiplicity, or 0.
pub fn stat_e_even(lambda: &Partition, ell: u64) -> Result<u64> {
    require_ell(ell, true)?;
    require_regular(lambda, ell)?;
    Ok(largest(lambda, |p, m| p % 2 == 0 && m % 2 == 1))
}

/// Even ℓ: largest repeated part not congruent to ℓ/2 mod ℓ, or 0.
pub fn stat_t_even(lambda: &Partition, ell: u64) -> Result<u64> {
    require_ell(ell, true)?;
    require_regular(lambda, ell)?;
    Ok(largest(lambda, |p, m| m >= 2 && p % ell != ell / 2))
}

/// Odd ℓ: largest even part occurring exactly once, or 0.
pub fn stat_e_odd(lambda: &Partition, ell: u64) -> Result<u64> {
    require_ell(ell, false)?;
    require_regular(lambda, ell)?;
    Ok(largest(lambda, |p, m| p % 2 == 0 && m == 1))
}

/// Odd ℓ: largest repeated part, or 0.
pub fn stat_t_odd(lambda: &Partition, ell: u64) -> Result<u64> {
    require_ell(ell, false)?;
    require_regular(lambda, ell)?;
    Ok(largest(lambda, |_, m| m >= 2))
}

/// The pair (e, t) for either parity of ℓ.
pub fn statistics(lambda: &Partition, ell: u64) -> Result<(u64, u64)> {
    if ell % 2 == 0 {
        Ok((stat_e_even(lambda, ell)?, stat_t_even(lambda, ell)?))
    } else {
        Ok((stat_e_odd(lambda, ell)?, stat_t_odd(lambda, ell)?))
    }
}

/// Whether λ lies in B′_ℓ, the domain of ψ_ℓ (some statistic is nonzero).
pub fn in_involution_domain(lambda: &Partition, ell: u64) -> Result<bool> {
    let (e, t) = statistics(lambda, ell)?;
    Ok(e != 0 || t != 0)
}

fn apply(lambda: &Partition, ell: u64, e: u64, t: u64) -> Result<(Partition, CaseLabel)> {
    if e == 0 && t == 0 {
        return Err(Error::NotInDomain {
            partition: lambda.to_string(),
            domain: format!("B′_{ell} (both statistics are zero, a fixed point)"),
        });
    }
    let mut out = lambda.clone();
    if 2 * t > e {
        out.remove(t, 2);
        out.add(2 * t, 1);
        Ok((out, CaseLabel::MergeCase))
    } else {
        out.remove(e, 1);
        out.add(e / 2, 2);
        Ok((out, CaseLabel::SplitCase))
    }
}

/// ψ_ℓ for even ℓ.
pub fn psi_even(lambda: &Partition, ell: u64) -> Result<(Partition, CaseLabel)> {
    let e = stat_e_even(lambda, ell)?;
    let t = stat_t_even(lambda, ell)?;
    apply(lambda, ell, e, t)
}

/// ψ_ℓ for odd ℓ.
pub fn psi_odd(lambda: &Partition, ell: u64) -> Result<(Partition, CaseLabel)> {
    let e = stat_e_odd(lambda, ell)?;
    let t = stat_t_odd(lambda, ell)?;
    apply(lambda, ell, e, t)
}

/// ψ_ℓ, choosing the variant from the parity of ℓ.
pub fn psi(lambda: &Partition, ell: u64) -> Result<(Partition, CaseLabel)> {
    if ell % 2 == 0 {
        psi_even(lambda, ell)
    } else {
        psi_odd(lambda, ell)
    }
}
