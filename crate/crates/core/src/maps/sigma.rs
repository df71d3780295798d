//! σ_ℓ: A_ℓ(n) → D_ℓ(n) for even ℓ, merging pairs of equal parts until all
//! parts are distinct; σ_ℓ⁻¹ halves parts divisible by ℓ until none is left.

use super::{MapTrace, Rule, StepOrder};
use crate::constraint::{satisfies, PartitionConstraint};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn require_member(lambda: &Partition, family: PartitionConstraint, name: String) -> Result<()> {
    if satisfies(lambda, &family)? {
        Ok(())
    } else {
        Err(Error::NotInDomain {
            partition: lambda.to_string(),
            domain: name,
        })
    }
}

pub fn sigma(lambda: &Partition, ell: u64) -> Result<(Partition, MapTrace)> {
    sigma_with(lambda, ell, StepOrder::LargestFirst)
}

pub fn sigma_with(lambda: &Partition, ell: u64, order: StepOrder) -> Result<(Partition, MapTrace)> {
    require_member(lambda, PartitionConstraint::SetA(ell), format!("A_{ell}"))?;
    let trace = Rule::Merge { arity: 2 }.run(lambda, order);
    Ok((trace.output.clone(), trace))
}

pub fn sigma_inv(mu: &Partition, ell: u64) -> Result<(Partition, MapTrace)> {
    sigma_inv_with(mu, ell, StepOrder::LargestFirst)
}

pub fn sigma_inv_with(mu: &Partition, ell: u64, order: StepOrder) -> Result<(Partition, MapTrace)> {
    require_member(mu, PartitionConstraint::SetD(ell), format!("D_{ell}"))?;
    let trace = Rule::Split {
        arity: 2,
        modulus: ell,
    }
    .run(mu, order);
    Ok((trace.output.clone(), trace))
}
