//! Glaisher's bijection φ_r: Q_r(n) → B_{r+1}(n).
//!
//! φ_r splits each multiple of r+1 into r+1 equal parts until none is left;
//! φ_r⁻¹ merges r+1 equal parts until every multiplicity is at most r. Each
//! split adds r parts, so for even r the length parity is preserved.

use super::{MapTrace, Rule, StepOrder};
use crate::error::{Error, Result};
use crate::partition::Partition;

fn require_r(r: u64) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParameter("r must be a positive integer".into()))
    } else {
        Ok(())
    }
}

pub fn glaisher_phi(lambda: &Partition, r: u64) -> Result<(Partition, MapTrace)> {
    glaisher_phi_with(lambda, r, StepOrder::LargestFirst)
}

pub fn glaisher_phi_with(lambda: &Partition, r: u64, order: StepOrder) -> Result<(Partition, MapTrace)> {
    require_r(r)?;
    if lambda.max_multiplicity() > r {
        return Err(Error::NotInDomain {
            partition: lambda.to_string(),
            domain: format!("Q_{r} (some part occurs more than {r} times)"),
        });
    }
    let trace = Rule::Split {
        arity: r + 1,
        modulus: r + 1,
    }
    .run(lambda, order);
    Ok((trace.output.clone(), trace))
}

pub fn glaisher_phi_inv(mu: &Partition, r: u64) -> Result<(Partition, MapTrace)> {
    glaisher_phi_inv_with(mu, r, StepOrder::LargestFirst)
}

pub fn glaisher_phi_inv_with(mu: &Partition, r: u64, order: StepOrder) -> Result<(Partition, MapTrace)> {
    require_r(r)?;
    if let Some((p, _)) = mu.iter().find(|&(p, _)| p % (r + 1) == 0) {
        return Err(Error::NotInDomain {
            partition: mu.to_string(),
            domain: format!("B_{} ({p} is divisible by {})", r + 1, r + 1),
        });
    }
    let trace = Rule::Merge { arity: r + 1 }.run(mu, order);
    Ok((trace.output.clone(), trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn chain(trace: &MapTrace) -> Vec<String> {
        trace.rounds.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn phi_two_chain() {
        let (out, trace) = glaisher_phi(&p("9,6^2,3,2^2,1"), 2).unwrap();
        assert_eq!(out, p("2^8,1^13"));
        assert_eq!(chain(&trace), ["9,6^2,3,2^2,1", "3^3,2^8,1^4", "2^8,1^13"]);
        assert_eq!(trace.steps.len(), 7);
        assert!(trace.steps.iter().all(|s| s.result.weight() == 29));
    }

    #[test]
    fn phi_two_inverse_chain() {
        let (out, trace) = glaisher_phi_inv(&p("2^8,1^13"), 2).unwrap();
        assert_eq!(out, p("9,6^2,3,2^2,1"));
        assert_eq!(chain(&trace), ["2^8,1^13", "6^2,3^4,2^2,1", "9,6^2,3,2^2,1"]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(glaisher_phi(&p("5,4,1"), 2).unwrap().0, p("5,4,1"));
        assert_eq!(glaisher_phi_inv(&p("5,4,1"), 2).unwrap().0, p("5,4,1"));
        assert_eq!(glaisher_phi(&p("4"), 1).unwrap().0, p("1^4"));
        assert_eq!(glaisher_phi_inv(&p("1^4"), 1).unwrap().0, p("4"));
        let (_, trace) = glaisher_phi(&p("4"), 1).unwrap();
        assert_eq!(chain(&trace), ["4", "2^2", "1^4"]);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(glaisher_phi(&p("2^3"), 2), Err(Error::NotInDomain { .. })));
        assert!(matches!(glaisher_phi_inv(&p("3"), 2), Err(Error::NotInDomain { .. })));
        assert!(matches!(glaisher_phi(&p("1"), 0), Err(Error::InvalidParameter(_))));
    }
}
