//! Constructive maps on partitions.
//!
//! - [`involution`]: the length-parity reversing involutions ψ_ℓ and the
//!   statistics e_ℓ, t_ℓ that drive them
//! - [`sigma`]: the bijection σ_ℓ between A_ℓ(n) and D_ℓ(n) (even ℓ)
//! - [`glaisher`]: Glaisher's bijection φ_r between Q_r(n) and B_{r+1}(n)
//!
//! σ and φ are "repeat until stuck" rewrite procedures. They are run by a
//! small engine that records every atomic step in a [`MapTrace`] together
//! with the round-by-round chain, where one round rewrites every applicable
//! part of the current partition at once.

pub mod glaisher;
pub mod involution;
pub mod sigma;

use serde::Serialize;

use crate::partition::Partition;

pub use glaisher::{glaisher_phi, glaisher_phi_inv, glaisher_phi_inv_with, glaisher_phi_with};
pub use involution::{
    in_involution_domain, psi, psi_even, psi_odd, stat_e_even, stat_e_odd, stat_t_even,
    stat_t_odd, statistics, CaseLabel,
};
pub use sigma::{sigma, sigma_inv, sigma_inv_with, sigma_with};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    Merge,
    Split,
}

/// One atomic rewrite: `action` applied to the part value `part`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub action: Action,
    pub part: u64,
    pub result: Partition,
}

/// Which applicable part an atomic step rewrites next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StepOrder {
    #[default]
    LargestFirst,
    SmallestFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapTrace {
    pub initial: Partition,
    pub steps: Vec<Step>,
    pub output: Partition,
    /// `initial`, then the partition after each full round.
    pub rounds: Vec<Partition>,
}

/// A rewrite rule applied until no part qualifies.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Rule {
    /// `arity` copies of p become one part `arity·p`.
    Merge { arity: u64 },
    /// One part p with `modulus | p` becomes `arity` copies of p/arity.
    Split { arity: u64, modulus: u64 },
}

impl Rule {
    fn action(self) -> Action {
        match self {
            Rule::Merge { .. } => Action::Merge,
            Rule::Split { .. } => Action::Split,
        }
    }

    fn applies(self, part: u64, mult: u64) -> bool {
        match self {
            Rule::Merge { arity } => mult >= arity,
            Rule::Split { modulus, .. } => part % modulus == 0,
        }
    }

    /// Applies the rule `times` times to part value `part`.
    fn rewrite(self, lambda: &mut Partition, part: u64, times: u64) {
        match self {
            Rule::Merge { arity } => {
                lambda.remove(part, arity * times);
                lambda.add(part * arity, times);
            }
            Rule::Split { arity, .. } => {
                lambda.remove(part, times);
                lambda.add(part / arity, arity * times);
            }
        }
    }

    fn pick(self, lambda: &Partition, order: StepOrder) -> Option<u64> {
        let mut candidates = lambda.iter().filter(|&(p, m)| self.applies(p, m));
        match order {
            StepOrder::LargestFirst => candidates.next().map(|(p, _)| p),
            StepOrder::SmallestFirst => candidates.last().map(|(p, _)| p),
        }
    }

    /// Copies of `part` rewritten when a round processes a part of
    /// multiplicity `mult`.
    fn round_count(self, mult: u64) -> u64 {
        match self {
            Rule::Merge { arity } => mult / arity,
            Rule::Split { .. } => mult,
        }
    }

    pub(crate) fn run(self, initial: &Partition, order: StepOrder) -> MapTrace {
        let mut current = initial.clone();
        let mut steps = Vec::new();
        while let Some(part) = self.pick(&current, order) {
            self.rewrite(&mut current, part, 1);
            steps.push(Step {
                action: self.action(),
                part,
                result: current.clone(),
            });
        }
        let rounds = self.rounds(initial);
        debug_assert_eq!(rounds.last(), Some(&current));
        MapTrace {
            initial: initial.clone(),
            steps,
            output: current,
            rounds,
        }
    }

    fn rounds(self, initial: &Partition) -> Vec<Partition> {
        let mut chain = vec![initial.clone()];
        loop {
            let before = chain.last().expect("chain starts non-empty");
            let work: Vec<(u64, u64)> = before
                .iter()
                .filter(|&(p, m)| self.applies(p, m))
                .map(|(p, m)| (p, self.round_count(m)))
                .collect();
            if work.is_empty() {
                return chain;
            }
            let mut next = before.clone();
            for (part, times) in work {
                self.rewrite(&mut next, part, times);
            }
            chain.push(next);
        }
    }
}
