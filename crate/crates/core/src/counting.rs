//! Counting functions and identity verification.
//!
//! Every count can be produced by exhaustive enumeration or by reading a
//! generating-function coefficient; Δ_1 and Δ_3 also have closed forms.
//! The identity verifiers compare these independent routes row by row and
//! report the outcome instead of failing fast.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::constraint::PartitionConstraint;
use crate::enumerate::{check_weight, enumerate_partitions, tally_lengths};
use crate::error::{Error, Result};
use crate::maps::involution::{in_involution_domain, psi};
use crate::partition::Partition;
use crate::series::{gf, GfKind, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Enumeration,
    Series,
    /// Only for Δ_1 (pentagonal numbers) and Δ_3 (triangular numbers).
    ClosedForm,
}

/// The counting functions. `B*`, `D` and `C` take ℓ; `Q*` and `Delta` take r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stat {
    /// b_ℓ(n): ℓ-regular partitions of n.
    B,
    /// b_ℓ^e(n): those with an even number of parts.
    BEven,
    /// b_ℓ^o(n): those with an odd number of parts.
    BOdd,
    /// d_ℓ(n), even ℓ: distinct parts ≡ 0, 1, 3, …, ℓ−1 (mod ℓ).
    D,
    /// c_ℓ(n), odd ℓ: distinct odd parts not divisible by ℓ.
    C,
    /// q_r^e(n): partitions with each part at most r times, even length.
    QEven,
    /// q_r^o(n): same, odd length.
    QOdd,
    /// Δ_r(n) = q_r^e(n) − q_r^o(n).
    Delta,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::B => "b",
            Stat::BEven => "be",
            Stat::BOdd => "bo",
            Stat::D => "d",
            Stat::C => "c",
            Stat::QEven => "qre",
            Stat::QOdd => "qro",
            Stat::Delta => "delta",
        }
    }

    /// Whether the parameter is ℓ (true) or r (false).
    pub fn takes_ell(self) -> bool {
        matches!(self, Stat::B | Stat::BEven | Stat::BOdd | Stat::D | Stat::C)
    }

    fn validate(self, param: u64) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            Stat::B | Stat::BEven | Stat::BOdd if param < 2 => {
                bad(format!("ℓ must be > 1, got {param}"))
            }
            Stat::D if param < 2 || param % 2 != 0 => {
                bad(format!("d_ℓ is defined for even ℓ > 1, got {param}"))
            }
            Stat::C if param < 2 || param % 2 == 0 => {
                bad(format!("c_ℓ is defined for odd ℓ > 1, got {param}"))
            }
            Stat::QEven | Stat::QOdd | Stat::Delta if param == 0 => {
                bad("r must be a positive integer".into())
            }
            _ => Ok(()),
        }
    }
}

/// (−1)^n from the parity of n.
fn sign_of(n: u64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Δ_1(n) by the pentagonal number theorem: (−1)^j if n = j(3j ± 1)/2,
/// otherwise 0.
pub fn pentagonal_delta1(n: u64) -> i8 {
    // n = j(3j ∓ 1)/2  ⇔  24n + 1 = (6j ∓ 1)²
    let disc = 24 * n + 1;
    let root = disc.isqrt();
    if root * root != disc {
        return 0;
    }
    let j = match root % 6 {
        1 => (root - 1) / 6,
        5 => (root + 1) / 6,
        _ => return 0,
    };
    sign_of(j) as i8
}

/// Δ_3(n): (−1)^n when n = j(j+1)/2, otherwise 0.
pub fn triangular_delta3(n: u64) -> i8 {
    let disc = 8 * n + 1;
    let root = disc.isqrt();
    if root * root == disc {
        sign_of(n) as i8
    } else {
        0
    }
}

/// Values of `stat` at n = 0..=max_n.
pub fn count_table(stat: Stat, param: u64, max_n: u64, method: CountMethod) -> Result<Vec<BigInt>> {
    stat.validate(param)?;
    check_weight(max_n)?;
    match method {
        CountMethod::Enumeration => enumeration_table(stat, param, max_n),
        CountMethod::Series => series_table(stat, param, max_n),
        CountMethod::ClosedForm => {
            let formula: fn(u64) -> i8 = match (stat, param) {
                (Stat::Delta, 1) => pentagonal_delta1,
                (Stat::Delta, 3) => triangular_delta3,
                _ => {
                    return Err(Error::UnsupportedMethod {
                        method: "closed form".into(),
                        stat: format!("{}({param})", stat.name()),
                    })
                }
            };
            Ok((0..=max_n).map(|n| BigInt::from(formula(n))).collect())
        }
    }
}

/// A single value of `stat`.
pub fn count(stat: Stat, param: u64, n: u64, method: CountMethod) -> Result<BigInt> {
    let mut table = count_table(stat, param, n, method)?;
    Ok(table.swap_remove(n as usize))
}

fn enumeration_table(stat: Stat, param: u64, max_n: u64) -> Result<Vec<BigInt>> {
    use PartitionConstraint::*;
    let constraint = match stat {
        Stat::B | Stat::BEven | Stat::BOdd => EllRegular(param),
        Stat::D => SetD(param),
        Stat::C => SetC(param),
        Stat::QEven | Stat::QOdd | Stat::Delta => MaxMultiplicity(param),
    };
    let tally = tally_lengths(max_n, &constraint)?;
    Ok((0..=max_n)
        .map(|n| match stat {
            Stat::BEven | Stat::QEven => BigInt::from(tally.even[n as usize]),
            Stat::BOdd | Stat::QOdd => BigInt::from(tally.odd[n as usize]),
            Stat::Delta => BigInt::from(tally.signed(n)),
            Stat::B | Stat::D | Stat::C => BigInt::from(tally.total(n)),
        })
        .collect())
}

fn series_table(stat: Stat, param: u64, max_n: u64) -> Result<Vec<BigInt>> {
    let order = max_n as usize;
    // even/odd splits: (total ± signed) / 2
    let split = |total: GfKind, signed: GfKind, even: bool| -> Result<TruncatedSeries> {
        let (t, s) = (gf(total, order)?, gf(signed, order)?);
        let sum = if even { t.add(&s)? } else { t.sub(&s)? };
        sum.div_exact(2)
    };
    let series = match stat {
        Stat::B => gf(GfKind::B(param), order)?,
        Stat::BEven => split(GfKind::B(param), GfKind::SignedB(param), true)?,
        Stat::BOdd => split(GfKind::B(param), GfKind::SignedB(param), false)?,
        Stat::D => gf(GfKind::D(param), order)?,
        Stat::C => gf(GfKind::C(param), order)?,
        Stat::QEven => split(GfKind::Q(param), GfKind::Delta(param), true)?,
        Stat::QOdd => split(GfKind::Q(param), GfKind::Delta(param), false)?,
        Stat::Delta => gf(GfKind::Delta(param), order)?,
    };
    Ok(series.coeffs().to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityTag {
    /// b_ℓ^e(n) − b_ℓ^o(n) = (−1)^n d_ℓ(n), even ℓ
    T1,
    /// b_ℓ^e(n) − b_ℓ^o(n) = (−1)^n c_ℓ(n), odd ℓ
    T2,
    /// Δ_r(n) = (−1)^n c_{r+1}(n), even r
    T3,
    /// Δ_1(n) by the pentagonal number theorem
    Euler,
    /// Δ_3(n) = (−1)^n on triangular n, else 0
    Hickerson,
    /// b_ℓ(n) ≡ d_ℓ(n) (even ℓ) or c_ℓ(n) (odd ℓ) mod 2
    ParityCor,
}

impl IdentityTag {
    pub fn name(self) -> &'static str {
        match self {
            IdentityTag::T1 => "t1",
            IdentityTag::T2 => "t2",
            IdentityTag::T3 => "t3",
            IdentityTag::Euler => "euler",
            IdentityTag::Hickerson => "hickerson",
            IdentityTag::ParityCor => "parity",
        }
    }
}

fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.collect_str(v),
    }
}

/// One verified n. `series` is the right-hand side recomputed through
/// generating functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub n: u64,
    #[serde(serialize_with = "ser_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub rhs: BigInt,
    #[serde(serialize_with = "ser_bigint")]
    pub series: BigInt,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityTag,
    /// ℓ for T1, T2 and ParityCor; r for T3, Euler (1) and Hickerson (3).
    pub param: u64,
    pub rows: Vec<IdentityRow>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: IdentityTag, param: u64, rows: Vec<IdentityRow>) -> Self {
        let pass = rows.iter().all(|r| r.pass);
        Self {
            identity,
            param,
            rows,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

fn signed_rows(
    lhs: &[BigInt],
    rhs: &[BigInt],
    series: &[BigInt],
    max_n: u64,
    alternate: bool,
) -> Vec<IdentityRow> {
    (1..=max_n)
        .map(|n| {
            let i = n as usize;
            let sign = BigInt::from(if alternate { sign_of(n) } else { 1 });
            let rhs = &sign * &rhs[i];
            let series = &sign * &series[i];
            IdentityRow {
                n,
                pass: lhs[i] == rhs && rhs == series,
                lhs: lhs[i].clone(),
                rhs,
                series,
            }
        })
        .collect()
}

/// Checks an identity for 1 ≤ n ≤ max_n, the left side by enumeration and
/// the right side by enumeration (or closed form) and by series.
pub fn verify_identity(tag: IdentityTag, param: u64, max_n: u64) -> Result<IdentityReport> {
    use CountMethod::*;
    let bad = |msg: String| Err(Error::InvalidParameter(msg));
    let (param, lhs, rhs, series, alternate) = match tag {
        IdentityTag::T1 | IdentityTag::T2 => {
            let want_even = tag == IdentityTag::T1;
            if param < 2 || (param % 2 == 0) != want_even {
                let kind = if want_even { "even" } else { "odd" };
                return bad(format!("{} needs an {kind} ℓ > 1, got {param}", tag.name()));
            }
            let stat = if want_even { Stat::D } else { Stat::C };
            let even = count_table(Stat::BEven, param, max_n, Enumeration)?;
            let odd = count_table(Stat::BOdd, param, max_n, Enumeration)?;
            let lhs: Vec<BigInt> = even.iter().zip(&odd).map(|(e, o)| e - o).collect();
            (
                param,
                lhs,
                count_table(stat, param, max_n, Enumeration)?,
                count_table(stat, param, max_n, Series)?,
                true,
            )
        }
        IdentityTag::T3 => {
            if param == 0 || param % 2 != 0 {
                return bad(format!("t3 needs a positive even r, got {param}"));
            }
            (
                param,
                count_table(Stat::Delta, param, max_n, Enumeration)?,
                count_table(Stat::C, param + 1, max_n, Enumeration)?,
                count_table(Stat::C, param + 1, max_n, Series)?,
                true,
            )
        }
        IdentityTag::Euler | IdentityTag::Hickerson => {
            let r = if tag == IdentityTag::Euler { 1 } else { 3 };
            (
                r,
                count_table(Stat::Delta, r, max_n, Enumeration)?,
                count_table(Stat::Delta, r, max_n, ClosedForm)?,
                count_table(Stat::Delta, r, max_n, Series)?,
                false,
            )
        }
        IdentityTag::ParityCor => return verify_parity(param, max_n),
    };
    let rows = signed_rows(&lhs, &rhs, &series, max_n, alternate);
    Ok(IdentityReport::new(tag, param, rows))
}

/// b_ℓ(n) has the parity of d_ℓ(n) (even ℓ) or c_ℓ(n) (odd ℓ), 1 ≤ n ≤ max_n.
pub fn verify_parity(ell: u64, max_n: u64) -> Result<IdentityReport> {
    use CountMethod::*;
    let stat = if ell % 2 == 0 { Stat::D } else { Stat::C };
    let b = count_table(Stat::B, ell, max_n, Enumeration)?;
    let rhs = count_table(stat, ell, max_n, Enumeration)?;
    let series = count_table(stat, ell, max_n, Series)?;
    let two = BigInt::from(2);
    let rows = (1..=max_n as usize)
        .map(|i| IdentityRow {
            n: i as u64,
            pass: ((&b[i] - &rhs[i]) % &two).is_zero() && rhs[i] == series[i],
            lhs: b[i].clone(),
            rhs: rhs[i].clone(),
            series: series[i].clone(),
        })
        .collect();
    Ok(IdentityReport::new(IdentityTag::ParityCor, ell, rows))
}

/// B_ℓ(n) split into ψ_ℓ-orbits: two-element orbits (larger partition
/// first) and the fixed points A_ℓ(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTable {
    pub ell: u64,
    pub n: u64,
    pub pairs: Vec<(Partition, Partition)>,
    pub fixed_points: Vec<Partition>,
}

pub fn pair_table(ell: u64, n: u64) -> Result<PairTable> {
    let mut pairs = Vec::new();
    let mut fixed_points = Vec::new();
    for lambda in enumerate_partitions(n, &PartitionConstraint::EllRegular(ell))? {
        if in_involution_domain(&lambda, ell)? {
            let (image, _) = psi(&lambda, ell)?;
            if lambda > image {
                pairs.push((lambda, image));
            }
        } else {
            fixed_points.push(lambda);
        }
    }
    Ok(PairTable {
        ell,
        n,
        pairs,
        fixed_points,
    })
}
