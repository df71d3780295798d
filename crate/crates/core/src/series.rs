//! Truncated formal power series with exact integer coefficients.
//!
//! Every generating function used by the counting module is a finite product
//! of simple factors in q^k, truncated at degree N. A factor in q^k only
//! touches degrees ≥ k, so applying factors k = 1..=N and dropping everything
//! above N gives exact coefficients c_0..c_N.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::enumerate::check_weight;
use crate::error::{Error, Result};

/// c_0 + c_1 q + … + c_N q^N (mod q^{N+1}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Series of the given order; `coeffs` must hold exactly order + 1 terms.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a truncated series needs at least the constant term".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Truncation degree N (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drops every term above `order`; `order` may not exceed the current one.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Divides every coefficient by `d`, which must divide each exactly.
    pub fn div_exact(&self, d: i64) -> Result<Self> {
        let d = BigInt::from(d);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if d.is_zero() || !(c % &d).is_zero() {
                return Err(Error::InvalidParameter(format!("{c} is not divisible by {d}")));
            }
            coeffs.push(c / &d);
        }
        Ok(Self { coeffs })
    }

    /// In place multiplication by (1 + sign·q^k).
    fn mul_binomial(&mut self, k: usize, sign: i8) {
        for d in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            if sign < 0 {
                hi[0] -= &lo[d - k];
            } else {
                hi[0] += &lo[d - k];
            }
        }
    }

    /// In place division by (1 − sign·q^k).
    fn div_binomial(&mut self, k: usize, sign: i8) {
        for d in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(d);
            if sign < 0 {
                hi[0] -= &lo[d - k];
            } else {
                hi[0] += &lo[d - k];
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mag = match (d, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => String::new(),
                (_, false) => mag.to_string(),
            };
            let var = match d {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{d}"),
            };
            write!(f, "{sign}{mag}{var}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Cauchy product truncated at the common order.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.same_order(b)?;
    let n = a.order();
    let mut out = TruncatedSeries::zero(n);
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=n - i].iter().enumerate() {
            out.coeffs[i + j] += ai * bj;
        }
    }
    Ok(out)
}

/// Multiplicative inverse of a series with constant term ±1.
pub fn series_reciprocal(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let a0 = a.coeffs[0].clone();
    if !a0.abs().is_one() {
        return Err(Error::NonUnitConstant(a0.to_string()));
    }
    let mut out = TruncatedSeries::zero(a.order());
    out.coeffs[0] = a0.clone();
    for n in 1..=a.order() {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if !a.coeffs[k].is_zero() {
                acc += &a.coeffs[k] * &out.coeffs[n - k];
            }
        }
        out.coeffs[n] = -(&a0 * acc);
    }
    Ok(out)
}

/// The shape of the factor contributed by each selected k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    /// 1 − q^k
    OneMinus,
    /// 1 + q^k
    OnePlus,
    /// 1 + (−q^k) + (−q^k)² + … + (−q^k)^r
    GeometricBlock(u64),
    /// 1 + q^k + q^{2k} + … + q^{rk}
    PositiveBlock(u64),
}

/// A product ∏ factor(q^k) over the k ≥ 1 selected by a predicate.
#[derive(Clone)]
pub struct FactorSpec {
    pub kind: FactorKind,
    selects: Arc<dyn Fn(u64) -> bool + Send + Sync>,
}

impl FactorSpec {
    pub fn new(kind: FactorKind, selects: impl Fn(u64) -> bool + Send + Sync + 'static) -> Self {
        Self {
            kind,
            selects: Arc::new(selects),
        }
    }

    pub fn all(kind: FactorKind) -> Self {
        Self::new(kind, |_| true)
    }

    pub fn selects(&self, k: u64) -> bool {
        (self.selects)(k)
    }
}

impl fmt::Debug for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FactorSpec").field("kind", &self.kind).finish_non_exhaustive()
    }
}

/// ∏_{1 ≤ k ≤ N, selected} factor(q^k) mod q^{N+1}.
pub fn product(spec: &FactorSpec, order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for k in 1..=order {
        if !spec.selects(k as u64) {
            continue;
        }
        match spec.kind {
            FactorKind::OneMinus => s.mul_binomial(k, -1),
            FactorKind::OnePlus => s.mul_binomial(k, 1),
            // (1 − (sq^k)^{r+1}) / (1 − sq^k) with s = ∓1
            FactorKind::GeometricBlock(r) | FactorKind::PositiveBlock(r) => {
                let sign: i8 = if matches!(spec.kind, FactorKind::GeometricBlock(_)) { -1 } else { 1 };
                s.div_binomial(k, sign);
                let span = k.saturating_mul(r as usize + 1);
                if span <= order {
                    let lead_sign = if sign < 0 && r % 2 == 0 { 1 } else { -1 };
                    s.mul_binomial(span, lead_sign);
                }
            }
        }
    }
    s
}

/// Generating functions of the counting sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfKind {
    /// Σ b_ℓ(n) qⁿ = (q^ℓ;q^ℓ)_∞ / (q;q)_∞
    B(u64),
    /// Σ (b_ℓ^e(n) − b_ℓ^o(n)) qⁿ = ∏_{ℓ∤k} 1/(1+q^k)
    SignedB(u64),
    /// Σ d_ℓ(n) qⁿ = ∏ (1+q^k) over k ≡ 0, 1, 3, …, ℓ−1 (mod ℓ), even ℓ
    D(u64),
    /// Σ c_ℓ(n) qⁿ = ∏ (1+q^k) over odd k with ℓ∤k
    C(u64),
    /// Σ Δ_r(n) qⁿ = ∏_k (1 − q^k + q^{2k} − … + (−q^k)^r)
    Delta(u64),
    /// Σ |Q_r(n)| qⁿ = ∏_k (1 + q^k + … + q^{rk})
    Q(u64),
}

impl GfKind {
    pub fn validate(self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            GfKind::B(l) | GfKind::SignedB(l) | GfKind::C(l) if l < 2 => {
                bad(format!("ℓ must be > 1, got {l}"))
            }
            GfKind::D(l) if l < 2 || l % 2 != 0 => bad(format!("D_ℓ needs an even ℓ > 1, got {l}")),
            GfKind::Delta(0) | GfKind::Q(0) => bad("r must be a positive integer".into()),
            _ => Ok(()),
        }
    }
}

/// The generating function of `kind` to order N.
pub fn gf(kind: GfKind, order: usize) -> Result<TruncatedSeries> {
    kind.validate()?;
    check_weight(order as u64)?;
    use FactorKind::*;
    let series = match kind {
        GfKind::B(l) => {
            let numerator = product(&FactorSpec::new(OneMinus, move |k| k % l == 0), order);
            let euler = product(&FactorSpec::all(OneMinus), order);
            series_mul(&numerator, &series_reciprocal(&euler)?)?
        }
        GfKind::SignedB(l) => {
            series_reciprocal(&product(&FactorSpec::new(OnePlus, move |k| k % l != 0), order))?
        }
        GfKind::D(l) => product(
            &FactorSpec::new(OnePlus, move |k| {
                let r = k % l;
                r == 0 || r % 2 == 1
            }),
            order,
        ),
        GfKind::C(l) => product(&FactorSpec::new(OnePlus, move |k| k % 2 == 1 && k % l != 0), order),
        GfKind::Delta(r) => product(&FactorSpec::all(GeometricBlock(r)), order),
        GfKind::Q(r) => product(&FactorSpec::all(PositiveBlock(r)), order),
    };
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_i64s(c).unwrap()
    }

    fn ints(t: &TruncatedSeries) -> Vec<i64> {
        t.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn multiplication() {
        assert_eq!(series_mul(&s(&[1, 1, 0, 0]), &s(&[1, -1, 0, 0])).unwrap(), s(&[1, 0, -1, 0]));
        assert_eq!(series_mul(&s(&[1, 1, 1, 1]), &s(&[1, -1, 0, 0])).unwrap(), s(&[1, 0, 0, 0]));
        assert!(matches!(
            series_mul(&s(&[1, 1]), &s(&[1, 1, 1])),
            Err(Error::OrderMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn euler_function_times_partition_gf() {
        let euler = product(&FactorSpec::all(FactorKind::OneMinus), 30);
        let p = series_reciprocal(&euler).unwrap();
        assert_eq!(series_mul(&euler, &p).unwrap(), TruncatedSeries::one(30));
    }

    #[test]
    fn reciprocals() {
        let euler = product(&FactorSpec::all(FactorKind::OneMinus), 10);
        assert_eq!(ints(&series_reciprocal(&euler).unwrap()), [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(series_reciprocal(&s(&[1])).unwrap(), s(&[1]));
        assert_eq!(series_reciprocal(&s(&[1, 1, 0, 0, 0])).unwrap(), s(&[1, -1, 1, -1, 1]));
        assert_eq!(series_reciprocal(&s(&[-1, 1])).unwrap(), s(&[-1, -1]));
        assert!(matches!(series_reciprocal(&s(&[2, 1])), Err(Error::NonUnitConstant(_))));
        assert!(matches!(series_reciprocal(&s(&[0, 1])), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn products() {
        let euler = product(&FactorSpec::all(FactorKind::OneMinus), 12);
        assert_eq!(ints(&euler), [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]);
        let c3 = product(&FactorSpec::new(FactorKind::OnePlus, |k| k % 2 == 1 && k % 3 != 0), 5);
        assert_eq!(ints(&c3), [1, 1, 0, 0, 0, 1]);
        let block = product(&FactorSpec::all(FactorKind::GeometricBlock(1)), 20);
        assert_eq!(block, product(&FactorSpec::all(FactorKind::OneMinus), 20));
        let plus = product(&FactorSpec::all(FactorKind::PositiveBlock(1)), 20);
        assert_eq!(plus, product(&FactorSpec::all(FactorKind::OnePlus), 20));
        assert_eq!(product(&FactorSpec::all(FactorKind::OneMinus), 0), s(&[1]));
    }

    #[test]
    fn block_factor_expands_directly() {
        // single factor at k = 2 with r = 3: 1 − q² + q⁴ − q⁶
        let f = product(&FactorSpec::new(FactorKind::GeometricBlock(3), |k| k == 2), 8);
        assert_eq!(ints(&f), [1, 0, -1, 0, 1, 0, -1, 0, 0]);
        let f = product(&FactorSpec::new(FactorKind::PositiveBlock(2), |k| k == 3), 9);
        assert_eq!(ints(&f), [1, 0, 0, 1, 0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn generating_functions() {
        assert_eq!(ints(&gf(GfKind::B(2), 6).unwrap()), [1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(ints(&gf(GfKind::Delta(3), 6).unwrap()), [1, -1, 0, -1, 0, 0, 1]);
        assert_eq!(ints(&gf(GfKind::SignedB(4), 4).unwrap()), [1, -1, 0, -1, 2]);
        assert_eq!(ints(&gf(GfKind::C(3), 10).unwrap()), [1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0]);
        assert_eq!(ints(&gf(GfKind::D(4), 12).unwrap()), [1, 1, 0, 1, 2, 2, 1, 2, 4, 4, 3, 4, 8]);
    }

    #[test]
    fn bad_parameters() {
        assert!(gf(GfKind::B(1), 4).is_err());
        assert!(gf(GfKind::D(3), 4).is_err());
        assert!(gf(GfKind::Delta(0), 4).is_err());
        assert!(gf(GfKind::Q(0), 4).is_err());
    }

    #[test]
    fn truncate_and_arithmetic() {
        let a = s(&[1, 2, 3]);
        assert_eq!(a.truncate(1).unwrap(), s(&[1, 2]));
        assert!(a.truncate(3).is_err());
        assert_eq!(a.add(&s(&[1, 0, 1])).unwrap(), s(&[2, 2, 4]));
        assert_eq!(a.sub(&s(&[1, 2, 1])).unwrap(), s(&[0, 0, 2]));
        assert_eq!(s(&[2, 4]).div_exact(2).unwrap(), s(&[1, 2]));
        assert!(s(&[1, 4]).div_exact(2).is_err());
        assert!(TruncatedSeries::from_coeffs(vec![]).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1-q+2q^3 + O(q^4)");
        assert_eq!(s(&[0, 0]).to_string(), "0 + O(q^2)");
    }
}
