//! Counting bounds for LP-orientations and the point where the Holt-Klee
//! family outgrows them.
//!
//! The cube bound counts sign patterns of `s = 2n·2^n` polynomials of degree
//! at most `2n` in `k = 2n(n+1)` parameters: `choose(s, k)·O(2n)^k`. The
//! binomial is majorized by `s^k` and the `O(2n)` is written `c·2n`, so in
//! log space the bound is `k·log2(s) + k·log2(2cn)`. The family has
//! `2^choose(n-1, floor(n/2))` members, so its log2 is an exact integer.
//!
//! `s` counts `n·2^n` edges, twice the true `n·2^(n-1)`; the formula is kept
//! as stated since the factor is immaterial (one bit per parameter).
//!
//! Evaluation is in `f64`. Each term is a product of an exact integer below
//! `2^53` and one `log2`, so relative error stays near `1e-15`; at `n = 10000`
//! that is below `1e-2` bits, far under the gaps being compared.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::family_size_log2;
use crate::util::{binomial, log2_biguint};

pub const CROSSOVER_CAP: usize = 10_000;

/// A positive rational standing in for the unspecified constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundConstant(Ratio<BigUint>);

impl BoundConstant {
    pub fn new(numer: BigUint, denom: BigUint) -> Result<Self> {
        if numer.is_zero() || denom.is_zero() {
            return Err(Error::InvalidConstant("constant must be a positive rational".into()));
        }
        Ok(BoundConstant(Ratio::new(numer, denom)))
    }

    pub fn integer(c: u64) -> Result<Self> {
        Self::new(c.into(), 1u32.into())
    }

    pub fn pow2(k: u32) -> Self {
        BoundConstant(Ratio::from_integer(BigUint::from(1u32) << k))
    }

    pub fn log2(&self) -> f64 {
        log2_biguint(self.0.numer()) - log2_biguint(self.0.denom())
    }
}

impl fmt::Display for BoundConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.0.numer(), self.0.denom());
        if *d == BigUint::from(1u32) {
            if n.count_ones() == 1 && n.bits() > 11 {
                return write!(f, "2^{}", n.bits() - 1);
            }
            return write!(f, "{n}");
        }
        write!(f, "{n}/{d}")
    }
}

/// Accepts `7`, `3/2` and `2^20`.
impl FromStr for BoundConstant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let bad = || format!("`{s}` is not a positive rational (try 1, 3/2 or 2^20)");
        let c = if let Some(k) = s.strip_prefix("2^") {
            let k: u32 = k.parse().map_err(|_| bad())?;
            BoundConstant::pow2(k)
        } else if let Some((n, d)) = s.split_once('/') {
            let n: BigUint = n.trim().parse().map_err(|_| bad())?;
            let d: BigUint = d.trim().parse().map_err(|_| bad())?;
            BoundConstant::new(n, d).map_err(|_| bad())?
        } else {
            let n: BigUint = s.parse().map_err(|_| bad())?;
            BoundConstant::new(n, 1u32.into()).map_err(|_| bad())?
        };
        Ok(c)
    }
}

/// `2n(n+1)·log2(2n·2^n) + 2n(n+1)·log2(c·2n)`.
pub fn cube_lp_bound_log2(n: usize, c: &BoundConstant) -> f64 {
    assert!(n >= 1, "n >= 1");
    let nf = n as f64;
    let k = 2.0 * nf * (nf + 1.0);
    let two_n = (2.0 * nf).log2();
    k * (two_n + nf) + k * (c.log2() + two_n)
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneralBound {
    pub log2: f64,
    /// `f(d+1) > 2e`: the binomial is zero and contributes `log2(1) = 0`.
    pub degenerate_binomial: bool,
}

/// `log2(choose(2e, f(d+1)) · f^(f(d+1)))` for a `d`-polytope with `e` edges
/// and `f` facets.
pub fn general_lp_bound_log2(e: u64, f: u64, d: u64) -> GeneralBound {
    assert!(e >= 1 && f >= 1 && d >= 1, "e, f, d >= 1");
    let k = f * (d + 1);
    let b = binomial(2 * e, k);
    let degenerate = b.is_zero();
    let bin_log2 = if degenerate { 0.0 } else { log2_biguint(&b) };
    GeneralBound {
        log2: bin_log2 + k as f64 * (f as f64).log2(),
        degenerate_binomial: degenerate,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub c: BoundConstant,
    /// log2 of the Holt-Klee family size.
    pub lower_log2: BigUint,
    /// log2 of the LP-orientation upper bound.
    pub upper_log2: f64,
}

impl BoundReport {
    pub fn new(n: usize, c: &BoundConstant) -> Self {
        BoundReport {
            n,
            c: c.clone(),
            lower_log2: family_size_log2(n),
            upper_log2: cube_lp_bound_log2(n, c),
        }
    }

    /// Exact comparison: `lower` is an integer, so `lower > upper` iff
    /// `lower > floor(upper)`.
    pub fn crossed(&self) -> bool {
        self.lower_log2 > BigUint::from(self.upper_log2.floor() as u128)
    }

    /// `lower - upper`; infinite once `lower` leaves `f64` range.
    pub fn gap(&self) -> f64 {
        self.lower_log2.to_f64().unwrap_or(f64::INFINITY) - self.upper_log2
    }
}

/// Least `n` at which the family exponent exceeds the bound exponent.
pub fn crossover(c: &BoundConstant) -> Result<BoundReport> {
    (1..=CROSSOVER_CAP)
        .map(|n| BoundReport::new(n, c))
        .find(BoundReport::crossed)
        .ok_or(Error::CrossoverCapExceeded { cap: CROSSOVER_CAP })
}

/// Whether the gap grows by more than `margin` bits from `n` to `n + 1`.
/// The lower increment is exact; only the upper increment is floating.
pub fn gap_increases(n: usize, c: &BoundConstant, margin: f64) -> bool {
    let lower_step = family_size_log2(n + 1) - family_size_log2(n);
    let upper_step = cube_lp_bound_log2(n + 1, c) - cube_lp_bound_log2(n, c);
    lower_step > BigUint::from((upper_step + margin).max(0.0).ceil() as u128)
}

/// Rows `n = 1..=max_n`.
pub fn scan(c: &BoundConstant, max_n: usize) -> Vec<BoundReport> {
    (1..=max_n).map(|n| BoundReport::new(n, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> BoundConstant {
        s.parse().unwrap()
    }

    #[test]
    fn cube_bound_values() {
        assert!((cube_lp_bound_log2(1, &c("1")) - 12.0).abs() < 1e-12);
        let ten = 220.0 * (20f64.log2() + 10.0) + 220.0 * 20f64.log2();
        assert!((cube_lp_bound_log2(10, &c("1")) - ten).abs() < 1e-9);
        assert!((ten - 4101.65).abs() < 0.01);
        for n in 1..50 {
            assert!(cube_lp_bound_log2(n, &c("2")) > cube_lp_bound_log2(n, &c("3/2")));
            assert!(cube_lp_bound_log2(n, &c("3/2")) > cube_lp_bound_log2(n, &c("1")));
        }
    }

    #[test]
    fn general_bound_values() {
        let cube3 = general_lp_bound_log2(12, 6, 3);
        assert!(!cube3.degenerate_binomial);
        assert!((cube3.log2 - 24.0 * 6f64.log2()).abs() < 1e-12);
        assert!((cube3.log2 - 62.04).abs() < 0.01);
        let seg = general_lp_bound_log2(1, 2, 1);
        assert!(seg.degenerate_binomial);
        assert_eq!(seg.log2, 4.0);
        let oct = general_lp_bound_log2(12, 8, 3);
        assert!(oct.degenerate_binomial);
        assert_eq!(oct.log2, 96.0);
    }

    #[test]
    fn constants_parse() {
        assert_eq!(c("2^10"), BoundConstant::integer(1024).unwrap());
        assert_eq!(c("4/2"), BoundConstant::integer(2).unwrap());
        assert_eq!(c("2^20").to_string(), "2^20");
        assert_eq!(c("3/2").to_string(), "3/2");
        assert_eq!(c("5").to_string(), "5");
        for bad in ["0", "-1", "1/0", "x", "2^", "1.5"] {
            assert!(bad.parse::<BoundConstant>().is_err(), "{bad}");
        }
        assert!((c("2^20").log2() - 20.0).abs() < 1e-12);
    }

    #[test]
    fn crossover_for_unit_constant() {
        let r = crossover(&c("1")).unwrap();
        assert_eq!(r.n, 18);
        assert!(!BoundReport::new(17, &c("1")).crossed());
        assert!(r.gap() > 0.0);
        assert!(crossover(&c("2^20")).unwrap().n >= r.n);
    }

    #[test]
    fn scan_rows() {
        let rows = scan(&c("1"), 5);
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[4].lower_log2, BigUint::from(6u32));
    }
}
