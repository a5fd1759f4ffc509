//! Multiplicities attached to curves in a degeneration of a surface into F2
//! glued to a quadric along the (-2)-curve `E`, and the binomial sums turning
//! relative counts on F2 into invariants of the smoothing.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, binomial_signed, sign};
use crate::floors::{
    relative_complex_counts_f2, relative_real_counts_f2, toric_counts, Execution, FloorError,
    StratifiedCounts, StratumKey,
};
use crate::lattice::{quadric_class_to_f2, DivisorClass, LatticeError, SurfaceModel};

/// Value of `gamma` for which the real identity on the quadric holds on every
/// class that was tried; frozen.
pub const CALIBRATED_GAMMA: u8 = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SumError {
    #[error("invalid combination mode: {0}")]
    InvalidMode(String),
    #[error("stratum k = {k} meets E in {value} < 0 points")]
    NegativeIntersection { k: u32, value: i64 },
    #[error(transparent)]
    Floors(#[from] FloorError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    /// Every real part of the quadric side is used; multiplicities `mu^chi`.
    H1,
    /// Only curves avoiding `E` survive; multiplicity `mu`.
    H2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CombinationMode {
    chi_rx0: u8,
    gamma: u8,
    hypothesis: Hypothesis,
}

impl CombinationMode {
    /// `chi_rx0` is the Euler characteristic of the real part of the quadric
    /// side, with the empty set counted as 0.
    pub fn new(chi_rx0: u8, gamma: u8, hypothesis: Hypothesis) -> Result<Self, SumError> {
        if chi_rx0 != 0 && chi_rx0 != 2 {
            return Err(SumError::InvalidMode(format!("chi = {chi_rx0} is not 0 or 2")));
        }
        if gamma > 1 {
            return Err(SumError::InvalidMode(format!("gamma = {gamma} is not a bit")));
        }
        Ok(CombinationMode {
            chi_rx0,
            gamma,
            hypothesis,
        })
    }

    pub fn chi_rx0(&self) -> u8 {
        self.chi_rx0
    }

    pub fn gamma(&self) -> u8 {
        self.gamma
    }

    pub fn hypothesis(&self) -> Hypothesis {
        self.hypothesis
    }
}

fn apply_sign(value: BigInt, exponent: i64) -> BigInt {
    if sign(exponent) < 0 {
        -value
    } else {
        value
    }
}

/// `(-1)^(m + gamma (a + b)) * sum over a_k + 2 b_k = k of C(a, a_k) C(b, b_k)`.
pub fn mu0(k: u32, a: u64, b: u64, m: i64, gamma: u8) -> BigInt {
    let k = u64::from(k);
    let mut total = BigUint::zero();
    for b_k in 0..=b.min(k / 2) {
        let a_k = k - 2 * b_k;
        if a_k <= a {
            total += binomial(a, a_k) * binomial(b, b_k);
        }
    }
    let exponent = m + i64::from(gamma) * (a + b) as i64;
    apply_sign(BigInt::from(total), exponent)
}

/// `(-1)^(m + gamma b) 2^b` when `a = 0` and `k = b`, zero otherwise.
pub fn mu2(k: u32, a: u64, b: u64, m: i64, gamma: u8) -> BigInt {
    if a != 0 || u64::from(k) != b {
        return BigInt::zero();
    }
    let exponent = m + i64::from(gamma) * b as i64;
    apply_sign(BigInt::one() << b, exponent)
}

/// `(-1)^m` when `k = a = b = 0`, zero otherwise.
pub fn mu_h2(k: u32, a: u64, b: u64, m: i64) -> BigInt {
    if k == 0 && a == 0 && b == 0 {
        apply_sign(BigInt::one(), m)
    } else {
        BigInt::zero()
    }
}

/// `sum_k C(dE + 2k, k) counts[k]`.
pub fn combine_complex(d_e: i64, counts: &BTreeMap<u32, BigInt>) -> Result<BigInt, SumError> {
    let mut total = BigInt::zero();
    for (&k, n) in counts {
        let top = d_e + 2 * i64::from(k);
        if top < 0 {
            return Err(SumError::NegativeIntersection { k, value: top });
        }
        total += BigInt::from(binomial_signed(top, i64::from(k))) * n;
    }
    Ok(total)
}

/// Weighted sum of stratum counts. Stratum values already carry the sign
/// `(-1)^m` of each curve, so the multiplicities are applied with `m = 0`.
pub fn combine_real(mode: CombinationMode, strata: &StratifiedCounts) -> Result<BigInt, SumError> {
    strata.validate()?;
    let mut total = BigInt::zero();
    for (&StratumKey { k, a, b }, value) in &strata.entries {
        let weight = match (mode.hypothesis, mode.chi_rx0) {
            (Hypothesis::H2, _) => mu_h2(k, a, b, 0),
            (Hypothesis::H1, 0) => mu0(k, a, b, 0, mode.gamma),
            (Hypothesis::H1, _) => mu2(k, a, b, 0, mode.gamma),
        };
        total += weight * value;
    }
    Ok(total)
}

/// Welschinger invariant of the ellipsoid quadric in class `d (l1 + l2)`,
/// equal to the real count of class `(d, 0)` on F2.
pub fn welschinger_ellipsoid(d: u32) -> Result<BigInt, SumError> {
    welschinger_ellipsoid_with(d, Execution::default())
}

pub fn welschinger_ellipsoid_with(d: u32, execution: Execution) -> Result<BigInt, SumError> {
    if d == 0 {
        return Err(FloorError::EmptyClass.into());
    }
    let f2 = SurfaceModel::f2();
    let class = f2.class(vec![i64::from(d), 0])?;
    Ok(toric_counts(&f2, &class, execution)?.real)
}

/// Both sides of an identity, as computed independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// GW invariant of a quadric class against the binomial sum of the GW
/// invariants of the classes `d - kE` on F2.
pub fn quadric_identity_complex(f0_class: &DivisorClass, execution: Execution) -> Result<IdentityCheck, SumError> {
    let f0 = SurfaceModel::f0();
    let lhs = BigInt::from(toric_counts(&f0, f0_class, execution)?.complex);
    let d = quadric_class_to_f2(f0_class)?;
    let (d_e, counts) = relative_complex_counts_f2(&d, None, execution)?;
    let counts = counts.into_iter().map(|(k, v)| (k, BigInt::from(v))).collect();
    Ok(IdentityCheck {
        lhs,
        rhs: combine_complex(d_e, &counts)?,
    })
}

/// Welschinger invariant of a class on the hyperboloid against the real sum
/// with `chi = 0`.
pub fn quadric_identity_real(
    f0_class: &DivisorClass,
    gamma: u8,
    execution: Execution,
) -> Result<IdentityCheck, SumError> {
    let f0 = SurfaceModel::f0();
    let lhs = toric_counts(&f0, f0_class, execution)?.real;
    let d = quadric_class_to_f2(f0_class)?;
    let strata = relative_real_counts_f2(&d, None, execution)?;
    let mode = CombinationMode::new(0, gamma, Hypothesis::H1)?;
    Ok(IdentityCheck {
        lhs,
        rhs: combine_real(mode, &strata)?,
    })
}

/// The ellipsoid count computed directly and through the `chi = 2` sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipsoidCheck {
    pub direct: BigInt,
    pub combined: BigInt,
    /// Whether every stratum with `k >= 1` has zero weight.
    pub higher_strata_vanish: bool,
    pub strata: StratifiedCounts,
}

impl EllipsoidCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.combined && self.higher_strata_vanish
    }
}

pub fn ellipsoid_identity(d: u32, gamma: u8, execution: Execution) -> Result<EllipsoidCheck, SumError> {
    let direct = welschinger_ellipsoid_with(d, execution)?;
    let f2 = SurfaceModel::f2();
    let strata = relative_real_counts_f2(&f2.class(vec![i64::from(d), 0])?, None, execution)?;
    let higher_strata_vanish = strata
        .entries
        .iter()
        .filter(|(key, _)| key.k >= 1)
        .all(|(key, value)| key.b == 0 && (mu2(key.k, key.a, key.b, 0, gamma) * value).is_zero());
    let mode = CombinationMode::new(2, gamma, Hypothesis::H1)?;
    Ok(EllipsoidCheck {
        direct,
        combined: combine_real(mode, &strata)?,
        higher_strata_vanish,
        strata,
    })
}
