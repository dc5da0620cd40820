//! Parametric fuzzy numbers.
//!
//! A fuzzy number is a pair `(lower(r), upper(r))` over the membership level
//! `r in [0, 1]` with `lower` nondecreasing, `upper` nonincreasing and
//! `lower <= upper`. Every shape handled here (crisp, triangular,
//! trapezoidal) is affine in `r`, and linear solves keep that affinity, so a
//! number is stored as two intercept/slope pairs.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for slope-sign and endpoint-ordering checks.
pub const VALIDITY_TOL: f64 = 1e-10;

/// `intercept + slope * r`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Affine {
    pub intercept: f64,
    pub slope: f64,
}

impl Affine {
    pub const fn new(intercept: f64, slope: f64) -> Self {
        Affine { intercept, slope }
    }

    pub const fn constant(v: f64) -> Self {
        Affine::new(v, 0.0)
    }

    #[inline]
    pub fn eval(self, r: f64) -> f64 {
        self.intercept + self.slope * r
    }

    fn scale(self, k: f64) -> Affine {
        Affine::new(k * self.intercept, k * self.slope)
    }
}

impl Add for Affine {
    type Output = Affine;

    fn add(self, rhs: Affine) -> Affine {
        Affine::new(self.intercept + rhs.intercept, self.slope + rhs.slope)
    }
}

/// One of the three defining requirements of a parametric fuzzy number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Requirement {
    /// The lower branch must be nondecreasing in `r`.
    LowerNondecreasing,
    /// The upper branch must be nonincreasing in `r`.
    UpperNonincreasing,
    /// `lower(r) <= upper(r)` on `[0, 1]`.
    LowerBelowUpper,
}

/// Outcome of a validity check: `valid` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validity {
    pub valid: bool,
    pub violations: Vec<Requirement>,
}

/// A parametric fuzzy number with affine branches.
///
/// Values of this type may be "raw", i.e. violate the fuzzy-number
/// requirements; solver outputs are returned as-is and checked with
/// [`FuzzyNumber::validity`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FuzzyJson", into = "FuzzyJson")]
pub struct FuzzyNumber {
    pub lower: Affine,
    pub upper: Affine,
}

impl FuzzyNumber {
    /// Raw constructor: `lower(r) = c0 + c1 r`, `upper(r) = d0 + d1 r`.
    pub const fn new(c0: f64, c1: f64, d0: f64, d1: f64) -> Self {
        FuzzyNumber {
            lower: Affine::new(c0, c1),
            upper: Affine::new(d0, d1),
        }
    }

    /// Like [`FuzzyNumber::new`] but rejects values that are not fuzzy numbers.
    pub fn try_new(c0: f64, c1: f64, d0: f64, d1: f64) -> Result<Self> {
        let u = FuzzyNumber::new(c0, c1, d0, d1);
        let v = u.validity();
        if v.valid {
            Ok(u)
        } else {
            Err(Error::InvalidFuzzyNumber {
                index: 0,
                violations: v.violations,
            })
        }
    }

    pub const fn crisp(v: f64) -> Self {
        FuzzyNumber::new(v, 0.0, v, 0.0)
    }

    pub fn lower_at(&self, r: f64) -> f64 {
        self.lower.eval(r)
    }

    pub fn upper_at(&self, r: f64) -> f64 {
        self.upper.eval(r)
    }

    /// `(r, lower(r), upper(r))` at each requested level, for display.
    pub fn sample(&self, levels: &[f64]) -> Vec<(f64, f64, f64)> {
        levels
            .iter()
            .map(|&r| (r, self.lower_at(r), self.upper_at(r)))
            .collect()
    }

    /// Checks the three requirements within [`VALIDITY_TOL`].
    ///
    /// With affine branches, monotonicity is the sign of the slope, and the
    /// ordering only needs checking at `r = 1` once the slopes are right.
    /// Continuity holds automatically.
    pub fn validity(&self) -> Validity {
        let mut violations = Vec::new();
        if self.lower.slope < -VALIDITY_TOL {
            violations.push(Requirement::LowerNondecreasing);
        }
        if self.upper.slope > VALIDITY_TOL {
            violations.push(Requirement::UpperNonincreasing);
        }
        // Check both ends so a crossing is reported even when the slope
        // signs are already wrong.
        let gap0 = self.upper_at(0.0) - self.lower_at(0.0);
        let gap1 = self.upper_at(1.0) - self.lower_at(1.0);
        if gap0 < -VALIDITY_TOL || gap1 < -VALIDITY_TOL {
            violations.push(Requirement::LowerBelowUpper);
        }
        Validity {
            valid: violations.is_empty(),
            violations,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validity().valid
    }

    /// `k * x`. A negative factor swaps the branches.
    pub fn scale(&self, k: f64) -> FuzzyNumber {
        if k >= 0.0 {
            FuzzyNumber {
                lower: self.lower.scale(k),
                upper: self.upper.scale(k),
            }
        } else {
            FuzzyNumber {
                lower: self.upper.scale(k),
                upper: self.lower.scale(k),
            }
        }
    }

    /// Coefficientwise equality within `tol`.
    pub fn approx_eq(&self, other: &FuzzyNumber, tol: f64) -> bool {
        self.max_coeff_diff(other) <= tol
    }

    pub fn max_coeff_diff(&self, other: &FuzzyNumber) -> f64 {
        [
            self.lower.intercept - other.lower.intercept,
            self.lower.slope - other.lower.slope,
            self.upper.intercept - other.upper.intercept,
            self.upper.slope - other.upper.slope,
        ]
        .iter()
        .map(|d| d.abs())
        .fold(0.0, f64::max)
    }
}

impl Add for FuzzyNumber {
    type Output = FuzzyNumber;

    fn add(self, rhs: FuzzyNumber) -> FuzzyNumber {
        FuzzyNumber {
            lower: self.lower + rhs.lower,
            upper: self.upper + rhs.upper,
        }
    }
}

impl Neg for FuzzyNumber {
    type Output = FuzzyNumber;

    fn neg(self) -> FuzzyNumber {
        self.scale(-1.0)
    }
}

fn fmt_affine(f: &mut fmt::Formatter<'_>, a: Affine) -> fmt::Result {
    let sign = if a.slope < 0.0 { '-' } else { '+' };
    write!(f, "{} {} {} r", a.intercept, sign, a.slope.abs())
}

impl fmt::Display for FuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lower(r) = ")?;
        fmt_affine(f, self.lower)?;
        write!(f, ", upper(r) = ")?;
        fmt_affine(f, self.upper)
    }
}

/// Trapezoidal fuzzy number `(x0, y0, alpha, beta)`: core `[x0, y0]`, left
/// spread `alpha`, right spread `beta`. `x0 == y0` gives a triangular number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    x0: f64,
    y0: f64,
    alpha: f64,
    beta: f64,
}

impl Trapezoid {
    pub fn new(x0: f64, y0: f64, alpha: f64, beta: f64) -> Result<Self> {
        if ![x0, y0, alpha, beta].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidTrapezoid("non-finite parameter".into()));
        }
        if x0 > y0 {
            return Err(Error::InvalidTrapezoid(format!("x0 = {x0} > y0 = {y0}")));
        }
        if alpha < 0.0 || beta < 0.0 {
            return Err(Error::InvalidTrapezoid(format!(
                "negative spread (alpha = {alpha}, beta = {beta})"
            )));
        }
        Ok(Trapezoid {
            x0,
            y0,
            alpha,
            beta,
        })
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn y0(&self) -> f64 {
        self.y0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `lower(r) = x0 - alpha + alpha r`, `upper(r) = y0 + beta - beta r`.
    pub fn to_parametric(&self) -> FuzzyNumber {
        FuzzyNumber::new(
            self.x0 - self.alpha,
            self.alpha,
            self.y0 + self.beta,
            -self.beta,
        )
    }

    /// Membership grade of `x`. A zero spread makes that edge a jump, with
    /// grade 1 at the core endpoint itself.
    pub fn membership(&self, x: f64) -> f64 {
        if (self.x0..=self.y0).contains(&x) {
            1.0
        } else if x < self.x0 {
            if self.alpha > 0.0 && x >= self.x0 - self.alpha {
                (x - self.x0 + self.alpha) / self.alpha
            } else {
                0.0
            }
        } else if self.beta > 0.0 && x <= self.y0 + self.beta {
            (self.y0 - x + self.beta) / self.beta
        } else {
            0.0
        }
    }
}

/// JSON encoding of a fuzzy number:
/// `{"trapezoidal": [x0, y0, alpha, beta]}` or
/// `{"parametric": {"lower": [c0, c1], "upper": [d0, d1]}}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FuzzyJson {
    Trapezoidal([f64; 4]),
    Parametric { lower: [f64; 2], upper: [f64; 2] },
}

impl TryFrom<FuzzyJson> for FuzzyNumber {
    type Error = Error;

    fn try_from(j: FuzzyJson) -> Result<Self> {
        match j {
            FuzzyJson::Trapezoidal([x0, y0, a, b]) => {
                Ok(Trapezoid::new(x0, y0, a, b)?.to_parametric())
            }
            FuzzyJson::Parametric { lower, upper } => {
                if lower.iter().chain(&upper).all(|v| v.is_finite()) {
                    Ok(FuzzyNumber::new(lower[0], lower[1], upper[0], upper[1]))
                } else {
                    Err(Error::InvalidTrapezoid("non-finite coefficient".into()))
                }
            }
        }
    }
}

impl From<FuzzyNumber> for FuzzyJson {
    fn from(u: FuzzyNumber) -> Self {
        FuzzyJson::Parametric {
            lower: [u.lower.intercept, u.lower.slope],
            upper: [u.upper.intercept, u.upper.slope],
        }
    }
}
