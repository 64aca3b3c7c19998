//! Rank-one truncated cohomology `Q[H]/(H^(top+1))` and curve classes.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{format_rational, int, Rational};

/// Even cohomology generated by one divisor class `H`, with `H^k = 0` for
/// `k > top_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    top_power: u32,
    top_integral: Option<Rational>,
}

impl Ring {
    /// Compact 5-fold: `H^5` is the top class and `integral H^5 = top_integral`.
    pub fn compact_fivefold(top_integral: Rational) -> Result<Self> {
        if top_integral.is_zero() {
            return Err(Error::Domain("integral of H^5 must be nonzero".into()));
        }
        Ok(Ring {
            top_power: 5,
            top_integral: Some(top_integral),
        })
    }

    /// Cohomology of the zero section of a local model, `H^(top_power+1) = 0`
    /// and no top integral.
    pub fn local(top_power: u32) -> Self {
        Ring {
            top_power,
            top_integral: None,
        }
    }

    pub fn top_power(&self) -> u32 {
        self.top_power
    }

    pub fn top_integral(&self) -> Option<&Rational> {
        self.top_integral.as_ref()
    }

    pub fn zero(&self) -> CohClass {
        CohClass {
            ring: self.clone(),
            coefficients: vec![Rational::zero(); self.top_power as usize + 1],
        }
    }

    /// `coefficient * H^power`; zero when the power is truncated away.
    pub fn monomial(&self, power: u32, coefficient: Rational) -> CohClass {
        let mut class = self.zero();
        if power <= self.top_power {
            class.coefficients[power as usize] = coefficient;
        }
        class
    }

    /// `H^power`.
    pub fn h(&self, power: u32) -> CohClass {
        self.monomial(power, int(1))
    }
}

/// Element of a [`Ring`], stored as coefficients of `H^0 .. H^top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    ring: Ring,
    coefficients: Vec<Rational>,
}

impl CohClass {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Coefficient of `H^power` (zero beyond the truncation).
    pub fn coefficient(&self, power: u32) -> Rational {
        self.coefficients
            .get(power as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// The unique power carrying a nonzero coefficient, if exactly one does.
    pub fn homogeneous_power(&self) -> Option<u32> {
        let mut nonzero = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero());
        match (nonzero.next(), nonzero.next()) {
            (Some((k, _)), None) => Some(k as u32),
            _ => None,
        }
    }

    /// The scalar `x` with `self = x H^power`. The zero class is a multiple of
    /// every power.
    pub fn scalar_at(&self, power: u32) -> Result<Rational> {
        let stray = self
            .coefficients
            .iter()
            .enumerate()
            .any(|(k, c)| k as u32 != power && !c.is_zero());
        if stray {
            return Err(Error::InsertionDegree {
                expected: power,
                found: self.to_string(),
            });
        }
        Ok(self.coefficient(power))
    }

    pub fn scale(&self, factor: &Rational) -> CohClass {
        CohClass {
            ring: self.ring.clone(),
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &CohClass,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<CohClass> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(CohClass {
            ring: self.ring.clone(),
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn try_add(&self, other: &CohClass) -> Result<CohClass> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &CohClass) -> Result<CohClass> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Integral over the 5-fold, when the ring has a top class.
    pub fn integrate(&self) -> Option<Rational> {
        let top = self.ring.top_integral.as_ref()?;
        Some(self.coefficient(5) * top)
    }
}

/// Truncated graded product.
pub fn ring_mul(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    let mut out = a.ring.zero();
    for (i, x) in a.coefficients.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coefficients.iter().enumerate() {
            if let Some(slot) = out.coefficients.get_mut(i + j) {
                *slot += x * y;
            }
        }
    }
    Ok(out)
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})H^{k}", format_rational(c)))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        self.try_add(rhs).expect("classes from the same ring")
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        self.try_sub(rhs).expect("classes from the same ring")
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        ring_mul(self, rhs).expect("classes from the same ring")
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        self.scale(&int(-1))
    }
}

/// Effective curve class of a rank-one cone: its degree `H . beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveClass(u32);

impl CurveClass {
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Domain("curve classes have degree >= 1".into()));
        }
        Ok(CurveClass(degree))
    }

    pub fn degree(self) -> u32 {
        self.0
    }
}

impl Add for CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: CurveClass) -> CurveClass {
        CurveClass(self.0 + rhs.0)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(mu, beta)` for a divisor class `mu = x H`, normalized by `(H, line) = 1`.
pub fn curve_pairing(mu: &CohClass, beta: CurveClass) -> Result<Rational> {
    Ok(mu.scalar_at(1)? * int(beta.degree() as i64))
}
