//! Degree-reducing recursions for all count families, evaluated with unit
//! insertions (`H` for divisor slots, `H^2` for codimension-two slots).
//!
//! Every call either lowers the total degree or stays at the same total
//! degree while moving to a family that only recurses downward; the
//! engine's active-key set turns any violation into an error.

use num_traits::Zero;

use super::memo::{CountKey, CountKind::*};
use super::Engine;
use crate::cohomology::CurveClass;
use crate::error::Result;
use crate::exact::{frac, int, Rational};

fn q(n: u32) -> Rational {
    int(n as i64)
}

fn sq(n: u32) -> Rational {
    q(n) * q(n)
}

/// Ordered splittings `(b1, b2)` with `b1 + b2 = total`.
fn splits(total: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..total).map(move |b1| (b1, total - b1))
}

fn class(d: u32) -> CurveClass {
    CurveClass::new(d).expect("recursions only produce positive degrees")
}

impl Engine<'_> {
    // ---- one component -------------------------------------------------

    /// 1A, `n_b(mu)`.
    pub(super) fn base1(&self, b: u32, mu: &crate::cohomology::CohClass) -> Result<Rational> {
        self.geometry.base_n1pt(class(b), mu)
    }

    /// 1B, `n_b(H^2, H^2)`.
    pub(super) fn n1b_unit(&self, b: u32) -> Result<Rational> {
        self.geometry.base_n2pt(class(b), &self.h2, &self.h2)
    }

    /// 1C, `n_b(psi H^2)`.
    pub(super) fn n1c_unit(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(N1C, b), |e| {
            let mut total = e.n1b_unit(b)? - q(2 * b) * e.base1(b, &(&e.h1 * &e.h2))?;
            for (b1, b2) in splits(b) {
                total += sq(b1) * e.n2a_unit(b1, b2)?;
            }
            Ok(total / sq(b))
        })
    }

    /// 1D, `n_b(psi H, H^2)`.
    pub(super) fn n1d_unit(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(N1D, b), |e| {
            let h_mu1 = &e.h1 * &e.h1;
            let mut total =
                q(b) * e.n1b_unit(b)? - q(2 * b) * e.geometry.base_n2pt(class(b), &h_mu1, &e.h2)?;
            for (b1, b2) in splits(b) {
                let weight = q(b1) * sq(b2) + q(b2) * sq(b1);
                total += weight * e.n2a_unit(b1, b2)?;
            }
            Ok(total / sq(b))
        })
    }

    /// 1E, `n_b(psi^2 H)`.
    pub(super) fn n1e_unit(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(N1E, b), |e| {
            let h_mu = (&e.h1 * &e.h1).coefficient(2);
            let mut total = e.n1d_unit(b)? - q(2 * b) * h_mu * e.n1c_unit(b)?;
            for (b1, b2) in splits(b) {
                total += sq(b1) * (e.n2d_unit(b1, b2)? + e.n2b_unit(b1, b2)?);
            }
            Ok(total / sq(b))
        })
    }

    /// 1F, `n_b(psi^2, H^2)`.
    pub(super) fn n1f_unit(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(N1F, b), |e| {
            let mut total = Rational::zero();
            for (b1, b2) in splits(b) {
                total -= e.n2a_unit(b1, b2)?;
            }
            Ok(total)
        })
    }

    /// 1G, `n_b(psi^3)`.
    pub(super) fn n1g_kernel(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(N1G, b), |e| {
            let mut total = e.n1f_unit(b)? - q(2 * b) * e.n1e_unit(b)?;
            for (b1, b2) in splits(b) {
                total += sq(b1) * (e.n2e_kernel(b1, b2)? + e.n2c_kernel(b1, b2)?);
            }
            Ok(total / sq(b))
        })
    }

    /// 1H, `integral (c1^2 - c2)` over the genus-0 family of class `b`.
    pub(super) fn gamma1_kernel(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(Gamma1, b), |e| {
            let c2 = &e.c2_scalar;
            let single = e.base1(b, e.geometry.c3())?
                + c2 * e.n1c_unit(b)?
                + e.n1g_kernel(b)?
                + c2 * c2 * e.n1b_unit(b)?
                + q(4) * c2 * e.n1f_unit(b)?;
            let mut total = single / q(2);
            for (b1, b2) in splits(b) {
                total -= q(2) * e.n2e_kernel(b1, b2)? + frac(5, 2) * e.n2c_kernel(b1, b2)?;
            }
            Ok(total)
        })
    }

    // ---- two components ------------------------------------------------

    /// 2A, `n_{b1 b2}(|; H^2)`.
    pub(super) fn n2a_unit(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(N2A, b1, b2), |e| {
            let mut total = Rational::zero();
            for pair in e.geometry.diagonal_pairs() {
                let left = e.base1(b1, &pair.omega)?;
                if !left.is_zero() {
                    total += left * e.geometry.base_n2pt(class(b2), &pair.omega_sharp, &e.h2)?;
                }
            }
            total += if b2 > b1 {
                e.n2a_unit(b1, b2 - b1)? + e.n2a_unit(b2 - b1, b1)?
            } else if b2 < b1 {
                e.n2a_unit(b1 - b2, b2)?
            } else {
                e.geometry.base_n2pt(class(b1), e.geometry.c2(), &e.h2)? + q(2) * e.n1f_unit(b1)?
            };
            Ok(total)
        })
    }

    /// 2B, `n_{b1 b2}(H |;)`.
    pub(super) fn n2b_unit(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(N2B, b1, b2), |e| {
            let mut total = Rational::zero();
            for pair in e.geometry.diagonal_pairs() {
                let left = e.base1(b1, &(&pair.omega * &e.h1))?;
                if !left.is_zero() {
                    total += left * e.base1(b2, &pair.omega_sharp)?;
                }
            }
            for b in 1..b1.min(b2) {
                total -= q(b) * e.m3_kernel(b1 - b, b, b2 - b)?;
            }
            total -= e.corr_c2_unit(b1, b2)?;
            Ok(total)
        })
    }

    /// 2C, `n_{b1 b2}(psi_2 |;)`: `psi` at the node on the second component.
    pub(super) fn n2c_kernel(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(N2C, b1, b2), |e| {
            let mut total = e.n2a_unit(b1, b2)? - q(2 * b2) * e.n2b_unit(b1, b2)?;
            for (b, b_prime) in splits(b2) {
                total += sq(b) * e.m3_kernel(b1, b_prime, b)?;
            }
            Ok(total / sq(b2))
        })
    }

    /// 2D, `n_{b1 b2}(|; psi H)`.
    ///
    /// The leading term is the divisor equation on the second component,
    /// `(H, b2) n_{b1 b2}(|; H^2)`.
    pub(super) fn n2d_unit(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(N2D, b1, b2), |e| {
            let h_mu = (&e.h1 * &e.h1).coefficient(2);
            let n2a = e.n2a_unit(b1, b2)?;
            let mut total = q(b2) * &n2a - q(2 * b2) * h_mu * n2a;
            for (b, b_prime) in splits(b2) {
                let weight = q(b) * sq(b_prime) + q(b_prime) * sq(b);
                total += weight * e.m3_kernel(b1, b_prime, b)?;
            }
            Ok(total / sq(b2))
        })
    }

    /// 2E, `n_{b1 b2}(|; psi^2)`.
    pub(super) fn n2e_kernel(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(N2E, b1, b2), |e| {
            let mut total = Rational::zero();
            for (b, b_prime) in splits(b2) {
                total -= e.m3_kernel(b1, b_prime, b)?;
            }
            Ok(total)
        })
    }

    pub(super) fn gamma2_kernel(&self, b1: u32, b2: u32) -> Result<Rational> {
        self.memoized(CountKey::two(Gamma2, b1, b2), |e| {
            Ok(&e.c2_scalar * e.n2a_unit(b1, b2)?
                + q(2) * e.n2e_kernel(b1, b2)?
                + e.n2c_kernel(b1, b2)?
                + e.n2c_kernel(b2, b1)?)
        })
    }

    /// Excess correction `C_{b1 b2}(H)` for the node-on-divisor count.
    pub(super) fn corr_c2_unit(&self, b1: u32, b2: u32) -> Result<Rational> {
        if b2 < b1 {
            return self.corr_c2_unit(b2, b1);
        }
        self.memoized(CountKey::two(CorrC2, b1, b2), |e| {
            if b2 > b1 {
                let rest = b2 - b1;
                let mut chains = Rational::zero();
                for (b, b_prime) in splits(rest) {
                    chains += e.m3_kernel(b, b1, b_prime)?;
                }
                Ok(e.n2d_unit(rest, b1)?
                    + e.n2b_unit(rest, b1)?
                    + q(b1) * (e.gamma2_kernel(rest, b1)? + chains / q(2)))
            } else {
                let c2_h = e.geometry.c2() * &e.h1;
                let mut total = e.base1(b1, &c2_h)?
                    + e.n1e_unit(b1)?
                    + &e.c2_scalar * e.n1d_unit(b1)?
                    + q(b1) * e.gamma1_kernel(b1)?;
                for (b, b_prime) in splits(b2) {
                    total -=
                        q(2) * e.n2d_unit(b, b_prime)? + frac(5, 2) * e.n2b_unit(b, b_prime)?;
                }
                Ok(total)
            }
        })
    }

    // ---- three components ----------------------------------------------

    /// `(C^(1), C^(2), C^(12))` for the chain `(b1, b2, b3)`, signs included.
    pub(super) fn corr_c3(
        &self,
        b1: u32,
        b2: u32,
        b3: u32,
    ) -> Result<(Rational, Rational, Rational)> {
        let first = if b3 > b1 {
            self.m3_kernel(b3 - b1, b1, b2)?
        } else if b3 < b1 {
            self.m3_kernel(b1 - b3, b3, b2)?
        } else {
            self.gamma2_kernel(b2, b1)?
        };
        let second = if b3 > b2 {
            self.m3_kernel(b1, b2, b3 - b2)?
        } else if b3 < b2 {
            self.m3_kernel(b1, b3, b2 - b3)? + self.m3_kernel(b1, b2 - b3, b3)?
        } else {
            &self.c2_scalar * self.n2a_unit(b1, b2)? + q(2) * self.n2e_kernel(b1, b2)?
        };
        let third = if b3 > b1 + b2 {
            self.m3_kernel(b3 - b1 - b2, b1, b2)?
        } else if b2 < b3 && b3 < b1 + b2 {
            self.m3_kernel(b1 + b2 - b3, b3 - b2, b2)?
        } else if b3 == b1 + b2 {
            self.gamma2_kernel(b2, b1)?
        } else {
            Rational::zero()
        };
        Ok((first, -second, -third))
    }

    /// Number of connected three-component chains of tridegree `(b1, b2, b3)`.
    pub(super) fn m3_kernel(&self, b1: u32, b2: u32, b3: u32) -> Result<Rational> {
        self.memoized(CountKey::three(M3, b1, b2, b3), |e| {
            let mut total = Rational::zero();
            for pair in e.geometry.diagonal_pairs() {
                let omega = pair.omega.coefficient(2);
                if omega.is_zero() {
                    continue;
                }
                let right = e.base1(b3, &pair.omega_sharp)?;
                if !right.is_zero() {
                    total += omega * e.n2a_unit(b1, b2)? * right;
                }
            }
            let (c1, c2, c12) = e.corr_c3(b1, b2, b3)?;
            Ok(total - c1 - c2 - c12)
        })
    }

    // ---- genus-1 family term -------------------------------------------

    /// `integral (2 c2 - c1^2)` over the genus-0 family of class `b`.
    pub(super) fn chern_kernel(&self, b: u32) -> Result<Rational> {
        self.memoized(CountKey::one(Chern, b), |e| {
            let single =
                e.n1g_kernel(b)? + &e.c2_scalar * e.n1c_unit(b)? + e.base1(b, e.geometry.c3())?;
            let mut nodes = Rational::zero();
            for (b1, b2) in splits(b) {
                nodes += e.n2c_kernel(b1, b2)? + e.n2c_kernel(b2, b1)?;
            }
            Ok(nodes / q(2) - single)
        })
    }
}
