//! Memoized evaluation of the genus-0 count families of a Calabi-Yau 5-fold
//! and of the Chern integral that weighs genus-0 families in genus 1.
//!
//! Public methods take arbitrary classes and curve classes; each insertion
//! must be a multiple of the H-power its slot expects (the zero class fits
//! every slot). Values are computed with unit insertions and scaled.

mod memo;
mod recursions;

pub use memo::{CountKey, CountKind, MemoStore};

use std::cell::RefCell;
use std::collections::HashSet;

use crate::cohomology::{CohClass, CurveClass};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::geometry::Geometry;

/// Stack size for threads that drive deep recursions.
pub const RECURSION_STACK_BYTES: usize = 512 << 20;

/// Evaluator bound to one geometry and one memo. Not `Sync`: give each
/// thread its own `Engine` over a shared [`MemoStore`].
pub struct Engine<'a> {
    geometry: &'a Geometry,
    memo: &'a MemoStore,
    active: RefCell<HashSet<CountKey>>,
    c2_scalar: Rational,
    h1: CohClass,
    h2: CohClass,
}

impl<'a> Engine<'a> {
    pub fn new(geometry: &'a Geometry, memo: &'a MemoStore) -> Self {
        let ring = geometry.ring();
        Engine {
            geometry,
            memo,
            active: RefCell::new(HashSet::new()),
            c2_scalar: geometry.c2().coefficient(2),
            h1: ring.h(1),
            h2: ring.h(2),
        }
    }

    pub fn geometry(&self) -> &Geometry {
        self.geometry
    }

    pub fn memo(&self) -> &MemoStore {
        self.memo
    }

    fn memoized(
        &self,
        key: CountKey,
        compute: impl FnOnce(&Self) -> Result<Rational>,
    ) -> Result<Rational> {
        if let Some(value) = self.memo.get(&key) {
            return Ok(value);
        }
        if !self.active.borrow_mut().insert(key) {
            return Err(Error::Cycle(key.to_string()));
        }
        let result = compute(self);
        self.active.borrow_mut().remove(&key);
        let value = result?;
        self.memo.insert(key, value.clone())?;
        Ok(value)
    }

    fn check(&self, degrees: &[CurveClass]) -> Result<()> {
        let total: u32 = degrees.iter().map(|b| b.degree()).sum();
        if total > self.geometry.max_degree() {
            return Err(Error::MissingDegree {
                degree: total,
                max_degree: self.geometry.max_degree(),
            });
        }
        Ok(())
    }

    fn scalar(&self, mu: &CohClass, power: u32) -> Result<Rational> {
        if mu.ring() != self.geometry.ring() {
            return Err(Error::RingMismatch);
        }
        mu.scalar_at(power)
    }

    /// 1A, `n_b(mu)` for `mu` in `H^6`.
    pub fn n1a(&self, beta: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        let x = self.scalar(mu, 3)?;
        Ok(x * self.base1(beta.degree(), &self.geometry.ring().h(3))?)
    }

    /// 1B, `n_b(mu1, mu2)` for `mu_i` in `H^4`.
    pub fn n1b(&self, beta: CurveClass, mu1: &CohClass, mu2: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        let x = self.scalar(mu1, 2)? * self.scalar(mu2, 2)?;
        Ok(x * self.n1b_unit(beta.degree())?)
    }

    /// 1C, `n_b(psi mu)` for `mu` in `H^4`.
    pub fn n1c(&self, beta: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        Ok(self.scalar(mu, 2)? * self.n1c_unit(beta.degree())?)
    }

    /// 1D, `n_b(psi mu1, mu2)` for `mu1` in `H^2`, `mu2` in `H^4`.
    pub fn n1d(&self, beta: CurveClass, mu1: &CohClass, mu2: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        let x = self.scalar(mu1, 1)? * self.scalar(mu2, 2)?;
        Ok(x * self.n1d_unit(beta.degree())?)
    }

    /// 1E, `n_b(psi^2 mu)` for `mu` in `H^2`.
    pub fn n1e(&self, beta: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        Ok(self.scalar(mu, 1)? * self.n1e_unit(beta.degree())?)
    }

    /// 1F, `n_b(psi^2, mu)` for `mu` in `H^4`.
    pub fn n1f(&self, beta: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[beta])?;
        Ok(self.scalar(mu, 2)? * self.n1f_unit(beta.degree())?)
    }

    /// 1G, `n_b(psi^3)`.
    pub fn n1g(&self, beta: CurveClass) -> Result<Rational> {
        self.check(&[beta])?;
        self.n1g_kernel(beta.degree())
    }

    pub fn gamma1(&self, beta: CurveClass) -> Result<Rational> {
        self.check(&[beta])?;
        self.gamma1_kernel(beta.degree())
    }

    /// 2A, `n_{b1 b2}(|; mu)` for `mu` in `H^4`.
    pub fn n2a(&self, b1: CurveClass, b2: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        Ok(self.scalar(mu, 2)? * self.n2a_unit(b1.degree(), b2.degree())?)
    }

    /// 2B, `n_{b1 b2}(mu |;)` for `mu` in `H^2`: the node lies on `mu`.
    pub fn n2b(&self, b1: CurveClass, b2: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        Ok(self.scalar(mu, 1)? * self.n2b_unit(b1.degree(), b2.degree())?)
    }

    /// 2C, `n_{b1 b2}(psi_2 |;)`.
    pub fn n2c(&self, b1: CurveClass, b2: CurveClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        self.n2c_kernel(b1.degree(), b2.degree())
    }

    /// 2D, `n_{b1 b2}(|; psi mu)` for `mu` in `H^2`.
    pub fn n2d(&self, b1: CurveClass, b2: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        Ok(self.scalar(mu, 1)? * self.n2d_unit(b1.degree(), b2.degree())?)
    }

    /// 2E, `n_{b1 b2}(|; psi^2)`.
    pub fn n2e(&self, b1: CurveClass, b2: CurveClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        self.n2e_kernel(b1.degree(), b2.degree())
    }

    pub fn gamma2(&self, b1: CurveClass, b2: CurveClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        self.gamma2_kernel(b1.degree(), b2.degree())
    }

    /// Excess correction `C_{b1 b2}(mu)` for `mu` in `H^2`.
    pub fn correction_c2(&self, b1: CurveClass, b2: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check(&[b1, b2])?;
        Ok(self.scalar(mu, 1)? * self.corr_c2_unit(b1.degree(), b2.degree())?)
    }

    /// `(C^(1), C^(2), C^(12))` with their leading signs applied.
    pub fn correction_c3(
        &self,
        b1: CurveClass,
        b2: CurveClass,
        b3: CurveClass,
    ) -> Result<(Rational, Rational, Rational)> {
        self.check(&[b1, b2, b3])?;
        self.corr_c3(b1.degree(), b2.degree(), b3.degree())
    }

    /// Chains of three rational curves of tridegree `(b1, b2, b3)`.
    pub fn m3(&self, b1: CurveClass, b2: CurveClass, b3: CurveClass) -> Result<Rational> {
        self.check(&[b1, b2, b3])?;
        self.m3_kernel(b1.degree(), b2.degree(), b3.degree())
    }

    /// `integral (2 c2 - c1^2)` over the family of rational curves of class `beta`.
    pub fn chern_integral(&self, beta: CurveClass) -> Result<Rational> {
        self.check(&[beta])?;
        self.chern_kernel(beta.degree())
    }
}

/// Runs `f` on a scoped thread with [`RECURSION_STACK_BYTES`] of stack.
pub fn with_large_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(RECURSION_STACK_BYTES)
            .spawn_scoped(scope, f)
            .expect("spawn recursion thread")
            .join()
            .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
    })
}
