//! Geometric input consumed by the recursion engine.

mod gwfile;

pub use gwfile::{load_hypersurface_geometry, GwInput, GwRow};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::{CohClass, CurveClass, Ring};
use crate::error::{Error, Result};
use crate::exact::{DegreeSeries, Rational};

/// One Künneth term `omega x omega#` of the diagonal class in the
/// `H^4 x H^6` and `H^6 x H^4` blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalPair {
    pub omega: CohClass,
    pub omega_sharp: CohClass,
}

/// Everything the engine needs to know about a Calabi-Yau 5-fold.
///
/// `one_point[d]` is the BPS count `n_{0,d}(H^3)` and `two_point[d]` is
/// `n_{0,d}(H^2, H^2)`, both already stripped of multiple covers. The base
/// counts extend to arbitrary insertions by linearity; components of the
/// wrong codimension contribute nothing.
#[derive(Debug, Clone)]
pub struct Geometry {
    ring: Ring,
    c2: CohClass,
    c3: CohClass,
    diagonal_pairs: Vec<DiagonalPair>,
    one_point: DegreeSeries,
    two_point: DegreeSeries,
    gw_genus1: DegreeSeries,
}

impl Geometry {
    pub fn new(
        ring: Ring,
        c2: CohClass,
        c3: CohClass,
        diagonal_pairs: Vec<DiagonalPair>,
        one_point: DegreeSeries,
        two_point: DegreeSeries,
        gw_genus1: DegreeSeries,
    ) -> Result<Self> {
        for class in [&c2, &c3].into_iter().chain(
            diagonal_pairs
                .iter()
                .flat_map(|p| [&p.omega, &p.omega_sharp]),
        ) {
            if class.ring() != &ring {
                return Err(Error::RingMismatch);
            }
        }
        c2.scalar_at(2)?;
        c3.scalar_at(3)?;
        let max_degree = one_point.max_degree();
        for other in [&two_point, &gw_genus1] {
            if other.max_degree() != max_degree {
                return Err(Error::SeriesMismatch {
                    left: max_degree,
                    right: other.max_degree(),
                });
            }
        }
        Ok(Geometry {
            ring,
            c2,
            c3,
            diagonal_pairs,
            one_point,
            two_point,
            gw_genus1,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn c2(&self) -> &CohClass {
        &self.c2
    }

    pub fn c3(&self) -> &CohClass {
        &self.c3
    }

    pub fn diagonal_pairs(&self) -> &[DiagonalPair] {
        &self.diagonal_pairs
    }

    pub fn gw_genus1(&self) -> &DegreeSeries {
        &self.gw_genus1
    }

    pub fn max_degree(&self) -> u32 {
        self.one_point.max_degree()
    }

    fn check_ring(&self, class: &CohClass) -> Result<()> {
        if class.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Count 1A, `n_beta(mu)`: only the `H^3` part of `mu` is seen.
    pub fn base_n1pt(&self, beta: CurveClass, mu: &CohClass) -> Result<Rational> {
        self.check_ring(mu)?;
        let x = mu.coefficient(3);
        if x.is_zero() {
            return Ok(x);
        }
        Ok(x * self.one_point.get(beta.degree())?)
    }

    /// Count 1B, `n_beta(mu1, mu2)`: only the `H^2 x H^2` part is seen.
    pub fn base_n2pt(&self, beta: CurveClass, mu1: &CohClass, mu2: &CohClass) -> Result<Rational> {
        self.check_ring(mu1)?;
        self.check_ring(mu2)?;
        let x = mu1.coefficient(2) * mu2.coefficient(2);
        if x.is_zero() {
            return Ok(x);
        }
        Ok(x * self.two_point.get(beta.degree())?)
    }

    /// `integral omega . omega#` for every diagonal pair; `None` for a
    /// non-compact model.
    pub fn diagonal_normalization(&self) -> Option<Vec<Rational>> {
        self.diagonal_pairs
            .iter()
            .map(|p| (&p.omega * &p.omega_sharp).integrate())
            .collect()
    }

    /// Copy of this geometry with every genus-0 and genus-1 input set to
    /// zero; the classes and diagonal pairs are kept.
    pub fn zeroed(&self) -> Self {
        let zeros = DegreeSeries::zeros(self.max_degree()).expect("max_degree >= 1");
        Geometry {
            one_point: zeros.clone(),
            two_point: zeros.clone(),
            gw_genus1: zeros,
            ..self.clone()
        }
    }
}

/// Coefficients `c_0 .. c_upto` of `(1+H)^(n+1) / (1 + k H)`.
fn hypersurface_chern_coefficients(ambient_dim: u32, hyp_degree: u32, upto: u32) -> Vec<BigInt> {
    let binom = |n: u32, k: u32| -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
    };
    let k = BigInt::from(hyp_degree);
    (0..=upto)
        .map(|p| {
            (0..=p)
                .map(|j| {
                    let sign = if j % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    binom(ambient_dim + 1, p - j) * sign * k.pow(j)
                })
                .sum()
        })
        .collect()
}

/// `(c2, c3)` of a Calabi-Yau hypersurface of degree `ambient_dim + 1` in
/// `P^ambient_dim`, as classes in `ring`.
pub fn hypersurface_chern(
    ring: &Ring,
    ambient_dim: u32,
    hyp_degree: u32,
) -> Result<(CohClass, CohClass)> {
    if ambient_dim == 0 || hyp_degree != ambient_dim + 1 {
        return Err(Error::NotCalabiYau {
            ambient_dim,
            hyp_degree,
        });
    }
    let c = hypersurface_chern_coefficients(ambient_dim, hyp_degree, 3);
    debug_assert!(c[1].is_zero());
    Ok((
        ring.monomial(2, Rational::from_integer(c[2].clone())),
        ring.monomial(3, Rational::from_integer(c[3].clone())),
    ))
}

/// Diagonal pairs `(H^2, H^3/t5)` and `(H^3, H^2/t5)` of a rank-one compact
/// 5-fold with `integral H^5 = t5`.
pub fn hypersurface_diagonal(ring: &Ring) -> Result<Vec<DiagonalPair>> {
    let t5 = ring
        .top_integral()
        .ok_or_else(|| Error::Domain("diagonal needs a compact ring".into()))?;
    let inv = Rational::one() / t5;
    Ok(vec![
        DiagonalPair {
            omega: ring.h(2),
            omega_sharp: ring.monomial(3, inv.clone()),
        },
        DiagonalPair {
            omega: ring.h(3),
            omega_sharp: ring.monomial(2, inv),
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, int};

    #[test]
    fn septic_chern_classes() {
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        let (c2, c3) = hypersurface_chern(&ring, 6, 7).unwrap();
        assert_eq!(c2, ring.monomial(2, int(21)));
        assert_eq!(c3, ring.monomial(3, int(-112)));
    }

    #[test]
    fn quintic_chern_classes() {
        let ring = Ring::local(3);
        let (c2, c3) = hypersurface_chern(&ring, 4, 5).unwrap();
        assert_eq!(c2.coefficient(2), int(10));
        assert_eq!(c3.coefficient(3), int(-40));
    }

    #[test]
    fn first_chern_class_vanishes() {
        for n in 1..12 {
            let c = hypersurface_chern_coefficients(n, n + 1, 3);
            assert!(c[1].is_zero(), "P^{n}");
            assert!(c[0].is_one());
        }
    }

    #[test]
    fn chern_expansion_by_series_product() {
        // Oracle: multiply (1+H)^7 by the truncated geometric series of 1/(1+7H).
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        let one_plus_h = &ring.h(0) + &ring.h(1);
        let mut total = ring.h(0);
        for _ in 0..7 {
            total = &total * &one_plus_h;
        }
        let mut inverse = ring.zero();
        for j in 0..=5u32 {
            inverse = &inverse + &ring.monomial(j, int((-7i64).pow(j)));
        }
        let c = &total * &inverse;
        assert_eq!(c.coefficient(1), int(0));
        assert_eq!(c.coefficient(2), int(21));
        assert_eq!(c.coefficient(3), int(-112));
    }

    #[test]
    fn non_calabi_yau_rejected() {
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        assert!(matches!(
            hypersurface_chern(&ring, 6, 6),
            Err(Error::NotCalabiYau { .. })
        ));
    }

    #[test]
    fn septic_diagonal_pairs() {
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        let pairs = hypersurface_diagonal(&ring).unwrap();
        assert_eq!(pairs[0].omega, ring.h(2));
        assert_eq!(pairs[0].omega_sharp, ring.monomial(3, frac(1, 7)));
        assert_eq!(pairs[1].omega, ring.h(3));
        assert_eq!(pairs[1].omega_sharp, ring.monomial(2, frac(1, 7)));
        for p in &pairs {
            assert_eq!((&p.omega * &p.omega_sharp).integrate(), Some(int(1)));
        }
    }

    fn toy_geometry() -> Geometry {
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        let (c2, c3) = hypersurface_chern(&ring, 6, 7).unwrap();
        let pairs = hypersurface_diagonal(&ring).unwrap();
        let s = |f: fn(u32) -> i64| DegreeSeries::from_fn(4, |d| int(f(d))).unwrap();
        Geometry::new(
            ring,
            c2,
            c3,
            pairs,
            s(|d| d as i64 + 1),
            s(|d| 10 * d as i64),
            s(|_| 0),
        )
        .unwrap()
    }

    #[test]
    fn base_counts_dimension_vanishing_and_linearity() {
        let g = toy_geometry();
        let r = g.ring().clone();
        let b = CurveClass::new(3).unwrap();
        assert_eq!(g.base_n1pt(b, &r.h(3)).unwrap(), int(4));
        assert_eq!(g.base_n1pt(b, &r.h(2)).unwrap(), int(0));
        assert_eq!(
            g.base_n1pt(b, &r.monomial(3, frac(-1, 2))).unwrap(),
            int(-2)
        );
        let mixed = &r.h(3) + &r.h(1);
        assert_eq!(g.base_n1pt(b, &mixed).unwrap(), int(4));
        assert_eq!(g.base_n2pt(b, &r.h(2), &r.h(2)).unwrap(), int(30));
        assert_eq!(g.base_n2pt(b, &r.h(2), &r.h(3)).unwrap(), int(0));
        assert_eq!(
            g.base_n2pt(b, &r.monomial(2, int(2)), &r.monomial(2, int(3)))
                .unwrap(),
            int(180)
        );
        assert!(g.base_n1pt(CurveClass::new(5).unwrap(), &r.h(3)).is_err());
        assert_eq!(
            g.base_n1pt(b, &Ring::local(2).h(2)),
            Err(Error::RingMismatch)
        );
        assert_eq!(g.diagonal_normalization(), Some(vec![int(1), int(1)]));
    }

    #[test]
    fn constructor_validates() {
        let ring = Ring::compact_fivefold(int(7)).unwrap();
        let z = |n| DegreeSeries::zeros(n).unwrap();
        assert!(Geometry::new(
            ring.clone(),
            ring.h(3),
            ring.zero(),
            vec![],
            z(2),
            z(2),
            z(2)
        )
        .is_err());
        assert!(Geometry::new(
            ring.clone(),
            ring.zero(),
            ring.zero(),
            vec![],
            z(2),
            z(3),
            z(2)
        )
        .is_err());
        assert!(Geometry::new(
            ring,
            Ring::local(2).h(2),
            Ring::local(2).zero(),
            vec![],
            z(2),
            z(2),
            z(2)
        )
        .is_err());
    }
}
