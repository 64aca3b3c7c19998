use num_traits::Zero;

use super::{arith::sigma, int, Rational};
use crate::error::{Error, Result};

/// Dense coefficients of `sum_d a_d q^d` for `1 <= d <= max_degree`.
///
/// Reading a degree outside the range is an error rather than an implicit
/// zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSeries {
    values: Vec<Rational>,
}

impl DegreeSeries {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain(
                "a degree series needs max_degree >= 1".into(),
            ));
        }
        Ok(DegreeSeries { values })
    }

    pub fn from_fn(max_degree: u32, mut f: impl FnMut(u32) -> Rational) -> Result<Self> {
        Self::new((1..=max_degree).map(&mut f).collect())
    }

    pub fn try_from_fn(
        max_degree: u32,
        mut f: impl FnMut(u32) -> Result<Rational>,
    ) -> Result<Self> {
        Self::new((1..=max_degree).map(&mut f).collect::<Result<_>>()?)
    }

    pub fn zeros(max_degree: u32) -> Result<Self> {
        Self::from_fn(max_degree, |_| Rational::zero())
    }

    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn get(&self, degree: u32) -> Result<&Rational> {
        if degree == 0 || degree > self.max_degree() {
            return Err(Error::MissingDegree {
                degree,
                max_degree: self.max_degree(),
            });
        }
        Ok(&self.values[degree as usize - 1])
    }

    /// Leading `max_degree` coefficients.
    pub fn truncate(&self, max_degree: u32) -> Result<Self> {
        if max_degree > self.max_degree() {
            return Err(Error::MissingDegree {
                degree: max_degree,
                max_degree: self.max_degree(),
            });
        }
        Self::new(self.values[..max_degree as usize].to_vec())
    }

    /// `(degree, value)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| (i as u32 + 1, v))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn check_same_range(a: &DegreeSeries, b: &DegreeSeries) -> Result<()> {
    if a.max_degree() != b.max_degree() {
        return Err(Error::SeriesMismatch {
            left: a.max_degree(),
            right: b.max_degree(),
        });
    }
    Ok(())
}

fn check_insertions(k: u32) -> Result<()> {
    if k != 1 && k != 2 {
        return Err(Error::Domain(format!(
            "multiple-cover inversion needs 1 or 2 insertions, got {k}"
        )));
    }
    Ok(())
}

/// Divisors of `n` greater than one, in increasing order.
fn proper_cover_factors(n: u32) -> impl Iterator<Item = u32> {
    (2..=n).filter(move |e| n.is_multiple_of(*e))
}

fn cover_weight(e: u32, k: u32) -> Rational {
    // 1 / e^(3-k)
    Rational::new(1.into(), num_bigint::BigInt::from(e).pow(3 - k))
}

/// `N_D = sum_{e | D} n_{D/e} / e^(3-k)`: the multiple-cover sum of a
/// genus-0 count with `k` insertions.
pub fn multi_cover_forward(bps: &DegreeSeries, k: u32) -> Result<DegreeSeries> {
    check_insertions(k)?;
    DegreeSeries::try_from_fn(bps.max_degree(), |d| {
        let mut total = bps.get(d)?.clone();
        for e in proper_cover_factors(d) {
            total += bps.get(d / e)? * cover_weight(e, k);
        }
        Ok(total)
    })
}

/// Inverse of [`multi_cover_forward`], solved degree by degree.
pub fn invert_multi_cover(gw: &DegreeSeries, k: u32) -> Result<DegreeSeries> {
    check_insertions(k)?;
    let mut out: Vec<Rational> = Vec::with_capacity(gw.max_degree() as usize);
    for d in 1..=gw.max_degree() {
        let mut value = gw.get(d)?.clone();
        for e in proper_cover_factors(d) {
            value -= &out[(d / e) as usize - 1] * cover_weight(e, k);
        }
        out.push(value);
    }
    DegreeSeries::new(out)
}

fn sigma_over(e: u32) -> Rational {
    Rational::new(
        sigma(e as i64).expect("e >= 1").into(),
        num_bigint::BigInt::from(e),
    )
}

/// Sum over `e | d` of `C_{d/e} / (24 e)`: the genus-0 family term of
/// the genus-1 multiple-cover formula.
fn chern_cover_term(chern: &DegreeSeries, d: u32) -> Result<Rational> {
    let mut total = Rational::zero();
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        total += chern.get(d / e)? / int(e as i64);
    }
    Ok(total / int(24))
}

/// `N1_D = sum_{e|D} sigma(e)/e * n1_{D/e} + (1/24) sum_{e|D} C_{D/e}/e`.
pub fn genus1_forward(n1: &DegreeSeries, chern: &DegreeSeries) -> Result<DegreeSeries> {
    check_same_range(n1, chern)?;
    DegreeSeries::try_from_fn(n1.max_degree(), |d| {
        let mut total = chern_cover_term(chern, d)?;
        for e in (1..=d).filter(|e| d % e == 0) {
            total += sigma_over(e) * n1.get(d / e)?;
        }
        Ok(total)
    })
}

/// Solves [`genus1_forward`] for the genus-1 counts `n1` given the genus-1
/// Gromov-Witten series and the per-degree Chern integrals.
pub fn extract_genus1_bps(gw1: &DegreeSeries, chern: &DegreeSeries) -> Result<DegreeSeries> {
    check_same_range(gw1, chern)?;
    let mut out: Vec<Rational> = Vec::with_capacity(gw1.max_degree() as usize);
    for d in 1..=gw1.max_degree() {
        let mut value = gw1.get(d)? - chern_cover_term(chern, d)?;
        for e in proper_cover_factors(d) {
            value -= sigma_over(e) * &out[(d / e) as usize - 1];
        }
        out.push(value);
    }
    DegreeSeries::new(out)
}

/// `N1_D = sum_{e|D} (n~1_{D/e} + C_{D/e}/24) / e`.
pub fn genus1_tilde_forward(n1_tilde: &DegreeSeries, chern: &DegreeSeries) -> Result<DegreeSeries> {
    check_same_range(n1_tilde, chern)?;
    DegreeSeries::try_from_fn(n1_tilde.max_degree(), |d| {
        let mut total = chern_cover_term(chern, d)?;
        for e in (1..=d).filter(|e| d % e == 0) {
            total += n1_tilde.get(d / e)? / int(e as i64);
        }
        Ok(total)
    })
}

/// Solves [`genus1_tilde_forward`] for `n~1`.
pub fn extract_genus1_bps_tilde(gw1: &DegreeSeries, chern: &DegreeSeries) -> Result<DegreeSeries> {
    check_same_range(gw1, chern)?;
    let mut out: Vec<Rational> = Vec::with_capacity(gw1.max_degree() as usize);
    for d in 1..=gw1.max_degree() {
        let mut value = gw1.get(d)? - chern_cover_term(chern, d)?;
        for e in proper_cover_factors(d) {
            value -= &out[(d / e) as usize - 1] / int(e as i64);
        }
        out.push(value);
    }
    DegreeSeries::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;
    use proptest::prelude::*;

    // Independent oracle: expand sum_n n_d sum_e q^{de}/e^{3-k} by brute force
    // over all (d, e) pairs with d*e <= max.
    fn brute_forward(n: &[Rational], k: u32) -> Vec<Rational> {
        let max = n.len();
        let mut out = vec![Rational::zero(); max];
        for d in 1..=max {
            for e in 1..=max / d {
                let w = Rational::new(1.into(), (e as i64).pow(3 - k).into());
                out[d * e - 1] += &n[d - 1] * w;
            }
        }
        out
    }

    fn series(values: &[Rational]) -> DegreeSeries {
        DegreeSeries::new(values.to_vec()).unwrap()
    }

    #[test]
    fn missing_degrees_are_errors() {
        let s = DegreeSeries::zeros(3).unwrap();
        assert!(s.get(0).is_err());
        assert!(s.get(4).is_err());
        assert!(s.get(3).is_ok());
        assert!(DegreeSeries::new(vec![]).is_err());
    }

    #[test]
    fn local_p2_genus0_inversion() {
        let gw = DegreeSeries::from_fn(200, |d| {
            let sign = if d % 2 == 1 { 1 } else { -1 };
            frac(sign, d as i64)
        })
        .unwrap();
        let n = invert_multi_cover(&gw, 2).unwrap();
        for (d, v) in n.iter() {
            let expected = match d {
                1 => int(1),
                2 => int(-1),
                _ => int(0),
            };
            assert_eq!(v, &expected, "d = {d}");
        }
    }

    #[test]
    fn zero_series_inverts_to_zero() {
        for k in [1, 2] {
            let n = invert_multi_cover(&DegreeSeries::zeros(12).unwrap(), k).unwrap();
            assert!(n.values().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn one_pointed_single_line_round_trip() {
        let mut n = vec![Rational::zero(); 30];
        n[0] = int(1);
        let gw = brute_forward(&n, 1);
        for (i, v) in gw.iter().enumerate() {
            let d = i as i64 + 1;
            assert_eq!(v, &frac(1, d * d));
        }
        assert_eq!(
            invert_multi_cover(&series(&gw), 1).unwrap().values(),
            &n[..]
        );
    }

    #[test]
    fn bad_insertion_count() {
        let s = DegreeSeries::zeros(2).unwrap();
        assert!(invert_multi_cover(&s, 0).is_err());
        assert!(invert_multi_cover(&s, 3).is_err());
    }

    #[test]
    fn genus1_single_term() {
        // D = 1: n1 = N1 - C/24.
        let gw = series(&[frac(-1, 8)]);
        let chern = series(&[int(-3)]);
        assert_eq!(extract_genus1_bps(&gw, &chern).unwrap().values(), &[int(0)]);
        assert_eq!(
            extract_genus1_bps_tilde(&gw, &chern).unwrap().values(),
            &[int(0)]
        );
        let gw = series(&[frac(5, 7)]);
        let chern = series(&[int(11)]);
        assert_eq!(
            extract_genus1_bps_tilde(&gw, &chern).unwrap().values(),
            &[frac(5, 7) - frac(11, 24)]
        );
    }

    #[test]
    fn genus1_zero() {
        let z = DegreeSeries::zeros(20).unwrap();
        assert!(extract_genus1_bps(&z, &z)
            .unwrap()
            .values()
            .iter()
            .all(Zero::is_zero));
        assert!(extract_genus1_bps_tilde(&z, &z)
            .unwrap()
            .values()
            .iter()
            .all(Zero::is_zero));
    }

    #[test]
    fn genus1_range_mismatch() {
        let a = DegreeSeries::zeros(3).unwrap();
        let b = DegreeSeries::zeros(4).unwrap();
        assert!(matches!(
            extract_genus1_bps(&a, &b),
            Err(Error::SeriesMismatch { .. })
        ));
    }

    #[test]
    fn genus1_forward_matches_brute_force() {
        // sigma(e)/e weights spelled out against a hand expansion at D = 6.
        let n1 = series(&(1..=6).map(|d| int(d * d)).collect::<Vec<_>>());
        let chern = series(&(1..=6).map(|d| int(3 - d)).collect::<Vec<_>>());
        let gw = genus1_forward(&n1, &chern).unwrap();
        // e = 1,2,3,6: sigma/e = 1, 3/2, 4/3, 2; n1_{6/e} = 36, 9, 4, 1.
        let cover = int(36) + frac(3, 2) * int(9) + frac(4, 3) * int(4) + int(2);
        // C_{6/e}/e = -3/1, 0/2, 1/3, 2/6.
        let family = (int(-3) + frac(1, 3) + frac(1, 3)) / int(24);
        assert_eq!(gw.get(6).unwrap(), &(cover + family));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #[test]
        fn multi_cover_round_trip(values in prop::collection::vec(rational(), 1..=40), k in 1u32..=2) {
            let gw = brute_forward(&values, k);
            prop_assert_eq!(&multi_cover_forward(&series(&values), k).unwrap().values().to_vec(), &gw);
            let back = invert_multi_cover(&series(&gw), k).unwrap();
            prop_assert_eq!(back.values(), &values[..]);
        }

        #[test]
        fn genus1_round_trip(
            pairs in prop::collection::vec((rational(), rational()), 1..=40)
        ) {
            let n1 = series(&pairs.iter().map(|p| p.0.clone()).collect::<Vec<_>>());
            let chern = series(&pairs.iter().map(|p| p.1.clone()).collect::<Vec<_>>());
            let gw = genus1_forward(&n1, &chern).unwrap();
            prop_assert_eq!(extract_genus1_bps(&gw, &chern).unwrap(), n1.clone());
            let gw_tilde = genus1_tilde_forward(&n1, &chern).unwrap();
            prop_assert_eq!(extract_genus1_bps_tilde(&gw_tilde, &chern).unwrap(), n1);
        }
    }
}
