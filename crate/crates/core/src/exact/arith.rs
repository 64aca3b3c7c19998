use crate::error::{Error, Result};

/// Sum of the positive divisors of `d`.
pub fn sigma(d: i64) -> Result<u64> {
    if d <= 0 {
        return Err(Error::Domain(format!("sigma({d}) needs d >= 1")));
    }
    let d = d as u64;
    let mut total = 0;
    let mut i = 1;
    while i * i <= d {
        if d.is_multiple_of(i) {
            total += i;
            if i * i != d {
                total += d / i;
            }
        }
        i += 1;
    }
    Ok(total)
}

/// Möbius function: `(-1)^r` for a product of `r` distinct primes, else 0.
pub fn moebius(d: i64) -> Result<i8> {
    if d <= 0 {
        return Err(Error::Domain(format!("moebius({d}) needs d >= 1")));
    }
    let mut n = d as u64;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 12);
        for p in [2, 3, 5, 7, 97, 199] {
            assert_eq!(sigma(p).unwrap(), p as u64 + 1);
        }
        assert_eq!(sigma(36).unwrap(), 91);
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1).unwrap(), 1);
        assert_eq!(moebius(6).unwrap(), 1);
        assert_eq!(moebius(12).unwrap(), 0);
        assert_eq!(moebius(30).unwrap(), -1);
        assert_eq!(moebius(49).unwrap(), 0);
        assert_eq!(moebius(199).unwrap(), -1);
    }

    #[test]
    fn non_positive_arguments_are_domain_errors() {
        assert!(matches!(sigma(0), Err(Error::Domain(_))));
        assert!(matches!(sigma(-4), Err(Error::Domain(_))));
        assert!(matches!(moebius(0), Err(Error::Domain(_))));
    }

    #[test]
    fn sigma_matches_brute_force() {
        for d in 1..=500i64 {
            let brute: u64 = (1..=d).filter(|i| d % i == 0).map(|i| i as u64).sum();
            assert_eq!(sigma(d).unwrap(), brute, "d = {d}");
        }
    }

    proptest! {
        #[test]
        fn multiplicative_on_coprime(a in 1i64..400, b in 1i64..400) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(sigma(a * b).unwrap(), sigma(a).unwrap() * sigma(b).unwrap());
            prop_assert_eq!(moebius(a * b).unwrap(), moebius(a).unwrap() * moebius(b).unwrap());
        }

        #[test]
        fn square_factor_kills_moebius(p in prop::sample::select(vec![2i64, 3, 5, 7, 11, 13]), m in 1i64..300) {
            prop_assert_eq!(moebius(p * p * m).unwrap(), 0);
        }
    }
}
