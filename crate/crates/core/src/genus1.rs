//! Genus-1 BPS tables and the closed-form check for local P^2.

use std::sync::atomic::{AtomicU32, Ordering};

use num_traits::Zero;

use crate::cohomology::CurveClass;
use crate::engine::{Engine, MemoStore, RECURSION_STACK_BYTES};
use crate::error::{Error, Result};
use crate::exact::{
    extract_genus1_bps, extract_genus1_bps_tilde, int, moebius, DegreeSeries, Rational,
};
use crate::geometry::Geometry;

#[derive(Debug, Clone, PartialEq)]
pub struct BpsReport {
    pub max_degree: u32,
    pub n1: DegreeSeries,
    pub n1_tilde: DegreeSeries,
    pub chern: DegreeSeries,
    /// Degrees whose `n1` is not an integer.
    pub integrality_failures: Vec<u32>,
}

impl BpsReport {
    pub fn is_integral(&self) -> bool {
        self.integrality_failures.is_empty()
    }
}

fn check_range(geometry: &Geometry, max_degree: u32) -> Result<()> {
    if max_degree == 0 {
        return Err(Error::Domain("max degree must be positive".into()));
    }
    if max_degree > geometry.max_degree() {
        return Err(Error::MissingDegree {
            degree: max_degree,
            max_degree: geometry.max_degree(),
        });
    }
    Ok(())
}

/// Chern integrals for degrees `1..=max_degree`, single-threaded.
pub fn chern_series(
    geometry: &Geometry,
    memo: &MemoStore,
    max_degree: u32,
) -> Result<DegreeSeries> {
    check_range(geometry, max_degree)?;
    crate::engine::with_large_stack(|| {
        let engine = Engine::new(geometry, memo);
        DegreeSeries::try_from_fn(max_degree, |d| engine.chern_integral(CurveClass::new(d)?))
    })
}

/// Same values as [`chern_series`], spread over `jobs` threads sharing `memo`.
pub fn chern_series_parallel(
    geometry: &Geometry,
    memo: &MemoStore,
    max_degree: u32,
    jobs: usize,
) -> Result<DegreeSeries> {
    if jobs <= 1 {
        return chern_series(geometry, memo, max_degree);
    }
    check_range(geometry, max_degree)?;
    let next = AtomicU32::new(1);
    let outcomes: Vec<Result<Vec<(u32, Rational)>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|_| {
                std::thread::Builder::new()
                    .stack_size(RECURSION_STACK_BYTES)
                    .spawn_scoped(scope, || {
                        let engine = Engine::new(geometry, memo);
                        let mut done = Vec::new();
                        loop {
                            let d = next.fetch_add(1, Ordering::SeqCst);
                            if d > max_degree {
                                return Ok(done);
                            }
                            done.push((d, engine.chern_integral(CurveClass::new(d)?)?));
                        }
                    })
                    .expect("spawn worker")
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|p| std::panic::resume_unwind(p)))
            .collect()
    });
    let mut values = vec![Rational::zero(); max_degree as usize];
    for outcome in outcomes {
        for (d, value) in outcome? {
            values[d as usize - 1] = value;
        }
    }
    DegreeSeries::new(values)
}

pub fn compute_bps_table(geometry: &Geometry, max_degree: u32) -> Result<BpsReport> {
    compute_bps_table_jobs(geometry, max_degree, 1)
}

pub fn compute_bps_table_jobs(
    geometry: &Geometry,
    max_degree: u32,
    jobs: usize,
) -> Result<BpsReport> {
    let memo = MemoStore::new();
    let chern = chern_series_parallel(geometry, &memo, max_degree, jobs)?;
    report_from_chern(geometry, chern)
}

/// Builds the report from precomputed Chern integrals.
pub fn report_from_chern(geometry: &Geometry, chern: DegreeSeries) -> Result<BpsReport> {
    let max_degree = chern.max_degree();
    let gw = geometry.gw_genus1().truncate(max_degree)?;
    let n1 = extract_genus1_bps(&gw, &chern)?;
    let n1_tilde = extract_genus1_bps_tilde(&gw, &chern)?;
    let integrality_failures = n1
        .iter()
        .filter(|(_, v)| !v.is_integer())
        .map(|(d, _)| d)
        .collect();
    Ok(BpsReport {
        max_degree,
        n1,
        n1_tilde,
        chern,
        integrality_failures,
    })
}

/// `mu(d)`, or `mu(d/4)` when `d = 4 mod 8`.
pub fn martin_s(d: u32) -> Result<i8> {
    if d == 0 {
        return Err(Error::Domain("martin_s needs d >= 1".into()));
    }
    if d % 8 == 4 {
        moebius(i64::from(d / 4))
    } else {
        moebius(i64::from(d))
    }
}

/// Closed-form magnitude in terms of the odd part `k` of `d`. Zero when `8 | d`.
pub fn martin_v(d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Domain("martin_v needs d >= 1".into()));
    }
    if d.is_multiple_of(8) {
        return Ok(Rational::zero());
    }
    let twos = d.trailing_zeros();
    let k = int(i64::from(d >> twos));
    let k2 = &k * &k;
    let base = (&k2 - int(1)) / int(8);
    let other = match twos {
        0 => base.clone(),
        1 => (int(17) * &k2 + int(7)) / int(8),
        _ => int(2) * &k2 + int(1),
    };
    Ok(base * other)
}

pub fn martin_prediction(d: u32) -> Result<Rational> {
    Ok(int(i64::from(martin_s(d)?)) * martin_v(d)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MartinRow {
    pub degree: u32,
    pub computed: Rational,
    pub predicted: Rational,
    pub matches: bool,
}

/// One row per degree. A row for `8 | d` matches only if the computed value is zero.
pub fn martin_check(report: &BpsReport) -> Result<Vec<MartinRow>> {
    report
        .n1
        .iter()
        .map(|(d, computed)| {
            let predicted = martin_prediction(d)?;
            let matches = computed == &predicted && (d % 8 != 0 || computed.is_zero());
            Ok(MartinRow {
                degree: d,
                computed: computed.clone(),
                predicted,
                matches,
            })
        })
        .collect()
}

/// `table[i][j] = n_{(i+1)(j+1)}(H |;)`, the two-component meeting numbers
/// with the node on a hyperplane. Needs `geometry.max_degree() >= 2 * size`.
pub fn meeting_table(geometry: &Geometry, size: u32) -> Result<Vec<Vec<Rational>>> {
    check_range(
        geometry,
        size.checked_mul(2)
            .ok_or_else(|| Error::Domain("table too large".into()))?,
    )?;
    let memo = MemoStore::new();
    crate::engine::with_large_stack(|| {
        let engine = Engine::new(geometry, &memo);
        let h = geometry.ring().h(1);
        (1..=size)
            .map(|d1| {
                (1..=size)
                    .map(|d2| engine.n2b(CurveClass::new(d1)?, CurveClass::new(d2)?, &h))
                    .collect()
            })
            .collect()
    })
}
