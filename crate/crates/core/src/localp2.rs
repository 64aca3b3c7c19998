//! The local 5-fold `O(-1)+O(-1)+O(-1) -> P^2`.
//!
//! Base data comes from the closed forms `N_{0,d} = (-1)^(d-1)/d` and
//! `N_{1,d} = (-1)^d/(8d)`. The torus fixed-point evaluations below recompute
//! both from the fixed-locus weights at explicit rational weights and serve as
//! an independent check of the closed forms.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::Ring;
use crate::error::{Error, Result};
use crate::exact::{frac, int, invert_multi_cover, DegreeSeries, Rational};
use crate::geometry::Geometry;

/// `N_{0,d}(H^2, H^2) = (-1)^(d-1) / d`.
pub fn genus0_closed_form(d: u32) -> Rational {
    let sign = if d % 2 == 1 { 1 } else { -1 };
    frac(sign, d as i64)
}

/// `N_{1,d} = (-1)^d / (8d)`.
pub fn genus1_closed_form(d: u32) -> Rational {
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    frac(sign, 8 * d as i64)
}

/// Geometry of local `P^2` for degrees up to `max_degree`.
///
/// The zero section carries `Q[H]/(H^3)`; its diagonal has no `H^4 x H^6`
/// part, so the list of diagonal pairs is empty.
pub fn localp2_geometry(max_degree: u32) -> Result<Geometry> {
    if max_degree == 0 {
        return Err(Error::Domain("max_degree must be >= 1".into()));
    }
    let ring = Ring::local(2);
    // c(TX) = (1+H)^3 (1-H)^3 restricted to the zero section.
    let one_plus = &ring.h(0) + &ring.h(1);
    let one_minus = &ring.h(0) - &ring.h(1);
    let mut total = ring.h(0);
    for _ in 0..3 {
        total = &(&total * &one_plus) * &one_minus;
    }
    let c2 = ring.monomial(2, total.coefficient(2));
    let c3 = ring.monomial(3, total.coefficient(3));
    let two_point = invert_multi_cover(&DegreeSeries::from_fn(max_degree, genus0_closed_form)?, 2)?;
    Geometry::new(
        ring,
        c2,
        c3,
        Vec::new(),
        DegreeSeries::zeros(max_degree)?,
        two_point,
        DegreeSeries::from_fn(max_degree, genus1_closed_form)?,
    )
}

/// Torus weights on `C^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTriple {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl WeightTriple {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if a == b || b == c || a == c {
            return Err(Error::Domain("weights must be pairwise distinct".into()));
        }
        Ok(WeightTriple { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// The six orderings `(x, y, z)` of the weights.
    pub fn orderings(&self) -> [(&Rational, &Rational, &Rational); 6] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [
            (a, b, c),
            (b, a, c),
            (a, c, b),
            (c, a, b),
            (b, c, a),
            (c, b, a),
        ]
    }

    /// True when no fixed-locus weight vanishes for any degree `<= max_degree`
    /// and any ordering of the triple.
    pub fn is_admissible(&self, max_degree: u32) -> bool {
        (1..=max_degree).all(|d| {
            self.orderings()
                .iter()
                .all(|(x, y, z)| (0..=d).all(|r| !line_weight(d, r, x, y, z).is_zero()))
        })
    }
}

/// `z - ((d-r) x + r y) / d`: weight of the third coordinate at the `r`-th
/// point of the degree-`d` cover of the line through the `x` and `y` points.
fn line_weight(d: u32, r: u32, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    z - (x * int((d - r) as i64) + y * int(r as i64)) / int(d as i64)
}

fn factorial(n: u32) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, i| acc * i))
}

fn sign(exponent: u32) -> Rational {
    if exponent.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn check_locus(
    d: u32,
    x: &Rational,
    y: &Rational,
    z: &Rational,
    range: std::ops::RangeInclusive<u32>,
) -> Result<Rational> {
    let mut product = Rational::one();
    for r in range {
        let w = line_weight(d, r, x, y, z);
        if w.is_zero() {
            return Err(Error::DegenerateWeights { degree: d });
        }
        product *= w;
    }
    Ok(product)
}

/// Genus-0 fixed-point evaluation of `N_{0,d}(H^2, H^2)`: the unique
/// contributing locus is the `d`-fold cover of the line through the two
/// insertion points.
pub fn localization_g0(d: u32, w: &WeightTriple) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Domain("degree must be >= 1".into()));
    }
    let (a, b, c) = (&w.a, &w.b, &w.c);
    let interior = check_locus(d, a, b, c, 1..=d - 1)?;
    let scale = sign(d - 1) * factorial(d - 1) / int(d as i64).pow((d - 1) as i32);
    let first = &scale * (a - b).pow((d - 1) as i32);
    let second = &scale * (b - a).pow((d - 1) as i32);
    let third = sign(d - 1) * &interior;
    let tangent = sign(d - 1) * factorial(d - 1).pow(2) / int(d as i64).pow(2 * (d - 1) as i32)
        * (a - b).pow(2 * (d - 1) as i32)
        * &interior;
    Ok(first * second * third / tangent / int(d as i64))
}

/// `c + l*lambda + p*psi` on `M_{1,1}`, where every product of two degree-one
/// classes vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: Rational,
    pub lambda_coeff: Rational,
    pub psi_coeff: Rational,
}

impl LinearForm {
    pub fn new(constant: Rational, lambda_coeff: Rational, psi_coeff: Rational) -> Self {
        LinearForm {
            constant,
            lambda_coeff,
            psi_coeff,
        }
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(value, Rational::zero(), Rational::zero())
    }

    pub fn lambda() -> Self {
        Self::new(Rational::zero(), int(1), Rational::zero())
    }

    pub fn psi() -> Self {
        Self::new(Rational::zero(), Rational::zero(), int(1))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        if self.constant.is_zero() {
            return Err(Error::Domain(
                "linear form with zero constant is not invertible".into(),
            ));
        }
        let c0 = &self.constant;
        let sq = c0 * c0;
        Ok(Self::new(
            Rational::one() / c0,
            -&self.lambda_coeff / &sq,
            -&self.psi_coeff / &sq,
        ))
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: LinearForm) -> LinearForm {
        LinearForm::new(
            self.constant + rhs.constant,
            self.lambda_coeff + rhs.lambda_coeff,
            self.psi_coeff + rhs.psi_coeff,
        )
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: LinearForm) -> LinearForm {
        self + (-rhs)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm::new(-self.constant, -self.lambda_coeff, -self.psi_coeff)
    }
}

impl Mul for &LinearForm {
    type Output = LinearForm;
    fn mul(self, rhs: &LinearForm) -> LinearForm {
        LinearForm::new(
            &self.constant * &rhs.constant,
            &self.constant * &rhs.lambda_coeff + &self.lambda_coeff * &rhs.constant,
            &self.constant * &rhs.psi_coeff + &self.psi_coeff * &rhs.constant,
        )
    }
}

impl Mul for LinearForm {
    type Output = LinearForm;
    fn mul(self, rhs: LinearForm) -> LinearForm {
        &self * &rhs
    }
}

/// `integral over M_{1,1}` using `integral lambda = integral psi = 1/24`.
pub fn integrate_m11(f: &LinearForm) -> Rational {
    (&f.lambda_coeff + &f.psi_coeff) / int(24)
}

/// Contribution to `N_{1,d}` of the `d`-fold cover of the line through the
/// `x` and `y` fixed points with the contracted elliptic component at the
/// `x` point; `z` is the remaining weight.
pub fn localization_g1_locus(d: u32, x: &Rational, y: &Rational, z: &Rational) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Domain("degree must be >= 1".into()));
    }
    let interior = check_locus(d, x, y, z, 1..=d - 1)?;
    let full = check_locus(d, x, y, z, 0..=d)?;
    let k = |v: Rational| LinearForm::constant(v);
    let lambda = LinearForm::lambda;

    let scale = sign(d - 1) * factorial(d - 1) / int(d as i64).pow((d - 1) as i32);
    let first = k(&scale * (x - y).pow((d - 1) as i32)) * (-lambda());
    let second = k(&scale * (y - x).pow((d - 1) as i32)) * (k(x - y) - lambda());
    let third = k(sign(d - 1) * interior) * (k(x - z) - lambda());
    let obstruction = (k(y - x) - lambda()) * (k(z - x) - lambda());
    let tangent = k(
        sign(d) * factorial(d).pow(2) / int(d as i64).pow((2 * d - 1) as i32)
            * (x - y).pow((2 * d - 1) as i32)
            * full,
    ) * (k((y - x) / int(d as i64)) - LinearForm::psi());

    let integrand = first * second * third * obstruction * tangent.inverse()?;
    Ok(integrate_m11(&integrand) / int(d as i64))
}

/// Closed form of [`localization_g1_locus`]: `((-1)^d / 24d) (z-x)/(z-y)`.
pub fn locus_closed_form(d: u32, x: &Rational, y: &Rational, z: &Rational) -> Rational {
    sign(d) / int(24 * d as i64) * (z - x) / (z - y)
}

/// `sum over orderings of (z-x)/(z-y)`; equals 3 for any distinct weights.
pub fn cover_factor_sum(w: &WeightTriple) -> Rational {
    w.orderings()
        .iter()
        .map(|(x, y, z)| (*z - *x) / (*z - *y))
        .sum()
}

/// Per-locus genus-1 contributions, in the order of [`WeightTriple::orderings`].
pub fn localization_g1_loci(d: u32, w: &WeightTriple) -> Result<Vec<Rational>> {
    w.orderings()
        .iter()
        .map(|(x, y, z)| localization_g1_locus(d, x, y, z))
        .collect()
}

/// Genus-1 fixed-point evaluation of `N_{1,d}`: sum of the six loci.
pub fn localization_g1(d: u32, w: &WeightTriple) -> Result<Rational> {
    Ok(localization_g1_loci(d, w)?.into_iter().sum())
}

/// Draw budget of [`WeightSampler::admissible`].
pub const MAX_DRAWS: usize = 10_000;

/// Deterministic source of random rational weight triples.
#[derive(Debug, Clone)]
pub struct WeightSampler {
    rng: ChaCha8Rng,
    numerator_bound: i64,
    denominator_bound: i64,
}

impl WeightSampler {
    pub fn new(seed: u64) -> Self {
        WeightSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            numerator_bound: 1_000,
            denominator_bound: 30,
        }
    }

    /// Narrows the draw to numerators in `-bound..=bound` over denominator 1.
    pub fn with_integer_bound(mut self, bound: i64) -> Self {
        self.numerator_bound = bound;
        self.denominator_bound = 1;
        self
    }

    fn draw(&mut self) -> Rational {
        let n = self
            .rng
            .gen_range(-self.numerator_bound..=self.numerator_bound);
        let d = self.rng.gen_range(1..=self.denominator_bound);
        frac(n, d)
    }

    /// Draws until the triple is admissible for every degree up to
    /// `max_degree`. Returns the triple and the number of rejected draws, or
    /// `DegenerateWeights` after [`MAX_DRAWS`] rejections.
    pub fn admissible(&mut self, max_degree: u32) -> Result<(WeightTriple, usize)> {
        for rejected in 0..MAX_DRAWS {
            if let Ok(w) = WeightTriple::new(self.draw(), self.draw(), self.draw()) {
                if w.is_admissible(max_degree) {
                    return Ok((w, rejected));
                }
            }
        }
        Err(Error::DegenerateWeights { degree: max_degree })
    }
}
