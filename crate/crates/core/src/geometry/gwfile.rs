//! Line-oriented Gromov-Witten input for a rank-one compact 5-fold.
//!
//! ```text
//! cy5-gw v1
//! t5=7 c2=21 c3=-112 maxdeg=2
//! 1 <N0(H^3)> <N0(H^2,H^2)> <N1>
//! 2 <N0(H^3)> <N0(H^2,H^2)> <N1>
//! ```
//!
//! Rationals are written `p/q` or as integers. Blank lines are ignored.

use std::fmt;
use std::path::Path;

use num_traits::Zero;

use super::{hypersurface_diagonal, Geometry};
use crate::cohomology::Ring;
use crate::error::{Error, Result};
use crate::exact::{format_rational, invert_multi_cover, parse_rational, DegreeSeries, Rational};

const MAGIC: &str = "cy5-gw v1";

/// Raw Gromov-Witten invariants of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwRow {
    /// `N_{0,d}(H^3)`.
    pub one_point: Rational,
    /// `N_{0,d}(H^2, H^2)`.
    pub two_point: Rational,
    /// `N_{1,d}`.
    pub genus1: Rational,
}

/// Parsed contents of a GW input file. `rows[d-1]` holds degree `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwInput {
    pub t5: Rational,
    pub c2: Rational,
    pub c3: Rational,
    pub rows: Vec<GwRow>,
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

impl GwInput {
    pub fn max_degree(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        match lines.next() {
            Some((_, MAGIC)) => {}
            Some((n, other)) => {
                return Err(format_err(
                    n,
                    format!("expected {MAGIC:?}, found {other:?}"),
                ))
            }
            None => return Err(format_err(1, "empty input")),
        }

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| format_err(2, "missing header line"))?;
        let (mut t5, mut c2, mut c3, mut maxdeg) = (None, None, None, None);
        for field in header.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| {
                format_err(header_line, format!("expected key=value, found {field:?}"))
            })?;
            let slot = match key {
                "t5" => &mut t5,
                "c2" => &mut c2,
                "c3" => &mut c3,
                "maxdeg" => {
                    if maxdeg.is_some() {
                        return Err(format_err(header_line, "duplicate key maxdeg"));
                    }
                    let n: u32 = value
                        .parse()
                        .map_err(|_| format_err(header_line, format!("bad maxdeg {value:?}")))?;
                    if n == 0 {
                        return Err(format_err(header_line, "maxdeg must be >= 1"));
                    }
                    maxdeg = Some(n);
                    continue;
                }
                other => return Err(format_err(header_line, format!("unknown key {other:?}"))),
            };
            if slot.is_some() {
                return Err(format_err(header_line, format!("duplicate key {key}")));
            }
            *slot = Some(parse_rational(value, header_line)?);
        }
        let missing = |k: &str| format_err(header_line, format!("missing key {k}"));
        let t5 = t5.ok_or_else(|| missing("t5"))?;
        let c2 = c2.ok_or_else(|| missing("c2"))?;
        let c3 = c3.ok_or_else(|| missing("c3"))?;
        let maxdeg = maxdeg.ok_or_else(|| missing("maxdeg"))?;
        if t5.is_zero() {
            return Err(format_err(header_line, "t5 must be nonzero"));
        }

        let mut rows = Vec::with_capacity(maxdeg as usize);
        let mut last_line = header_line;
        for (n, line) in lines {
            last_line = n;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(format_err(
                    n,
                    format!("expected 4 fields, found {}", tokens.len()),
                ));
            }
            let degree: u32 = tokens[0]
                .parse()
                .map_err(|_| format_err(n, format!("bad degree {:?}", tokens[0])))?;
            let expected = rows.len() as u32 + 1;
            if degree > maxdeg {
                return Err(format_err(
                    n,
                    format!("degree {degree} exceeds maxdeg {maxdeg}"),
                ));
            }
            if degree > expected {
                return Err(format_err(n, format!("missing degree {expected}")));
            }
            if degree < expected {
                return Err(format_err(n, format!("degree {degree} out of order")));
            }
            rows.push(GwRow {
                one_point: parse_rational(tokens[1], n)?,
                two_point: parse_rational(tokens[2], n)?,
                genus1: parse_rational(tokens[3], n)?,
            });
        }
        if rows.len() < maxdeg as usize {
            return Err(format_err(
                last_line,
                format!("missing degree {}", rows.len() + 1),
            ));
        }
        Ok(GwInput { t5, c2, c3, rows })
    }

    /// Builds the geometry for degrees `1..=max_degree`, stripping multiple
    /// covers from both genus-0 columns.
    pub fn to_geometry(&self, max_degree: u32) -> Result<Geometry> {
        if max_degree == 0 {
            return Err(Error::Domain("max_degree must be >= 1".into()));
        }
        if max_degree > self.max_degree() {
            return Err(format_err(
                self.rows.len() + 2,
                format!("missing degree {}", self.max_degree() + 1),
            ));
        }
        let column = |f: fn(&GwRow) -> &Rational| {
            DegreeSeries::from_fn(max_degree, |d| f(&self.rows[d as usize - 1]).clone())
        };
        let ring = Ring::compact_fivefold(self.t5.clone())?;
        let c2 = ring.monomial(2, self.c2.clone());
        let c3 = ring.monomial(3, self.c3.clone());
        let diagonal = hypersurface_diagonal(&ring)?;
        Geometry::new(
            ring,
            c2,
            c3,
            diagonal,
            invert_multi_cover(&column(|r| &r.one_point)?, 1)?,
            invert_multi_cover(&column(|r| &r.two_point)?, 2)?,
            column(|r| &r.genus1)?,
        )
    }
}

impl fmt::Display for GwInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{MAGIC}")?;
        writeln!(
            f,
            "t5={} c2={} c3={} maxdeg={}",
            format_rational(&self.t5),
            format_rational(&self.c2),
            format_rational(&self.c3),
            self.rows.len()
        )?;
        for (i, row) in self.rows.iter().enumerate() {
            writeln!(
                f,
                "{} {} {} {}",
                i + 1,
                format_rational(&row.one_point),
                format_rational(&row.two_point),
                format_rational(&row.genus1)
            )?;
        }
        Ok(())
    }
}

/// Reads a GW input file and builds the geometry up to `max_degree`.
pub fn load_hypersurface_geometry(path: impl AsRef<Path>, max_degree: u32) -> Result<Geometry> {
    let text = std::fs::read_to_string(path)?;
    GwInput::parse(&text)?.to_geometry(max_degree)
}
