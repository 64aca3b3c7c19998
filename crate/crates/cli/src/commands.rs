use std::path::Path;

use cy5_core::exact::int;
use cy5_core::genus1::{compute_bps_table_jobs, martin_check, meeting_table};
use cy5_core::geometry::GwInput;
use cy5_core::localp2::{
    cover_factor_sum, genus0_closed_form, genus1_closed_form, localization_g0,
    localization_g1_loci, localp2_geometry, locus_closed_form, WeightSampler,
};
use cy5_core::{Error, Rational};
use serde_json::json;

use crate::render::{matrix_csv, matrix_json, Cell, Table};
use crate::{Format, Status};

/// Rendered output plus the exit status it implies.
pub struct Report {
    pub text: String,
    pub status: Status,
}

fn fail(err: Error) -> Status {
    eprintln!("error: {err}");
    match err {
        Error::Cycle(_) | Error::MemoConflict(_) => Status::Failed,
        _ => Status::Usage,
    }
}

fn finish(table: &Table, format: Format, ok: bool) -> Report {
    let text = match format {
        Format::Csv => table.csv(),
        Format::Json => format!("{:#}\n", table.json()),
    };
    Report {
        text,
        status: if ok { Status::Ok } else { Status::Failed },
    }
}

pub fn local_p2(max_degree: u32, jobs: usize, format: Format) -> Result<Report, Status> {
    let geometry = localp2_geometry(max_degree).map_err(fail)?;
    let report = compute_bps_table_jobs(&geometry, max_degree, jobs).map_err(fail)?;
    let martin = martin_check(&report).map_err(fail)?;
    let mut table = Table::new(vec![
        "d",
        "n1",
        "n1_tilde",
        "chern",
        "martin_predicted",
        "match",
    ]);
    for ((d, n1), row) in report.n1.iter().zip(&martin) {
        table.push(vec![
            Cell::Int(d.into()),
            Cell::Rational(n1.clone()),
            Cell::Rational(report.n1_tilde.get(d).map_err(fail)?.clone()),
            Cell::Rational(report.chern.get(d).map_err(fail)?.clone()),
            Cell::Rational(row.predicted.clone()),
            Cell::Bool(row.matches),
        ]);
    }
    for d in &report.integrality_failures {
        eprintln!("degree {d}: n1 is not an integer");
    }
    let ok = report.is_integral() && martin.iter().all(|r| r.matches);
    Ok(finish(&table, format, ok))
}

pub fn hypersurface(
    input: &Path,
    max_degree: Option<u32>,
    meeting: Option<u32>,
    jobs: usize,
    format: Format,
) -> Result<Report, Status> {
    let text = std::fs::read_to_string(input).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", input.display());
        Status::Usage
    })?;
    let parsed = GwInput::parse(&text).map_err(|e| {
        eprintln!("{}: {e}", input.display());
        Status::Usage
    })?;
    let max_degree = max_degree.unwrap_or(parsed.max_degree());
    if let Some(size) = meeting {
        if u64::from(max_degree) < 2 * u64::from(size) {
            eprintln!(
                "error: --meeting-table {size} needs --max-degree >= {}",
                2 * u64::from(size)
            );
            return Err(Status::Usage);
        }
    }
    let geometry = parsed.to_geometry(max_degree).map_err(fail)?;
    let report = compute_bps_table_jobs(&geometry, max_degree, jobs).map_err(fail)?;
    let mut table = Table::new(vec!["d", "n1", "n1_tilde", "chern"]);
    for (d, n1) in report.n1.iter() {
        table.push(vec![
            Cell::Int(d.into()),
            Cell::Rational(n1.clone()),
            Cell::Rational(report.n1_tilde.get(d).map_err(fail)?.clone()),
            Cell::Rational(report.chern.get(d).map_err(fail)?.clone()),
        ]);
    }
    for d in &report.integrality_failures {
        eprintln!("degree {d}: n1 is not an integer");
    }
    let matrix = match meeting {
        Some(size) => Some(meeting_table(&geometry, size).map_err(fail)?),
        None => None,
    };
    let ok = report.is_integral();
    let mut out = finish(&table, format, ok);
    if let Some(matrix) = matrix {
        out.text = match format {
            Format::Csv => format!("{}\n{}", out.text, matrix_csv(&matrix)),
            Format::Json => format!(
                "{:#}\n",
                json!({ "n1": table.json(), "meeting_table": matrix_json(&matrix) })
            ),
        };
    }
    Ok(out)
}

pub fn verify_localization(
    max_degree: u32,
    seed: u64,
    triples: usize,
    format: Format,
) -> Result<Report, Status> {
    let mut sampler = WeightSampler::new(seed);
    let mut weights = Vec::with_capacity(triples);
    for _ in 0..triples {
        let (w, rejected) = sampler.admissible(max_degree).map_err(fail)?;
        if rejected > 0 {
            eprintln!("redrew {rejected} degenerate weight triple(s)");
        }
        weights.push(w);
    }
    let three = int(3);
    if let Some(w) = weights.iter().find(|w| cover_factor_sum(w) != three) {
        eprintln!("cover factor sum is not 3 for {w:?}");
        return Ok(Report {
            text: String::new(),
            status: Status::Failed,
        });
    }
    let mut table = Table::new(vec!["d", "g0", "g1", "result"]);
    let mut all = true;
    for d in 1..=max_degree {
        let mut pass = true;
        let mut shown: Option<(Rational, Rational)> = None;
        for w in &weights {
            let g0 = localization_g0(d, w).map_err(fail)?;
            let loci = localization_g1_loci(d, w).map_err(fail)?;
            let loci_ok = w
                .orderings()
                .iter()
                .zip(&loci)
                .all(|((x, y, z), value)| *value == locus_closed_form(d, x, y, z));
            let g1: Rational = loci.into_iter().sum();
            pass &= loci_ok && g0 == genus0_closed_form(d) && g1 == genus1_closed_form(d);
            shown.get_or_insert((g0, g1));
        }
        let (g0, g1) = shown.expect("at least one weight triple");
        all &= pass;
        table.push(vec![
            Cell::Int(d.into()),
            Cell::Rational(g0),
            Cell::Rational(g1),
            Cell::Text(if pass { "PASS" } else { "FAIL" }.to_string()),
        ]);
    }
    Ok(finish(&table, format, all))
}

pub fn verify_martin(max_degree: u32, jobs: usize, format: Format) -> Result<Report, Status> {
    let geometry = localp2_geometry(max_degree).map_err(fail)?;
    let report = compute_bps_table_jobs(&geometry, max_degree, jobs).map_err(fail)?;
    let rows = martin_check(&report).map_err(fail)?;
    let mut table = Table::new(vec!["d", "computed", "predicted", "match"]);
    for row in &rows {
        table.push(vec![
            Cell::Int(row.degree.into()),
            Cell::Rational(row.computed.clone()),
            Cell::Rational(row.predicted.clone()),
            Cell::Bool(row.matches),
        ]);
    }
    let ok = report.is_integral() && rows.iter().all(|r| r.matches);
    Ok(finish(&table, format, ok))
}
