use std::path::Path;

use super::runner::TrialAggregate;
use crate::error::{Error, Result};

/// Column order of the aggregate CSV.
pub const CSV_HEADER: &str = "algorithm,horizon,trials,incorrect_count,fail_count,\
zeta_violation_count,rank_correct_count,error_rate,theorem1_bound,proof_two_term_bound,\
mean_total_pulls";

/// 17 significant digits: enough for every `f64` to parse back exactly.
fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn record(a: &TrialAggregate) -> [String; 11] {
    [
        a.algorithm.name().to_string(),
        a.horizon.to_string(),
        a.trials.to_string(),
        a.incorrect_count.to_string(),
        a.fail_count.to_string(),
        a.zeta_violation_count.to_string(),
        a.rank_correct_count.to_string(),
        fmt_f64(a.error_rate),
        fmt_f64(a.theorem1_bound),
        fmt_f64(a.proof_two_term_bound),
        fmt_f64(a.mean_total_pulls),
    ]
}

/// Writes the aggregates as CSV to any writer.
pub fn write_csv<W: std::io::Write>(aggregates: &[TrialAggregate], out: W) -> Result<()> {
    if aggregates.is_empty() {
        return Err(Error::config("aggregates", "nothing to write"));
    }
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for a in aggregates {
        w.write_record(record(a))?;
    }
    w.flush().map_err(|e| Error::io("<csv>", e))?;
    Ok(())
}

pub fn emit_csv(aggregates: &[TrialAggregate], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(aggregates, std::io::BufWriter::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
    let raw = rec.get(i).unwrap_or_default();
    raw.parse().map_err(|_| {
        let name = CSV_HEADER.split(',').nth(i).unwrap_or("?");
        Error::config(name, format!("cannot parse `{raw}`"))
    })
}

/// Parses a CSV produced by [`emit_csv`]. `wall_ms` is not stored and reads as 0.
pub fn read_csv(path: &Path) -> Result<Vec<TrialAggregate>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_path(path)?;
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::config(
            "<header>",
            format!("unexpected columns {header:?}"),
        ));
    }
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let algorithm = rec
            .get(0)
            .unwrap_or_default()
            .parse()
            .map_err(|e: String| Error::config("algorithm", e))?;
        out.push(TrialAggregate {
            algorithm,
            horizon: field(&rec, 1)?,
            trials: field(&rec, 2)?,
            incorrect_count: field(&rec, 3)?,
            fail_count: field(&rec, 4)?,
            zeta_violation_count: field(&rec, 5)?,
            rank_correct_count: field(&rec, 6)?,
            error_rate: field(&rec, 7)?,
            theorem1_bound: field(&rec, 8)?,
            proof_two_term_bound: field(&rec, 9)?,
            mean_total_pulls: field(&rec, 10)?,
            wall_ms: 0,
        });
    }
    Ok(out)
}
