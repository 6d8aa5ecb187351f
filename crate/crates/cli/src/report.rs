//! Report files: trace CSVs, autocorrelation dumps in dB, sequence dumps,
//! JSON summaries, and benchmark tables.
//!
//! Every CSV schema here is stable — downstream plotting scripts key on the
//! exact header strings — and every floating-point value in a trace is
//! written with Rust's shortest-roundtrip `Display`, so identical runs
//! produce identical bytes in the algorithmic columns.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use unimod_core::autocorr::AutocorrelationProfile;
use unimod_core::run::{RunTrace, TraceRow};
use unimod_core::sequence::UnimodularSequence;

use crate::bench::BenchRow;
use crate::experiment::{Algorithm, HarnessError, RunSummary};

/// Header of every per-iteration trace CSV.
pub const TRACE_HEADER: &str = "iter,isl,psl,elapsed_ms";
/// Header of every autocorrelation dump.
pub const AUTOCORR_HEADER: &str = "lag,magnitude_db";
/// Header of every final-sequence dump.
pub const SEQUENCE_HEADER: &str = "index,re,im";
/// Header of the benchmark table.
pub const BENCH_HEADER: &str = "algorithm,n,avg_sweep_ms,avg_total_ms,avg_iterations";
/// Header of the combined comparison trace.
pub const COMPARE_HEADER: &str = "algorithm,iter,isl,psl,elapsed_ms";

/// Lowest dB value a dump will report; stands in for `-inf` when a sidelobe
/// magnitude underflows to zero.
pub const DB_FLOOR: f64 = -300.0;

/// `20·log10(magnitude / reference)`, floored at [`DB_FLOOR`].
pub fn magnitude_db(magnitude: f64, reference: f64) -> f64 {
    if magnitude <= 0.0 {
        DB_FLOOR
    } else {
        (20.0 * (magnitude / reference).log10()).max(DB_FLOOR)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), HarnessError> {
    fs::write(path, contents).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes one optimizer trace: `iter,isl,psl,elapsed_ms`, one row per outer
/// iteration starting at row 0 for the initial sequence.
///
/// ISL and PSL use shortest-roundtrip formatting; the wall-clock column is
/// fixed to microsecond resolution and is the one column two otherwise
/// identical runs may disagree on.
pub fn write_trace_csv(path: &Path, rows: &[TraceRow]) -> Result<(), HarnessError> {
    let mut out = String::with_capacity(32 * (rows.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for row in rows {
        writeln!(
            out,
            "{},{},{},{:.3}",
            row.iter, row.isl, row.psl, row.elapsed_ms
        )
        .expect("writing to a String cannot fail");
    }
    write_file(path, &out)
}

/// Writes the autocorrelation magnitude of every lag in dB:
/// `lag,magnitude_db` for lags `0..N-1`.
///
/// `normalize` divides by the zero-lag peak `|r(0)| = N` before converting,
/// so the mainlobe reads 0 dB and sidelobes are relative; otherwise the dB
/// values are absolute (`reference = 1`).
pub fn write_autocorr_csv(
    path: &Path,
    profile: &AutocorrelationProfile,
    normalize: bool,
) -> Result<(), HarnessError> {
    let reference = if normalize {
        profile.lags()[0].norm()
    } else {
        1.0
    };
    let mut out = String::with_capacity(16 * (profile.lags().len() + 1));
    out.push_str(AUTOCORR_HEADER);
    out.push('\n');
    for (lag, r) in profile.lags().iter().enumerate() {
        writeln!(out, "{},{:.6}", lag, magnitude_db(r.norm(), reference))
            .expect("writing to a String cannot fail");
    }
    write_file(path, &out)
}

/// Writes the sequence entries as `index,re,im` with shortest-roundtrip
/// formatting, so a reader recovers the exact `f64` values.
pub fn write_sequence_csv(path: &Path, y: &UnimodularSequence) -> Result<(), HarnessError> {
    let mut out = String::with_capacity(48 * (y.len() + 1));
    out.push_str(SEQUENCE_HEADER);
    out.push('\n');
    for (index, z) in y.entries().iter().enumerate() {
        writeln!(out, "{},{},{}", index, z.re, z.im).expect("writing to a String cannot fail");
    }
    write_file(path, &out)
}

/// Writes the run summaries as JSON: a single object for a single run, an
/// array for a Monte-Carlo batch.
pub fn write_summary_json(path: &Path, summaries: &[RunSummary]) -> Result<(), HarnessError> {
    let json = if summaries.len() == 1 {
        serde_json::to_string_pretty(&summaries[0])
    } else {
        serde_json::to_string_pretty(summaries)
    }
    .expect("summaries contain no non-serializable values");
    write_file(path, &format!("{json}\n"))
}

/// Writes the benchmark table:
/// `algorithm,n,avg_sweep_ms,avg_total_ms,avg_iterations`.
pub fn write_bench_csv(path: &Path, rows: &[BenchRow]) -> Result<(), HarnessError> {
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str(BENCH_HEADER);
    out.push('\n');
    for row in rows {
        writeln!(
            out,
            "{},{},{:.6},{:.3},{:.1}",
            row.algorithm, row.n, row.avg_sweep_ms, row.avg_total_ms, row.avg_iterations
        )
        .expect("writing to a String cannot fail");
    }
    write_file(path, &out)
}

/// Writes the traces of several algorithms run from one shared start as a
/// single stacked CSV: `algorithm,iter,isl,psl,elapsed_ms`.
///
/// Each algorithm's rows keep their own iteration numbering and wall clock
/// starting at zero, giving every trace the same time origin.
pub fn write_compare_csv(
    path: &Path,
    results: &[(Algorithm, RunTrace)],
) -> Result<(), HarnessError> {
    let total_rows: usize = results.iter().map(|(_, trace)| trace.rows.len()).sum();
    let mut out = String::with_capacity(40 * (total_rows + 1));
    out.push_str(COMPARE_HEADER);
    out.push('\n');
    for (algorithm, trace) in results {
        for row in &trace.rows {
            writeln!(
                out,
                "{},{},{},{},{:.3}",
                algorithm.name(),
                row.iter,
                row.isl,
                row.psl,
                row.elapsed_ms
            )
            .expect("writing to a String cannot fail");
        }
    }
    write_file(path, &out)
}
