//! Sizes of GF-domains: the closed formula for Fishburn's alternating
//! scheme, a census of `|F_K|` over every `K`, and min/max summaries.

use std::io::Write;

use num_integer::binomial;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    has_maximal_width, is_condorcet, is_copious, is_directly_connected, is_maximal_condorcet,
    is_spoc, WidthMode,
};
use crate::error::{Error, Result};
use crate::never::{fishburn_k, gf_domain, KSubset};

/// Largest `n` for a size-only census.
pub const SIZE_CENSUS_MAX_N: usize = 8;
/// Largest `n` for a census with property flags.
pub const FLAG_CENSUS_MAX_N: usize = 7;

/// `|F_K|` for Fishburn's `K`:
/// `(n+3)2^{n−3} − (n − 3/2)·C(n−2, n/2−1)` for even `n`,
/// `(n+3)2^{n−3} − ((n−1)/2)·C(n−1, (n−1)/2)` for odd `n`.
pub fn fishburn_formula(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > 100 {
        return Err(Error::CapExceeded { n, cap: 100 });
    }
    let n_i = n as i128;
    let lead = Ratio::from_integer((n_i + 3) * (1i128 << (n - 3)));
    let correction = if n.is_multiple_of(2) {
        Ratio::new(2 * n_i - 3, 2) * Ratio::from_integer(binomial(n_i - 2, n_i / 2 - 1))
    } else {
        Ratio::from_integer((n_i - 1) / 2) * Ratio::from_integer(binomial(n_i - 1, (n_i - 1) / 2))
    };
    let value = lead - correction;
    assert!(value.is_integer(), "formula value {value} is not integral");
    Ok(value.to_integer() as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CensusFlags {
    pub condorcet: bool,
    pub copious: bool,
    pub maximal: bool,
    pub maximal_width: bool,
    pub directly_connected: bool,
    pub spoc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub k: KSubset,
    pub size: usize,
    pub flags: Option<CensusFlags>,
}

/// One row per `K ⊆ [2, n−1]`, in binary-counter order of `K`.
pub fn census(n: usize, with_flags: bool) -> Result<Vec<CensusRow>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let cap = if with_flags {
        FLAG_CENSUS_MAX_N
    } else {
        SIZE_CENSUS_MAX_N
    };
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    KSubset::all(n)
        .into_par_iter()
        .map(|k| {
            let d = gf_domain(n, &k)?;
            let flags = if with_flags {
                let condorcet = is_condorcet(&d);
                Some(CensusFlags {
                    condorcet,
                    copious: is_copious(&d),
                    maximal: condorcet && is_maximal_condorcet(&d)?,
                    maximal_width: has_maximal_width(&d, WidthMode::Identity),
                    directly_connected: is_directly_connected(&d),
                    spoc: is_spoc(&d)?.is_some(),
                })
            } else {
                None
            };
            Ok(CensusRow {
                n,
                k,
                size: d.len(),
                flags,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalityReport {
    pub n: usize,
    pub min: usize,
    pub max: usize,
    pub argmin: Vec<KSubset>,
    pub argmax: Vec<KSubset>,
    pub fishburn_size: usize,
    pub fishburn_attains_max: bool,
}

/// Summarises a census. Reports what was observed; asserts nothing.
pub fn extremality_report(rows: &[CensusRow]) -> Result<ExtremalityReport> {
    let first = rows
        .first()
        .ok_or_else(|| Error::OutOfRange("empty census".into()))?;
    let n = first.n;
    let min = rows.iter().map(|r| r.size).min().unwrap();
    let max = rows.iter().map(|r| r.size).max().unwrap();
    let pick = |v: usize| {
        rows.iter()
            .filter(|r| r.size == v)
            .map(|r| r.k.clone())
            .collect()
    };
    let fk = fishburn_k(n);
    let fishburn_size = rows
        .iter()
        .find(|r| r.k == fk)
        .map(|r| r.size)
        .ok_or_else(|| Error::OutOfRange("census lacks Fishburn's K".into()))?;
    Ok(ExtremalityReport {
        n,
        min,
        max,
        argmin: pick(min),
        argmax: pick(max),
        fishburn_size,
        fishburn_attains_max: fishburn_size == max,
    })
}

pub const CSV_HEADER: [&str; 9] = [
    "n",
    "K",
    "size",
    "condorcet",
    "copious",
    "maximal",
    "maximal_width",
    "directly_connected",
    "spoc",
];

/// Census rows as CSV; flag columns are left empty for a size-only census.
/// The extremality summary, if given, follows as `#` comment lines.
pub fn write_census_csv<W: Write>(
    out: W,
    rows: &[CensusRow],
    summary: Option<&ExtremalityReport>,
) -> Result<()> {
    let io = |e: std::io::Error| Error::Parse(format!("write failed: {e}"));
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Parse(format!("write failed: {e}"));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        let mut rec = vec![r.n.to_string(), r.k.dash_label(), r.size.to_string()];
        match r.flags {
            Some(f) => rec.extend(
                [
                    f.condorcet,
                    f.copious,
                    f.maximal,
                    f.maximal_width,
                    f.directly_connected,
                    f.spoc,
                ]
                .iter()
                .map(|b| b.to_string()),
            ),
            None => rec.extend(std::iter::repeat_n(String::new(), 6)),
        }
        w.write_record(&rec).map_err(csv_err)?;
    }
    w.flush().map_err(io)?;
    let mut out = w
        .into_inner()
        .map_err(|e| Error::Parse(format!("write failed: {e}")))?;
    if let Some(s) = summary {
        let labels = |ks: &[KSubset]| {
            ks.iter()
                .map(|k| k.dash_label())
                .collect::<Vec<_>>()
                .join(";")
        };
        writeln!(out, "# min={} at {}", s.min, labels(&s.argmin)).map_err(io)?;
        writeln!(out, "# max={} at {}", s.max, labels(&s.argmax)).map_err(io)?;
        writeln!(
            out,
            "# fishburn K={} size={} attains_max={}",
            fishburn_k(s.n).dash_label(),
            s.fishburn_size,
            s.fishburn_attains_max
        )
        .map_err(io)?;
    }
    Ok(())
}
