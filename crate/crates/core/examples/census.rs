//! Sizes of F_K for every K at n, written as CSV.
//!
//! cargo run --release --example census -- 7

use gf_condorcet::cardinality::{census, extremality_report, fishburn_formula, write_census_csv};

fn main() -> gf_condorcet::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let rows = census(n, n <= 6)?;
    let summary = extremality_report(&rows)?;
    write_census_csv(std::io::stdout().lock(), &rows, Some(&summary))?;
    println!("closed formula for Fishburn's K: {}", fishburn_formula(n)?);
    Ok(())
}
