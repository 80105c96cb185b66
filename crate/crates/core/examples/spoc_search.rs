//! Searches for a circle on which every GF-domain at n is single-peaked.
//!
//! cargo run --release --example spoc_search -- 6

use gf_condorcet::analysis::is_spoc;
use gf_condorcet::necklace::gf_necklace;
use gf_condorcet::never::{gf_domain, KSubset};

fn main() -> gf_condorcet::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    for k in KSubset::all(n) {
        let d = gf_domain(n, &k)?;
        let found = is_spoc(&d)?;
        let necklace = gf_necklace(n, &k)?;
        match found {
            Some(arr) => println!(
                "K={:<8} |F_K|={:<4} search: {arr}  necklace: {:?}",
                k.dash_label(),
                d.len(),
                necklace.circle()
            ),
            None => println!("K={:<8} no arrangement", k.dash_label()),
        }
    }
    Ok(())
}
