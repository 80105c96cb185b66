//! Builds F_K two ways and prints it.
//!
//! cargo run --example generate_domain -- 5 2,4

use gf_condorcet::necklace::gf_necklace;
use gf_condorcet::never::{domain_of_scheme, fishburn_k, gf_scheme, KSubset};

fn main() -> gf_condorcet::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let k = match args.next() {
        Some(s) => KSubset::parse(n, &s)?,
        None => fishburn_k(n),
    };

    let scheme = gf_scheme(n, &k)?;
    println!("never conditions for n={n}, K={k}:");
    print!("{scheme}");

    let d = domain_of_scheme(&scheme)?;
    let via_necklace = gf_necklace(n, &k)?.flags_to_domain();
    assert_eq!(d, via_necklace);
    println!("\n{} orders (scheme and necklace agree):", d.len());
    for v in d.iter() {
        println!("  {v}");
    }
    Ok(())
}
