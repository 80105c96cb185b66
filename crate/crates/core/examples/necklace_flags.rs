//! Shows a necklace, its w-convex sets, and the flags that make up D(S).
//!
//! cargo run --example necklace_flags -- 4 2

use gf_condorcet::necklace::gf_necklace;
use gf_condorcet::never::KSubset;

fn main() -> gf_condorcet::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let k = KSubset::parse(n, &args.next().unwrap_or_else(|| "2".into()))?;

    let s = gf_necklace(n, &k)?;
    println!("necklace for K={k}: {s}");
    println!("black beads: {:?}", s.black_beads());

    let convex = s.enumerate_w_convex();
    println!("{} w-convex sets:", convex.len());
    for x in &convex {
        println!("  {x}");
    }

    let d = s.flags_to_domain();
    println!("D(S) has {} orders:", d.len());
    for v in d.iter() {
        let prefixes = (1..=n)
            .map(|i| Ok(format!("{:?}", v.prefix_set(i)?)))
            .collect::<gf_condorcet::Result<Vec<_>>>()?;
        println!("  {v}  {}", prefixes.join(" ⊂ "));
    }
    Ok(())
}
