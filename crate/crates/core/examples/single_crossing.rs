//! Maximal single-crossing chains: the census at n=4,5 and the relay chain.
//!
//! cargo run --release --example single_crossing

use gf_condorcet::single_crossing::{
    chain_to_domain, circle_edge_obstruction, relay_chain, thm7_census,
};

fn main() -> gf_condorcet::Result<()> {
    for n in 4..=5 {
        let r = thm7_census(n)?;
        println!(
            "n={n}: {} chains, {} give maximal Condorcet domains, {} single-peaked on a circle",
            r.chains,
            r.maximal,
            r.spoc.len()
        );
    }

    let sw = relay_chain(4)?;
    println!("\nrelay chain: {sw}");
    let d = chain_to_domain(&sw);
    for v in sw.orders() {
        println!("  {v}");
    }
    if let Some((hub, nbrs)) = circle_edge_obstruction(&d) {
        println!("{hub} would need circle neighbours {nbrs:?}; a circle allows two");
    }
    Ok(())
}
