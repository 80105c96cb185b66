//! Runs every property check on a domain given as orders on the command line.
//!
//! cargo run --example check_properties -- 1234 1243 2134 2143 2413 2431 4213 4231 4321

use gf_condorcet::analysis::full_report;
use gf_condorcet::{Domain, LinearOrder};

fn main() -> gf_condorcet::Result<()> {
    let mut orders: Vec<LinearOrder> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    if orders.is_empty() {
        orders = ["1234", "2134", "2314", "4321"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
    }
    let d = Domain::new(orders[0].n(), orders)?;
    let r = full_report(&d)?;
    print!("{r}");
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    Ok(())
}
