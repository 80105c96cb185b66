//! All maximal Condorcet domains on three alternatives, grouped by relabelling.

use gf_condorcet::analysis::{maximal_condorcet_domains, relabelling_orbits};
use gf_condorcet::never::infer_satisfied_conditions;
use gf_condorcet::Triple;

fn main() -> gf_condorcet::Result<()> {
    let domains = maximal_condorcet_domains(3)?;
    let t = Triple::new(1, 2, 3)?;
    println!("{} maximal domains", domains.len());
    for (i, orbit) in relabelling_orbits(&domains).iter().enumerate() {
        println!("orbit {}:", i + 1);
        for d in orbit {
            let conds: Vec<String> = infer_satisfied_conditions(d, t)?
                .iter()
                .map(|c| c.to_string())
                .collect();
            println!("  {d}  satisfies {}", conds.join(", "));
        }
    }
    Ok(())
}
