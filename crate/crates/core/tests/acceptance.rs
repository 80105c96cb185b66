//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p gf-condorcet --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gf_condorcet::analysis::{
    addable_order, has_maximal_width, is_copious, is_directly_connected, is_spoc, is_spoc_on,
    maximal_condorcet_domains, relabelling_orbits, CircularArrangement, WidthMode,
};
use gf_condorcet::cardinality::fishburn_formula;
use gf_condorcet::necklace::{classical_single_peaked, gf_necklace};
use gf_condorcet::never::{domain_of_scheme, fishburn_k, gf_domain, CompleteNeverSet, KSubset};
use gf_condorcet::order::{Alt, Domain, LinearOrder};
use gf_condorcet::single_crossing::{
    chain_to_domain, forced_circle_edges, relay_chain, sets_fit_on_circle, thm7_census,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Every `(n, K)` with `3 ≤ n ≤ 7`.
fn gf_cases() -> Vec<(usize, KSubset)> {
    (3..=7)
        .flat_map(|n| KSubset::all(n).into_iter().map(move |k| (n, k)))
        .collect()
}

fn criterion_1() -> Outcome {
    let expect = [
        ("2N{1,2,3}1", ["123", "312", "132", "321"]),
        ("1N{1,2,3}2", ["123", "231", "132", "321"]),
        ("2N{1,2,3}3", ["123", "213", "231", "321"]),
    ];
    let listed: Vec<Domain> = expect
        .iter()
        .map(|(_, d)| Domain::from_strs(3, d))
        .collect();
    for ((cond, _), want) in expect.iter().zip(&listed) {
        let got = domain_of_scheme(&CompleteNeverSet::parse(3, cond).unwrap()).unwrap();
        ensure(&got == want, || {
            format!("{cond} gave {got}, expected {want}")
        })?;
    }
    let maximal = maximal_condorcet_domains(3).unwrap();
    ensure(maximal.iter().all(|d| d.len() == 4), || {
        "a maximal domain at n=3 does not have 4 orders".into()
    })?;
    let orbits = relabelling_orbits(&maximal);
    ensure(orbits.len() == 3, || {
        format!("{} relabelling orbits", orbits.len())
    })?;
    for orbit in &orbits {
        let hits = listed.iter().filter(|d| orbit.contains(d)).count();
        ensure(hits == 1, || {
            format!(
                "orbit {:?} holds {hits} listed domains",
                orbit[0].to_string()
            )
        })?;
    }
    Ok(format!(
        "{} maximal domains, {} orbits under relabelling, one per listed domain",
        maximal.len(),
        orbits.len()
    ))
}

fn criterion_2() -> Outcome {
    // columns of the two printed arrays, read top to bottom
    let dipped = Domain::from_strs(
        4,
        &[
            "1234", "1243", "1423", "1432", "4123", "4132", "4312", "4321",
        ],
    );
    let fishburn = Domain::from_strs(
        4,
        &[
            "1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231", "4321",
        ],
    );
    let got = gf_necklace(4, &KSubset::empty(4))
        .unwrap()
        .flags_to_domain();
    ensure(got == dipped, || format!("K=∅ gave {got}"))?;
    let got = gf_necklace(4, &KSubset::new(4, [2]).unwrap())
        .unwrap()
        .flags_to_domain();
    ensure(got == fishburn, || format!("K={{2}} gave {got}"))?;
    Ok("8-column and 9-column arrays reproduced".into())
}

fn criterion_3() -> Outcome {
    let cases = gf_cases();
    ensure(cases.len() == 62, || format!("{} cases", cases.len()))?;
    for (n, k) in &cases {
        let scheme = gf_domain(*n, k).unwrap();
        let necklace = gf_necklace(*n, k).unwrap().flags_to_domain();
        ensure(scheme == necklace, || {
            format!("n={n} K={k}: constructions differ")
        })?;
    }
    Ok("62/62 cases equal".into())
}

fn criterion_4() -> Outcome {
    for (n, k) in gf_cases() {
        let d = gf_domain(n, &k).unwrap();
        ensure(is_copious(&d), || format!("n={n} K={k} not copious"))?;
        match addable_order(&d) {
            Ok(None) => {}
            Ok(Some(u)) => return Err(format!("n={n} K={k}: {u} can be added")),
            Err(e) => return Err(format!("n={n} K={k}: {e}")),
        }
    }
    Ok("62/62 copious and maximal by exhaustive addition".into())
}

fn criterion_5() -> Outcome {
    for (n, k) in gf_cases() {
        let d = gf_domain(n, &k).unwrap();
        ensure(has_maximal_width(&d, WidthMode::Identity), || {
            format!("n={n} K={k} lacks 12…n or n…21")
        })?;
        ensure(is_directly_connected(&d), || {
            format!("n={n} K={k} not directly connected")
        })?;
    }
    Ok("62/62 of maximal width and directly connected".into())
}

fn criterion_6() -> Outcome {
    for (n, k) in gf_cases() {
        let d = gf_domain(n, &k).unwrap();
        let s = gf_necklace(n, &k).unwrap();
        let arr = CircularArrangement::new(s.circle().to_vec()).unwrap();
        ensure(is_spoc_on(&d, &arr).unwrap(), || {
            format!("n={n} K={k} fails on necklace {s}")
        })?;
        let found = is_spoc(&d).unwrap();
        ensure(found.is_some(), || {
            format!("n={n} K={k}: search found no arrangement")
        })?;
    }
    Ok("62/62 single-peaked on the necklace circle; search finds a witness".into())
}

fn criterion_7() -> Outcome {
    let mut summary = Vec::new();
    for (n, expected_chains) in [(4, 16), (5, 768)] {
        let r = thm7_census(n).unwrap();
        ensure(r.chains == expected_chains, || {
            format!("n={n}: {} chains", r.chains)
        })?;
        ensure(r.not_condorcet.is_empty(), || {
            format!("n={n}: non-Condorcet chain")
        })?;
        ensure(r.maximal > 0, || format!("n={n}: no maximal chain domain"))?;
        if let Some((sw, arr)) = r.spoc.first() {
            return Err(format!("n={n}: chain {sw} is single-peaked on {arr}"));
        }
        summary.push(format!(
            "n={n}: {}/{} maximal, none SPOC",
            r.maximal, r.chains
        ));

        let pairs: Vec<BTreeSet<Alt>> = (2..=4).map(|k| [1, k].into_iter().collect()).collect();
        ensure(!sets_fit_on_circle(n, &pairs).unwrap(), || {
            format!("n={n}: {{1,2}},{{1,3}},{{1,4}} fit on a circle")
        })?;
        let relay = chain_to_domain(&relay_chain(n).unwrap());
        let edges = forced_circle_edges(&relay);
        ensure((2..=4).all(|k| edges.contains(&(1, k))), || {
            format!("n={n}: relay chain lacks a pair {{1,k}}")
        })?;
    }
    Ok(summary.join("; ") + "; relay obstruction holds")
}

fn criterion_8() -> Outcome {
    let expected: [u128; 6] = [4, 9, 20, 45, 100, 222];
    for (n, want) in (3..=8).zip(expected) {
        let formula = fishburn_formula(n).unwrap();
        let counted = gf_domain(n, &fishburn_k(n)).unwrap().len() as u128;
        ensure(formula == want && counted == want, || {
            format!("n={n}: formula {formula}, enumeration {counted}, expected {want}")
        })?;
    }
    Ok("4, 9, 20, 45, 100, 222 by formula and by enumeration".into())
}

fn criterion_9() -> Outcome {
    for n in 3..=8 {
        let domains: Vec<(KSubset, Domain)> = KSubset::all(n)
            .into_iter()
            .map(|k| {
                let d = gf_domain(n, &k).unwrap();
                (k, d)
            })
            .collect();
        let size = |k: &KSubset| domains.iter().find(|(q, _)| q == k).unwrap().1.len();
        let ends = 1usize << (n - 1);
        ensure(
            size(&KSubset::empty(n)) == ends && size(&KSubset::full(n)) == ends,
            || format!("n={n}: extreme sizes differ from {ends}"),
        )?;
        for (k, d) in &domains {
            let flipped = Domain::new(n, d.iter().map(LinearOrder::reverse)).unwrap();
            let dual = &domains
                .iter()
                .find(|(q, _)| *q == k.complement())
                .unwrap()
                .1;
            ensure(&flipped == dual, || {
                format!("n={n} K={k}: reversal is not F_(K^c)")
            })?;
        }
    }
    Ok("|F_∅| = |F_full| = 2^(n−1) and reversal duality for n = 3..8".into())
}

fn criterion_10() -> Outcome {
    for n in 3..=8 {
        let necklace = gf_necklace(n, &KSubset::full(n)).unwrap().flags_to_domain();
        ensure(necklace == classical_single_peaked(n).unwrap(), || {
            format!("n={n}: necklace domain differs from the axis oracle")
        })?;
    }
    Ok("equal to the single-peaked oracle for n = 3..8".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("n=3 ground truth", Duration::from_secs(1), criterion_1),
        ("n=4 tables", Duration::from_secs(1), criterion_2),
        ("necklace = scheme", Duration::from_secs(120), criterion_3),
        ("copious and maximal", Duration::from_secs(600), criterion_4),
        (
            "width and direct connectivity",
            Duration::from_secs(300),
            criterion_5,
        ),
        (
            "single-peaked on a circle",
            Duration::from_secs(120),
            criterion_6,
        ),
        (
            "single-crossing not SPOC",
            Duration::from_secs(60),
            criterion_7,
        ),
        (
            "Fishburn cardinality formula",
            Duration::from_secs(60),
            criterion_8,
        ),
        (
            "extreme sizes and duality",
            Duration::from_secs(120),
            criterion_9,
        ),
        (
            "full K is single-peaked",
            Duration::from_secs(10),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(_) if elapsed > limit => ("FAIL", format!("took {elapsed:.2?}, limit {limit:?}")),
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} criterion {:>2} {name:<30} [{elapsed:.2?}] {detail}",
            i + 1
        );
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
