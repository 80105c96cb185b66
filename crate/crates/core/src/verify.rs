//! End-to-end certification runs over every `K` at a given `n`.
//!
//! Each [`Check`] aggregates one claim across all `K ⊆ [2, n−1]` and keeps
//! the first counterexample it meets.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    addable_order, copious_violation, disconnected_pair, has_maximal_width, is_peak_pit,
    is_semi_connected, is_spoc, is_spoc_on, CircularArrangement, WidthMode,
};
use crate::cardinality::fishburn_formula;
use crate::error::{Error, Result};
use crate::necklace::{classical_single_peaked, gf_necklace};
use crate::never::{domain_of_scheme, fishburn_k, gf_scheme, KSubset};
use crate::order::{Alt, Domain};
use crate::single_crossing::{
    chain_to_domain, circle_edge_obstruction, forced_circle_edges, relay_chain, sets_fit_on_circle,
    thm7_census,
};

/// Largest `n` accepted by [`gf_suite`].
pub const VERIFY_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub n: usize,
    /// Number of `K` (or chains) examined.
    pub cases: usize,
    pub passed: bool,
    /// First failure, if any.
    pub counterexample: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<24} n={} cases={}",
            self.name, self.n, self.cases
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "  {c}")?;
        }
        Ok(())
    }
}

struct PerK {
    k: KSubset,
    scheme: Domain,
    necklace: Domain,
}

fn aggregate<F>(name: &'static str, n: usize, items: &[PerK], f: F) -> Check
where
    F: Fn(&PerK) -> Option<String> + Sync,
{
    let failure = items
        .par_iter()
        .find_map_first(|item| f(item).map(|why| format!("K={}: {why}", item.k.dash_label())));
    Check {
        name,
        n,
        cases: items.len(),
        passed: failure.is_none(),
        counterexample: failure,
    }
}

/// Every claim about GF-domains at one `n`, over all `2^{n−2}` choices of `K`.
pub fn gf_suite(n: usize) -> Result<Vec<Check>> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > VERIFY_MAX_N {
        return Err(Error::CapExceeded {
            n,
            cap: VERIFY_MAX_N,
        });
    }
    let items: Vec<PerK> = KSubset::all(n)
        .into_par_iter()
        .map(|k| {
            Ok(PerK {
                scheme: domain_of_scheme(&gf_scheme(n, &k)?)?,
                necklace: gf_necklace(n, &k)?.flags_to_domain(),
                k,
            })
        })
        .collect::<Result<_>>()?;

    let mut checks = vec![
        aggregate("necklace_equals_scheme", n, &items, |it| {
            (it.scheme != it.necklace).then(|| {
                format!(
                    "scheme has {} orders, necklace {}",
                    it.scheme.len(),
                    it.necklace.len()
                )
            })
        }),
        aggregate("copious", n, &items, |it| {
            copious_violation(&it.scheme)
                .map(|(t, size)| format!("triple {t} restricts to {size} orders"))
        }),
        aggregate("maximal_by_addition", n, &items, |it| {
            match addable_order(&it.scheme) {
                Ok(None) => None,
                Ok(Some(u)) => Some(format!("{u} can be added")),
                Err(e) => Some(e.to_string()),
            }
        }),
        aggregate("maximal_by_copiousness", n, &items, |it| {
            // a copious domain of a complete never set is maximal
            copious_violation(&it.scheme).map(|(t, _)| format!("not copious at {t}"))
        }),
        aggregate("peak_pit", n, &items, |it| {
            (!is_peak_pit(&gf_scheme(n, &it.k).unwrap())).then(|| "scheme uses a middle ban".into())
        }),
        aggregate("maximal_width", n, &items, |it| {
            (!has_maximal_width(&it.scheme, WidthMode::Identity))
                .then(|| "missing 12…n or n…21".into())
        }),
        aggregate("semi_connected", n, &items, |it| {
            match is_semi_connected(&it.scheme) {
                Ok(true) => None,
                Ok(false) => Some("no geodesic from 12…n to n…21".into()),
                Err(e) => Some(e.to_string()),
            }
        }),
        aggregate("directly_connected", n, &items, |it| {
            disconnected_pair(&it.scheme)
                .map(|(u, v)| format!("{u} and {v} not geodesically joined"))
        }),
        aggregate("spoc_on_necklace", n, &items, |it| {
            let s = gf_necklace(n, &it.k).unwrap();
            let arr = CircularArrangement::new(s.circle().to_vec()).unwrap();
            (!is_spoc_on(&it.scheme, &arr).unwrap()).then(|| format!("fails on {arr}"))
        }),
        aggregate("spoc_search", n, &items, |it| match is_spoc(&it.scheme) {
            Ok(Some(_)) => None,
            Ok(None) => Some("no arrangement found".into()),
            Err(e) => Some(e.to_string()),
        }),
        aggregate("reversal_duality", n, &items, |it| {
            let dual = items.iter().find(|o| o.k == it.k.complement()).unwrap();
            (it.scheme.reversed() != dual.scheme)
                .then(|| format!("reversed F_K differs from F_{{{}}}", dual.k.dash_label()))
        }),
    ];

    let extremes_ok = [KSubset::empty(n), KSubset::full(n)]
        .iter()
        .map(|k| items.iter().find(|it| &it.k == k).unwrap().scheme.len())
        .all(|size| size == 1 << (n - 1));
    checks.push(Check {
        name: "extreme_sizes",
        n,
        cases: 2,
        passed: extremes_ok,
        counterexample: (!extremes_ok)
            .then(|| format!("|F_∅| or |F_full| differs from {}", 1 << (n - 1))),
    });

    let formula = fishburn_formula(n)?;
    let fk = fishburn_k(n);
    let counted = items.iter().find(|it| it.k == fk).unwrap().scheme.len() as u128;
    checks.push(Check {
        name: "fishburn_formula",
        n,
        cases: 1,
        passed: formula == counted,
        counterexample: (formula != counted)
            .then(|| format!("formula {formula}, enumeration {counted}")),
    });

    let full = items.iter().find(|it| it.k == KSubset::full(n)).unwrap();
    let classical = classical_single_peaked(n)?;
    checks.push(Check {
        name: "full_k_single_peaked",
        n,
        cases: 1,
        passed: full.necklace == classical,
        counterexample: (full.necklace != classical)
            .then(|| "necklace differs from axis oracle".into()),
    });

    Ok(checks)
}

/// Single-crossing claims at `n ∈ {4, 5}`: no maximal chain domain that is a
/// maximal Condorcet domain is single-peaked on a circle, and the relay
/// chain carries the three-neighbour obstruction.
pub fn thm7_suite(n: usize) -> Result<Vec<Check>> {
    let report = thm7_census(n)?;
    let census = Check {
        name: "single_crossing_not_spoc",
        n,
        cases: report.chains,
        passed: report.holds(),
        counterexample: report
            .not_condorcet
            .first()
            .map(|sw| format!("chain {sw} is not Condorcet"))
            .or_else(|| {
                report
                    .spoc
                    .first()
                    .map(|(sw, arr)| format!("chain {sw} is single-peaked on {arr}"))
            }),
    };

    let relay = chain_to_domain(&relay_chain(n)?);
    let edges = forced_circle_edges(&relay);
    let pairs: Vec<[Alt; 2]> = (2..=4).map(|k| [1, k]).collect();
    let present = pairs.iter().all(|p| edges.contains(&(p[0], p[1])));
    let sets: Vec<_> = pairs.iter().map(|p| p.iter().copied().collect()).collect();
    let fits = sets_fit_on_circle(n, &sets)?;
    let hub = circle_edge_obstruction(&relay);
    let passed = present && !fits && hub.is_some() && is_spoc(&relay)?.is_none();
    let relay_check = Check {
        name: "relay_pair_obstruction",
        n,
        cases: 1,
        passed,
        counterexample: (!passed)
            .then(|| format!("pairs present={present}, fit on circle={fits}, hub={hub:?}")),
    };
    Ok(vec![census, relay_check])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_small_n() {
        for n in 3..=5 {
            let checks = gf_suite(n).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:#?}");
        }
        for n in 4..=5 {
            assert!(thm7_suite(n).unwrap().iter().all(|c| c.passed));
        }
    }

    #[test]
    fn caps() {
        assert!(matches!(gf_suite(99), Err(Error::CapExceeded { .. })));
        assert!(gf_suite(2).is_err());
        assert!(thm7_suite(3).is_err());
    }

    #[test]
    fn check_line_format() {
        let c = Check {
            name: "copious",
            n: 4,
            cases: 4,
            passed: false,
            counterexample: Some("K=2: x".into()),
        };
        assert!(c.to_string().starts_with("FAIL copious"));
        assert!(c.to_string().ends_with("K=2: x"));
    }
}
