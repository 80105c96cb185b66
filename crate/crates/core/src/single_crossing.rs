//! Single-crossing domains as maximal chains in the weak order: every pair
//! of alternatives swaps exactly once on the way from `12…n` to `n…21`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analysis::{is_condorcet, is_maximal_condorcet, is_spoc, CircularArrangement};
use crate::error::{Error, Result};
use crate::order::{Alt, Domain, LinearOrder};

/// Largest `n` for which all maximal chains are enumerated (768 chains at 5,
/// 292 864 at 6).
pub const MAX_CHAIN_N: usize = 5;

/// A maximal chain from `12…n` to `n…21`, one adjacent swap per pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwapSequence {
    n: usize,
    swaps: Vec<(Alt, Alt)>,
}

impl SwapSequence {
    /// Checks that every pair appears once and that each swap exchanges
    /// neighbours of the current order.
    pub fn new(n: usize, swaps: Vec<(Alt, Alt)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSwaps("n must be at least 1".into()));
        }
        let swaps: Vec<(Alt, Alt)> = swaps
            .into_iter()
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        let mut seen = BTreeSet::new();
        for &(x, y) in &swaps {
            if x == y || x == 0 || y > n {
                return Err(Error::InvalidSwaps(format!(
                    "{x}-{y} is not a pair of [{n}]"
                )));
            }
            if !seen.insert((x, y)) {
                return Err(Error::InvalidSwaps(format!("{x}-{y} swapped twice")));
            }
        }
        if swaps.len() != n * (n - 1) / 2 {
            return Err(Error::InvalidSwaps(format!(
                "{} swaps, a maximal chain needs {}",
                swaps.len(),
                n * (n - 1) / 2
            )));
        }
        let sw = SwapSequence { n, swaps };
        sw.walk()?;
        Ok(sw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn swaps(&self) -> &[(Alt, Alt)] {
        &self.swaps
    }

    fn walk(&self) -> Result<Vec<LinearOrder>> {
        let mut cur = LinearOrder::identity(self.n);
        let mut out = vec![cur.clone()];
        for &(x, y) in &self.swaps {
            let r = cur.ranking();
            let i = r.iter().position(|&a| a == x).unwrap();
            let j = r.iter().position(|&a| a == y).unwrap();
            if i.abs_diff(j) != 1 {
                return Err(Error::InvalidSwaps(format!(
                    "{x} and {y} are not adjacent in {cur}"
                )));
            }
            cur = cur.swap_adjacent(i.min(j));
            out.push(cur.clone());
        }
        Ok(out)
    }

    /// The `C(n,2) + 1` orders of the chain, `12…n` first.
    pub fn orders(&self) -> Vec<LinearOrder> {
        self.walk().expect("validated on construction")
    }
}

impl fmt::Display for SwapSequence {
    /// `1-2 1-3 2-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.swaps.iter().map(|(x, y)| format!("{x}-{y}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SwapSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut swaps = Vec::new();
        let mut n = 0;
        for tok in s.split_whitespace() {
            let (x, y) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("expected x-y, got {tok:?}")))?;
            let x: Alt = x
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair {tok:?}")))?;
            let y: Alt = y
                .parse()
                .map_err(|_| Error::Parse(format!("bad pair {tok:?}")))?;
            n = n.max(x).max(y);
            swaps.push((x, y));
        }
        SwapSequence::new(n.max(1), swaps)
    }
}

pub fn chain_to_domain(sw: &SwapSequence) -> Domain {
    Domain::new(sw.n, sw.orders()).expect("chain orders share n")
}

/// Every maximal chain of adjacent transpositions from `12…n` to `n…21`.
pub fn enumerate_maximal_chains(n: usize) -> Result<Vec<SwapSequence>> {
    if n == 0 {
        return Err(Error::InvalidSwaps("n must be at least 1".into()));
    }
    if n > MAX_CHAIN_N {
        return Err(Error::CapExceeded {
            n,
            cap: MAX_CHAIN_N,
        });
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    extend_chain(&mut (1..=n).collect::<Vec<_>>(), &mut path, &mut out, n);
    Ok(out)
}

fn extend_chain(
    cur: &mut Vec<Alt>,
    path: &mut Vec<(Alt, Alt)>,
    out: &mut Vec<SwapSequence>,
    n: usize,
) {
    if path.len() == n * (n - 1) / 2 {
        out.push(SwapSequence {
            n,
            swaps: path.clone(),
        });
        return;
    }
    for i in 0..n - 1 {
        // only uninverted neighbours, so every pair flips once
        if cur[i] < cur[i + 1] {
            path.push((cur[i], cur[i + 1]));
            cur.swap(i, i + 1);
            extend_chain(cur, path, out, n);
            cur.swap(i, i + 1);
            path.pop();
        }
    }
}

/// Alternative 1 sinks from top to bottom, swapping with `2, 3, …, n`; then
/// the largest remaining alternative repeatedly bubbles to the top of the
/// unfinished block.
pub fn relay_chain(n: usize) -> Result<SwapSequence> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut swaps: Vec<(Alt, Alt)> = (2..=n).map(|k| (1, k)).collect();
    let mut cur: Vec<Alt> = (2..=n).collect();
    for top in 0..n - 1 {
        let m = n - top;
        let mut i = cur.iter().position(|&a| a == m).unwrap();
        while i > top {
            swaps.push((cur[i - 1].min(m), m));
            cur.swap(i - 1, i);
            i -= 1;
        }
    }
    SwapSequence::new(n, swaps)
}

/// Two-element sets that must be circle edges if `d` is single-peaked on a
/// circle: every 2-element top set, and every 2-element bottom set (the
/// complement of an arc is an arc).
pub fn forced_circle_edges(d: &Domain) -> BTreeSet<(Alt, Alt)> {
    let n = d.n();
    let mut edges = BTreeSet::new();
    if n < 4 {
        return edges;
    }
    for v in d {
        let r = v.ranking();
        for (x, y) in [(r[0], r[1]), (r[n - 2], r[n - 1])] {
            edges.insert((x.min(y), x.max(y)));
        }
    }
    edges
}

/// An alternative forced to have three or more circle neighbours, which no
/// circular arrangement allows. `None` means this particular obstruction is
/// absent (the domain may still fail to be single-peaked on a circle).
pub fn circle_edge_obstruction(d: &Domain) -> Option<(Alt, Vec<Alt>)> {
    let mut nbrs: BTreeMap<Alt, Vec<Alt>> = BTreeMap::new();
    for (x, y) in forced_circle_edges(d) {
        nbrs.entry(x).or_default().push(y);
        nbrs.entry(y).or_default().push(x);
    }
    nbrs.into_iter().find(|(_, ns)| ns.len() >= 3)
}

/// Whether some circular arrangement of `[n]` has every given set as an arc.
/// Exhaustive.
pub fn sets_fit_on_circle(n: usize, sets: &[BTreeSet<Alt>]) -> Result<bool> {
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| s.iter().fold(0, |m, &a| m | 1 << a))
        .collect();
    Ok(CircularArrangement::all(n)?
        .iter()
        .any(|arr| masks.iter().all(|&m| arr.is_arc_mask(m))))
}

/// Outcome of checking every maximal chain at one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleCrossingReport {
    pub n: usize,
    pub chains: usize,
    /// Chains whose domain is a maximal Condorcet domain.
    pub maximal: usize,
    /// Chain domains that failed the Condorcet test (expected: none).
    pub not_condorcet: Vec<SwapSequence>,
    /// Maximal chain domains found single-peaked on a circle (expected: none).
    pub spoc: Vec<(SwapSequence, CircularArrangement)>,
}

impl SingleCrossingReport {
    pub fn holds(&self) -> bool {
        self.not_condorcet.is_empty() && self.spoc.is_empty()
    }
}

/// Exhaustive check, for `4 ≤ n ≤ 5`, that no single-crossing maximal
/// Condorcet domain is single-peaked on a circle.
pub fn thm7_census(n: usize) -> Result<SingleCrossingReport> {
    if !(4..=MAX_CHAIN_N).contains(&n) {
        return Err(Error::OutOfRange(format!(
            "single-crossing check runs for 4 <= n <= {MAX_CHAIN_N}, got {n}"
        )));
    }
    let chains = enumerate_maximal_chains(n)?;
    let verdicts: Vec<(SwapSequence, bool, bool, Option<CircularArrangement>)> = chains
        .into_par_iter()
        .map(|sw| {
            let d = chain_to_domain(&sw);
            let condorcet = is_condorcet(&d);
            let maximal = condorcet && is_maximal_condorcet(&d).unwrap();
            let arr = if maximal { is_spoc(&d).unwrap() } else { None };
            (sw, condorcet, maximal, arr)
        })
        .collect();
    Ok(SingleCrossingReport {
        n,
        chains: verdicts.len(),
        maximal: verdicts.iter().filter(|v| v.2).count(),
        not_condorcet: verdicts
            .iter()
            .filter(|v| !v.1)
            .map(|v| v.0.clone())
            .collect(),
        spoc: verdicts
            .into_iter()
            .filter_map(|(sw, _, _, arr)| arr.map(|a| (sw, a)))
            .collect(),
    })
}

pub fn verify_thm7(n: usize) -> Result<bool> {
    Ok(thm7_census(n)?.holds())
}
