//! Never conditions, complete sets of them, and the generalised alternating
//! scheme that defines the GF-domain `F_K`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::order::{all_orders, pattern_index, Alt, Domain, LinearOrder, Triple, TRIPLE_PATTERNS};

/// `xN{a,b,c}i`: in the restriction to `{a,b,c}`, `x` never sits at position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NeverCondition {
    pub triple: Triple,
    pub restricted: Alt,
    /// 1 = top, 2 = middle, 3 = bottom.
    pub position: u8,
}

impl NeverCondition {
    pub fn new(triple: Triple, restricted: Alt, position: u8) -> Result<Self> {
        if !triple.contains(restricted) {
            return Err(Error::OutOfRange(format!(
                "{restricted} is not a member of {triple}"
            )));
        }
        if !(1..=3).contains(&position) {
            return Err(Error::OutOfRange(format!(
                "position {position} is not in 1..=3"
            )));
        }
        Ok(NeverCondition {
            triple,
            restricted,
            position,
        })
    }

    /// The nine conditions on `t`.
    pub fn all_on(t: Triple) -> impl Iterator<Item = NeverCondition> {
        t.members().into_iter().flat_map(move |x| {
            (1..=3).map(move |i| NeverCondition {
                triple: t,
                restricted: x,
                position: i,
            })
        })
    }

    /// Restriction patterns (over [`TRIPLE_PATTERNS`]) this condition forbids.
    pub fn forbidden_mask(&self) -> u8 {
        let x = self.triple.local(self.restricted).unwrap();
        let slot = (self.position - 1) as usize;
        TRIPLE_PATTERNS
            .iter()
            .enumerate()
            .filter(|(_, p)| p[slot] == x)
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    pub fn is_never_top(&self) -> bool {
        self.position == 1
    }

    pub fn is_never_bottom(&self) -> bool {
        self.position == 3
    }
}

impl fmt::Display for NeverCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}N{}{}", self.restricted, self.triple, self.position)
    }
}

impl FromStr for NeverCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected xN{{a,b,c}}i, got {s:?}"));
        let s = s.trim();
        let (x, rest) = s.split_once('N').ok_or_else(bad)?;
        let rest = rest.strip_prefix('{').ok_or_else(bad)?;
        let (members, pos) = rest.split_once('}').ok_or_else(bad)?;
        let m: Vec<Alt> = members
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        if m.len() != 3 {
            return Err(bad());
        }
        let triple = Triple::new(m[0], m[1], m[2])?;
        let x: Alt = x.trim().parse().map_err(|_| bad())?;
        let pos: u8 = pos.trim().parse().map_err(|_| bad())?;
        NeverCondition::new(triple, x, pos)
    }
}

/// Exactly one never condition per triple of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteNeverSet {
    n: usize,
    conditions: BTreeMap<Triple, NeverCondition>,
}

impl CompleteNeverSet {
    pub fn new(n: usize, conditions: impl IntoIterator<Item = NeverCondition>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for c in conditions {
            if c.triple.c > n {
                return Err(Error::OutOfRange(format!(
                    "{c} mentions alternatives beyond {n}"
                )));
            }
            if let Some(prev) = map.insert(c.triple, c) {
                return Err(Error::Incomplete(format!(
                    "two conditions on {}: {prev} and {c}",
                    c.triple
                )));
            }
        }
        if let Some(t) = Triple::all(n).find(|t| !map.contains_key(t)) {
            return Err(Error::Incomplete(format!("no condition on triple {t}")));
        }
        Ok(CompleteNeverSet { n, conditions: map })
    }

    /// Parses one condition per non-blank line; `#` starts a comment.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut conds = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let c = line.parse().map_err(|e: Error| Error::ParseLine {
                line: i + 1,
                message: e.to_string(),
            })?;
            conds.push(c);
        }
        CompleteNeverSet::new(n, conds)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Triple) -> Option<&NeverCondition> {
        self.conditions.get(&t)
    }

    pub fn iter(&self) -> impl Iterator<Item = &NeverCondition> {
        self.conditions.values()
    }

    pub fn len(&self) -> usize {
        self.conditions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }

    /// All orders of `𝓛([n])` satisfying every condition (`𝓓(𝓝)`).
    pub fn domain(&self) -> Result<Domain> {
        domain_of_scheme(self)
    }
}

impl fmt::Display for CompleteNeverSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.conditions.values() {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A subset of the interior alternatives `[2, n−1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSubset {
    n: usize,
    members: BTreeSet<Alt>,
}

impl KSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = Alt>) -> Result<Self> {
        let members: BTreeSet<Alt> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&k| k < 2 || k + 1 > n) {
            return Err(Error::InvalidK(format!(
                "{bad} is outside [2, {}]",
                n.saturating_sub(1)
            )));
        }
        Ok(KSubset { n, members })
    }

    pub fn empty(n: usize) -> Self {
        KSubset {
            n,
            members: BTreeSet::new(),
        }
    }

    /// `K = [2, n−1]`.
    pub fn full(n: usize) -> Self {
        KSubset {
            n,
            members: (2..n).collect(),
        }
    }

    /// Comma-separated members; the empty string is `∅`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return KSubset::new(n, []);
        }
        let members = s
            .split([',', '-'])
            .map(|p| {
                p.trim()
                    .parse::<Alt>()
                    .map_err(|_| Error::InvalidK(format!("{p:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        KSubset::new(n, members)
    }

    /// All `2^{n−2}` subsets, in binary-counter order (bit `i` ↔ member `i + 2`).
    pub fn all(n: usize) -> Vec<KSubset> {
        let interior = n.saturating_sub(2);
        (0u64..1 << interior)
            .map(|bits| KSubset {
                n,
                members: (0..interior)
                    .filter(|i| bits >> i & 1 == 1)
                    .map(|i| i + 2)
                    .collect(),
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: Alt) -> bool {
        self.members.contains(&a)
    }

    pub fn members(&self) -> &BTreeSet<Alt> {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `L = [2, n−1] \ K`.
    pub fn complement(&self) -> KSubset {
        KSubset {
            n: self.n,
            members: (2..self.n).filter(|a| !self.members.contains(a)).collect(),
        }
    }

    /// Dash-joined members, `-` for the empty set.
    pub fn dash_label(&self) -> String {
        if self.members.is_empty() {
            "-".into()
        } else {
            let parts: Vec<String> = self.members.iter().map(|a| a.to_string()).collect();
            parts.join("-")
        }
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Fishburn's original choice: the even numbers in `[2, n−1]`.
pub fn fishburn_k(n: usize) -> KSubset {
    KSubset {
        n,
        members: (2..n).filter(|a| a % 2 == 0).collect(),
    }
}

/// The generalised alternating scheme: for `i < j < k`, `j` is never last
/// when `j ∈ K` and never first otherwise.
pub fn gf_scheme(n: usize, k: &KSubset) -> Result<CompleteNeverSet> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if k.n != n {
        return Err(Error::InvalidK(format!(
            "K was built for n = {}, not {n}",
            k.n
        )));
    }
    let conditions = Triple::all(n).map(|t| NeverCondition {
        triple: t,
        restricted: t.b,
        position: if k.contains(t.b) { 3 } else { 1 },
    });
    CompleteNeverSet::new(n, conditions)
}

pub fn satisfies(v: &LinearOrder, c: &NeverCondition) -> Result<bool> {
    let r = v.restrict(c.triple)?;
    Ok(r[(c.position - 1) as usize] != c.restricted)
}

/// Filters all `n!` orders by the scheme.
pub fn domain_of_scheme(s: &CompleteNeverSet) -> Result<Domain> {
    let all = all_orders(s.n)?;
    // precompute masks once instead of per order
    let compiled: Vec<(Triple, u8)> = s
        .conditions
        .values()
        .map(|c| (c.triple, c.forbidden_mask()))
        .collect();
    let kept: Vec<LinearOrder> = all
        .into_par_iter()
        .filter(|v| {
            let pos = v.positions();
            compiled
                .iter()
                .all(|&(t, m)| m & (1 << pattern_index(&pos, t)) == 0)
        })
        .collect();
    Domain::new(s.n, kept)
}

/// `F_K`.
pub fn gf_domain(n: usize, k: &KSubset) -> Result<Domain> {
    domain_of_scheme(&gf_scheme(n, k)?)
}

/// Every never condition on `t` that all orders of `d` satisfy.
pub fn infer_satisfied_conditions(d: &Domain, t: Triple) -> Result<BTreeSet<NeverCondition>> {
    let mask = d.restriction_mask(t)?;
    Ok(satisfied_by_mask(t, mask).collect())
}

pub(crate) fn satisfied_by_mask(t: Triple, mask: u8) -> impl Iterator<Item = NeverCondition> {
    NeverCondition::all_on(t).filter(move |c| c.forbidden_mask() & mask == 0)
}

/// Whether a restriction mask is compatible with at least one never condition.
pub(crate) fn mask_admits_condition(mask: u8) -> bool {
    FORBIDDEN_MASKS.iter().any(|f| f & mask == 0)
}

const FORBIDDEN_MASKS: [u8; 9] = forbidden_masks();

const fn forbidden_masks() -> [u8; 9] {
    let mut out = [0u8; 9];
    let mut x = 0;
    while x < 3 {
        let mut slot = 0;
        while slot < 3 {
            let mut m = 0u8;
            let mut i = 0;
            while i < 6 {
                if TRIPLE_PATTERNS[i][slot] == x {
                    m |= 1 << i;
                }
                i += 1;
            }
            out[x * 3 + slot] = m;
            slot += 1;
        }
        x += 1;
    }
    out
}
