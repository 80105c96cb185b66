//! Linear orders over the alternatives `1..=n`, domains of such orders, and
//! the permutohedron geometry (Kendall distance, adjacency, geodesics) that
//! the property checkers are built on.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which full enumeration of `𝓛([n])` is attempted.
pub const DEFAULT_MAX_N: usize = 10;

/// An alternative, numbered from 1.
pub type Alt = usize;

/// A ranking of `1..=n`, best first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<Alt>,
}

impl LinearOrder {
    /// Validates that `seq` is a permutation of `1..=seq.len()`.
    pub fn new(seq: Vec<Alt>) -> Result<Self> {
        let n = seq.len();
        if n == 0 {
            return Err(Error::InvalidOrder("empty ranking".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &seq {
            if x == 0 || x > n {
                return Err(Error::InvalidOrder(format!(
                    "alternative {x} outside 1..={n}"
                )));
            }
            if seen[x] {
                return Err(Error::InvalidOrder(format!("alternative {x} repeated")));
            }
            seen[x] = true;
        }
        Ok(LinearOrder { ranking: seq })
    }

    /// `12…n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "orders need at least one alternative");
        LinearOrder {
            ranking: (1..=n).collect(),
        }
    }

    /// `n…21`.
    pub fn reversed_identity(n: usize) -> Self {
        Self::identity(n).reverse()
    }

    pub fn n(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[Alt] {
        &self.ranking
    }

    pub fn top(&self) -> Alt {
        self.ranking[0]
    }

    /// `pos[a]` is the 0-based rank of alternative `a`; index 0 is unused.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (i, &a) in self.ranking.iter().enumerate() {
            pos[a] = i;
        }
        pos
    }

    /// 0-based rank of `a`.
    pub fn rank_of(&self, a: Alt) -> Result<usize> {
        self.check_alt(a)?;
        Ok(self.ranking.iter().position(|&x| x == a).unwrap())
    }

    pub fn prefers(&self, x: Alt, y: Alt) -> bool {
        self.ranking.iter().find(|&&a| a == x || a == y) == Some(&x)
    }

    fn check_alt(&self, a: Alt) -> Result<()> {
        if a == 0 || a > self.n() {
            Err(Error::OutOfRange(format!(
                "alternative {a} outside 1..={}",
                self.n()
            )))
        } else {
            Ok(())
        }
    }

    /// The three alternatives of `t` in the order `self` ranks them.
    pub fn restrict(&self, t: Triple) -> Result<[Alt; 3]> {
        if t.c > self.n() {
            return Err(Error::OutOfRange(format!(
                "triple {t} outside 1..={}",
                self.n()
            )));
        }
        let mut out = [0; 3];
        let mut k = 0;
        for &x in &self.ranking {
            if t.contains(x) {
                out[k] = x;
                k += 1;
            }
        }
        Ok(out)
    }

    pub fn reverse(&self) -> Self {
        let mut ranking = self.ranking.clone();
        ranking.reverse();
        LinearOrder { ranking }
    }

    /// Number of pairs ranked oppositely by the two orders.
    pub fn kendall_distance(&self, other: &LinearOrder) -> Result<usize> {
        same_n(self, other)?;
        let pos = other.positions();
        let mapped: Vec<usize> = self.ranking.iter().map(|&a| pos[a]).collect();
        let mut inversions = 0;
        for i in 0..mapped.len() {
            for j in i + 1..mapped.len() {
                if mapped[i] > mapped[j] {
                    inversions += 1;
                }
            }
        }
        Ok(inversions)
    }

    /// True iff the orders differ by exactly one adjacent transposition.
    pub fn is_adjacent(&self, other: &LinearOrder) -> Result<bool> {
        same_n(self, other)?;
        let diffs: Vec<usize> = (0..self.n())
            .filter(|&i| self.ranking[i] != other.ranking[i])
            .collect();
        Ok(diffs.len() == 2
            && diffs[1] == diffs[0] + 1
            && self.ranking[diffs[0]] == other.ranking[diffs[1]]
            && self.ranking[diffs[1]] == other.ranking[diffs[0]])
    }

    /// Swaps the alternatives at ranks `i` and `i + 1`.
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut ranking = self.ranking.clone();
        ranking.swap(i, i + 1);
        LinearOrder { ranking }
    }

    /// The top `k` alternatives (`Id_k`).
    pub fn prefix_set(&self, k: usize) -> Result<BTreeSet<Alt>> {
        if k > self.n() {
            return Err(Error::OutOfRange(format!(
                "prefix length {k} exceeds n = {}",
                self.n()
            )));
        }
        Ok(self.ranking[..k].iter().copied().collect())
    }

    /// Bitmask form of [`prefix_set`](Self::prefix_set); bit `a` stands for alternative `a`.
    pub fn prefix_mask(&self, k: usize) -> u64 {
        self.ranking[..k].iter().fold(0, |m, &a| m | (1 << a))
    }

    /// Alternatives ranked strictly above `a`.
    pub fn upper_contour(&self, a: Alt) -> Result<BTreeSet<Alt>> {
        let r = self.rank_of(a)?;
        self.prefix_set(r)
    }

    /// Applies the relabelling `sigma` (`sigma[a]` is the new name of `a`,
    /// index 0 unused).
    pub fn relabel(&self, sigma: &[Alt]) -> Self {
        LinearOrder {
            ranking: self.ranking.iter().map(|&a| sigma[a]).collect(),
        }
    }
}

fn same_n(u: &LinearOrder, v: &LinearOrder) -> Result<()> {
    if u.n() != v.n() {
        Err(Error::SizeMismatch {
            expected: u.n(),
            found: v.n(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for LinearOrder {
    /// Compact digits for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for a in &self.ranking {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.ranking.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for LinearOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let seq: Vec<Alt> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<Alt>()
                        .map_err(|_| Error::Parse(format!("bad alternative {p:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as Alt)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        LinearOrder::new(seq)
    }
}

impl Serialize for LinearOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LinearOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Three alternatives `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub a: Alt,
    pub b: Alt,
    pub c: Alt,
}

impl Triple {
    /// Sorts its arguments; they must be distinct and positive.
    pub fn new(x: Alt, y: Alt, z: Alt) -> Result<Self> {
        let mut v = [x, y, z];
        v.sort_unstable();
        if v[0] == 0 || v[0] == v[1] || v[1] == v[2] {
            return Err(Error::OutOfRange(format!(
                "{{{x},{y},{z}}} is not a triple of distinct alternatives"
            )));
        }
        Ok(Triple {
            a: v[0],
            b: v[1],
            c: v[2],
        })
    }

    /// All `C(n,3)` triples in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Triple> {
        (1..=n).flat_map(move |a| {
            (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| Triple { a, b, c }))
        })
    }

    pub fn members(&self) -> [Alt; 3] {
        [self.a, self.b, self.c]
    }

    pub fn contains(&self, x: Alt) -> bool {
        x == self.a || x == self.b || x == self.c
    }

    /// Index 0..3 of `x` within `(a, b, c)`.
    pub fn local(&self, x: Alt) -> Option<usize> {
        self.members().iter().position(|&m| m == x)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.a, self.b, self.c)
    }
}

/// The six orders of a triple, as local indices into `(a, b, c)`, in
/// lexicographic order. A set of restrictions is stored as a 6-bit mask
/// over this table.
pub const TRIPLE_PATTERNS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Index into [`TRIPLE_PATTERNS`] of the restriction of an order (given by
/// its position table) to `t`.
pub fn pattern_index(pos: &[usize], t: Triple) -> usize {
    let (pa, pb, pc) = (pos[t.a], pos[t.b], pos[t.c]);
    match (pa < pb, pa < pc, pb < pc) {
        (true, true, true) => 0,
        (true, true, false) => 1,
        (false, true, true) => 2,
        (false, false, true) => 3,
        (true, false, false) => 4,
        (false, false, false) => 5,
        // (true, false, true) and (false, true, false) are intransitive
        _ => unreachable!("positions of a linear order are transitive"),
    }
}

/// Every permutation of `1..=n` in lexicographic order.
pub fn all_orders(n: usize) -> Result<Vec<LinearOrder>> {
    all_orders_capped(n, DEFAULT_MAX_N)
}

pub fn all_orders_capped(n: usize, cap: usize) -> Result<Vec<LinearOrder>> {
    if n == 0 {
        return Err(Error::InvalidOrder("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut cur: Vec<Alt> = (1..=n).collect();
    let mut out = Vec::with_capacity((1..=n).product());
    loop {
        out.push(LinearOrder {
            ranking: cur.clone(),
        });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

/// Advances `v` to its lexicographic successor; false when `v` was the last.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|x| *x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// A set of linear orders on a common `[n]`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DomainRepr", into = "DomainRepr")]
pub struct Domain {
    n: usize,
    orders: Vec<LinearOrder>,
}

#[derive(Serialize, Deserialize)]
struct DomainRepr {
    n: usize,
    orders: Vec<LinearOrder>,
}

impl TryFrom<DomainRepr> for Domain {
    type Error = Error;
    fn try_from(r: DomainRepr) -> Result<Self> {
        Domain::new(r.n, r.orders)
    }
}

impl From<Domain> for DomainRepr {
    fn from(d: Domain) -> Self {
        DomainRepr {
            n: d.n,
            orders: d.orders,
        }
    }
}

impl Domain {
    /// Sorts and deduplicates; every order must be on `[n]`.
    pub fn new(n: usize, orders: impl IntoIterator<Item = LinearOrder>) -> Result<Self> {
        let mut orders: Vec<LinearOrder> = orders.into_iter().collect();
        if let Some(bad) = orders.iter().find(|o| o.n() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                found: bad.n(),
            });
        }
        orders.sort_unstable();
        orders.dedup();
        Ok(Domain { n, orders })
    }

    /// Parses orders from their string form; panics on malformed input.
    /// Meant for literals in tests and examples.
    pub fn from_strs(n: usize, strs: &[&str]) -> Self {
        let orders = strs
            .iter()
            .map(|s| s.parse().unwrap_or_else(|e| panic!("{s}: {e}")));
        Domain::new(n, orders).expect("orders share n")
    }

    /// `𝓛([n])`.
    pub fn universal(n: usize) -> Result<Self> {
        Ok(Domain {
            n,
            orders: all_orders(n)?,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LinearOrder> {
        self.orders.iter()
    }

    pub fn contains(&self, v: &LinearOrder) -> bool {
        self.orders.binary_search(v).is_ok()
    }

    pub fn with_order(&self, v: LinearOrder) -> Result<Self> {
        Domain::new(self.n, self.orders.iter().cloned().chain(Some(v)))
    }

    pub fn reversed(&self) -> Self {
        Domain::new(self.n, self.orders.iter().map(LinearOrder::reverse)).unwrap()
    }

    pub fn relabel(&self, sigma: &[Alt]) -> Self {
        Domain::new(self.n, self.orders.iter().map(|o| o.relabel(sigma))).unwrap()
    }

    fn check_triple(&self, t: Triple) -> Result<()> {
        if t.c > self.n {
            Err(Error::OutOfRange(format!(
                "triple {t} outside 1..={}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    /// Distinct restrictions of the domain's orders to `t`.
    pub fn restrict(&self, t: Triple) -> Result<BTreeSet<[Alt; 3]>> {
        self.check_triple(t)?;
        Ok(self.orders.iter().map(|o| o.restrict(t).unwrap()).collect())
    }

    /// [`restrict`](Self::restrict) as a mask over [`TRIPLE_PATTERNS`].
    pub fn restriction_mask(&self, t: Triple) -> Result<u8> {
        self.check_triple(t)?;
        Ok(self
            .orders
            .iter()
            .fold(0, |m, o| m | (1 << pattern_index(&o.positions(), t))))
    }

    /// Restriction masks for every triple, in [`Triple::all`] order.
    pub fn restriction_masks(&self) -> Vec<(Triple, u8)> {
        let positions: Vec<Vec<usize>> = self.orders.iter().map(|o| o.positions()).collect();
        Triple::all(self.n)
            .map(|t| {
                let m = positions
                    .iter()
                    .fold(0u8, |m, p| m | (1 << pattern_index(p, t)));
                (t, m)
            })
            .collect()
    }

    /// See [`geodesic_connected`].
    pub fn geodesic_connected(&self, u: &LinearOrder, v: &LinearOrder) -> Result<bool> {
        geodesic_connected(self, u, v)
    }
}

impl<'a> IntoIterator for &'a Domain {
    type Item = &'a LinearOrder;
    type IntoIter = std::slice::Iter<'a, LinearOrder>;
    fn into_iter(self) -> Self::IntoIter {
        self.orders.iter()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// True iff a shortest permutohedron path from `u` to `v` stays inside `d`.
///
/// Breadth-first over members of `d`, stepping only along adjacent swaps of
/// pairs that `v` orders the other way, so every step lowers the distance
/// to `v` by exactly one.
pub fn geodesic_connected(d: &Domain, u: &LinearOrder, v: &LinearOrder) -> Result<bool> {
    for w in [u, v] {
        if !d.contains(w) {
            return Err(Error::NotInDomain(w.to_string()));
        }
    }
    if u == v {
        return Ok(true);
    }
    let target = v.positions();
    let mut seen: HashSet<LinearOrder> = HashSet::new();
    let mut queue = VecDeque::from([u.clone()]);
    seen.insert(u.clone());
    while let Some(cur) = queue.pop_front() {
        let r = cur.ranking();
        for i in 0..r.len() - 1 {
            // discordant with v: v puts r[i+1] above r[i]
            if target[r[i + 1]] < target[r[i]] {
                let next = cur.swap_adjacent(i);
                if &next == v {
                    return Ok(true);
                }
                if d.contains(&next) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}
