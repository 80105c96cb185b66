//! Necklaces of black and white beads, white-convex bead sets, and the
//! domain of orders read off flags of white-convex sets.
//!
//! Arcs are judged on circle positions; whiteness and the "no white label
//! skipped" rule are judged on integer labels.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::never::KSubset;
use crate::order::{all_orders, Alt, Domain, LinearOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

/// A set of bead labels, bit `a` standing for label `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BeadSet(u64);

impl BeadSet {
    pub const EMPTY: BeadSet = BeadSet(0);

    pub fn from_bits(bits: u64) -> Self {
        BeadSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        BeadSet(((1u64 << n) - 1) << 1)
    }

    pub fn single(a: Alt) -> Self {
        BeadSet(1 << a)
    }

    pub fn with(self, a: Alt) -> Self {
        BeadSet(self.0 | 1 << a)
    }

    pub fn contains(self, a: Alt) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = Alt> {
        (1..64).filter(move |&a| self.0 >> a & 1 == 1)
    }

    fn min(self) -> Alt {
        self.0.trailing_zeros() as Alt
    }

    fn max(self) -> Alt {
        63 - self.0.leading_zeros() as Alt
    }
}

impl FromIterator<Alt> for BeadSet {
    fn from_iter<I: IntoIterator<Item = Alt>>(iter: I) -> Self {
        iter.into_iter().fold(BeadSet::EMPTY, BeadSet::with)
    }
}

impl fmt::Display for BeadSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Beads `1..=n` placed anticlockwise around a circle, each white or black.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "NecklaceRepr", into = "NecklaceRepr")]
pub struct Necklace {
    circle: Vec<Alt>,
    /// Indexed by label; slot 0 unused.
    black: Vec<bool>,
    /// Circle position of each label; slot 0 unused.
    pos: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct NecklaceRepr {
    circle: Vec<Alt>,
    black: Vec<Alt>,
}

impl TryFrom<NecklaceRepr> for Necklace {
    type Error = Error;
    fn try_from(r: NecklaceRepr) -> Result<Self> {
        Necklace::new(r.circle, &r.black)
    }
}

impl From<Necklace> for NecklaceRepr {
    fn from(s: Necklace) -> Self {
        NecklaceRepr {
            black: (1..=s.n()).filter(|&a| s.black[a]).collect(),
            circle: s.circle,
        }
    }
}

impl Necklace {
    pub fn new(circle: Vec<Alt>, black: &[Alt]) -> Result<Self> {
        let n = circle.len();
        if n == 0 || n > 63 {
            return Err(Error::InvalidNecklace(format!("{n} beads (need 1..=63)")));
        }
        LinearOrder::new(circle.clone())
            .map_err(|e| Error::InvalidNecklace(format!("circle is not a permutation: {e}")))?;
        let mut is_black = vec![false; n + 1];
        for &b in black {
            if b == 0 || b > n {
                return Err(Error::InvalidNecklace(format!(
                    "black bead {b} not on the circle"
                )));
            }
            is_black[b] = true;
        }
        let mut pos = vec![0; n + 1];
        for (i, &a) in circle.iter().enumerate() {
            pos[a] = i;
        }
        Ok(Necklace {
            circle,
            black: is_black,
            pos,
        })
    }

    pub fn n(&self) -> usize {
        self.circle.len()
    }

    pub fn circle(&self) -> &[Alt] {
        &self.circle
    }

    pub fn color(&self, a: Alt) -> Color {
        if self.black[a] {
            Color::Black
        } else {
            Color::White
        }
    }

    pub fn black_beads(&self) -> Vec<Alt> {
        (1..=self.n()).filter(|&a| self.black[a]).collect()
    }

    fn in_range(&self, x: BeadSet) -> bool {
        x.bits() & !BeadSet::full(self.n()).bits() == 0
    }

    /// Members of `x` sit on consecutive circle positions (∅ and the full
    /// circle included).
    pub fn is_arc(&self, x: BeadSet) -> bool {
        let n = self.n();
        let k = x.len();
        if k == 0 || k == n {
            return true;
        }
        // an arc has exactly one member whose anticlockwise predecessor is absent
        let starts = x
            .members()
            .filter(|&a| {
                let prev = self.circle[(self.pos[a] + n - 1) % n];
                !x.contains(prev)
            })
            .count();
        starts == 1
    }

    /// An arc, not a lone black bead, and skipping no white label between
    /// its smallest and largest members.
    pub fn is_w_convex(&self, x: BeadSet) -> Result<bool> {
        if x.is_empty() {
            return Err(Error::EmptyBeadSet);
        }
        if !self.in_range(x) {
            return Err(Error::OutOfRange(format!(
                "{x} is not within 1..={}",
                self.n()
            )));
        }
        Ok(self.w_convex_unchecked(x))
    }

    fn w_convex_unchecked(&self, x: BeadSet) -> bool {
        if !self.is_arc(x) {
            return false;
        }
        if x.len() == 1 && self.black[x.min()] {
            return false;
        }
        (x.min() + 1..x.max()).all(|j| self.black[j] || x.contains(j))
    }

    /// All nonempty w-convex sets, in increasing bit order.
    pub fn enumerate_w_convex(&self) -> Vec<BeadSet> {
        let n = self.n();
        (1u64..1 << n)
            .map(|b| BeadSet(b << 1))
            .filter(|&x| self.w_convex_unchecked(x))
            .collect()
    }

    /// True iff every prefix set of `v` is w-convex here.
    pub fn all_prefixes_w_convex(&self, v: &LinearOrder) -> bool {
        (1..=v.n()).all(|k| self.w_convex_unchecked(BeadSet(v.prefix_mask(k))))
    }

    /// `𝓓(S)`: orders read top-down from flags `X₁ ⊂ … ⊂ X_n` of w-convex sets.
    pub fn flags_to_domain(&self) -> Domain {
        let n = self.n();
        let roots: Vec<Alt> = (1..=n)
            .filter(|&a| self.w_convex_unchecked(BeadSet::single(a)))
            .collect();
        let orders: Vec<LinearOrder> = roots
            .into_par_iter()
            .flat_map_iter(|root| {
                let mut out = Vec::new();
                let mut prefix = vec![root];
                self.extend_flag(BeadSet::single(root), &mut prefix, &mut out);
                out
            })
            .collect();
        Domain::new(n, orders).expect("flags produce orders on [n]")
    }

    fn extend_flag(&self, x: BeadSet, prefix: &mut Vec<Alt>, out: &mut Vec<LinearOrder>) {
        let n = self.n();
        if prefix.len() == n {
            out.push(LinearOrder::new(prefix.clone()).expect("flag is a permutation"));
            return;
        }
        for a in 1..=n {
            if x.contains(a) {
                continue;
            }
            let next = x.with(a);
            if self.w_convex_unchecked(next) {
                prefix.push(a);
                self.extend_flag(next, prefix, out);
                prefix.pop();
            }
        }
    }
}

impl fmt::Display for Necklace {
    /// `1w,2w,4w,3b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .circle
            .iter()
            .map(|&a| format!("{a}{}", if self.black[a] { 'b' } else { 'w' }))
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Necklace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut circle = Vec::new();
        let mut black = Vec::new();
        for tok in s.trim().split(',') {
            let tok = tok.trim();
            let (label, color) = tok.split_at(tok.len().saturating_sub(1));
            let a: Alt = label
                .parse()
                .map_err(|_| Error::Parse(format!("bad bead {tok:?}")))?;
            match color {
                "w" => {}
                "b" => black.push(a),
                _ => return Err(Error::Parse(format!("bead {tok:?} needs a w/b suffix"))),
            }
            circle.push(a);
        }
        Necklace::new(circle, &black)
    }
}

/// `S_K`: circle `1, k₁, …, k_s, n, ℓ_t, …, ℓ₁` with `L = [2, n−1] \ K` black.
pub fn gf_necklace(n: usize, k: &KSubset) -> Result<Necklace> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if k.n() != n {
        return Err(Error::InvalidK(format!(
            "K was built for n = {}, not {n}",
            k.n()
        )));
    }
    let l = k.complement();
    let circle: Vec<Alt> = std::iter::once(1)
        .chain(k.members().iter().copied())
        .chain(std::iter::once(n))
        .chain(l.members().iter().rev().copied())
        .collect();
    let black: Vec<Alt> = l.members().iter().copied().collect();
    Necklace::new(circle, &black)
}

/// Orders on the axis `1 ◁ 2 ◁ … ◁ n` whose every prefix is an integer
/// interval. Enumerated directly, without necklaces.
pub fn classical_single_peaked(n: usize) -> Result<Domain> {
    let orders = all_orders(n)?.into_iter().filter(|v| {
        let r = v.ranking();
        let (mut lo, mut hi) = (r[0], r[0]);
        r.iter().enumerate().all(|(k, &a)| {
            lo = lo.min(a);
            hi = hi.max(a);
            hi - lo == k
        })
    });
    Domain::new(n, orders)
}
