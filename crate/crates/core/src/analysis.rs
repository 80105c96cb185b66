//! Property checkers for domains: Condorcet, copious, maximal, maximal
//! width, semi- and direct connectivity, and single-peakedness on a circle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::never::{mask_admits_condition, CompleteNeverSet};
use crate::order::{
    all_orders, geodesic_connected, next_permutation, pattern_index, Alt, Domain, LinearOrder,
    Triple,
};

/// First triple (lexicographically) whose restriction admits no never condition.
pub fn condorcet_violation(d: &Domain) -> Option<Triple> {
    d.restriction_masks()
        .into_iter()
        .find(|&(_, m)| !mask_admits_condition(m))
        .map(|(t, _)| t)
}

/// A domain is Condorcet iff every triple satisfies some never condition.
pub fn is_condorcet(d: &Domain) -> bool {
    condorcet_violation(d).is_none()
}

/// First triple whose restriction does not have exactly four orders.
pub fn copious_violation(d: &Domain) -> Option<(Triple, usize)> {
    d.restriction_masks()
        .into_iter()
        .map(|(t, m)| (t, m.count_ones() as usize))
        .find(|&(_, size)| size != 4)
}

pub fn is_copious(d: &Domain) -> bool {
    copious_violation(d).is_none()
}

/// Lexicographically first order outside `d` whose addition keeps the
/// domain Condorcet, or `None` if `d` is maximal.
pub fn addable_order(d: &Domain) -> Result<Option<LinearOrder>> {
    if let Some(t) = condorcet_violation(d) {
        return Err(Error::NotCondorcet(t.to_string()));
    }
    let masks = d.restriction_masks();
    let candidates = all_orders(d.n())?;
    Ok(candidates.into_par_iter().find_first(|u| {
        if d.contains(u) {
            return false;
        }
        let pos = u.positions();
        masks
            .iter()
            .all(|&(t, m)| mask_admits_condition(m | 1 << pattern_index(&pos, t)))
    }))
}

/// No order of `𝓛([n]) \ d` can be added without breaking the Condorcet
/// property. Checked by trying every single addition.
pub fn is_maximal_condorcet(d: &Domain) -> Result<bool> {
    Ok(addable_order(d)?.is_none())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WidthMode {
    /// Contains `12…n` and `n…21`.
    #[default]
    Identity,
    /// Contains some order together with its reversal.
    AnyReversedPair,
}

pub fn has_maximal_width(d: &Domain, mode: WidthMode) -> bool {
    if d.is_empty() {
        return false;
    }
    let n = d.n();
    match mode {
        WidthMode::Identity => {
            d.contains(&LinearOrder::identity(n)) && d.contains(&LinearOrder::reversed_identity(n))
        }
        WidthMode::AnyReversedPair => d.iter().any(|v| d.contains(&v.reverse())),
    }
}

/// `12…n` and `n…21` are joined by a geodesic inside `d`.
pub fn is_semi_connected(d: &Domain) -> Result<bool> {
    if !has_maximal_width(d, WidthMode::Identity) {
        return Err(Error::NotMaximalWidth);
    }
    let n = d.n();
    geodesic_connected(
        d,
        &LinearOrder::identity(n),
        &LinearOrder::reversed_identity(n),
    )
}

/// First pair `(u, v)`, `u < v`, not joined by a geodesic inside `d`.
pub fn disconnected_pair(d: &Domain) -> Option<(LinearOrder, LinearOrder)> {
    let orders = d.orders();
    (0..orders.len()).into_par_iter().find_map_first(|i| {
        orders[i + 1..]
            .iter()
            .find(|v| !geodesic_connected(d, &orders[i], v).unwrap())
            .map(|v| (orders[i].clone(), v.clone()))
    })
}

pub fn is_directly_connected(d: &Domain) -> bool {
    disconnected_pair(d).is_none()
}

/// Alternatives placed anticlockwise on a circle, normalised so that 1 comes
/// first and the second entry is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CircularArrangement {
    circle: Vec<Alt>,
}

impl CircularArrangement {
    /// Rotates and reflects `circle` into canonical form.
    pub fn new(circle: Vec<Alt>) -> Result<Self> {
        LinearOrder::new(circle.clone())?;
        let n = circle.len();
        let start = circle.iter().position(|&a| a == 1).unwrap();
        let mut c: Vec<Alt> = (0..n).map(|i| circle[(start + i) % n]).collect();
        if n > 2 && c[1] > c[n - 1] {
            c[1..].reverse();
        }
        Ok(CircularArrangement { circle: c })
    }

    /// All `(n−1)!/2` canonical arrangements (one for `n ≤ 2`).
    pub fn all(n: usize) -> Result<Vec<CircularArrangement>> {
        if n == 0 {
            return Err(Error::InvalidOrder("n must be at least 1".into()));
        }
        if n > crate::order::DEFAULT_MAX_N {
            return Err(Error::CapExceeded {
                n,
                cap: crate::order::DEFAULT_MAX_N,
            });
        }
        let mut rest: Vec<Alt> = (2..=n).collect();
        let mut out = Vec::new();
        loop {
            if n <= 2 || rest[0] < rest[n - 2] {
                let mut circle = vec![1];
                circle.extend_from_slice(&rest);
                out.push(CircularArrangement { circle });
            }
            if !next_permutation(&mut rest) {
                break;
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.circle.len()
    }

    pub fn circle(&self) -> &[Alt] {
        &self.circle
    }

    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (i, &a) in self.circle.iter().enumerate() {
            pos[a] = i;
        }
        pos
    }

    /// `mask` (bit `a` for alternative `a`) occupies consecutive positions.
    pub fn is_arc_mask(&self, mask: u64) -> bool {
        is_arc_with(&self.circle, &self.positions(), mask)
    }
}

fn is_arc_with(circle: &[Alt], pos: &[usize], mask: u64) -> bool {
    let n = circle.len();
    let k = mask.count_ones() as usize;
    if k == 0 || k == n {
        return true;
    }
    let starts = (1..=n)
        .filter(|&a| mask >> a & 1 == 1)
        .filter(|&a| {
            let prev = circle[(pos[a] + n - 1) % n];
            mask >> prev & 1 == 0
        })
        .count();
    starts == 1
}

impl fmt::Display for CircularArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.circle.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for CircularArrangement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.circle.serialize(s)
    }
}

/// Distinct nonempty proper prefix sets of the domain's orders, as bitmasks.
fn prefix_masks(d: &Domain) -> Vec<u64> {
    let mut masks: Vec<u64> = d
        .iter()
        .flat_map(|v| (1..d.n()).map(move |k| v.prefix_mask(k)))
        .collect();
    masks.sort_unstable();
    masks.dedup();
    masks
}

/// Every upper contour set of every order is an arc of `arr`.
pub fn is_spoc_on(d: &Domain, arr: &CircularArrangement) -> Result<bool> {
    if d.n() != arr.n() {
        return Err(Error::SizeMismatch {
            expected: d.n(),
            found: arr.n(),
        });
    }
    let pos = arr.positions();
    Ok(prefix_masks(d)
        .iter()
        .all(|&m| is_arc_with(&arr.circle, &pos, m)))
}

/// Exhaustive search over canonical arrangements; returns the first one on
/// which `d` is single-peaked, or `None` once all are exhausted.
pub fn is_spoc(d: &Domain) -> Result<Option<CircularArrangement>> {
    let masks = prefix_masks(d);
    let arrangements = CircularArrangement::all(d.n())?;
    Ok(arrangements.into_par_iter().find_first(|arr| {
        let pos = arr.positions();
        masks.iter().all(|&m| is_arc_with(&arr.circle, &pos, m))
    }))
}

/// Every condition is never-top or never-bottom.
pub fn is_peak_pit(s: &CompleteNeverSet) -> bool {
    s.iter().all(|c| c.position == 1 || c.position == 3)
}

/// All maximal Condorcet domains on `[n]`, by brute force over every subset
/// of `𝓛([n])`. Only feasible for `n ≤ 3`.
pub fn maximal_condorcet_domains(n: usize) -> Result<Vec<Domain>> {
    if n > 3 {
        return Err(Error::CapExceeded { n, cap: 3 });
    }
    let all = all_orders(n)?;
    let mut out = Vec::new();
    for bits in 0u64..1 << all.len() {
        let d = Domain::new(
            n,
            all.iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, v)| v.clone()),
        )?;
        if is_condorcet(&d) && is_maximal_condorcet(&d)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// Groups domains into orbits under relabelling of the alternatives.
pub fn relabelling_orbits(domains: &[Domain]) -> Vec<Vec<Domain>> {
    let mut orbits: BTreeMap<Vec<LinearOrder>, Vec<Domain>> = BTreeMap::new();
    for d in domains {
        let n = d.n();
        let mut sigma: Vec<Alt> = (0..=n).collect();
        let mut best: Option<Vec<LinearOrder>> = None;
        loop {
            let image = d.relabel(&sigma).orders().to_vec();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
            if !next_permutation(&mut sigma[1..]) {
                break;
            }
        }
        orbits.entry(best.unwrap()).or_default().push(d.clone());
    }
    orbits.into_values().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Condorcet,
    Copious,
    Maximal,
    MaximalWidth,
    SemiConnected,
    DirectlyConnected,
    Spoc,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Condorcet,
        Property::Copious,
        Property::Maximal,
        Property::MaximalWidth,
        Property::SemiConnected,
        Property::DirectlyConnected,
        Property::Spoc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Condorcet => "condorcet",
            Property::Copious => "copious",
            Property::Maximal => "maximal",
            Property::MaximalWidth => "maximal_width",
            Property::SemiConnected => "semi_connected",
            Property::DirectlyConnected => "directly_connected",
            Property::Spoc => "spoc",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown property {s:?}")))
    }
}

/// Why a property failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The triple's restriction admits no never condition.
    NoNeverCondition {
        triple: [Alt; 3],
    },
    /// The triple's restriction does not have four orders.
    RestrictionSize {
        triple: [Alt; 3],
        size: usize,
    },
    /// This order can be added while staying Condorcet.
    AddableOrder {
        order: LinearOrder,
    },
    /// Maximality is only defined for Condorcet domains.
    NotCondorcet,
    /// `12…n` or `n…21` is missing.
    MissingExtreme,
    Unreachable {
        from: LinearOrder,
        to: LinearOrder,
    },
    /// Every canonical arrangement was tried.
    ArrangementsExhausted {
        tried: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpocVerdict {
    pub found: bool,
    pub arrangement: Option<CircularArrangement>,
}

/// Verdicts for the requested properties; absent ones serialize to nothing.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PropertyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condorcet: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copious: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_width: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semi_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directly_connected: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spoc: Option<SpocVerdict>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<Property, Witness>,
}

impl PropertyReport {
    pub fn get(&self, p: Property) -> Option<bool> {
        match p {
            Property::Condorcet => self.condorcet,
            Property::Copious => self.copious,
            Property::Maximal => self.maximal,
            Property::MaximalWidth => self.maximal_width,
            Property::SemiConnected => self.semi_connected,
            Property::DirectlyConnected => self.directly_connected,
            Property::Spoc => self.spoc.as_ref().map(|s| s.found),
        }
    }

    /// True when every checked property holds.
    pub fn all_hold(&self) -> bool {
        Property::ALL.iter().all(|&p| self.get(p) != Some(false))
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in Property::ALL {
            let Some(v) = self.get(p) else { continue };
            write!(f, "{:<20}{}", p.name(), v)?;
            if let (
                Property::Spoc,
                Some(SpocVerdict {
                    arrangement: Some(a),
                    ..
                }),
            ) = (p, &self.spoc)
            {
                write!(f, " {a}")?;
            }
            if let Some(w) = self.witnesses.get(&p) {
                write!(f, "  ({})", serde_json::to_string(w).unwrap())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn triple_array(t: Triple) -> [Alt; 3] {
    t.members()
}

/// Runs the requested checkers and records a witness for each failure.
pub fn report(d: &Domain, props: &[Property]) -> Result<PropertyReport> {
    let mut r = PropertyReport::default();
    let wants = |p| props.contains(&p);

    let violation = condorcet_violation(d);
    if wants(Property::Condorcet) {
        r.condorcet = Some(violation.is_none());
        if let Some(t) = violation {
            r.witnesses.insert(
                Property::Condorcet,
                Witness::NoNeverCondition {
                    triple: triple_array(t),
                },
            );
        }
    }
    if wants(Property::Copious) {
        let v = copious_violation(d);
        r.copious = Some(v.is_none());
        if let Some((t, size)) = v {
            r.witnesses.insert(
                Property::Copious,
                Witness::RestrictionSize {
                    triple: triple_array(t),
                    size,
                },
            );
        }
    }
    if wants(Property::Maximal) {
        if violation.is_some() {
            r.maximal = Some(false);
            r.witnesses.insert(Property::Maximal, Witness::NotCondorcet);
        } else {
            let extra = addable_order(d)?;
            r.maximal = Some(extra.is_none());
            if let Some(order) = extra {
                r.witnesses
                    .insert(Property::Maximal, Witness::AddableOrder { order });
            }
        }
    }
    let width = has_maximal_width(d, WidthMode::Identity);
    if wants(Property::MaximalWidth) {
        r.maximal_width = Some(width);
        if !width {
            r.witnesses
                .insert(Property::MaximalWidth, Witness::MissingExtreme);
        }
    }
    if wants(Property::SemiConnected) {
        if width {
            let ok = is_semi_connected(d)?;
            r.semi_connected = Some(ok);
            if !ok {
                let n = d.n();
                r.witnesses.insert(
                    Property::SemiConnected,
                    Witness::Unreachable {
                        from: LinearOrder::identity(n),
                        to: LinearOrder::reversed_identity(n),
                    },
                );
            }
        } else {
            r.semi_connected = Some(false);
            r.witnesses
                .insert(Property::SemiConnected, Witness::MissingExtreme);
        }
    }
    if wants(Property::DirectlyConnected) {
        let pair = disconnected_pair(d);
        r.directly_connected = Some(pair.is_none());
        if let Some((from, to)) = pair {
            r.witnesses.insert(
                Property::DirectlyConnected,
                Witness::Unreachable { from, to },
            );
        }
    }
    if wants(Property::Spoc) {
        let found = is_spoc(d)?;
        if found.is_none() {
            r.witnesses.insert(
                Property::Spoc,
                Witness::ArrangementsExhausted {
                    tried: CircularArrangement::all(d.n())?.len(),
                },
            );
        }
        r.spoc = Some(SpocVerdict {
            found: found.is_some(),
            arrangement: found,
        });
    }
    Ok(r)
}

pub fn full_report(d: &Domain) -> Result<PropertyReport> {
    report(d, &Property::ALL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::never::{gf_domain, gf_scheme, KSubset, NeverCondition};

    fn o(s: &str) -> LinearOrder {
        s.parse().unwrap()
    }

    fn fishburn4() -> Domain {
        Domain::from_strs(
            4,
            &[
                "1234", "1243", "2134", "2143", "2413", "2431", "4213", "4231", "4321",
            ],
        )
    }

    fn d1() -> Domain {
        Domain::from_strs(3, &["123", "312", "132", "321"])
    }
    fn d2() -> Domain {
        Domain::from_strs(3, &["123", "231", "132", "321"])
    }
    fn d3() -> Domain {
        Domain::from_strs(3, &["123", "213", "231", "321"])
    }

    /// Majority relation of a three-voter profile restricted to one triple is
    /// cyclic. Independent of never conditions.
    fn majority_cycle(profile: [&LinearOrder; 3], t: Triple) -> bool {
        let beats = |x: Alt, y: Alt| profile.iter().filter(|v| v.prefers(x, y)).count() >= 2;
        let [a, b, c] = t.members();
        (beats(a, b) && beats(b, c) && beats(c, a)) || (beats(b, a) && beats(c, b) && beats(a, c))
    }

    fn condorcet_by_profiles(d: &Domain) -> bool {
        let v = d.orders();
        Triple::all(d.n()).all(|t| {
            v.iter().all(|x| {
                v.iter()
                    .all(|y| v.iter().all(|z| !majority_cycle([x, y, z], t)))
            })
        })
    }

    #[test]
    fn condorcet_examples() {
        assert!(is_condorcet(&d1()));
        assert!(!is_condorcet(&Domain::universal(3).unwrap()));
        assert!(is_condorcet(&fishburn4()));
        assert_eq!(
            condorcet_violation(&Domain::universal(3).unwrap()),
            Some(Triple::new(1, 2, 3).unwrap())
        );
        assert!(is_condorcet(&Domain::universal(2).unwrap()));
    }

    #[test]
    fn copious_examples() {
        for n in 3..=6 {
            for k in KSubset::all(n) {
                assert!(is_copious(&gf_domain(n, &k).unwrap()));
            }
        }
        assert!(!is_copious(&Domain::from_strs(4, &["1234", "4321"])));
        assert_eq!(
            copious_violation(&Domain::from_strs(4, &["1234", "4321"])),
            Some((Triple::new(1, 2, 3).unwrap(), 2))
        );
        assert!(is_copious(&d2()));
    }

    #[test]
    fn maximal_examples() {
        for d in [d1(), d2(), d3()] {
            assert!(is_maximal_condorcet(&d).unwrap());
        }
        let small = Domain::from_strs(3, &["123", "321"]);
        assert!(!is_maximal_condorcet(&small).unwrap());
        // 132 is the lexicographically first addable order
        assert_eq!(addable_order(&small).unwrap(), Some(o("132")));
        assert!(is_condorcet(&small.with_order(o("213")).unwrap()));
        assert!(matches!(
            is_maximal_condorcet(&Domain::universal(3).unwrap()),
            Err(Error::NotCondorcet(_))
        ));
        for n in 3..=6 {
            for k in KSubset::all(n) {
                assert!(is_maximal_condorcet(&gf_domain(n, &k).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn width_examples() {
        for n in 3..=6 {
            for k in KSubset::all(n) {
                assert!(has_maximal_width(
                    &gf_domain(n, &k).unwrap(),
                    WidthMode::Identity
                ));
            }
        }
        assert!(!has_maximal_width(
            &Domain::from_strs(3, &["123", "213"]),
            WidthMode::Identity
        ));
        assert!(has_maximal_width(
            &Domain::from_strs(4, &["1234", "4321"]),
            WidthMode::Identity
        ));
        let pair = Domain::from_strs(3, &["213", "312"]);
        assert!(!has_maximal_width(&pair, WidthMode::Identity));
        assert!(has_maximal_width(&pair, WidthMode::AnyReversedPair));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_semi_connected(&fishburn4()).unwrap());
        assert!(!is_semi_connected(&Domain::from_strs(4, &["1234", "4321"])).unwrap());
        assert!(is_semi_connected(&crate::necklace::classical_single_peaked(4).unwrap()).unwrap());
        assert_eq!(
            is_semi_connected(&Domain::from_strs(3, &["123"])),
            Err(Error::NotMaximalWidth)
        );
        for n in 3..=6 {
            for k in KSubset::all(n) {
                assert!(is_directly_connected(&gf_domain(n, &k).unwrap()));
            }
        }
        assert!(!is_directly_connected(&Domain::from_strs(
            4,
            &["1234", "4321"]
        )));
        assert!(is_directly_connected(&Domain::from_strs(4, &["2413"])));
    }

    #[test]
    fn arrangements() {
        assert_eq!(CircularArrangement::all(3).unwrap().len(), 1);
        assert_eq!(CircularArrangement::all(5).unwrap().len(), 12);
        assert_eq!(CircularArrangement::all(7).unwrap().len(), 360);
        assert_eq!(CircularArrangement::all(2).unwrap().len(), 1);
        let a = CircularArrangement::new(vec![4, 3, 1, 2]).unwrap();
        assert_eq!(a.circle(), [1, 2, 4, 3]);
        let b = CircularArrangement::new(vec![2, 4, 3, 1]).unwrap();
        assert_eq!(a, b);
        // every arrangement produced is in canonical form
        for arr in CircularArrangement::all(6).unwrap() {
            assert_eq!(
                CircularArrangement::new(arr.circle().to_vec()).unwrap(),
                arr
            );
        }
    }

    #[test]
    fn spoc_examples() {
        let arr = CircularArrangement::new(vec![1, 2, 4, 3]).unwrap();
        assert!(is_spoc_on(&fishburn4(), &arr).unwrap());
        let line = CircularArrangement::new(vec![1, 2, 3, 4]).unwrap();
        assert!(is_spoc_on(&Domain::from_strs(4, &["1234"]), &line).unwrap());
        assert!(!is_spoc_on(&Domain::from_strs(4, &["1234", "1324"]), &line).unwrap());
        assert!(is_spoc_on(&d1(), &CircularArrangement::new(vec![1, 2]).unwrap()).is_err());

        let ends = Domain::from_strs(5, &["12345", "54321"]);
        assert!(is_spoc(&ends).unwrap().is_some());
        for arr in CircularArrangement::all(5).unwrap() {
            // e and its reversal have the same prefix family up to complement
            let a = is_spoc_on(&Domain::from_strs(5, &["12345"]), &arr).unwrap();
            assert_eq!(a, is_spoc_on(&ends, &arr).unwrap());
        }
    }

    #[test]
    fn spoc_found_iff_some_arrangement_passes() {
        let d = Domain::from_strs(5, &["12345", "21345", "31245", "41235"]);
        let found = is_spoc(&d).unwrap();
        let any = CircularArrangement::all(5)
            .unwrap()
            .iter()
            .any(|a| is_spoc_on(&d, a).unwrap());
        assert_eq!(found.is_some(), any);
        assert!(found.is_none());
    }

    #[test]
    fn peak_pit() {
        for n in 3..=6 {
            for k in KSubset::all(n) {
                assert!(is_peak_pit(&gf_scheme(n, &k).unwrap()));
            }
        }
        let s =
            CompleteNeverSet::new(3, ["1N{1,2,3}2".parse::<NeverCondition>().unwrap()]).unwrap();
        assert!(!is_peak_pit(&s));
        assert!(CompleteNeverSet::new(3, []).is_err());
    }

    #[test]
    fn n3_classification() {
        let maximal = maximal_condorcet_domains(3).unwrap();
        assert_eq!(maximal.len(), 9);
        assert!(maximal.iter().all(|d| d.len() == 4));
        for d in [d1(), d2(), d3()] {
            assert!(maximal.contains(&d));
        }
        let orbits = relabelling_orbits(&maximal);
        assert_eq!(orbits.len(), 3);
        for d in [d1(), d2(), d3()] {
            assert_eq!(orbits.iter().filter(|orb| orb.contains(&d)).count(), 1);
        }
        assert!(maximal_condorcet_domains(4).is_err());
    }

    #[test]
    fn report_examples() {
        let r = full_report(&fishburn4()).unwrap();
        assert!(r.all_hold());
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"condorcet":true,"copious":true,"maximal":true,"maximal_width":true,"semi_connected":true,"directly_connected":true,"spoc":{"found":true,"arrangement":[1,2,4,3]}}"#
        );

        let r = full_report(&Domain::universal(3).unwrap()).unwrap();
        assert_eq!(r.condorcet, Some(false));
        assert_eq!(
            r.witnesses[&Property::Condorcet],
            Witness::NoNeverCondition { triple: [1, 2, 3] }
        );

        let r = full_report(&Domain::from_strs(4, &["1234", "4321"])).unwrap();
        assert_eq!(r.condorcet, Some(true));
        assert_eq!(r.maximal, Some(false));
        assert_eq!(r.directly_connected, Some(false));
        assert!(matches!(
            r.witnesses[&Property::Maximal],
            Witness::AddableOrder { .. }
        ));

        let r = report(&d1(), &[Property::Copious]).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"copious":true}"#);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn domain(n: usize) -> impl Strategy<Value = Domain> {
            let all = all_orders(n).unwrap();
            let len = all.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                Domain::new(
                    n,
                    all.iter()
                        .zip(&keep)
                        .filter(|(_, k)| **k)
                        .map(|(v, _)| v.clone()),
                )
                .unwrap()
            })
        }

        fn scheme(n: usize) -> impl Strategy<Value = CompleteNeverSet> {
            let triples: Vec<Triple> = Triple::all(n).collect();
            let len = triples.len();
            proptest::collection::vec((0usize..3, 1u8..=3), len).prop_map(move |picks| {
                CompleteNeverSet::new(
                    n,
                    triples
                        .iter()
                        .zip(&picks)
                        .map(|(t, &(x, i))| NeverCondition::new(*t, t.members()[x], i).unwrap()),
                )
                .unwrap()
            })
        }

        proptest! {
            #[test]
            fn condorcet_matches_profile_oracle(d in (3usize..=4).prop_flat_map(domain)) {
                prop_assert_eq!(is_condorcet(&d), condorcet_by_profiles(&d));
            }

            #[test]
            fn copious_scheme_domains_are_maximal(s in (3usize..=6).prop_flat_map(scheme)) {
                let d = s.domain().unwrap();
                prop_assert!(is_condorcet(&d));
                if is_copious(&d) {
                    prop_assert!(is_maximal_condorcet(&d).unwrap());
                }
            }

            #[test]
            fn spoc_witness_is_valid(d in (3usize..=5).prop_flat_map(domain)) {
                if let Some(arr) = is_spoc(&d).unwrap() {
                    prop_assert!(is_spoc_on(&d, &arr).unwrap());
                }
            }
        }
    }
}
