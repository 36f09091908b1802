//! Truth values, designated sets, mixed and intersective consequence
//! relations.
//!
//! Values of an `N`-valued universe are indexed `0..N`: index `0` is the
//! falsum `0`, index `N-1` is the verum `1`, and the indices in between are
//! the indeterminates `#1`, ..., `#(N-2)`. Sets of values are bit sets over
//! these indices, so "contains 1 and not 0" is two bit tests.

mod enumerate;
mod extension;
pub mod syntax;

pub use enumerate::{
    all_minimal_representations, count_relations_by_antichains, enumerate_relations,
    indeterminate_permutations, quotient_by_indeterminate_permutation, QuotientClass, QuotientView,
    EXHAUSTIVE_LIMIT,
};
pub use extension::{extension, ExtRelation};

use std::fmt;

use crate::error::{Error, Result};

/// Largest universe the engine handles. Extensions have `4^N` entries, so
/// `N = 8` is already 64 Kibit per relation.
pub const MAX_VALUES: usize = 8;

/// A finite set of truth values `{0, #1, ..., #(N-2), 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Universe {
    n: u8,
}

impl Universe {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=MAX_VALUES).contains(&n) {
            return Err(Error::InvalidUniverse {
                got: n,
                max: MAX_VALUES,
            });
        }
        Ok(Self { n: n as u8 })
    }

    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn falsum(self) -> TruthValue {
        TruthValue(0)
    }

    pub fn verum(self) -> TruthValue {
        TruthValue(self.n - 1)
    }

    /// The indeterminate `#i`, for `1 <= i <= N-2`.
    pub fn indeterminate(self, i: usize) -> Result<TruthValue> {
        if i == 0 || i + 2 > self.n() {
            return Err(Error::ValueOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        Ok(TruthValue(i as u8))
    }

    pub fn value(self, index: usize) -> Result<TruthValue> {
        if index >= self.n() {
            return Err(Error::ValueOutOfRange {
                index,
                n: self.n(),
            });
        }
        Ok(TruthValue(index as u8))
    }

    pub fn values(self) -> impl DoubleEndedIterator<Item = TruthValue> + Clone {
        (0..self.n).map(TruthValue)
    }

    pub fn indeterminates(self) -> impl DoubleEndedIterator<Item = TruthValue> + Clone {
        (1..self.n - 1).map(TruthValue)
    }

    pub fn is_bivalent(self, v: TruthValue) -> bool {
        v == self.falsum() || v == self.verum()
    }

    pub fn full_set(self) -> ValueSet {
        ValueSet((1u32 << self.n) - 1)
    }

    /// Number of subsets of the universe, `2^N`.
    pub fn subset_count(self) -> usize {
        1usize << self.n
    }

    /// Every subset, in increasing bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = ValueSet> + Clone {
        (0u32..(1u32 << self.n)).map(ValueSet)
    }

    pub fn contains_set(self, s: ValueSet) -> bool {
        s.0 & !self.full_set().0 == 0
    }

    pub fn check_set(self, s: ValueSet) -> Result<()> {
        if self.contains_set(s) {
            Ok(())
        } else {
            Err(Error::ValueOutOfRange {
                index: 31 - s.0.leading_zeros() as usize,
                n: self.n(),
            })
        }
    }

    /// All sets of designated values, ordered by bit pattern.
    pub fn designated_sets(self) -> Vec<DesignatedSet> {
        let verum = ValueSet::singleton(self.verum());
        (0u32..(1u32 << (self.n - 2)))
            .map(|mid| DesignatedSet(ValueSet((mid << 1) | verum.0)))
            .collect()
    }

    /// All `4^(N-2)` mixed consequence relations, ordered by `(dp, dc)`.
    pub fn mixed_relations(self) -> Vec<MixedRelation> {
        let sets = self.designated_sets();
        let mut out = Vec::with_capacity(sets.len() * sets.len());
        for &dp in &sets {
            for &dc in &sets {
                out.push(MixedRelation {
                    universe: self,
                    dp,
                    dc,
                });
            }
        }
        out
    }

    pub fn name(self, v: TruthValue) -> String {
        if v == self.falsum() {
            "0".to_owned()
        } else if v == self.verum() {
            "1".to_owned()
        } else {
            format!("#{}", v.0)
        }
    }

    pub fn parse_value(self, name: &str) -> Result<TruthValue> {
        let name = name.trim();
        match name {
            "0" => Ok(self.falsum()),
            "1" => Ok(self.verum()),
            _ => {
                let idx: usize = name
                    .strip_prefix('#')
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| Error::UnknownValue(name.to_owned()))?;
                self.indeterminate(idx)
                    .map_err(|_| Error::UnknownValue(name.to_owned()))
            }
        }
    }

    pub fn set_names(self, s: ValueSet) -> Vec<String> {
        s.iter().rev().map(|v| self.name(v)).collect()
    }

    pub fn format_set(self, s: ValueSet) -> String {
        format!("{{{}}}", self.set_names(s).join(","))
    }
}

/// A truth value, identified by its index in the universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthValue(pub(crate) u8);

impl TruthValue {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A subset of the truth values of some universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ValueSet(pub(crate) u32);

impl ValueSet {
    pub const EMPTY: ValueSet = ValueSet(0);

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(v: TruthValue) -> Self {
        Self(1 << v.0)
    }

    pub fn from_values<I: IntoIterator<Item = TruthValue>>(vals: I) -> Self {
        vals.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    pub fn with(self, v: TruthValue) -> Self {
        Self(self.0 | (1 << v.0))
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.0 & (1 << v.0) != 0
    }

    pub fn is_subset(self, other: ValueSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: ValueSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: ValueSet) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: ValueSet) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: ValueSet) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn complement(self, u: Universe) -> Self {
        Self(!self.0 & u.full_set().0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least-index member.
    pub fn first(self) -> Option<TruthValue> {
        (self.0 != 0).then(|| TruthValue(self.0.trailing_zeros() as u8))
    }

    pub fn iter(self) -> impl DoubleEndedIterator<Item = TruthValue> {
        (0..32u8).filter(move |i| self.0 & (1 << i) != 0).map(TruthValue)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = ValueSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ValueSet(cur))
        })
    }
}

impl fmt::Debug for ValueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

/// A set of designated values: contains the verum, excludes the falsum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesignatedSet(ValueSet);

impl DesignatedSet {
    pub fn new(u: Universe, s: ValueSet) -> Result<Self> {
        u.check_set(s)?;
        if !s.contains(u.verum()) || s.contains(u.falsum()) {
            return Err(Error::NotDesignated(u.format_set(s)));
        }
        Ok(Self(s))
    }

    pub fn from_names(u: Universe, names: &[&str]) -> Result<Self> {
        let vals = names
            .iter()
            .map(|n| u.parse_value(n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(u, ValueSet::from_values(vals))
    }

    /// `{1}`
    pub fn strict(u: Universe) -> Self {
        Self(ValueSet::singleton(u.verum()))
    }

    /// Every value except `0`.
    pub fn tolerant(u: Universe) -> Self {
        Self(u.full_set().difference(ValueSet::singleton(u.falsum())))
    }

    pub fn set(self) -> ValueSet {
        self.0
    }

    pub fn contains(self, v: TruthValue) -> bool {
        self.0.contains(v)
    }
}

/// The mixed consequence relation `|=_{dp,dc}`: an argument fails exactly
/// when every premise is in `dp` and no conclusion is in `dc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedRelation {
    universe: Universe,
    dp: DesignatedSet,
    dc: DesignatedSet,
}

impl MixedRelation {
    pub fn new(universe: Universe, dp: DesignatedSet, dc: DesignatedSet) -> Result<Self> {
        universe.check_set(dp.set())?;
        universe.check_set(dc.set())?;
        Ok(Self { universe, dp, dc })
    }

    pub fn from_sets(universe: Universe, dp: ValueSet, dc: ValueSet) -> Result<Self> {
        Ok(Self {
            universe,
            dp: DesignatedSet::new(universe, dp)?,
            dc: DesignatedSet::new(universe, dc)?,
        })
    }

    pub fn from_names(universe: Universe, dp: &[&str], dc: &[&str]) -> Result<Self> {
        Ok(Self {
            universe,
            dp: DesignatedSet::from_names(universe, dp)?,
            dc: DesignatedSet::from_names(universe, dc)?,
        })
    }

    pub fn ss(u: Universe) -> Self {
        Self {
            universe: u,
            dp: DesignatedSet::strict(u),
            dc: DesignatedSet::strict(u),
        }
    }

    pub fn tt(u: Universe) -> Self {
        Self {
            universe: u,
            dp: DesignatedSet::tolerant(u),
            dc: DesignatedSet::tolerant(u),
        }
    }

    pub fn st(u: Universe) -> Self {
        Self {
            universe: u,
            dp: DesignatedSet::strict(u),
            dc: DesignatedSet::tolerant(u),
        }
    }

    pub fn ts(u: Universe) -> Self {
        Self {
            universe: u,
            dp: DesignatedSet::tolerant(u),
            dc: DesignatedSet::strict(u),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn dp(&self) -> ValueSet {
        self.dp.set()
    }

    pub fn dc(&self) -> ValueSet {
        self.dc.set()
    }

    pub fn is_pure(&self) -> bool {
        self.dp == self.dc
    }

    pub fn holds(&self, gamma: ValueSet, delta: ValueSet) -> bool {
        !(gamma.is_subset(self.dp()) && !delta.intersects(self.dc()))
    }

    /// [`MixedRelation::holds`] with range checks on both arguments.
    pub fn try_holds(&self, gamma: ValueSet, delta: ValueSet) -> Result<bool> {
        self.universe.check_set(gamma)?;
        self.universe.check_set(delta)?;
        Ok(self.holds(gamma, delta))
    }

    /// `other` makes `self` redundant in any representation containing both:
    /// `|=_other ⊆ |=_self`.
    pub fn dominated_by(&self, other: &MixedRelation) -> bool {
        self.dp().is_subset(other.dp()) && other.dc().is_subset(self.dc())
    }

    pub fn describe(&self) -> String {
        format!(
            "|={},{}",
            self.universe.format_set(self.dp()),
            self.universe.format_set(self.dc())
        )
    }
}

/// Decides `holds_mixed` with universe checks; mostly for callers that
/// build value sets by hand.
pub fn holds_mixed(m: &MixedRelation, gamma: ValueSet, delta: ValueSet) -> Result<bool> {
    m.try_holds(gamma, delta)
}

/// A nonempty list of mixed relations whose intersection is the relation
/// being represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation {
    universe: Universe,
    members: Vec<MixedRelation>,
}

impl Representation {
    pub fn new(members: Vec<MixedRelation>) -> Result<Self> {
        let first = members.first().ok_or(Error::EmptyRepresentation)?;
        let universe = first.universe;
        if let Some(bad) = members.iter().find(|m| m.universe != universe) {
            return Err(Error::UniverseMismatch {
                expected: universe.n(),
                found: bad.universe.n(),
            });
        }
        Ok(Self { universe, members })
    }

    pub fn single(m: MixedRelation) -> Self {
        Self {
            universe: m.universe,
            members: vec![m],
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn members(&self) -> &[MixedRelation] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn holds(&self, gamma: ValueSet, delta: ValueSet) -> bool {
        self.members.iter().all(|m| m.holds(gamma, delta))
    }

    pub fn extension(&self) -> ExtRelation {
        ExtRelation::from_representation(self)
    }

    /// Deduplicates, drops every dominated member and sorts the rest by
    /// `(dp, dc)` bit patterns. The result has the same extension.
    pub fn minimal(&self) -> Representation {
        let mut ms = self.members.clone();
        ms.sort();
        ms.dedup();
        let kept: Vec<MixedRelation> = ms
            .iter()
            .enumerate()
            .filter(|&(k, mk)| {
                !ms.iter()
                    .enumerate()
                    .any(|(j, mj)| j != k && mk.dominated_by(mj))
            })
            .map(|(_, m)| *m)
            .collect();
        Representation {
            universe: self.universe,
            members: kept,
        }
    }

    /// Distinct members forming a dominance antichain.
    pub fn is_minimal(&self) -> bool {
        self.members.iter().enumerate().all(|(k, mk)| {
            self.members
                .iter()
                .enumerate()
                .all(|(j, mj)| j == k || (mk != mj && !mk.dominated_by(mj)))
        })
    }

    pub fn require_minimal(&self) -> Result<()> {
        if self.is_minimal() {
            Ok(())
        } else {
            Err(Error::NotMinimal)
        }
    }

    /// All premise and conclusion designated sets, deduplicated and sorted.
    pub fn designated_pool(&self) -> Vec<ValueSet> {
        let mut pool: Vec<ValueSet> = self
            .members
            .iter()
            .flat_map(|m| [m.dp(), m.dc()])
            .collect();
        pool.sort();
        pool.dedup();
        pool
    }

    pub fn describe(&self) -> String {
        self.members
            .iter()
            .map(MixedRelation::describe)
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

/// Computes the minimal representation of a representation.
pub fn minimal_representation(r: &Representation) -> Representation {
    r.minimal()
}

/// An intersective mixed relation together with its minimal representation;
/// the unit every search and decision procedure works on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    extension: ExtRelation,
    representation: Representation,
}

impl Relation {
    pub fn from_representation(r: &Representation) -> Self {
        let representation = r.minimal();
        Self {
            extension: representation.extension(),
            representation,
        }
    }

    pub fn from_mixed(m: MixedRelation) -> Self {
        Self::from_representation(&Representation::single(m))
    }

    /// Fails when `e` is not an intersection of mixed relations.
    pub fn from_extension(e: ExtRelation) -> Result<Self> {
        let representation = e.canonical_representation()?;
        Ok(Self {
            extension: e,
            representation,
        })
    }

    pub fn universe(&self) -> Universe {
        self.extension.universe()
    }

    pub fn extension(&self) -> &ExtRelation {
        &self.extension
    }

    pub fn representation(&self) -> &Representation {
        &self.representation
    }

    pub fn is_mixed(&self) -> bool {
        self.representation.len() == 1
    }

    pub fn is_pure(&self) -> bool {
        self.representation.members().iter().all(|m| m.is_pure())
    }

    pub fn describe(&self) -> String {
        self.representation.describe()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::new(3).unwrap()
    }

    fn set(u: Universe, names: &[&str]) -> ValueSet {
        ValueSet::from_values(names.iter().map(|n| u.parse_value(n).unwrap()))
    }

    #[test]
    fn universe_bounds() {
        assert!(Universe::new(1).is_err());
        assert!(Universe::new(MAX_VALUES + 1).is_err());
        let u = Universe::new(4).unwrap();
        assert_eq!(u.name(u.verum()), "1");
        assert_eq!(u.name(u.falsum()), "0");
        assert_eq!(u.parse_value("#2").unwrap().index(), 2);
        assert!(u.parse_value("#3").is_err());
        assert!(u.parse_value("#0").is_err());
    }

    #[test]
    fn designated_sets_require_verum_and_exclude_falsum() {
        let u = u3();
        assert!(DesignatedSet::from_names(u, &["1", "#1"]).is_ok());
        assert!(DesignatedSet::from_names(u, &["#1"]).is_err());
        assert!(DesignatedSet::from_names(u, &["1", "0"]).is_err());
        assert_eq!(u.designated_sets().len(), 2);
        assert_eq!(Universe::new(5).unwrap().mixed_relations().len(), 64);
    }

    #[test]
    fn holds_mixed_examples() {
        let u = u3();
        let st = MixedRelation::st(u);
        assert!(holds_mixed(&st, set(u, &["1"]), set(u, &["#1"])).unwrap());
        let ts = MixedRelation::ts(u);
        assert!(!holds_mixed(&ts, set(u, &["#1"]), set(u, &["#1"])).unwrap());
        let tt = MixedRelation::tt(u);
        assert!(!holds_mixed(&tt, set(u, &["#1"]), set(u, &["0"])).unwrap());
        assert!(holds_mixed(&tt, ValueSet::from_bits(0b1000), ValueSet::EMPTY).is_err());
    }

    #[test]
    fn minimal_representation_examples() {
        let u = u3();
        let (ss, tt, st) = (MixedRelation::ss(u), MixedRelation::tt(u), MixedRelation::st(u));
        let r = Representation::new(vec![ss, tt, st]).unwrap();
        let m = minimal_representation(&r);
        assert_eq!(m.members(), &[ss, tt]);
        assert_eq!(m.extension(), r.extension());

        let single = Representation::single(st);
        assert_eq!(single.minimal(), single);

        let dup = Representation::new(vec![ss, ss]).unwrap();
        assert_eq!(dup.minimal().members(), &[ss]);
        assert!(!dup.is_minimal());
    }

    #[test]
    fn empty_and_mixed_universe_representations_rejected() {
        assert!(matches!(
            Representation::new(vec![]),
            Err(Error::EmptyRepresentation)
        ));
        let a = MixedRelation::ss(u3());
        let b = MixedRelation::ss(Universe::new(4).unwrap());
        assert!(matches!(
            Representation::new(vec![a, b]),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn subset_iteration_is_complete() {
        let s = ValueSet::from_bits(0b1011);
        let subs: Vec<u32> = s.subsets().map(|x| x.bits()).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(ValueSet::EMPTY.subsets().count(), 1);
    }
}
