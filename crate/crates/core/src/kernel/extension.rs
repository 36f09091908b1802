use std::fmt;

use super::{MixedRelation, Representation, TruthValue, Universe, ValueSet};
use crate::error::{Error, Result};

/// The extensional truth-relation: one bit per pair `(gamma, delta)` of
/// value sets, stored row-major with `gamma` as the row.
///
/// Two representations denote the same consequence relation exactly when
/// their extensions are equal, so this is the identity used for
/// deduplication, hashing and catalog ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtRelation {
    universe: Universe,
    words: Vec<u64>,
}

impl ExtRelation {
    fn word_count(u: Universe) -> usize {
        (u.subset_count() * u.subset_count()).div_ceil(64)
    }

    fn index(&self, gamma: ValueSet, delta: ValueSet) -> usize {
        ((gamma.0 as usize) << self.universe.n()) | delta.0 as usize
    }

    fn everywhere(u: Universe) -> Self {
        let entries = u.subset_count() * u.subset_count();
        let mut words = vec![u64::MAX; Self::word_count(u)];
        if !entries.is_multiple_of(64) {
            *words.last_mut().unwrap() = (1u64 << (entries % 64)) - 1;
        }
        Self { universe: u, words }
    }

    fn clear(&mut self, gamma: ValueSet, delta: ValueSet) {
        let i = self.index(gamma, delta);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    fn set(&mut self, gamma: ValueSet, delta: ValueSet) {
        let i = self.index(gamma, delta);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    /// Clears the falsifying region of `m`: all `gamma ⊆ dp` with
    /// `delta ∩ dc = ∅`.
    fn clear_mixed(&mut self, m: &MixedRelation) {
        let u = self.universe;
        let outside = m.dc().complement(u);
        for gamma in m.dp().subsets() {
            for delta in outside.subsets() {
                self.clear(gamma, delta);
            }
        }
    }

    pub fn from_representation(r: &Representation) -> Self {
        let mut e = Self::everywhere(r.universe());
        for m in r.members() {
            e.clear_mixed(m);
        }
        e
    }

    pub fn from_mixed(m: &MixedRelation) -> Self {
        let mut e = Self::everywhere(m.universe());
        e.clear_mixed(m);
        e
    }

    /// Builds an extension from a predicate; used for relations defined
    /// directly on value sets (e.g. order-theoretic ones).
    pub fn from_fn(u: Universe, mut f: impl FnMut(ValueSet, ValueSet) -> bool) -> Self {
        let mut e = Self {
            universe: u,
            words: vec![0; Self::word_count(u)],
        };
        for gamma in u.subsets() {
            for delta in u.subsets() {
                if f(gamma, delta) {
                    e.set(gamma, delta);
                }
            }
        }
        e
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn holds(&self, gamma: ValueSet, delta: ValueSet) -> bool {
        let i = self.index(gamma, delta);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of `(gamma, delta)` pairs that hold.
    pub fn count_holding(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Upward monotone in both arguments.
    pub fn is_monotone(&self) -> bool {
        let u = self.universe;
        u.subsets().all(|g| {
            u.subsets().all(|d| {
                !self.holds(g, d)
                    || u.values().all(|v| {
                        self.holds(g.with(v), d) && self.holds(g, d.with(v))
                    })
            })
        })
    }

    /// Holds whenever `0 ∈ gamma` or `1 ∈ delta`.
    pub fn respects_boundaries(&self) -> bool {
        let u = self.universe;
        u.subsets().all(|g| {
            u.subsets().all(|d| {
                !(g.contains(u.falsum()) || d.contains(u.verum())) || self.holds(g, d)
            })
        })
    }

    /// The unique dominance-minimal representation, read off the maximal
    /// falsified pairs `(dp, complement(dc))`.
    pub fn canonical_representation(&self) -> Result<Representation> {
        let u = self.universe;
        let members: Vec<MixedRelation> = u
            .mixed_relations()
            .into_iter()
            .filter(|m| !self.holds(m.dp(), m.dc().complement(u)))
            .collect();
        let r = Representation::new(members)
            .map_err(|_| Error::NotIntersective)?
            .minimal();
        if r.extension() != *self {
            return Err(Error::NotIntersective);
        }
        Ok(r)
    }

    /// `y1` and `y2` can be swapped in any premise or conclusion set
    /// without changing whether the relation holds.
    pub fn role_equivalent(&self, y1: TruthValue, y2: TruthValue) -> bool {
        if y1 == y2 {
            return true;
        }
        let u = self.universe;
        u.subsets().all(|g| {
            u.subsets().all(|d| {
                self.holds(g.with(y1), d) == self.holds(g.with(y2), d)
                    && self.holds(g, d.with(y1)) == self.holds(g, d.with(y2))
            })
        })
    }

    /// Partition of the values into role-equivalence classes, each sorted,
    /// classes ordered by least member.
    pub fn role_classes(&self) -> Vec<ValueSet> {
        let mut classes: Vec<ValueSet> = Vec::new();
        for v in self.universe.values() {
            match classes
                .iter_mut()
                .find(|c| self.role_equivalent(c.first().unwrap(), v))
            {
                Some(c) => *c = c.with(v),
                None => classes.push(ValueSet::singleton(v)),
            }
        }
        classes
    }

    pub fn is_reflexive(&self) -> bool {
        self.universe.values().all(|x| {
            let s = ValueSet::singleton(x);
            self.holds(s, s)
        })
    }

    /// `{x : ∅ |= {x}}`
    pub fn conclusion_tautologies(&self) -> ValueSet {
        ValueSet::from_values(
            self.universe
                .values()
                .filter(|&x| self.holds(ValueSet::EMPTY, ValueSet::singleton(x))),
        )
    }

    /// `{x : {x} |= ∅}`
    pub fn premise_contradictions(&self) -> ValueSet {
        ValueSet::from_values(
            self.universe
                .values()
                .filter(|&x| self.holds(ValueSet::singleton(x), ValueSet::EMPTY)),
        )
    }

    /// Renames values: value `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[TruthValue]) -> ExtRelation {
        assert_eq!(perm.len(), self.universe.n());
        let map = |s: ValueSet| ValueSet::from_values(s.iter().map(|v| perm[v.index()]));
        let mut out = Self {
            universe: self.universe,
            words: vec![0; self.words.len()],
        };
        for g in self.universe.subsets() {
            for d in self.universe.subsets() {
                if self.holds(g, d) {
                    out.set(map(g), map(d));
                }
            }
        }
        out
    }

    /// Row-major bits, entry `(gamma, delta)` at position
    /// `gamma * 2^N + delta`, packed four per hex digit with the earliest
    /// entry in the most significant bit.
    pub fn to_hex(&self) -> String {
        let entries = self.universe.subset_count() * self.universe.subset_count();
        let mut out = String::with_capacity(entries / 4);
        for chunk in 0..entries / 4 {
            let mut nibble = 0u8;
            for k in 0..4 {
                let i = chunk * 4 + k;
                if self.words[i / 64] >> (i % 64) & 1 == 1 {
                    nibble |= 8 >> k;
                }
            }
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        out
    }

    pub fn from_hex(u: Universe, hex: &str) -> Result<Self> {
        let entries = u.subset_count() * u.subset_count();
        if hex.len() != entries / 4 {
            return Err(Error::Parse(format!(
                "expected {} hex digits for a {}-valued extension, got {}",
                entries / 4,
                u.n(),
                hex.len()
            )));
        }
        let mut e = Self {
            universe: u,
            words: vec![0; Self::word_count(u)],
        };
        for (chunk, c) in hex.chars().enumerate() {
            let nibble = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit `{c}`")))?;
            for k in 0..4 {
                if nibble & (8 >> k) != 0 {
                    let i = chunk * 4 + k;
                    e.words[i / 64] |= 1u64 << (i % 64);
                }
            }
        }
        if !e.is_monotone() || !e.respects_boundaries() {
            return Err(Error::NotIntersective);
        }
        Ok(e)
    }

    pub(crate) fn intersect_with(&mut self, other: &ExtRelation) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    /// Every mixed relation whose extension contains this one.
    pub(crate) fn containing_mixed(&self) -> Vec<MixedRelation> {
        let u = self.universe;
        u.mixed_relations()
            .into_iter()
            .filter(|m| {
                // |= ⊆ |=_m iff the maximal falsifier of m is falsified here
                !self.holds(m.dp(), m.dc().complement(u))
            })
            .collect()
    }
}

impl fmt::Debug for ExtRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtRelation(N={}, {})", self.universe.n(), self.to_hex())
    }
}

impl From<&MixedRelation> for ExtRelation {
    fn from(m: &MixedRelation) -> Self {
        ExtRelation::from_mixed(m)
    }
}

pub fn extension(r: &Representation) -> ExtRelation {
    r.extension()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::new(3).unwrap()
    }

    fn s(u: Universe, names: &[&str]) -> ValueSet {
        ValueSet::from_values(names.iter().map(|n| u.parse_value(n).unwrap()))
    }

    #[test]
    fn extension_examples() {
        let u = u3();
        let ss = MixedRelation::ss(u);
        let tt = MixedRelation::tt(u);
        let st = MixedRelation::st(u);
        let e_ss = Representation::single(ss).extension();
        assert!(!e_ss.holds(s(u, &["1"]), s(u, &["#1"])));

        let sstt = Representation::new(vec![ss, tt]).unwrap().extension();
        assert!(!sstt.holds(s(u, &["#1"]), s(u, &["0"])));
        assert!(sstt.holds(s(u, &["#1"]), s(u, &["#1"])));

        let with_st = Representation::new(vec![ss, tt, st]).unwrap().extension();
        assert_eq!(with_st, sstt);
        assert!(sstt.is_monotone() && sstt.respects_boundaries());
    }

    #[test]
    fn hex_round_trip_and_validation() {
        let u = u3();
        let e = Representation::single(MixedRelation::st(u)).extension();
        let hex = e.to_hex();
        assert_eq!(hex.len(), 16);
        assert_eq!(ExtRelation::from_hex(u, &hex).unwrap(), e);
        // the all-false matrix violates the boundary clause
        assert!(ExtRelation::from_hex(u, &"0".repeat(16)).is_err());
        assert!(ExtRelation::from_hex(u, "ff").is_err());
    }

    #[test]
    fn hex_bit_order() {
        // N=2 classical: only ({1}, {}) and ({}, {}) fail.
        let u = Universe::new(2).unwrap();
        let e = Representation::single(MixedRelation::ss(u)).extension();
        // entries gamma*4+delta; fail at (0,0)=0, (0,1)->delta={0}: index 1,
        // (2,0)=8, (2,1)=9
        assert_eq!(e.to_hex(), "3f3f");
    }

    #[test]
    fn canonical_representation_recovers_minimal() {
        let u = Universe::new(4).unwrap();
        let r = Representation::new(vec![
            MixedRelation::from_names(u, &["1", "#1"], &["1", "#1"]).unwrap(),
            MixedRelation::from_names(u, &["1", "#2"], &["1", "#2"]).unwrap(),
            MixedRelation::ss(u),
        ])
        .unwrap();
        let e = r.extension();
        assert_eq!(e.canonical_representation().unwrap(), r.minimal());
    }

    #[test]
    fn role_equivalence_examples() {
        let u = u3();
        let ss = Representation::single(MixedRelation::ss(u)).extension();
        let half = u.indeterminate(1).unwrap();
        assert!(ss.role_equivalent(half, u.falsum()));
        let st = Representation::single(MixedRelation::st(u)).extension();
        for a in u.values() {
            for b in u.values() {
                assert_eq!(st.role_equivalent(a, b), a == b);
            }
        }
        assert_eq!(ss.role_classes().len(), 2);
    }

    #[test]
    fn reflexivity_examples() {
        let u = u3();
        let ts = Representation::single(MixedRelation::ts(u)).extension();
        assert!(!ts.is_reflexive());
        let sstt = Representation::new(vec![MixedRelation::ss(u), MixedRelation::tt(u)])
            .unwrap()
            .extension();
        assert!(sstt.is_reflexive());
        let u2 = Universe::new(2).unwrap();
        assert!(Representation::single(MixedRelation::ss(u2))
            .extension()
            .is_reflexive());
    }
}
