//! Existence decisions read off designated sets, and explicit
//! constructions of connectives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{
    all_minimal_representations, MixedRelation, Relation, Representation, TruthValue, Universe,
    ValueSet, EXHAUSTIVE_LIMIT,
};
use crate::rules::{library_rule, satisfies_rule_oracle, ConnectiveTable, RegularityRule};

/// Largest universe for [`dc_check`].
pub const DC_LIMIT: usize = 6;

/// Bit `i` set when `x` belongs to `sets[i]`.
fn pattern(sets: &[ValueSet], x: TruthValue) -> u64 {
    sets.iter()
        .enumerate()
        .filter(|(_, s)| s.contains(x))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

fn patterns(u: Universe, sets: &[ValueSet]) -> Vec<u64> {
    u.values().map(|x| pattern(sets, x)).collect()
}

fn closed_under(u: Universe, sets: &[ValueSet], op: impl Fn(u64, u64) -> u64) -> bool {
    let pats = patterns(u, sets);
    pats.iter()
        .all(|&a| pats.iter().all(|&b| pats.contains(&op(a, b))))
}

/// Some value lies in exactly the sets that contain `x` or `y`, for every
/// `x` and `y`.
pub fn disjunction_compatible(u: Universe, sets: &[ValueSet]) -> bool {
    closed_under(u, sets, |a, b| a | b)
}

/// Some value lies in exactly the sets that contain both `x` and `y`.
pub fn conjunction_compatible(u: Universe, sets: &[ValueSet]) -> bool {
    closed_under(u, sets, |a, b| a & b)
}

/// The two clauses of disjunction-conjunction compatibility.
pub fn dc_check(u: Universe, sets: &[ValueSet]) -> Result<(bool, bool)> {
    if u.n() > DC_LIMIT {
        return Err(Error::TooLarge {
            what: "sub-collection check universe",
            limit: DC_LIMIT,
            requested: u.n(),
        });
    }
    let m = sets.len();
    let dc1 = (0..m).all(|i| {
        let others = (0..m)
            .filter(|&j| j != i)
            .fold(ValueSet::EMPTY, |acc, j| acc.union(sets[j]));
        let private = !sets[i].difference(others).is_empty();
        let included = (0..m).any(|j| j != i && sets[j] != sets[i] && sets[i].is_subset(sets[j]));
        private || included
    });
    let pats = patterns(u, sets);
    // above[j]: the sets that include sets[j]
    let above: Vec<u64> = (0..m)
        .map(|j| {
            (0..m)
                .filter(|&i| sets[j].is_subset(sets[i]))
                .fold(0u64, |acc, i| acc | 1 << i)
        })
        .collect();
    let dc2 = (1u64..1 << m).all(|sub| {
        let want = (0..m)
            .filter(|j| sub >> j & 1 == 1)
            .fold(0u64, |acc, j| acc | above[j]);
        pats.contains(&want)
    });
    Ok((dc1, dc2))
}

/// The two negation-necessity clauses of a minimal representation.
pub fn negation_necessity(minrep: &Representation) -> Result<(bool, bool)> {
    minrep.require_minimal()?;
    let ms = minrep.members();
    let pairs = || (0..ms.len()).flat_map(|i| (0..ms.len()).map(move |j| (i, j)));
    let n1 = pairs()
        .filter(|(i, j)| i != j)
        .all(|(i, j)| !ms[i].dp().is_subset(ms[j].dp()) && !ms[i].dc().is_subset(ms[j].dc()));
    let n2 = pairs().all(|(i, j)| {
        (!ms[i].dp().is_subset(ms[j].dc()) || ms[j].dp().is_subset(ms[i].dc()))
            && (!ms[i].dc().is_subset(ms[j].dp()) || ms[j].dc().is_subset(ms[i].dp()))
    });
    Ok((n1, n2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraVerdict {
    pub disjunction_compatible: bool,
    pub conjunction_compatible: bool,
    pub dc1: bool,
    pub dc2: bool,
    pub n1: bool,
    pub n2: bool,
    pub conditional_decision: bool,
    /// Minimal representations the verdict was evaluated on.
    pub representations_checked: usize,
    /// False when those representations disagreed on some field.
    pub representations_agree: bool,
}

impl AlgebraVerdict {
    /// The first failing clause, if any.
    pub fn cause(&self) -> Option<&'static str> {
        [
            (self.dc1, "dc1"),
            (self.dc2, "dc2"),
            (self.n1, "n1"),
            (self.n2, "n2"),
        ]
        .into_iter()
        .find(|(ok, _)| !ok)
        .map(|(_, name)| name)
    }
}

pub fn verdict_for(minrep: &Representation) -> Result<AlgebraVerdict> {
    let u = minrep.universe();
    let pool = minrep.designated_pool();
    let (dc1, dc2) = dc_check(u, &pool)?;
    let (n1, n2) = negation_necessity(minrep)?;
    Ok(AlgebraVerdict {
        disjunction_compatible: disjunction_compatible(u, &pool),
        conjunction_compatible: conjunction_compatible(u, &pool),
        dc1,
        dc2,
        n1,
        n2,
        conditional_decision: dc1 && dc2 && n1 && n2,
        representations_checked: 1,
        representations_agree: true,
    })
}

/// Decides whether the relation has a G-conditional from its designated
/// sets alone. For small universes every minimal representation is
/// evaluated and any disagreement flagged.
pub fn decide_conditional(rel: &Relation) -> Result<AlgebraVerdict> {
    let mut v = verdict_for(rel.representation())?;
    if rel.universe().n() <= EXHAUSTIVE_LIMIT {
        let reps = all_minimal_representations(rel.extension())?;
        v.representations_checked = reps.len();
        for r in &reps {
            let w = verdict_for(&r.minimal())?;
            let same = AlgebraVerdict {
                representations_checked: v.representations_checked,
                representations_agree: true,
                ..w
            } == AlgebraVerdict {
                representations_agree: true,
                ..v
            };
            v.representations_agree &= same;
        }
    }
    Ok(v)
}

/// A conditional for a single mixed relation, built from the four-class
/// schema (values in both sets, premise set only, conclusion set only,
/// neither).
pub fn construct_mixed_conditional(m: &MixedRelation) -> ConnectiveTable {
    let u = m.universe();
    let (dp, dc) = (m.dp(), m.dc());
    #[derive(Clone, Copy, PartialEq)]
    enum Class {
        One,
        P,
        C,
        Zero,
    }
    let class = |x: TruthValue| match (dp.contains(x), dc.contains(x)) {
        (true, true) => Class::One,
        (true, false) => Class::P,
        (false, true) => Class::C,
        (false, false) => Class::Zero,
    };
    let rep = |c: Class| match c {
        Class::One => u.verum(),
        Class::Zero => u.falsum(),
        Class::P => dp.difference(dc).first().expect("class is inhabited"),
        Class::C => dc.difference(dp).first().expect("class is inhabited"),
    };
    ConnectiveTable::from_fn(u, 2, |x| {
        use Class::*;
        let out = match (class(x[0]), class(x[1])) {
            (One, b) => b,
            (Zero, _) => One,
            (_, One) => One,
            (P, P) | (P, Zero) => P,
            (P, C) => One,
            (C, P) => One,
            (C, C) | (C, Zero) => C,
        };
        rep(out)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derived {
    pub negation: ConnectiveTable,
    pub disjunction: ConnectiveTable,
    pub conjunction: ConnectiveTable,
}

/// Negation, disjunction and conjunction defined from a conditional and
/// the falsum: `¬x = x→0`, `x∨y = ¬x→y`, `x∧y = ¬(x→¬y)`.
pub fn derive_from_conditional(rel: &Relation, cond: &ConnectiveTable) -> Result<Derived> {
    let rule = library_rule("conditional")?;
    if !satisfies_rule_oracle(&rule, rel.extension(), cond)? {
        return Err(Error::NotAConditional);
    }
    Ok(derive_unchecked(cond))
}

pub(crate) fn derive_unchecked(cond: &ConnectiveTable) -> Derived {
    let u = cond.universe();
    let zero = u.falsum();
    let neg = |x| cond.apply2(x, zero);
    Derived {
        negation: ConnectiveTable::from_fn(u, 1, |x| neg(x[0])),
        disjunction: ConnectiveTable::from_fn(u, 2, |x| cond.apply2(neg(x[0]), x[1])),
        conjunction: ConnectiveTable::from_fn(u, 2, |x| neg(cond.apply2(x[0], neg(x[1])))),
    }
}

/// Builds `C⁺(x) = ⋀ over conclusion pairs (Bp, Bc) of [⋀ Bp → ⋁ Bc]`
/// from conditional, conjunction and disjunction tables. Folds run left to
/// right in argument order; an empty conjunction is `1`, an empty
/// disjunction `0`.
pub fn construct_cplus(
    rule: &RegularityRule,
    cond: &ConnectiveTable,
    conj: &ConnectiveTable,
    disj: &ConnectiveTable,
) -> Result<ConnectiveTable> {
    let u = cond.universe();
    for t in [cond, conj, disj] {
        if t.arity() != 2 {
            return Err(Error::ArityMismatch {
                expected: 2,
                found: t.arity(),
            });
        }
        if t.universe() != u {
            return Err(Error::UniverseMismatch {
                expected: u.n(),
                found: t.universe().n(),
            });
        }
    }
    let fold = |t: &ConnectiveTable, unit: TruthValue, items: &mut dyn Iterator<Item = TruthValue>| {
        match items.next() {
            None => unit,
            Some(first) => items.fold(first, |acc, v| t.apply2(acc, v)),
        }
    };
    Ok(ConnectiveTable::from_fn(u, rule.arity(), |x| {
        let mut clauses = rule.conclusion_side().iter().map(|p| {
            let a = fold(conj, u.verum(), &mut p.bp.iter().map(|i| x[i]));
            let b = fold(disj, u.falsum(), &mut p.bc.iter().map(|i| x[i]));
            cond.apply2(a, b)
        });
        fold(conj, u.verum(), &mut clauses)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::reference;

    fn u(n: usize) -> Universe {
        Universe::new(n).unwrap()
    }

    #[test]
    fn pools_of_three_valued_relations() {
        let u = u(3);
        let sstt = Representation::new(vec![MixedRelation::ss(u), MixedRelation::tt(u)]).unwrap();
        let pool = sstt.designated_pool();
        assert!(disjunction_compatible(u, &pool));
        assert!(conjunction_compatible(u, &pool));
        assert_eq!(dc_check(u, &pool).unwrap(), (true, true));
        assert!(!negation_necessity(&sstt).unwrap().0);
    }

    #[test]
    fn degenerate_pool_is_incompatible() {
        let u = u(4);
        let s = |names: &[&str]| {
            ValueSet::from_values(names.iter().map(|n| u.parse_value(n).unwrap()))
        };
        let pool = vec![s(&["1"]), s(&["1", "#1"]), s(&["1", "#2"]), s(&["1", "#1", "#2"])];
        assert!(!disjunction_compatible(u, &pool));
        assert!(!conjunction_compatible(u, &pool));
        assert!(disjunction_compatible(u, &[s(&["1", "#1"])]));
    }

    #[test]
    fn fact_fails_dc1() {
        let rep = reference::five_valued_fact();
        let (dc1, _) = dc_check(rep.universe(), &rep.designated_pool()).unwrap();
        assert!(!dc1);
    }

    #[test]
    fn cross_pair_negation_necessity() {
        assert_eq!(
            negation_necessity(&reference::four_valued_cross_pair()).unwrap(),
            (true, true)
        );
        let single = Representation::single(MixedRelation::st(u(3)));
        assert_eq!(negation_necessity(&single).unwrap(), (true, true));
    }

    #[test]
    fn schema_reproduces_three_valued_tables() {
        let u = u(3);
        assert_eq!(construct_mixed_conditional(&MixedRelation::st(u)), reference::conditional_st());
        assert_eq!(construct_mixed_conditional(&MixedRelation::ts(u)), reference::conditional_ts());
        let u2 = Universe::new(2).unwrap();
        let classical = construct_mixed_conditional(&MixedRelation::ss(u2));
        assert_eq!(classical.apply2(u2.verum(), u2.falsum()), u2.falsum());
        assert_eq!(classical.apply2(u2.falsum(), u2.falsum()), u2.verum());
    }

    #[test]
    fn derived_negation_of_st() {
        let u = u(3);
        let st = Relation::from_mixed(MixedRelation::st(u));
        let d = derive_from_conditional(&st, &reference::conditional_st()).unwrap();
        assert_eq!(d.negation, reference::kleene_not());
        assert!(matches!(
            derive_from_conditional(&st, &reference::godel_conditional()),
            Err(Error::NotAConditional)
        ));
    }
}
