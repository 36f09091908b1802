//! Connective discovery for a fixed relation: per-cell admissible sets,
//! exact counts, witnesses.

pub mod reference;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::kernel::{ExtRelation, MixedRelation, Relation, Representation, TruthValue, Universe, ValueSet};
use crate::rules::{
    self, library_rule, rule_cells, sc_cell_admissible, single_conclusion_check, ConnectiveTable,
    RegularityRule, ScVariant,
};

/// Default bound on rule arity for [`find_connectives`].
pub const DEFAULT_MAX_ARITY: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectiveReport {
    pub rule: RegularityRule,
    pub count: BigUint,
    /// Least-index choice in every cell, when every cell admits something.
    pub witness: Option<ConnectiveTable>,
    /// `(input tuple, admissible outputs)` in table order.
    pub cell_admissible: Vec<(Vec<TruthValue>, ValueSet)>,
    /// Named reference tables that pass.
    pub references: Vec<(String, ConnectiveTable)>,
}

impl ConnectiveReport {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    pub fn is_unique(&self) -> bool {
        self.count == BigUint::from(1u8)
    }

    /// Whether `t` is one of the solutions.
    pub fn admits(&self, t: &ConnectiveTable) -> bool {
        t.arity() == self.rule.arity()
            && t.cell_count() == self.cell_admissible.len()
            && self
                .cell_admissible
                .iter()
                .zip(t.outputs())
                .all(|((_, s), v)| s.contains(*v))
    }

    pub fn count_string(&self) -> String {
        self.count.to_str_radix(10)
    }
}

fn product(cells: &[ValueSet]) -> BigUint {
    cells
        .iter()
        .fold(BigUint::from(1u8), |acc, s| acc * BigUint::from(s.len()))
}

fn least_choice(u: Universe, arity: usize, cells: &[ValueSet]) -> Option<ConnectiveTable> {
    let outputs = cells.iter().map(|s| s.first()).collect::<Option<Vec<_>>>()?;
    Some(ConnectiveTable::new(u, arity, outputs).expect("admissible values are in range"))
}

/// Reference tables worth reporting for a rule over `u`.
fn candidate_references(u: Universe, rule: &RegularityRule) -> Vec<(String, ConnectiveTable)> {
    if u.n() != 3 {
        return Vec::new();
    }
    let is = |name: &str| library_rule(name).map(|r| r == *rule).unwrap_or(false);
    let mut out = Vec::new();
    if is("conjunction") {
        out.push(("strong_kleene_and".to_owned(), reference::kleene_and()));
    }
    if is("disjunction") {
        out.push(("strong_kleene_or".to_owned(), reference::kleene_or()));
    }
    if is("negation") {
        out.push(("strong_kleene_not".to_owned(), reference::kleene_not()));
    }
    if is("conditional") {
        out.push(("conditional_ss".to_owned(), reference::conditional_ss()));
        out.push(("conditional_tt".to_owned(), reference::conditional_tt()));
        out.push(("conditional_st".to_owned(), reference::conditional_st()));
        out.push(("strong_kleene_conditional".to_owned(), reference::kleene_conditional()));
        out.push(("godel_conditional".to_owned(), reference::godel_conditional()));
    }
    out
}

/// Solves `rule` cell by cell over the relation's minimal representation.
pub fn find_connectives(rule: &RegularityRule, rel: &Relation) -> Result<ConnectiveReport> {
    find_connectives_with(rule, rel, DEFAULT_MAX_ARITY)
}

pub fn find_connectives_with(
    rule: &RegularityRule,
    rel: &Relation,
    max_arity: usize,
) -> Result<ConnectiveReport> {
    if rule.arity() > max_arity {
        return Err(Error::TooLarge {
            what: "connective search arity",
            limit: max_arity,
            requested: rule.arity(),
        });
    }
    Ok(solve(rule, rel.representation()))
}

pub(crate) fn solve(rule: &RegularityRule, minrep: &Representation) -> ConnectiveReport {
    let u = minrep.universe();
    let cell_admissible: Vec<(Vec<TruthValue>, ValueSet)> = rule_cells(u, rule.arity())
        .map(|x| {
            let s = rules::pointwise_admissible(rule, minrep, &x).expect("minimal input");
            (x, s)
        })
        .collect();
    let sets: Vec<ValueSet> = cell_admissible.iter().map(|c| c.1).collect();
    let mut report = ConnectiveReport {
        rule: rule.clone(),
        count: product(&sets),
        witness: least_choice(u, rule.arity(), &sets),
        cell_admissible,
        references: Vec::new(),
    };
    report.references = candidate_references(u, rule)
        .into_iter()
        .filter(|(_, t)| report.admits(t))
        .collect();
    report
}

/// Reports for the four G-connectives of one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub conjunction: ConnectiveReport,
    pub disjunction: ConnectiveReport,
    pub negation: ConnectiveReport,
    pub conditional: ConnectiveReport,
}

/// Which of conjunction and disjunction a relation has, with the
/// conditional singled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProfileCategory {
    Conditional,
    ConjunctionAndDisjunction,
    ConjunctionOnly,
    DisjunctionOnly,
    Neither,
}

impl ProfileCategory {
    pub const ALL: [ProfileCategory; 5] = [
        Self::Conditional,
        Self::ConjunctionAndDisjunction,
        Self::ConjunctionOnly,
        Self::DisjunctionOnly,
        Self::Neither,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Self::Conditional => "conditional",
            Self::ConjunctionAndDisjunction => "conjunction_and_disjunction_only",
            Self::ConjunctionOnly => "conjunction_only",
            Self::DisjunctionOnly => "disjunction_only",
            Self::Neither => "none",
        }
    }
}

impl Profile {
    pub fn category(&self) -> ProfileCategory {
        match (
            self.conditional.exists(),
            self.conjunction.exists(),
            self.disjunction.exists(),
        ) {
            (true, _, _) => ProfileCategory::Conditional,
            (false, true, true) => ProfileCategory::ConjunctionAndDisjunction,
            (false, true, false) => ProfileCategory::ConjunctionOnly,
            (false, false, true) => ProfileCategory::DisjunctionOnly,
            (false, false, false) => ProfileCategory::Neither,
        }
    }

    pub fn all_four(&self) -> bool {
        self.conditional.exists()
            && self.negation.exists()
            && self.conjunction.exists()
            && self.disjunction.exists()
    }
}

pub fn connective_profile(rel: &Relation) -> Profile {
    let get = |name: &str| solve(&library_rule(name).expect("library rule"), rel.representation());
    let p = Profile {
        conjunction: get("conjunction"),
        disjunction: get("disjunction"),
        negation: get("negation"),
        conditional: get("conditional"),
    };
    assert!(
        !p.conditional.exists()
            || (p.negation.exists() && p.conjunction.exists() && p.disjunction.exists()),
        "a conditional without negation, conjunction and disjunction: {}",
        rel.describe()
    );
    p
}

/// `⊨{1,#1},{1,#2}` over four values, where every value has its own
/// membership pattern.
pub fn canonical4_relation() -> MixedRelation {
    let u = Universe::new(4).expect("four values");
    MixedRelation::from_names(u, &["1", "#1"], &["1", "#2"]).expect("designated")
}

/// The single table satisfying `rule` over [`canonical4_relation`].
///
/// Panics if some cell does not have exactly one admissible value.
pub fn synthesize_canonical4(rule: &RegularityRule) -> ConnectiveTable {
    let rep = Representation::single(canonical4_relation());
    let u = rep.universe();
    let outputs = rule_cells(u, rule.arity())
        .map(|x| {
            let s = rules::pointwise_admissible(rule, &rep, &x).expect("single member is minimal");
            assert_eq!(s.len(), 1, "cell {x:?} admits {s:?} under {rule}");
            s.first().expect("singleton")
        })
        .collect();
    ConnectiveTable::new(u, rule.arity(), outputs).expect("values in range")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScSearchResult {
    pub variant: ScVariant,
    pub count: BigUint,
    pub cell_admissible: Vec<(Vec<TruthValue>, ValueSet)>,
    /// Every solution when there are at most `witness_limit` of them,
    /// otherwise the first `witness_limit` in table order.
    pub witnesses: Vec<ConnectiveTable>,
}

impl ScSearchResult {
    /// Whether `t` is one of the counted tables, listed or not.
    pub fn admits(&self, t: &ConnectiveTable) -> bool {
        t.arity() == 2
            && t.cell_count() == self.cell_admissible.len()
            && self
                .cell_admissible
                .iter()
                .zip(t.outputs())
                .all(|((_, s), v)| s.contains(*v))
    }
}

/// Most witnesses listed by [`sc_search`].
pub const SC_WITNESS_LIMIT: usize = 64;

/// Binary tables satisfying a single-conclusion variant. The conditions
/// are per cell, so the solution set is a product of cell sets.
pub fn sc_search(variant: ScVariant, e: &ExtRelation, allow_large: bool) -> Result<ScSearchResult> {
    let u = e.universe();
    if u.n() > 3 && !allow_large {
        return Err(Error::TooLarge {
            what: "single-conclusion search universe without opt-in",
            limit: 3,
            requested: u.n(),
        });
    }
    let cell_admissible: Vec<(Vec<TruthValue>, ValueSet)> = rule_cells(u, 2)
        .map(|x| {
            let s = sc_cell_admissible(variant, e, x[0], x[1]);
            (x, s)
        })
        .collect();
    let sets: Vec<ValueSet> = cell_admissible.iter().map(|c| c.1).collect();
    Ok(ScSearchResult {
        variant,
        count: product(&sets),
        witnesses: expand(u, 2, &sets, SC_WITNESS_LIMIT),
        cell_admissible,
    })
}

/// Every binary table over three values, filtered by the variant.
pub fn sc_search_exhaustive(variant: ScVariant, e: &ExtRelation) -> Result<Vec<ConnectiveTable>> {
    let u = e.universe();
    if u.n() > 3 {
        return Err(Error::TooLarge {
            what: "exhaustive single-conclusion search universe",
            limit: 3,
            requested: u.n(),
        });
    }
    let all = vec![u.full_set(); u.n() * u.n()];
    let mut out = Vec::new();
    for t in expand(u, 2, &all, usize::MAX) {
        if single_conclusion_check(variant, e, &t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Lists tables choosing from `cells`, in table order (earlier cells vary
/// slowest), stopping after `limit`.
pub fn expand(u: Universe, arity: usize, cells: &[ValueSet], limit: usize) -> Vec<ConnectiveTable> {
    let choices: Vec<Vec<TruthValue>> = cells.iter().map(|s| s.iter().collect()).collect();
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut idx = vec![0usize; choices.len()];
    let mut out = Vec::new();
    loop {
        if out.len() >= limit {
            break;
        }
        let outputs = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        out.push(ConnectiveTable::new(u, arity, outputs).expect("values in range"));
        let mut pos = choices.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel3(members: Vec<MixedRelation>) -> Relation {
        Relation::from_representation(&Representation::new(members).unwrap())
    }

    #[test]
    fn three_valued_counts() {
        let u = Universe::new(3).unwrap();
        let and = library_rule("conjunction").unwrap();
        let cond = library_rule("conditional").unwrap();
        let ss = rel3(vec![MixedRelation::ss(u)]);
        let tt = rel3(vec![MixedRelation::tt(u)]);
        let sstt = rel3(vec![MixedRelation::ss(u), MixedRelation::tt(u)]);
        assert_eq!(find_connectives(&and, &ss).unwrap().count, BigUint::from(256u32));
        assert_eq!(find_connectives(&cond, &tt).unwrap().count, BigUint::from(128u32));
        assert!(!find_connectives(&cond, &sstt).unwrap().exists());
    }

    #[test]
    fn st_profile_unique() {
        let u = Universe::new(3).unwrap();
        let p = connective_profile(&rel3(vec![MixedRelation::st(u)]));
        for r in [&p.conjunction, &p.disjunction, &p.negation, &p.conditional] {
            assert!(r.is_unique());
        }
        assert_eq!(p.conditional.witness.as_ref().unwrap(), &reference::conditional_st());
    }

    #[test]
    fn canonical4_negation() {
        let t = synthesize_canonical4(&library_rule("negation").unwrap());
        let u = t.universe();
        let v = |s: &str| u.parse_value(s).unwrap();
        assert_eq!(t.apply1(v("1")), v("0"));
        assert_eq!(t.apply1(v("0")), v("1"));
        // #1 is in dp only and #2 in dc only; negation keeps each in place
        assert_eq!(t.apply1(v("#1")), v("#1"));
        assert_eq!(t.apply1(v("#2")), v("#2"));
        let e = Representation::single(canonical4_relation()).extension();
        let neg = library_rule("negation").unwrap();
        assert!(rules::satisfies_rule_oracle(&neg, &e, &t).unwrap());
        let swapped = ConnectiveTable::from_fn(u, 1, |x| match x[0].index() {
            1 => v("#2"),
            2 => v("#1"),
            _ => t.apply1(x[0]),
        });
        assert!(!rules::satisfies_rule_oracle(&neg, &e, &swapped).unwrap());
        let top = synthesize_canonical4(&library_rule("top").unwrap());
        assert_eq!(top.outputs(), &[u.verum()]);
    }

    #[test]
    fn sc_godel() {
        let u = Universe::new(3).unwrap();
        let sstt = rel3(vec![MixedRelation::ss(u), MixedRelation::tt(u)]);
        let r = sc_search(ScVariant::ScDeduction, sstt.extension(), false).unwrap();
        assert_eq!(r.witnesses, vec![reference::godel_conditional()]);
        let p = sc_search(ScVariant::ScPremise, sstt.extension(), false).unwrap();
        assert_eq!(p.count, BigUint::from(0u8));
        assert!(sc_search(ScVariant::ScPremise, sstt.extension(), false).is_ok());
    }

    #[test]
    fn expand_lists_product() {
        let u = Universe::new(3).unwrap();
        let s = ValueSet::from_values([u.falsum(), u.verum()]);
        assert_eq!(expand(u, 1, &[s, s, ValueSet::singleton(u.verum())], 100).len(), 4);
        assert_eq!(expand(u, 1, &[s, s, s], 3).len(), 3);
        assert!(expand(u, 1, &[s, ValueSet::EMPTY, s], 3).is_empty());
    }
}
