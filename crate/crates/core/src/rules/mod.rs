//! Regularity rules: the premise and conclusion sequent conditions that
//! fix how an `n`-ary connective behaves on either side of a turnstile.
//!
//! A rule is two families of index-set pairs. For the premise side,
//! `Γ, C(F1..Fn) ⊢ Δ` iff for every `(Bp, Bc)` in the family,
//! `Γ, {Fi : i ∈ Bp} ⊢ {Fi : i ∈ Bc}, Δ`; likewise for the conclusion side
//! with `Γ ⊢ C(F1..Fn), Δ`. An empty family is the empty conjunction,
//! i.e. always true.

mod check;
mod synth;
mod table;

pub use check::{
    oracle_cell_admissible, pointwise_admissible, satisfies_rule_oracle, satisfies_rule_pointwise,
    rule_cells, satisfies_side_oracle, sc_cell_admissible, single_conclusion_check, RuleSide,
    ScVariant,
};
pub use synth::{dual_premise_rule, synthesize_classical_rule, DUAL_TERM_LIMIT};
pub use table::{ClassicalFunction, ConnectiveTable};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest arity a rule may have.
pub const MAX_ARITY: usize = 16;

/// A set of argument positions, stored 0-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArgSet(u32);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    /// Builds from 1-based positions.
    pub fn of(positions: &[usize]) -> Self {
        Self(positions.iter().fold(0, |acc, &p| acc | 1 << (p - 1)))
    }

    pub fn from_bits(bits: u32) -> Self {
        Self(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, zero_based: usize) -> bool {
        self.0 >> zero_based & 1 == 1
    }

    /// 0-based positions in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }

    /// 1-based positions, as used in serialized rules.
    pub fn positions(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.positions()).finish()
    }
}

/// One sequent `Γ, {Fi : i ∈ bp} ⊢ {Fi : i ∈ bc}, Δ` of a rule side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RulePair {
    pub bp: ArgSet,
    pub bc: ArgSet,
}

impl RulePair {
    pub fn new(bp: &[usize], bc: &[usize]) -> Self {
        Self {
            bp: ArgSet::of(bp),
            bc: ArgSet::of(bc),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegularityRule {
    arity: usize,
    premise: Vec<RulePair>,
    conclusion: Vec<RulePair>,
}

impl RegularityRule {
    /// Sides are treated as sets: pairs are sorted and deduplicated.
    pub fn new(arity: usize, premise: Vec<RulePair>, conclusion: Vec<RulePair>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::TooLarge {
                what: "rule arity",
                limit: MAX_ARITY,
                requested: arity,
            });
        }
        for pair in premise.iter().chain(&conclusion) {
            let top = 32 - (pair.bp.0 | pair.bc.0).leading_zeros() as usize;
            if top > arity {
                return Err(Error::RuleIndexOutOfRange { index: top, arity });
            }
        }
        let norm = |mut side: Vec<RulePair>| {
            side.sort();
            side.dedup();
            side
        };
        Ok(Self {
            arity,
            premise: norm(premise),
            conclusion: norm(conclusion),
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn premise_side(&self) -> &[RulePair] {
        &self.premise
    }

    pub fn conclusion_side(&self) -> &[RulePair] {
        &self.conclusion
    }

    pub fn to_json(&self) -> RuleJson {
        let side = |s: &[RulePair]| {
            s.iter()
                .map(|p| PairJson {
                    bp: p.bp.positions(),
                    bc: p.bc.positions(),
                })
                .collect()
        };
        RuleJson {
            arity: self.arity,
            premise: side(&self.premise),
            conclusion: side(&self.conclusion),
        }
    }

    pub fn from_json(j: &RuleJson) -> Result<Self> {
        let side = |s: &[PairJson]| -> Result<Vec<RulePair>> {
            s.iter()
                .map(|p| {
                    for &i in p.bp.iter().chain(&p.bc) {
                        if i == 0 || i > j.arity {
                            return Err(Error::RuleIndexOutOfRange {
                                index: i,
                                arity: j.arity,
                            });
                        }
                    }
                    Ok(RulePair::new(&p.bp, &p.bc))
                })
                .collect()
        };
        Self::new(j.arity, side(&j.premise)?, side(&j.conclusion)?)
    }
}

impl fmt::Display for RegularityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[RulePair]| -> String {
            if s.is_empty() {
                return "true".to_owned();
            }
            s.iter()
                .map(|p| {
                    let names = |a: ArgSet| {
                        a.positions()
                            .iter()
                            .map(|i| format!("F{i}"))
                            .collect::<Vec<_>>()
                    };
                    let mut lhs = vec!["Γ".to_owned()];
                    lhs.extend(names(p.bp));
                    let mut rhs = names(p.bc);
                    rhs.push("Δ".to_owned());
                    format!("{} ⊢ {}", lhs.join(", "), rhs.join(", "))
                })
                .collect::<Vec<_>>()
                .join(" and ")
        };
        write!(
            f,
            "premise: [{}]; conclusion: [{}]",
            side(&self.premise),
            side(&self.conclusion)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub bp: Vec<usize>,
    pub bc: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleJson {
    pub arity: usize,
    pub premise: Vec<PairJson>,
    pub conclusion: Vec<PairJson>,
}

/// The sixteen binary classical connectives: library name, output bits in
/// row-major input order, premise and conclusion sides.
type Side = &'static [(&'static [usize], &'static [usize])];
const BINARY: [(&str, &str, Side, Side); 16] = [
    ("verum2", "1111", &[(&[], &[])], &[]),
    ("falsum2", "0000", &[], &[(&[], &[])]),
    ("p", "0011", &[(&[1], &[])], &[(&[], &[1])]),
    ("not_p", "1100", &[(&[], &[1])], &[(&[1], &[])]),
    ("q", "0101", &[(&[2], &[])], &[(&[], &[2])]),
    ("not_q", "1010", &[(&[], &[2])], &[(&[2], &[])]),
    ("or", "0111", &[(&[1], &[]), (&[2], &[])], &[(&[], &[1, 2])]),
    ("nor", "1000", &[(&[], &[1, 2])], &[(&[1], &[]), (&[2], &[])]),
    ("and", "0001", &[(&[1, 2], &[])], &[(&[], &[1]), (&[], &[2])]),
    ("nand", "1110", &[(&[], &[1]), (&[], &[2])], &[(&[1, 2], &[])]),
    ("implies", "1101", &[(&[2], &[]), (&[], &[1])], &[(&[1], &[2])]),
    ("nimplies", "0010", &[(&[1], &[2])], &[(&[2], &[]), (&[], &[1])]),
    ("converse", "1011", &[(&[1], &[]), (&[], &[2])], &[(&[2], &[1])]),
    ("nconverse", "0100", &[(&[2], &[1])], &[(&[1], &[]), (&[], &[2])]),
    ("iff", "1001", &[(&[1, 2], &[]), (&[], &[1, 2])], &[(&[1], &[2]), (&[2], &[1])]),
    ("xor", "0110", &[(&[1], &[2]), (&[2], &[1])], &[(&[1, 2], &[]), (&[], &[1, 2])]),
];

fn build(arity: usize, premise: Side, conclusion: Side) -> RegularityRule {
    let side = |s: Side| s.iter().map(|(bp, bc)| RulePair::new(bp, bc)).collect();
    RegularityRule::new(arity, side(premise), side(conclusion)).expect("library rules are valid")
}

/// Names of the sixteen binary classical rules, in table order.
pub fn binary_classical_names() -> impl Iterator<Item = &'static str> {
    BINARY.iter().map(|b| b.0)
}

/// The classical function a binary library rule comes from.
pub fn binary_classical_function(name: &str) -> Option<ClassicalFunction> {
    BINARY
        .iter()
        .find(|b| b.0 == name)
        .map(|b| ClassicalFunction::from_bits(2, b.1).expect("valid bits"))
}

/// Every library rule with a fixed name (projections excluded).
pub const LIBRARY_NAMES: [&str; 24] = [
    "negation",
    "conjunction",
    "disjunction",
    "conditional",
    "top",
    "bottom",
    "const_p",
    "const_c",
    "verum2",
    "falsum2",
    "p",
    "not_p",
    "q",
    "not_q",
    "or",
    "nor",
    "and",
    "nand",
    "implies",
    "nimplies",
    "converse",
    "nconverse",
    "iff",
    "xor",
];

/// The rule `Γ, pr(X) ⊢ Δ iff Γ, Xi ⊢ Δ` and `Γ ⊢ pr(X), Δ iff Γ ⊢ Xi, Δ`.
pub fn projection_rule(i: usize, n: usize) -> Result<RegularityRule> {
    if i == 0 || i > n {
        return Err(Error::RuleIndexOutOfRange { index: i, arity: n });
    }
    RegularityRule::new(n, vec![RulePair::new(&[i], &[])], vec![RulePair::new(&[], &[i])])
}

/// Looks up a named rule. Besides [`LIBRARY_NAMES`], accepts
/// `projection(i,n)`.
pub fn library_rule(name: &str) -> Result<RegularityRule> {
    let name = name.trim();
    let rule = match name {
        "negation" => build(1, &[(&[], &[1])], &[(&[1], &[])]),
        "conjunction" => return library_rule("and"),
        "disjunction" => return library_rule("or"),
        "conditional" => return library_rule("implies"),
        "top" => build(0, &[(&[], &[])], &[]),
        "bottom" => build(0, &[], &[(&[], &[])]),
        "const_p" => build(0, &[(&[], &[])], &[(&[], &[])]),
        "const_c" => build(0, &[], &[]),
        _ => {
            if let Some(args) = name
                .strip_prefix("projection(")
                .and_then(|s| s.strip_suffix(')'))
            {
                let parts: Vec<usize> = args
                    .split(',')
                    .map(|p| p.trim().parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::UnknownRule(name.to_owned()))?;
                let [i, n] = parts[..] else {
                    return Err(Error::UnknownRule(name.to_owned()));
                };
                return projection_rule(i, n);
            }
            let b = BINARY
                .iter()
                .find(|b| b.0 == name)
                .ok_or_else(|| Error::UnknownRule(name.to_owned()))?;
            build(2, b.2, b.3)
        }
    };
    Ok(rule)
}

/// A rule given either by library name or as rule JSON.
pub fn parse_rule(text: &str) -> Result<RegularityRule> {
    let t = text.trim();
    if t.starts_with('{') {
        RegularityRule::from_json(&serde_json::from_str(t)?)
    } else {
        library_rule(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_and_conditional_shapes() {
        let neg = library_rule("negation").unwrap();
        assert_eq!(neg.premise_side(), &[RulePair::new(&[], &[1])]);
        assert_eq!(neg.conclusion_side(), &[RulePair::new(&[1], &[])]);

        let cond = library_rule("conditional").unwrap();
        assert_eq!(cond.conclusion_side(), &[RulePair::new(&[1], &[2])]);
        let mut expected = vec![RulePair::new(&[2], &[]), RulePair::new(&[], &[1])];
        expected.sort();
        assert_eq!(cond.premise_side(), expected.as_slice());
    }

    #[test]
    fn nullary_rules() {
        let top = library_rule("top").unwrap();
        assert_eq!(top.arity(), 0);
        assert_eq!(top.premise_side(), &[RulePair::new(&[], &[])]);
        assert!(top.conclusion_side().is_empty());
        let cp = library_rule("const_p").unwrap();
        assert_eq!(cp.premise_side().len(), 1);
        assert_eq!(cp.conclusion_side().len(), 1);
        let cc = library_rule("const_c").unwrap();
        assert!(cc.premise_side().is_empty() && cc.conclusion_side().is_empty());
    }

    #[test]
    fn unknown_and_projection_names() {
        assert!(matches!(library_rule("nope"), Err(Error::UnknownRule(_))));
        let pr = library_rule("projection(2,3)").unwrap();
        assert_eq!(pr.arity(), 3);
        assert_eq!(pr.premise_side(), &[RulePair::new(&[2], &[])]);
        assert!(library_rule("projection(4,3)").is_err());
        for name in LIBRARY_NAMES {
            assert!(library_rule(name).is_ok(), "{name}");
        }
    }

    #[test]
    fn rule_json_round_trip() {
        let text = r#"{"arity":2,"premise":[{"bp":[2],"bc":[]},{"bp":[],"bc":[1]}],"conclusion":[{"bp":[1],"bc":[2]}]}"#;
        let r = parse_rule(text).unwrap();
        assert_eq!(r, library_rule("conditional").unwrap());
        assert_eq!(RegularityRule::from_json(&r.to_json()).unwrap(), r);
        let bad = r#"{"arity":1,"premise":[{"bp":[2],"bc":[]}],"conclusion":[]}"#;
        assert!(parse_rule(bad).is_err());
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let r = RegularityRule::new(
            1,
            vec![RulePair::new(&[1], &[]), RulePair::new(&[1], &[])],
            vec![],
        )
        .unwrap();
        assert_eq!(r.premise_side().len(), 1);
    }
}
