use super::{ArgSet, ClassicalFunction, RegularityRule, RulePair};
use crate::error::{Error, Result};

/// Cap on premise pairs produced by [`dual_premise_rule`].
pub const DUAL_TERM_LIMIT: usize = 1 << 16;

fn row_pair(arity: usize, row: usize) -> RulePair {
    let inputs = ClassicalFunction::row_inputs(arity, row);
    let mut bp = 0u32;
    let mut bc = 0u32;
    for (i, &b) in inputs.iter().enumerate() {
        if b {
            bp |= 1 << i;
        } else {
            bc |= 1 << i;
        }
    }
    RulePair {
        bp: ArgSet::from_bits(bp),
        bc: ArgSet::from_bits(bc),
    }
}

/// Reads a rule off the truth table: each false row becomes a conclusion
/// sequent (the CNF clause ruling that row out), each true row a premise
/// sequent. Not minimized.
pub fn synthesize_classical_rule(f: &ClassicalFunction) -> RegularityRule {
    let n = f.arity();
    let mut premise = Vec::new();
    let mut conclusion = Vec::new();
    for (row, &out) in f.outputs().iter().enumerate() {
        if out {
            premise.push(row_pair(n, row));
        } else {
            conclusion.push(row_pair(n, row));
        }
    }
    RegularityRule::new(n, premise, conclusion).expect("arity checked by ClassicalFunction")
}

/// Keeps the conclusion side and replaces the premise side with the one
/// read off the same clauses: `C(x) ∈ dp` iff every clause `(bp, bc)` has
/// some `x_i ∉ dc` with `i ∈ bp` or some `x_i ∈ dp` with `i ∈ bc`.
/// Expanding that product of clauses gives one premise pair per choice
/// of a literal in each clause.
///
/// Classically equivalent to the premise side of
/// [`synthesize_classical_rule`], but the two come apart once `dp ≠ dc`.
pub fn dual_premise_rule(rule: &RegularityRule) -> Result<RegularityRule> {
    let mut terms: Vec<(u32, u32)> = vec![(0, 0)];
    for clause in rule.conclusion_side() {
        let mut next = Vec::new();
        for &(bp, bc) in &terms {
            next.extend(clause.bp.iter().map(|i| (bp, bc | 1 << i)));
            next.extend(clause.bc.iter().map(|i| (bp | 1 << i, bc)));
        }
        next.sort_unstable();
        next.dedup();
        if next.len() > DUAL_TERM_LIMIT {
            return Err(Error::TooLarge {
                what: "dual premise side",
                limit: DUAL_TERM_LIMIT,
                requested: next.len(),
            });
        }
        terms = next;
    }
    let premise = terms
        .into_iter()
        .map(|(bp, bc)| RulePair {
            bp: ArgSet::from_bits(bp),
            bc: ArgSet::from_bits(bc),
        })
        .collect();
    RegularityRule::new(rule.arity(), premise, rule.conclusion_side().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_rule() {
        let not = ClassicalFunction::from_bits(1, "10").unwrap();
        let r = synthesize_classical_rule(&not);
        assert_eq!(r.conclusion_side(), &[RulePair::new(&[1], &[])]);
        assert_eq!(r.premise_side(), &[RulePair::new(&[], &[1])]);
    }

    #[test]
    fn disjunction_rule() {
        let or = ClassicalFunction::from_bits(2, "0111").unwrap();
        let r = synthesize_classical_rule(&or);
        assert_eq!(r.conclusion_side(), &[RulePair::new(&[], &[1, 2])]);
        let mut expected = vec![
            RulePair::new(&[1, 2], &[]),
            RulePair::new(&[1], &[2]),
            RulePair::new(&[2], &[1]),
        ];
        expected.sort();
        assert_eq!(r.premise_side(), expected.as_slice());
    }

    #[test]
    fn dual_of_disjunction() {
        let or = synthesize_classical_rule(&ClassicalFunction::from_bits(2, "0111").unwrap());
        let d = dual_premise_rule(&or).unwrap();
        assert_eq!(d.conclusion_side(), or.conclusion_side());
        let mut expected = vec![RulePair::new(&[1], &[]), RulePair::new(&[2], &[])];
        expected.sort();
        assert_eq!(d.premise_side(), expected.as_slice());
    }

    #[test]
    fn dual_of_constants() {
        let top = synthesize_classical_rule(&ClassicalFunction::from_bits(0, "1").unwrap());
        assert_eq!(dual_premise_rule(&top).unwrap().premise_side(), &[RulePair::new(&[], &[])]);
        let bot = synthesize_classical_rule(&ClassicalFunction::from_bits(0, "0").unwrap());
        assert!(dual_premise_rule(&bot).unwrap().premise_side().is_empty());
    }
}
