use num_bigint::BigUint;
use serde::Serialize;

use super::{label, run_campaign, CampaignOptions};
use crate::algebra::decide_conditional;
use crate::error::{Error, Result};
use crate::kernel::{enumerate_relations, Relation, Universe};
use crate::order::{order_relation, TruthOrder};
use crate::rules::{
    library_rule, satisfies_rule_oracle, satisfies_rule_pointwise, single_conclusion_check,
    ConnectiveTable, ScVariant,
};
use crate::search::{connective_profile, find_connectives, reference, sc_search, Profile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_owned(),
            passed,
            detail: detail.into(),
        });
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, got: T, want: T) {
        let passed = got == want;
        self.add(name, passed, format!("got {got:?}, expected {want:?}"));
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Runs the published-results checklist for `n` ∈ {3, 4, 5}.
pub fn verify_paper(n: usize) -> Result<Vec<Check>> {
    let mut c = Checks(Vec::new());
    match n {
        3 => three(&mut c)?,
        4 => four(&mut c)?,
        5 => five(&mut c)?,
        _ => {
            return Err(Error::TooLarge {
                what: "verification checklist universe (3, 4 or 5)",
                limit: 5,
                requested: n,
            })
        }
    }
    Ok(c.0)
}

fn three(c: &mut Checks) -> Result<()> {
    let u = Universe::new(3)?;
    let cat = enumerate_relations(u)?;
    let mut labels: Vec<String> = cat.iter().map(label).collect();
    labels.sort();
    c.eq(
        "three-valued census is ss, tt, st, ts, ss∩tt",
        labels,
        ["ss", "ss∩tt", "st", "ts", "tt"].map(String::from).to_vec(),
    );

    let by_label = |l: &str| -> Relation {
        cat.iter().find(|r| label(r) == l).cloned().expect("present")
    };
    let profiles: Vec<(&str, Profile)> = ["ss", "tt", "st", "ts", "ss∩tt"]
        .into_iter()
        .map(|l| (l, connective_profile(&by_label(l))))
        .collect();

    let and = reference::kleene_and();
    let or = reference::kleene_or();
    c.add(
        "strong kleene conjunction and disjunction pass for all five",
        profiles
            .iter()
            .all(|(_, p)| p.conjunction.admits(&and) && p.disjunction.admits(&or)),
        "",
    );
    for l in ["st", "ts", "ss∩tt"] {
        let p = &profiles.iter().find(|x| x.0 == l).expect("present").1;
        c.add(
            &format!("strong kleene conjunction and disjunction are unique for {l}"),
            p.conjunction.is_unique()
                && p.disjunction.is_unique()
                && p.conjunction.witness.as_ref() == Some(&and)
                && p.disjunction.witness.as_ref() == Some(&or),
            format!(
                "counts {} and {}",
                p.conjunction.count_string(),
                p.disjunction.count_string()
            ),
        );
    }
    let expected = [
        ("ss", 256, 16, 4, true),
        ("tt", 16, 256, 128, true),
        ("st", 1, 1, 1, true),
        ("ts", 1, 1, 1, true),
        ("ss∩tt", 1, 1, 0, false),
    ];
    for (l, conj, disj, cond, neg) in expected {
        let p = &profiles.iter().find(|x| x.0 == l).expect("present").1;
        c.eq(
            &format!("{l}: conjunction, disjunction, conditional counts"),
            (
                p.conjunction.count.clone(),
                p.disjunction.count.clone(),
                p.conditional.count.clone(),
            ),
            (big(conj), big(disj), big(cond)),
        );
        c.eq(&format!("{l}: negation exists"), p.negation.exists(), neg);
    }
    for (l, t) in [
        ("ss", reference::conditional_ss()),
        ("tt", reference::conditional_tt()),
        ("st", reference::conditional_st()),
        ("ts", reference::conditional_ts()),
    ] {
        let p = &profiles.iter().find(|x| x.0 == l).expect("present").1;
        c.add(
            &format!("displayed {l} conditional is a solution"),
            p.conditional.admits(&t),
            "",
        );
        if l == "st" || l == "ts" {
            c.add(
                &format!("unique {l} conditional table matches the displayed table"),
                p.conditional.is_unique() && p.conditional.witness.as_ref() == Some(&t),
                "",
            );
        }
    }

    let cond = library_rule("conditional")?;
    let ss = by_label("ss");
    c.add(
        "strong kleene conditional is not a conditional for ss",
        !satisfies_rule_pointwise(&cond, ss.representation(), &reference::kleene_conditional())?,
        "",
    );
    let sstt = by_label("ss∩tt");
    let godel = reference::godel_conditional();
    c.add(
        "gödel table fails the full conditional rule for ss∩tt",
        !satisfies_rule_oracle(&cond, sstt.extension(), &godel)?,
        "",
    );
    let ded = sc_search(ScVariant::ScDeduction, sstt.extension(), false)?;
    c.add(
        "single-conclusion deduction for ss∩tt has exactly the gödel table",
        ded.count == big(1) && ded.witnesses == vec![godel.clone()],
        format!("count {}", ded.count),
    );
    let prem = sc_search(ScVariant::ScPremise, sstt.extension(), false)?;
    c.eq(
        "single-conclusion premise rule for ss∩tt has no solution",
        prem.count,
        big(0),
    );
    c.add(
        "gödel table satisfies the right-to-left premise direction for ss∩tt",
        single_conclusion_check(ScVariant::ScPremiseRtl, sstt.extension(), &godel)?,
        "",
    );
    c.add(
        "the three-valued order relation is ss∩tt",
        order_relation(&TruthOrder::chain(u)) == *sstt.extension(),
        "",
    );
    Ok(())
}

fn four(c: &mut Checks) -> Result<()> {
    let report = run_campaign(
        4,
        &CampaignOptions {
            parallel: true,
            ..Default::default()
        },
    )?;
    let t = report.summary.relations.as_numbers();
    c.eq("four-valued census has 167 relations", t[0], 167);
    c.eq(
        "four-valued tallies conditional / conj+disj / conj / disj / none",
        t[1..].to_vec(),
        vec![18, 28, 27, 27, 67],
    );
    let q = report
        .quotient
        .as_ref()
        .expect("full campaign has a quotient")
        .classes
        .as_numbers();
    c.eq("four-valued quotient has 97 classes", q[0], 97);
    c.eq(
        "quotient tallies conditional / conj+disj / conj / disj / none",
        q[1..].to_vec(),
        vec![12, 15, 16, 27, 38],
    );
    let decided = report
        .entries
        .iter()
        .filter(|e| e.algebra.conditional_decision)
        .count();
    c.eq("algebraic decision finds 18 conditionals", decided, 18);
    c.eq(
        "algebra and search agree on every relation",
        report.summary.algebra_search_disagreements.as_str(),
        "0",
    );
    let mixed_with_cond = report
        .entries
        .iter()
        .filter(|e| e.mixed && e.profile.conditional.exists)
        .count();
    c.eq("all 16 mixed relations have a conditional", mixed_with_cond, 16);

    let cond = library_rule("conditional")?;
    for (name, rep, table) in [
        (
            "pure pair",
            reference::four_valued_pure_pair(),
            reference::four_valued_pure_conditional(),
        ),
        (
            "cross pair",
            reference::four_valued_cross_pair(),
            reference::four_valued_cross_conditional(),
        ),
    ] {
        let rel = Relation::from_representation(&rep);
        let r = find_connectives(&cond, &rel)?;
        c.add(
            &format!("{name} intersective relation has exactly the displayed unique conditional"),
            r.is_unique() && r.witness.as_ref() == Some(&table),
            format!("count {}", r.count),
        );
    }
    let non_mixed: Vec<String> = report
        .entries
        .iter()
        .filter(|e| !e.mixed && e.profile.conditional.exists)
        .map(|e| e.label.clone())
        .collect();
    let mut want = vec![
        Relation::from_representation(&reference::four_valued_pure_pair()).describe(),
        Relation::from_representation(&reference::four_valued_cross_pair()).describe(),
    ];
    want.sort();
    let mut got = non_mixed;
    got.sort();
    c.eq(
        "the only non-mixed relations with a conditional are the two displayed ones",
        got,
        want,
    );
    Ok(())
}

fn five(c: &mut Checks) -> Result<()> {
    let rep = reference::five_valued_fact();
    let rel = Relation::from_representation(&rep);
    let neg = library_rule("negation")?;
    let table: ConnectiveTable = reference::five_valued_fact_negation();
    c.add(
        "displayed five-valued negation passes the negation rule",
        satisfies_rule_oracle(&neg, rel.extension(), &table)?
            && satisfies_rule_pointwise(&neg, rel.representation(), &table)?,
        "",
    );
    let p = connective_profile(&rel);
    c.add(
        "five-valued relation has a negation and no conditional",
        p.negation.exists() && !p.conditional.exists(),
        format!(
            "negations {}, conditionals {}",
            p.negation.count, p.conditional.count
        ),
    );
    let v = decide_conditional(&rel)?;
    c.add(
        "decision is negative with dc1 as the cause",
        !v.conditional_decision && !v.dc1 && v.cause() == Some("dc1"),
        format!("{v:?}"),
    );
    c.eq("five-valued relation keeps all three members", rep.len(), 3);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_and_five_pass() {
        for n in [3, 5] {
            for check in verify_paper(n).unwrap() {
                assert!(check.passed, "{}: {}", check.name, check.detail);
            }
        }
        assert!(verify_paper(6).is_err());
    }
}
