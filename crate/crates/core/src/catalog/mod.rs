//! Campaigns over whole catalogs of relations and the reports they emit.

mod verify;

pub use verify::{verify_paper, Check};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::algebra::{decide_conditional, AlgebraVerdict};
use crate::error::{Error, Result};
use crate::kernel::syntax::{representation_to_json, MemberJson};
use crate::kernel::{
    enumerate_relations, quotient_by_indeterminate_permutation, MixedRelation, QuotientView,
    Relation, Representation, Universe, EXHAUSTIVE_LIMIT,
};
use crate::search::{connective_profile, reference, ConnectiveReport, Profile, ProfileCategory};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct CampaignOptions {
    pub parallel: bool,
    /// Relations to process instead of the full enumeration. Required above
    /// four values; when absent there, the five-valued negation example is
    /// used.
    pub targets: Option<Vec<Representation>>,
}

/// Per-connective summary stored in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectiveSummary {
    pub exists: bool,
    pub count: String,
    pub witness: Option<Value>,
    pub references: Vec<String>,
}

impl From<&ConnectiveReport> for ConnectiveSummary {
    fn from(r: &ConnectiveReport) -> Self {
        Self {
            exists: r.exists(),
            count: r.count_string(),
            witness: r.witness.as_ref().map(|t| t.to_json()),
            references: r.references.iter().map(|(n, _)| n.clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileSummary {
    pub conjunction: ConnectiveSummary,
    pub disjunction: ConnectiveSummary,
    pub negation: ConnectiveSummary,
    pub conditional: ConnectiveSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub index: usize,
    pub label: String,
    pub extension: String,
    pub representation: Vec<MemberJson>,
    pub mixed: bool,
    pub pure: bool,
    pub reflexive: bool,
    pub category: &'static str,
    pub quotient_class: Option<usize>,
    pub profile: ProfileSummary,
    pub algebra: AlgebraVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tallies {
    pub total: String,
    pub conditional: String,
    pub conjunction_and_disjunction_only: String,
    pub conjunction_only: String,
    pub disjunction_only: String,
    pub none: String,
}

impl Tallies {
    fn from_categories(cats: impl Iterator<Item = ProfileCategory>) -> Self {
        let mut counts = [0usize; 5];
        let mut total = 0;
        for c in cats {
            counts[c as usize] += 1;
            total += 1;
        }
        Self {
            total: total.to_string(),
            conditional: counts[0].to_string(),
            conjunction_and_disjunction_only: counts[1].to_string(),
            conjunction_only: counts[2].to_string(),
            disjunction_only: counts[3].to_string(),
            none: counts[4].to_string(),
        }
    }

    /// `[total, conditional, conj+disj, conj only, disj only, none]`.
    pub fn as_numbers(&self) -> [u64; 6] {
        [
            &self.total,
            &self.conditional,
            &self.conjunction_and_disjunction_only,
            &self.conjunction_only,
            &self.disjunction_only,
            &self.none,
        ]
        .map(|s| s.parse().expect("decimal"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub relations: Tallies,
    pub negation: String,
    pub reflexive: String,
    pub mixed: String,
    /// Relations whose minimal representation is not unique.
    pub multiple_minimal_representations: String,
    /// Relations where the algebraic decision and the search disagree.
    pub algebra_search_disagreements: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub classes: Tallies,
    /// Classes whose members do not all share one category (expected 0).
    pub mixed_category_classes: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub schema_version: u32,
    pub engine_version: &'static str,
    pub n_values: usize,
    pub mode: &'static str,
    pub summary: Summary,
    pub quotient: Option<QuotientSummary>,
    pub entries: Vec<Entry>,
}

/// Names the five three-valued relations; other relations get their
/// representation.
pub fn label(rel: &Relation) -> String {
    let u = rel.universe();
    let names = [
        ("ss", MixedRelation::ss(u)),
        ("tt", MixedRelation::tt(u)),
        ("st", MixedRelation::st(u)),
        ("ts", MixedRelation::ts(u)),
    ];
    let ms = rel.representation().members();
    let short: Option<Vec<&str>> = ms
        .iter()
        .map(|m| names.iter().find(|(_, r)| r == m).map(|(n, _)| *n))
        .collect();
    match short {
        Some(parts) if u.n() == 3 => parts.join("∩"),
        _ => rel.describe(),
    }
}

struct Computed {
    profile: Profile,
    algebra: AlgebraVerdict,
}

fn compute(rel: &Relation) -> Result<Computed> {
    Ok(Computed {
        profile: connective_profile(rel),
        algebra: decide_conditional(rel)?,
    })
}

fn disagrees(p: &Profile, a: &AlgebraVerdict) -> bool {
    a.disjunction_compatible != p.disjunction.exists()
        || a.conjunction_compatible != p.conjunction.exists()
        || (a.dc1 && a.dc2) != (p.conjunction.exists() && p.disjunction.exists())
        || a.conditional_decision != p.conditional.exists()
        || (p.negation.exists() && !(a.n1 && a.n2))
}

/// Relations a campaign over `u` covers.
pub fn campaign_relations(u: Universe, options: &CampaignOptions) -> Result<Vec<Relation>> {
    match &options.targets {
        Some(t) => Ok(t
            .iter()
            .map(|r| {
                if r.universe() != u {
                    Err(Error::UniverseMismatch {
                        expected: u.n(),
                        found: r.universe().n(),
                    })
                } else {
                    Ok(Relation::from_representation(r))
                }
            })
            .collect::<Result<_>>()?),
        None if u.n() <= EXHAUSTIVE_LIMIT => enumerate_relations(u),
        None if u.n() == 5 => Ok(vec![Relation::from_representation(
            &reference::five_valued_fact(),
        )]),
        None => Err(Error::TooLarge {
            what: "campaign universe without explicit targets",
            limit: 5,
            requested: u.n(),
        }),
    }
}

/// Enumerates (or takes the given targets), profiles every relation,
/// decides the conditional algebraically and tallies. Parallel and serial
/// runs give identical reports.
pub fn run_campaign(n: usize, options: &CampaignOptions) -> Result<CampaignReport> {
    let u = Universe::new(n)?;
    let rels = campaign_relations(u, options)?;
    let computed: Vec<Computed> = if options.parallel {
        rels.par_iter().map(compute).collect::<Result<_>>()?
    } else {
        rels.iter().map(compute).collect::<Result<_>>()?
    };
    let full = options.targets.is_none() && n <= EXHAUSTIVE_LIMIT;
    let quotient: Option<QuotientView> = full.then(|| quotient_by_indeterminate_permutation(&rels));

    let entries: Vec<Entry> = rels
        .iter()
        .zip(&computed)
        .enumerate()
        .map(|(i, (rel, c))| Entry {
            index: i,
            label: label(rel),
            extension: rel.extension().to_hex(),
            representation: representation_to_json(rel.representation()),
            mixed: rel.is_mixed(),
            pure: rel.is_pure(),
            reflexive: rel.extension().is_reflexive(),
            category: c.profile.category().key(),
            quotient_class: quotient.as_ref().map(|q| q.class_of[i]),
            profile: ProfileSummary {
                conjunction: (&c.profile.conjunction).into(),
                disjunction: (&c.profile.disjunction).into(),
                negation: (&c.profile.negation).into(),
                conditional: (&c.profile.conditional).into(),
            },
            algebra: c.algebra,
        })
        .collect();

    let count = |f: &dyn Fn(usize) -> bool| (0..rels.len()).filter(|&i| f(i)).count().to_string();
    let summary = Summary {
        relations: Tallies::from_categories(computed.iter().map(|c| c.profile.category())),
        negation: count(&|i| computed[i].profile.negation.exists()),
        reflexive: count(&|i| entries[i].reflexive),
        mixed: count(&|i| entries[i].mixed),
        multiple_minimal_representations: count(&|i| computed[i].algebra.representations_checked > 1),
        algebra_search_disagreements: count(&|i| disagrees(&computed[i].profile, &computed[i].algebra)),
    };
    let quotient = quotient.map(|q| {
        let cat = |i: usize| computed[i].profile.category();
        QuotientSummary {
            classes: Tallies::from_categories(q.classes.iter().map(|c| cat(c.members[0]))),
            mixed_category_classes: q
                .classes
                .iter()
                .filter(|c| c.members.iter().any(|&m| cat(m) != cat(c.members[0])))
                .count()
                .to_string(),
        }
    });
    Ok(CampaignReport {
        schema_version: SCHEMA_VERSION,
        engine_version: ENGINE_VERSION,
        n_values: n,
        mode: if full { "full" } else { "targeted" },
        summary,
        quotient,
        entries,
    })
}

impl CampaignReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# {}-valued campaign ({})\n\nengine {} / schema {}\n\n",
            self.n_values, self.mode, self.engine_version, self.schema_version
        );
        let tallies = |s: &mut String, title: &str, t: &Tallies| {
            s.push_str(&format!(
                "| {title} | conditional | conj+disj only | conj only | disj only | none |\n|---|---|---|---|---|---|\n| {} | {} | {} | {} | {} | {} |\n\n",
                t.total,
                t.conditional,
                t.conjunction_and_disjunction_only,
                t.conjunction_only,
                t.disjunction_only,
                t.none
            ));
        };
        tallies(&mut s, "relations", &self.summary.relations);
        if let Some(q) = &self.quotient {
            tallies(&mut s, "classes", &q.classes);
        }
        s.push_str(&format!(
            "negation: {}, reflexive: {}, mixed: {}, non-unique minimal representations: {}, algebra/search disagreements: {}\n\n",
            self.summary.negation,
            self.summary.reflexive,
            self.summary.mixed,
            self.summary.multiple_minimal_representations,
            self.summary.algebra_search_disagreements
        ));
        s.push_str("| # | relation | category | ∧ | ∨ | ¬ | → | decide | class |\n|---|---|---|---|---|---|---|---|---|\n");
        for e in &self.entries {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
                e.index,
                e.label,
                e.category,
                e.profile.conjunction.count,
                e.profile.disjunction.count,
                e.profile.negation.count,
                e.profile.conditional.count,
                e.algebra.conditional_decision,
                e.quotient_class.map_or("-".to_owned(), |c| c.to_string())
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_valued_campaign() {
        let r = run_campaign(3, &CampaignOptions::default()).unwrap();
        assert_eq!(r.entries.len(), 5);
        let with_cond: Vec<&str> = r
            .entries
            .iter()
            .filter(|e| e.profile.conditional.exists)
            .map(|e| e.label.as_str())
            .collect();
        let mut sorted = with_cond.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["ss", "st", "ts", "tt"]);
        assert_eq!(r.summary.algebra_search_disagreements, "0");
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = run_campaign(3, &CampaignOptions::default()).unwrap();
        let parallel = run_campaign(
            3,
            &CampaignOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(serial.to_json().unwrap(), parallel.to_json().unwrap());
    }

    #[test]
    fn five_valued_is_targeted() {
        let r = run_campaign(5, &CampaignOptions::default()).unwrap();
        assert_eq!(r.mode, "targeted");
        assert_eq!(r.entries.len(), 1);
        assert!(r.quotient.is_none());
        assert!(run_campaign(6, &CampaignOptions::default()).is_err());
    }
}
