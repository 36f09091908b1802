use super::table::{all_cells, cell_count, cell_tuple};
use super::{ArgSet, ConnectiveTable, RegularityRule, RulePair};
use crate::error::{Error, Result};
use crate::kernel::{ExtRelation, Representation, TruthValue, Universe, ValueSet};

fn gather(x: &[TruthValue], args: ArgSet) -> ValueSet {
    args.iter().fold(ValueSet::EMPTY, |s, i| s.with(x[i]))
}

fn check_arity(rule: &RegularityRule, found: usize) -> Result<()> {
    if rule.arity() != found {
        return Err(Error::ArityMismatch {
            expected: rule.arity(),
            found,
        });
    }
    Ok(())
}

fn check_universe(expected: Universe, found: Universe) -> Result<()> {
    if expected != found {
        return Err(Error::UniverseMismatch {
            expected: expected.n(),
            found: found.n(),
        });
    }
    Ok(())
}

fn check_tuple(u: Universe, x: &[TruthValue]) -> Result<()> {
    match x.iter().find(|v| v.index() >= u.n()) {
        Some(v) => Err(Error::ValueOutOfRange {
            index: v.index(),
            n: u.n(),
        }),
        None => Ok(()),
    }
}

/// Output values a connective may take at input `x` while obeying `rule`,
/// read off the members of a minimal representation.
pub fn pointwise_admissible(
    rule: &RegularityRule,
    minrep: &Representation,
    x: &[TruthValue],
) -> Result<ValueSet> {
    minrep.require_minimal()?;
    check_arity(rule, x.len())?;
    let u = minrep.universe();
    check_tuple(u, x)?;
    Ok(admissible_unchecked(rule, minrep, x))
}

pub(crate) fn admissible_unchecked(
    rule: &RegularityRule,
    minrep: &Representation,
    x: &[TruthValue],
) -> ValueSet {
    let u = minrep.universe();
    let sequent = |pairs: &[RulePair], dp: ValueSet, dc: ValueSet| {
        pairs
            .iter()
            .all(|p| !gather(x, p.bp).is_subset(dp) || gather(x, p.bc).intersects(dc))
    };
    let mut out = u.full_set();
    for m in minrep.members() {
        let (dp, dc) = (m.dp(), m.dc());
        let p = sequent(rule.premise_side(), dp, dc);
        let q = sequent(rule.conclusion_side(), dp, dc);
        // z ∈ dp iff the premise sequents fail; z ∈ dc iff the conclusion ones hold
        let in_dp = if p { dp.complement(u) } else { dp };
        let in_dc = if q { dc } else { dc.complement(u) };
        out = out.intersection(in_dp).intersection(in_dc);
    }
    out
}

/// Table-level check through [`pointwise_admissible`].
pub fn satisfies_rule_pointwise(
    rule: &RegularityRule,
    minrep: &Representation,
    t: &ConnectiveTable,
) -> Result<bool> {
    minrep.require_minimal()?;
    check_arity(rule, t.arity())?;
    check_universe(minrep.universe(), t.universe())?;
    let out = t.outputs();
    Ok(all_cells(t.universe(), t.arity(), |i, x| {
        admissible_unchecked(rule, minrep, x).contains(out[i])
    }))
}


/// One half of a regularity rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSide {
    /// `Γ, C(x) ⊢ Δ` iff the premise sequents hold.
    Premise,
    /// `Γ ⊢ C(x), Δ` iff the conclusion sequents hold.
    Conclusion,
}

fn oracle_value_ok(
    rule: &RegularityRule,
    e: &ExtRelation,
    x: &[TruthValue],
    z: TruthValue,
) -> bool {
    side_value_ok(rule, RuleSide::Premise, e, x, z)
        && side_value_ok(rule, RuleSide::Conclusion, e, x, z)
}

fn side_value_ok(
    rule: &RegularityRule,
    side: RuleSide,
    e: &ExtRelation,
    x: &[TruthValue],
    z: TruthValue,
) -> bool {
    let u = e.universe();
    let zs = ValueSet::singleton(z);
    let gathered = |pairs: &[RulePair]| -> Vec<(ValueSet, ValueSet)> {
        pairs.iter().map(|p| (gather(x, p.bp), gather(x, p.bc))).collect()
    };
    let premise = side == RuleSide::Premise;
    let pairs = if premise {
        gathered(rule.premise_side())
    } else {
        gathered(rule.conclusion_side())
    };
    u.subsets().all(|g| {
        u.subsets().all(|d| {
            let lhs = if premise {
                e.holds(g.union(zs), d)
            } else {
                e.holds(g, zs.union(d))
            };
            lhs == pairs.iter().all(|&(bp, bc)| e.holds(g.union(bp), bc.union(d)))
        })
    })
}

/// Direct check of both rule sides for every premise set, conclusion set
/// and input tuple. Needs no representation at all.
pub fn satisfies_rule_oracle(
    rule: &RegularityRule,
    e: &ExtRelation,
    t: &ConnectiveTable,
) -> Result<bool> {
    check_arity(rule, t.arity())?;
    check_universe(e.universe(), t.universe())?;
    let out = t.outputs();
    Ok(all_cells(t.universe(), t.arity(), |i, x| oracle_value_ok(rule, e, x, out[i])))
}

/// [`satisfies_rule_oracle`] restricted to one side of the rule.
pub fn satisfies_side_oracle(
    rule: &RegularityRule,
    side: RuleSide,
    e: &ExtRelation,
    t: &ConnectiveTable,
) -> Result<bool> {
    check_arity(rule, t.arity())?;
    check_universe(e.universe(), t.universe())?;
    let out = t.outputs();
    Ok(all_cells(t.universe(), t.arity(), |i, x| {
        side_value_ok(rule, side, e, x, out[i])
    }))
}

/// Values passing the full-quantification check at a single input tuple.
pub fn oracle_cell_admissible(
    rule: &RegularityRule,
    e: &ExtRelation,
    x: &[TruthValue],
) -> Result<ValueSet> {
    check_arity(rule, x.len())?;
    check_tuple(e.universe(), x)?;
    Ok(ValueSet::from_values(
        e.universe().values().filter(|&z| oracle_value_ok(rule, e, x, z)),
    ))
}

/// Single-conclusion weakenings of the conditional rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScVariant {
    /// `Γ, a ⊢ b` iff `Γ ⊢ a→b`.
    ScDeduction,
    /// `Γ, a→b ⊢` iff `Γ, b ⊢` and `Γ ⊢ a`.
    ScPremise,
    /// Only the right-to-left half of [`ScVariant::ScPremise`].
    ScPremiseRtl,
}

impl ScVariant {
    pub const ALL: [ScVariant; 3] = [Self::ScDeduction, Self::ScPremise, Self::ScPremiseRtl];

    pub fn name(self) -> &'static str {
        match self {
            Self::ScDeduction => "sc_deduction",
            Self::ScPremise => "sc_premise",
            Self::ScPremiseRtl => "sc_premise_rtl",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s.trim())
            .ok_or_else(|| Error::UnknownRule(s.to_owned()))
    }
}

fn sc_value_ok(v: ScVariant, e: &ExtRelation, a: TruthValue, b: TruthValue, z: TruthValue) -> bool {
    let u = e.universe();
    let (sa, sb, sz) = (
        ValueSet::singleton(a),
        ValueSet::singleton(b),
        ValueSet::singleton(z),
    );
    let none = ValueSet::EMPTY;
    u.subsets().all(|g| match v {
        ScVariant::ScDeduction => e.holds(g.union(sa), sb) == e.holds(g, sz),
        ScVariant::ScPremise => {
            e.holds(g.union(sz), none) == (e.holds(g.union(sb), none) && e.holds(g, sa))
        }
        ScVariant::ScPremiseRtl => {
            !(e.holds(g.union(sb), none) && e.holds(g, sa)) || e.holds(g.union(sz), none)
        }
    })
}

/// Values `a→b` may take at the cell `(a, b)` under a single-conclusion
/// variant.
pub fn sc_cell_admissible(variant: ScVariant, e: &ExtRelation, a: TruthValue, b: TruthValue) -> ValueSet {
    ValueSet::from_values(
        e.universe()
            .values()
            .filter(|&z| sc_value_ok(variant, e, a, b, z)),
    )
}

pub fn single_conclusion_check(variant: ScVariant, e: &ExtRelation, t: &ConnectiveTable) -> Result<bool> {
    if t.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: t.arity(),
        });
    }
    check_universe(e.universe(), t.universe())?;
    Ok((0..t.cell_count()).all(|i| {
        let x = t.cell_tuple(i);
        sc_value_ok(variant, e, x[0], x[1], t.outputs()[i])
    }))
}

/// All input tuples of a rule over `u`, in table order.
pub fn rule_cells(u: Universe, arity: usize) -> impl Iterator<Item = Vec<TruthValue>> {
    (0..cell_count(u, arity)).map(move |i| cell_tuple(u, arity, i))
}
