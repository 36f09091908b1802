//! The unique conditional of the strict-tolerant relation, and what
//! follows from it.
use mixcon::algebra::derive_from_conditional;
use mixcon::kernel::{MixedRelation, Relation, Universe};
use mixcon::rules::library_rule;
use mixcon::search::find_connectives;

fn main() -> mixcon::Result<()> {
    let st = Relation::from_mixed(MixedRelation::st(Universe::new(3)?));
    let report = find_connectives(&library_rule("conditional")?, &st)?;
    println!("{}: {} conditional(s)", st.describe(), report.count);
    let cond = report.witness.expect("st has a conditional");
    println!("→\n{cond}");

    let d = derive_from_conditional(&st, &cond)?;
    println!("¬ (x → 0)\n{}", d.negation);
    println!("∨ ((x → 0) → y)\n{}", d.disjunction);
    println!("∧\n{}", d.conjunction);
    Ok(())
}
