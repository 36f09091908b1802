//! Every intersective mixed relation over {0, ½, 1} and its connectives.
use mixcon::catalog::label;
use mixcon::kernel::{enumerate_relations, Universe};
use mixcon::search::connective_profile;

fn main() -> mixcon::Result<()> {
    let u = Universe::new(3)?;
    for rel in enumerate_relations(u)? {
        let p = connective_profile(&rel);
        println!(
            "{:<6} ¬ {:<3} ∧ {:<4} ∨ {:<4} → {:<4} ({:?})",
            label(&rel),
            p.negation.count_string(),
            p.conjunction.count_string(),
            p.disjunction.count_string(),
            p.conditional.count_string(),
            p.category(),
        );
    }
    Ok(())
}
