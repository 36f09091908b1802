use mixcon::algebra::decide_conditional;
use mixcon::kernel::{Relation, Universe};
use mixcon::order::{all_orders, classify_order, upset_representation};
use mixcon::search::connective_profile;

fn main() -> mixcon::Result<()> {
    let u = Universe::new(4)?;
    for o in all_orders(u)? {
        let rel = Relation::from_representation(&upset_representation(&o));
        let p = connective_profile(&rel);
        println!(
            "{:<24} {:<10?} ∧ {:<5} ∨ {:<5} ¬ {:<5} → {:<5} decided {}",
            o.to_spec(),
            classify_order(&o).kind,
            p.conjunction.exists(),
            p.disjunction.exists(),
            p.negation.exists(),
            p.conditional.exists(),
            decide_conditional(&rel)?.conditional_decision,
        );
    }
    Ok(())
}
