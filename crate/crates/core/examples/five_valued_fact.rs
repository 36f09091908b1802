//! A five-valued relation with a negation and no conditional.
use mixcon::algebra::decide_conditional;
use mixcon::kernel::Relation;
use mixcon::search::{connective_profile, reference};

fn main() -> mixcon::Result<()> {
    let rel = Relation::from_representation(&reference::five_valued_fact());
    let p = connective_profile(&rel);
    println!("{}", rel.describe());
    println!("negations {}, conditionals {}", p.negation.count, p.conditional.count);
    if let Some(neg) = &p.negation.witness {
        print!("{neg}");
    }
    let v = decide_conditional(&rel)?;
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(())
}
