//! Deciding the conditional from the designated sets, checked against search.
use mixcon::algebra::decide_conditional;
use mixcon::kernel::syntax::parse_relation;
use mixcon::kernel::Relation;
use mixcon::search::connective_profile;

fn main() -> mixcon::Result<()> {
    for (n, text) in [
        (3, "ss & tt"),
        (3, "st"),
        (4, "{1,#1}|{1,#1} & {1,#2}|{1,#2}"),
        (4, "{1,#1}|{1,#2} & {1,#2}|{1,#1}"),
        (4, "{1}|{1,#1} & {1,#2}|{1,#2}"),
    ] {
        let rel = Relation::from_representation(&parse_relation(n, text)?);
        let v = decide_conditional(&rel)?;
        let found = connective_profile(&rel).conditional.exists();
        println!(
            "{:<34} decided {:<5} search {:<5} cause {}",
            rel.describe(),
            v.conditional_decision,
            found,
            v.cause().unwrap_or("-"),
        );
    }
    Ok(())
}
