use mixcon::catalog::{run_campaign, CampaignOptions};

fn main() -> mixcon::Result<()> {
    let report = run_campaign(
        4,
        &CampaignOptions {
            parallel: true,
            ..Default::default()
        },
    )?;
    let t = report.summary.relations.as_numbers();
    println!("{} relations", t[0]);
    println!("  conditional        {}", t[1]);
    println!("  conj+disj only     {}", t[2]);
    println!("  conjunction only   {}", t[3]);
    println!("  disjunction only   {}", t[4]);
    println!("  none               {}", t[5]);
    if let Some(q) = &report.quotient {
        let c = q.classes.as_numbers();
        println!("{} classes up to renaming of #1 and #2: {:?}", c[0], &c[1..]);
    }
    for e in report.entries.iter().filter(|e| e.profile.conditional.exists && !e.mixed) {
        println!("non-mixed with a conditional: {}", e.label);
    }
    Ok(())
}
