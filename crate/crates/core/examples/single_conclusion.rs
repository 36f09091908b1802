use mixcon::kernel::{MixedRelation, Representation, Universe};
use mixcon::rules::ScVariant;
use mixcon::search::sc_search;

fn main() -> mixcon::Result<()> {
    let u = Universe::new(3)?;
    let sstt = Representation::new(vec![MixedRelation::ss(u), MixedRelation::tt(u)])?;
    let e = sstt.extension();
    for v in ScVariant::ALL {
        let r = sc_search(v, &e, false)?;
        println!("{}: {} table(s)", v.name(), r.count);
        if r.witnesses.len() == 1 {
            print!("{}", r.witnesses[0]);
        }
    }
    Ok(())
}
