//! Over |={1,#1},{1,#2} every regularity rule has exactly one table.
use mixcon::rules::{library_rule, LIBRARY_NAMES};
use mixcon::search::synthesize_canonical4;

fn main() -> mixcon::Result<()> {
    for name in LIBRARY_NAMES.iter().take(4) {
        println!("{name}");
        print!("{}", synthesize_canonical4(&library_rule(name)?));
        println!();
    }
    Ok(())
}
