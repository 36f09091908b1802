use mixcon::rules::{dual_premise_rule, synthesize_classical_rule, ClassicalFunction};

fn main() -> mixcon::Result<()> {
    let bits = std::env::args().nth(1).unwrap_or_else(|| "0110".to_owned());
    let arity = (bits.len() as f64).log2() as usize;
    let f = ClassicalFunction::from_bits(arity, &bits)?;
    let rule = synthesize_classical_rule(&f);
    println!("{bits}: {rule}");
    println!("dual premise side: {}", dual_premise_rule(&rule)?);
    println!("{}", serde_json::to_string_pretty(&rule.to_json())?);
    Ok(())
}
