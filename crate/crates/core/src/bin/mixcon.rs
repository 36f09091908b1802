use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mixcon::algebra::decide_conditional;
use mixcon::catalog::{run_campaign, verify_paper, CampaignOptions};
use mixcon::kernel::syntax::parse_relation;
use mixcon::kernel::{Relation, Universe};
use mixcon::order::{classify_order, order_relation, upset_representation, TruthOrder};
use mixcon::rules::{parse_rule, synthesize_classical_rule, ClassicalFunction, ScVariant};
use mixcon::search::{find_connectives, sc_search, synthesize_canonical4};
use mixcon::Result;

#[derive(Parser)]
#[command(name = "mixcon", version, about = "Regular connectives for intersective mixed consequence relations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate every relation over N values and profile its connectives
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Also print tallies up to renaming of the indeterminates
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<String>,
        #[arg(long, value_name = "PATH")]
        markdown: Option<String>,
        /// Run on one thread
        #[arg(long)]
        serial: bool,
    },
    /// Solve a regularity rule for one relation
    Connectives {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Decide the conditional from designated sets alone
    Decide {
        #[arg(long)]
        relation: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// The relation induced by a partial order on values
    Order {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: String,
    },
    /// Read a regularity rule off a classical truth table
    SynthRule {
        #[arg(long)]
        classical: String,
        #[arg(long)]
        arity: usize,
    },
    /// The unique table for a rule over the canonical four-valued relation
    Canonical4 {
        #[arg(long)]
        rule: String,
    },
    /// Single-conclusion conditional search
    ScSearch {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Check the published results for N = 3, 4 or 5
    VerifyPaper {
        #[arg(long)]
        n: usize,
    },
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Enumerate {
            n,
            quotient,
            json,
            markdown,
            serial,
        } => {
            let report = run_campaign(
                n,
                &CampaignOptions {
                    parallel: !serial,
                    ..Default::default()
                },
            )?;
            if let Some(path) = json {
                fs::write(path, report.to_json()?)?;
            }
            if let Some(path) = markdown {
                fs::write(path, report.to_markdown())?;
            }
            let t = report.summary.relations.as_numbers();
            println!(
                "{} relations: conditional {}, conj+disj only {}, conj only {}, disj only {}, none {}",
                t[0], t[1], t[2], t[3], t[4], t[5]
            );
            if quotient {
                match &report.quotient {
                    Some(q) => {
                        let c = q.classes.as_numbers();
                        println!(
                            "{} classes: conditional {}, conj+disj only {}, conj only {}, disj only {}, none {}",
                            c[0], c[1], c[2], c[3], c[4], c[5]
                        );
                    }
                    None => println!("no quotient in targeted mode"),
                }
            }
            for e in &report.entries {
                println!(
                    "{:>4} {:<32} {}",
                    e.index,
                    e.category,
                    e.label
                );
            }
            Ok(true)
        }
        Command::Connectives { relation, rule, n } => {
            let rel = Relation::from_representation(&parse_relation(n, &relation)?);
            let rule = parse_rule(&rule)?;
            let r = find_connectives(&rule, &rel)?;
            println!("relation: {}", rel.describe());
            println!("rule: {rule}");
            println!("count: {}", r.count_string());
            let u = rel.universe();
            for (x, s) in &r.cell_admissible {
                let args: Vec<String> = x.iter().map(|v| u.name(*v)).collect();
                println!("  ({}) -> {}", args.join(","), u.format_set(*s));
            }
            match &r.witness {
                Some(t) => println!("witness:\n{t}"),
                None => println!("no witness"),
            }
            for (name, _) in &r.references {
                println!("reference table passes: {name}");
            }
            Ok(true)
        }
        Command::Decide { relation, n } => {
            let rel = Relation::from_representation(&parse_relation(n, &relation)?);
            let v = decide_conditional(&rel)?;
            println!("relation: {}", rel.describe());
            println!("{}", serde_json::to_string_pretty(&v)?);
            if let Some(cause) = v.cause() {
                println!("no conditional: {cause} fails");
            }
            Ok(true)
        }
        Command::Order { n, order } => {
            let u = Universe::new(n)?;
            let o = TruthOrder::parse(u, &order)?;
            let class = classify_order(&o);
            let rep = upset_representation(&o);
            println!("order: {}", o.to_spec());
            println!("class: {:?} (also degenerate: {})", class.kind, class.also_degenerate);
            println!("upsets: {}", rep.describe());
            println!("extension: {}", order_relation(&o).to_hex());
            Ok(rep.extension() == order_relation(&o))
        }
        Command::SynthRule { classical, arity } => {
            let f = ClassicalFunction::from_bits(arity, &classical)?;
            let rule = synthesize_classical_rule(&f);
            println!("{rule}");
            println!("{}", serde_json::to_string(&rule.to_json())?);
            Ok(true)
        }
        Command::Canonical4 { rule } => {
            let t = synthesize_canonical4(&parse_rule(&rule)?);
            print!("{t}");
            Ok(true)
        }
        Command::ScSearch {
            relation,
            variant,
            n,
            allow_large,
        } => {
            let rel = Relation::from_representation(&parse_relation(n, &relation)?);
            let variant = ScVariant::parse(&variant)?;
            let r = sc_search(variant, rel.extension(), allow_large)?;
            println!("{} for {}: {} tables", variant.name(), rel.describe(), r.count);
            for t in &r.witnesses {
                println!("{t}");
            }
            Ok(true)
        }
        Command::VerifyPaper { n } => {
            let checks = verify_paper(n)?;
            let mut all = true;
            for c in &checks {
                all &= c.passed;
                let mark = if c.passed { "PASS" } else { "FAIL" };
                if c.detail.is_empty() {
                    println!("{mark} {}", c.name);
                } else {
                    println!("{mark} {} ({})", c.name, c.detail);
                }
            }
            Ok(all)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
