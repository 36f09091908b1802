use proptest::prelude::*;

use mixcon::kernel::syntax::{parse_relation, representation_from_json, representation_to_json};
use mixcon::kernel::{
    enumerate_relations, ExtRelation, MixedRelation, Relation, Representation, TruthValue,
    Universe, ValueSet,
};
use mixcon::rules::{
    library_rule, parse_rule, pointwise_admissible, projection_rule, rule_cells,
    satisfies_rule_oracle, satisfies_rule_pointwise, synthesize_classical_rule, ClassicalFunction,
    ConnectiveTable, RegularityRule, LIBRARY_NAMES,
};
use mixcon::search::find_connectives;

fn u(n: usize) -> Universe {
    Universe::new(n).unwrap()
}

fn representation(n: usize) -> impl Strategy<Value = Representation> {
    let pool = u(n).mixed_relations();
    proptest::collection::vec(proptest::sample::select(pool), 1..5)
        .prop_map(|ms| Representation::new(ms).unwrap())
}

fn any_representation() -> impl Strategy<Value = Representation> {
    (2usize..=5).prop_flat_map(representation)
}

fn small_rule() -> impl Strategy<Value = (String, RegularityRule)> {
    let mut rules: Vec<(String, RegularityRule)> = LIBRARY_NAMES
        .iter()
        .map(|n| (n.to_string(), library_rule(n).unwrap()))
        .filter(|(_, r)| r.arity() <= 2)
        .collect();
    for (i, n) in [(1, 1), (1, 2), (2, 2)] {
        rules.push((format!("projection({i},{n})"), projection_rule(i, n).unwrap()));
    }
    proptest::sample::select(rules)
}

fn table(n: usize, arity: usize) -> impl Strategy<Value = ConnectiveTable> {
    let un = u(n);
    proptest::collection::vec(0..n, n.pow(arity as u32)).prop_map(move |outs| {
        let outs = outs.into_iter().map(|i| un.value(i).unwrap()).collect();
        ConnectiveTable::new(un, arity, outs).unwrap()
    })
}

fn set(un: Universe, names: &[&str]) -> ValueSet {
    ValueSet::from_values(names.iter().map(|n| un.parse_value(n).unwrap()))
}

proptest! {
    #[test]
    fn minimal_representation_keeps_extension(r in any_representation()) {
        let m = r.minimal();
        prop_assert!(m.is_minimal());
        prop_assert_eq!(m.extension(), r.extension());
        prop_assert!(m.len() <= r.len());
        // antichain under dominance
        for (i, a) in m.members().iter().enumerate() {
            for (j, b) in m.members().iter().enumerate() {
                prop_assert!(i == j || !a.dominated_by(b));
            }
        }
        let canonical = r.extension().canonical_representation().unwrap();
        prop_assert_eq!(canonical.extension(), r.extension());
    }

    #[test]
    fn extensions_are_monotone_with_boundaries(r in any_representation()) {
        let e = r.extension();
        prop_assert!(e.is_monotone());
        prop_assert!(e.respects_boundaries());
    }

    #[test]
    fn hex_round_trip(r in any_representation()) {
        let e = r.extension();
        let back = ExtRelation::from_hex(e.universe(), &e.to_hex()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn representation_json_round_trip(r in any_representation()) {
        let j = representation_to_json(&r);
        let back = representation_from_json(r.universe(), &j).unwrap();
        prop_assert_eq!(back.extension(), r.extension());
        let text = serde_json::to_string(&j).unwrap();
        let parsed = parse_relation(r.universe().n(), &text).unwrap();
        prop_assert_eq!(parsed.extension(), r.extension());
    }

    #[test]
    fn role_equivalence_is_an_equivalence(r in any_representation()) {
        let e = r.extension();
        let un = e.universe();
        for a in un.values() {
            prop_assert!(e.role_equivalent(a, a));
            for b in un.values() {
                prop_assert_eq!(e.role_equivalent(a, b), e.role_equivalent(b, a));
                for c in un.values() {
                    if e.role_equivalent(a, b) && e.role_equivalent(b, c) {
                        prop_assert!(e.role_equivalent(a, c));
                    }
                }
            }
        }
        let classes = e.role_classes();
        let union = classes.iter().fold(ValueSet::EMPTY, |s, c| s.union(*c));
        prop_assert_eq!(union, un.full_set());
        prop_assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), un.n());
    }

    #[test]
    fn admissible_sets_are_single_role_classes((name, rule) in small_rule(), r in any_representation()) {
        let m = r.minimal();
        let e = m.extension();
        for x in rule_cells(m.universe(), rule.arity()) {
            let s = pointwise_admissible(&rule, &m, &x).unwrap();
            for a in s.iter() {
                for b in m.universe().values() {
                    prop_assert_eq!(s.contains(b), e.role_equivalent(a, b), "{} at {:?}", name, x);
                }
            }
        }
    }

    #[test]
    fn sampled_four_valued_tables_agree(
        (name, rule) in small_rule(),
        r in representation(4),
        seed in table(4, 2),
    ) {
        let m = r.minimal();
        let t = if rule.arity() == 2 {
            seed
        } else {
            let outs: Vec<TruthValue> = seed.outputs()[..4usize.pow(rule.arity() as u32)].to_vec();
            ConnectiveTable::new(m.universe(), rule.arity(), outs).unwrap()
        };
        prop_assert_eq!(
            satisfies_rule_pointwise(&rule, &m, &t).unwrap(),
            satisfies_rule_oracle(&rule, &m.extension(), &t).unwrap(),
            "{}", name
        );
    }

    #[test]
    fn intersection_inheritance((name, rule) in small_rule(), r in representation(3), seed in table(3, 2)) {
        let m = r.minimal();
        let outs = seed.outputs()[..3usize.pow(rule.arity() as u32)].to_vec();
        let t = ConnectiveTable::new(m.universe(), rule.arity(), outs).unwrap();
        let whole = satisfies_rule_oracle(&rule, &m.extension(), &t).unwrap();
        let each = m
            .members()
            .iter()
            .all(|k| satisfies_rule_oracle(&rule, &ExtRelation::from_mixed(k), &t).unwrap());
        prop_assert_eq!(whole, each, "{}", name);
    }

    #[test]
    fn boundary_admissibility(r in any_representation()) {
        let m = r.minimal();
        let un = m.universe();
        let (f, v) = (un.falsum(), un.verum());
        let and = library_rule("conjunction").unwrap();
        for x in un.values() {
            prop_assert!(pointwise_admissible(&and, &m, &[v, x]).unwrap().contains(x));
            prop_assert!(pointwise_admissible(&and, &m, &[f, x]).unwrap().contains(f));
        }
        let not = library_rule("negation").unwrap();
        prop_assert!(pointwise_admissible(&not, &m, &[v]).unwrap().contains(f));
        prop_assert!(pointwise_admissible(&not, &m, &[f]).unwrap().contains(v));
    }

    #[test]
    fn table_json_round_trip(t in (2usize..=5, 0usize..=2).prop_flat_map(|(n, a)| table(n, a))) {
        let back = ConnectiveTable::from_json(t.universe(), t.arity(), &t.to_json()).unwrap();
        prop_assert_eq!(back, t);
    }
}

#[test]
fn rule_json_round_trip() {
    for name in LIBRARY_NAMES {
        let r = library_rule(name).unwrap();
        let j = r.to_json();
        assert_eq!(RegularityRule::from_json(&j).unwrap(), r, "{name}");
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(parse_rule(&text).unwrap(), r, "{name}");
    }
}

#[test]
fn synthesized_rules_hold_classically() {
    let u2 = u(2);
    let classical = Representation::single(MixedRelation::ss(u2));
    for arity in 0..=2 {
        for f in ClassicalFunction::all(arity) {
            let r = synthesize_classical_rule(&f);
            let t = f.to_table();
            assert!(satisfies_rule_oracle(&r, &classical.extension(), &t).unwrap(), "{}", f.bits());
            assert!(satisfies_rule_pointwise(&r, &classical, &t).unwrap(), "{}", f.bits());
        }
    }
}

#[test]
fn constants_beyond_classical_logic() {
    let const_p = library_rule("const_p").unwrap();
    let const_c = library_rule("const_c").unwrap();
    for n in 2..=5 {
        for m in u(n).mixed_relations() {
            let rel = Relation::from_mixed(m);
            let p = find_connectives(&const_p, &rel).unwrap();
            let c = find_connectives(&const_c, &rel).unwrap();
            assert_eq!(p.exists(), !m.dp().difference(m.dc()).is_empty(), "{}", rel.describe());
            assert_eq!(c.exists(), !m.dc().difference(m.dp()).is_empty(), "{}", rel.describe());
            if m.is_pure() {
                assert!(find_connectives(&library_rule("top").unwrap(), &rel).unwrap().exists());
                assert!(find_connectives(&library_rule("bottom").unwrap(), &rel).unwrap().exists());
            }
        }
    }
}

fn all_rules() -> Vec<(String, RegularityRule)> {
    let mut rules: Vec<(String, RegularityRule)> = LIBRARY_NAMES
        .iter()
        .map(|n| (n.to_string(), library_rule(n).unwrap()))
        .collect();
    for n in 1..=3 {
        for i in 1..=n {
            rules.push((format!("projection({i},{n})"), projection_rule(i, n).unwrap()));
        }
    }
    rules
}

fn bivalent_cells(un: Universe, arity: usize) -> impl Iterator<Item = Vec<TruthValue>> {
    rule_cells(un, arity).filter(move |x| x.iter().all(|&v| un.is_bivalent(v)))
}

#[test]
fn weak_bivalence_for_pure_relations() {
    let rules = all_rules();
    for n in [3, 4] {
        for rel in enumerate_relations(u(n)).unwrap() {
            if !rel.is_pure() {
                continue;
            }
            let un = rel.universe();
            let bivalent = ValueSet::from_values([un.falsum(), un.verum()]);
            for (name, r) in &rules {
                if !find_connectives(r, &rel).unwrap().exists() {
                    continue;
                }
                for x in bivalent_cells(un, r.arity()) {
                    let s = pointwise_admissible(r, rel.representation(), &x).unwrap();
                    assert!(
                        s.intersects(bivalent),
                        "{name} {} {x:?}: {s:?}",
                        rel.describe()
                    );
                }
            }
        }
    }
}

#[test]
fn crossed_pure_pair_is_classical_on_bivalent_inputs() {
    let u4 = u(4);
    let rep = Representation::new(vec![
        MixedRelation::from_sets(u4, set(u4, &["1", "#1"]), set(u4, &["1", "#2"])).unwrap(),
        MixedRelation::from_sets(u4, set(u4, &["1", "#2"]), set(u4, &["1", "#1"])).unwrap(),
    ])
    .unwrap()
    .minimal();
    let bivalent = ValueSet::from_values([u4.falsum(), u4.verum()]);
    for (name, r) in all_rules() {
        for x in bivalent_cells(u4, r.arity()) {
            let s = pointwise_admissible(&r, &rep, &x).unwrap();
            assert!(s.is_subset(bivalent), "{name} {x:?}: {s:?}");
        }
    }
}
