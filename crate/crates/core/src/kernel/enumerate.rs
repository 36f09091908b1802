use std::collections::HashMap;

use super::{ExtRelation, MixedRelation, Relation, Representation, TruthValue, Universe};
use crate::error::{Error, Result};

/// Largest universe for which every subset of mixed relations is visited.
pub const EXHAUSTIVE_LIMIT: usize = 4;

fn intersection_of(exts: &[ExtRelation], mask: u64) -> ExtRelation {
    let mut bits = mask;
    let first = bits.trailing_zeros() as usize;
    bits &= bits - 1;
    let mut e = exts[first].clone();
    while bits != 0 {
        e.intersect_with(&exts[bits.trailing_zeros() as usize]);
        bits &= bits - 1;
    }
    e
}

/// Every distinct intersective mixed relation over `u`, paired with the
/// minimal representation of (one of) its generating sets, sorted by
/// serialized extension.
pub fn enumerate_relations(u: Universe) -> Result<Vec<Relation>> {
    if u.n() > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive enumeration universe",
            limit: EXHAUSTIVE_LIMIT,
            requested: u.n(),
        });
    }
    let mixed = u.mixed_relations();
    let exts: Vec<ExtRelation> = mixed.iter().map(ExtRelation::from_mixed).collect();
    let mut seen: HashMap<ExtRelation, u64> = HashMap::new();
    for mask in 1u64..(1u64 << mixed.len()) {
        seen.entry(intersection_of(&exts, mask)).or_insert(mask);
    }
    let mut out: Vec<(String, Relation)> = seen
        .into_iter()
        .map(|(ext, mask)| {
            let members = (0..mixed.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| mixed[i])
                .collect();
            let rep = Representation::new(members)
                .expect("nonempty mask")
                .minimal();
            let rel = Relation {
                extension: ext,
                representation: rep,
            };
            (rel.extension.to_hex(), rel)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// All minimum-cardinality sets of mixed relations whose intersection is
/// `e`, found by exhaustive subset search.
pub fn all_minimal_representations(e: &ExtRelation) -> Result<Vec<Representation>> {
    let u = e.universe();
    if u.n() > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "exhaustive minimal-representation search universe",
            limit: EXHAUSTIVE_LIMIT,
            requested: u.n(),
        });
    }
    let candidates = e.containing_mixed();
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let exts: Vec<ExtRelation> = candidates.iter().map(ExtRelation::from_mixed).collect();
    let mut best: Option<u32> = None;
    let mut found: Vec<u64> = Vec::new();
    for mask in 1u64..(1u64 << candidates.len()) {
        let size = mask.count_ones();
        if best.is_some_and(|b| size > b) {
            continue;
        }
        if intersection_of(&exts, mask) == *e {
            if best.is_some_and(|b| size == b) {
                found.push(mask);
            } else {
                best = Some(size);
                found = vec![mask];
            }
        }
    }
    let mut reps: Vec<Representation> = found
        .into_iter()
        .map(|mask| {
            let mut members: Vec<MixedRelation> = (0..candidates.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| candidates[i])
                .collect();
            members.sort();
            Representation::new(members).expect("nonempty mask")
        })
        .collect();
    reps.sort();
    Ok(reps)
}

/// Counts intersective mixed relations as nonempty dominance antichains of
/// mixed relations, without materialising extensions.
pub fn count_relations_by_antichains(u: Universe) -> Result<u64> {
    let mixed = u.mixed_relations();
    if mixed.len() > 64 {
        return Err(Error::TooLarge {
            what: "antichain counting universe",
            limit: 5,
            requested: u.n(),
        });
    }
    let m = mixed.len();
    // later[i]: elements after i that are incomparable with i
    let later: Vec<u64> = (0..m)
        .map(|i| {
            (i + 1..m)
                .filter(|&j| !mixed[i].dominated_by(&mixed[j]) && !mixed[j].dominated_by(&mixed[i]))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    fn count(allowed: u64, later: &[u64]) -> u64 {
        let mut total = 0;
        let mut bits = allowed;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            total += 1 + count(allowed & later[i], later);
        }
        total
    }
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    Ok(count(all, &later))
}

/// One equivalence class of relations up to renaming the indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientClass {
    /// Least serialized extension over all renamings.
    pub representative: String,
    /// Catalog positions of the members.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientView {
    pub classes: Vec<QuotientClass>,
    /// `class_of[i]` is the class index of catalog entry `i`.
    pub class_of: Vec<usize>,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Value renamings that fix `0` and `1` and permute the indeterminates.
pub fn indeterminate_permutations(u: Universe) -> Vec<Vec<TruthValue>> {
    let ind: Vec<usize> = u.indeterminates().map(|v| v.index()).collect();
    permutations(&ind)
        .into_iter()
        .map(|p| {
            let mut perm = vec![u.falsum()];
            perm.extend(p.into_iter().map(|i| TruthValue(i as u8)));
            perm.push(u.verum());
            perm
        })
        .collect()
}

/// Groups catalog entries whose extensions coincide after renaming the
/// indeterminates. Classes are ordered by representative.
pub fn quotient_by_indeterminate_permutation(catalog: &[Relation]) -> QuotientView {
    let Some(first) = catalog.first() else {
        return QuotientView {
            classes: Vec::new(),
            class_of: Vec::new(),
        };
    };
    let perms = indeterminate_permutations(first.universe());
    let keys: Vec<String> = catalog
        .iter()
        .map(|r| {
            perms
                .iter()
                .map(|p| r.extension().permuted(p).to_hex())
                .min()
                .expect("at least the identity permutation")
        })
        .collect();
    let mut reps: Vec<String> = keys.clone();
    reps.sort();
    reps.dedup();
    let index: HashMap<&str, usize> = reps.iter().enumerate().map(|(i, k)| (k.as_str(), i)).collect();
    let class_of: Vec<usize> = keys.iter().map(|k| index[k.as_str()]).collect();
    let mut classes: Vec<QuotientClass> = reps
        .iter()
        .map(|k| QuotientClass {
            representative: k.clone(),
            members: Vec::new(),
        })
        .collect();
    for (i, &c) in class_of.iter().enumerate() {
        classes[c].members.push(i);
    }
    QuotientView { classes, class_of }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_census_counts() {
        for (n, expected) in [(2, 1), (3, 5)] {
            let u = Universe::new(n).unwrap();
            assert_eq!(enumerate_relations(u).unwrap().len(), expected);
        }
        assert!(enumerate_relations(Universe::new(5).unwrap()).is_err());
    }

    #[test]
    fn three_valued_quotient_is_trivial() {
        let u = Universe::new(3).unwrap();
        let cat = enumerate_relations(u).unwrap();
        let q = quotient_by_indeterminate_permutation(&cat);
        assert_eq!(q.classes.len(), 5);
    }

    #[test]
    fn swapped_indeterminates_share_a_class() {
        let u = Universe::new(4).unwrap();
        let a = Relation::from_mixed(MixedRelation::from_names(u, &["1", "#1"], &["1", "#1"]).unwrap());
        let b = Relation::from_mixed(MixedRelation::from_names(u, &["1", "#2"], &["1", "#2"]).unwrap());
        let q = quotient_by_indeterminate_permutation(&[a, b]);
        assert_eq!(q.classes.len(), 1);
        assert_eq!(q.class_of, vec![0, 0]);
    }

    #[test]
    fn antichain_count_matches_small_enumeration() {
        for n in 2..=3 {
            let u = Universe::new(n).unwrap();
            assert_eq!(
                count_relations_by_antichains(u).unwrap() as usize,
                enumerate_relations(u).unwrap().len()
            );
        }
    }

    #[test]
    fn minimal_representations_of_small_relations() {
        let u = Universe::new(3).unwrap();
        let st = Representation::single(MixedRelation::st(u));
        assert_eq!(all_minimal_representations(&st.extension()).unwrap(), vec![st]);
        let sstt = Representation::new(vec![MixedRelation::ss(u), MixedRelation::tt(u)]).unwrap();
        assert_eq!(
            all_minimal_representations(&sstt.extension()).unwrap(),
            vec![sstt]
        );
    }
}
