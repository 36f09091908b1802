//! Partial orders on truth values and the consequence relations they
//! induce.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{ExtRelation, MixedRelation, Representation, TruthValue, Universe, ValueSet};

/// A partial order with `0` at the bottom and `1` at the top.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthOrder {
    universe: Universe,
    /// `leq[a]` is the set of values `b` with `a <= b`.
    leq: Vec<ValueSet>,
}

impl TruthOrder {
    /// Closes the given `a <= b` pairs under reflexivity and transitivity,
    /// adds the bounds, and rejects cycles.
    pub fn from_pairs(u: Universe, pairs: &[(TruthValue, TruthValue)]) -> Result<Self> {
        let n = u.n();
        let mut leq: Vec<ValueSet> = u
            .values()
            .map(|a| ValueSet::singleton(a).with(u.verum()))
            .collect();
        leq[u.falsum().index()] = u.full_set();
        for &(a, b) in pairs {
            for v in [a, b] {
                if v.index() >= n {
                    return Err(Error::ValueOutOfRange { index: v.index(), n });
                }
            }
            leq[a.index()] = leq[a.index()].with(b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                let reach = leq[a]
                    .iter()
                    .fold(leq[a], |acc, b| acc.union(leq[b.index()]));
                if reach != leq[a] {
                    leq[a] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for a in u.values() {
            for b in u.values() {
                if a != b && leq[a.index()].contains(b) && leq[b.index()].contains(a) {
                    return Err(Error::InvalidOrder(format!(
                        "{} and {} are ordered both ways",
                        u.name(a),
                        u.name(b)
                    )));
                }
            }
        }
        Ok(Self { universe: u, leq })
    }

    /// Parses `0<#1<#2<1` chains, or comma-separated pairs and chains such
    /// as `0<#1,0<#2,#1<1,#2<1`. An empty string gives the order with only
    /// the bounds.
    pub fn parse(u: Universe, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let chain = part
                .split('<')
                .map(|name| u.parse_value(name.trim()))
                .collect::<Result<Vec<_>>>()?;
            if chain.len() < 2 {
                return Err(Error::InvalidOrder(format!("`{part}` is not a chain")));
            }
            pairs.extend(chain.windows(2).map(|w| (w[0], w[1])));
        }
        Self::from_pairs(u, &pairs)
    }

    /// The chain `0 < #1 < ... < #(N-2) < 1`.
    pub fn chain(u: Universe) -> Self {
        let vals: Vec<TruthValue> = u.values().collect();
        let pairs: Vec<_> = vals.windows(2).map(|w| (w[0], w[1])).collect();
        Self::from_pairs(u, &pairs).expect("a chain is an order")
    }

    /// Only the bounds are ordered.
    pub fn degenerate(u: Universe) -> Self {
        Self::from_pairs(u, &[]).expect("bounds only")
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn leq(&self, a: TruthValue, b: TruthValue) -> bool {
        self.leq[a.index()].contains(b)
    }

    pub fn is_upset(&self, s: ValueSet) -> bool {
        s.iter().all(|a| self.leq[a.index()].is_subset(s))
    }

    /// Covering pairs, as accepted by [`TruthOrder::parse`].
    pub fn to_spec(&self) -> String {
        let u = self.universe;
        let mut parts = Vec::new();
        for a in u.values() {
            for b in u.values() {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let covered = u
                    .values()
                    .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                if !covered {
                    parts.push(format!("{}<{}", u.name(a), u.name(b)));
                }
            }
        }
        parts.join(",")
    }
}

impl fmt::Debug for TruthOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthOrder({})", self.to_spec())
    }
}

/// `γ ⊨ δ` iff some premise lies below some conclusion, or `0 ∈ γ`, or
/// `1 ∈ δ`.
pub fn order_relation(o: &TruthOrder) -> ExtRelation {
    let u = o.universe;
    ExtRelation::from_fn(u, |g, d| {
        g.contains(u.falsum())
            || d.contains(u.verum())
            || g.iter().any(|x| o.leq[x.index()].intersects(d))
    })
}

/// Pure relations on every designated upset, sorted.
pub fn upset_representation(o: &TruthOrder) -> Representation {
    let u = o.universe;
    let members = u
        .designated_sets()
        .into_iter()
        .filter(|d| o.is_upset(d.set()))
        .map(|d| MixedRelation::new(u, d, d).expect("same universe"))
        .collect();
    Representation::new(members)
        .expect("{1} is always an upset")
        .minimal()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Total,
    Degenerate,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrderClass {
    pub kind: OrderKind,
    /// Set when the order is total and degenerate at once (at most one
    /// indeterminate).
    pub also_degenerate: bool,
}

pub fn classify_order(o: &TruthOrder) -> OrderClass {
    let ind: Vec<TruthValue> = o.universe.indeterminates().collect();
    let mut any = false;
    let mut all = true;
    for (i, &a) in ind.iter().enumerate() {
        for &b in &ind[i + 1..] {
            let cmp = o.leq(a, b) || o.leq(b, a);
            any |= cmp;
            all &= cmp;
        }
    }
    let degenerate = !any;
    match (all, degenerate) {
        (true, d) => OrderClass {
            kind: OrderKind::Total,
            also_degenerate: d,
        },
        (false, true) => OrderClass {
            kind: OrderKind::Degenerate,
            also_degenerate: true,
        },
        (false, false) => OrderClass {
            kind: OrderKind::Other,
            also_degenerate: false,
        },
    }
}

/// Most values for [`all_orders`].
pub const ALL_ORDERS_LIMIT: usize = 6;

/// Every partial order over `u` with `0` least and `1` greatest, found by
/// trying every strict relation among the indeterminates.
pub fn all_orders(u: Universe) -> Result<Vec<TruthOrder>> {
    if u.n() > ALL_ORDERS_LIMIT {
        return Err(Error::TooLarge {
            what: "order enumeration universe",
            limit: ALL_ORDERS_LIMIT,
            requested: u.n(),
        });
    }
    let ind: Vec<TruthValue> = u.indeterminates().collect();
    let slots: Vec<(usize, usize)> = (0..ind.len())
        .flat_map(|i| (0..ind.len()).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let has = |i: usize, j: usize| {
            slots
                .iter()
                .position(|&s| s == (i, j))
                .is_some_and(|k| mask >> k & 1 == 1)
        };
        let transitive = slots.iter().enumerate().all(|(k, &(i, j))| {
            mask >> k & 1 == 0 || (0..ind.len()).all(|l| l == i || l == j || !has(j, l) || has(i, l))
        });
        let asymmetric = slots
            .iter()
            .enumerate()
            .all(|(k, &(i, j))| mask >> k & 1 == 0 || !has(j, i));
        if !(transitive && asymmetric) {
            continue;
        }
        let pairs: Vec<_> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(i, j))| (ind[i], ind[j]))
            .collect();
        out.push(TruthOrder::from_pairs(u, &pairs)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_valued_order_is_sstt() {
        let u = Universe::new(3).unwrap();
        let o = TruthOrder::chain(u);
        let sstt = Representation::new(vec![MixedRelation::ss(u), MixedRelation::tt(u)]).unwrap();
        assert_eq!(order_relation(&o), sstt.extension());
        assert_eq!(upset_representation(&o), sstt.minimal());
        let c = classify_order(&o);
        assert_eq!(c.kind, OrderKind::Total);
        assert!(c.also_degenerate);
    }

    #[test]
    fn degenerate_four_valued() {
        let u = Universe::new(4).unwrap();
        let o = TruthOrder::parse(u, "0<#1,0<#2,#1<1,#2<1").unwrap();
        assert_eq!(o, TruthOrder::degenerate(u));
        let v = |s: &str| u.parse_value(s).unwrap();
        let e = order_relation(&o);
        assert!(!e.holds(ValueSet::singleton(v("#1")), ValueSet::singleton(v("#2"))));
        assert!(e.holds(ValueSet::singleton(v("0")), ValueSet::EMPTY));
        assert_eq!(upset_representation(&o).len(), 4);
        assert_eq!(classify_order(&o).kind, OrderKind::Degenerate);
    }

    #[test]
    fn chain_parse_and_classify() {
        let u = Universe::new(4).unwrap();
        let o = TruthOrder::parse(u, "0<#1<#2<1").unwrap();
        assert_eq!(o, TruthOrder::chain(u));
        assert_eq!(upset_representation(&o).len(), 3);
        assert_eq!(TruthOrder::parse(u, &o.to_spec()).unwrap(), o);
        let u5 = Universe::new(5).unwrap();
        let other = TruthOrder::parse(u5, "#1<#2").unwrap();
        assert_eq!(classify_order(&other).kind, OrderKind::Other);
    }

    #[test]
    fn rejects_cycles_and_bad_names() {
        let u = Universe::new(4).unwrap();
        assert!(TruthOrder::parse(u, "#1<#2<#1").is_err());
        assert!(TruthOrder::parse(u, "1<#1").is_err());
        assert!(TruthOrder::parse(u, "#1<#7").is_err());
        assert!(TruthOrder::parse(u, "#1").is_err());
    }

    #[test]
    fn order_counts() {
        // labelled posets on 0, 1, 2, 3 points
        for (n, count) in [(2, 1), (3, 1), (4, 3), (5, 19), (6, 219)] {
            assert_eq!(all_orders(Universe::new(n).unwrap()).unwrap().len(), count);
        }
    }
}
