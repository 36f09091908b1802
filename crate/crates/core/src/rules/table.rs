use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::kernel::{TruthValue, Universe};

/// The truth-function of an `n`-ary connective, stored flat with the first
/// argument as the most significant digit (so for binary tables the first
/// argument selects the row).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConnectiveTable {
    universe: Universe,
    arity: usize,
    outputs: Vec<TruthValue>,
}

/// Number of input tuples of an `arity`-ary function over `u`.
pub(crate) fn cell_count(u: Universe, arity: usize) -> usize {
    u.n().pow(arity as u32)
}

/// The input tuple stored at flat position `index`.
pub(crate) fn cell_tuple(u: Universe, arity: usize, mut index: usize) -> Vec<TruthValue> {
    let n = u.n();
    let mut out = vec![TruthValue(0); arity];
    for slot in out.iter_mut().rev() {
        *slot = TruthValue((index % n) as u8);
        index /= n;
    }
    out
}

/// Steps `x` to the next tuple in flat order; returns false after the last.
pub(crate) fn next_tuple(u: Universe, x: &mut [TruthValue]) -> bool {
    for slot in x.iter_mut().rev() {
        if slot.index() + 1 < u.n() {
            *slot = TruthValue(slot.0 + 1);
            return true;
        }
        *slot = TruthValue(0);
    }
    false
}

/// All cells of a table in flat order, without per-cell allocation.
pub(crate) fn all_cells(u: Universe, arity: usize, mut f: impl FnMut(usize, &[TruthValue]) -> bool) -> bool {
    let mut x = vec![TruthValue(0); arity];
    let mut i = 0;
    loop {
        if !f(i, &x) {
            return false;
        }
        i += 1;
        if !next_tuple(u, &mut x) {
            return true;
        }
    }
}

impl ConnectiveTable {
    pub fn new(universe: Universe, arity: usize, outputs: Vec<TruthValue>) -> Result<Self> {
        let expected = cell_count(universe, arity);
        if outputs.len() != expected {
            return Err(Error::Parse(format!(
                "a {arity}-ary table over {} values needs {expected} entries, got {}",
                universe.n(),
                outputs.len()
            )));
        }
        if let Some(v) = outputs.iter().find(|v| v.index() >= universe.n()) {
            return Err(Error::ValueOutOfRange {
                index: v.index(),
                n: universe.n(),
            });
        }
        Ok(Self {
            universe,
            arity,
            outputs,
        })
    }

    pub fn from_fn(
        universe: Universe,
        arity: usize,
        mut f: impl FnMut(&[TruthValue]) -> TruthValue,
    ) -> Self {
        let outputs = (0..cell_count(universe, arity))
            .map(|i| f(&cell_tuple(universe, arity, i)))
            .collect();
        Self {
            universe,
            arity,
            outputs,
        }
    }

    pub fn constant(universe: Universe, arity: usize, v: TruthValue) -> Self {
        Self::from_fn(universe, arity, |_| v)
    }

    /// Binary table from rows listed in display order (`1, #1, ..., 0`),
    /// each row listing outputs for the second argument in the same order.
    pub fn binary_from_display_rows(universe: Universe, rows: &[&[&str]]) -> Result<Self> {
        let order = display_order(universe);
        let n = universe.n();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse(format!("expected a {n}x{n} table")));
        }
        let mut outputs = vec![TruthValue(0); n * n];
        for (ri, row) in rows.iter().enumerate() {
            for (ci, name) in row.iter().enumerate() {
                let a = order[ri].index();
                let b = order[ci].index();
                outputs[a * n + b] = universe.parse_value(name)?;
            }
        }
        Self::new(universe, 2, outputs)
    }

    /// Unary table from outputs listed in display order.
    pub fn unary_from_display(universe: Universe, outs: &[&str]) -> Result<Self> {
        let order = display_order(universe);
        if outs.len() != universe.n() {
            return Err(Error::Parse(format!("expected {} outputs", universe.n())));
        }
        let mut outputs = vec![TruthValue(0); universe.n()];
        for (i, name) in outs.iter().enumerate() {
            outputs[order[i].index()] = universe.parse_value(name)?;
        }
        Self::new(universe, 1, outputs)
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn outputs(&self) -> &[TruthValue] {
        &self.outputs
    }

    pub fn cell_count(&self) -> usize {
        self.outputs.len()
    }

    pub fn cell_tuple(&self, index: usize) -> Vec<TruthValue> {
        cell_tuple(self.universe, self.arity, index)
    }

    pub fn index_of(&self, args: &[TruthValue]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        let n = self.universe.n();
        args.iter().fold(0, |acc, v| acc * n + v.index())
    }

    pub fn get(&self, args: &[TruthValue]) -> TruthValue {
        self.outputs[self.index_of(args)]
    }

    pub fn apply1(&self, a: TruthValue) -> TruthValue {
        self.get(&[a])
    }

    pub fn apply2(&self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.get(&[a, b])
    }

    /// Nested JSON arrays of value names indexed by value index
    /// (`0, #1, ..., 1`), first argument outermost.
    pub fn to_json(&self) -> Value {
        fn nest(t: &ConnectiveTable, depth: usize, offset: usize, stride: usize) -> Value {
            if depth == t.arity {
                return Value::String(t.universe.name(t.outputs[offset]));
            }
            let n = t.universe.n();
            let sub = stride / n;
            Value::Array(
                (0..n)
                    .map(|i| nest(t, depth + 1, offset + i * sub, sub))
                    .collect(),
            )
        }
        nest(self, 0, 0, self.outputs.len())
    }

    pub fn from_json(universe: Universe, arity: usize, v: &Value) -> Result<Self> {
        fn flatten(u: Universe, depth: usize, v: &Value, out: &mut Vec<TruthValue>) -> Result<()> {
            if depth == 0 {
                let name = v
                    .as_str()
                    .ok_or_else(|| Error::Parse("table entries must be value names".into()))?;
                out.push(u.parse_value(name)?);
                return Ok(());
            }
            let arr = v
                .as_array()
                .filter(|a| a.len() == u.n())
                .ok_or_else(|| Error::Parse(format!("expected an array of {} entries", u.n())))?;
            for item in arr {
                flatten(u, depth - 1, item, out)?;
            }
            Ok(())
        }
        let mut out = Vec::new();
        flatten(universe, arity, v, &mut out)?;
        Self::new(universe, arity, out)
    }

    /// Text rendering in display order; binary tables get a header row and
    /// column, rows are the first operand.
    pub fn render(&self) -> String {
        let u = self.universe;
        let order = display_order(u);
        let width = order.iter().map(|v| u.name(*v).len()).max().unwrap_or(1);
        let cell = |s: String| format!("{s:>width$}");
        match self.arity {
            0 => u.name(self.outputs[0]),
            1 => {
                let head: Vec<String> = order.iter().map(|v| cell(u.name(*v))).collect();
                let vals: Vec<String> = order
                    .iter()
                    .map(|v| cell(u.name(self.apply1(*v))))
                    .collect();
                format!(
                    "{} | {}\n{}-+-{}\n{} | {}\n",
                    cell("x".into()),
                    head.join(" "),
                    "-".repeat(width),
                    "-".repeat(head.join(" ").len()),
                    cell("C".into()),
                    vals.join(" ")
                )
            }
            2 => {
                let head: Vec<String> = order.iter().map(|v| cell(u.name(*v))).collect();
                let mut s = format!("{} | {}\n", cell(String::new()), head.join(" "));
                s.push_str(&format!(
                    "{}-+-{}\n",
                    "-".repeat(width),
                    "-".repeat(head.join(" ").len())
                ));
                for &a in &order {
                    let row: Vec<String> = order
                        .iter()
                        .map(|&b| cell(u.name(self.apply2(a, b))))
                        .collect();
                    s.push_str(&format!("{} | {}\n", cell(u.name(a)), row.join(" ")));
                }
                s
            }
            _ => {
                let mut s = String::new();
                for i in 0..self.outputs.len() {
                    let args: Vec<String> =
                        self.cell_tuple(i).iter().map(|v| u.name(*v)).collect();
                    s.push_str(&format!(
                        "({}) -> {}\n",
                        args.join(","),
                        u.name(self.outputs[i])
                    ));
                }
                s
            }
        }
    }
}

impl fmt::Display for ConnectiveTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `1, #1, ..., #(N-2), 0`: the order tables are printed in.
pub fn display_order(u: Universe) -> Vec<TruthValue> {
    let mut order = vec![u.verum()];
    order.extend(u.indeterminates());
    order.push(u.falsum());
    order
}

/// A classical truth-function `{0,1}^n -> {0,1}`, row `r` holding the
/// output for the tuple whose binary digits spell `r` (first argument most
/// significant).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalFunction {
    arity: usize,
    outputs: Vec<bool>,
}

impl ClassicalFunction {
    pub fn new(arity: usize, outputs: Vec<bool>) -> Result<Self> {
        if arity > super::MAX_ARITY {
            return Err(Error::TooLarge {
                what: "classical function arity",
                limit: super::MAX_ARITY,
                requested: arity,
            });
        }
        if outputs.len() != 1 << arity {
            return Err(Error::Parse(format!(
                "a {arity}-ary classical function needs {} output bits, got {}",
                1usize << arity,
                outputs.len()
            )));
        }
        Ok(Self { arity, outputs })
    }

    /// From a bit string such as `0111` (binary disjunction).
    pub fn from_bits(arity: usize, bits: &str) -> Result<Self> {
        let outputs = bits
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("bad bit `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(arity, outputs)
    }

    pub fn from_fn(arity: usize, f: impl Fn(&[bool]) -> bool) -> Self {
        let outputs = (0..1usize << arity)
            .map(|r| f(&Self::row_inputs(arity, r)))
            .collect();
        Self { arity, outputs }
    }

    /// Every classical function of the given arity, by bit-string order.
    pub fn all(arity: usize) -> Vec<Self> {
        let rows = 1usize << arity;
        (0u64..(1u64 << rows))
            .map(|code| Self {
                arity,
                outputs: (0..rows).map(|r| code >> (rows - 1 - r) & 1 == 1).collect(),
            })
            .collect()
    }

    pub fn row_inputs(arity: usize, row: usize) -> Vec<bool> {
        (0..arity).map(|i| row >> (arity - 1 - i) & 1 == 1).collect()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn outputs(&self) -> &[bool] {
        &self.outputs
    }

    pub fn eval(&self, args: &[bool]) -> bool {
        let row = args.iter().fold(0usize, |acc, &b| acc << 1 | b as usize);
        self.outputs[row]
    }

    pub fn bits(&self) -> String {
        self.outputs.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// The same function as a table over the two-valued universe.
    pub fn to_table(&self) -> ConnectiveTable {
        let u = Universe::new(2).expect("two values");
        ConnectiveTable::from_fn(u, self.arity, |args| {
            let bools: Vec<bool> = args.iter().map(|v| *v == u.verum()).collect();
            if self.eval(&bools) {
                u.verum()
            } else {
                u.falsum()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_rows_map_to_indices() {
        let u = Universe::new(3).unwrap();
        // Strong Kleene conjunction
        let t = ConnectiveTable::binary_from_display_rows(
            u,
            &[&["1", "#1", "0"], &["#1", "#1", "0"], &["0", "0", "0"]],
        )
        .unwrap();
        for a in u.values() {
            for b in u.values() {
                assert_eq!(t.apply2(a, b), a.min(b));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let u = Universe::new(3).unwrap();
        let t = ConnectiveTable::from_fn(u, 2, |x| x[0].max(x[1]));
        let j = t.to_json();
        assert_eq!(j[0][2], Value::String("1".into()));
        assert_eq!(ConnectiveTable::from_json(u, 2, &j).unwrap(), t);
        assert!(ConnectiveTable::from_json(u, 1, &j).is_err());
    }

    #[test]
    fn classical_bits() {
        let or = ClassicalFunction::from_bits(2, "0111").unwrap();
        assert!(!or.eval(&[false, false]));
        assert!(or.eval(&[false, true]));
        assert_eq!(ClassicalFunction::all(2).len(), 16);
        assert_eq!(ClassicalFunction::all(2)[7].bits(), "0111");
        assert!(ClassicalFunction::from_bits(2, "011").is_err());
        assert!(ClassicalFunction::from_bits(1, "2a").is_err());
    }

    #[test]
    fn render_layout() {
        let u = Universe::new(3).unwrap();
        let t = ConnectiveTable::from_fn(u, 2, |x| x[0].min(x[1]));
        let text = t.render();
        let first = text.lines().next().unwrap();
        assert!(first.trim_start().starts_with("|"));
        assert!(first.contains("1 #1  0"));
    }
}
