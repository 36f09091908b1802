//! Published tables used as reference points by the searches.

use crate::kernel::{MixedRelation, Representation, Universe};
use crate::rules::ConnectiveTable;

fn u(n: usize) -> Universe {
    Universe::new(n).expect("small universe")
}

fn binary(n: usize, rows: &[&[&str]]) -> ConnectiveTable {
    ConnectiveTable::binary_from_display_rows(u(n), rows).expect("well-formed reference table")
}

/// Strong Kleene conjunction over three values.
pub fn kleene_and() -> ConnectiveTable {
    binary(3, &[&["1", "#1", "0"], &["#1", "#1", "0"], &["0", "0", "0"]])
}

/// Strong Kleene disjunction over three values.
pub fn kleene_or() -> ConnectiveTable {
    binary(3, &[&["1", "1", "1"], &["1", "#1", "#1"], &["1", "#1", "0"]])
}

/// Strong Kleene negation over three values.
pub fn kleene_not() -> ConnectiveTable {
    ConnectiveTable::unary_from_display(u(3), &["0", "#1", "1"]).expect("well-formed")
}

/// Strong Kleene conditional `max(1 - a, b)`.
pub fn kleene_conditional() -> ConnectiveTable {
    binary(3, &[&["1", "#1", "0"], &["1", "#1", "#1"], &["1", "1", "1"]])
}

pub fn conditional_ss() -> ConnectiveTable {
    binary(3, &[&["1", "0", "0"], &["1", "1", "1"], &["1", "1", "1"]])
}

pub fn conditional_tt() -> ConnectiveTable {
    binary(3, &[&["1", "1", "0"], &["1", "1", "0"], &["1", "1", "1"]])
}

pub fn conditional_st() -> ConnectiveTable {
    binary(3, &[&["1", "#1", "0"], &["1", "#1", "#1"], &["1", "1", "1"]])
}

/// Displayed identically to [`conditional_st`].
pub fn conditional_ts() -> ConnectiveTable {
    conditional_st()
}

/// The Gödel conditional: 1 when `a <= b`, else `b`.
pub fn godel_conditional() -> ConnectiveTable {
    binary(3, &[&["1", "#1", "0"], &["1", "1", "0"], &["1", "1", "1"]])
}

/// `⊨{1,#1},{1,#1} ∩ ⊨{1,#2},{1,#2}`.
pub fn four_valued_pure_pair() -> Representation {
    let u = u(4);
    Representation::new(vec![
        MixedRelation::from_names(u, &["1", "#1"], &["1", "#1"]).expect("valid"),
        MixedRelation::from_names(u, &["1", "#2"], &["1", "#2"]).expect("valid"),
    ])
    .expect("nonempty")
}

/// `⊨{1,#1},{1,#2} ∩ ⊨{1,#2},{1,#1}`.
pub fn four_valued_cross_pair() -> Representation {
    let u = u(4);
    Representation::new(vec![
        MixedRelation::from_names(u, &["1", "#1"], &["1", "#2"]).expect("valid"),
        MixedRelation::from_names(u, &["1", "#2"], &["1", "#1"]).expect("valid"),
    ])
    .expect("nonempty")
    .minimal()
}

/// The unique conditional of [`four_valued_pure_pair`].
pub fn four_valued_pure_conditional() -> ConnectiveTable {
    binary(
        4,
        &[
            &["1", "#1", "#2", "0"],
            &["1", "1", "#2", "#2"],
            &["1", "#1", "1", "#1"],
            &["1", "1", "1", "1"],
        ],
    )
}

/// The unique conditional of [`four_valued_cross_pair`].
pub fn four_valued_cross_conditional() -> ConnectiveTable {
    binary(
        4,
        &[
            &["1", "#1", "#2", "0"],
            &["1", "#1", "1", "#1"],
            &["1", "1", "#2", "#2"],
            &["1", "1", "1", "1"],
        ],
    )
}

/// A five-valued relation with a negation but no conditional.
pub fn five_valued_fact() -> Representation {
    let u = u(5);
    Representation::new(vec![
        MixedRelation::from_names(u, &["1", "#1", "#2"], &["1", "#1"]).expect("valid"),
        MixedRelation::from_names(u, &["1", "#1", "#3"], &["1", "#2"]).expect("valid"),
        MixedRelation::from_names(u, &["1", "#2", "#3"], &["1", "#3"]).expect("valid"),
    ])
    .expect("nonempty")
    .minimal()
}

/// The negation exhibited for [`five_valued_fact`].
pub fn five_valued_fact_negation() -> ConnectiveTable {
    // display order is 1, #1, #2, #3, 0
    ConnectiveTable::unary_from_display(u(5), &["0", "#3", "#2", "#1", "1"]).expect("well-formed")
}
