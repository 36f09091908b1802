//! Text and JSON forms of relations.
//!
//! JSON: a list of members `[{"dp": ["1","#1"], "dc": ["1"]}, ...]`, or an
//! object `{"n": 4, "members": [...]}` that also fixes the universe.
//!
//! Inline: members joined by `&`, each either a name (`ss`, `tt`, `st`,
//! `ts`, with `s = {1}` and `t` = every nonzero value) or `DP|DC` with
//! comma-separated value names, braces optional: `{1,#1}|{1} & ss`.

use serde::{Deserialize, Serialize};

use super::{MixedRelation, Representation, Universe, ValueSet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberJson {
    pub dp: Vec<String>,
    pub dc: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub n: usize,
    pub members: Vec<MemberJson>,
}

pub fn member_to_json(m: &MixedRelation) -> MemberJson {
    let u = m.universe();
    MemberJson {
        dp: u.set_names(m.dp()),
        dc: u.set_names(m.dc()),
    }
}

pub fn representation_to_json(r: &Representation) -> Vec<MemberJson> {
    r.members().iter().map(member_to_json).collect()
}

fn parse_names<S: AsRef<str>>(u: Universe, names: &[S]) -> Result<ValueSet> {
    names
        .iter()
        .map(|n| u.parse_value(n.as_ref()))
        .collect::<Result<Vec<_>>>()
        .map(ValueSet::from_values)
}

pub fn member_from_json(u: Universe, m: &MemberJson) -> Result<MixedRelation> {
    MixedRelation::from_sets(u, parse_names(u, &m.dp)?, parse_names(u, &m.dc)?)
}

pub fn representation_from_json(u: Universe, members: &[MemberJson]) -> Result<Representation> {
    Representation::new(
        members
            .iter()
            .map(|m| member_from_json(u, m))
            .collect::<Result<Vec<_>>>()?,
    )
}

fn parse_inline_member(u: Universe, text: &str) -> Result<MixedRelation> {
    let text = text.trim();
    match text {
        "ss" => return Ok(MixedRelation::ss(u)),
        "tt" => return Ok(MixedRelation::tt(u)),
        "st" => return Ok(MixedRelation::st(u)),
        "ts" => return Ok(MixedRelation::ts(u)),
        _ => {}
    }
    let (dp, dc) = text
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("expected `DP|DC` or a relation name, got `{text}`")))?;
    let set = |s: &str| -> Result<ValueSet> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let names: Vec<&str> = inner
            .split(',')
            .map(str::trim)
            .filter(|n| !n.is_empty())
            .collect();
        parse_names(u, &names)
    };
    MixedRelation::from_sets(u, set(dp)?, set(dc)?)
}

/// Parses a relation given inline or as JSON. A JSON object carrying `n`
/// overrides `default_n`.
pub fn parse_relation(default_n: usize, text: &str) -> Result<Representation> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let members: Vec<MemberJson> = serde_json::from_str(trimmed)?;
        return representation_from_json(Universe::new(default_n)?, &members);
    }
    if trimmed.starts_with('{') && trimmed.contains("\"members\"") {
        let rel: RelationJson = serde_json::from_str(trimmed)?;
        return representation_from_json(Universe::new(rel.n)?, &rel.members);
    }
    let u = Universe::new(default_n)?;
    Representation::new(
        trimmed
            .split('&')
            .map(|m| parse_inline_member(u, m))
            .collect::<Result<Vec<_>>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_json_agree() {
        let a = parse_relation(4, "{1,#1}|{1} & {1,#2}|{1,#1}").unwrap();
        let b = parse_relation(
            4,
            r##"[{"dp":["1","#1"],"dc":["1"]},{"dp":["1","#2"],"dc":["1","#1"]}]"##,
        )
        .unwrap();
        assert_eq!(a, b);
        let c = parse_relation(
            3,
            r##"{"n":4,"members":[{"dp":["1","#1"],"dc":["1"]},{"dp":["#2","1"],"dc":["#1","1"]}]}"##,
        )
        .unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn named_members() {
        let r = parse_relation(3, "ss & tt").unwrap();
        let u = r.universe();
        assert_eq!(r.members(), &[MixedRelation::ss(u), MixedRelation::tt(u)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_relation(3, "{0,1}|{1}").is_err());
        assert!(parse_relation(3, "{1,#2}|{1}").is_err());
        assert!(parse_relation(3, "nonsense").is_err());
        assert!(parse_relation(3, "[]").is_err());
    }

    #[test]
    fn json_names_round_trip() {
        let r = parse_relation(4, "{1,#1}|{1,#2}").unwrap();
        let json = representation_to_json(&r);
        assert_eq!(json[0].dp, vec!["1", "#1"]);
        assert_eq!(representation_from_json(r.universe(), &json).unwrap(), r);
    }
}
