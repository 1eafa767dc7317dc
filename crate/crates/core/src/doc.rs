//! Canonical JSON documents for sets and relations.
//!
//! Serialization is canonical: universes and entry keys are sorted, field
//! order is fixed, numbers use shortest round-trip decimal rendering. Parsing
//! a serialized document reproduces the value exactly; serializing a parsed
//! canonical document reproduces the text byte for byte.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::NmRelation;
use crate::set::NmSet;
use crate::triple::{MultiValue, NeutroTriple};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub kind: String,
    pub dimension: usize,
    pub universe: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target_universe: Option<Vec<String>>,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub key: Key,
    pub t: Vec<f64>,
    pub i: Vec<f64>,
    pub f: Vec<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Key {
    Element(String),
    Pair([String; 2]),
}

/// A parsed document: either kind of value.
#[derive(Debug, Clone, PartialEq)]
pub enum Parsed {
    Set(NmSet),
    Relation(NmRelation),
}

impl Parsed {
    pub fn into_set(self) -> Result<NmSet> {
        match self {
            Parsed::Set(set) => Ok(set),
            Parsed::Relation(_) => Err(Error::Schema(
                "expected an nmset document, got nmrelation".into(),
            )),
        }
    }

    pub fn into_relation(self) -> Result<NmRelation> {
        match self {
            Parsed::Relation(rel) => Ok(rel),
            Parsed::Set(_) => Err(Error::Schema(
                "expected an nmrelation document, got nmset".into(),
            )),
        }
    }
}

fn entry_value(entry: &Entry, dimension: usize, label: &str) -> Result<MultiValue> {
    for (name, seq) in [("t", &entry.t), ("i", &entry.i), ("f", &entry.f)] {
        if seq.len() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                actual: seq.len(),
                context: Some(format!("entry {label}, sequence '{name}'")),
            });
        }
    }
    let mut triples = Vec::with_capacity(dimension);
    for slot in 0..dimension {
        let triple = NeutroTriple::new(entry.t[slot], entry.i[slot], entry.f[slot]).map_err(
            |err| match err {
                Error::ComponentOutOfRange {
                    component, value, ..
                } => Error::ComponentOutOfRange {
                    component,
                    value,
                    context: Some(format!("entry {label}, slot {}", slot + 1)),
                },
                Error::SumExceedsBound { sum, .. } => Error::SumExceedsBound {
                    sum,
                    context: Some(format!("entry {label}, slot {}", slot + 1)),
                },
                other => other,
            },
        )?;
        triples.push(triple);
    }
    MultiValue::new(triples)
}

/// Parses and validates a document. With `strict_ordering`, set truth
/// sequences must be non-decreasing.
pub fn parse_with_options(text: &str, strict_ordering: bool) -> Result<Parsed> {
    let doc: Document = serde_json::from_str(text)?;
    match doc.kind.as_str() {
        "nmset" => {
            if doc.target_universe.is_some() {
                return Err(Error::Schema(
                    "nmset documents must not carry a target_universe".into(),
                ));
            }
            let mut entries = Vec::new();
            for entry in &doc.entries {
                let Key::Element(element) = &entry.key else {
                    return Err(Error::Schema(
                        "nmset entry keys must be single elements".into(),
                    ));
                };
                let value = entry_value(entry, doc.dimension, &format!("'{element}'"))?;
                entries.push((element.clone(), value));
            }
            let missing: Vec<_> = doc
                .universe
                .iter()
                .filter(|e| !entries.iter().any(|(k, _)| k == *e))
                .collect();
            if let Some(element) = missing.first() {
                return Err(Error::Schema(format!(
                    "universe element '{element}' has no entry"
                )));
            }
            if entries.len() != doc.universe.len() {
                return Err(Error::Schema(
                    "entries reference elements outside the universe".into(),
                ));
            }
            let set = if strict_ordering {
                NmSet::new_strict(entries)?
            } else {
                NmSet::new(entries)?
            };
            Ok(Parsed::Set(set))
        }
        "nmrelation" => {
            let target = doc
                .target_universe
                .clone()
                .unwrap_or_else(|| doc.universe.clone());
            let mut pairs = Vec::new();
            for entry in &doc.entries {
                let Key::Pair([x, y]) = &entry.key else {
                    return Err(Error::Schema(
                        "nmrelation entry keys must be [x, y] pairs".into(),
                    ));
                };
                let value = entry_value(entry, doc.dimension, &format!("({x}, {y})"))?;
                pairs.push(((x.clone(), y.clone()), value));
            }
            let rel = NmRelation::new(doc.universe, target, doc.dimension, pairs)?;
            Ok(Parsed::Relation(rel))
        }
        other => Err(Error::Schema(format!("unknown document kind '{other}'"))),
    }
}

pub fn parse(text: &str) -> Result<Parsed> {
    parse_with_options(text, false)
}

fn split_value(value: &MultiValue) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let triples = value.triples();
    (
        triples.iter().map(NeutroTriple::t).collect(),
        triples.iter().map(NeutroTriple::i).collect(),
        triples.iter().map(NeutroTriple::f).collect(),
    )
}

pub fn set_document(set: &NmSet) -> Document {
    let entries = set
        .entries()
        .map(|(element, value)| {
            let (t, i, f) = split_value(value);
            Entry {
                key: Key::Element(element.to_owned()),
                t,
                i,
                f,
            }
        })
        .collect();
    Document {
        kind: "nmset".into(),
        dimension: set.cardinality(),
        universe: set.universe_vec(),
        target_universe: None,
        entries,
    }
}

pub fn relation_document(rel: &NmRelation) -> Document {
    let entries = rel
        .entries()
        .map(|(x, y, value)| {
            let (t, i, f) = split_value(value);
            Entry {
                key: Key::Pair([x.to_owned(), y.to_owned()]),
                t,
                i,
                f,
            }
        })
        .collect();
    let source = rel.source_universe().to_vec();
    let target = rel.target_universe().to_vec();
    Document {
        kind: "nmrelation".into(),
        dimension: rel.dimension(),
        universe: source,
        target_universe: if rel.is_square() { None } else { Some(target) },
        entries,
    }
}

fn render(document: &Document) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("document serialization");
    text.push('\n');
    text
}

pub fn serialize_set(set: &NmSet) -> String {
    render(&set_document(set))
}

pub fn serialize_relation(rel: &NmRelation) -> String {
    render(&relation_document(rel))
}

pub fn serialize(parsed: &Parsed) -> String {
    match parsed {
        Parsed::Set(set) => serialize_set(set),
        Parsed::Relation(rel) => serialize_relation(rel),
    }
}
