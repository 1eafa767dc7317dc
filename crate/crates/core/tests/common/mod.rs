//! Shared fixtures: the published two-element worked example (sets A and B,
//! relations R and S) and the values its source prints for A×B, R∪S, and
//! R∩S. Several printed slots disagree with the defining formulas; the
//! acceptance suite recomputes everything from the definitions and reports
//! the divergences.
#![allow(dead_code)] // not every test file uses every fixture

use nmrel::{MultiValue, NeutroTriple, NmRelation, NmSet};

pub fn tr(t: f64, i: f64, f: f64) -> NeutroTriple {
    NeutroTriple::new(t, i, f).unwrap()
}

pub fn mv(triples: &[(f64, f64, f64)]) -> MultiValue {
    MultiValue::new(triples.iter().map(|&(t, i, f)| tr(t, i, f)).collect()).unwrap()
}

pub fn universe() -> Vec<String> {
    vec!["x1".to_owned(), "x2".to_owned()]
}

pub fn set_a() -> NmSet {
    NmSet::new([
        (
            "x1".to_owned(),
            mv(&[(0.3, 0.2, 0.4), (0.5, 0.3, 0.5), (0.6, 0.4, 0.9)]),
        ),
        (
            "x2".to_owned(),
            mv(&[(0.4, 0.4, 0.6), (0.5, 0.5, 0.2), (0.7, 0.1, 0.7)]),
        ),
    ])
    .unwrap()
}

pub fn set_b() -> NmSet {
    NmSet::new([
        (
            "x1".to_owned(),
            mv(&[(0.4, 0.2, 0.3), (0.5, 0.4, 0.8), (0.6, 0.4, 0.4)]),
        ),
        (
            "x2".to_owned(),
            mv(&[(0.6, 0.3, 0.1), (0.7, 0.5, 0.7), (0.8, 0.7, 0.6)]),
        ),
    ])
    .unwrap()
}

/// Partial relation from the example; (x2, x2) is absent.
pub fn relation_r() -> NmRelation {
    NmRelation::new(
        universe(),
        universe(),
        3,
        [
            (
                ("x1".to_owned(), "x1".to_owned()),
                mv(&[(0.2, 0.2, 0.3), (0.6, 0.4, 0.8), (0.9, 0.5, 0.9)]),
            ),
            (
                ("x1".to_owned(), "x2".to_owned()),
                mv(&[(0.3, 0.2, 0.1), (0.9, 0.8, 0.8), (0.8, 0.7, 0.9)]),
            ),
            (
                ("x2".to_owned(), "x1".to_owned()),
                mv(&[(0.1, 0.2, 0.2), (0.9, 0.5, 0.8), (0.6, 0.4, 0.7)]),
            ),
        ],
    )
    .unwrap()
}

pub fn relation_s() -> NmRelation {
    NmRelation::new(
        universe(),
        universe(),
        3,
        [
            (
                ("x1".to_owned(), "x1".to_owned()),
                mv(&[(0.1, 0.2, 0.1), (0.7, 0.5, 0.9), (0.9, 0.7, 0.9)]),
            ),
            (
                ("x1".to_owned(), "x2".to_owned()),
                mv(&[(0.3, 0.2, 0.1), (0.9, 0.8, 0.8), (0.8, 0.8, 0.9)]),
            ),
            (
                ("x2".to_owned(), "x1".to_owned()),
                mv(&[(0.1, 0.2, 0.2), (0.9, 0.9, 0.8), (0.7, 0.4, 0.9)]),
            ),
        ],
    )
    .unwrap()
}

/// One published pair entry: T, I, F sequences as printed.
pub type PrintedEntry = (&'static str, &'static str, [[f64; 3]; 3]);

/// The published table for A×B.
pub fn printed_product() -> Vec<PrintedEntry> {
    vec![
        ("x1", "x1", [[0.3, 0.5, 0.6], [0.2, 0.4, 0.4], [0.3, 0.8, 0.9]]),
        ("x1", "x2", [[0.3, 0.7, 0.8], [0.2, 0.5, 0.7], [0.1, 0.7, 0.9]]),
        ("x2", "x1", [[0.4, 0.5, 0.6], [0.2, 0.5, 0.4], [0.3, 0.8, 0.7]]),
        ("x2", "x2", [[0.4, 0.7, 0.8], [0.3, 0.5, 0.7], [0.1, 0.7, 0.7]]),
    ]
}

/// The published table for R∪S.
pub fn printed_union() -> Vec<PrintedEntry> {
    vec![
        ("x1", "x1", [[0.2, 0.6, 0.9], [0.2, 0.4, 0.5], [0.3, 0.8, 0.9]]),
        ("x1", "x2", [[0.3, 0.9, 0.8], [0.2, 0.8, 0.7], [0.1, 0.8, 0.9]]),
        ("x2", "x1", [[0.1, 0.9, 0.6], [0.2, 0.5, 0.4], [0.2, 0.8, 0.7]]),
    ]
}

/// The published table for R∩S.
pub fn printed_intersection() -> Vec<PrintedEntry> {
    vec![
        ("x1", "x1", [[0.1, 0.7, 0.9], [0.2, 0.5, 0.7], [0.1, 0.9, 0.9]]),
        ("x1", "x2", [[0.3, 0.9, 0.8], [0.2, 0.8, 0.8], [0.1, 0.8, 0.9]]),
        ("x2", "x1", [[0.1, 0.9, 0.7], [0.2, 0.9, 0.4], [0.2, 0.8, 0.9]]),
    ]
}
