use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::triple::{MultiValue, NeutroTriple};

/// A neutrosophic multi set: a finite universe with a length-P sequence of
/// (T, I, F) triples per element. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct NmSet {
    values: BTreeMap<String, MultiValue>,
    dimension: usize,
}

impl NmSet {
    /// Builds a set from element/value pairs. The universe is the set of
    /// keys, canonicalized by the map ordering; all values must share one
    /// dimension.
    pub fn new(entries: impl IntoIterator<Item = (String, MultiValue)>) -> Result<Self> {
        let mut values = BTreeMap::new();
        let mut dimension = None;
        for (element, value) in entries {
            let p = *dimension.get_or_insert(value.len());
            if value.len() != p {
                return Err(Error::DimensionMismatch {
                    expected: p,
                    actual: value.len(),
                    context: Some(format!("element '{element}'")),
                });
            }
            if values.insert(element.clone(), value).is_some() {
                return Err(Error::DuplicateElement { element });
            }
        }
        let dimension = dimension.ok_or(Error::EmptySequence)?;
        Ok(NmSet { values, dimension })
    }

    /// Rejects truth sequences that are not non-decreasing. Optional strict
    /// mode; the default constructor does not enforce ordering because
    /// complement and alignment legitimately break it.
    pub fn new_strict(entries: impl IntoIterator<Item = (String, MultiValue)>) -> Result<Self> {
        let set = Self::new(entries)?;
        for value in set.values.values() {
            value.check_truth_order()?;
        }
        Ok(set)
    }

    /// The dimension P: common sequence length over all elements.
    pub fn cardinality(&self) -> usize {
        self.dimension
    }

    pub fn universe(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn universe_vec(&self) -> Vec<String> {
        self.values.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, element: &str) -> Option<&MultiValue> {
        self.values.get(element)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &MultiValue)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Extends every sequence to length `n` with fill triples at the end.
    pub fn align_dimension(&self, n: usize) -> Result<NmSet> {
        if n < self.dimension {
            return Err(Error::AlignBelowDimension {
                current: self.dimension,
                requested: n,
            });
        }
        let values = self
            .values
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.align(n)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(NmSet {
            values,
            dimension: n,
        })
    }

    fn same_universe(&self, other: &NmSet) -> Result<()> {
        if self.values.len() != other.values.len()
            || !self.values.keys().eq(other.values.keys())
        {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    /// Aligns both operands to the maximum dimension.
    fn aligned_pair(&self, other: &NmSet) -> Result<(NmSet, NmSet)> {
        self.same_universe(other)?;
        let n = self.dimension.max(other.dimension);
        Ok((self.align_dimension(n)?, other.align_dimension(n)?))
    }

    fn zip_op(
        &self,
        other: &NmSet,
        op: impl Fn(&NeutroTriple, &NeutroTriple) -> NeutroTriple,
    ) -> Result<NmSet> {
        let (a, b) = self.aligned_pair(other)?;
        let values = a
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v.zip_with(&b.values[k], &op)))
            .collect();
        Ok(NmSet {
            values,
            dimension: a.dimension,
        })
    }

    /// Slotwise max T, min I, min F.
    pub fn union(&self, other: &NmSet) -> Result<NmSet> {
        self.zip_op(other, |a, b| a.join(b))
    }

    /// Slotwise min T, max I, max F.
    pub fn intersection(&self, other: &NmSet) -> Result<NmSet> {
        self.zip_op(other, |a, b| a.meet(b))
    }

    /// Algebraic sum on T, product on I and F.
    pub fn addition(&self, other: &NmSet) -> Result<NmSet> {
        self.zip_op(other, |a, b| a.add(b))
    }

    /// Product on T, algebraic sum on I and F.
    pub fn multiplication(&self, other: &NmSet) -> Result<NmSet> {
        self.zip_op(other, |a, b| a.mul(b))
    }

    /// Swap T with F and reflect I, per element and slot.
    pub fn complement(&self) -> NmSet {
        let values = self
            .values
            .iter()
            .map(|(k, v)| (k.clone(), v.map(NeutroTriple::complement)))
            .collect();
        NmSet {
            values,
            dimension: self.dimension,
        }
    }

    /// Componentwise order: T smaller, I larger, F larger on every slot.
    pub fn is_subset_of(&self, other: &NmSet) -> Result<bool> {
        let (a, b) = self.aligned_pair(other)?;
        Ok(a.values.iter().all(|(k, v)| v.le(&b.values[k])))
    }

    /// Exact componentwise equality after dimension alignment.
    pub fn nm_equal(&self, other: &NmSet) -> Result<bool> {
        let (a, b) = self.aligned_pair(other)?;
        Ok(a.values == b.values)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn tr(t: f64, i: f64, f: f64) -> NeutroTriple {
        NeutroTriple::new(t, i, f).unwrap()
    }

    fn mv(triples: &[(f64, f64, f64)]) -> MultiValue {
        MultiValue::new(triples.iter().map(|&(t, i, f)| tr(t, i, f)).collect()).unwrap()
    }

    /// The two-element, dimension-3 sets used throughout the worked examples.
    pub(crate) fn sample_a() -> NmSet {
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

    pub(crate) fn sample_b() -> NmSet {
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

    #[test]
    fn cardinality_of_sample() {
        assert_eq!(sample_a().cardinality(), 3);
        let single = NmSet::new([("x".to_owned(), mv(&[(0.1, 0.1, 0.1)]))]).unwrap();
        assert_eq!(single.cardinality(), 1);
    }

    #[test]
    fn align_dimension_pads_and_reports() {
        let single = NmSet::new([("x".to_owned(), mv(&[(0.3, 0.2, 0.4)]))]).unwrap();
        let padded = single.align_dimension(5).unwrap();
        assert_eq!(padded.cardinality(), 5);
        let triples = padded.value("x").unwrap().triples();
        assert_eq!(triples[0], tr(0.3, 0.2, 0.4));
        assert!(triples[1..].iter().all(|t| t.is_fill()));
        // aligning to the current dimension is a no-op
        assert_eq!(single.align_dimension(1).unwrap(), single);
        assert!(single.align_dimension(0).is_err());
    }

    #[test]
    fn mixed_dimension_entries_rejected() {
        let result = NmSet::new([
            ("x".to_owned(), mv(&[(0.1, 0.1, 0.1)])),
            ("y".to_owned(), mv(&[(0.1, 0.1, 0.1), (0.2, 0.1, 0.1)])),
        ]);
        assert!(result.is_err());
    }

    #[test]
    fn subset_is_reflexive_and_detects_violation() {
        let a = sample_a();
        let b = sample_b();
        assert!(a.is_subset_of(&a).unwrap());
        // at x1, I_A^2 = 0.3 < I_B^2 = 0.4 violates the I direction
        assert!(!a.is_subset_of(&b).unwrap());
    }

    #[test]
    fn intersection_is_subset_of_operand() {
        let a = sample_a();
        let b = sample_b();
        let meet = a.intersection(&b).unwrap();
        assert!(meet.is_subset_of(&a).unwrap());
        assert!(meet.is_subset_of(&b).unwrap());
    }

    #[test]
    fn equality_on_samples() {
        let a = sample_a();
        assert!(a.nm_equal(&a).unwrap());
        assert!(!a.nm_equal(&sample_b()).unwrap());
    }

    #[test]
    fn complement_of_sample_at_x1() {
        let c = sample_a().complement();
        let triples = c.value("x1").unwrap().triples();
        assert_eq!(triples[0], tr(0.4, 0.8, 0.3));
        assert_eq!(triples[1], tr(0.5, 0.7, 0.5));
        assert_eq!(triples[2], tr(0.9, 0.6, 0.6));
    }

    #[test]
    fn complement_is_involution() {
        // exact for dyadic components; decimal literals like 0.2 round under
        // 1 - (1 - i) and are only involutive to within an ulp
        let a = NmSet::new([
            ("x".to_owned(), mv(&[(0.25, 0.75, 0.5), (0.5, 0.125, 1.0)])),
            ("y".to_owned(), mv(&[(0.0, 1.0, 0.0), (1.0, 0.0, 1.0)])),
        ])
        .unwrap();
        assert_eq!(a.complement().complement(), a);

        let b = sample_a();
        let back = b.complement().complement();
        for (element, value) in b.entries() {
            assert!(back.value(element).unwrap().approx_eq(value, 1e-15));
        }
    }

    #[test]
    fn union_of_samples_at_x1() {
        let u = sample_a().union(&sample_b()).unwrap();
        let triples = u.value("x1").unwrap().triples();
        assert_eq!(triples[0], tr(0.4, 0.2, 0.3));
        assert_eq!(triples[1], tr(0.5, 0.3, 0.5));
        assert_eq!(triples[2], tr(0.6, 0.4, 0.4));
    }

    #[test]
    fn intersection_of_samples_at_x1() {
        let m = sample_a().intersection(&sample_b()).unwrap();
        let triples = m.value("x1").unwrap().triples();
        assert_eq!(triples[0], tr(0.3, 0.2, 0.4));
        assert_eq!(triples[1], tr(0.5, 0.4, 0.8));
        assert_eq!(triples[2], tr(0.6, 0.4, 0.9));
    }

    #[test]
    fn union_intersection_idempotent() {
        let a = sample_a();
        assert_eq!(a.union(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn union_auto_aligns_dimensions() {
        let small = NmSet::new([("x".to_owned(), mv(&[(0.3, 0.2, 0.4)]))]).unwrap();
        let big = NmSet::new([("x".to_owned(), mv(&[(0.1, 0.5, 0.5), (0.2, 0.5, 0.5)]))]).unwrap();
        let u = small.union(&big).unwrap();
        assert_eq!(u.cardinality(), 2);
        // the padded slot unions fill with big's slot 2
        assert_eq!(u.value("x").unwrap().triples()[1], tr(0.2, 0.5, 0.5));
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let a = NmSet::new([("x".to_owned(), mv(&[(0.1, 0.1, 0.1)]))]).unwrap();
        let b = NmSet::new([("y".to_owned(), mv(&[(0.1, 0.1, 0.1)]))]).unwrap();
        assert!(matches!(a.union(&b), Err(Error::UniverseMismatch)));
    }

    #[test]
    fn strict_mode_enforces_truth_order() {
        let unordered = [("x".to_owned(), mv(&[(0.5, 0.1, 0.1), (0.3, 0.1, 0.1)]))];
        assert!(NmSet::new(unordered.clone()).is_ok());
        assert!(NmSet::new_strict(unordered).is_err());
    }
}
