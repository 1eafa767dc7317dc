use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::set::NmSet;
use crate::triple::{MultiValue, NeutroTriple};

/// A neutrosophic multi relation over a pair domain C ⊆ source × target.
///
/// Relations may be partial: a pair that is not stored is semantically the
/// all-fill sequence (0, 1, 1)^P. Stored values equal to all-fill are
/// normalized away at construction, so structural equality coincides with
/// semantic equality and serialization is canonical.
#[derive(Debug, Clone, PartialEq)]
pub struct NmRelation {
    source: Vec<String>,
    target: Vec<String>,
    pairs: BTreeMap<(String, String), MultiValue>,
    dimension: usize,
}

impl NmRelation {
    pub fn new(
        source: impl IntoIterator<Item = String>,
        target: impl IntoIterator<Item = String>,
        dimension: usize,
        pairs: impl IntoIterator<Item = ((String, String), MultiValue)>,
    ) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::EmptySequence);
        }
        let source = canonical_universe(source)?;
        let target = canonical_universe(target)?;
        let mut map = BTreeMap::new();
        for ((x, y), value) in pairs {
            if source.binary_search(&x).is_err() || target.binary_search(&y).is_err() {
                return Err(Error::PairOutsideUniverse { x, y });
            }
            if value.len() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    actual: value.len(),
                    context: Some(format!("pair ({x}, {y})")),
                });
            }
            if value.is_all_fill() {
                continue;
            }
            if map.insert((x.clone(), y.clone()), value).is_some() {
                return Err(Error::DuplicateElement {
                    element: format!("({x}, {y})"),
                });
            }
        }
        Ok(NmRelation {
            source,
            target,
            pairs: map,
            dimension,
        })
    }

    /// The empty relation: every pair is fill.
    pub fn empty(
        source: impl IntoIterator<Item = String>,
        target: impl IntoIterator<Item = String>,
        dimension: usize,
    ) -> Result<Self> {
        Self::new(source, target, dimension, [])
    }

    /// The diagonal relation with (1, 0, 0) on every diagonal pair.
    pub fn identity(universe: impl IntoIterator<Item = String>, dimension: usize) -> Result<Self> {
        let universe = canonical_universe(universe)?;
        let crisp = MultiValue::new(vec![NeutroTriple::new(1.0, 0.0, 0.0)?; dimension])?;
        let pairs: Vec<_> = universe
            .iter()
            .map(|x| ((x.clone(), x.clone()), crisp.clone()))
            .collect();
        Self::new(universe.clone(), universe, dimension, pairs)
    }

    pub fn source_universe(&self) -> &[String] {
        &self.source
    }

    pub fn target_universe(&self) -> &[String] {
        &self.target
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    /// Present (non-fill) pairs in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, &str, &MultiValue)> {
        self.pairs
            .iter()
            .map(|((x, y), v)| (x.as_str(), y.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Value at a pair; missing pairs read as all-fill.
    pub fn value_at(&self, x: &str, y: &str) -> MultiValue {
        self.pairs
            .get(&(x.to_owned(), y.to_owned()))
            .cloned()
            .unwrap_or_else(|| MultiValue::fill(self.dimension))
    }

    pub fn align_dimension(&self, n: usize) -> Result<NmRelation> {
        if n < self.dimension {
            return Err(Error::AlignBelowDimension {
                current: self.dimension,
                requested: n,
            });
        }
        let pairs = self
            .pairs
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.align(n)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(NmRelation {
            source: self.source.clone(),
            target: self.target.clone(),
            pairs,
            dimension: n,
        })
    }

    fn same_universes(&self, other: &NmRelation) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::UniverseMismatch);
        }
        Ok(())
    }

    fn aligned_pair(&self, other: &NmRelation) -> Result<(NmRelation, NmRelation)> {
        self.same_universes(other)?;
        let n = self.dimension.max(other.dimension);
        Ok((self.align_dimension(n)?, other.align_dimension(n)?))
    }

    fn zip_op(
        &self,
        other: &NmRelation,
        op: impl Fn(&NeutroTriple, &NeutroTriple) -> NeutroTriple,
    ) -> Result<NmRelation> {
        let (a, b) = self.aligned_pair(other)?;
        // fill op fill = fill for all four pointwise operations, so pairs
        // missing from both operands stay missing
        let keys: std::collections::BTreeSet<_> =
            a.pairs.keys().chain(b.pairs.keys()).cloned().collect();
        let pairs: Vec<_> = keys
            .into_iter()
            .map(|(x, y)| {
                let value = a.value_at(&x, &y).zip_with(&b.value_at(&x, &y), &op);
                ((x, y), value)
            })
            .collect();
        NmRelation::new(a.source, a.target, a.dimension, pairs)
    }

    pub fn union(&self, other: &NmRelation) -> Result<NmRelation> {
        self.zip_op(other, |a, b| a.join(b))
    }

    pub fn intersection(&self, other: &NmRelation) -> Result<NmRelation> {
        self.zip_op(other, |a, b| a.meet(b))
    }

    pub fn addition(&self, other: &NmRelation) -> Result<NmRelation> {
        self.zip_op(other, |a, b| a.add(b))
    }

    pub fn multiplication(&self, other: &NmRelation) -> Result<NmRelation> {
        self.zip_op(other, |a, b| a.mul(b))
    }

    /// Sup-min composition: `s.compose(r)` is S∘R with R: A→B, S: B→C.
    /// T = max over y of min, I and F = min over y of max.
    pub fn compose(&self, r: &NmRelation) -> Result<NmRelation> {
        let s = self;
        if r.target != s.source {
            return Err(Error::CompositionMismatch);
        }
        let n = r.dimension.max(s.dimension);
        let r = r.align_dimension(n)?;
        let s = s.align_dimension(n)?;
        let mut pairs = Vec::new();
        for x in &r.source {
            for z in &s.target {
                let combined = r
                    .target
                    .iter()
                    .map(|y| r.value_at(x, y).zip_with(&s.value_at(y, z), |a, b| a.meet(b)))
                    .reduce(|acc, v| acc.zip_with(&v, |a, b| a.join(b)))
                    .unwrap_or_else(|| MultiValue::fill(n));
                pairs.push(((x.clone(), z.clone()), combined));
            }
        }
        NmRelation::new(r.source, s.target, n, pairs)
    }

    /// Transpose: source and target swap, value at (y, x) is R's at (x, y).
    pub fn inverse(&self) -> NmRelation {
        let pairs = self
            .pairs
            .iter()
            .map(|((x, y), v)| ((y.clone(), x.clone()), v.clone()))
            .collect();
        NmRelation {
            source: self.target.clone(),
            target: self.source.clone(),
            pairs,
            dimension: self.dimension,
        }
    }

    /// Componentwise containment over every pair (missing pairs read as fill).
    pub fn is_subset_of(&self, other: &NmRelation) -> Result<bool> {
        let (a, b) = self.aligned_pair(other)?;
        Ok(a.pairs
            .keys()
            .chain(b.pairs.keys())
            .all(|(x, y)| a.value_at(x, y).le(&b.value_at(x, y))))
    }

    /// Exact equality after dimension alignment.
    pub fn nm_equal(&self, other: &NmRelation) -> Result<bool> {
        let (a, b) = self.aligned_pair(other)?;
        Ok(a.pairs == b.pairs)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        Ok(())
    }

    /// Every diagonal pair present with every slot exactly (1, 0, 0).
    pub fn is_reflexive(&self) -> Result<bool> {
        self.require_square()?;
        let crisp = NeutroTriple::new(1.0, 0.0, 0.0).expect("crisp triple is valid");
        Ok(self.source.iter().all(|x| {
            self.value_at(x, x)
                .triples()
                .iter()
                .all(|triple| *triple == crisp)
        }))
    }

    /// Value at (x, y) equals value at (y, x), exactly, for all pairs.
    pub fn is_symmetric(&self) -> Result<bool> {
        self.require_square()?;
        Ok(self
            .pairs
            .keys()
            .all(|(x, y)| self.value_at(x, y) == self.value_at(y, x)))
    }

    /// R∘R ⊆ R.
    pub fn is_transitive(&self) -> Result<bool> {
        self.require_square()?;
        self.compose(self)?.is_subset_of(self)
    }

    pub fn is_equivalence(&self) -> Result<bool> {
        Ok(self.is_reflexive()? && self.is_symmetric()? && self.is_transitive()?)
    }

    /// R^k = R∘R^(k-1); k = 0 is rejected.
    pub fn power(&self, k: usize) -> Result<NmRelation> {
        self.require_square()?;
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// R̂ = R ∪ R² ∪ R³ ∪ ..., iterated to a fixpoint. Max-min path values
    /// over a finite universe cannot improve beyond simple paths, so the
    /// fixpoint is reached within |universe| powers.
    pub fn transitive_closure(&self) -> Result<NmRelation> {
        self.require_square()?;
        let m = self.source.len().max(1);
        let mut closure = self.clone();
        let mut current = self.clone();
        for _ in 1..m {
            current = self.compose(&current)?;
            let next = closure.union(&current)?;
            if next == closure {
                return Ok(closure);
            }
            closure = next;
        }
        // all powers up to R^m are in; one more step must be a fixpoint
        current = self.compose(&current)?;
        if closure.union(&current)? != closure {
            return Err(Error::ClosureDiverged { iterations: m });
        }
        Ok(closure)
    }
}

fn canonical_universe(elements: impl IntoIterator<Item = String>) -> Result<Vec<String>> {
    let mut universe: Vec<String> = elements.into_iter().collect();
    universe.sort();
    for window in universe.windows(2) {
        if window[0] == window[1] {
            return Err(Error::DuplicateElement {
                element: window[0].clone(),
            });
        }
    }
    Ok(universe)
}

/// Cartesian product A×B as a total relation:
/// T = min(T_A(x), T_B(y)), I = max, F = max, slotwise after alignment.
pub fn cartesian_product(a: &NmSet, b: &NmSet) -> Result<NmRelation> {
    let n = a.cardinality().max(b.cardinality());
    let a = a.align_dimension(n)?;
    let b = b.align_dimension(n)?;
    let mut pairs = Vec::new();
    for (x, va) in a.entries() {
        for (y, vb) in b.entries() {
            let value = va.zip_with(vb, |p, q| p.meet(q));
            pairs.push(((x.to_owned(), y.to_owned()), value));
        }
    }
    NmRelation::new(a.universe_vec(), b.universe_vec(), n, pairs)
}

pub fn cartesian_square(a: &NmSet) -> Result<NmRelation> {
    cartesian_product(a, a)
}

/// Optional containment context: when enforcement is on, every pair's value
/// must be an Nm-subset of the cartesian product of the context sets at that
/// pair. Off by default because partial, freely-valued relations are allowed.
#[derive(Debug, Clone)]
pub struct RelationContext {
    pub source_set: Option<NmSet>,
    pub target_set: Option<NmSet>,
    pub enforce_containment: bool,
}

impl RelationContext {
    pub fn check(&self, relation: &NmRelation) -> Result<()> {
        if !self.enforce_containment {
            return Ok(());
        }
        let (Some(a), Some(b)) = (&self.source_set, &self.target_set) else {
            return Ok(());
        };
        let product = cartesian_product(a, b)?;
        let n = relation.dimension().max(product.dimension());
        let relation = relation.align_dimension(n)?;
        let product = product.align_dimension(n)?;
        for (x, y, value) in relation.entries() {
            if !value.le(&product.value_at(x, y)) {
                return Err(Error::ContainmentViolation {
                    x: x.to_owned(),
                    y: y.to_owned(),
                });
            }
        }
        Ok(())
    }
}
