use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One (truth, indeterminacy, falsity) component, each in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeutroTriple {
    t: f64,
    i: f64,
    f: f64,
}

/// The value of an absent occurrence or missing pair: no truth, full
/// indeterminacy and falsity. Neutral for union, absorbing for intersection.
pub const FILL: NeutroTriple = NeutroTriple {
    t: 0.0,
    i: 1.0,
    f: 1.0,
};

impl NeutroTriple {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        Self::check_component("t", t, None)?;
        Self::check_component("i", i, None)?;
        Self::check_component("f", f, None)?;
        let sum = t + i + f;
        if sum > 3.0 {
            return Err(Error::SumExceedsBound { sum, context: None });
        }
        Ok(NeutroTriple { t, i, f })
    }

    /// Like `new` but clamps arithmetic results back into [0, 1].
    /// Algebraic sum/product stay in range mathematically; rounding may
    /// overshoot by an ulp.
    pub(crate) fn new_clamped(t: f64, i: f64, f: f64) -> Self {
        NeutroTriple {
            t: t.clamp(0.0, 1.0),
            i: i.clamp(0.0, 1.0),
            f: f.clamp(0.0, 1.0),
        }
    }

    fn check_component(name: &'static str, value: f64, context: Option<&str>) -> Result<()> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(Error::ComponentOutOfRange {
                component: name,
                value,
                context: context.map(str::to_owned),
            });
        }
        Ok(())
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn i(&self) -> f64 {
        self.i
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn is_fill(&self) -> bool {
        *self == FILL
    }

    /// max T, min I, min F.
    pub fn join(&self, other: &Self) -> Self {
        NeutroTriple {
            t: self.t.max(other.t),
            i: self.i.min(other.i),
            f: self.f.min(other.f),
        }
    }

    /// min T, max I, max F.
    pub fn meet(&self, other: &Self) -> Self {
        NeutroTriple {
            t: self.t.min(other.t),
            i: self.i.max(other.i),
            f: self.f.max(other.f),
        }
    }

    /// Algebraic sum on T, product on I and F.
    pub fn add(&self, other: &Self) -> Self {
        NeutroTriple::new_clamped(
            self.t + other.t - self.t * other.t,
            self.i * other.i,
            self.f * other.f,
        )
    }

    /// Product on T, algebraic sum on I and F.
    pub fn mul(&self, other: &Self) -> Self {
        NeutroTriple::new_clamped(
            self.t * other.t,
            self.i + other.i - self.i * other.i,
            self.f + other.f - self.f * other.f,
        )
    }

    /// Swap T and F, reflect I around 1/2.
    pub fn complement(&self) -> Self {
        NeutroTriple {
            t: self.f,
            i: 1.0 - self.i,
            f: self.t,
        }
    }

    /// Componentwise order: T smaller, I larger, F larger.
    pub fn le(&self, other: &Self) -> bool {
        self.t <= other.t && self.i >= other.i && self.f >= other.f
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.t - other.t).abs() <= tol
            && (self.i - other.i).abs() <= tol
            && (self.f - other.f).abs() <= tol
    }
}

/// Length-P parallel sequence of triples attached to one element or pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiValue(Vec<NeutroTriple>);

impl MultiValue {
    pub fn new(triples: Vec<NeutroTriple>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(MultiValue(triples))
    }

    pub fn singleton(triple: NeutroTriple) -> Self {
        MultiValue(vec![triple])
    }

    /// All-fill sequence of length `n`.
    pub fn fill(n: usize) -> Self {
        debug_assert!(n >= 1);
        MultiValue(vec![FILL; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn triples(&self) -> &[NeutroTriple] {
        &self.0
    }

    pub fn is_all_fill(&self) -> bool {
        self.0.iter().all(NeutroTriple::is_fill)
    }

    /// Extend to length `n` by appending fill triples.
    pub fn align(&self, n: usize) -> Result<Self> {
        if n < self.len() {
            return Err(Error::AlignBelowDimension {
                current: self.len(),
                requested: n,
            });
        }
        let mut triples = self.0.clone();
        triples.resize(n, FILL);
        Ok(MultiValue(triples))
    }

    /// Truth components non-decreasing in the occurrence index.
    pub fn check_truth_order(&self) -> Result<()> {
        for (slot, pair) in self.0.windows(2).enumerate() {
            if pair[0].t() > pair[1].t() {
                return Err(Error::TruthOrderViolation {
                    slot: slot + 1,
                    context: None,
                });
            }
        }
        Ok(())
    }

    pub fn zip_with(&self, other: &Self, op: impl Fn(&NeutroTriple, &NeutroTriple) -> NeutroTriple) -> Self {
        debug_assert_eq!(self.len(), other.len());
        MultiValue(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| op(a, b))
                .collect(),
        )
    }

    pub fn map(&self, op: impl Fn(&NeutroTriple) -> NeutroTriple) -> Self {
        MultiValue(self.0.iter().map(op).collect())
    }

    /// Componentwise order over all slots.
    pub fn le(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a.le(b))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .0
                .iter()
                .zip(other.0.iter())
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}
