//! Seeded law checking: randomized trials, exhaustive small-grid
//! enumeration, and counterexample search for the negative claims.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::doc::{relation_document, Document};
use crate::error::{Error, Result};
use crate::relation::NmRelation;
use crate::set::NmSet;
use crate::triple::{MultiValue, NeutroTriple};

/// Tolerance for laws involving algebraic sum/product.
pub const ARITHMETIC_TOL: f64 = 1e-12;

/// Enumeration budget for exhaustive checks.
pub const EXHAUSTIVE_BUDGET: u128 = 5_000_000;

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub seed: u64,
    pub universe_size: usize,
    pub dimension: usize,
    pub value_grid: Option<Vec<f64>>,
    pub partial_probability: f64,
}

impl GenConfig {
    pub fn new(seed: u64) -> Self {
        GenConfig {
            seed,
            universe_size: 3,
            dimension: 1,
            value_grid: None,
            partial_probability: 0.25,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.universe_size < 1 {
            return Err(Error::InvalidConfig("universe_size must be >= 1".into()));
        }
        if self.dimension < 1 {
            return Err(Error::InvalidConfig("dimension must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.partial_probability) {
            return Err(Error::InvalidConfig(
                "partial_probability must be in [0, 1]".into(),
            ));
        }
        if let Some(grid) = &self.value_grid {
            if grid.is_empty() {
                return Err(Error::InvalidConfig("value_grid must be non-empty".into()));
            }
            if grid.iter().any(|v| !(0.0..=1.0).contains(v)) {
                return Err(Error::InvalidConfig(
                    "value_grid values must be in [0, 1]".into(),
                ));
            }
        }
        Ok(())
    }

    fn universe(&self) -> Vec<String> {
        (0..self.universe_size).map(|k| format!("e{k}")).collect()
    }

    /// Per-trial RNG: one stream per trial so execution order cannot change
    /// which values a trial sees.
    fn rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        rng
    }
}

fn draw_component(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> f64 {
    match &cfg.value_grid {
        Some(grid) => grid[rng.random_range(0..grid.len())],
        None => rng.random::<f64>(),
    }
}

fn draw_value(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> MultiValue {
    let triples = (0..cfg.dimension)
        .map(|_| {
            let t = draw_component(cfg, rng);
            let i = draw_component(cfg, rng);
            let f = draw_component(cfg, rng);
            NeutroTriple::new(t, i, f).expect("drawn components are in range")
        })
        .collect();
    MultiValue::new(triples).expect("dimension >= 1")
}

pub fn gen_nmset(cfg: &GenConfig) -> NmSet {
    gen_nmset_trial(cfg, 0)
}

pub fn gen_nmset_trial(cfg: &GenConfig, trial: u64) -> NmSet {
    let mut rng = cfg.rng(trial);
    let entries: Vec<_> = cfg
        .universe()
        .into_iter()
        .map(|element| {
            let value = draw_value(cfg, &mut rng);
            (element, value)
        })
        .collect();
    NmSet::new(entries).expect("generated entries are valid")
}

pub fn gen_relation(cfg: &GenConfig) -> NmRelation {
    gen_relation_trial(cfg, 0)
}

pub fn gen_relation_trial(cfg: &GenConfig, trial: u64) -> NmRelation {
    let mut rng = cfg.rng(trial);
    gen_relation_with(cfg, &mut rng)
}

fn gen_relation_with(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> NmRelation {
    let universe = cfg.universe();
    let mut pairs = Vec::new();
    for x in &universe {
        for y in &universe {
            let omit = rng.random::<f64>() < cfg.partial_probability;
            let value = draw_value(cfg, rng);
            if !omit {
                pairs.push(((x.clone(), y.clone()), value));
            }
        }
    }
    NmRelation::new(universe.clone(), universe, cfg.dimension, pairs)
        .expect("generated pairs are valid")
}

fn rebuild(
    rel: &NmRelation,
    pairs: BTreeMap<(String, String), MultiValue>,
) -> NmRelation {
    NmRelation::new(
        rel.source_universe().to_vec(),
        rel.target_universe().to_vec(),
        rel.dimension(),
        pairs,
    )
    .expect("rebuilt pairs are valid")
}

/// Copies the (x, y) value onto (y, x) for x <= y in canonical order.
pub fn symmetrize(rel: &NmRelation) -> NmRelation {
    let mut pairs: BTreeMap<(String, String), MultiValue> = BTreeMap::new();
    for x in rel.source_universe() {
        for y in rel.target_universe() {
            if x > y {
                continue;
            }
            let value = rel.value_at(x, y);
            if !value.is_all_fill() {
                pairs.insert((x.clone(), y.clone()), value.clone());
                pairs.insert((y.clone(), x.clone()), value);
            }
        }
    }
    rebuild(rel, pairs)
}

pub fn gen_symmetric(cfg: &GenConfig) -> NmRelation {
    gen_symmetric_trial(cfg, 0)
}

pub fn gen_symmetric_trial(cfg: &GenConfig, trial: u64) -> NmRelation {
    symmetrize(&gen_relation_trial(cfg, trial))
}

pub fn gen_transitive(cfg: &GenConfig) -> NmRelation {
    gen_transitive_trial(cfg, 0)
}

pub fn gen_transitive_trial(cfg: &GenConfig, trial: u64) -> NmRelation {
    gen_relation_trial(cfg, trial)
        .transitive_closure()
        .expect("generated relation is square")
}

pub fn gen_reflexive(cfg: &GenConfig) -> NmRelation {
    gen_reflexive_trial(cfg, 0)
}

pub fn gen_reflexive_trial(cfg: &GenConfig, trial: u64) -> NmRelation {
    let rel = gen_relation_trial(cfg, trial);
    let crisp = MultiValue::new(vec![
        NeutroTriple::new(1.0, 0.0, 0.0).expect("crisp triple");
        cfg.dimension
    ])
    .expect("dimension >= 1");
    let mut pairs: BTreeMap<_, _> = rel
        .entries()
        .map(|(x, y, v)| ((x.to_owned(), y.to_owned()), v.clone()))
        .collect();
    for x in rel.source_universe() {
        pairs.insert((x.clone(), x.clone()), crisp.clone());
    }
    rebuild(&rel, pairs)
}

/// Symmetry up to a componentwise tolerance; used for the +/× laws where
/// values come from floating-point arithmetic rather than min/max selection.
fn approx_symmetric(rel: &NmRelation, tol: f64) -> Result<bool> {
    if rel.source_universe() != rel.target_universe() {
        return Err(Error::NotSquare);
    }
    Ok(rel
        .entries()
        .all(|(x, y, v)| v.approx_eq(&rel.value_at(y, x), tol)))
}

/// Outcome of one verification suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LawReport {
    pub law_name: String,
    pub trials: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Vec<Document>>,
    pub seed: u64,
    pub elapsed_ms: f64,
    /// Trials that passed the law's joint filter, when the law has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter_hits: Option<u64>,
}

/// A replayable witness for one of the negative claims.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub claim: String,
    pub seed: u64,
    pub trial: u64,
    pub inputs: Vec<Document>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawName {
    InverseInvolution,
    CompositionInverse,
    SymmetricIffSelfInverse,
    InversePreservesSymmetry,
    SymmetryUnion,
    SymmetryIntersection,
    SymmetryAddition,
    SymmetryMultiplication,
    TransitiveInverse,
    TransitiveIntersection,
    TransitiveSquare,
    RemarkCommutingCompositionSymmetric,
}

pub const LAW_NAMES: [&str; 12] = [
    "inverse_involution",
    "composition_inverse",
    "symmetric_iff_self_inverse",
    "inverse_preserves_symmetry",
    "symmetry_union",
    "symmetry_intersection",
    "symmetry_addition",
    "symmetry_multiplication",
    "transitive_inverse",
    "transitive_intersection",
    "transitive_square",
    "remark_commuting_composition_symmetric",
];

impl LawName {
    pub fn parse(name: &str) -> Result<Self> {
        use LawName::*;
        Ok(match name {
            "inverse_involution" => InverseInvolution,
            "composition_inverse" => CompositionInverse,
            "symmetric_iff_self_inverse" => SymmetricIffSelfInverse,
            "inverse_preserves_symmetry" => InversePreservesSymmetry,
            "symmetry_union" => SymmetryUnion,
            "symmetry_intersection" => SymmetryIntersection,
            "symmetry_addition" => SymmetryAddition,
            "symmetry_multiplication" => SymmetryMultiplication,
            "transitive_inverse" => TransitiveInverse,
            "transitive_intersection" => TransitiveIntersection,
            "transitive_square" => TransitiveSquare,
            "remark_commuting_composition_symmetric" => RemarkCommutingCompositionSymmetric,
            other => return Err(Error::UnknownLaw(other.to_owned())),
        })
    }

    pub fn as_str(&self) -> &'static str {
        use LawName::*;
        match self {
            InverseInvolution => "inverse_involution",
            CompositionInverse => "composition_inverse",
            SymmetricIffSelfInverse => "symmetric_iff_self_inverse",
            InversePreservesSymmetry => "inverse_preserves_symmetry",
            SymmetryUnion => "symmetry_union",
            SymmetryIntersection => "symmetry_intersection",
            SymmetryAddition => "symmetry_addition",
            SymmetryMultiplication => "symmetry_multiplication",
            TransitiveInverse => "transitive_inverse",
            TransitiveIntersection => "transitive_intersection",
            TransitiveSquare => "transitive_square",
            RemarkCommutingCompositionSymmetric => "remark_commuting_composition_symmetric",
        }
    }

    pub fn arity(&self) -> usize {
        use LawName::*;
        match self {
            InverseInvolution | SymmetricIffSelfInverse | InversePreservesSymmetry
            | TransitiveInverse | TransitiveSquare => 1,
            CompositionInverse
            | SymmetryUnion
            | SymmetryIntersection
            | SymmetryAddition
            | SymmetryMultiplication
            | TransitiveIntersection
            | RemarkCommutingCompositionSymmetric => 2,
        }
    }

    /// Constructive generator for one randomized trial.
    fn generate(&self, cfg: &GenConfig, trial: u64) -> Vec<NmRelation> {
        use LawName::*;
        match self {
            InverseInvolution => vec![gen_relation_trial(cfg, trial)],
            // alternate free and symmetric inputs so both directions of the
            // iff are exercised
            SymmetricIffSelfInverse => {
                if trial % 2 == 0 {
                    vec![gen_relation_trial(cfg, trial)]
                } else {
                    vec![gen_symmetric_trial(cfg, trial)]
                }
            }
            InversePreservesSymmetry => vec![gen_symmetric_trial(cfg, trial)],
            TransitiveInverse | TransitiveSquare => vec![gen_transitive_trial(cfg, trial)],
            CompositionInverse => vec![
                gen_relation_trial(cfg, trial.wrapping_mul(2)),
                gen_relation_trial(cfg, trial.wrapping_mul(2).wrapping_add(1)),
            ],
            SymmetryUnion | SymmetryIntersection | SymmetryAddition | SymmetryMultiplication
            | RemarkCommutingCompositionSymmetric => vec![
                gen_symmetric_trial(cfg, trial.wrapping_mul(2)),
                gen_symmetric_trial(cfg, trial.wrapping_mul(2).wrapping_add(1)),
            ],
            TransitiveIntersection => vec![
                gen_transitive_trial(cfg, trial.wrapping_mul(2)),
                gen_transitive_trial(cfg, trial.wrapping_mul(2).wrapping_add(1)),
            ],
        }
    }

    /// Precondition on exhaustively enumerated inputs. Randomized trials use
    /// the constructive generators instead.
    fn admits(&self, inputs: &[NmRelation]) -> Result<bool> {
        use LawName::*;
        match self {
            InverseInvolution | CompositionInverse | SymmetricIffSelfInverse => Ok(true),
            InversePreservesSymmetry
            | SymmetryUnion
            | SymmetryIntersection
            | SymmetryAddition
            | SymmetryMultiplication
            | RemarkCommutingCompositionSymmetric => {
                for rel in inputs {
                    if !rel.is_symmetric()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            TransitiveInverse | TransitiveSquare | TransitiveIntersection => {
                for rel in inputs {
                    if !rel.is_transitive()? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    /// Joint filter applied after generation; only the conditional remark
    /// law has one.
    fn joint_filter(&self, inputs: &[NmRelation]) -> Result<bool> {
        match self {
            LawName::RemarkCommutingCompositionSymmetric => {
                let rs = inputs[0].compose(&inputs[1])?;
                let sr = inputs[1].compose(&inputs[0])?;
                Ok(rs == sr)
            }
            _ => Ok(true),
        }
    }

    fn has_filter(&self) -> bool {
        matches!(self, LawName::RemarkCommutingCompositionSymmetric)
    }

    fn check(&self, inputs: &[NmRelation]) -> Result<bool> {
        use LawName::*;
        match self {
            InverseInvolution => Ok(inputs[0].inverse().inverse() == inputs[0]),
            CompositionInverse => {
                let (r, s) = (&inputs[0], &inputs[1]);
                let lhs = s.compose(r)?.inverse();
                let rhs = r.inverse().compose(&s.inverse())?;
                Ok(lhs == rhs)
            }
            SymmetricIffSelfInverse => {
                let rel = &inputs[0];
                Ok(rel.is_symmetric()? == rel.nm_equal(&rel.inverse())?)
            }
            InversePreservesSymmetry => inputs[0].inverse().is_symmetric(),
            SymmetryUnion => inputs[0].union(&inputs[1])?.is_symmetric(),
            SymmetryIntersection => inputs[0].intersection(&inputs[1])?.is_symmetric(),
            SymmetryAddition => approx_symmetric(&inputs[0].addition(&inputs[1])?, ARITHMETIC_TOL),
            SymmetryMultiplication => {
                approx_symmetric(&inputs[0].multiplication(&inputs[1])?, ARITHMETIC_TOL)
            }
            TransitiveInverse => inputs[0].inverse().is_transitive(),
            TransitiveIntersection => inputs[0].intersection(&inputs[1])?.is_transitive(),
            TransitiveSquare => inputs[0].power(2)?.is_transitive(),
            RemarkCommutingCompositionSymmetric => inputs[0].compose(&inputs[1])?.is_symmetric(),
        }
    }
}

fn documents(inputs: &[NmRelation]) -> Vec<Document> {
    inputs.iter().map(relation_document).collect()
}

/// Runs `trials` independently seeded trials of a registered law.
pub fn check_law(law_name: &str, cfg: &GenConfig, trials: u64) -> Result<LawReport> {
    let law = LawName::parse(law_name)?;
    cfg.validate()?;
    let start = Instant::now();
    let mut failures = 0;
    let mut filter_hits = 0;
    let mut first_counterexample = None;
    for trial in 0..trials {
        let inputs = law.generate(cfg, trial);
        if !law.joint_filter(&inputs)? {
            continue;
        }
        filter_hits += 1;
        if !law.check(&inputs)? {
            failures += 1;
            if first_counterexample.is_none() {
                first_counterexample = Some(documents(&inputs));
            }
        }
    }
    Ok(LawReport {
        law_name: law.as_str().to_owned(),
        trials,
        failures,
        first_counterexample,
        seed: cfg.seed,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        filter_hits: law.has_filter().then_some(filter_hits),
    })
}

pub const CLAIM_NAMES: [&str; 4] = [
    "union_not_transitive",
    "addition_not_transitive",
    "multiplication_not_transitive",
    "composition_not_symmetric",
];

/// Searches for a witness refuting the universal version of a negative
/// claim: a pair of transitive relations whose combination is not
/// transitive, or a symmetric pair with an asymmetric composite.
pub fn find_counterexample(
    claim: &str,
    cfg: &GenConfig,
    max_trials: u64,
) -> Result<Option<Witness>> {
    if !CLAIM_NAMES.contains(&claim) {
        return Err(Error::UnknownClaim(claim.to_owned()));
    }
    cfg.validate()?;
    for trial in 0..max_trials {
        let (left, right) = match claim {
            "composition_not_symmetric" => (
                gen_symmetric_trial(cfg, trial.wrapping_mul(2)),
                gen_symmetric_trial(cfg, trial.wrapping_mul(2).wrapping_add(1)),
            ),
            _ => (
                gen_transitive_trial(cfg, trial.wrapping_mul(2)),
                gen_transitive_trial(cfg, trial.wrapping_mul(2).wrapping_add(1)),
            ),
        };
        let holds = match claim {
            "union_not_transitive" => left.union(&right)?.is_transitive()?,
            "addition_not_transitive" => left.addition(&right)?.is_transitive()?,
            "multiplication_not_transitive" => left.multiplication(&right)?.is_transitive()?,
            "composition_not_symmetric" => left.compose(&right)?.is_symmetric()?,
            _ => unreachable!(),
        };
        if !holds {
            return Ok(Some(Witness {
                claim: claim.to_owned(),
                seed: cfg.seed,
                trial,
                inputs: documents(&[left, right]),
            }));
        }
    }
    Ok(None)
}

/// Enumerates every assignment of grid values to `slots` positions.
fn for_each_assignment(
    grid: &[f64],
    slots: usize,
    mut visit: impl FnMut(&[f64]) -> Result<()>,
) -> Result<()> {
    let mut indices = vec![0usize; slots];
    let mut values = vec![grid[0]; slots];
    loop {
        visit(&values)?;
        let mut pos = 0;
        loop {
            if pos == slots {
                return Ok(());
            }
            indices[pos] += 1;
            if indices[pos] < grid.len() {
                values[pos] = grid[indices[pos]];
                break;
            }
            indices[pos] = 0;
            values[pos] = grid[0];
            pos += 1;
        }
    }
}

fn relation_from_components(
    universe: &[String],
    dimension: usize,
    value_at: impl Fn(usize, usize, usize) -> (f64, f64, f64),
) -> NmRelation {
    let mut pairs = Vec::new();
    for (xi, x) in universe.iter().enumerate() {
        for (yi, y) in universe.iter().enumerate() {
            let triples = (0..dimension)
                .map(|slot| {
                    let (t, i, f) = value_at(xi, yi, slot);
                    NeutroTriple::new(t, i, f).expect("grid values are in range")
                })
                .collect();
            pairs.push((
                (x.clone(), y.clone()),
                MultiValue::new(triples).expect("dimension >= 1"),
            ));
        }
    }
    NmRelation::new(universe.to_vec(), universe.to_vec(), dimension, pairs)
        .expect("enumerated pairs are valid")
}

/// Exhaustively checks a law over all relations with components from `grid`.
///
/// Single-input laws enumerate the full relation space. Two-input laws
/// exploit that every operation and predicate acts componentwise: a failure
/// over the full product space implies a failure in one component family, so
/// sweeping all pairs of single-component assignments (with the other two
/// components held at values that are symmetric, transitive, and preserved
/// by every operation) is exhaustive over the product space at a fraction of
/// the cost.
pub fn exhaustive_check(
    law_name: &str,
    grid: &[f64],
    universe_size: usize,
    dimension: usize,
) -> Result<LawReport> {
    let law = LawName::parse(law_name)?;
    if grid.is_empty() || grid.iter().any(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::InvalidConfig("grid values must be in [0, 1]".into()));
    }
    if universe_size < 1 || dimension < 1 {
        return Err(Error::InvalidConfig(
            "universe_size and dimension must be >= 1".into(),
        ));
    }
    let start = Instant::now();
    let g = grid.len() as u128;
    let slots = dimension * universe_size * universe_size;
    let required: u128 = match law.arity() {
        1 => g.checked_pow(3 * slots as u32),
        _ => g
            .checked_pow(slots as u32)
            .and_then(|per| per.checked_mul(per))
            .and_then(|sq| sq.checked_mul(3)),
    }
    .ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget: EXHAUSTIVE_BUDGET,
    })?;
    if required > EXHAUSTIVE_BUDGET {
        return Err(Error::BudgetExceeded {
            required,
            budget: EXHAUSTIVE_BUDGET,
        });
    }

    let universe: Vec<String> = (0..universe_size).map(|k| format!("e{k}")).collect();
    let mut trials = 0u64;
    let mut failures = 0u64;
    let mut first_counterexample = None;
    let mut filter_hits = 0u64;

    let mut run = |inputs: &[NmRelation]| -> Result<()> {
        if !law.admits(inputs)? || !law.joint_filter(inputs)? {
            return Ok(());
        }
        trials += 1;
        filter_hits += 1;
        if !law.check(inputs)? {
            failures += 1;
            if first_counterexample.is_none() {
                first_counterexample = Some(documents(inputs));
            }
        }
        Ok(())
    };

    if law.arity() == 1 {
        for_each_assignment(grid, 3 * slots, |values| {
            let rel = relation_from_components(&universe, dimension, |x, y, slot| {
                let base = 3 * (slot + dimension * (y + universe_size * x));
                (values[base], values[base + 1], values[base + 2])
            });
            run(&[rel])
        })?;
    } else {
        // component 0 = T (others neutral at I=F=1),
        // component 1 = I (T=0, F=1), component 2 = F (T=0, I=1)
        for component in 0..3 {
            let build = |values: &[f64]| {
                relation_from_components(&universe, dimension, |x, y, slot| {
                    let v = values[slot + dimension * (y + universe_size * x)];
                    match component {
                        0 => (v, 1.0, 1.0),
                        1 => (0.0, v, 1.0),
                        _ => (0.0, 1.0, v),
                    }
                })
            };
            for_each_assignment(grid, slots, |left_values| {
                let left = build(left_values);
                for_each_assignment(grid, slots, |right_values| {
                    run(&[left.clone(), build(right_values)])
                })
            })?;
        }
    }

    Ok(LawReport {
        law_name: law.as_str().to_owned(),
        trials,
        failures,
        first_counterexample,
        seed: 0,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        filter_hits: law.has_filter().then_some(filter_hits),
    })
}
