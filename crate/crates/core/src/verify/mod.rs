//! Semantic checks on sampled concentration matrices, all in exact arithmetic.
//!
//! A concentration matrix `K` is sampled from the linear space cut out by the
//! coloring (zeros off the edges, equal entries within color classes), then
//! inverted to a covariance matrix `Σ`. Markov moves must vanish on `Σ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ColorId, ColoredGraph};
use crate::linalg::{format_rational, RationalMatrix};
use crate::markov::MarkovMove;
use crate::toric::{exponent_matrix_endpoint, SigmaIndex};

/// Attempts per trial before a singular sample becomes a hard error.
pub const SAMPLE_RETRIES: u64 = 8;

fn serialize_values<S: Serializer>(
    values: &BTreeMap<ColorId, BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(
        values
            .iter()
            .map(|(c, x)| (c.to_string(), format_rational(x))),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcentrationSample {
    pub matrix: RationalMatrix,
    #[serde(serialize_with = "serialize_values")]
    pub color_values: BTreeMap<ColorId, BigRational>,
}

/// Samples `K` for trial 0 of `seed`.
pub fn sample_concentration(g: &ColoredGraph, seed: u64) -> ConcentrationSample {
    sample_concentration_trial(g, seed, 0)
}

/// Samples `K` on an independent random stream per `(seed, trial)`.
///
/// Edge colors get nonzero rationals in `(-1, 1)` with denominator at most 1000.
/// Vertex color number `k` gets `1 + max_i Σ_j |k_ij| + k/97`, which makes `K`
/// strictly diagonally dominant and hence positive definite.
pub fn sample_concentration_trial(g: &ColoredGraph, seed: u64, trial: u64) -> ConcentrationSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut color_values = BTreeMap::new();
    for color in g.colors().into_iter().filter(|c| !c.is_vertex_color()) {
        let denom: i64 = rng.gen_range(2..=1000);
        let mut numer: i64 = rng.gen_range(1..denom);
        if rng.gen_bool(0.5) {
            numer = -numer;
        }
        color_values.insert(color, BigRational::new(numer.into(), denom.into()));
    }
    let n = g.n();
    let mut k = RationalMatrix::zeros(n, n);
    for (e, c) in g.edges() {
        let x = color_values[c].clone();
        k[(e.u() - 1, e.v() - 1)] = x.clone();
        k[(e.v() - 1, e.u() - 1)] = x;
    }
    let base = (0..n)
        .map(|i| {
            k.row(i)
                .iter()
                .map(|x| x.abs())
                .fold(BigRational::zero(), |s, x| s + x)
        })
        .max()
        .unwrap_or_else(BigRational::zero)
        + BigRational::one();
    let vertex_colors: Vec<ColorId> = g
        .colors()
        .into_iter()
        .filter(ColorId::is_vertex_color)
        .collect();
    for (idx, color) in vertex_colors.into_iter().enumerate() {
        let value = &base + BigRational::new(BigInt::from(idx), BigInt::from(97));
        color_values.insert(color, value);
    }
    for v in g.vertices() {
        k[(v - 1, v - 1)] = color_values[g.vertex_color(v)].clone();
    }
    ConcentrationSample {
        matrix: k,
        color_values,
    }
}

pub fn invert_exact(m: &RationalMatrix) -> Result<RationalMatrix> {
    m.inverse()
}

/// Inverts a fresh sample, stepping the seed on singular draws.
fn covariance(g: &ColoredGraph, seed: u64, trial: u64) -> Result<RationalMatrix> {
    for attempt in 0..SAMPLE_RETRIES {
        let k = sample_concentration_trial(g, seed.wrapping_add(attempt), trial).matrix;
        match k.inverse() {
            Ok(sigma) => return Ok(sigma),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Internal(format!(
        "{SAMPLE_RETRIES} consecutive singular samples in trial {trial}"
    )))
}

fn sigma_entry(sigma: &RationalMatrix, s: SigmaIndex) -> Result<&BigRational> {
    if s.j() > sigma.rows() {
        return Err(Error::IndexMismatch(format!(
            "{s} refers to a vertex outside 1..={}",
            sigma.rows()
        )));
    }
    Ok(&sigma[(s.i() - 1, s.j() - 1)])
}

/// `∏ plus - ∏ minus` evaluated at `Σ`.
pub fn evaluate_move(sigma: &RationalMatrix, m: &MarkovMove) -> Result<BigRational> {
    let product = |side: &[SigmaIndex]| -> Result<BigRational> {
        side.iter().try_fold(BigRational::one(), |acc, &s| {
            Ok(acc * sigma_entry(sigma, s)?)
        })
    };
    Ok(product(m.plus())? - product(m.minus())?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonVanishing {
    pub trial: u64,
    #[serde(rename = "move")]
    pub binomial: MarkovMove,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub trials: u64,
    pub evaluations: usize,
    /// Every move that failed to vanish, with the first trial where it failed.
    pub failures: Vec<NonVanishing>,
}

impl VanishingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates every move on `Σ = K⁻¹` for `trials` independent samples.
pub fn verify_vanishing(
    g: &ColoredGraph,
    basis: &[MarkovMove],
    trials: u64,
    seed: u64,
) -> Result<VanishingReport> {
    let mut failures: Vec<NonVanishing> = Vec::new();
    let mut evaluations = 0;
    for trial in 0..trials {
        let sigma = covariance(g, seed, trial)?;
        for m in basis {
            evaluations += 1;
            let value = evaluate_move(&sigma, m)?;
            if !value.is_zero() && !failures.iter().any(|f| &f.binomial == m) {
                failures.push(NonVanishing {
                    trial,
                    binomial: m.clone(),
                    value: format_rational(&value),
                });
            }
        }
    }
    Ok(VanishingReport {
        trials,
        evaluations,
        failures,
    })
}

/// Two entries of `K²` that the coloring forces equal but that differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanWitness {
    pub trial: u64,
    pub first: SigmaIndex,
    pub second: SigmaIndex,
    pub first_value: String,
    pub second_value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JordanReport {
    pub closed: bool,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<JordanWitness>,
}

/// Checks on sampled `K` that `K²` obeys the same color equalities as `K`.
pub fn jordan_square_closed(g: &ColoredGraph, trials: u64, seed: u64) -> Result<JordanReport> {
    if let Some(e) = g.first_non_edge() {
        return Err(Error::NotComplete(e));
    }
    let mut classes: Vec<Vec<SigmaIndex>> = g
        .vertex_color_classes()
        .into_values()
        .map(|vs| {
            vs.into_iter()
                .map(|v| SigmaIndex::new(v, v).expect("v >= 1"))
                .collect()
        })
        .collect();
    classes.extend(g.edge_color_classes().into_values().map(|es| {
        es.into_iter()
            .map(|e| SigmaIndex::new(e.u(), e.v()).expect("v >= 1"))
            .collect()
    }));
    for trial in 0..trials {
        let k = sample_concentration_trial(g, seed, trial).matrix;
        let square = k.mul(&k)?;
        let at = |s: SigmaIndex| &square[(s.i() - 1, s.j() - 1)];
        for class in &classes {
            let first = class[0];
            if let Some(&second) = class[1..].iter().find(|&&s| at(s) != at(first)) {
                return Ok(JordanReport {
                    closed: false,
                    trials,
                    witness: Some(JordanWitness {
                        trial,
                        first,
                        second,
                        first_value: format_rational(at(first)),
                        second_value: format_rational(at(second)),
                    }),
                });
            }
        }
    }
    Ok(JordanReport {
        closed: true,
        trials,
        witness: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub rank: usize,
    pub colors: usize,
    pub equal: bool,
}

/// Compares the rank of the endpoint exponent matrix with the number of colors.
pub fn rank_dimension_check(g: &ColoredGraph) -> Result<DimensionReport> {
    let rank = exponent_matrix_endpoint(g)?.rank();
    let colors = g.color_count();
    Ok(DimensionReport {
        rank,
        colors,
        equal: rank == colors,
    })
}
