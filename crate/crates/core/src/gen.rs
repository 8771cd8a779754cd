//! Seeded instance generators.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, whose output
//! stream is fixed across platforms and releases of `rand_chacha`, so the same
//! spec and seed always give the same instance.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cake::{Density, Segment, Q};
use crate::election::{Alt, Election, PreferenceOrder};
use crate::error::{Error, Result};
use crate::structure::EuclideanEmbedding;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    ImpartialCulture,
    /// Single-peaked along the given axis, or along `0, 1, ..., m-1`.
    SinglePeaked(Option<Vec<Alt>>),
    Euclidean1d,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub model: Model,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub election: Election,
    pub axis: Option<PreferenceOrder>,
    pub embedding: Option<EuclideanEmbedding>,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    let (m, n) = (spec.m, spec.n);
    if m == 0 || n == 0 {
        return Err(Error::invalid("generators need m >= 1 and n >= 1"));
    }
    let mut r = rng(spec.seed);
    match &spec.model {
        Model::ImpartialCulture => Ok(Generated {
            election: impartial_culture_with(&mut r, m, n),
            axis: None,
            embedding: None,
        }),
        Model::SinglePeaked(axis) => {
            let axis = match axis {
                Some(a) if a.len() == m => PreferenceOrder::new(a.clone())?,
                Some(a) => return Err(Error::Dimension { expected: m, got: a.len() }),
                None => PreferenceOrder::identity(m),
            };
            let voters = (0..n).map(|_| single_peaked_vote(&mut r, &axis)).collect();
            Ok(Generated {
                election: Election::new(m, voters)?,
                axis: Some(axis),
                embedding: None,
            })
        }
        Model::Euclidean1d => {
            // alternatives on distinct multiples of 4, voters on odd integers:
            // a voter is never equidistant from two alternatives
            let mut slots: Vec<i64> = (0..2 * m as i64).collect();
            slots.shuffle(&mut r);
            let alts: Vec<i64> = slots[..m].iter().map(|s| 4 * s).collect();
            let top = 8 * m as i64;
            let voters_at: Vec<i64> = (0..n).map(|_| 2 * r.gen_range(0..=top / 2) - 1).collect();
            let voters = voters_at
                .iter()
                .map(|&v| {
                    let mut order: Vec<Alt> = (0..m).collect();
                    order.sort_by_key(|&a| (alts[a] - v).abs());
                    PreferenceOrder::from_ranking_unchecked(order)
                })
                .collect();
            Ok(Generated {
                election: Election::new(m, voters)?,
                axis: None,
                embedding: Some(EuclideanEmbedding::line(&alts, &voters_at)),
            })
        }
    }
}

pub fn impartial_culture(m: usize, n: usize, seed: u64) -> Election {
    impartial_culture_with(&mut rng(seed), m, n)
}

pub fn impartial_culture_with(r: &mut impl Rng, m: usize, n: usize) -> Election {
    let voters = (0..n)
        .map(|_| {
            let mut order: Vec<Alt> = (0..m).collect();
            order.shuffle(r);
            PreferenceOrder::from_ranking_unchecked(order)
        })
        .collect();
    Election::new(m, voters).expect("m, n >= 1")
}

/// Peak chosen uniformly; the ranking then grows to the left or right
/// neighbour of the covered axis interval with equal probability.
fn single_peaked_vote(r: &mut impl Rng, axis: &PreferenceOrder) -> PreferenceOrder {
    let m = axis.len();
    let peak = r.gen_range(0..m);
    let (mut lo, mut hi) = (peak, peak);
    let mut order = vec![axis.at(peak)];
    while order.len() < m {
        let left = if lo == 0 {
            false
        } else if hi == m - 1 {
            true
        } else {
            r.gen_bool(0.5)
        };
        if left {
            lo -= 1;
            order.push(axis.at(lo));
        } else {
            hi += 1;
            order.push(axis.at(hi));
        }
    }
    PreferenceOrder::from_ranking_unchecked(order)
}

/// Random normalized density with `pieces` segments on a grid of width
/// `1/(4·pieces)`. Constant pieces draw a weight in `0..=9`; linear pieces draw
/// endpoint values in `0..=9`.
pub fn random_density(r: &mut impl Rng, pieces: usize, linear: bool) -> Density {
    let pieces = pieces.max(1);
    let grid = 4 * pieces as i64;
    let mut cuts: Vec<i64> = (1..grid).collect();
    cuts.shuffle(r);
    let mut cuts: Vec<i64> = cuts[..pieces - 1].to_vec();
    cuts.push(0);
    cuts.push(grid);
    cuts.sort_unstable();
    let frac = |k: i64| Q::new(BigInt::from(k), BigInt::from(grid));
    loop {
        let mut segs = Vec::with_capacity(pieces);
        let mut total = Q::from_integer(BigInt::from(0));
        for w in cuts.windows(2) {
            let (lo, hi) = (frac(w[0]), frac(w[1]));
            let y0 = Q::from_integer(BigInt::from(r.gen_range(0..=9)));
            let y1 = if linear {
                Q::from_integer(BigInt::from(r.gen_range(0..=9)))
            } else {
                y0.clone()
            };
            let slope = (&y1 - &y0) / (&hi - &lo);
            let c0 = &y0 - &slope * &lo;
            total += (&y0 + &y1) / Q::from_integer(BigInt::from(2)) * (&hi - &lo);
            segs.push(Segment::new(lo, hi, vec![c0, slope]));
        }
        if total == Q::from_integer(BigInt::from(0)) {
            continue;
        }
        for s in &mut segs {
            for c in &mut s.coeffs {
                *c = &*c / &total;
            }
        }
        return Density::new(segs).expect("normalized nonnegative density");
    }
}
