//! The metric on (strategy, state) pairs and the constructive chaos
//! witnesses: explicitly built periodic points, transitive connecting points,
//! the periodic-but-finite predicate, and an empirical sensitivity probe.
//!
//! All witness constructions are specific to the negation iteration function,
//! which is the function the chaos results hold for. Every witness can be
//! re-verified by plain simulation; nothing here is trusted on construction.

use crate::engine::{iterate, IterationFunction, Strategy, SystemPoint};
use crate::error::{Error, Result};

/// Default truncation depth for the strategy part of the distance.
pub const DEFAULT_DEPTH: usize = 16;

/// A distance split into its integer state part (Hamming distance) and its
/// fractional strategy part (decimal-weighted term differences), together
/// with the truncation-error bound of the strategy part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceValue {
    /// Number of cells in which the two states differ.
    pub state_part: u32,
    /// Decimal-weighted strategy difference, always in [0, 1).
    pub strategy_part: f64,
    /// Upper bound on the strategy-part mass ignored by truncation: 10^(-depth).
    pub truncation_bound: f64,
    /// `state_part + strategy_part`.
    pub total: f64,
    /// Exact integer numerator of the strategy part:
    /// `sum_k diff_k * 10^(depth-k)`, so that
    /// `strategy_part = 9 * strategy_scaled / (width * 10^depth)`.
    pub strategy_scaled: u128,
    pub width: usize,
    pub depth: usize,
}

impl DistanceValue {
    /// Exact value scaled by `width * 10^depth`, suitable for lossless
    /// comparisons between distances of the same width and depth.
    fn scaled_total(&self) -> u128 {
        self.state_part as u128 * self.width as u128 * 10u128.pow(self.depth as u32)
            + 9 * self.strategy_scaled
    }

    /// Triangle inequality `d(x,z) <= d(x,y) + d(y,z)`, decided in exact
    /// integer arithmetic (no floating-point slack needed).
    pub fn triangle_holds(d_xz: &Self, d_xy: &Self, d_yz: &Self) -> bool {
        assert!(
            d_xz.width == d_xy.width
                && d_xy.width == d_yz.width
                && d_xz.depth == d_xy.depth
                && d_xy.depth == d_yz.depth,
            "triangle check requires a common width and depth"
        );
        d_xz.scaled_total() <= d_xy.scaled_total() + d_yz.scaled_total()
    }
}

/// Distance between two points of the same width.
///
/// The state part is the Hamming distance. The strategy part is
/// `(9/N) * sum_{k=1..depth} |S^k - T^k| / 10^k`, comparing the first `depth`
/// terms of the two strategies. A term absent from one strategy but present
/// in the other counts as a full difference (the absent term is taken as 0);
/// positions absent from both contribute nothing.
pub fn distance(x: &SystemPoint, y: &SystemPoint, depth: usize) -> Result<DistanceValue> {
    if x.width() != y.width() {
        return Err(Error::WidthMismatch { left: x.width(), right: y.width() });
    }
    assert!(depth >= 1, "truncation depth must be at least 1");

    assert!(depth <= 32, "truncation depth above 32 would overflow the exact accumulator");

    let state_part = x.state().hamming(y.state())?;
    let n = x.width();

    // Accumulate sum_k diff_k * 10^(depth-k) exactly; the float parts are
    // derived from it with a single rounding.
    let mut strategy_scaled = 0u128;
    for k in 1..=depth {
        let a = x.strategy().term(k);
        let b = y.strategy().term(k);
        let diff = match (a, b) {
            (Some(a), Some(b)) => a.abs_diff(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => 0,
        };
        strategy_scaled += diff as u128 * 10u128.pow((depth - k) as u32);
    }
    // The true value is at most 1 - 10^(-depth) < 1, but the float division
    // can round up to exactly 1.0 at maximal term differences; pin it below 1.
    let strategy_part = (9.0 * strategy_scaled as f64 / (n as f64 * 10f64.powi(depth as i32)))
        .min(1.0 - f64::EPSILON / 2.0);

    // Same rounding hazard for the sum: the real total is strictly below
    // state_part + 1, keep the float there too so floor(total) == state_part.
    let mut total = state_part as f64 + strategy_part;
    if total >= state_part as f64 + 1.0 {
        total = (state_part as f64 + 1.0).next_down();
    }

    Ok(DistanceValue {
        state_part,
        strategy_part,
        truncation_bound: 10f64.powi(-(depth as i32)),
        total,
        strategy_scaled,
        width: n,
        depth,
    })
}

/// Smallest `k >= 1` with `10^(-k) <= epsilon`; computed by direct search so
/// no floating-point log rounding can make the prefix one term too short.
fn prefix_depth(epsilon: f64) -> usize {
    let mut k = 1;
    let mut bound = 0.1;
    while bound > epsilon {
        k += 1;
        bound /= 10.0;
    }
    k
}

/// Like [`prefix_depth`] but 0 when `epsilon >= 1`: the number of leading
/// strategy terms that must be preserved to stay within `epsilon`.
fn preserved_prefix_len(epsilon: f64) -> usize {
    if epsilon >= 1.0 {
        0
    } else {
        prefix_depth(epsilon)
    }
}

/// A periodic point built next to a target point. Its strategy is stored as
/// one full period and understood as repeating forever.
#[derive(Clone, Debug)]
pub struct PeriodicWitness {
    pub point: SystemPoint,
    pub period: usize,
    pub epsilon: f64,
}

/// Builds the explicit periodic point within `epsilon` of `target` under the
/// negation function.
///
/// The witness copies the first `k0` strategy terms of the target (with `k0`
/// the smallest depth at which agreement forces a distance below `epsilon`),
/// simulates those `k0` steps, and appends in increasing order the cells where
/// the reached state differs from the target state. Flipping exactly those
/// cells returns the state to its starting value, so the point has period
/// `k0 + |mismatch|`.
pub fn construct_periodic_point(target: &SystemPoint, epsilon: f64) -> Result<PeriodicWitness> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    // For epsilon >= 1 (including the degenerate epsilon >= N+1 case) the
    // search formula bottoms out at k0 = 1 and the same construction applies.
    let k0 = prefix_depth(epsilon).max(1);
    if target.strategy().len() < k0 {
        return Err(Error::PrefixTooShort { needed: k0, available: target.strategy().len() });
    }

    let reached = iterate(IterationFunction::Negation, target, k0)?;
    let mismatch: Vec<usize> = (1..=target.width())
        .filter(|&i| reached.state().get(i).unwrap() != target.state().get(i).unwrap())
        .collect();

    let mut terms = target.strategy().terms()[..k0].to_vec();
    terms.extend_from_slice(&mismatch);
    let period = terms.len();
    let strategy = Strategy::new(terms, target.width())?;
    let point = SystemPoint::new(strategy, target.state().clone())?;

    Ok(PeriodicWitness { point, period, epsilon })
}

impl PeriodicWitness {
    /// Distance to the target, reading the stored strategy as repeating.
    pub fn distance_to(&self, target: &SystemPoint, depth: usize) -> Result<DistanceValue> {
        let expanded = SystemPoint::new(
            self.point.strategy().repeat_to(depth)?,
            self.point.state().clone(),
        )?;
        distance(&expanded, target, depth)
    }

    /// Checks both witness obligations by simulation: closeness to the target
    /// (truncation bound accounted) and exact return to the starting state
    /// after one period under negation.
    pub fn verify(&self, target: &SystemPoint, depth: usize) -> Result<bool> {
        let d = self.distance_to(target, depth)?;
        if d.total + d.truncation_bound >= self.epsilon {
            return Ok(false);
        }
        let after = iterate(IterationFunction::Negation, &self.point, self.period)?;
        Ok(after.state() == self.point.state())
    }
}

/// A point of ball A whose forward orbit lands in ball B, with the step count
/// that gets it there.
#[derive(Clone, Debug)]
pub struct TransitiveWitness {
    pub point: SystemPoint,
    pub steps: usize,
    pub ball_a: (SystemPoint, f64),
    pub ball_b: (SystemPoint, f64),
}

/// Builds the explicit point of `ball_a` whose `k0 + k1`-step image lies in
/// `ball_b`, under the negation function.
///
/// The point keeps `ball_a`'s state and the first `k0` terms of its strategy,
/// then flips (in increasing order) the `k1` cells where the `k0`-step image
/// differs from `ball_b`'s center state, then follows `ball_b`'s strategy.
/// After `k0 + k1` steps its state is exactly the center state of `ball_b`
/// and its remaining strategy is exactly the center strategy of `ball_b`.
pub fn construct_transitive_point(
    ball_a: (&SystemPoint, f64),
    ball_b: (&SystemPoint, f64),
) -> Result<TransitiveWitness> {
    let (center_a, radius_a) = ball_a;
    let (center_b, radius_b) = ball_b;
    if center_a.width() != center_b.width() {
        return Err(Error::WidthMismatch { left: center_a.width(), right: center_b.width() });
    }
    let limit = center_a.width() as f64 + 1.0;
    for radius in [radius_a, radius_b] {
        if radius <= 0.0 || radius >= limit {
            return Err(Error::RadiusOutOfRange { radius, limit });
        }
    }

    let owned = |p: &SystemPoint| p.clone();

    // Degenerate same-center case: the center itself is in both balls.
    if center_a == center_b {
        return Ok(TransitiveWitness {
            point: owned(center_a),
            steps: 0,
            ball_a: (owned(center_a), radius_a),
            ball_b: (owned(center_b), radius_b),
        });
    }

    let k0 = prefix_depth(radius_a).max(1);
    if center_a.strategy().len() < k0 {
        return Err(Error::PrefixTooShort { needed: k0, available: center_a.strategy().len() });
    }

    let reached = iterate(IterationFunction::Negation, center_a, k0)?;
    let mismatch: Vec<usize> = (1..=center_a.width())
        .filter(|&i| reached.state().get(i).unwrap() != center_b.state().get(i).unwrap())
        .collect();
    let k1 = mismatch.len();

    let mut terms = center_a.strategy().terms()[..k0].to_vec();
    terms.extend_from_slice(&mismatch);
    terms.extend_from_slice(center_b.strategy().terms());
    let strategy = Strategy::new(terms, center_a.width())?;
    let point = SystemPoint::new(strategy, center_a.state().clone())?;

    Ok(TransitiveWitness {
        point,
        steps: k0 + k1,
        ball_a: (owned(center_a), radius_a),
        ball_b: (owned(center_b), radius_b),
    })
}

impl TransitiveWitness {
    /// Checks both ball memberships by simulation, with the strategy-part
    /// truncation bound accounted.
    pub fn verify(&self, depth: usize) -> Result<bool> {
        let d_a = distance(&self.point, &self.ball_a.0, depth)?;
        if d_a.total + d_a.truncation_bound >= self.ball_a.1 {
            return Ok(false);
        }
        let image = iterate(IterationFunction::Negation, &self.point, self.steps)?;
        let d_b = distance(&image, &self.ball_b.0, depth)?;
        Ok(d_b.total + d_b.truncation_bound < self.ball_b.1)
    }
}

/// True iff the strategy repeats with a proper period: some divisor `p` of its
/// length, `p != length`, with `s[i] == s[i+p]` throughout.
pub fn is_periodic_but_finite(s: &Strategy) -> bool {
    let n = s.len();
    let terms = s.terms();
    (1..n)
        .filter(|p| n % p == 0)
        .any(|p| (0..n - p).all(|i| terms[i] == terms[i + p]))
}

/// Searches for a neighbor of `x` within `epsilon` whose orbit separates from
/// `x`'s orbit in state (Hamming distance at least 1) within `horizon` steps.
///
/// The neighbor is built by altering a single strategy term strictly after the
/// prefix that must be preserved to stay within `epsilon`. Returns the
/// neighbor and the separating step count, or `None` if the horizon is too
/// short or no alteration exists (single-cell systems).
pub fn sensitivity_probe(
    x: &SystemPoint,
    epsilon: f64,
    horizon: usize,
) -> Result<Option<(SystemPoint, usize)>> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon(epsilon));
    }
    let preserved = preserved_prefix_len(epsilon);
    let n = x.width();
    let reach = horizon.min(x.strategy().len());

    for pos in preserved + 1..=reach {
        let original = x.strategy().term(pos).unwrap();
        for alt in 1..=n {
            if alt == original {
                continue;
            }
            let mut terms = x.strategy().terms().to_vec();
            terms[pos - 1] = alt;
            let y = SystemPoint::new(Strategy::new(terms, n)?, x.state().clone())?;
            for step_count in pos..=reach {
                let ox = iterate(IterationFunction::Negation, x, step_count)?;
                let oy = iterate(IterationFunction::Negation, &y, step_count)?;
                if ox.state().hamming(oy.state())? >= 1 {
                    return Ok(Some((y, step_count)));
                }
            }
        }
    }
    Ok(None)
}
