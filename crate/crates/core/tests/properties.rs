//! Property tests for the engine, the metric and the hash pipeline.
//!
//! The parity oracle used here is the independent check for the whole
//! engine: under the negation function, each final cell equals its initial
//! value XOR the parity of that cell's occurrence count in the strategy.
//! It is computed by plain counting, never through the engine itself.

use ci_hash::engine::{iterate, update_cell, BitState, IterationFunction, SystemPoint};
use ci_hash::engine::Strategy as CiStrategy;
use ci_hash::hash;
use ci_hash::topology::{distance, is_periodic_but_finite, DEFAULT_DEPTH};
use proptest::prelude::*;

/// Closed-form oracle for negation iterations: occurrence-count parity.
fn parity_oracle(state: &BitState, terms: &[usize]) -> BitState {
    let mut cells = state.cells().to_vec();
    for &t in terms {
        cells[t - 1] = !cells[t - 1];
    }
    BitState::from_cells(cells)
}

fn arb_point(max_width: usize, max_len: usize) -> impl Strategy<Value = SystemPoint> {
    (1..=max_width).prop_flat_map(move |width| {
        (
            prop::collection::vec(1..=width, 0..=max_len),
            prop::collection::vec(any::<bool>(), width),
        )
            .prop_map(move |(terms, cells)| {
                SystemPoint::new(
                    ci_hash::engine::Strategy::new(terms, width).unwrap(),
                    BitState::from_cells(cells),
                )
                .unwrap()
            })
    })
}

proptest! {
    #[test]
    fn iterate_matches_parity_oracle(x in arb_point(32, 128)) {
        let n = x.strategy().len();
        let got = iterate(IterationFunction::Negation, &x, n).unwrap();
        prop_assert_eq!(got.state(), &parity_oracle(x.state(), x.strategy().terms()));
        prop_assert!(got.strategy().is_empty());
    }

    #[test]
    fn update_changes_at_most_one_cell(
        x in arb_point(16, 0),
        k in 1usize..=16,
        negate in any::<bool>(),
    ) {
        prop_assume!(k <= x.width());
        let f = if negate { IterationFunction::Negation } else { IterationFunction::Identity };
        let updated = update_cell(f, k, x.state()).unwrap();
        for j in 1..=x.width() {
            if j != k {
                prop_assert_eq!(updated.get(j).unwrap(), x.state().get(j).unwrap());
            }
        }
        prop_assert!(updated.hamming(x.state()).unwrap() <= 1);
    }

    #[test]
    fn negation_flip_is_involutive(x in arb_point(256, 0), k in 1usize..=256) {
        prop_assume!(k <= x.width());
        let once = update_cell(IterationFunction::Negation, k, x.state()).unwrap();
        let twice = update_cell(IterationFunction::Negation, k, &once).unwrap();
        prop_assert_eq!(&twice, x.state());
    }

    #[test]
    fn step_preserves_width_and_shortens_strategy(x in arb_point(16, 32)) {
        prop_assume!(!x.strategy().is_empty());
        let next = ci_hash::engine::step(IterationFunction::Negation, &x).unwrap();
        prop_assert_eq!(next.state().width(), x.state().width());
        prop_assert_eq!(next.strategy().len(), x.strategy().len() - 1);
    }

    #[test]
    fn metric_axioms_with_truncation_slack(
        width in 2usize..=16,
        terms in prop::collection::vec(1usize..=16, 3 * 20),
        cells in prop::collection::vec(any::<bool>(), 3 * 16),
    ) {
        let mk = |t: &[usize], c: &[bool]| {
            let t: Vec<usize> = t.iter().map(|&v| (v - 1) % width + 1).collect();
            SystemPoint::new(
                CiStrategy::new(t, width).unwrap(),
                BitState::from_cells(c[..width].to_vec()),
            )
            .unwrap()
        };
        let x = mk(&terms[0..20], &cells[0..16]);
        let y = mk(&terms[20..40], &cells[16..32]);
        let z = mk(&terms[40..60], &cells[32..48]);

        let dxy = distance(&x, &y, DEFAULT_DEPTH).unwrap();
        let dyx = distance(&y, &x, DEFAULT_DEPTH).unwrap();
        let dxz = distance(&x, &z, DEFAULT_DEPTH).unwrap();
        let dyz = distance(&y, &z, DEFAULT_DEPTH).unwrap();

        prop_assert_eq!(dxy.total, dyx.total);
        prop_assert!(dxy.total >= 0.0);
        prop_assert!(dxy.strategy_part >= 0.0 && dxy.strategy_part < 1.0);
        prop_assert_eq!(dxy.total.floor() as u32, dxy.state_part);
        prop_assert_eq!(distance(&x, &x, DEFAULT_DEPTH).unwrap().total, 0.0);
        prop_assert!(ci_hash::topology::DistanceValue::triangle_holds(&dxz, &dxy, &dyz));
    }

    #[test]
    fn strategy_prefix_agreement_bounds_distance(
        width in 2usize..=8,
        shared in prop::collection::vec(1usize..=8, 1..=8),
        tail_a in prop::collection::vec(1usize..=8, 0..=8),
        tail_b in prop::collection::vec(1usize..=8, 0..=8),
    ) {
        let clamp = |v: &[usize]| -> Vec<usize> { v.iter().map(|&t| (t - 1) % width + 1).collect() };
        let shared = clamp(&shared);
        let k = shared.len();
        let mut a = shared.clone();
        a.extend(clamp(&tail_a));
        let mut b = shared;
        b.extend(clamp(&tail_b));
        let state = BitState::zero(width);
        let x = SystemPoint::new(CiStrategy::new(a, width).unwrap(), state.clone()).unwrap();
        let y = SystemPoint::new(CiStrategy::new(b, width).unwrap(), state).unwrap();
        let d = distance(&x, &y, DEFAULT_DEPTH).unwrap();
        prop_assert!(d.strategy_part < 10f64.powi(-(k as i32)));
    }

    #[test]
    fn repeated_block_is_periodic_but_finite(
        block in prop::collection::vec(1usize..=4, 1..=4),
        reps in 2usize..=4,
    ) {
        let mut terms = Vec::new();
        for _ in 0..reps {
            terms.extend_from_slice(&block);
        }
        let s = CiStrategy::new(terms, 4).unwrap();
        prop_assert!(is_periodic_but_finite(&s));
    }

    #[test]
    fn digest_iteration_phase_equals_parity_oracle(msg in "[ -~]{0,60}") {
        let pre = hash::preprocess(msg.as_bytes()).unwrap();
        let u = hash::derive_u_sequence(&pre.normalized).unwrap();
        let strategy = hash::derive_strategy(&u).unwrap();
        let expected = parity_oracle(&pre.initial_state, strategy.terms());
        let d = hash::digest(msg.as_bytes(), IterationFunction::Negation).unwrap();
        prop_assert_eq!(&d.state, &expected);
        prop_assert_eq!(d.hex, hash::to_hex(&expected).unwrap());
    }

    #[test]
    fn digest_is_fixed_size(msg in "[ -~]{0,80}") {
        let d = hash::digest(msg.as_bytes(), IterationFunction::Negation).unwrap();
        prop_assert_eq!(d.hex.len(), 64);
        prop_assert_eq!(d.state.width(), 256);
    }
}
