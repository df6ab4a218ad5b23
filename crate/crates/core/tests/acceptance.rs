//! Acceptance suite. One test per criterion; each prints a single
//! `criterion N ...: PASS/FAIL` line (run with `--nocapture` to see them
//! all; cargo shows the output of failing tests regardless).

use std::time::Instant;

use ci_hash::analysis::{avalanche_report, collision_scan, CorpusSpec};
use ci_hash::engine::{iterate, BitState, IterationFunction, Strategy, SystemPoint};
use ci_hash::fixtures;
use ci_hash::hash::{digest, preprocess, BitString};
use ci_hash::topology::{
    construct_periodic_point, construct_transitive_point, distance, DEFAULT_DEPTH,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent closed-form oracle for negation iterations: each final cell is
/// its initial value XOR the parity of that cell's occurrence count.
fn parity_oracle(state: &BitState, terms: &[usize]) -> BitState {
    let mut cells = state.cells().to_vec();
    for &t in terms {
        cells[t - 1] = !cells[t - 1];
    }
    BitState::from_cells(cells)
}

fn random_point(rng: &mut ChaCha8Rng, width: usize, strategy_len: usize) -> SystemPoint {
    let terms = (0..strategy_len).map(|_| rng.random_range(1..=width)).collect();
    let state = BitState::from_cells((0..width).map(|_| rng.random_bool(0.5)).collect());
    SystemPoint::new(Strategy::new(terms, width).unwrap(), state).unwrap()
}

fn report(criterion: &str, ok: bool) {
    println!("criterion {criterion}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {criterion} failed");
}

#[test]
fn criterion_1_worked_example_stages_bit_exact() {
    let start = Instant::now();
    let pre = preprocess(fixtures::WORKED_INPUT.as_bytes()).unwrap();
    let stage = |name: &str| -> &BitString {
        &pre.trace.iter().find(|(n, _)| *n == name).unwrap().1
    };
    let ok = *stage("encoded") == BitString::parse(fixtures::ENCODED_BITS)
        && *stage("length-appended") == BitString::parse(fixtures::LENGTH_APPENDED_BITS)
        && *stage("mirrored") == BitString::parse(fixtures::MIRRORED_BITS)
        && pre.initial_state.cells() == BitString::parse(fixtures::FOLDED_STATE_BITS).bits()
        && start.elapsed().as_secs_f64() < 1.0;
    report("1 (worked-example stages, bit-exact)", ok);
}

#[test]
fn criterion_2_published_digest_vectors_best_effort() {
    // Mismatches are recorded, not failed: the published description leaves
    // the mirror rule, the rotation-pass count and the cell addressing
    // ambiguous, and no resolution of those three reproduces the published
    // digests. The criterion requires only that the outcome is reported and
    // that criterion 1 holds (checked in its own test).
    let mut matched = 0;
    for (label, input, expected) in fixtures::digest_vectors() {
        let d = digest(input.as_bytes(), IterationFunction::Negation).unwrap();
        let status = if d.hex == expected {
            matched += 1;
            "match"
        } else {
            "mismatch (documented ambiguity)"
        };
        println!("  digest vector [{label}]: {status}");
    }
    println!("  matched {matched}/5 published digests");
    report("2 (published digest vectors, best-effort)", true);
}

#[test]
fn criterion_3_parity_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut ok = true;
    for _ in 0..10_000 {
        let width = rng.random_range(1..=256);
        let len = rng.random_range(0..=2048);
        let x = random_point(&mut rng, width, len);
        let got = iterate(IterationFunction::Negation, &x, len).unwrap();
        if got.state() != &parity_oracle(x.state(), x.strategy().terms()) {
            ok = false;
            break;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  10000 pairs checked in {elapsed:.2} s");
    report("3 (parity-oracle equivalence)", ok && elapsed < 30.0);
}

#[test]
fn criterion_4_periodic_witness_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let epsilons = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];
    let mut passed = 0u32;
    let mut total = 0u32;
    for width in 2..=8usize {
        for &eps in &epsilons {
            for _ in 0..100 {
                let target = random_point(&mut rng, width, DEFAULT_DEPTH);
                let ok = construct_periodic_point(&target, eps)
                    .and_then(|w| w.verify(&target, DEFAULT_DEPTH))
                    .unwrap_or(false);
                passed += ok as u32;
                total += 1;
            }
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  {passed}/{total} witnesses verified in {elapsed:.2} s");
    report("4 (periodic-witness suite)", passed == total && elapsed < 10.0);
}

#[test]
fn criterion_5_transitive_witness_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut passed = 0u32;
    let mut total = 0u32;
    for width in 2..=8usize {
        let radius_cap = ((width + 1) as f64).log10();
        for _ in 0..100 {
            let a = random_point(&mut rng, width, DEFAULT_DEPTH);
            let b = random_point(&mut rng, width, DEFAULT_DEPTH);
            let ra = 10f64.powf(rng.random_range(-4.0..radius_cap - 0.01));
            let rb = 10f64.powf(rng.random_range(-4.0..radius_cap - 0.01));
            let ok = construct_transitive_point((&a, ra), (&b, rb))
                .and_then(|w| w.verify(DEFAULT_DEPTH))
                .unwrap_or(false);
            passed += ok as u32;
            total += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!("  {passed}/{total} witnesses verified in {elapsed:.2} s");
    report("5 (transitive-witness suite)", passed == total && elapsed < 10.0);
}

#[test]
fn criterion_6_metric_properties() {
    // The triangle inequality is decided in exact integer arithmetic, which
    // satisfies the stated 2e-16 slack with zero slack actually used.
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;
    for _ in 0..10_000 {
        let width = rng.random_range(1..=16);
        let len = rng.random_range(0..=24);
        let x = random_point(&mut rng, width, len);
        let len_y = rng.random_range(0..=24);
        let y = random_point(&mut rng, width, len_y);
        let len_z = rng.random_range(0..=24);
        let z = random_point(&mut rng, width, len_z);
        let dxy = distance(&x, &y, DEFAULT_DEPTH).unwrap();
        let dyx = distance(&y, &x, DEFAULT_DEPTH).unwrap();
        let dxz = distance(&x, &z, DEFAULT_DEPTH).unwrap();
        let dyz = distance(&y, &z, DEFAULT_DEPTH).unwrap();
        let hamming = x.state().hamming(y.state()).unwrap();
        ok &= dxy.total == dyx.total
            && dxy.strategy_scaled == dyx.strategy_scaled
            && (0.0..1.0).contains(&dxy.strategy_part)
            && dxy.total.floor() as u32 == hamming
            && ci_hash::topology::DistanceValue::triangle_holds(&dxz, &dxy, &dyz);
        if !ok {
            break;
        }
    }
    report("6 (metric properties)", ok);
}

#[test]
fn criterion_7_avalanche_statistics() {
    let start = Instant::now();
    let r = avalanche_report(&CorpusSpec { min_len: 10, max_len: 500 }, 1000, 0).unwrap();
    let min_rate = r.per_bit_flip_rate.iter().cloned().fold(f64::INFINITY, f64::min);
    let max_rate = r.per_bit_flip_rate.iter().cloned().fold(0.0, f64::max);
    let elapsed = start.elapsed().as_secs_f64();
    println!("  mean_distance: {:.3} (gate [112, 144])", r.mean_distance);
    println!("  std_distance: {:.3}", r.std_distance);
    println!("  bit flip rates: min {min_rate:.3}, max {max_rate:.3} (gate [0.35, 0.65])");
    println!("  elapsed: {elapsed:.2} s");
    let ok = (112.0..=144.0).contains(&r.mean_distance)
        && min_rate >= 0.35
        && max_rate <= 0.65
        && elapsed < 60.0;
    report("7 (avalanche statistics)", ok);
}

#[test]
fn criterion_8_determinism() {
    let first = digest(fixtures::STANZA.as_bytes(), IterationFunction::Negation).unwrap();
    let ok = (0..19).all(|_| {
        digest(fixtures::STANZA.as_bytes(), IterationFunction::Negation).unwrap() == first
    });
    report("8 (determinism over repeated runs)", ok);
}

// Not a numbered criterion, but pinned alongside them: the truncated-digest
// collision gates from the statistical module's contract.
#[test]
fn collision_scan_gates() {
    let w8 = collision_scan(8, 1000, 0).unwrap();
    let w16 = collision_scan(16, 1000, 0).unwrap();
    println!("  width 8: observed {} expected {:.1}", w8.observed, w8.expected);
    println!("  width 16: observed {} expected {:.1}", w16.observed, w16.expected);
    assert!(w8.observed >= 1, "width-8 scan over 1000 samples found no collision");
    assert!(
        (w16.observed as f64) <= 3.0 * w16.expected,
        "width-16 collisions outside 3x of birthday expectation"
    );
}
