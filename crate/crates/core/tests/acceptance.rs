//! Acceptance suite: one test per release criterion, each printing a single
//! `[PASS]`/`[FAIL]` line (run with `--nocapture` to see them). The heavier
//! reproductions use fixed seeds so every run checks the same numbers.

use nlsearch_core::{
    census, compare_histograms, derive_run_seed, fisher_exact, fitness1, fitness2, fwht,
    mann_whitney_u, naive_wht, pearson, run_batch, spearman, Alternative, ContingencyTable2x2,
    Criterion, MutationKind, NeighborOrder, Preference, SearchConfig, TruthTable, WalshSpectrum,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

/// Master seed for every randomized check in this suite. Fixed once, up
/// front; all per-sample and per-run seeds derive from it.
const MASTER_SEED: u64 = 0;

fn report(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("[PASS] {criterion}");
    } else {
        println!("[FAIL] {criterion}: {}", failures.join("; "));
        panic!("{criterion}: {}", failures.join("; "));
    }
}

fn random_table(n: u32, rng: &mut impl Rng) -> TruthTable {
    let bits = (0..1usize << n).map(|_| rng.gen_range(0..=1u8)).collect();
    TruthTable::from_bits(bits).unwrap()
}

#[test]
fn criterion_1_transform_correctness() {
    let mut failures = Vec::new();

    // fast transform vs the naive oracle, 1000 random tables per size
    for n in 1..=8u32 {
        let disagreements = (0..1000u64)
            .into_par_iter()
            .filter(|&i| {
                let mut rng = ChaCha12Rng::seed_from_u64(1_000 * n as u64 + i);
                let t = random_table(n, &mut rng);
                fwht(&t) != naive_wht(&t)
            })
            .count();
        if disagreements > 0 {
            failures.push(format!("fwht disagrees with naive_wht {disagreements} times at n={n}"));
        }
    }

    // incremental update vs full recomputation over 100-swap chains
    for n in [4u32, 6, 8] {
        let mut rng = ChaCha12Rng::seed_from_u64(7_000 + n as u64);
        let mut table = TruthTable::random_balanced(n, &mut rng).unwrap();
        let mut spec = fwht(&table);
        for step in 0..100 {
            let ones = table.one_positions();
            let zeros = table.zero_positions();
            let i = ones[rng.gen_range(0..ones.len())];
            let j = zeros[rng.gen_range(0..zeros.len())];
            spec = spec.updated_after_swap(&table, i, j).unwrap();
            table = table.with_swapped(i, j);
            if spec != fwht(&table) {
                failures.push(format!("swap chain diverged at n={n}, step {step}"));
                break;
            }
        }
    }

    report("criterion 1: transform correctness (fwht = naive; swap updates exact)", failures);
}

#[test]
fn criterion_2_spectrum_invariants() {
    // >= 10^4 random balanced tables spread over n = 1..8
    let failures: Vec<String> = (1..=8u32)
        .flat_map(|n| (0..1250u64).map(move |i| (n, i)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|(n, i)| {
            let mut rng = ChaCha12Rng::seed_from_u64(50_000 + 10_000 * n as u64 + i);
            let t = TruthTable::random_balanced(n, &mut rng).unwrap();
            let spec = fwht(&t);
            let len = t.len() as i64;
            let parseval: i64 = spec.coeffs().iter().map(|&c| c as i64 * c as i64).sum();
            if parseval != len * len {
                return Some(format!("Parseval violated at n={n} sample {i}"));
            }
            if spec.coeffs()[0] != 0 {
                return Some(format!("nonzero leading coefficient at n={n} sample {i}"));
            }
            if n >= 2 && spec.coeffs().iter().any(|c| c.rem_euclid(4) != 0) {
                return Some(format!("coefficient not divisible by 4 at n={n} sample {i}"));
            }
            None
        })
        .collect();

    report(
        "criterion 2: spectrum invariants (Parseval, zero leading coefficient, divisibility by 4) \
         over 10^4 balanced tables",
        failures,
    );
}

#[test]
fn criterion_3_census_oracle() {
    let mut failures = Vec::new();
    let three = census(3).unwrap();
    if three.total_balanced != 70 {
        failures.push(format!("n=3 counted {} balanced tables, expected 70", three.total_balanced));
    }
    if three.max_nl != 2 {
        failures.push(format!("n=3 maximum nl {} differs from the sweep value 2", three.max_nl));
    }
    let four = census(4).unwrap();
    if four.total_balanced != 12870 {
        failures.push(format!("n=4 counted {} balanced tables, expected 12870", four.total_balanced));
    }
    if four.max_nl != 4 {
        failures.push(format!("n=4 maximum nl {} differs from the sweep value 4", four.max_nl));
    }
    report("criterion 3: census oracle (70 tables, max nl 2 at n=3; 12870, max nl 4 at n=4)", failures);
}

#[test]
fn criterion_4_comparator_laws() {
    let mut failures = Vec::new();
    let spectra = |seed: u64, n: u32| -> WalshSpectrum {
        let t = TruthTable::random_balanced(n, &mut ChaCha12Rng::seed_from_u64(seed)).unwrap();
        fwht(&t)
    };

    fn sorted_lex(x: &WalshSpectrum, y: &WalshSpectrum) -> Preference {
        let mut xs: Vec<u32> = x.coeffs().iter().map(|c| c.unsigned_abs()).collect();
        let mut ys: Vec<u32> = y.coeffs().iter().map(|c| c.unsigned_abs()).collect();
        xs.sort_unstable_by(|a, b| b.cmp(a));
        ys.sort_unstable_by(|a, b| b.cmp(a));
        match xs.cmp(&ys) {
            std::cmp::Ordering::Less => Preference::PreferFirst,
            std::cmp::Ordering::Greater => Preference::PreferSecond,
            std::cmp::Ordering::Equal => Preference::Tie,
        }
    }

    let mut antisymmetry_bad = 0u64;
    let mut oracle_bad = 0u64;
    let mut refinement_bad = 0u64;
    let mut fitness1_bad = 0u64;
    for i in 0..10_000u64 {
        let n = 2 + (i % 5) as u32;
        let x = spectra(2 * i, n);
        let y = spectra(2 * i + 1, n);
        let xy = compare_histograms(&x, &y).unwrap();
        let yx = compare_histograms(&y, &x).unwrap();
        if xy != yx.flipped() {
            antisymmetry_bad += 1;
        }
        if xy != sorted_lex(&x, &y) {
            oracle_bad += 1;
        }
        if fitness1(&x) > fitness1(&y) && xy != Preference::PreferFirst {
            fitness1_bad += 1;
        }
        if fitness1(&x) == fitness1(&y)
            && fitness2(&x) > fitness2(&y)
            && xy == Preference::PreferSecond
        {
            refinement_bad += 1;
        }
        if fitness1(&x) != fitness1(&y)
            && (fitness2(&x) > fitness2(&y)) != (xy == Preference::PreferFirst)
        {
            refinement_bad += 1;
        }
    }
    if antisymmetry_bad > 0 {
        failures.push(format!("{antisymmetry_bad} antisymmetry violations"));
    }
    if oracle_bad > 0 {
        failures.push(format!("{oracle_bad} disagreements with the sorted-lexicographic oracle"));
    }
    if fitness1_bad > 0 {
        failures.push(format!("{fitness1_bad} disagreements with plain non-linearity"));
    }
    if refinement_bad > 0 {
        failures.push(format!("{refinement_bad} refinement violations against fitness2"));
    }

    // transitivity and tie-as-equivalence over 10^4 triples, including
    // engineered ties via input translation
    let mut transitivity_bad = 0u64;
    let mut tie_bad = 0u64;
    for i in 0..10_000u64 {
        let n = 2 + (i % 4) as u32;
        let x = spectra(30_000 + 3 * i, n);
        let y = spectra(30_001 + 3 * i, n);
        let z = spectra(30_002 + 3 * i, n);
        let xy = compare_histograms(&x, &y).unwrap();
        let yz = compare_histograms(&y, &z).unwrap();
        let xz = compare_histograms(&x, &z).unwrap();
        let beats = |p: Preference| p == Preference::PreferFirst;
        if beats(xy) && (yz == Preference::PreferFirst || yz == Preference::Tie) && !beats(xz) {
            transitivity_bad += 1;
        }
        if xy == Preference::Tie && yz == Preference::Tie && xz != Preference::Tie {
            transitivity_bad += 1;
        }

        // y' ties with y by construction: translating the input permutes
        // coefficient magnitudes without changing the multiset
        let ty = TruthTable::random_balanced(n, &mut ChaCha12Rng::seed_from_u64(30_001 + 3 * i))
            .unwrap();
        let shift = (i as usize + 1) % ty.len();
        let translated =
            TruthTable::from_bits((0..ty.len()).map(|p| ty.bit(p ^ shift)).collect()).unwrap();
        let y_tied = fwht(&translated);
        if compare_histograms(&y, &y_tied).unwrap() != Preference::Tie {
            tie_bad += 1;
        } else if compare_histograms(&x, &y_tied).unwrap() != xy {
            // members of a tie class must compare identically to outsiders
            tie_bad += 1;
        }
    }
    if transitivity_bad > 0 {
        failures.push(format!("{transitivity_bad} transitivity violations"));
    }
    if tie_bad > 0 {
        failures.push(format!("{tie_bad} tie-equivalence violations"));
    }

    report(
        "criterion 4: comparator laws (antisymmetry, transitivity, tie equivalence, fitness \
         refinement, oracle agreement) over 10^4 pairs/triples",
        failures,
    );
}

/// Correlation between parent and neighbor non-linearity at n=8: 5000 sampled
/// parents, two neighbors each.
fn mutation_correlation(kind: MutationKind, master_seed: u64) -> (f64, f64) {
    let pairs: Vec<(f64, f64)> = (0..5000u64)
        .into_par_iter()
        .flat_map_iter(|sample| {
            let mut rng = ChaCha12Rng::seed_from_u64(derive_run_seed(master_seed, sample));
            let parent = TruthTable::random_balanced(8, &mut rng).unwrap();
            let parent_nl = fwht(&parent).nonlinearity() as f64;
            (0..2)
                .map(|_| {
                    let neighbor = kind.apply(&parent, &mut rng).unwrap();
                    (parent_nl, fwht(&neighbor).nonlinearity() as f64)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let xs: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    (spearman(&xs, &ys).unwrap(), pearson(&xs, &ys).unwrap())
}

#[test]
fn criterion_5_mutation_correlation_bands() {
    let cases = [
        (MutationKind::Swap(1), 0.80, 0.92),
        (MutationKind::Swap(3), 0.60, 0.78),
        (MutationKind::CyclicShift, -0.02, 0.15),
        (MutationKind::Inversion, 0.18, 0.38),
    ];
    let mut failures = Vec::new();
    for (index, (kind, lo, hi)) in cases.into_iter().enumerate() {
        let (rho, r) = mutation_correlation(kind, derive_run_seed(MASTER_SEED, index as u64));
        println!("  {kind}: spearman {rho:.4}, pearson {r:.4} (band [{lo}, {hi}])");
        if !(lo..=hi).contains(&rho) {
            failures.push(format!("{kind} spearman {rho:.4} outside [{lo}, {hi}]"));
        }
    }
    report(
        "criterion 5: neighbor non-linearity correlation bands at n=8, 5000 samples",
        failures,
    );
}

fn batch(n_vars: u32, criterion: Criterion, target_nl: u32, runs: usize) -> nlsearch_core::BatchResult {
    let config = SearchConfig {
        n_vars,
        criterion,
        target_nl,
        eval_budget: 500_000,
        seed: MASTER_SEED,
        order: NeighborOrder::default(),
    };
    run_batch(&config, runs).unwrap()
}

#[test]
fn criterion_6_search_reproduction_n6_n7() {
    let mut failures = Vec::new();
    for (n, target, paper_hist_median) in [(6u32, 26u32, 242.0f64), (7, 56, 1871.0)] {
        let hist = batch(n, Criterion::Hist, target, 100);
        let fit2 = batch(n, Criterion::Fit2, target, 100);
        let hist_median = hist.eval_stats.map(|s| s.median).unwrap_or(f64::INFINITY);
        let fit2_median = fit2.eval_stats.map(|s| s.median).unwrap_or(f64::INFINITY);
        println!(
            "  n={n}: hist success {:.1}% median {hist_median}, fit2 success {:.1}% median {fit2_median}",
            hist.success_percent, fit2.success_percent
        );
        if hist.success_percent < 90.0 {
            failures.push(format!(
                "hist success {:.1}% below 90% at n={n}",
                hist.success_percent
            ));
        }
        if hist_median >= fit2_median {
            failures.push(format!(
                "hist median {hist_median} not below fit2 median {fit2_median} at n={n}"
            ));
        }
        if hist_median < paper_hist_median / 2.0 || hist_median > paper_hist_median * 2.0 {
            failures.push(format!(
                "hist median {hist_median} outside factor 2 of {paper_hist_median} at n={n}"
            ));
        }
    }
    report(
        "criterion 6: local-search reproduction at n=6 and n=7 (success rate, median ordering, \
         median bands)",
        failures,
    );
}

#[test]
fn criterion_7_statistical_superiority_n6() {
    let hist = batch(6, Criterion::Hist, 26, 100);
    let fit2 = batch(6, Criterion::Fit2, 26, 100);
    let result = mann_whitney_u(
        &hist.successful_evaluations(),
        &fit2.successful_evaluations(),
        Alternative::Less,
    )
    .unwrap();
    println!("  one-sided Mann-Whitney U p = {:.2e}", result.p_value);
    let mut failures = Vec::new();
    if result.p_value >= 0.01 {
        failures.push(format!("p = {} not below 0.01", result.p_value));
    }
    report(
        "criterion 7: evaluation counts stochastically smaller under the histogram criterion \
         (Mann-Whitney p < 0.01 at n=6)",
        failures,
    );
}

#[test]
fn criterion_8_statistics_unit_vectors() {
    let mut failures = Vec::new();

    // success-count tables from 200-run experiments at n=6 and n=7
    let close = |p: f64, expected: f64| (p - expected).abs() / expected <= 0.20;
    let t6 = ContingencyTable2x2 { a: 183, b: 17, c: 198, d: 2 };
    let p6: Vec<f64> = [Alternative::TwoSided, Alternative::Less, Alternative::Greater]
        .iter()
        .map(|&alt| fisher_exact(t6, alt).unwrap())
        .collect();
    println!("  fisher 183/17 vs 198/2: two {:.4e}, less {:.4e}", p6[0], p6[1]);
    if !p6.iter().any(|&p| close(p, 0.0006)) {
        failures.push(format!(
            "no documented sidedness matches 0.0006 within 20% (got {p6:?})"
        ));
    }
    let t7 = ContingencyTable2x2 { a: 194, b: 6, c: 199, d: 1 };
    let p7: Vec<f64> = [Alternative::TwoSided, Alternative::Less, Alternative::Greater]
        .iter()
        .map(|&alt| fisher_exact(t7, alt).unwrap())
        .collect();
    println!("  fisher 194/6 vs 199/1: two {:.4e}, less {:.4e}", p7[0], p7[1]);
    if !p7.iter().any(|&p| close(p, 0.122)) {
        failures.push(format!(
            "no documented sidedness matches 0.122 within 20% (got {p7:?})"
        ));
    }

    let mwu = mann_whitney_u(&[1.0, 2.0], &[3.0, 4.0], Alternative::Less).unwrap();
    if (mwu.p_value - 1.0 / 6.0).abs() > 1e-15 {
        failures.push(format!("exact Mann-Whitney p {} differs from 1/6", mwu.p_value));
    }

    report("criterion 8: statistics unit vectors (Fisher tables, exact Mann-Whitney)", failures);
}

#[test]
fn criterion_9_n8_feasibility() {
    let hist = batch(8, Criterion::Hist, 116, 25);
    let median = hist.eval_stats.map(|s| s.median).unwrap_or(f64::INFINITY);
    println!(
        "  n=8: hist success {:.1}%, median evaluations {median}",
        hist.success_percent
    );
    let mut failures = Vec::new();
    if hist.success_percent < 80.0 {
        failures.push(format!("success {:.1}% below 80%", hist.success_percent));
    }
    if median < 14974.0 / 2.0 || median > 14974.0 * 2.0 {
        failures.push(format!("median {median} outside factor 2 of 14974"));
    }
    report("criterion 9: n=8 feasibility (25 runs, target 116)", failures);
}

/// The n=9 row (target 236, 25 runs) is reproducible but excluded from the
/// default suite; run it with `cargo test -p nlsearch-core --test acceptance
/// -- --ignored --nocapture`.
#[test]
#[ignore = "long-running n=9 reproduction; run explicitly with --ignored"]
fn n9_reproduction() {
    let hist = batch(9, Criterion::Hist, 236, 25);
    let median = hist.eval_stats.map(|s| s.median).unwrap_or(f64::INFINITY);
    println!(
        "  n=9: hist success {:.1}%, median evaluations {median}",
        hist.success_percent
    );
    let mut failures = Vec::new();
    if hist.success_percent < 80.0 {
        failures.push(format!("success {:.1}% below 80%", hist.success_percent));
    }
    if median < 6362.0 / 2.0 || median > 6362.0 * 2.0 {
        failures.push(format!("median {median} outside factor 2 of 6362"));
    }
    report("n=9 reproduction (25 runs, target 236)", failures);
}
