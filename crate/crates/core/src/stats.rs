//! Statistics used to analyze experiment outcomes: Pearson and Spearman
//! correlation, the one- and two-sided Mann-Whitney U test, Fisher's exact
//! test on 2x2 tables, and five-number summaries.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Direction of a one- or two-sided hypothesis test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alternative {
    /// First sample stochastically less than the second.
    Less,
    /// First sample stochastically greater than the second.
    Greater,
    TwoSided,
}

impl Alternative {
    pub fn as_str(&self) -> &'static str {
        match self {
            Alternative::Less => "less",
            Alternative::Greater => "greater",
            Alternative::TwoSided => "two-sided",
        }
    }
}

/// Result of a Mann-Whitney U test: the U statistic of the first sample and
/// the p-value under the requested alternative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MannWhitney {
    pub u: f64,
    pub p_value: f64,
}

/// A 2x2 contingency table: `(a, b)` are successes/failures in the first
/// group, `(c, d)` in the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContingencyTable2x2 {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

/// Five-number summary. `std` is the sample standard deviation (divisor
/// `n - 1`, zero for a single observation); the median of an even-length
/// sample is the midpoint of the two central order statistics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SummaryStats {
    pub mean: f64,
    pub std: f64,
    pub median: f64,
    pub min: f64,
    pub max: f64,
}

fn require_finite(values: &[f64], name: &str) -> Result<()> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "{name} contains a non-finite value"
        )));
    }
    Ok(())
}

/// Product-moment correlation coefficient.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidParameter(format!(
            "sample lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::InvalidParameter(
            "correlation needs at least two observations".into(),
        ));
    }
    require_finite(x, "x")?;
    require_finite(y, "y")?;
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (&xi, &yi) in x.iter().zip(y) {
        let dx = xi - mean_x;
        let dy = yi - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedStatistic(
            "correlation is undefined for a zero-variance sample".into(),
        ));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Rank correlation: Pearson coefficient of the average-ranked data, ties
/// receiving mean ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidParameter(format!(
            "sample lengths differ: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    require_finite(x, "x")?;
    require_finite(y, "y")?;
    let (rx, _) = average_ranks(x);
    let (ry, _) = average_ranks(y);
    pearson(&rx, &ry)
}

/// 1-based average ranks, plus the sum of `t^3 - t` over tie groups of
/// size `t` (used in the normal-approximation tie correction).
fn average_ranks(values: &[f64]) -> (Vec<f64>, f64) {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut tie_term = 0.0;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let mean_rank = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = mean_rank;
        }
        let t = (end - start) as f64;
        tie_term += t * t * t - t;
        start = end;
    }
    (ranks, tie_term)
}

/// Mann-Whitney U test via rank sums with mean-rank tie handling.
///
/// The returned statistic is the U of the first sample, so swapping the
/// samples maps U to `|a|*|b| - U`. For combined sizes up to 20 the p-value
/// is computed exactly by enumerating all rank assignments; above that a
/// normal approximation with tie and continuity corrections is used.
pub fn mann_whitney_u(a: &[f64], b: &[f64], alternative: Alternative) -> Result<MannWhitney> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidParameter(
            "both samples must be non-empty".into(),
        ));
    }
    require_finite(a, "a")?;
    require_finite(b, "b")?;
    let n1 = a.len();
    let n2 = b.len();
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let (ranks, tie_term) = average_ranks(&pooled);
    let rank_sum_a: f64 = ranks[..n1].iter().sum();
    let u = rank_sum_a - (n1 * (n1 + 1)) as f64 / 2.0;

    let p_value = if n1 + n2 <= 20 {
        exact_mwu_p(&ranks, n1, u, alternative)
    } else {
        normal_mwu_p(u, n1, n2, tie_term, alternative)
    };
    Ok(MannWhitney { u, p_value })
}

/// Exact permutation p-value: every choice of which pooled ranks belong to
/// the first sample is equally likely under the null.
fn exact_mwu_p(ranks: &[f64], n1: usize, u_observed: f64, alternative: Alternative) -> f64 {
    let n = ranks.len();
    let offset = (n1 * (n1 + 1)) as f64 / 2.0;
    let mut le = 0u64;
    let mut ge = 0u64;
    let mut total = 0u64;
    // Ranks are multiples of 1/2, so all the arithmetic below is exact.
    let mut chosen_sum = 0.0;
    enumerate_choices(ranks, 0, n1, &mut chosen_sum, &mut |sum| {
        let u = sum - offset;
        total += 1;
        if u <= u_observed {
            le += 1;
        }
        if u >= u_observed {
            ge += 1;
        }
    });
    debug_assert_eq!(total, binomial_u64(n, n1));
    let p_le = le as f64 / total as f64;
    let p_ge = ge as f64 / total as f64;
    match alternative {
        Alternative::Less => p_le,
        Alternative::Greater => p_ge,
        Alternative::TwoSided => (2.0 * p_le.min(p_ge)).min(1.0),
    }
}

fn enumerate_choices(
    ranks: &[f64],
    next: usize,
    remaining: usize,
    chosen_sum: &mut f64,
    visit: &mut impl FnMut(f64),
) {
    if remaining == 0 {
        visit(*chosen_sum);
        return;
    }
    if ranks.len() - next == remaining {
        let tail: f64 = ranks[next..].iter().sum();
        visit(*chosen_sum + tail);
        return;
    }
    *chosen_sum += ranks[next];
    enumerate_choices(ranks, next + 1, remaining - 1, chosen_sum, visit);
    *chosen_sum -= ranks[next];
    enumerate_choices(ranks, next + 1, remaining, chosen_sum, visit);
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    let mut result = 1u64;
    for i in 0..k.min(n - k) {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

fn normal_mwu_p(u: f64, n1: usize, n2: usize, tie_term: f64, alternative: Alternative) -> f64 {
    let n1f = n1 as f64;
    let n2f = n2 as f64;
    let n = n1f + n2f;
    let mean = n1f * n2f / 2.0;
    let variance = n1f * n2f / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if variance <= 0.0 {
        // Every pooled observation is identical; the data carry no evidence.
        return 1.0;
    }
    let sd = variance.sqrt();
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    // Continuity correction of 1/2 toward the mean.
    let p_less = normal.cdf((u - mean + 0.5) / sd);
    let p_greater = 1.0 - normal.cdf((u - mean - 0.5) / sd);
    match alternative {
        Alternative::Less => p_less,
        Alternative::Greater => p_greater,
        Alternative::TwoSided => (2.0 * p_less.min(p_greater)).min(1.0),
    }
}

/// Fisher's exact test on a 2x2 table, computed with exact big-integer
/// hypergeometric weights so that large cell counts cannot overflow.
///
/// The two-sided p-value sums the probabilities of all tables no more likely
/// than the observed one (the usual convention).
pub fn fisher_exact(table: ContingencyTable2x2, alternative: Alternative) -> Result<f64> {
    let ContingencyTable2x2 { a, b, c, d } = table;
    let row1 = a + b;
    let row2 = c + d;
    let col1 = a + c;
    let col2 = b + d;
    if row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0 {
        return Err(Error::UndefinedStatistic(
            "fisher_exact requires positive row and column margins".into(),
        ));
    }
    // Support of the first cell with all margins fixed.
    let k_min = col1.saturating_sub(row2);
    let k_max = row1.min(col1);
    let weights: Vec<BigUint> = (k_min..=k_max)
        .map(|k| binomial_big(row1, k) * binomial_big(row2, col1 - k))
        .collect();
    let observed = &weights[(a - k_min) as usize];
    let total: BigUint = weights.iter().sum();

    let numerator: BigUint = match alternative {
        Alternative::Less => weights[..=(a - k_min) as usize].iter().sum(),
        Alternative::Greater => weights[(a - k_min) as usize..].iter().sum(),
        Alternative::TwoSided => weights.iter().filter(|w| *w <= observed).sum(),
    };
    let p = ratio_to_f64(&numerator, &total);
    Ok(p.clamp(0.0, 1.0))
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut result = BigUint::one();
    for i in 0..k {
        result *= n - i;
        result /= i + 1;
    }
    result
}

fn ratio_to_f64(numerator: &BigUint, denominator: &BigUint) -> f64 {
    if numerator.is_zero() {
        return 0.0;
    }
    // Scale both to f64 range. Cell counts in the thousands stay far below
    // f64::MAX, and larger tables are handled by the shared right shift.
    let shift = denominator.bits().saturating_sub(900);
    let num = (numerator >> shift).to_f64().unwrap_or(f64::MAX);
    let den = (denominator >> shift).to_f64().unwrap_or(f64::MAX);
    num / den
}

/// Five-number summary of a non-empty sample.
pub fn summary(values: &[f64]) -> Result<SummaryStats> {
    if values.is_empty() {
        return Err(Error::InvalidParameter(
            "summary of an empty sample is undefined".into(),
        ));
    }
    require_finite(values, "values")?;
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() == 1 {
        0.0
    } else {
        (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
    };
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    };
    Ok(SummaryStats {
        mean,
        std,
        median,
        min: sorted[0],
        max: sorted[sorted.len() - 1],
    })
}
