//! Exact Kemeny rank aggregation.
//!
//! [`kemeny_dp`] runs the subset dynamic program in `O(2^m · m^2)` after an
//! `O(n · m^2)` pairwise precomputation. [`kemeny_brute_force`] enumerates all
//! `m!` rankings and serves as its oracle. Both break ties towards the
//! lexicographically smallest ranking, so their outputs are identical.

use itertools::Itertools;

use crate::election::{kemeny_score_of, kendall_tau, Election, PreferenceOrder};
use crate::error::{Error, Result};

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 8;
pub const DP_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KemenyResult {
    pub ranking: PreferenceOrder,
    /// Total number of inversions against all voters.
    pub score: u64,
}

pub fn kemeny_brute_force(e: &Election) -> Result<KemenyResult> {
    kemeny_brute_force_with_limit(e, DEFAULT_BRUTE_FORCE_LIMIT)
}

pub fn kemeny_brute_force_with_limit(e: &Election, limit_m: usize) -> Result<KemenyResult> {
    let m = e.m();
    if m > limit_m {
        return Err(Error::capacity("number of alternatives", m as u64, limit_m as u64));
    }
    let mut best: Option<KemenyResult> = None;
    // itertools yields permutations of a sorted input in lexicographic order
    for perm in (0..m).permutations(m) {
        let ranking = PreferenceOrder::from_ranking_unchecked(perm);
        let score = kemeny_score_of(e, &ranking)?;
        if best.as_ref().is_none_or(|b| score < b.score) {
            best = Some(KemenyResult { ranking, score });
        }
    }
    Ok(best.expect("m >= 1"))
}

/// Every ranking attaining the optimal Kemeny score, in lexicographic order.
pub fn all_optimal_rankings(e: &Election, limit_m: usize) -> Result<(u64, Vec<PreferenceOrder>)> {
    let m = e.m();
    if m > limit_m {
        return Err(Error::capacity("number of alternatives", m as u64, limit_m as u64));
    }
    let mut best = u64::MAX;
    let mut all = Vec::new();
    for perm in (0..m).permutations(m) {
        let ranking = PreferenceOrder::from_ranking_unchecked(perm);
        let score = kemeny_score_of(e, &ranking)?;
        if score < best {
            best = score;
            all.clear();
        }
        if score == best {
            all.push(ranking);
        }
    }
    Ok((best, all))
}

pub fn kemeny_dp(e: &Election) -> Result<KemenyResult> {
    let m = e.m();
    if m > DP_LIMIT {
        return Err(Error::capacity("number of alternatives", m as u64, DP_LIMIT as u64));
    }
    let w = e.majority_matrix();
    let full: usize = (1 << m) - 1;

    // best[s] = cheapest way to order the still-unplaced set `s`, given that
    // everything outside `s` is already ranked above it. Placing `c` first
    // among `s` costs the voters who prefer some other member of `s` over `c`.
    let mut best = vec![0u64; 1 << m];
    for s in 1..=full {
        let mut min = u64::MAX;
        let mut rest = s;
        while rest != 0 {
            let c = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << c);
            let cost = placement_cost(&w, without, c) + best[without];
            min = min.min(cost);
        }
        best[s] = min;
    }

    // forward reconstruction, smallest id first among optimal choices
    let mut ranking = Vec::with_capacity(m);
    let mut s = full;
    while s != 0 {
        let target = best[s];
        let c = (0..m)
            .filter(|&c| s & (1 << c) != 0)
            .find(|&c| {
                let without = s & !(1 << c);
                placement_cost(&w, without, c) + best[without] == target
            })
            .expect("some choice attains the optimum");
        ranking.push(c);
        s &= !(1 << c);
    }
    Ok(KemenyResult {
        ranking: PreferenceOrder::from_ranking_unchecked(ranking),
        score: best[full],
    })
}

fn placement_cost(w: &crate::election::MajorityMatrix, others: usize, c: usize) -> u64 {
    let mut cost = 0;
    let mut rest = others;
    while rest != 0 {
        let d = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        cost += w.wins(d, c);
    }
    cost
}

/// Is there a ranking with Kemeny score at most `k`?
pub fn kemeny_decision(e: &Election, k: u64) -> Result<bool> {
    let m = e.m() as u64;
    if k >= e.n() as u64 * m * (m.saturating_sub(1)) / 2 {
        return Ok(true);
    }
    Ok(kemeny_dp(e)?.score <= k)
}

/// Ceiling of the average Kendall tau distance over all voter pairs.
/// Defined as 0 for a single voter.
pub fn avg_pairwise_distance(e: &Election) -> u64 {
    let n = e.n();
    if n < 2 {
        return 0;
    }
    let v = e.voters();
    let mut total = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            total += kendall_tau(&v[i], &v[j]).expect("same m");
        }
    }
    let pairs = (n * (n - 1) / 2) as u64;
    total.div_ceil(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn figure_one_both_routes() {
        let e = fixtures::kemeny_example();
        let dp = kemeny_dp(&e).unwrap();
        let bf = kemeny_brute_force(&e).unwrap();
        assert_eq!(dp.score, 4);
        assert_eq!(dp.ranking.ranking(), &[0, 1, 2, 3]);
        assert_eq!(dp, bf);
        let (score, all) = all_optimal_rankings(&e, 8).unwrap();
        assert_eq!(score, 4);
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn trivial_elections_score_zero() {
        let e = Election::from_rankings(3, &[&[2, 0, 1]]).unwrap();
        let r = kemeny_dp(&e).unwrap();
        assert_eq!(r.score, 0);
        assert_eq!(r.ranking.ranking(), &[2, 0, 1]);
        let e = Election::from_rankings(3, &[&[1, 2, 0], &[1, 2, 0]]).unwrap();
        assert_eq!(kemeny_brute_force(&e).unwrap().ranking.ranking(), &[1, 2, 0]);
        assert!(kemeny_decision(&e, 0).unwrap());
    }

    #[test]
    fn decision_threshold() {
        let e = fixtures::kemeny_example();
        assert!(kemeny_decision(&e, 4).unwrap());
        assert!(!kemeny_decision(&e, 3).unwrap());
        assert!(kemeny_decision(&e, 18).unwrap());
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // two opposite voters: every ranking scores 3, smallest is identity
        let e = Election::from_rankings(3, &[&[2, 1, 0], &[0, 1, 2]]).unwrap();
        let dp = kemeny_dp(&e).unwrap();
        assert_eq!(dp.score, 3);
        assert_eq!(dp.ranking.ranking(), &[0, 1, 2]);
        assert_eq!(dp, kemeny_brute_force(&e).unwrap());
    }

    #[test]
    fn capacity_limits() {
        let big = Election::new(9, vec![PreferenceOrder::identity(9)]).unwrap();
        assert!(kemeny_brute_force(&big).unwrap_err().is_capacity());
        assert_eq!(kemeny_brute_force_with_limit(&big, 9).unwrap().score, 0);
        let huge = Election::new(25, vec![PreferenceOrder::identity(25)]).unwrap();
        assert!(kemeny_dp(&huge).unwrap_err().is_capacity());
    }

    #[test]
    fn average_distance() {
        assert_eq!(avg_pairwise_distance(&fixtures::kemeny_example()), 3);
        let e = Election::from_rankings(4, &[&[0, 1, 2, 3], &[3, 2, 1, 0]]).unwrap();
        assert_eq!(avg_pairwise_distance(&e), 6);
        let e = Election::from_rankings(4, &[&[0, 1, 2, 3], &[0, 1, 2, 3], &[0, 1, 2, 3]]).unwrap();
        assert_eq!(avg_pairwise_distance(&e), 0);
        let e = Election::from_rankings(2, &[&[0, 1]]).unwrap();
        assert_eq!(avg_pairwise_distance(&e), 0);
    }
}
