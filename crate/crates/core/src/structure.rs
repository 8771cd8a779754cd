//! Recognition and distance measures for structured elections.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;

use crate::election::{Alt, Election, PreferenceOrder};
use crate::error::{Error, Result};

pub const AXIS_SEARCH_LIMIT: usize = 10;
pub const GROUP_SEPARABLE_LIMIT: usize = 20;
pub const VOTER_DELETION_LIMIT: usize = 10;
pub const ALTERNATIVE_DELETION_LIMIT: usize = 8;

/// Societal order of the alternatives, left to right.
pub type Axis = PreferenceOrder;

/// Number of local maxima of the voter's utility along the axis.
/// A monotone sequence has exactly one.
pub fn peak_count(order: &PreferenceOrder, axis: &Axis) -> Result<usize> {
    let m = order.len();
    if axis.len() != m {
        return Err(Error::Dimension { expected: m, got: axis.len() });
    }
    let u: Vec<usize> = axis.ranking().iter().map(|&c| m - order.position(c)).collect();
    Ok((0..m)
        .filter(|&i| (i == 0 || u[i - 1] < u[i]) && (i + 1 == m || u[i + 1] < u[i]))
        .count())
}

pub fn is_single_peaked_wrt(e: &Election, axis: &Axis) -> bool {
    e.voters().iter().all(|v| peak_count(v, axis) == Ok(1))
}

/// Largest peak count over all voters: the election is k-peaked along the axis
/// for every k at least this value.
pub fn max_peaks(e: &Election, axis: &Axis) -> Result<usize> {
    e.voters().iter().map(|v| peak_count(v, axis)).try_fold(0, |a, x| Ok(a.max(x?)))
}

/// Lexicographically first axis along which every voter is single-peaked.
pub fn find_single_peaked_axis(e: &Election) -> Result<Option<Axis>> {
    let mut found = None;
    axis_search(e, &mut |axis| {
        found = Some(axis);
        false
    })?;
    Ok(found)
}

/// All valid axes in lexicographic order; each comes with its reverse.
pub fn all_single_peaked_axes(e: &Election) -> Result<Vec<Axis>> {
    let mut all = Vec::new();
    axis_search(e, &mut |axis| {
        all.push(axis);
        true
    })?;
    Ok(all)
}

fn axis_search(e: &Election, visit: &mut dyn FnMut(Axis) -> bool) -> Result<()> {
    let m = e.m();
    if m > AXIS_SEARCH_LIMIT {
        return Err(Error::capacity("number of alternatives", m as u64, AXIS_SEARCH_LIMIT as u64));
    }
    let mut prefix = Vec::with_capacity(m);
    let mut used = vec![false; m];
    extend_axis(e, &mut prefix, &mut used, &vec![false; e.n()], visit);
    Ok(())
}

/// `falling[v]`: voter `v`'s utility has already decreased along the prefix,
/// so it may never rise again. Returns false once `visit` asks to stop.
fn extend_axis(
    e: &Election,
    prefix: &mut Vec<Alt>,
    used: &mut [bool],
    falling: &[bool],
    visit: &mut dyn FnMut(Axis) -> bool,
) -> bool {
    let m = e.m();
    if prefix.len() == m {
        return visit(PreferenceOrder::from_ranking_unchecked(prefix.clone()));
    }
    for c in 0..m {
        if used[c] {
            continue;
        }
        let next: Vec<bool> = match prefix.last() {
            None => falling.to_vec(),
            Some(&last) => {
                let next: Vec<bool> = e
                    .voters()
                    .iter()
                    .zip(falling)
                    .map(|(v, &f)| f || v.prefers(last, c))
                    .collect();
                let rises_again = e
                    .voters()
                    .iter()
                    .zip(falling)
                    .any(|(v, &f)| f && v.prefers(c, last));
                if rises_again {
                    continue;
                }
                next
            }
        };
        used[c] = true;
        prefix.push(c);
        let go_on = extend_axis(e, prefix, used, &next, visit);
        prefix.pop();
        used[c] = false;
        if !go_on {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingReport {
    /// `(a, b, count)` for every pair `a < b`.
    pub crossings: Vec<(Alt, Alt, usize)>,
    pub single_crossing: bool,
    pub max_crossings: usize,
}

/// Counts, per pair, how often the relative order flips along `voter_order`.
pub fn single_crossing_report(e: &Election, voter_order: &[usize]) -> Result<CrossingReport> {
    let n = e.n();
    let mut seen = vec![false; n];
    if voter_order.len() != n || voter_order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::invalid("voter order must be a permutation of the voters"));
    }
    let m = e.m();
    let mut crossings = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for a in 0..m {
        for b in a + 1..m {
            let count = voter_order
                .windows(2)
                .filter(|w| e.voter(w[0]).prefers(a, b) != e.voter(w[1]).prefers(a, b))
                .count();
            crossings.push((a, b, count));
        }
    }
    let max_crossings = crossings.iter().map(|x| x.2).max().unwrap_or(0);
    Ok(CrossingReport {
        crossings,
        single_crossing: max_crossings <= 1,
        max_crossings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanEmbedding {
    pub dimension: usize,
    pub alternatives: Vec<Vec<BigRational>>,
    pub voters: Vec<Vec<BigRational>>,
}

impl EuclideanEmbedding {
    /// One-dimensional embedding from integer coordinates.
    pub fn line(alternatives: &[i64], voters: &[i64]) -> Self {
        let conv = |xs: &[i64]| xs.iter().map(|&x| vec![BigRational::from_integer(x.into())]).collect();
        EuclideanEmbedding {
            dimension: 1,
            alternatives: conv(alternatives),
            voters: conv(voters),
        }
    }
}

fn squared_distance(x: &[BigRational], y: &[BigRational]) -> BigRational {
    x.iter().zip(y).fold(BigRational::zero(), |acc, (a, b)| {
        let d = a - b;
        acc + &d * &d
    })
}

/// Every voter must be strictly closer to each alternative it prefers.
/// Equal distances reject the embedding.
pub fn verify_euclidean(e: &Election, emb: &EuclideanEmbedding) -> Result<bool> {
    if emb.dimension == 0 {
        return Err(Error::invalid("embedding dimension must be at least 1"));
    }
    if emb.alternatives.len() != e.m() {
        return Err(Error::invalid(format!(
            "embedding places {} alternatives, election has {}",
            emb.alternatives.len(),
            e.m()
        )));
    }
    if emb.voters.len() != e.n() {
        return Err(Error::invalid(format!(
            "embedding places {} voters, election has {}",
            emb.voters.len(),
            e.n()
        )));
    }
    if let Some(bad) = emb.alternatives.iter().chain(&emb.voters).find(|p| p.len() != emb.dimension) {
        return Err(Error::Dimension {
            expected: emb.dimension,
            got: bad.len(),
        });
    }
    for (v, pos) in e.voters().iter().zip(&emb.voters) {
        let d: Vec<BigRational> = v
            .ranking()
            .iter()
            .map(|&c| squared_distance(pos, &emb.alternatives[c]))
            .collect();
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Axis obtained by sorting alternatives by their position on the line.
pub fn axis_of_line(emb: &EuclideanEmbedding) -> Option<Axis> {
    if emb.dimension != 1 {
        return None;
    }
    let mut idx: Vec<Alt> = (0..emb.alternatives.len()).collect();
    idx.sort_by(|&a, &b| emb.alternatives[a][0].cmp(&emb.alternatives[b][0]).then(a.cmp(&b)));
    Some(PreferenceOrder::from_ranking_unchecked(idx))
}

/// A split `(A, B)` such that every voter ranks all of `A` above all of `B` or
/// the other way round; lexicographically first `A` (as a sorted list).
pub fn group_separable_split(e: &Election) -> Result<Option<(Vec<Alt>, Vec<Alt>)>> {
    let m = e.m();
    if m > GROUP_SEPARABLE_LIMIT {
        return Err(Error::capacity("number of alternatives", m as u64, GROUP_SEPARABLE_LIMIT as u64));
    }
    // any valid A is a prefix or suffix of the first voter's order
    let first = e.voter(0).ranking();
    let mut candidates: Vec<Vec<Alt>> = Vec::new();
    for i in 1..m {
        let mut pre = first[..i].to_vec();
        let mut suf = first[i..].to_vec();
        pre.sort_unstable();
        suf.sort_unstable();
        candidates.push(pre);
        candidates.push(suf);
    }
    candidates.sort();
    for a in candidates {
        let mut in_a = vec![false; m];
        for &c in &a {
            in_a[c] = true;
        }
        let separated = e.voters().iter().all(|v| {
            let r = v.ranking();
            let k = a.len();
            r[..k].iter().all(|&c| in_a[c]) || r[m - k..].iter().all(|&c| in_a[c])
        });
        if separated {
            let b = (0..m).filter(|&c| !in_a[c]).collect();
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeletionMode {
    Voters,
    Alternatives,
}

/// Fewest voters (or alternatives) to delete for the rest to be single-peaked
/// along some axis, with the lexicographically first witness of that size.
pub fn sp_deletion_distance(e: &Election, mode: DeletionMode) -> Result<(usize, Vec<usize>)> {
    let (size, limit) = match mode {
        DeletionMode::Voters => (e.n(), VOTER_DELETION_LIMIT),
        DeletionMode::Alternatives => (e.m(), ALTERNATIVE_DELETION_LIMIT),
    };
    if size > limit {
        return Err(Error::capacity(
            match mode {
                DeletionMode::Voters => "number of voters",
                DeletionMode::Alternatives => "number of alternatives",
            },
            size as u64,
            limit as u64,
        ));
    }
    for k in 0..size {
        for deleted in (0..size).combinations(k) {
            let keep: Vec<usize> = (0..size).filter(|i| !deleted.contains(i)).collect();
            let rest = match mode {
                DeletionMode::Voters => e.restrict_voters(&keep)?,
                DeletionMode::Alternatives => e.restrict_alternatives(&keep)?,
            };
            if find_single_peaked_axis(&rest)?.is_some() {
                return Ok((k, deleted));
            }
        }
    }
    unreachable!("a single voter or alternative is always single-peaked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn axis(r: &[Alt]) -> Axis {
        PreferenceOrder::new(r.to_vec()).unwrap()
    }

    fn naive_sp(e: &Election, a: &Axis) -> bool {
        // first strictly increasing then strictly decreasing utility
        e.voters().iter().all(|v| {
            let u: Vec<usize> = a.ranking().iter().map(|&c| v.len() - v.position(c)).collect();
            let top = u.iter().enumerate().max_by_key(|x| x.1).unwrap().0;
            u[..=top].windows(2).all(|w| w[0] < w[1]) && u[top..].windows(2).all(|w| w[0] > w[1])
        })
    }

    #[test]
    fn peak_counts() {
        let id = axis(&[0, 1, 2, 3, 4]);
        assert_eq!(peak_count(&id, &id).unwrap(), 1);
        assert_eq!(peak_count(&axis(&[2, 3, 1, 0, 4]), &id).unwrap(), 1);
        // utilities along the axis: 5 1 4 2 3
        assert_eq!(peak_count(&axis(&[0, 2, 4, 3, 1]), &id).unwrap(), 3);
    }

    #[test]
    fn axis_search_agrees_with_naive_enumeration() {
        let e = fixtures::single_peaked_example();
        let naive: Vec<Axis> = (0..5)
            .permutations(5)
            .map(PreferenceOrder::from_ranking_unchecked)
            .filter(|a| naive_sp(&e, a))
            .collect();
        assert_eq!(all_single_peaked_axes(&e).unwrap(), naive);
        assert_eq!(find_single_peaked_axis(&e).unwrap().as_ref(), naive.first());
    }

    #[test]
    fn all_six_orders_have_no_axis() {
        let rows: Vec<Vec<Alt>> = (0..3).permutations(3).collect();
        let refs: Vec<&[Alt]> = rows.iter().map(|r| r.as_slice()).collect();
        let e = Election::from_rankings(3, &refs).unwrap();
        assert_eq!(find_single_peaked_axis(&e).unwrap(), None);
        let (k, w) = sp_deletion_distance(&e, DeletionMode::Voters).unwrap();
        assert_eq!(k, 2);
        assert_eq!(w.len(), 2);
        assert_eq!(sp_deletion_distance(&e, DeletionMode::Alternatives).unwrap().0, 1);
    }

    #[test]
    fn single_voter_always_structured() {
        let e = Election::from_rankings(4, &[&[2, 0, 3, 1]]).unwrap();
        assert!(find_single_peaked_axis(&e).unwrap().is_some());
        assert!(single_crossing_report(&e, &[0]).unwrap().single_crossing);
        assert_eq!(sp_deletion_distance(&e, DeletionMode::Voters).unwrap(), (0, vec![]));
    }

    #[test]
    fn crossings_on_figure_one() {
        let e = fixtures::kemeny_example();
        let r = single_crossing_report(&e, &[0, 1, 2]).unwrap();
        for &(a, b, count) in &r.crossings {
            let signs: Vec<bool> = e.voters().iter().map(|v| v.prefers(a, b)).collect();
            let naive = signs.windows(2).filter(|w| w[0] != w[1]).count();
            assert_eq!(count, naive);
        }
        assert!(single_crossing_report(&e, &[0, 0, 1]).is_err());
    }

    #[test]
    fn euclidean_line() {
        let e = Election::from_rankings(2, &[&[0, 1]]).unwrap();
        assert!(verify_euclidean(&e, &EuclideanEmbedding::line(&[1, 3], &[0])).unwrap());
        assert!(!verify_euclidean(&e, &EuclideanEmbedding::line(&[3, 1], &[0])).unwrap());
        assert!(!verify_euclidean(&e, &EuclideanEmbedding::line(&[-1, 1], &[0])).unwrap());
        assert!(verify_euclidean(&e, &EuclideanEmbedding::line(&[1], &[0])).is_err());
    }

    #[test]
    fn group_separable() {
        let e = Election::from_rankings(4, &[&[0, 1, 2, 3], &[3, 2, 1, 0], &[1, 0, 3, 2]]).unwrap();
        assert_eq!(group_separable_split(&e).unwrap(), Some((vec![0, 1], vec![2, 3])));
        let e = Election::from_rankings(4, &[&[1, 0, 2, 3], &[3, 2, 0, 1]]).unwrap();
        assert_eq!(group_separable_split(&e).unwrap(), Some((vec![0, 1], vec![2, 3])));
        let e = Election::from_rankings(3, &[&[0, 1, 2], &[1, 0, 2], &[0, 2, 1]]).unwrap();
        assert_eq!(group_separable_split(&e).unwrap(), None);
    }
}
