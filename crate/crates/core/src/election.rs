//! Election data model, pairwise majorities, scoring rules and Kendall tau.
//!
//! Alternatives are dense ids `0..m`. Labels only exist for I/O and are kept
//! on the [`Election`].

use std::fmt;

use crate::error::{Error, Result};

/// Dense alternative id.
pub type Alt = usize;

/// A complete strict ranking of `0..m`, most preferred first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreferenceOrder {
    ranking: Vec<Alt>,
    // 0-based position of each alternative
    position: Vec<usize>,
}

impl PreferenceOrder {
    pub fn new(ranking: Vec<Alt>) -> Result<Self> {
        let m = ranking.len();
        if m == 0 {
            return Err(Error::invalid("a preference order needs at least one alternative"));
        }
        let mut position = vec![usize::MAX; m];
        for (i, &c) in ranking.iter().enumerate() {
            if c >= m {
                return Err(Error::invalid(format!("alternative {c} out of range 0..{m}")));
            }
            if position[c] != usize::MAX {
                return Err(Error::invalid(format!("alternative {c} listed twice")));
            }
            position[c] = i;
        }
        Ok(PreferenceOrder { ranking, position })
    }

    /// The order `0 ≻ 1 ≻ … ≻ m-1`.
    pub fn identity(m: usize) -> Self {
        PreferenceOrder {
            ranking: (0..m).collect(),
            position: (0..m).collect(),
        }
    }

    pub(crate) fn from_ranking_unchecked(ranking: Vec<Alt>) -> Self {
        let mut position = vec![0; ranking.len()];
        for (i, &c) in ranking.iter().enumerate() {
            position[c] = i;
        }
        PreferenceOrder { ranking, position }
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[Alt] {
        &self.ranking
    }

    /// 1-based rank of `c`.
    pub fn rank_of(&self, c: Alt) -> usize {
        self.position[c] + 1
    }

    /// 0-based position of `c`.
    pub fn position(&self, c: Alt) -> usize {
        self.position[c]
    }

    pub fn at(&self, pos: usize) -> Alt {
        self.ranking[pos]
    }

    pub fn top(&self) -> Alt {
        self.ranking[0]
    }

    pub fn prefers(&self, a: Alt, b: Alt) -> bool {
        self.position[a] < self.position[b]
    }

    pub fn reversed(&self) -> Self {
        let mut r = self.ranking.clone();
        r.reverse();
        Self::from_ranking_unchecked(r)
    }

    /// Moves the alternative at position `from` up to position `to <= from`.
    pub(crate) fn lift(&self, from: usize, to: usize) -> Self {
        let mut r = self.ranking.clone();
        let c = r.remove(from);
        r.insert(to, c);
        Self::from_ranking_unchecked(r)
    }
}

impl fmt::Debug for PreferenceOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.ranking.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(">"))
    }
}

/// Alternatives `0..m` and an ordered list of at least one voter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Election {
    m: usize,
    labels: Vec<String>,
    voters: Vec<PreferenceOrder>,
}

impl Election {
    pub fn new(m: usize, voters: Vec<PreferenceOrder>) -> Result<Self> {
        let labels = default_labels(m);
        Self::with_labels(labels, voters)
    }

    pub fn with_labels(labels: Vec<String>, voters: Vec<PreferenceOrder>) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(Error::invalid("an election needs at least one alternative"));
        }
        if voters.is_empty() {
            return Err(Error::invalid("an election needs at least one voter"));
        }
        for v in &voters {
            if v.len() != m {
                return Err(Error::Dimension { expected: m, got: v.len() });
            }
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::invalid(format!("label {i} must be non-empty without whitespace")));
            }
            if labels[..i].contains(l) {
                return Err(Error::invalid(format!("duplicate label {l}")));
            }
        }
        Ok(Election { m, labels, voters })
    }

    /// Builds an election from raw rankings.
    pub fn from_rankings(m: usize, rankings: &[&[Alt]]) -> Result<Self> {
        let voters = rankings
            .iter()
            .map(|r| PreferenceOrder::new(r.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, voters)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.voters.len()
    }

    pub fn voters(&self) -> &[PreferenceOrder] {
        &self.voters
    }

    pub fn voter(&self, i: usize) -> &PreferenceOrder {
        &self.voters[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, c: Alt) -> &str {
        &self.labels[c]
    }

    pub fn has_default_labels(&self) -> bool {
        self.labels == default_labels(self.m)
    }

    /// Same alternatives, different voter list. Fails if `voters` is empty.
    pub fn with_voters(&self, voters: Vec<PreferenceOrder>) -> Result<Self> {
        Self::with_labels(self.labels.clone(), voters)
    }

    /// Keeps the voters at the given indices, in the given order.
    pub fn restrict_voters(&self, keep: &[usize]) -> Result<Self> {
        self.with_voters(keep.iter().map(|&i| self.voters[i].clone()).collect())
    }

    /// Restricts every order to the listed alternatives, which are relabeled
    /// `0..keep.len()` in the order given.
    pub fn restrict_alternatives(&self, keep: &[Alt]) -> Result<Self> {
        let mut new_id = vec![usize::MAX; self.m];
        for (i, &c) in keep.iter().enumerate() {
            if c >= self.m || new_id[c] != usize::MAX {
                return Err(Error::invalid(format!("bad alternative {c} in restriction")));
            }
            new_id[c] = i;
        }
        let voters = self
            .voters
            .iter()
            .map(|v| {
                let r = v
                    .ranking()
                    .iter()
                    .filter(|&&c| new_id[c] != usize::MAX)
                    .map(|&c| new_id[c])
                    .collect();
                PreferenceOrder::from_ranking_unchecked(r)
            })
            .collect();
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        Self::with_labels(labels, voters)
    }

    pub fn majority_matrix(&self) -> MajorityMatrix {
        majority_matrix(self)
    }
}

pub(crate) fn default_labels(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("a{i}")).collect()
}

/// `wins(a, b)` = number of voters ranking `a` above `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorityMatrix {
    m: usize,
    n: usize,
    wins: Vec<u64>,
}

impl MajorityMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn wins(&self, a: Alt, b: Alt) -> u64 {
        self.wins[a * self.m + b]
    }

    /// Strict pairwise majority: `2 * wins(a, b) > n`.
    pub fn beats(&self, a: Alt, b: Alt) -> bool {
        2 * self.wins(a, b) > self.n as u64
    }

    /// Sum over all other alternatives of `wins(a, ·)`; equals the Borda score.
    pub fn row_sum(&self, a: Alt) -> u64 {
        (0..self.m).map(|b| self.wins(a, b)).sum()
    }
}

pub fn majority_matrix(e: &Election) -> MajorityMatrix {
    let m = e.m();
    let mut wins = vec![0u64; m * m];
    for v in e.voters() {
        let r = v.ranking();
        for i in 0..m {
            for j in i + 1..m {
                wins[r[i] * m + r[j]] += 1;
            }
        }
    }
    MajorityMatrix { m, n: e.n(), wins }
}

/// The alternative beating every other one in a strict pairwise majority, if any.
pub fn condorcet_winner(e: &Election) -> Option<Alt> {
    condorcet_winner_of(&e.majority_matrix())
}

pub fn condorcet_winner_of(w: &MajorityMatrix) -> Option<Alt> {
    let m = w.m();
    let mut found = None;
    for c in 0..m {
        if (0..m).all(|d| d == c || w.beats(c, d)) {
            debug_assert!(found.is_none(), "two Condorcet winners");
            found = Some(c);
        }
    }
    found
}

/// Positional scoring vector `(α_1, …, α_m)`, nonincreasing and nonnegative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoringVector(Vec<u64>);

impl ScoringVector {
    pub fn new(alpha: Vec<u64>) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::invalid("empty scoring vector"));
        }
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("scoring vector must be nonincreasing"));
        }
        Ok(ScoringVector(alpha))
    }

    pub fn plurality(m: usize) -> Self {
        Self::approval(m, 1)
    }

    /// `d` ones followed by zeros.
    pub fn approval(m: usize, d: usize) -> Self {
        ScoringVector((0..m).map(|i| u64::from(i < d)).collect())
    }

    pub fn borda(m: usize) -> Self {
        ScoringVector((0..m as u64).rev().collect())
    }

    pub fn alpha(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Points for the 0-based position `pos`.
    pub fn points(&self, pos: usize) -> u64 {
        self.0[pos]
    }
}

/// The scoring rules the manipulation solvers understand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Plurality,
    Approval(usize),
    Borda,
}

impl Rule {
    pub fn scoring_vector(&self, m: usize) -> Result<ScoringVector> {
        match *self {
            Rule::Plurality => Ok(ScoringVector::plurality(m)),
            Rule::Approval(d) if d >= 1 && d <= m => Ok(ScoringVector::approval(m, d)),
            Rule::Approval(d) => Err(Error::invalid(format!("approval depth {d} outside 1..={m}"))),
            Rule::Borda => Ok(ScoringVector::borda(m)),
        }
    }
}

/// Whether ties for the top score count as a win.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WinnerMode {
    #[default]
    CoWinner,
    Unique,
}

impl WinnerMode {
    /// Whether `p` wins given the full score vector.
    pub fn is_winner(&self, scores: &[u64], p: Alt) -> bool {
        let sp = scores[p];
        scores.iter().enumerate().all(|(c, &s)| {
            c == p
                || match self {
                    WinnerMode::CoWinner => s <= sp,
                    WinnerMode::Unique => s < sp,
                }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScoreOutcome {
    pub scores: Vec<u64>,
    /// All alternatives attaining the maximum score, ascending.
    pub winners: Vec<Alt>,
}

impl ScoreOutcome {
    /// The winner under unique-winner semantics, if the maximum is not shared.
    pub fn unique_winner(&self) -> Option<Alt> {
        match self.winners[..] {
            [w] => Some(w),
            _ => None,
        }
    }
}

pub fn scores(e: &Election, s: &ScoringVector) -> Result<Vec<u64>> {
    if s.len() != e.m() {
        return Err(Error::Dimension { expected: e.m(), got: s.len() });
    }
    let mut total = vec![0u64; e.m()];
    for v in e.voters() {
        for (pos, &c) in v.ranking().iter().enumerate() {
            total[c] = total[c]
                .checked_add(s.points(pos))
                .ok_or(Error::Overflow("scores"))?;
        }
    }
    Ok(total)
}

pub fn scoring_winners(e: &Election, s: &ScoringVector) -> Result<ScoreOutcome> {
    let scores = scores(e, s)?;
    let best = scores.iter().copied().max().unwrap_or(0);
    let winners = (0..e.m()).filter(|&c| scores[c] == best).collect();
    Ok(ScoreOutcome { scores, winners })
}

/// Number of pairs ranked in opposite order by `p` and `q`.
pub fn kendall_tau(p: &PreferenceOrder, q: &PreferenceOrder) -> Result<u64> {
    if p.len() != q.len() {
        return Err(Error::Dimension { expected: p.len(), got: q.len() });
    }
    // positions of p's ranking in q; count inversions of that sequence
    let seq: Vec<usize> = p.ranking().iter().map(|&c| q.position(c)).collect();
    Ok(count_inversions(&seq))
}

fn count_inversions(seq: &[usize]) -> u64 {
    // Fenwick tree over positions
    let m = seq.len();
    let mut tree = vec![0u64; m + 1];
    let mut inv = 0u64;
    for (seen, &x) in seq.iter().enumerate() {
        let mut i = x + 1;
        let mut le = 0;
        while i > 0 {
            le += tree[i];
            i &= i - 1;
        }
        inv += seen as u64 - le;
        let mut i = x + 1;
        while i <= m {
            tree[i] += 1;
            i += i & i.wrapping_neg();
        }
    }
    inv
}

/// Σ over voters of `kendall_tau(ranking, voter)`.
pub fn kemeny_score_of(e: &Election, ranking: &PreferenceOrder) -> Result<u64> {
    e.voters().iter().map(|v| kendall_tau(ranking, v)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_non_permutations() {
        assert!(PreferenceOrder::new(vec![0, 0, 1]).is_err());
        assert!(PreferenceOrder::new(vec![0, 3, 1]).is_err());
        let o = PreferenceOrder::new(vec![2, 0, 1]).unwrap();
        for (i, &c) in o.ranking().iter().enumerate() {
            assert_eq!(o.rank_of(c), i + 1);
        }
    }

    #[test]
    fn election_needs_voters_of_matching_length() {
        assert!(Election::new(3, vec![]).is_err());
        let o = PreferenceOrder::new(vec![1, 0]).unwrap();
        assert_eq!(
            Election::new(3, vec![o]),
            Err(Error::Dimension { expected: 3, got: 2 })
        );
    }

    #[test]
    fn figure_one_pairwise_counts() {
        let e = fixtures::kemeny_example();
        let w = e.majority_matrix();
        assert_eq!(w.wins(0, 1), 2);
        assert_eq!(w.wins(1, 0), 1);
        assert_eq!(w.wins(0, 2), 2);
        assert_eq!(w.wins(0, 3), 3);
        for a in 0..4 {
            assert_eq!(w.wins(a, a), 0);
            for b in 0..4 {
                if a != b {
                    assert_eq!(w.wins(a, b) + w.wins(b, a), 3);
                }
            }
        }
        assert_eq!(condorcet_winner(&e), Some(0));
    }

    #[test]
    fn single_voter_and_reversed_pair() {
        let e = Election::from_rankings(3, &[&[1, 2, 0]]).unwrap();
        let w = e.majority_matrix();
        assert_eq!(w.wins(1, 0), 1);
        assert_eq!(w.wins(0, 1), 0);
        assert_eq!(condorcet_winner(&e), Some(1));

        let e = Election::from_rankings(3, &[&[0, 1, 2], &[2, 1, 0]]).unwrap();
        let w = e.majority_matrix();
        for a in 0..3 {
            for b in 0..3 {
                if a != b {
                    assert_eq!(w.wins(a, b), 1);
                }
            }
        }
        assert_eq!(condorcet_winner(&e), None);
    }

    #[test]
    fn figure_one_scores() {
        let e = fixtures::kemeny_example();
        let plur = scoring_winners(&e, &ScoringVector::plurality(4)).unwrap();
        assert_eq!(plur.scores, vec![2, 0, 1, 0]);
        assert_eq!(plur.winners, vec![0]);
        // a1: 3+3+1, a2: 2+2+2, a3: 1+0+3, a4: 0+1+0
        let borda = scoring_winners(&e, &ScoringVector::borda(4)).unwrap();
        assert_eq!(borda.scores, vec![7, 6, 4, 1]);
        assert_eq!(borda.winners, vec![0]);
        let zero = scoring_winners(&e, &ScoringVector::new(vec![0; 4]).unwrap()).unwrap();
        assert_eq!(zero.winners, vec![0, 1, 2, 3]);
        assert_eq!(
            scoring_winners(&e, &ScoringVector::borda(3)),
            Err(Error::Dimension { expected: 4, got: 3 })
        );
    }

    #[test]
    fn scoring_vector_must_be_nonincreasing() {
        assert!(ScoringVector::new(vec![0, 1]).is_err());
        assert!(ScoringVector::new(vec![2, 2, 0]).is_ok());
    }

    #[test]
    fn winner_modes() {
        let s = [3, 3, 1];
        assert!(WinnerMode::CoWinner.is_winner(&s, 0));
        assert!(!WinnerMode::Unique.is_winner(&s, 0));
        assert!(!WinnerMode::CoWinner.is_winner(&s, 2));
    }

    #[test]
    fn kendall_tau_examples() {
        let e = fixtures::kemeny_example();
        let v = e.voters();
        assert_eq!(kendall_tau(&v[0], &v[0]).unwrap(), 0);
        assert_eq!(kendall_tau(&v[0], &v[0].reversed()).unwrap(), 6);
        assert_eq!(kendall_tau(&v[0], &v[2]).unwrap(), 3);
        assert_eq!(kendall_tau(&v[0], &v[1]).unwrap(), 1);
        assert_eq!(kendall_tau(&v[1], &v[2]).unwrap(), 4);
        let short = PreferenceOrder::identity(3);
        assert!(kendall_tau(&v[0], &short).is_err());
    }

    #[test]
    fn restrict_alternatives_relabels() {
        let e = fixtures::kemeny_example();
        let r = e.restrict_alternatives(&[2, 0]).unwrap();
        assert_eq!(r.m(), 2);
        assert_eq!(r.voter(0).ranking(), &[1, 0]);
        assert_eq!(r.voter(2).ranking(), &[0, 1]);
        assert_eq!(r.label(0), "a3");
    }
}
